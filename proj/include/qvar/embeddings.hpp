#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qvar {

/// Word vectors with cosine nearest-neighbor lookup. File format: first line
/// `<vocab_size> <dim>`, then one `word v1 v2 ... vdim` line per word.
class EmbeddingStore {
 public:
  static EmbeddingStore from_file(const std::filesystem::path& path);
  EmbeddingStore(std::vector<std::string> vocabulary, std::vector<std::vector<double>> vectors);

  bool contains(std::string_view word) const;
  std::size_t size() const { return vocabulary_.size(); }
  std::size_t dim() const { return dim_; }

  /// Word with the highest cosine similarity to `word`, excluding `word`
  /// itself. Ties break toward the lower vocabulary index. Empty when the
  /// word is unknown or has no neighbor to offer.
  std::optional<std::string> nearest_neighbor(std::string_view word) const;

  const std::vector<std::string>& vocabulary() const { return vocabulary_; }

 private:
  std::vector<std::string> vocabulary_;
  std::vector<std::vector<double>> vectors_;  // unit-normalized on load
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t dim_ = 0;
};

}  // namespace qvar
