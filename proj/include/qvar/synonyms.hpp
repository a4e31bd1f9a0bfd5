#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qvar {

/// Word -> ordered synonym list, loaded from a JSON object of string arrays.
/// Entries whose first synonym equals the headword are rejected on load.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;
  explicit SynonymLexicon(std::map<std::string, std::vector<std::string>> entries);

  static SynonymLexicon from_file(const std::filesystem::path& path);

  /// First synonym for word, or empty view when there is none.
  std::string_view first_synonym(std::string_view word) const;
  bool has_entry(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

}  // namespace qvar
