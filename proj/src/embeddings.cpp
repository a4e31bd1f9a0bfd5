#include "qvar/embeddings.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qvar/errors.hpp"

namespace qvar {

EmbeddingStore::EmbeddingStore(std::vector<std::string> vocabulary,
                               std::vector<std::vector<double>> vectors)
    : vocabulary_(std::move(vocabulary)), vectors_(std::move(vectors)) {
  if (vocabulary_.size() != vectors_.size()) {
    throw std::invalid_argument("embedding store: vocabulary/vector count mismatch");
  }
  if (!vectors_.empty()) dim_ = vectors_.front().size();
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    if (vectors_[i].size() != dim_) {
      throw std::invalid_argument("embedding store: inconsistent vector dimension");
    }
    if (!index_.emplace(vocabulary_[i], i).second) {
      throw std::invalid_argument("embedding store: duplicate word " + vocabulary_[i]);
    }
    // unit-normalize so cosine similarity is a plain dot product
    double norm = 0.0;
    for (double v : vectors_[i]) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
      for (double& v : vectors_[i]) v /= norm;
    }
  }
}

EmbeddingStore EmbeddingStore::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open embedding file: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw ParseError("embedding file is empty");
  std::istringstream header(line);
  std::size_t vocab_size = 0, dim = 0;
  if (!(header >> vocab_size >> dim) || dim == 0) {
    throw ParseError("embedding header must be `<vocab_size> <dim>`", 1);
  }
  std::vector<std::string> vocab;
  std::vector<std::vector<double>> vectors;
  vocab.reserve(vocab_size);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string word;
    row >> word;
    std::vector<double> vec(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      if (!(row >> vec[d])) throw ParseError("embedding row has fewer than dim values", lineno);
    }
    vocab.push_back(std::move(word));
    vectors.push_back(std::move(vec));
  }
  if (vocab.size() != vocab_size) {
    throw ParseError("embedding file declares " + std::to_string(vocab_size) + " words, found " +
                     std::to_string(vocab.size()));
  }
  return EmbeddingStore(std::move(vocab), std::move(vectors));
}

bool EmbeddingStore::contains(std::string_view word) const {
  return index_.count(std::string(word)) > 0;
}

std::optional<std::string> EmbeddingStore::nearest_neighbor(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end() || vocabulary_.size() < 2) return std::nullopt;
  const auto& query = vectors_[it->second];
  double best = -2.0;
  std::size_t best_i = vocabulary_.size();
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    if (i == it->second) continue;
    double dot = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) dot += query[d] * vectors_[i][d];
    if (dot > best) {  // strict: ties keep the lower index
      best = dot;
      best_i = i;
    }
  }
  if (best_i == vocabulary_.size()) return std::nullopt;
  return vocabulary_[best_i];
}

}  // namespace qvar
