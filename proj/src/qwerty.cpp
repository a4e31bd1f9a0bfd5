#include "qvar/qwerty.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "qvar/errors.hpp"
#include "qvar/tokenize.hpp"

namespace qvar {

const std::string QwertyMap::kEmpty;

namespace {

bool is_letter(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

void QwertyMap::add_edge(char a, char b) {
  auto& na = adjacency_[a - 'a'];
  auto& nb = adjacency_[b - 'a'];
  if (na.find(b) == std::string::npos) na.push_back(b);
  if (nb.find(a) == std::string::npos) nb.push_back(a);
}

void QwertyMap::finalize() {
  for (int i = 0; i < 26; ++i) {
    auto& n = adjacency_[i];
    std::sort(n.begin(), n.end());
    if (n.size() < 2) {
      throw std::logic_error(std::string("qwerty map: letter '") +
                             static_cast<char>('a' + i) + "' has fewer than 2 neighbors");
    }
    for (char c : n) {
      if (!adjacent(c, static_cast<char>('a' + i))) {
        throw std::logic_error("qwerty map is not symmetric");
      }
    }
  }
}

const QwertyMap& QwertyMap::standard() {
  static const QwertyMap instance = [] {
    QwertyMap m;
    const std::string rows[3] = {"qwertyuiop", "asdfghjkl", "zxcvbnm"};
    for (const auto& row : rows) {
      for (std::size_t i = 0; i + 1 < row.size(); ++i) m.add_edge(row[i], row[i + 1]);
    }
    // Each lower row sits half a key to the right of the one above, so
    // upper[i] touches lower[i-1] and lower[i].
    for (int r = 0; r < 2; ++r) {
      const std::string& upper = rows[r];
      const std::string& lower = rows[r + 1];
      for (std::size_t i = 0; i < upper.size(); ++i) {
        if (i >= 1 && i - 1 < lower.size()) m.add_edge(upper[i], lower[i - 1]);
        if (i < lower.size()) m.add_edge(upper[i], lower[i]);
      }
    }
    m.finalize();
    return m;
  }();
  return instance;
}

QwertyMap QwertyMap::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open qwerty map file: " + path.string());
  QwertyMap m;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto fields = split_tokens(line);
    if (fields.empty()) continue;
    if (fields.size() != 2 || fields[0].size() != 1 || !is_letter(fields[0][0])) {
      throw ParseError("qwerty map line must be `<letter> <neighbors>`", lineno);
    }
    for (char c : fields[1]) {
      if (!is_letter(c)) throw ParseError("qwerty neighbor is not a letter", lineno);
      m.add_edge(fields[0][0], c);
    }
  }
  m.finalize();
  return m;
}

const std::string& QwertyMap::neighbors(char c) const {
  if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  if (!is_letter(c)) return kEmpty;
  return adjacency_[c - 'a'];
}

bool QwertyMap::adjacent(char a, char b) const {
  const std::string& n = neighbors(a);
  if (b >= 'A' && b <= 'Z') b = static_cast<char>(b - 'A' + 'a');
  return n.find(b) != std::string::npos;
}

}  // namespace qvar
