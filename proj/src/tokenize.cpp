#include "qvar/tokenize.hpp"

#include <cctype>
#include <fstream>

#include "qvar/errors.hpp"

namespace qvar {

namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Stopwords::Stopwords(std::vector<std::string> words) {
  for (auto& w : words) words_.insert(to_lower_ascii(w));
}

const Stopwords& Stopwords::english() {
  static const Stopwords instance(english_stopword_list());
  return instance;
}

Stopwords Stopwords::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open stopword file: " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string_view w = trim(line);
    if (!w.empty()) words.emplace_back(w);
  }
  return Stopwords(std::move(words));
}

bool Stopwords::contains(std::string_view word) const {
  return words_.count(to_lower_ascii(word)) > 0;
}

std::string TokenList::join() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (is_space(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) {
        tokens.push_back(std::move(cur));
        cur.clear();
      }
    } else {
      char c = ch;
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

TokenList tokenize(std::string_view text, const Stopwords& stopwords) {
  TokenList out;
  out.tokens = split_tokens(text);
  if (out.tokens.empty()) throw EmptyQuery("");
  out.is_stopword.reserve(out.tokens.size());
  for (const auto& t : out.tokens) out.is_stopword.push_back(stopwords.contains(t));
  return out;
}

}  // namespace qvar
