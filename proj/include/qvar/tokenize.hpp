#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace qvar {

/// Case-insensitive stopword membership. The default set is the bundled
/// 179-entry English list; any list can be loaded from a file with one
/// token per line ('#' starts a comment).
class Stopwords {
 public:
  Stopwords() = default;
  explicit Stopwords(std::vector<std::string> words);

  static const Stopwords& english();
  static Stopwords from_file(const std::filesystem::path& path);
  static Stopwords none() { return Stopwords(); }

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// Number of English stopwords in the bundled list (NLTK-equivalent).
extern const std::vector<std::string>& english_stopword_list();

/// Whitespace tokens of a query, lowercased, with parallel stopword flags.
struct TokenList {
  std::vector<std::string> tokens;
  std::vector<bool> is_stopword;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }

  /// Tokens joined by single spaces. tokenize(join()) == *this.
  std::string join() const;
};

/// Lowercase (ASCII) and split on whitespace runs. Throws EmptyQuery when
/// the text is whitespace-only.
TokenList tokenize(std::string_view text, const Stopwords& stopwords);

/// The token stream of tokenize() without stopword flags; used where the
/// flags are irrelevant (indexing, scoring).
std::vector<std::string> split_tokens(std::string_view text);

std::string to_lower_ascii(std::string_view s);
std::string_view trim(std::string_view s);

}  // namespace qvar
