#pragma once

#include <stdexcept>
#include <string>

namespace qvar {

/// Malformed content in an on-disk file. Carries the 1-based line number
/// when the failing line is known (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line = 0)
      : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ")"
                                    : message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Query text was empty or whitespace-only.
class EmptyQuery : public std::invalid_argument {
 public:
  explicit EmptyQuery(const std::string& qid)
      : std::invalid_argument("query text is empty" + (qid.empty() ? "" : " (qid " + qid + ")")) {}
};

/// Why a generator could not produce a variation for a query.
enum class GenFailure {
  NoEligibleTerm,
  AllStopwords,
  InsufficientTokens,
  AdapterUnavailable,
  AdapterMalformedResponse,
  ResourceMissing,
};

std::string to_string(GenFailure f);

/// Expected domain-level generation failure; generate_all records these
/// instead of propagating them.
class GeneratorError : public std::runtime_error {
 public:
  GeneratorError(GenFailure code, std::string detail = "")
      : std::runtime_error(detail.empty() ? to_string(code)
                                          : to_string(code) + ": " + detail),
        code_(code) {}
  GenFailure code() const { return code_; }

 private:
  GenFailure code_;
};

/// Re-ranker adapter returned no response or an incomplete batch.
class AdapterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qvar
