#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace qvar {

/// Physical adjacency of the letters a-z on a US QWERTY keyboard: same-row
/// left/right neighbors plus the diagonal neighbors of the adjacent rows.
/// The map is symmetric and every letter has at least two neighbors.
class QwertyMap {
 public:
  /// Built from the three letter rows "qwertyuiop" / "asdfghjkl" / "zxcvbnm".
  static const QwertyMap& standard();

  /// Load from a file with lines `<letter> <neighbor letters>`, e.g. `q wa`.
  /// '#' starts a comment. Symmetry and the two-neighbor minimum are checked.
  static QwertyMap from_file(const std::filesystem::path& path);

  /// Neighbors of c in a fixed order (alphabetical). Empty for non-letters.
  const std::string& neighbors(char c) const;

  bool adjacent(char a, char b) const;

 private:
  QwertyMap() = default;
  void add_edge(char a, char b);
  void finalize();  // sort neighbor strings, validate invariants

  std::array<std::string, 26> adjacency_{};
  static const std::string kEmpty;
};

}  // namespace qvar
