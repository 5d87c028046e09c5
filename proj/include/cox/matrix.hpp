#pragma once

#include <string>
#include <vector>

#include "cox/bond.hpp"

namespace cox {

/// Symmetric table m(s,t) on generator pairs. The holder admits
/// arbitrary entries; validate() reports violations of the presentation
/// conditions as data. Fresh matrices start at the identity presentation
/// (diagonal 1, off-diagonal 2).
class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(int rank);

  int rank() const { return rank_; }

  Bond at(int i, int j) const;

  /// Sets one cell without mirroring, so asymmetric tables can be built
  /// and reported by validate().
  void set_entry(int i, int j, Bond b);

  /// Sets both (i,j) and (j,i).
  void set_bond(int i, int j, Bond b);

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  void check_index(int i, int j) const;

  int rank_;
  std::vector<Bond> entries_;  // row-major rank x rank
};

/// One violated presentation condition.
struct Violation {
  enum class Kind {
    Symmetry,     // entries[i][j] != entries[j][i]
    Diagonal,     // entries[i][i] != 1
    OffDiagonal,  // entries[i][j] < 2 for i != j
  };

  Kind kind;
  int i;
  int j;  // equals i for Diagonal

  std::string message() const;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks the three presentation conditions. Violations are data, not
/// failures: the empty list means the table is a Coxeter matrix.
/// Symmetry violations are reported once per unordered pair.
std::vector<Violation> validate(const CoxeterMatrix& m);

}  // namespace cox
