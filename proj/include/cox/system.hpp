#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cox/matrix.hpp"
#include "cox/subset.hpp"

namespace cox {

/// Sign threshold for root coordinate tests. Root coordinates at desk
/// scale sit orders of magnitude away from this; an ambiguous sign is an
/// error, never a guess.
inline constexpr double kDefaultSignTolerance = 1e-8;

/// A Coxeter system: named generators plus a validated Coxeter matrix.
/// Immutable after construction and safe for unrestricted concurrent
/// reads. Generator identity is the index; labels are presentation-only.
class CoxeterSystem {
 public:
  /// Validates the matrix and the labels; throws ValidationError when a
  /// presentation condition fails, PreconditionError on label/rank
  /// mismatches.
  static CoxeterSystem create(std::vector<std::string> names,
                              CoxeterMatrix matrix,
                              double sign_tolerance = kDefaultSignTolerance);

  int rank() const { return matrix_.rank(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  std::optional<int> index_of(std::string_view label) const;

  const CoxeterMatrix& matrix() const { return matrix_; }
  Bond bond(int i, int j) const { return matrix_.at(i, j); }

  /// Gram form of the reflection representation: B(s,t) = -cos(pi/m(s,t)),
  /// diagonal 1, and -1 for infinite bonds. Cached at construction.
  const Eigen::MatrixXd& gram() const { return gram_; }

  double sign_tolerance() const { return sign_tolerance_; }

  /// Structural identity: same labels and same matrix. The tolerance is
  /// a numeric policy, not part of the presentation.
  bool same_presentation(const CoxeterSystem& other) const {
    return names_ == other.names_ && matrix_ == other.matrix_;
  }

 private:
  CoxeterSystem(std::vector<std::string> names, CoxeterMatrix matrix,
                double sign_tolerance);

  std::vector<std::string> names_;
  CoxeterMatrix matrix_;
  Eigen::MatrixXd gram_;
  double sign_tolerance_;
};

// ---------------------------------------------------------------------
// Diagram files
//
// Line-oriented UTF-8 text. '#' starts a comment, blank lines are
// skipped. The first content line is exactly one
//     generators <label> <label> ...
// followed by any number of
//     m <label> <label> <value>
// with <value> an integer >= 2 or the literal 'inf', at most one line
// per unordered pair. Unspecified pairs default to 2.
// ---------------------------------------------------------------------

/// Syntax layer only: the labels and the raw table, unvalidated.
struct Diagram {
  std::vector<std::string> names;
  CoxeterMatrix matrix;
};

/// Throws ParseError with the offending line number.
Diagram parse_diagram(std::string_view text);

/// parse_diagram + validation + construction.
CoxeterSystem parse_system(std::string_view text,
                           double sign_tolerance = kDefaultSignTolerance);

/// Writes the diagram format back, pairs in index order, bonds of 2
/// omitted. parse_system(serialize(s)) reproduces s field by field.
std::string serialize(const CoxeterSystem& system);

// ---------------------------------------------------------------------
// Structure
// ---------------------------------------------------------------------

/// Throws PreconditionError when t has bits at or above the rank.
void require_subset(const CoxeterSystem& system, GenSubset t);

/// The parabolic subsystem (W_T, T): submatrix on t, names preserved,
/// generators in index order. The empty t yields the rank-0 system.
CoxeterSystem restrict(const CoxeterSystem& system, GenSubset t);

/// Connected components of the graph on S with edges where m(s,t) >= 3
/// or infinite, listed by increasing least member. The output partitions
/// S, and generators in distinct parts commute.
std::vector<GenSubset> irreducible_components(const CoxeterSystem& system);

/// Order of the product st: m(s,t) for s != t, and 1 for s = t.
Bond product_order(const CoxeterSystem& system, int s, int t);

// ---------------------------------------------------------------------
// Presentation helpers
// ---------------------------------------------------------------------

/// "{s1,s4}" with the system's labels; "{}" when empty.
std::string format_subset(const CoxeterSystem& system, GenSubset t);

/// Parses a comma-separated label list into a subset. Throws
/// PreconditionError on unknown labels.
GenSubset subset_from_labels(const CoxeterSystem& system,
                             std::string_view comma_list);

/// FNV-1a over the canonical serialization.
std::uint64_t digest(const CoxeterSystem& system);

}  // namespace cox
