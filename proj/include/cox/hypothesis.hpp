#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cox/ball.hpp"
#include "cox/classify.hpp"
#include "cox/element.hpp"
#include "cox/subset.hpp"
#include "cox/system.hpp"

namespace cox {

// ---------------------------------------------------------------------
// Density certificates
// ---------------------------------------------------------------------

/// The generators s for which some s0 outside t has an infinite bond to
/// s and a noncommuting bond into the essential part of t. The union of
/// the singleton descent classes over this set is the candidate
/// quasi-dense set for t. Requires W_T infinite.
GenSubset theorem_generator_set(const CoxeterSystem& system, GenSubset t);

/// One certified triple (U, s, u0): U maximal spherical, every bond
/// from s into U at least 3, the bond to u0 infinite, plus the side
/// condition that places it relative to t and the essential part of t.
struct CorollaryWitness {
  GenSubset u;
  int s = -1;
  int u0 = -1;
  int condition = 0;  // 1: s outside t, u0 essential in t; 2: u0 outside t, s essential in t
  GenSubset t_tilde;
};

/// All witnesses, ordered by (U mask, s, u0, condition). Empty means
/// inconclusive, not refuted. Requires W_T infinite.
std::vector<CorollaryWitness> check_corollary(const CoxeterSystem& system,
                                              GenSubset t);

/// A pair certifying that the singleton descent class of s0 is
/// quasi-dense: U maximal spherical, all bonds from s0 into U at least
/// 3, at least one infinite.
struct QuasidenseCertificate {
  GenSubset u;
  int s0 = -1;
};

std::vector<QuasidenseCertificate> check_quasidense_certificate(
    const CoxeterSystem& system);

// ---------------------------------------------------------------------
// Density profiles
// ---------------------------------------------------------------------

struct DensityRow {
  int r = 0;
  /// Max over the radius-r ball of the graph distance to the target;
  /// empty when no target element lies in the outer ball.
  std::optional<int> max_distance;
  /// Normal form of the first attaining element in ball order.
  std::vector<int> witness;
  /// Distances above the margin may be cut off by the outer boundary:
  /// the true nearest target element might lie outside the enumerated
  /// ball. Flagged, never silently trusted.
  bool boundary_reliable = false;
};

struct DensityProfile {
  std::string target_description;
  int radius = 0;  // outer radius R
  int margin = 0;  // delta
  std::size_t ball_size = 0;
  std::size_t target_size = 0;  // |target| inside the outer ball
  std::vector<DensityRow> rows;  // r = 0 .. R - margin
};

/// Enumerates ball(R), marks the target set, and runs a multi-source BFS
/// over the ball's adjacency graph. Requires R > margin >= 0.
DensityProfile density_profile(
    const CoxeterSystem& system,
    const std::function<bool(const Element&)>& target,
    std::string target_description, int radius, int margin,
    const BallOptions& options = {});

// ---------------------------------------------------------------------
// Structure checks
// ---------------------------------------------------------------------

/// True when every essential generator of (W_T, T) commutes with every
/// generator outside that essential part, i.e. the group splits as the
/// corresponding direct product.
bool check_w_invariance(const CoxeterSystem& system, GenSubset t);

// ---------------------------------------------------------------------
// Exhaustive ball-level verifiers. Counterexample lists, not booleans:
// a failure should be immediately actionable.
// ---------------------------------------------------------------------

/// Transport of the descent class along a noncommuting chain: for every
/// w in ball(radius) supported away from the chain with right descent
/// set exactly t, the product w*c_n*...*c_1 must have descent set
/// {c_1}. Returns the normal forms of any violators (expected empty).
/// Preconditions: chain nonempty, distinct, disjoint from t, consecutive
/// bonds >= 3, and the last chain generator noncommuting with all of t.
std::vector<std::vector<int>> verify_chain_transport(
    const CoxeterSystem& system, GenSubset t, const std::vector<int>& chain,
    int radius, const BallOptions& options = {});

struct DescentExtensionViolation {
  std::vector<int> nf;
  int s0 = -1;
};

/// For every w in the ball and s0 whose bonds into the descent set of w
/// are all >= 3 with at least one infinite, w*s0 must have descent set
/// exactly {s0}. Returns violators (expected empty).
std::vector<DescentExtensionViolation> verify_descent_extension(
    const CoxeterSystem& system, int radius, const BallOptions& options = {});

/// Growth evidence for the commuting complement of t: for each s outside
/// t, counts elements w in growing balls whose descent set is exactly
/// {s} and whose product with s lands in W_T. Generators whose count
/// stabilizes over the trailing window form u_est; any noncommuting pair
/// between u_est and the essential part of t is reported as a
/// discrepancy (radius too small), never silently accepted.
struct CommutingSetReport {
  GenSubset u_est;
  GenSubset t_tilde;
  int radius = 0;
  int stab_window = 0;

  struct PerGenerator {
    int s = -1;
    std::vector<std::uint64_t> counts;  // cumulative, radius 1..R
    bool stabilized = false;
  };
  std::vector<PerGenerator> per_generator;  // s in S - t, ascending

  struct Discrepancy {
    int t = -1;  // essential generator of t
    int u = -1;  // member of u_est with bond != 2
  };
  std::vector<Discrepancy> discrepancies;
};

CommutingSetReport estimate_commuting_set(const CoxeterSystem& system,
                                          GenSubset t, int radius,
                                          int stab_window = 3,
                                          const BallOptions& options = {});

/// Cumulative sizes of {x in W_T : descent set of x*s is exactly {s}}
/// by radius, with strict-increase checkpoints at R/3, 2R/3, R.
/// Unbounded growth is the predicted behavior; the table is evidence.
struct IntersectionGrowth {
  GenSubset t;
  int s = -1;
  int radius = 0;
  std::vector<std::uint64_t> cumulative;  // index r, r = 0..R
  std::array<int, 3> checkpoints{};       // R/3, 2R/3, R
  bool positive = false;
  bool strictly_increasing = false;
};

/// Preconditions: s outside t and at least one essential generator of t
/// with bond(s, t) >= 3.
IntersectionGrowth intersection_growth(const CoxeterSystem& system,
                                       GenSubset t, int s, int radius,
                                       const BallOptions& options = {});

/// Exact count check on a finite group: the number of minimal coset
/// representatives times |W_T| must equal |W| and match the index
/// formula. Requires W finite.
struct IndexCountReport {
  Order group_order = Order::of(1);
  Order subgroup_order = Order::of(1);
  std::uint64_t min_rep_count = 0;
  Order formula_index = Order::of(1);
  bool consistent = false;
};

IndexCountReport verify_index_count(const CoxeterSystem& system, GenSubset t,
                                    const BallOptions& options = {});

}  // namespace cox
