#include "cox/hypothesis.hpp"

#include <algorithm>
#include <deque>

#include "cox/errors.hpp"
#include "cox/parabolic.hpp"

namespace cox {
namespace {

void require_infinite(const CoxeterSystem& system, GenSubset t,
                      const char* who) {
  if (classify_subset(system, t).finite) {
    throw PreconditionError(std::string(who) +
                            " requires an infinite parabolic subgroup");
  }
}

bool all_bonds_at_least_3(const CoxeterSystem& system, int s, GenSubset u) {
  for (int v : u.indices()) {
    if (!system.bond(s, v).at_least(3)) return false;
  }
  return true;
}

bool some_bond_infinite(const CoxeterSystem& system, int s, GenSubset u) {
  for (int v : u.indices()) {
    if (system.bond(s, v).is_inf()) return true;
  }
  return false;
}

}  // namespace

GenSubset theorem_generator_set(const CoxeterSystem& system, GenSubset t) {
  require_subset(system, t);
  require_infinite(system, t, "theorem_generator_set");
  const GenSubset t_tilde = essential_subset(system, t);
  const GenSubset outside = GenSubset::full(system.rank()) - t;
  GenSubset result = GenSubset::none();
  for (int s = 0; s < system.rank(); ++s) {
    for (int s0 : outside.indices()) {
      if (!system.bond(s, s0).is_inf()) continue;
      for (int tt : t_tilde.indices()) {
        if (system.bond(s0, tt).at_least(3)) {
          result = result.with(s);
          break;
        }
      }
      if (result.contains(s)) break;
    }
  }
  return result;
}

std::vector<CorollaryWitness> check_corollary(const CoxeterSystem& system,
                                              GenSubset t) {
  require_subset(system, t);
  require_infinite(system, t, "check_corollary");
  const GenSubset t_tilde = essential_subset(system, t);
  std::vector<CorollaryWitness> witnesses;
  for (GenSubset u : maximal_spherical_subsets(system)) {
    for (int s = 0; s < system.rank(); ++s) {
      if (!all_bonds_at_least_3(system, s, u)) continue;
      for (int u0 : u.indices()) {
        if (!system.bond(s, u0).is_inf()) continue;
        if (!t.contains(s) && t_tilde.contains(u0)) {
          witnesses.push_back({u, s, u0, 1, t_tilde});
        }
        if (!t.contains(u0) && t_tilde.contains(s)) {
          witnesses.push_back({u, s, u0, 2, t_tilde});
        }
      }
    }
  }
  return witnesses;
}

std::vector<QuasidenseCertificate> check_quasidense_certificate(
    const CoxeterSystem& system) {
  std::vector<QuasidenseCertificate> certificates;
  for (GenSubset u : maximal_spherical_subsets(system)) {
    for (int s0 = 0; s0 < system.rank(); ++s0) {
      if (all_bonds_at_least_3(system, s0, u) &&
          some_bond_infinite(system, s0, u)) {
        certificates.push_back({u, s0});
      }
    }
  }
  return certificates;
}

DensityProfile density_profile(
    const CoxeterSystem& system,
    const std::function<bool(const Element&)>& target,
    std::string target_description, int radius, int margin,
    const BallOptions& options) {
  if (margin < 0 || radius <= margin) {
    throw PreconditionError("density profile needs radius > margin >= 0");
  }
  const CayleyBall ball = enumerate_ball(system, radius, options);
  const int rank = system.rank();

  std::vector<int> dist(ball.size(), -1);
  std::deque<std::size_t> queue;
  std::size_t target_size = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (target(ball.at(i))) {
      dist[i] = 0;
      queue.push_back(i);
      ++target_size;
    }
  }
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (int s = 0; s < rank; ++s) {
      const std::int32_t j = ball.adjacency(i, s);
      if (j == CayleyBall::kOutside || dist[j] >= 0) continue;
      dist[j] = dist[i] + 1;
      queue.push_back(static_cast<std::size_t>(j));
    }
  }

  DensityProfile profile;
  profile.target_description = std::move(target_description);
  profile.radius = radius;
  profile.margin = margin;
  profile.ball_size = ball.size();
  profile.target_size = target_size;

  int running_max = -1;
  std::size_t running_witness = 0;
  std::size_t scanned = 0;
  for (int r = 0; r <= radius - margin; ++r) {
    const auto [begin, end] = ball.range_of_length(r);
    for (std::size_t i = std::max(scanned, begin); i < end; ++i) {
      if (dist[i] > running_max) {
        running_max = dist[i];
        running_witness = i;
      }
    }
    scanned = std::max(scanned, end);
    DensityRow row;
    row.r = r;
    if (target_size > 0) {
      row.max_distance = running_max;
      row.witness = ball.at(running_witness).word();
      row.boundary_reliable = running_max <= margin;
    }
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

bool check_w_invariance(const CoxeterSystem& system, GenSubset t) {
  require_subset(system, t);
  const GenSubset t_tilde = essential_subset(system, t);
  const GenSubset rest = GenSubset::full(system.rank()) - t_tilde;
  for (int tt : t_tilde.indices()) {
    for (int s : rest.indices()) {
      if (system.bond(tt, s) != Bond::finite(2)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> verify_chain_transport(
    const CoxeterSystem& system, GenSubset t, const std::vector<int>& chain,
    int radius, const BallOptions& options) {
  require_subset(system, t);
  if (chain.empty()) {
    throw PreconditionError("chain transport needs a nonempty chain");
  }
  GenSubset chain_set = GenSubset::none();
  for (int c : chain) {
    if (c < 0 || c >= system.rank()) {
      throw PreconditionError("chain generator out of range");
    }
    if (chain_set.contains(c)) {
      throw PreconditionError("chain generators must be distinct");
    }
    chain_set = chain_set.with(c);
  }
  if (!(chain_set & t).empty()) {
    throw PreconditionError("chain must avoid the target descent set");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!system.bond(chain[i], chain[i + 1]).at_least(3)) {
      throw PreconditionError("consecutive chain generators must not commute");
    }
  }
  for (int tt : t.indices()) {
    if (!system.bond(chain.back(), tt).at_least(3)) {
      throw PreconditionError(
          "the final chain generator must not commute with the descent set");
    }
  }

  const CayleyBall ball = enumerate_ball(system, radius, options);
  const GenSubset head = GenSubset::single(chain.front());
  std::vector<std::vector<int>> violators;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Element& w = ball.at(i);
    if (!(support(w) & chain_set).empty()) continue;
    if (descent_set(w, Side::Right) != t) continue;
    Element x = w;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      x = mul_gen(x, *it, Side::Right);
    }
    if (descent_set(x, Side::Right) != head) {
      violators.push_back(w.word());
    }
  }
  return violators;
}

std::vector<DescentExtensionViolation> verify_descent_extension(
    const CoxeterSystem& system, int radius, const BallOptions& options) {
  const CayleyBall ball = enumerate_ball(system, radius, options);
  std::vector<DescentExtensionViolation> violators;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Element& w = ball.at(i);
    const GenSubset descents = descent_set(w, Side::Right);
    for (int s0 = 0; s0 < system.rank(); ++s0) {
      if (!all_bonds_at_least_3(system, s0, descents)) continue;
      if (!some_bond_infinite(system, s0, descents)) continue;
      const Element x = mul_gen(w, s0, Side::Right);
      if (descent_set(x, Side::Right) != GenSubset::single(s0)) {
        violators.push_back({w.word(), s0});
      }
    }
  }
  return violators;
}

CommutingSetReport estimate_commuting_set(const CoxeterSystem& system,
                                          GenSubset t, int radius,
                                          int stab_window,
                                          const BallOptions& options) {
  require_subset(system, t);
  if (stab_window < 1 || radius <= stab_window) {
    throw PreconditionError(
        "commuting set estimate needs radius > stab_window >= 1");
  }
  const CayleyBall ball = enumerate_ball(system, radius, options);

  CommutingSetReport report;
  report.t_tilde = essential_subset(system, t);
  report.radius = radius;
  report.stab_window = stab_window;
  report.u_est = GenSubset::none();

  const GenSubset outside = GenSubset::full(system.rank()) - t;
  for (int s : outside.indices()) {
    CommutingSetReport::PerGenerator row;
    row.s = s;
    row.counts.assign(static_cast<std::size_t>(radius), 0);
    const GenSubset singleton = GenSubset::single(s);
    for (std::size_t i = 0; i < ball.size(); ++i) {
      const Element& w = ball.at(i);
      if (w.length() == 0) continue;
      if (descent_set(w, Side::Right) != singleton) continue;
      if (!support(mul_gen(w, s, Side::Right)).subset_of(t)) continue;
      for (int r = w.length(); r <= radius; ++r) {
        ++row.counts[static_cast<std::size_t>(r - 1)];
      }
    }
    row.stabilized =
        row.counts[static_cast<std::size_t>(radius - 1)] ==
        row.counts[static_cast<std::size_t>(radius - 1 - stab_window)];
    if (row.stabilized) report.u_est = report.u_est.with(s);
    report.per_generator.push_back(std::move(row));
  }

  for (int tt : report.t_tilde.indices()) {
    for (int u : report.u_est.indices()) {
      if (system.bond(tt, u) != Bond::finite(2)) {
        report.discrepancies.push_back({tt, u});
      }
    }
  }
  return report;
}

IntersectionGrowth intersection_growth(const CoxeterSystem& system,
                                       GenSubset t, int s, int radius,
                                       const BallOptions& options) {
  require_subset(system, t);
  if (s < 0 || s >= system.rank() || t.contains(s)) {
    throw PreconditionError("the probe generator must lie outside the subset");
  }
  if (radius < 3) {
    throw PreconditionError("growth table needs radius >= 3");
  }
  bool touches_essential = false;
  for (int tt : essential_subset(system, t).indices()) {
    if (system.bond(s, tt).at_least(3)) touches_essential = true;
  }
  if (!touches_essential) {
    throw PreconditionError(
        "the probe generator must not commute with all essential generators");
  }

  // Enumerate inside (W_T, T) and lift the words; the parabolic embeds
  // isometrically, so lengths carry over.
  const CayleyBall sub_ball = enumerate_ball(restrict(system, t), radius, options);
  const std::vector<int> back = t.indices();
  const GenSubset singleton = GenSubset::single(s);

  IntersectionGrowth growth;
  growth.t = t;
  growth.s = s;
  growth.radius = radius;
  growth.cumulative.assign(static_cast<std::size_t>(radius) + 1, 0);
  for (std::size_t i = 0; i < sub_ball.size(); ++i) {
    std::vector<int> word;
    word.reserve(sub_ball.at(i).word().size());
    for (int letter : sub_ball.at(i).word()) word.push_back(back[letter]);
    const Element x = element_from_word(system, word);
    if (descent_set(mul_gen(x, s, Side::Right), Side::Right) != singleton) {
      continue;
    }
    for (int r = x.length(); r <= radius; ++r) {
      ++growth.cumulative[static_cast<std::size_t>(r)];
    }
  }
  growth.checkpoints = {radius / 3, 2 * radius / 3, radius};
  growth.positive = growth.cumulative.back() > 0;
  growth.strictly_increasing =
      growth.cumulative[growth.checkpoints[0]] <
          growth.cumulative[growth.checkpoints[1]] &&
      growth.cumulative[growth.checkpoints[1]] <
          growth.cumulative[growth.checkpoints[2]];
  return growth;
}

IndexCountReport verify_index_count(const CoxeterSystem& system, GenSubset t,
                                    const BallOptions& options) {
  require_subset(system, t);
  if (!classify_subset(system, GenSubset::full(system.rank())).finite) {
    throw PreconditionError("exact index counting needs a finite group");
  }
  const CayleyBall ball = enumerate_group(system, options);

  IndexCountReport report;
  report.group_order = Order::of(ball.size());
  report.subgroup_order = classify_subset(system, t).total_order;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (is_minimal_coset_rep(ball.at(i), t)) ++report.min_rep_count;
  }
  report.formula_index = index(system, t);
  report.consistent =
      Order::of(report.min_rep_count) == report.formula_index &&
      Order::of(report.min_rep_count) * report.subgroup_order ==
          report.group_order;
  return report;
}

}  // namespace cox
