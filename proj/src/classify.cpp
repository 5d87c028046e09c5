#include "cox/classify.hpp"

#include <algorithm>
#include <array>

#include "cox/errors.hpp"

namespace cox {
namespace {

Order factorial(int n) {
  Order result = Order::of(1);
  for (int k = 2; k <= n; ++k) result = result * Order::of(k);
  return result;
}

Order power_of_two(int n) {
  Order result = Order::of(1);
  for (int k = 0; k < n; ++k) result = result * Order::of(2);
  return result;
}

Order order_of(ComponentType type) {
  switch (type.family) {
    case TypeFamily::A:
      return factorial(type.n + 1);
    case TypeFamily::B:
      return power_of_two(type.n) * factorial(type.n);
    case TypeFamily::D:
      return power_of_two(type.n - 1) * factorial(type.n);
    case TypeFamily::E6:
      return Order::of(51840);
    case TypeFamily::E7:
      return Order::of(2903040);
    case TypeFamily::E8:
      return Order::of(696729600);
    case TypeFamily::F4:
      return Order::of(1152);
    case TypeFamily::H3:
      return Order::of(120);
    case TypeFamily::H4:
      return Order::of(14400);
    case TypeFamily::I2:
      return Order::of(2) * Order::of(type.n);
    case TypeFamily::Infinite:
      return Order::inf();
  }
  throw PreconditionError("unreachable component family");
}

constexpr ComponentType kInfinite{TypeFamily::Infinite, 0};

/// Matches one connected component (given in the ambient index space)
/// against the finite-type diagrams.
ComponentType match_component(const CoxeterSystem& system, GenSubset comp) {
  const std::vector<int> verts = comp.indices();
  const int k = static_cast<int>(verts.size());

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (system.bond(verts[i], verts[j]).is_inf()) return kInfinite;
    }
  }
  if (k == 1) return {TypeFamily::A, 1};
  if (k == 2) {
    return {TypeFamily::I2,
            static_cast<int>(system.bond(verts[0], verts[1]).value())};
  }

  // Rank >= 3: the diagram must be a tree with at most one branch point
  // and at most one edge labelled above 3.
  int edge_count = 0;
  std::vector<std::vector<int>> adj(k);  // local indices
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (system.bond(verts[i], verts[j]).at_least(3)) {
        ++edge_count;
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  if (edge_count != k - 1) return kInfinite;  // connected, so a cycle

  int branch = -1;
  for (int i = 0; i < k; ++i) {
    if (adj[i].size() >= 4) return kInfinite;
    if (adj[i].size() == 3) {
      if (branch >= 0) return kInfinite;
      branch = i;
    }
  }

  if (branch >= 0) {
    // Simply laced with arms (1,1,n-3) -> D_n, (1,2,2|3|4) -> E_{6|7|8}.
    for (int i = 0; i < k; ++i) {
      for (int j : adj[i]) {
        if (system.bond(verts[i], verts[j]).at_least(4)) return kInfinite;
      }
    }
    std::array<int, 3> arms{};
    for (int a = 0; a < 3; ++a) {
      int prev = branch;
      int cur = adj[branch][a];
      int len = 1;
      while (adj[cur].size() == 2) {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      if (adj[cur].size() != 1) return kInfinite;  // arm hit the branch again
      arms[a] = len;
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) return kInfinite;
    if (arms[1] == 1) return {TypeFamily::D, k};
    if (arms[1] == 2 && arms[2] == 2) return {TypeFamily::E6, 6};
    if (arms[1] == 2 && arms[2] == 3) return {TypeFamily::E7, 7};
    if (arms[1] == 2 && arms[2] == 4) return {TypeFamily::E8, 8};
    return kInfinite;
  }

  // A path: walk it from an endpoint and inspect the edge labels.
  int start = 0;
  while (adj[start].size() != 1) ++start;
  std::vector<int> labels;  // bond along consecutive path edges
  int prev = -1;
  int cur = start;
  for (int step = 0; step + 1 < k; ++step) {
    int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    labels.push_back(
        static_cast<int>(system.bond(verts[cur], verts[next]).value()));
    prev = cur;
    cur = next;
  }

  int special = -1;  // index of the unique edge labelled above 3
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 3) continue;
    if (special >= 0) return kInfinite;
    special = static_cast<int>(i);
  }
  if (special < 0) return {TypeFamily::A, k};
  const int m = labels[special];
  const bool terminal = special == 0 || special == static_cast<int>(labels.size()) - 1;
  if (m == 4) {
    if (terminal) return {TypeFamily::B, k};
    if (k == 4) return {TypeFamily::F4, 4};  // the 4 sits on the middle edge
    return kInfinite;
  }
  if (m == 5 && terminal) {
    if (k == 3) return {TypeFamily::H3, 3};
    if (k == 4) return {TypeFamily::H4, 4};
  }
  return kInfinite;
}

}  // namespace

std::string ComponentType::str() const {
  switch (family) {
    case TypeFamily::A:
      return "A" + std::to_string(n);
    case TypeFamily::B:
      return "B" + std::to_string(n);
    case TypeFamily::D:
      return "D" + std::to_string(n);
    case TypeFamily::E6:
      return "E6";
    case TypeFamily::E7:
      return "E7";
    case TypeFamily::E8:
      return "E8";
    case TypeFamily::F4:
      return "F4";
    case TypeFamily::H3:
      return "H3";
    case TypeFamily::H4:
      return "H4";
    case TypeFamily::I2:
      return "I2(" + std::to_string(n) + ")";
    case TypeFamily::Infinite:
      return "infinite";
  }
  return "infinite";
}

FinitenessVerdict classify_subset(const CoxeterSystem& system, GenSubset t) {
  require_subset(system, t);
  const CoxeterSystem sub = restrict(system, t);
  const std::vector<int> back = t.indices();  // sub index -> ambient index

  FinitenessVerdict verdict;
  verdict.finite = true;
  for (GenSubset local : irreducible_components(sub)) {
    GenSubset ambient = GenSubset::none();
    for (int i : local.indices()) ambient = ambient.with(back[i]);
    ComponentType type = match_component(system, ambient);
    Order order = order_of(type);
    verdict.finite = verdict.finite && !order.is_inf();
    verdict.components.push_back({ambient, type, order});
  }
  verdict.total_order = Order::of(1);
  for (const ClassifiedComponent& c : verdict.components) {
    verdict.total_order = verdict.total_order * c.order;
  }
  return verdict;
}

bool is_spherical(const CoxeterSystem& system, GenSubset t) {
  return classify_subset(system, t).finite;
}

std::vector<GenSubset> maximal_spherical_subsets(const CoxeterSystem& system) {
  const int n = system.rank();
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<char> spherical(limit);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    spherical[mask] =
        static_cast<char>(is_spherical(system, GenSubset::from_mask(mask)));
  }
  std::vector<GenSubset> result;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!spherical[mask]) continue;
    bool maximal = true;
    for (int s = 0; s < n && maximal; ++s) {
      if (mask & (std::uint32_t{1} << s)) continue;
      maximal = !spherical[mask | (std::uint32_t{1} << s)];
    }
    if (maximal) result.push_back(GenSubset::from_mask(mask));
  }
  return result;
}

GenSubset essential_subset(const CoxeterSystem& system) {
  GenSubset essential = GenSubset::none();
  for (GenSubset comp : irreducible_components(system)) {
    if (!is_spherical(system, comp)) essential = essential | comp;
  }
  return essential;
}

GenSubset essential_subset(const CoxeterSystem& system, GenSubset t) {
  require_subset(system, t);
  const CoxeterSystem sub = restrict(system, t);
  const std::vector<int> back = t.indices();
  GenSubset ambient = GenSubset::none();
  for (int i : essential_subset(sub).indices()) {
    ambient = ambient.with(back[i]);
  }
  return ambient;
}

}  // namespace cox
