#include "cox/parabolic.hpp"

#include <algorithm>

#include "cox/classify.hpp"
#include "cox/errors.hpp"

namespace cox {

GenSubset support(const Element& w) {
  GenSubset letters = GenSubset::none();
  for (int s : w.word()) letters = letters.with(s);
  return letters;
}

bool in_descent_class(const Element& w, GenSubset t) {
  require_subset(w.system(), t);
  return descent_set(w, Side::Right) == t;
}

bool is_minimal_coset_rep(const Element& w, GenSubset t) {
  require_subset(w.system(), t);
  return (descent_set(w, Side::Right) & t).empty();
}

CosetDecomposition coset_decompose(const Element& w, GenSubset t) {
  const CoxeterSystem& system = w.system();
  require_subset(system, t);
  Element rep = w;
  std::vector<int> stripped;
  while (true) {
    const GenSubset down = descent_set(rep, Side::Right) & t;
    if (down.empty()) break;
    const int s = down.least();
    rep = mul_gen(rep, s, Side::Right);
    stripped.push_back(s);
  }
  std::reverse(stripped.begin(), stripped.end());
  return {std::move(rep), element_from_word(system, stripped)};
}

Order index(const CoxeterSystem& system, GenSubset t) {
  require_subset(system, t);
  const GenSubset essential = essential_subset(system);
  if (!essential.subset_of(t)) return Order::inf();
  const GenSubset all = GenSubset::full(system.rank());
  const Order whole = classify_subset(system, all - essential).total_order;
  const Order part = classify_subset(system, t - essential).total_order;
  return whole.divide_exact(part);
}

}  // namespace cox
