#pragma once

#include <string>
#include <vector>

#include "cox/order.hpp"
#include "cox/subset.hpp"
#include "cox/system.hpp"

namespace cox {

enum class TypeFamily { A, B, D, E6, E7, E8, F4, H3, H4, I2, Infinite };

/// Type of one irreducible component. For A/B/D, n is the rank; for I2,
/// n is the bond; the fixed types ignore n.
struct ComponentType {
  TypeFamily family = TypeFamily::Infinite;
  int n = 0;

  std::string str() const;

  friend bool operator==(const ComponentType&, const ComponentType&) = default;
};

struct ClassifiedComponent {
  GenSubset gens;  // in the ambient system's index space
  ComponentType type;
  Order order;
};

struct FinitenessVerdict {
  bool finite = false;
  std::vector<ClassifiedComponent> components;  // by least member
  Order total_order = Order::of(1);
};

/// Restricts to (W_T, T), splits into irreducible components, and
/// matches each against the finite-type diagrams. Rank-1 components are
/// A1, connected rank-2 components with finite bond are I2(m); anything
/// holding an infinite bond or matching no diagram is infinite. The
/// empty subset is finite of order 1.
FinitenessVerdict classify_subset(const CoxeterSystem& system, GenSubset t);

/// classify_subset(...).finite
bool is_spherical(const CoxeterSystem& system, GenSubset t);

/// All T with W_T finite and every one-generator extension infinite,
/// in increasing mask order. Walks all 2^n subsets directly.
std::vector<GenSubset> maximal_spherical_subsets(const CoxeterSystem& system);

/// Union of the irreducible components whose parabolic subgroup is
/// infinite. The complement generates the largest finite direct factor.
GenSubset essential_subset(const CoxeterSystem& system);

/// Essential subset of the restriction (W_T, T), mapped back into the
/// ambient index space.
GenSubset essential_subset(const CoxeterSystem& system, GenSubset t);

}  // namespace cox
