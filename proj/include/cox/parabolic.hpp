#pragma once

#include "cox/ball.hpp"
#include "cox/element.hpp"
#include "cox/order.hpp"
#include "cox/subset.hpp"
#include "cox/system.hpp"

namespace cox {

/// Generators occurring in the normal form. Reduced words of one element
/// all use the same letter set, so this is well defined; w lies in W_T
/// exactly when support(w) is inside T.
GenSubset support(const Element& w);

/// True when the right descent set equals t exactly.
bool in_descent_class(const Element& w, GenSubset t);

/// True when no right descent lies in t: w is the minimal-length
/// representative of its coset w W_T.
bool is_minimal_coset_rep(const Element& w, GenSubset t);

/// w = rep * inner with rep minimal, support(inner) inside t, and
/// lengths adding up. The pair is unique; the strip order (least
/// t-descent first) only fixes the intermediate steps.
struct CosetDecomposition {
  Element rep;
  Element inner;
};

CosetDecomposition coset_decompose(const Element& w, GenSubset t);

/// [W : W_T] through the essential subset: infinite unless the essential
/// generators all lie in t, else the ratio of the finite complements'
/// orders. Total on infinite groups; never enumerates cosets.
Order index(const CoxeterSystem& system, GenSubset t);

}  // namespace cox
