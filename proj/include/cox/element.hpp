#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "cox/geometry.hpp"
#include "cox/subset.hpp"
#include "cox/system.hpp"

namespace cox {

/// A group element, carried as the pair of matrices for w and w^-1 in
/// the reflection representation plus its ShortLex-least reduced word.
/// Immutable value; the system must outlive every element built on it.
///
/// Carrying both matrices keeps left descents one sign test away:
/// right descents read off columns of fwd(), left descents off inv().
class Element {
 public:
  const CoxeterSystem& system() const { return *system_; }
  int length() const { return static_cast<int>(nf_.size()); }

  /// ShortLex-least reduced word, as generator indices.
  const std::vector<int>& word() const { return nf_; }

  const Eigen::MatrixXd& fwd() const { return fwd_; }
  const Eigen::MatrixXd& inv() const { return inv_; }

 private:
  Element(const CoxeterSystem* system, Eigen::MatrixXd fwd,
          Eigen::MatrixXd inv, std::vector<int> nf);

  const CoxeterSystem* system_;
  Eigen::MatrixXd fwd_;
  Eigen::MatrixXd inv_;
  std::vector<int> nf_;

  friend Element identity(const CoxeterSystem&);
  friend Element mul_gen(const Element&, int, Side);
  friend Element mul(const Element&, const Element&);
  friend Element inverse(const Element&);
};

Element identity(const CoxeterSystem& system);

/// w*s (Side::Right) or s*w (Side::Left). The length changes by exactly
/// one; the normal form is recomputed by greedy descent extraction.
Element mul_gen(const Element& w, int s, Side side = Side::Right);

/// General product; O(len * n^2) for the normal form.
Element mul(const Element& a, const Element& b);

Element inverse(const Element& w);

/// Folds right multiplications from the identity.
Element element_from_word(const CoxeterSystem& system,
                          std::span<const int> word);

/// Right descents are the s with w(alpha_s) a negative root, read as the
/// sign of fwd().col(s); left descents use inv(). Ambiguous signs throw.
GenSubset descent_set(const Element& w, Side side = Side::Right);

/// The stored ShortLex-least reduced word.
inline const std::vector<int>& normal_form(const Element& w) {
  return w.word();
}

/// Greedy extraction: repeatedly peel the least left descent. Exposed so
/// tests can re-derive normal forms straight from matrices.
std::vector<int> shortlex_from_matrices(const CoxeterSystem& system,
                                        Eigen::MatrixXd fwd,
                                        Eigen::MatrixXd inv);

/// Exact comparison of normal forms; matrices are never compared.
/// Requires elements of the same presentation.
bool equals(const Element& a, const Element& b);

/// Word metric: the length of a^-1 b.
int word_distance(const Element& a, const Element& b);

/// "s1 s2 s1" with the system's labels, "e" for the empty word.
std::string format_word(const CoxeterSystem& system, std::span<const int> word);

/// Parses a comma-separated label word; "e" (or empty) is the identity.
std::vector<int> word_from_labels(const CoxeterSystem& system,
                                  std::string_view comma_list);

}  // namespace cox
