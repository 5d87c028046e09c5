#pragma once

#include <Eigen/Dense>

#include "cox/system.hpp"

namespace cox {

enum class Side { Left, Right };

/// A certified sign of a root coordinate vector.
enum class VecSign { Positive, Negative };

/// Positive when every coordinate is >= -eps and some coordinate is
/// > eps; negative symmetrically. Anything else throws
/// NumericalAmbiguityError carrying `context`.
VecSign certify_sign(const Eigen::VectorXd& v, double eps,
                     const char* context);

// Reflection action in root coordinates. Simple roots are the standard
// basis vectors and sigma_s acts by v -> v - 2 B(alpha_s, v) alpha_s
// with B the system's gram() form. Both updates are O(n^2).

/// m := sigma_s * m  (only row s changes)
void apply_reflection_left(const CoxeterSystem& system, int s,
                           Eigen::MatrixXd& m);

/// m := m * sigma_s  (rank-1 update)
void apply_reflection_right(const CoxeterSystem& system, int s,
                            Eigen::MatrixXd& m);

}  // namespace cox
