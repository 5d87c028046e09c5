#include "cox/geometry.hpp"

#include <sstream>

#include "cox/errors.hpp"

namespace cox {

VecSign certify_sign(const Eigen::VectorXd& v, double eps,
                     const char* context) {
  bool can_be_positive = true;
  bool can_be_negative = true;
  bool strictly_positive = false;
  bool strictly_negative = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double x = v[i];
    if (x < -eps) can_be_positive = false;
    if (x > eps) can_be_negative = false;
    if (x > eps) strictly_positive = true;
    if (x < -eps) strictly_negative = true;
  }
  if (can_be_positive && strictly_positive) return VecSign::Positive;
  if (can_be_negative && strictly_negative) return VecSign::Negative;
  std::ostringstream msg;
  msg << "cannot certify sign (" << context << "): coordinates [";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) msg << ", ";
    msg << v[i];
  }
  msg << "] with tolerance " << eps;
  throw NumericalAmbiguityError(msg.str());
}

void apply_reflection_left(const CoxeterSystem& system, int s,
                           Eigen::MatrixXd& m) {
  // sigma_s = I - 2 e_s b_s^T with b_s = gram row s, so only row s moves.
  const Eigen::RowVectorXd update = system.gram().row(s) * m;
  m.row(s) -= 2.0 * update;
}

void apply_reflection_right(const CoxeterSystem& system, int s,
                            Eigen::MatrixXd& m) {
  const Eigen::VectorXd col = m.col(s);
  m.noalias() -= 2.0 * col * system.gram().row(s);
}

}  // namespace cox
