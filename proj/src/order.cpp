#include "cox/order.hpp"

#include <stdexcept>

#include "cox/errors.hpp"

namespace cox {

Order operator*(Order a, Order b) {
  if (a.is_inf() || b.is_inf()) {
    return Order::inf();
  }
  std::uint64_t result = 0;
  if (__builtin_mul_overflow(a.value(), b.value(), &result)) {
    throw std::overflow_error("group order exceeds 64 bits");
  }
  return Order::of(result);
}

Order Order::divide_exact(Order divisor) const {
  if (is_inf() || divisor.is_inf()) {
    throw PreconditionError("exact division needs finite orders");
  }
  if (divisor.value() == 0 || value() % divisor.value() != 0) {
    throw PreconditionError("orders do not divide exactly");
  }
  return Order::of(value() / divisor.value());
}

}  // namespace cox
