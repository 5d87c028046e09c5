#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cox {

/// A group order: a positive integer or infinity. Multiplication is
/// overflow-checked; division requires exactness.
class Order {
 public:
  static constexpr Order inf() { return Order(std::nullopt); }
  static constexpr Order of(std::uint64_t n) { return Order(n); }

  constexpr bool is_inf() const { return !value_.has_value(); }
  constexpr std::uint64_t value() const { return value_.value(); }

  std::string str() const {
    return is_inf() ? "inf" : std::to_string(*value_);
  }

  /// Infinity absorbs; finite overflow throws std::overflow_error.
  friend Order operator*(Order a, Order b);

  /// Exact division of finite orders; throws PreconditionError on
  /// infinite operands or a nonzero remainder.
  Order divide_exact(Order divisor) const;

  friend constexpr bool operator==(const Order&, const Order&) = default;

 private:
  explicit constexpr Order(std::optional<std::uint64_t> v) : value_(v) {}

  std::optional<std::uint64_t> value_;
};

}  // namespace cox
