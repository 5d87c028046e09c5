#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cox {

/// Order of the product of two generators: a value in {1,2,3,...} or
/// infinity. Infinity is an explicit state of the type, never a magic
/// integer, and every comparison against it is spelled out.
class Bond {
 public:
  /// Default bond is 2 (commuting pair), the value unspecified pairs take.
  constexpr Bond() : order_(2) {}

  static constexpr Bond inf() {
    Bond b;
    b.order_ = std::nullopt;
    return b;
  }

  static constexpr Bond finite(std::uint32_t m) {
    Bond b;
    b.order_ = m;
    return b;
  }

  constexpr bool is_inf() const { return !order_.has_value(); }

  /// Finite value; only meaningful when !is_inf().
  constexpr std::uint32_t value() const { return order_.value(); }

  /// True when the bond is at least k, counting infinity above everything.
  constexpr bool at_least(std::uint32_t k) const {
    return is_inf() || *order_ >= k;
  }

  std::string str() const {
    return is_inf() ? "inf" : std::to_string(*order_);
  }

  friend constexpr bool operator==(const Bond&, const Bond&) = default;

 private:
  std::optional<std::uint32_t> order_;
};

}  // namespace cox
