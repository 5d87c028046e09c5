#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace cox {

/// Largest supported rank. Subsets are bitmasks, and the subset
/// enumeration routines walk all 2^n masks directly, so the cap is kept
/// at desk scale.
inline constexpr int kMaxRank = 24;

/// A subset of the generators, held as a bitmask over indices 0..rank-1.
class GenSubset {
 public:
  constexpr GenSubset() = default;

  static constexpr GenSubset none() { return GenSubset(); }

  static constexpr GenSubset from_mask(std::uint32_t mask) {
    return GenSubset(mask);
  }

  static constexpr GenSubset single(int i) {
    return GenSubset(std::uint32_t{1} << i);
  }

  static constexpr GenSubset full(int rank) {
    return GenSubset(rank <= 0 ? 0u : (std::uint32_t{1} << rank) - 1u);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int count() const { return std::popcount(mask_); }

  constexpr bool contains(int i) const { return (mask_ >> i) & 1u; }

  constexpr GenSubset with(int i) const {
    return GenSubset(mask_ | (std::uint32_t{1} << i));
  }

  constexpr GenSubset without(int i) const {
    return GenSubset(mask_ & ~(std::uint32_t{1} << i));
  }

  constexpr bool subset_of(GenSubset o) const {
    return (mask_ & ~o.mask_) == 0;
  }

  /// Index of the least member, -1 when empty.
  int least() const {
    return mask_ == 0 ? -1 : std::countr_zero(mask_);
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m));
    }
    return out;
  }

  friend constexpr GenSubset operator|(GenSubset a, GenSubset b) {
    return GenSubset(a.mask_ | b.mask_);
  }
  friend constexpr GenSubset operator&(GenSubset a, GenSubset b) {
    return GenSubset(a.mask_ & b.mask_);
  }
  /// Set difference.
  friend constexpr GenSubset operator-(GenSubset a, GenSubset b) {
    return GenSubset(a.mask_ & ~b.mask_);
  }

  friend constexpr bool operator==(GenSubset, GenSubset) = default;
  /// Mask order, the canonical listing order for subset enumerations.
  friend constexpr std::strong_ordering operator<=>(GenSubset a, GenSubset b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  explicit constexpr GenSubset(std::uint32_t mask) : mask_(mask) {}

  std::uint32_t mask_ = 0;
};

}  // namespace cox
