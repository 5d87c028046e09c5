#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cox/element.hpp"
#include "cox/system.hpp"

namespace cox {

struct BallOptions {
  /// Exceeding the cap raises ResourceLimitError, never silence.
  std::uint64_t max_elements = 2'000'000;
};

/// Closed ball around the identity in the Cayley graph. Elements are
/// sorted by (length, word), so indices are deterministic. adjacency()
/// is involution-labeled: following the same generator twice returns to
/// the start.
class CayleyBall {
 public:
  static constexpr std::int32_t kOutside = -1;

  const CoxeterSystem& system() const { return *system_; }

  /// The requested radius (enumerate_group reports the largest length).
  int radius() const { return radius_; }
  /// Largest length actually present.
  int max_length() const {
    return static_cast<int>(level_offsets_.size()) - 2;
  }
  /// True when the whole group fit inside the radius.
  bool saturated() const { return saturated_; }

  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& at(std::size_t i) const { return elements_.at(i); }

  /// Index of elements[i] * s, or kOutside when the product has length
  /// radius()+1.
  std::int32_t adjacency(std::size_t i, int s) const {
    return adjacency_[i * system_->rank() + s];
  }

  /// Number of elements of exactly this length.
  std::size_t count_at(int length) const;

  /// [begin, end) indices of the length-l block.
  std::pair<std::size_t, std::size_t> range_of_length(int length) const;

  std::optional<std::size_t> find(const Element& w) const;
  std::optional<std::size_t> find_word(const std::vector<int>& nf) const;

 private:
  friend CayleyBall enumerate_ball_impl(const CoxeterSystem&, int,
                                        const BallOptions&);

  const CoxeterSystem* system_ = nullptr;
  int radius_ = 0;
  bool saturated_ = false;
  std::vector<Element> elements_;
  std::vector<std::size_t> level_offsets_;  // level_offsets_[l] = first index of length l
  std::vector<std::int32_t> adjacency_;     // size() * rank entries
  std::unordered_map<std::string, std::uint32_t> index_by_nf_;
};

/// BFS from the identity, deduplicating on normal forms. Complete and
/// duplicate-free; throws ResourceLimitError past the cap.
CayleyBall enumerate_ball(const CoxeterSystem& system, int radius,
                          const BallOptions& options = {});

/// BFS until the group is exhausted; the system must be finite or the
/// cap trips.
CayleyBall enumerate_group(const CoxeterSystem& system,
                           const BallOptions& options = {});

}  // namespace cox
