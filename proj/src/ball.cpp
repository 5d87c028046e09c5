#include "cox/ball.hpp"

#include <limits>
#include <map>
#include <utility>

#include "cox/errors.hpp"
#include "cox/geometry.hpp"

namespace cox {
namespace {

// Rank is capped at 24, so one byte per letter is exact and the packed
// string compares in word order.
std::string pack(const std::vector<int>& nf) {
  std::string key;
  key.reserve(nf.size());
  for (int s : nf) key.push_back(static_cast<char>(s));
  return key;
}

struct Staged {
  Element element;
  std::vector<std::pair<std::uint32_t, int>> edges;  // (parent index, generator)
};

}  // namespace

std::size_t CayleyBall::count_at(int length) const {
  auto [begin, end] = range_of_length(length);
  return end - begin;
}

std::pair<std::size_t, std::size_t> CayleyBall::range_of_length(
    int length) const {
  if (length < 0 || length > max_length()) {
    return {elements_.size(), elements_.size()};
  }
  return {level_offsets_[length], level_offsets_[length + 1]};
}

std::optional<std::size_t> CayleyBall::find(const Element& w) const {
  if (!w.system().same_presentation(*system_)) {
    throw PreconditionError("element belongs to a different presentation");
  }
  return find_word(w.word());
}

std::optional<std::size_t> CayleyBall::find_word(
    const std::vector<int>& nf) const {
  for (int s : nf) {
    if (s < 0 || s >= system_->rank()) return std::nullopt;
  }
  auto it = index_by_nf_.find(pack(nf));
  if (it == index_by_nf_.end()) return std::nullopt;
  return it->second;
}

// radius < 0 enumerates until the group is exhausted.
CayleyBall enumerate_ball_impl(const CoxeterSystem& system, int radius,
                               const BallOptions& options) {
  const int rank = system.rank();
  const bool until_saturation = radius < 0;

  CayleyBall ball;
  ball.system_ = &system;
  ball.radius_ = until_saturation ? 0 : radius;

  ball.elements_.push_back(identity(system));
  ball.level_offsets_ = {0, 1};
  ball.adjacency_.assign(static_cast<std::size_t>(rank),
                         CayleyBall::kOutside);
  ball.index_by_nf_.emplace(std::string(), 0);

  int level = 0;
  while (until_saturation || level < radius) {
    auto [begin, end] = ball.range_of_length(level);
    // Words of the next length, in word order; map order is commit order.
    std::map<std::string, Staged> staged;
    for (std::size_t i = begin; i < end; ++i) {
      const GenSubset descents = descent_set(ball.elements_[i], Side::Right);
      for (int s = 0; s < rank; ++s) {
        // Descent edges point back into the previous level and were
        // already wired when this element was committed.
        if (descents.contains(s)) continue;
        Element child = mul_gen(ball.elements_[i], s, Side::Right);
        std::string key = pack(child.word());
        auto it = staged.find(key);
        if (it == staged.end()) {
          if (ball.elements_.size() + staged.size() + 1 >
              options.max_elements) {
            throw ResourceLimitError(
                "ball enumeration exceeded the element cap (" +
                std::to_string(options.max_elements) + ")");
          }
          it = staged
                   .emplace(std::move(key),
                            Staged{std::move(child), {}})
                   .first;
        }
        it->second.edges.emplace_back(static_cast<std::uint32_t>(i), s);
      }
    }
    if (staged.empty()) {
      ball.saturated_ = true;
      break;
    }
    ball.adjacency_.resize(
        (ball.elements_.size() + staged.size()) * rank,
        CayleyBall::kOutside);
    for (auto& [key, entry] : staged) {
      const auto child_index =
          static_cast<std::uint32_t>(ball.elements_.size());
      ball.index_by_nf_.emplace(key, child_index);
      ball.elements_.push_back(std::move(entry.element));
      for (auto [parent, s] : entry.edges) {
        ball.adjacency_[static_cast<std::size_t>(parent) * rank + s] =
            static_cast<std::int32_t>(child_index);
        ball.adjacency_[static_cast<std::size_t>(child_index) * rank + s] =
            static_cast<std::int32_t>(parent);
      }
    }
    ball.level_offsets_.push_back(ball.elements_.size());
    ++level;
  }
  if (until_saturation) {
    ball.radius_ = ball.max_length();
  }
  return ball;
}

CayleyBall enumerate_ball(const CoxeterSystem& system, int radius,
                          const BallOptions& options) {
  if (radius < 0) {
    throw PreconditionError("ball radius must be nonnegative");
  }
  return enumerate_ball_impl(system, radius, options);
}

CayleyBall enumerate_group(const CoxeterSystem& system,
                           const BallOptions& options) {
  return enumerate_ball_impl(system, -1, options);
}

}  // namespace cox
