#include <set>
#include <string>
#include <vector>

#include "cox/ball.hpp"
#include "cox/element.hpp"
#include "cox/errors.hpp"
#include "cox/system.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace cox;

namespace {

Element from_word(const CoxeterSystem& s, const std::vector<int>& word) {
  return element_from_word(s, word);
}

}  // namespace

TEST_CASE("identity element") {
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  const Element e = identity(fig1);
  CHECK(e.length() == 0);
  CHECK(e.word().empty());
  CHECK(descent_set(e, Side::Right).empty());
  CHECK(descent_set(e, Side::Left).empty());

  for (int s = 0; s < fig1.rank(); ++s) {
    const Element back = mul_gen(mul_gen(e, s), s);
    CHECK(equals(back, e));
  }

  const CoxeterSystem rank1 = parse_system("generators a\n");
  CHECK_FALSE(equals(identity(rank1), mul_gen(identity(rank1), 0)));
}

TEST_CASE("generator multiplication and braid relations") {
  const CoxeterSystem dinf = testutil::load_fixture("dihedral-inf.cox");
  // Alternating words in the infinite dihedral group never reduce.
  Element w = identity(dinf);
  for (int i = 0; i < 8; ++i) {
    w = mul_gen(w, i % 2);
    CHECK(w.length() == i + 1);
  }

  const CoxeterSystem a2 = testutil::load_fixture("a2.cox");
  CHECK(equals(from_word(a2, {0, 1, 0}), from_word(a2, {1, 0, 1})));

  // w*s*s = w across a whole ball.
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  const CayleyBall ball = enumerate_ball(fig1, 4);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (int s = 0; s < fig1.rank(); ++s) {
      const Element twice = mul_gen(mul_gen(ball.at(i), s), s);
      CHECK(equals(twice, ball.at(i)));
    }
  }
}

TEST_CASE("left multiplication mirrors right multiplication") {
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  const CayleyBall ball = enumerate_ball(fig1, 3);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (int s = 0; s < fig1.rank(); ++s) {
      const Element left = mul_gen(ball.at(i), s, Side::Left);
      const Element viaMul = mul(mul_gen(identity(fig1), s), ball.at(i));
      CHECK(equals(left, viaMul));
      CHECK(std::abs(left.length() - ball.at(i).length()) == 1);
    }
  }
}

TEST_CASE("descent sets") {
  const CoxeterSystem a2 = testutil::load_fixture("a2.cox");
  const Element ab = from_word(a2, {0, 1});
  CHECK(descent_set(ab, Side::Right) == GenSubset::single(1));
  CHECK(descent_set(ab, Side::Left) == GenSubset::single(0));

  const CoxeterSystem dinf = testutil::load_fixture("dihedral-inf.cox");
  const Element abab = from_word(dinf, {0, 1, 0, 1});
  CHECK(descent_set(abab, Side::Right) == GenSubset::single(1));
  CHECK(descent_set(abab, Side::Left) == GenSubset::single(0));

  // Longest element of A2 is a descent on every side.
  const Element longest = from_word(a2, {0, 1, 0});
  CHECK(descent_set(longest, Side::Right) == GenSubset::full(2));
  CHECK(descent_set(longest, Side::Left) == GenSubset::full(2));
}

TEST_CASE("normal forms") {
  const CoxeterSystem a2 = testutil::load_fixture("a2.cox");
  CHECK(normal_form(from_word(a2, {1, 0, 1})) == std::vector<int>{0, 1, 0});
  CHECK(normal_form(identity(a2)).empty());
  CHECK(normal_form(mul_gen(identity(a2), 1)) == std::vector<int>{1});

  // Non-reduced input words collapse.
  CHECK(from_word(a2, {0, 1, 1, 0}).length() == 0);
  CHECK(from_word(a2, {0, 1, 1}).length() == 1);

  // The normal form can be re-derived from the matrices alone.
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  const CayleyBall ball = enumerate_ball(fig1, 4);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Element& w = ball.at(i);
    CHECK(shortlex_from_matrices(fig1, w.fwd(), w.inv()) == w.word());
  }
}

TEST_CASE("equality and distance") {
  const CoxeterSystem a2 = testutil::load_fixture("a2.cox");
  const Element ab = from_word(a2, {0, 1});
  const Element ba = from_word(a2, {1, 0});
  CHECK_FALSE(equals(ab, ba));
  CHECK(word_distance(ab, ba) == 2);
  CHECK(word_distance(ab, ab) == 0);
  CHECK(word_distance(identity(a2), ab) == 2);

  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  const CayleyBall ball = enumerate_ball(fig1, 3);
  const Element g = from_word(fig1, {2, 0, 1});
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const Element& w = ball.at(i);
    CHECK(word_distance(identity(fig1), w) == w.length());
    CHECK_FALSE(equals(w, mul_gen(w, 0)));
    // Left invariance of the word metric.
    CHECK(word_distance(mul(g, w), mul(g, ball.at(0))) ==
          word_distance(w, ball.at(0)));
    // Inversion is an isometry fixing the identity.
    CHECK(inverse(w).length() == w.length());
  }

  // Same presentation parsed twice is still comparable; a different
  // presentation is not.
  const CoxeterSystem again = parse_system("generators a b\nm a b 3\n");
  CHECK(equals(from_word(again, {0}), from_word(a2, {0})));
  const CoxeterSystem other = parse_system("generators a b\nm a b 4\n");
  CHECK_THROWS_AS(equals(from_word(other, {0}), from_word(a2, {0})),
                  PreconditionError);
}

TEST_CASE("word formatting and parsing") {
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  CHECK(format_word(fig1, std::vector<int>{0, 2, 3}) == "s1 s3 s4");
  CHECK(format_word(fig1, std::vector<int>{}) == "e");
  CHECK(word_from_labels(fig1, "s1,s3,s4") == std::vector<int>{0, 2, 3});
  CHECK(word_from_labels(fig1, "e").empty());
  CHECK(word_from_labels(fig1, "").empty());
  CHECK(word_from_labels(fig1, " s1 , s2 ") == std::vector<int>{0, 1});
  CHECK_THROWS_AS(word_from_labels(fig1, "s1,zz"), PreconditionError);
  CHECK_THROWS_AS(word_from_labels(fig1, "s1,e"), PreconditionError);
}

TEST_CASE("ball enumeration basics") {
  const CoxeterSystem a2 = testutil::load_fixture("a2.cox");
  const CayleyBall group = enumerate_group(a2);
  CHECK(group.size() == 6);
  CHECK(group.saturated());
  CHECK(group.max_length() == 3);
  CHECK(group.count_at(0) == 1);
  CHECK(group.count_at(1) == 2);
  CHECK(group.count_at(2) == 2);
  CHECK(group.count_at(3) == 1);
  CHECK(group.range_of_length(2) == std::pair<std::size_t, std::size_t>{3, 5});
  CHECK(group.count_at(7) == 0);

  // Saturation below the requested radius.
  const CayleyBall wide = enumerate_ball(a2, 10);
  CHECK(wide.size() == 6);
  CHECK(wide.saturated());

  const CayleyBall tight = enumerate_ball(a2, 2);
  CHECK(tight.size() == 5);
  CHECK_FALSE(tight.saturated());

  // Radius zero is the identity alone.
  CHECK(enumerate_ball(a2, 0).size() == 1);

  // find and find_word agree.
  const Element ab = from_word(a2, {0, 1});
  CHECK(group.find(ab).has_value());
  CHECK(group.find_word({0, 1}) == group.find(ab));
  CHECK_FALSE(tight.find_word({0, 1, 0}).has_value());
  CHECK_FALSE(group.find_word({9}).has_value());

  // The cap trips as a resource error.
  const CoxeterSystem dinf = testutil::load_fixture("dihedral-inf.cox");
  BallOptions small;
  small.max_elements = 10;
  CHECK_THROWS_AS(enumerate_ball(dinf, 50, small), ResourceLimitError);
  CHECK_THROWS_AS(enumerate_group(dinf, small), ResourceLimitError);
}

TEST_CASE("ball adjacency is an involution-labeled graph") {
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  const CayleyBall ball = enumerate_ball(fig1, 4);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (int s = 0; s < fig1.rank(); ++s) {
      const std::int32_t j = ball.adjacency(i, s);
      if (j == CayleyBall::kOutside) {
        // Only length-raising edges may leave the ball.
        CHECK(ball.at(i).length() == ball.radius());
        continue;
      }
      CHECK(ball.adjacency(static_cast<std::size_t>(j), s) ==
            static_cast<std::int32_t>(i));
      CHECK(equals(ball.at(static_cast<std::size_t>(j)),
                   mul_gen(ball.at(i), s)));
    }
  }
}

TEST_CASE("dihedral ball growth") {
  const CoxeterSystem dinf = testutil::load_fixture("dihedral-inf.cox");
  for (int r = 0; r <= 20; ++r) {
    CAPTURE(r);
    CHECK(enumerate_ball(dinf, r).size() ==
          static_cast<std::size_t>(2 * r + 1));
  }
}

TEST_CASE("oracle equivalence on the radius-8 ball") {
  // The independent check behind the word machinery: braid-move
  // reduction and matrix-free BFS against matrices and sign tests.
  for (const char* name : {"fig1.cox", "dihedral-inf.cox", "a2.cox",
                           "triangle333.cox", "dinf-x-a1.cox"}) {
    CAPTURE(name);
    const CoxeterSystem system = testutil::load_fixture(name);
    const int radius = 8;
    const CayleyBall fast = enumerate_ball(system, radius);
    const oracle::SlowBall slow = oracle::slow_ball(system.matrix(), radius);

    REQUIRE(fast.size() == slow.size());
    CHECK(fast.saturated() == slow.saturated);

    for (std::size_t i = 0; i < fast.size(); ++i) {
      const Element& w = fast.at(i);
      // Same element set, same normal forms, same lengths, same order.
      REQUIRE(slow.index.count(w.word()) == 1);
      CHECK(slow.index.at(w.word()) == i);
      CHECK(slow.length_of(i) == static_cast<std::size_t>(w.length()));

      const GenSubset right = descent_set(w, Side::Right);
      const GenSubset left = descent_set(w, Side::Left);
      for (int s = 0; s < system.rank(); ++s) {
        // Sign-test descent verdicts vs braid-reduction length drops.
        std::vector<int> ws = w.word();
        ws.push_back(s);
        const std::vector<int> ws_reduced =
            oracle::reduce(system.matrix(), ws);
        CHECK(right.contains(s) ==
              (ws_reduced.size() == ws.size() - 2));

        std::vector<int> sw;
        sw.push_back(s);
        sw.insert(sw.end(), w.word().begin(), w.word().end());
        const std::vector<int> sw_reduced =
            oracle::reduce(system.matrix(), sw);
        CHECK(left.contains(s) == (sw_reduced.size() == sw.size() - 2));

        // Multiplication agrees with reduction.
        const Element product = mul_gen(w, s);
        CHECK(product.word() == ws_reduced);
      }
    }
  }
}

TEST_CASE("triangle ball counts match the slow oracle") {
  const CoxeterSystem triangle = testutil::load_fixture("triangle333.cox");
  const oracle::SlowBall slow = oracle::slow_ball(triangle.matrix(), 6);
  for (int r = 0; r <= 6; ++r) {
    CAPTURE(r);
    CHECK(enumerate_ball(triangle, r).size() == slow.level_offsets[r + 1]);
  }
}

TEST_CASE("ambiguous signs surface as errors") {
  // An absurd tolerance makes every sign test ambiguous; the element
  // layer must throw rather than guess.
  const CoxeterSystem strict = parse_system("generators a b\nm a b 3\n", 1e300);
  CHECK_THROWS_AS(descent_set(identity(strict)), NumericalAmbiguityError);
  const std::vector<int> ab{0, 1};
  CHECK_THROWS_AS(element_from_word(strict, ab), NumericalAmbiguityError);
}
