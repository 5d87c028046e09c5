#include <cstdint>
#include <vector>

#include "cox/ball.hpp"
#include "cox/classify.hpp"
#include "cox/element.hpp"
#include "cox/errors.hpp"
#include "cox/hypothesis.hpp"
#include "cox/parabolic.hpp"
#include "cox/system.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cox;

TEST_CASE("theorem generator sets on the running example") {
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  CHECK(theorem_generator_set(fig1, subset_from_labels(fig1, "s1,s4")) ==
        subset_from_labels(fig1, "s4"));
  CHECK(theorem_generator_set(fig1, subset_from_labels(fig1, "s2,s4")) ==
        subset_from_labels(fig1, "s4"));
  CHECK(theorem_generator_set(fig1, subset_from_labels(fig1, "s1,s2,s3")) ==
        subset_from_labels(fig1, "s1,s2"));

  // The construction needs an infinite parabolic to aim at.
  CHECK_THROWS_AS(theorem_generator_set(fig1, subset_from_labels(fig1, "s3,s4")),
                  PreconditionError);

  // No infinite bonds leaving S - T means no candidates.
  const CoxeterSystem dxa = testutil::load_fixture("dinf-x-a1.cox");
  CHECK(theorem_generator_set(dxa, subset_from_labels(dxa, "a,b")).empty());
}

TEST_CASE("corollary witnesses are found and placed") {
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");

  const std::vector<CorollaryWitness> t14 =
      check_corollary(fig1, subset_from_labels(fig1, "s1,s4"));
  REQUIRE(t14.size() == 3);
  CHECK(t14[0].u == subset_from_labels(fig1, "s1,s2"));
  CHECK(t14[0].s == 3);
  CHECK(t14[0].u0 == 1);
  CHECK(t14[0].condition == 2);
  CHECK(t14[1].u == subset_from_labels(fig1, "s2,s3"));
  CHECK(t14[1].s == 3);
  CHECK(t14[1].u0 == 1);
  CHECK(t14[1].condition == 2);
  // The worked witness: U={s3,s4}, s=s2, u0=s4 with s outside T.
  CHECK(t14[2].u == subset_from_labels(fig1, "s3,s4"));
  CHECK(t14[2].s == 1);
  CHECK(t14[2].u0 == 3);
  CHECK(t14[2].condition == 1);
  CHECK(t14[2].t_tilde == subset_from_labels(fig1, "s1,s4"));

  const std::vector<CorollaryWitness> t123 =
      check_corollary(fig1, subset_from_labels(fig1, "s1,s2,s3"));
  REQUIRE(t123.size() == 6);
  // The worked witness on the other side: U={s3,s4}, s=s1, u0=s4.
  bool found = false;
  for (const CorollaryWitness& w : t123) {
    if (w.u == subset_from_labels(fig1, "s3,s4") && w.s == 0 && w.u0 == 3 &&
        w.condition == 2) {
      found = true;
    }
    CHECK(w.t_tilde == subset_from_labels(fig1, "s1,s2,s3"));
  }
  CHECK(found);

  // Witness ordering is by (U mask, s, u0, condition).
  for (std::size_t i = 1; i < t123.size(); ++i) {
    const auto key = [](const CorollaryWitness& w) {
      return std::tuple(w.u.mask(), w.s, w.u0, w.condition);
    };
    CHECK(key(t123[i - 1]) < key(t123[i]));
  }

  // Direct witnesses exist for five of the six infinite-parabolic T's.
  for (const char* labels :
       {"s1,s4", "s2,s4", "s1,s3,s4", "s2,s3,s4", "s1,s2,s3"}) {
    CAPTURE(labels);
    CHECK_FALSE(check_corollary(fig1, subset_from_labels(fig1, labels)).empty());
  }
  // T={s1,s2,s4} has none, provably: condition (1) needs a generator
  // outside T, and s3 (the only one) carries no infinite bond; condition
  // (2) needs u0 outside T with o(s u0)=inf, and o(s, s3) is never inf.
  // An empty list is "inconclusive", not "false" — here density would
  // follow separately from the T={s1,s4} witnesses, since enlarging T
  // only grows the boundary orbit.
  CHECK(check_corollary(fig1, subset_from_labels(fig1, "s1,s2,s4")).empty());

  CHECK_THROWS_AS(check_corollary(fig1, subset_from_labels(fig1, "s1,s2")),
                  PreconditionError);
}

TEST_CASE("quasidense certificates") {
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  const std::vector<QuasidenseCertificate> certs =
      check_quasidense_certificate(fig1);
  REQUIRE(certs.size() == 5);
  CHECK(certs[0].u == subset_from_labels(fig1, "s1,s2"));
  CHECK(certs[0].s0 == 3);
  CHECK(certs[1].u == subset_from_labels(fig1, "s1,s3"));
  CHECK(certs[1].s0 == 3);
  CHECK(certs[2].u == subset_from_labels(fig1, "s2,s3"));
  CHECK(certs[2].s0 == 3);
  CHECK(certs[3].u == subset_from_labels(fig1, "s3,s4"));
  CHECK(certs[3].s0 == 0);
  CHECK(certs[4].u == subset_from_labels(fig1, "s3,s4"));
  CHECK(certs[4].s0 == 1);

  // No generator of the product fixture has an infinite bond into a
  // maximal spherical subset.
  const CoxeterSystem dxa = testutil::load_fixture("dinf-x-a1.cox");
  CHECK(check_quasidense_certificate(dxa).empty());
}

TEST_CASE("density profile on the infinite dihedral group") {
  const CoxeterSystem dinf = testutil::load_fixture("dihedral-inf.cox");
  // Target: the descent class of {a} plus the identity boundary case is
  // exactly the elements whose normal form ends in a.
  const DensityProfile profile = density_profile(
      dinf,
      [](const Element& w) {
        return descent_set(w) == GenSubset::single(0);
      },
      "descent class of {a}", 10, 3);

  CHECK(profile.radius == 10);
  CHECK(profile.margin == 3);
  CHECK(profile.ball_size == 21);
  CHECK(profile.target_size == 10);
  REQUIRE(profile.rows.size() == 8);  // r = 0..7
  for (const DensityRow& row : profile.rows) {
    CAPTURE(row.r);
    // Every element is adjacent to a word ending in a: distance <= 1.
    REQUIRE(row.max_distance.has_value());
    CHECK(*row.max_distance == 1);
    CHECK(row.boundary_reliable);
  }
  // The first element at distance 1 in ball order is the identity.
  CHECK(profile.rows[0].witness.empty());

  SUBCASE("empty targets have no distances") {
    const DensityProfile none = density_profile(
        dinf, [](const Element&) { return false; }, "nothing", 5, 1);
    CHECK(none.target_size == 0);
    for (const DensityRow& row : none.rows) {
      CHECK_FALSE(row.max_distance.has_value());
      CHECK_FALSE(row.boundary_reliable);
    }
  }

  SUBCASE("margin must leave room") {
    CHECK_THROWS_AS(density_profile(
                        dinf, [](const Element&) { return true; }, "all", 3, 3),
                    PreconditionError);
  }
}

TEST_CASE("distances on a saturated ball") {
  // On a finite group the profile distances are plain graph distances.
  const CoxeterSystem a2 = testutil::load_fixture("a2.cox");
  const DensityProfile profile = density_profile(
      a2, [](const Element& w) { return w.length() == 0; }, "identity", 3, 1);
  CHECK(profile.ball_size == 6);
  CHECK(profile.target_size == 1);
  REQUIRE(profile.rows.size() == 3);
  CHECK(*profile.rows[0].max_distance == 0);
  CHECK(*profile.rows[1].max_distance == 1);
  CHECK(*profile.rows[2].max_distance == 2);
  CHECK(profile.rows[1].boundary_reliable);
  CHECK_FALSE(profile.rows[2].boundary_reliable);  // conservative flag
}

TEST_CASE("invariance criterion") {
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  CHECK_FALSE(check_w_invariance(fig1, subset_from_labels(fig1, "s1,s4")));
  CHECK_FALSE(check_w_invariance(fig1, subset_from_labels(fig1, "s1,s2,s3")));
  // Vacuous when the essential part is empty.
  CHECK(check_w_invariance(fig1, subset_from_labels(fig1, "s3,s4")));
  CHECK(check_w_invariance(fig1, GenSubset::none()));

  // The direct product splits, so its dihedral factor is invariant.
  const CoxeterSystem dxa = testutil::load_fixture("dinf-x-a1.cox");
  CHECK(check_w_invariance(dxa, subset_from_labels(dxa, "a,b")));
  CHECK(check_w_invariance(dxa, GenSubset::full(3)));
}

TEST_CASE("chain transport holds on the running example") {
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  CHECK(verify_chain_transport(fig1, subset_from_labels(fig1, "s1"), {1}, 5)
            .empty());
  CHECK(verify_chain_transport(fig1, subset_from_labels(fig1, "s1,s2"), {2}, 5)
            .empty());
  CHECK(verify_chain_transport(fig1, subset_from_labels(fig1, "s4"), {2, 1}, 5)
            .empty());

  SUBCASE("precondition violations throw") {
    const GenSubset t = subset_from_labels(fig1, "s1");
    CHECK_THROWS_AS(verify_chain_transport(fig1, t, {}, 4), PreconditionError);
    // Chain member inside t.
    CHECK_THROWS_AS(verify_chain_transport(fig1, t, {0}, 4), PreconditionError);
    // Repeated member.
    CHECK_THROWS_AS(verify_chain_transport(fig1, t, {1, 1}, 4),
                    PreconditionError);

    // Commuting pairs break the chain conditions (fig1 has none, the
    // product fixture does): c commutes with a, so a one-step chain c
    // cannot target t={a}, and b,c cannot be consecutive.
    const CoxeterSystem dxa = testutil::load_fixture("dinf-x-a1.cox");
    const GenSubset ta = subset_from_labels(dxa, "a");
    CHECK_THROWS_AS(verify_chain_transport(dxa, ta, {2}, 4),
                    PreconditionError);
    CHECK_THROWS_AS(verify_chain_transport(dxa, ta, {1, 2}, 4),
                    PreconditionError);
  }
}

TEST_CASE("descent extension holds at radius five") {
  for (const char* name : {"fig1.cox", "dihedral-inf.cox", "a2.cox",
                           "dinf-x-a1.cox"}) {
    CAPTURE(name);
    const CoxeterSystem system = testutil::load_fixture(name);
    CHECK(verify_descent_extension(system, 5).empty());
  }
}

TEST_CASE("commuting-set estimation") {
  // Product case: c commutes with the dihedral part, counts freeze at 1.
  const CoxeterSystem dxa = testutil::load_fixture("dinf-x-a1.cox");
  const CommutingSetReport split =
      estimate_commuting_set(dxa, subset_from_labels(dxa, "a,b"), 8, 3);
  CHECK(split.u_est == subset_from_labels(dxa, "c"));
  CHECK(split.t_tilde == subset_from_labels(dxa, "a,b"));
  CHECK(split.discrepancies.empty());
  REQUIRE(split.per_generator.size() == 1);
  CHECK(split.per_generator[0].s == 2);
  CHECK(split.per_generator[0].stabilized);
  CHECK(split.per_generator[0].counts ==
        std::vector<std::uint64_t>(8, 1));

  // Affine case: s4 does not commute with the triangle, counts track the
  // triangle's own ball growth (every u in W_T extends: u*s4 has descent
  // set {s4} because s4 commutes with none of T).
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  const CommutingSetReport affine =
      estimate_commuting_set(fig1, subset_from_labels(fig1, "s1,s2,s3"), 6, 2);
  CHECK(affine.u_est.empty());
  CHECK(affine.discrepancies.empty());
  REQUIRE(affine.per_generator.size() == 1);
  const std::vector<std::uint64_t> triangle_balls{1, 4, 10, 19, 31, 46};
  CHECK(affine.per_generator[0].counts == triangle_balls);
  CHECK_FALSE(affine.per_generator[0].stabilized);

  CHECK_THROWS_AS(
      estimate_commuting_set(dxa, subset_from_labels(dxa, "a,b"), 3, 3),
      PreconditionError);
}

TEST_CASE("intersection growth") {
  const CoxeterSystem fig1 = testutil::load_fixture("fig1.cox");
  const GenSubset t = subset_from_labels(fig1, "s1,s4");
  for (int s : {1, 2}) {
    CAPTURE(s);
    const IntersectionGrowth growth = intersection_growth(fig1, t, s, 12);
    CHECK(growth.positive);
    CHECK(growth.strictly_increasing);
    CHECK(growth.checkpoints == std::array<int, 3>{4, 8, 12});
    REQUIRE(growth.cumulative.size() == 13);
    // W_T is infinite dihedral and every element of it qualifies, so the
    // cumulative counts are the dihedral ball sizes 2r+1.
    for (int r = 0; r <= 12; ++r) {
      CHECK(growth.cumulative[static_cast<std::size_t>(r)] ==
            static_cast<std::uint64_t>(2 * r + 1));
    }
  }

  // s must lie outside t and must touch the essential part of t.
  CHECK_THROWS_AS(intersection_growth(fig1, t, 0, 6), PreconditionError);
  const CoxeterSystem dxa = testutil::load_fixture("dinf-x-a1.cox");
  CHECK_THROWS_AS(
      intersection_growth(dxa, subset_from_labels(dxa, "a,b"), 2, 6),
      PreconditionError);
}

TEST_CASE("index counting on finite groups") {
  const CoxeterSystem a2 = testutil::load_fixture("a2.cox");
  const IndexCountReport report =
      verify_index_count(a2, subset_from_labels(a2, "b"));
  CHECK(report.group_order == Order::of(6));
  CHECK(report.subgroup_order == Order::of(2));
  CHECK(report.min_rep_count == 3);
  CHECK(report.formula_index == Order::of(3));
  CHECK(report.consistent);

  const CoxeterSystem b3 = testutil::chain(
      {"a", "b", "c"}, {Bond::finite(4), Bond::finite(3)});
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    CAPTURE(mask);
    CHECK(verify_index_count(b3, GenSubset::from_mask(mask)).consistent);
  }

  const CoxeterSystem dinf = testutil::load_fixture("dihedral-inf.cox");
  CHECK_THROWS_AS(verify_index_count(dinf, GenSubset::single(0)),
                  PreconditionError);
}
