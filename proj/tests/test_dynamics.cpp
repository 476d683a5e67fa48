#include <doctest.h>

#include <random>

#include "support.hpp"
#include "xcomm/enumerate.hpp"
#include "xcomm/error.hpp"
#include "xcomm/random.hpp"

using namespace xcomm;
using namespace xcomm::test;

namespace {

// Orbit length by direct iteration.
std::size_t orbit_length(const PieceMap& m, PieceId x) {
  std::size_t n = 1;
  for (PieceId y = m(x); y != x; y = m(y)) ++n;
  return n;
}

const Instance& fixture(const std::string& id) { return builtin_case(id).instance; }

}  // namespace

TEST_CASE("PieceMap algebra") {
  auto m = cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK(m.is_bijection());
  CHECK(m.power(0) == PieceMap::identity(6));
  CHECK(m.power(6) == PieceMap::identity(6));
  CHECK(m.power(-1) == m.inverse());
  CHECK(m.power(-7) == m.inverse());
  CHECK(m.power(2) == m.after(m));
  CHECK(m.after(m.inverse()) == PieceMap::identity(6));
  CHECK_FALSE(PieceMap({0, 0, 1}).is_bijection());
}

TEST_CASE("identity is valid on any partition") {
  auto p = build_real_line_partition(points({0, 1, 2}));
  CHECK(validate_invariance(p, PieceMap::identity(p.size())).ok());
  auto a = build_abstract_partition(4);
  CHECK(validate_invariance(a, PieceMap::identity(4)).ok());
}

TEST_CASE("swapping an interval with a jump point violates kind preservation") {
  auto p = build_real_line_partition(points({0}));
  auto report = validate_invariance(p, cycles(3, {{0, 2}}));
  CHECK_FALSE(report.ok());
  CHECK(report.mentions(Rule::KindPreserving));
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0].piece == 0);
  CHECK(report.violations[0].message == "piece 0 (Interval) ↦ piece 2 (Point)");
  CHECK(rule_name(Rule::KindPreserving, Flavor::RealLine) == "Lemma 1");
}

TEST_CASE("N=2 swap map is valid") {
  CHECK(validate_invariance(swap_partition(), swap_map()).ok());
}

TEST_CASE("malformed permutations are reported, not thrown") {
  auto p = swap_partition();
  CHECK(validate_invariance(p, PieceMap({0, 1, 2})).mentions(Rule::Length));
  CHECK(validate_invariance(p, PieceMap({0, 0, 2, 3, 4})).mentions(Rule::Bijection));
  CHECK(validate_invariance(build_abstract_partition(2), PieceMap({1, 1})).mentions(Rule::Bijection));
  CHECK(rule_name(Rule::Bijection, Flavor::Abstract) == "Lemma 5");
}

TEST_CASE("abstract partitions accept any bijection") {
  auto a = build_abstract_partition(3);
  CHECK(validate_invariance(a, cycles(3, {{0, 1, 2}})).ok());
}

TEST_CASE("refined invariance") {
  SUBCASE("identity maps") {
    auto r = refine_real_line(swap_partition(), {{1, points({3, 7})}});
    CHECK(validate_refined_invariance(r, PieceMap::identity(5), PieceMap::identity(9)).ok());
  }
  SUBCASE("one point in each of two swapped intervals") {
    const auto& i = fixture("6.2.3a");
    CHECK(validate_refined_invariance(i.refinement, i.base_map, i.refined_map).ok());
    CHECK(i.base_map(0) == 1);
  }
  SUBCASE("a point in only one of two swapped intervals") {
    auto r = refine_real_line(swap_partition(), {{0, points({-5})}});
    auto base = swap_map();
    // Any kind-preserving refined map; the base orbit already breaks the counts.
    auto refined = cycles(7, {{0, 2}, {4, 6}});
    auto report = validate_refined_invariance(r, base, refined);
    CHECK(report.mentions(Rule::ChildCount));
    CHECK(report.mentions(Rule::RefinedSet));
    CHECK(rule_name(Rule::ChildCount, Flavor::RealLine) == "Lemma 3");
    CHECK(rule_name(Rule::ChildCount, Flavor::Abstract) == "Lemma 6");
    CHECK(rule_name(Rule::RefinedSet, Flavor::RealLine) == "Lemma 2");
  }
  SUBCASE("abstract cells with unequal counts along an orbit") {
    auto r = refine_abstract(build_abstract_partition(2), {{0, 2}});
    auto report = validate_refined_invariance(r, cycles(2, {{0, 1}}), cycles(3, {{0, 2, 1}}));
    CHECK(report.mentions(Rule::ChildCount));
    CHECK(report.mentions(Rule::Lift));
  }
  SUBCASE("a refined map that does not lift the base map") {
    const auto& i = fixture("6.1.2");
    auto bad = cycles(9, {{0, 1, 4}, {5, 8}});
    CHECK(validate_refined_invariance(i.refinement, i.base_map, bad).mentions(Rule::Lift));
  }
}

TEST_CASE("cycle classes") {
  SUBCASE("identity") {
    auto cc = cycle_classes(PieceMap::identity(5));
    REQUIRE(cc.classes.size() == 1);
    CHECK(cc.classes.at(1).size() == 5);
  }
  SUBCASE("N=2 swap") {
    auto cc = cycle_classes(swap_map());
    CHECK(cc.classes.at(2) == std::vector<PieceId>{0, 1, 3, 4});
    CHECK(cc.classes.at(1) == std::vector<PieceId>{2});
  }
  SUBCASE("three-cycle on subintervals") {
    const auto& i = fixture("6.1.4");
    const auto& fine = i.refinement.refined();
    auto cc = cycle_classes(i.refined_map);
    for (const char* l : {"I_1^1", "I_1^2", "I_1^3"}) CHECK(cc.period_of[by_label(fine, l)] == 3);
    for (PieceId c : i.refinement.point_children(1)) CHECK(cc.period_of[c] == 1);
  }
  SUBCASE("agrees with orbit iteration on random maps") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      auto p = build_abstract_partition(1 + trial % 9);
      auto m = random_kind_preserving_map(p, rng);
      auto cc = cycle_classes(m);
      std::size_t total = 0;
      for (const auto& [k, members] : cc.classes) {
        total += members.size();
        for (PieceId x : members) {
          CHECK(orbit_length(m, x) == k);
          CHECK(m.power(static_cast<std::int64_t>(k))(x) == x);
          for (std::size_t j = 1; j < k; ++j) CHECK(m.power(static_cast<std::int64_t>(j))(x) != x);
        }
      }
      CHECK(total == p.size());
    }
  }
}

TEST_CASE("refined cycle classes") {
  SUBCASE("identity") {
    auto r = refine_real_line(swap_partition(), {{1, points({3, 7})}});
    auto rcc = refined_cycle_classes(r, PieceMap::identity(5), PieceMap::identity(9));
    for (auto l : rcc.multiplier_of) CHECK(l == 1);
  }
  SUBCASE("4-cycle over a swapped pair of intervals") {
    const auto& i = fixture("6.2.3b");
    auto rcc = refined_cycle_classes(i.refinement, i.base_map, i.refined_map);
    for (PieceId b : {PieceId{0}, PieceId{1}}) {
      for (PieceId c : i.refinement.interval_children(b)) {
        CHECK(rcc.base_period_of[b] == 2);
        CHECK(rcc.multiplier_of[c] == 2);
        CHECK(rcc.refined_period_of[c] == 4);
      }
    }
    CHECK(rcc.tilde_classes.at({2, 2}).size() == 4);
  }
  SUBCASE("swap of two subintervals in a fixed interval") {
    const auto& i = fixture("6.1.2");
    const auto& fine = i.refinement.refined();
    auto rcc = refined_cycle_classes(i.refinement, i.base_map, i.refined_map);
    CHECK(rcc.base_period_of[1] == 1);
    CHECK(rcc.multiplier_of[by_label(fine, "I_1^1")] == 2);
    CHECK(rcc.multiplier_of[by_label(fine, "I_1^2")] == 2);
    CHECK(rcc.multiplier_of[by_label(fine, "I_1^3")] == 1);
    for (PieceId c : i.refinement.point_children(1)) CHECK(rcc.multiplier_of[c] == 1);
  }
  SUBCASE("refined period is k*l and l is bounded on random towers") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      auto inst = random_tower(rng).from_level(0);
      auto rcc = refined_cycle_classes(inst.refinement, inst.base_map, inst.refined_map);
      const auto& fine = inst.refinement.refined();
      for (PieceId c = 0; c < fine.size(); ++c) {
        const PieceId b = inst.refinement.parent_of(c);
        CHECK(rcc.refined_period_of[c] == orbit_length(inst.refined_map, c));
        CHECK(rcc.refined_period_of[c] == rcc.base_period_of[b] * rcc.multiplier_of[c]);
        if (fine.is_real_line() && inst.refinement.base().kind(b) == PieceKind::Interval) {
          const std::size_t p = inst.refinement.added_count(b);
          CHECK(rcc.multiplier_of[c] <= (fine.kind(c) == PieceKind::Interval ? p + 1 : std::max<std::size_t>(p, 1)));
        }
      }
      CHECK(validate_refined_invariance(inst.refinement, inst.base_map, inst.refined_map).ok());
    }
  }
}

TEST_CASE("pi profiles of the fixtures") {
  SUBCASE("identity with two added points") {
    auto r = refine_real_line(swap_partition(), {{1, points({3, 7})}});
    auto rcc = refined_cycle_classes(r, PieceMap::identity(5), PieceMap::identity(9));
    auto pi = pi_profile(r, rcc, PieceMap::identity(5), 1);
    CHECK(pi.p == 2);
    CHECK(pi.pi == std::map<std::size_t, std::size_t>{{1, 3}});
  }
  SUBCASE("subinterval swap") {
    const auto& i = fixture("6.1.2");
    auto rcc = refined_cycle_classes(i.refinement, i.base_map, i.refined_map);
    CHECK(pi_profile(i.refinement, rcc, i.base_map, 1).pi == std::map<std::size_t, std::size_t>{{1, 1}, {2, 2}});
  }
  SUBCASE("subinterval three-cycle") {
    const auto& i = fixture("6.1.4");
    auto rcc = refined_cycle_classes(i.refinement, i.base_map, i.refined_map);
    CHECK(pi_profile(i.refinement, rcc, i.base_map, 1).pi == std::map<std::size_t, std::size_t>{{3, 3}});
  }
  SUBCASE("jump point parents are rejected") {
    const auto& i = fixture("6.1.4");
    auto rcc = refined_cycle_classes(i.refinement, i.base_map, i.refined_map);
    CHECK_THROWS_AS(pi_profile(i.refinement, rcc, i.base_map, 3), Error);
  }
}

TEST_CASE("check_pi") {
  CHECK(check_pi({1, 2, {{3, 3}}}).ok);
  CHECK(check_pi({1, 2, {{1, 1}, {2, 2}}}).ok);
  auto bad = check_pi({1, 2, {{2, 1}, {1, 2}}});
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(check_pi({1, 2, {{1, 2}}}).ok);
  CHECK_FALSE(check_pi({1, 1, {{3, 3}}}).ok);
}

TEST_CASE("realize_pi") {
  SUBCASE("three-cycle of three subintervals") {
    auto out = realize_pi({1, 2, {{3, 3}}});
    CHECK(out.refinement.refined().size() == 5);
    CHECK(validate_refined_invariance(out.refinement, out.base_map, out.refined_map).ok());
    auto cc = cycle_classes(out.refined_map);
    CHECK(cc.classes.at(3) == out.refinement.interval_children(0));
    CHECK(cc.classes.at(1) == out.refinement.point_children(0));
  }
  SUBCASE("trivial") {
    auto out = realize_pi({1, 0, {{1, 1}}});
    CHECK(out.refinement.refined().size() == 1);
    CHECK(out.refined_map == PieceMap::identity(1));
  }
  SUBCASE("two swapped parents with one 4-cycle") {
    PiProfile profile{2, 1, {{2, 2}}};
    auto out = realize_pi(profile);
    CHECK(validate_refined_invariance(out.refinement, out.base_map, out.refined_map).ok());
    auto rcc = refined_cycle_classes(out.refinement, out.base_map, out.refined_map);
    CHECK(rcc.tilde_classes.at({2, 2}).size() == 4);
    CHECK(pi_profile(out.refinement, rcc, out.base_map, 0) == profile);
  }
  SUBCASE("infeasible profiles throw") {
    try {
      realize_pi({1, 2, {{2, 1}, {1, 2}}});
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InfeasibleProfile);
    }
  }
}
