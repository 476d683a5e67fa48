#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "xcomm/enumerate.hpp"
#include "xcomm/error.hpp"
#include "xcomm/random.hpp"

using namespace xcomm;
using namespace xcomm::test;

namespace {

// The same abstract instance with base pieces renamed by tau and the cells of
// every piece listed in reverse.
Instance relabel(const Instance& inst, const std::vector<PieceId>& tau) {
  const auto& r = inst.refinement;
  const std::size_t n = r.base().size();
  std::map<PieceId, std::size_t> counts;
  for (PieceId b = 0; b < n; ++b) counts[tau[b]] = r.children_of(b).size();
  auto renamed = refine_abstract(build_abstract_partition(n), counts);

  std::vector<PieceId> rho(r.refined().size());
  for (PieceId b = 0; b < n; ++b) {
    const auto& from = r.children_of(b);
    const auto& to = renamed.children_of(tau[b]);
    for (std::size_t j = 0; j < from.size(); ++j) rho[from[j]] = to[to.size() - 1 - j];
  }
  std::vector<PieceId> base(n), fine(rho.size());
  for (PieceId b = 0; b < n; ++b) base[tau[b]] = tau[inst.base_map(b)];
  for (PieceId c = 0; c < rho.size(); ++c) fine[rho[c]] = rho[inst.refined_map(c)];
  return {renamed, PieceMap(base), PieceMap(fine)};
}

}  // namespace

TEST_CASE("lift streams") {
  SUBCASE("two points in one fixed interval give 3!*2! lifts") {
    auto r = refine_real_line(build_real_line_partition({}), {{0, points({1, 2})}});
    auto lifts = enumerate_refined_maps(r, PieceMap::identity(1));
    CHECK(lifts.size() == 12);
    CHECK(lift_count(r, PieceMap::identity(1)) == 12);
    std::sort(lifts.begin(), lifts.end());
    CHECK(lifts == brute_lifts(r, PieceMap::identity(1)));
  }
  SUBCASE("no refinement gives the base map only") {
    auto r = identity_refinement(swap_partition());
    auto lifts = enumerate_refined_maps(r, swap_map());
    REQUIRE(lifts.size() == 1);
    CHECK(lifts[0] == swap_map());
  }
  SUBCASE("one point in each of two swapped intervals") {
    const auto& i = builtin_case("6.2.3a").instance;
    auto lifts = enumerate_refined_maps(i.refinement, i.base_map);
    CHECK(lifts.size() == 4);
    auto sorted_lifts = lifts;
    std::sort(sorted_lifts.begin(), sorted_lifts.end());
    CHECK(sorted_lifts == brute_lifts(i.refinement, i.base_map));
    std::set<CaseSignature> sigs;
    for (const auto& m : lifts) sigs.insert(signature_of({i.refinement, i.base_map, m}));
    CHECK(sigs.size() == 2);
    CHECK(sigs.count(CaseSignature{}) == 1);
    CHECK(sigs.count(CaseSignature{{{2, 2, 4}}}) == 1);
  }
  SUBCASE("unequal child counts give no lifts") {
    auto r = refine_real_line(swap_partition(), {{0, points({-5})}});
    CHECK(lift_count(r, swap_map()) == 0);
    CHECK(enumerate_refined_maps(r, swap_map()).empty());
  }
  SUBCASE("enumeration matches brute force on small random instances") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      auto inst = random_tower(rng, {7, 1}).from_level(0);
      auto lifts = enumerate_refined_maps(inst.refinement, inst.base_map);
      CHECK(lifts.size() == lift_count(inst.refinement, inst.base_map));
      std::sort(lifts.begin(), lifts.end());
      CHECK(lifts == brute_lifts(inst.refinement, inst.base_map));
    }
  }
}

TEST_CASE("classification") {
  SUBCASE("zero added points") {
    auto cases = classify_cases(atlas_instances({0, {}}));
    REQUIRE(cases.size() == 1);
    CHECK(cases.begin()->first.triples.empty());
  }
  SUBCASE("one point in one fixed interval") {
    auto cases = classify_cases(atlas_instances({0, {{0, 1}}}));
    REQUIRE(cases.size() == 2);
    CHECK(cases.count(CaseSignature{{{1, 2, 2}}}) == 1);
  }
  SUBCASE("two added points over both placements") {
    std::map<CaseSignature, CaseEntry> cases;
    std::size_t instances = 0;
    for (const auto& config : two_point_configs()) {
      auto all = atlas_instances(config);
      instances += all.size();
      merge_cases(cases, classify_cases(all));
    }
    CHECK(instances == 12 + 4 + 4);
    CHECK(cases.size() == 6);
    CHECK(signature_of(builtin_case("6.1.1").instance) == signature_of(builtin_case("6.2.1").instance));
    for (const auto& c : builtin_cases()) CHECK(cases.count(signature_of(c.instance)) == 1);
  }
  SUBCASE("merging is order independent") {
    auto a = classify_cases(atlas_instances(two_point_configs()[0]));
    auto b = classify_cases(atlas_instances(two_point_configs()[1]));
    auto ab = a, ba = b;
    merge_cases(ab, b);
    merge_cases(ba, a);
    REQUIRE(ab.size() == ba.size());
    for (const auto& [sig, entry] : ab) {
      CHECK(ba.at(sig).count == entry.count);
      CHECK(ba.at(sig).representative.refined_map == entry.representative.refined_map);
    }
  }
  SUBCASE("signatures survive relabeling") {
    std::mt19937_64 rng(43);
    int checked = 0;
    while (checked < 100) {
      auto inst = random_tower(rng, {11, 1}).from_level(0);
      if (inst.refinement.base().is_real_line()) continue;
      std::vector<PieceId> tau(inst.refinement.base().size());
      std::iota(tau.begin(), tau.end(), PieceId{0});
      std::shuffle(tau.begin(), tau.end(), rng);
      auto moved = relabel(inst, tau);
      REQUIRE(validate_refined_invariance(moved.refinement, moved.base_map, moved.refined_map).ok());
      CHECK(signature_of(moved) == signature_of(inst));
      ++checked;
    }
  }
  SUBCASE("scale bound") {
    try {
      atlas_instances({3, {{0, 2}, {1, 2}}});
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ScaleExceeded);
    }
  }
}

TEST_CASE("integer partitions") {
  CHECK(integer_partition_count(0) == 1);
  CHECK(integer_partition_count(1) == 1);
  CHECK(integer_partition_count(2) == 2);
  CHECK(integer_partition_count(4) == 5);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(integer_partition_count(n) == brute_partitions(n));
  CHECK_THROWS_AS(integer_partition_count(1000), Error);
}

TEST_CASE("sub-cases of k points in one interval") {
  const std::uint64_t expected[] = {0, 2, 6, 15, 35};
  for (std::size_t k = 1; k <= 4; ++k) {
    auto count = c1_subcase_count(k);
    CHECK(count.formula == expected[k]);
    CHECK(count.machine == expected[k]);
    CHECK(count.agree());
  }
  CHECK_THROWS_AS(c1_subcase_count(0), Error);
}

TEST_CASE("cycle types") {
  auto m = cycles(6, {{0, 1, 2}, {3, 4}});
  CHECK(cycle_type(m, {0, 1, 2, 3, 4, 5}) == std::vector<std::size_t>{1, 2, 3});
  CHECK(cycle_type(m, {3, 4}) == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(cycle_type(m, {0, 1}), Error);
}

TEST_CASE("pi-profile characterization at small scale") {
  for (std::size_t k = 1; k <= 2; ++k) {
    for (std::size_t p = 0; p <= 2; ++p) {
      auto profiles = admissible_profiles(p);
      std::set<std::map<std::size_t, std::size_t>> hit;
      auto cycle = realize_pi({k, p, {{1, p + 1}}});
      LiftEnumerator lifts(cycle.refinement, cycle.base_map);
      while (auto m = lifts.next()) {
        auto rcc = refined_cycle_classes(cycle.refinement, cycle.base_map, *m);
        auto profile = pi_profile(cycle.refinement, rcc, cycle.base_map, 0);
        CHECK(check_pi(profile).ok);
        hit.insert(profile.pi);
      }
      CHECK(hit == std::set<std::map<std::size_t, std::size_t>>(profiles.begin(), profiles.end()));
      for (const auto& pi : profiles) {
        PiProfile profile{k, p, pi};
        auto out = realize_pi(profile);
        auto rcc = refined_cycle_classes(out.refinement, out.base_map, out.refined_map);
        CHECK(pi_profile(out.refinement, rcc, out.base_map, 0) == profile);
      }
    }
  }
}
