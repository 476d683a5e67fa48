#include "xcomm/selftest.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "xcomm/commutant.hpp"
#include "xcomm/enumerate.hpp"
#include "xcomm/error.hpp"
#include "xcomm/io.hpp"
#include "xcomm/random.hpp"

namespace xcomm {
namespace {

constexpr Degree kSepWindow = 12;

std::string describe(const Instance& instance) {
  return instance_to_json(instance).dump();
}

bool subset(const std::vector<PieceId>& a, const std::vector<PieceId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Runs `check` once per iteration; a check returns an empty string on success
// and a description of the counterexample otherwise.
SuiteResult run_suite(std::string name, std::size_t iterations, std::mt19937_64& rng,
                      const std::function<std::string(std::mt19937_64&)>& check) {
  SuiteResult result{std::move(name), 0, iterations, {}};
  for (std::size_t i = 0; i < iterations; ++i) {
    std::string failure;
    try {
      failure = check(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      ++result.passed;
    } else if (result.counterexample.empty()) {
      result.counterexample = failure;
    }
  }
  return result;
}

std::string sep_oracle(std::mt19937_64& rng) {
  const auto tower = random_tower(rng);
  for (std::size_t level = 0; level < tower.levels(); ++level) {
    const auto instance = tower.from_level(level);
    const auto view = SubalgebraView::coarse(instance.refinement);
    for (Degree n = -kSepWindow; n <= kSepWindow; ++n) {
      if (sep_set(view, instance.refined_map, n) != brute_force_sep(view, instance.refined_map, n)) {
        return "n=" + std::to_string(n) + " level=" + std::to_string(level) + " " + describe(instance);
      }
    }
  }
  return {};
}

std::string sep_laws(std::mt19937_64& rng) {
  const auto instance = random_tower(rng).from_level(0);
  const auto view = SubalgebraView::coarse(instance.refinement);
  const auto& map = instance.refined_map;
  if (!sep_set(view, map, 0).empty()) return "Sep^0 nonempty " + describe(instance);
  for (Degree n = 1; n <= kSepWindow; ++n) {
    const auto sep_n = sep_set(view, map, n);
    if (sep_n != sep_set(view, map, -n)) return "Sep^n != Sep^-n at n=" + std::to_string(n);
    for (Degree m = 1; m <= n; ++m) {
      if (n % m == 0 && !subset(sep_n, sep_set(view, map, m))) {
        return "Sep^" + std::to_string(n) + " not inside Sep^" + std::to_string(m) + " " + describe(instance);
      }
    }
  }
  return {};
}

std::string group_action(std::mt19937_64& rng) {
  const auto tower = random_tower(rng);
  const auto& map = tower.maps.back();
  const std::size_t pieces = map.size();
  std::uniform_int_distribution<Degree> degree(-6, 6);
  const Degree n = degree(rng), m = degree(rng);
  CoefficientVector f(pieces), g(pieces);
  for (auto& x : f.values) x = random_rational(rng);
  for (auto& x : g.values) x = random_rational(rng);
  if (sigma_tilde_pow(f, map, 0) != f) return "n=0 is not the identity";
  if (sigma_tilde_pow(sigma_tilde_pow(f, map, n), map, m) != sigma_tilde_pow(f, map, n + m)) {
    return "composition law fails for n=" + std::to_string(n) + " m=" + std::to_string(m);
  }
  if (sigma_tilde_pow(f * g, map, n) != sigma_tilde_pow(f, map, n) * sigma_tilde_pow(g, map, n)) {
    return "not multiplicative";
  }
  if (sigma_tilde_pow(f + g, map, n) != sigma_tilde_pow(f, map, n) + sigma_tilde_pow(g, map, n)) {
    return "not additive";
  }
  return {};
}

std::string associativity(std::mt19937_64& rng) {
  const auto tower = random_tower(rng);
  const auto& map = tower.maps.back();
  const std::size_t pieces = map.size();
  const auto f = random_element(pieces, rng), g = random_element(pieces, rng), h = random_element(pieces, rng);
  if (multiply(multiply(f, g, map), h, map) != multiply(f, multiply(g, h, map), map)) {
    return "associativity fails: " + element_to_json(f).dump() + " " + element_to_json(g).dump() + " " +
           element_to_json(h).dump();
  }
  const Rational a = random_rational(rng), b = random_rational(rng);
  if (multiply(f * a + g * b, h, map) != multiply(f, h, map) * a + multiply(g, h, map) * b) {
    return "not linear on the left";
  }
  if (multiply(h, f * a + g * b, map) != multiply(h, f, map) * a + multiply(h, g, map) * b) {
    return "not linear on the right";
  }
  return {};
}

std::string commutativity(std::mt19937_64& rng) {
  const auto tower = random_tower(rng);
  std::uniform_int_distribution<std::size_t> pick(0, tower.levels() - 1);
  const std::size_t level = pick(rng);
  const auto instance = tower.from_level(level);
  const auto& map = level == 0 ? instance.base_map : instance.refined_map;
  const auto& partition = level == 0 ? instance.refinement.base() : instance.refinement.refined();
  const CommutantDescription description(SubalgebraView::whole(partition), map);
  const auto a = random_commutant_member(description, rng);
  const auto b = random_commutant_member(description, rng);
  if (!is_in_commutant(a, description).member || !is_in_commutant(b, description).member) {
    return "generator produced a non-member";
  }
  if (multiply(a, b, map) != multiply(b, a, map)) {
    return "commutant members do not commute " + describe(instance);
  }
  return {};
}

std::string maximality(std::mt19937_64& rng) {
  // Draw until some degree in the window is restricted.
  for (;;) {
    const auto instance = random_tower(rng).from_level(0);
    const auto view = SubalgebraView::coarse(instance.refinement);
    const CommutantDescription description(view, instance.refined_map);
    if (description.classes().size() == 1 && description.classes().begin()->first == 1) continue;
    const auto element = random_non_member(description, rng);
    if (is_in_commutant(element, description).member) return "generator produced a member";
    if (!find_noncommuting_witness(element, view, instance.refined_map, rng)) {
      return "no witness for " + element_to_json(element).dump() + " " + describe(instance);
    }
    return {};
  }
}

std::string refinement_laws(std::mt19937_64& rng) {
  const auto instance = random_tower(rng).from_level(0);
  const auto& r = instance.refinement;
  const auto rcc = refined_cycle_classes(r, instance.base_map, instance.refined_map);
  const CommutantDescription coarse(SubalgebraView::coarse(r), instance.refined_map);
  for (Degree n = -kSepWindow; n <= kSepWindow; ++n) {
    const auto fine = refined_sep(r, instance.base_map, instance.refined_map, n);
    if (!subset(coarse.separated(n), fine)) return "Sep_A not inside Sep_AS at n=" + std::to_string(n);
    if (fine != refined_sep_decomposition(r, rcc, n)) return "decomposition fails at n=" + std::to_string(n);
  }
  return {};
}

std::string lift_enumeration(std::mt19937_64& rng) {
  const auto instance = random_tower(rng, {9, 1}).from_level(0);
  const auto lifts = enumerate_refined_maps(instance.refinement, instance.base_map);
  if (lifts.size() != lift_count(instance.refinement, instance.base_map)) return "lift count mismatch";
  for (const auto& m : lifts) {
    if (!validate_refined_invariance(instance.refinement, instance.base_map, m).ok()) return "invalid lift";
  }
  if (std::find(lifts.begin(), lifts.end(), instance.refined_map) == lifts.end()) return "random lift missed";
  return {};
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, std::size_t iterations) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteResult> results;
  results.push_back(run_suite("sep formula = oracle", iterations, rng, sep_oracle));
  results.push_back(run_suite("sep laws", iterations, rng, sep_laws));
  results.push_back(run_suite("sigma~ group action", iterations, rng, group_action));
  results.push_back(run_suite("associativity and bilinearity", iterations, rng, associativity));
  results.push_back(run_suite("commutant commutativity", iterations, rng, commutativity));
  results.push_back(run_suite("maximality witness", iterations, rng, maximality));
  results.push_back(run_suite("refinement monotonicity and decomposition", iterations, rng, refinement_laws));
  results.push_back(run_suite("lift enumeration", iterations, rng, lift_enumeration));
  return results;
}

}  // namespace xcomm
