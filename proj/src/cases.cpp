#include "xcomm/cases.hpp"

#include <initializer_list>
#include <utility>

#include "xcomm/error.hpp"

namespace xcomm {
namespace {

// Applies transpositions and cycles to the identity.
PieceMap with_cycles(std::size_t n, const std::vector<std::vector<PieceId>>& cycles) {
  std::vector<PieceId> perm = PieceMap::identity(n).perm();
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return PieceMap(std::move(perm));
}

std::vector<BuiltinCase> make_cases() {
  const auto base = build_real_line_partition({Rational(0), Rational(10)});

  // Two points in I_1. Refined ids: 0 I_0, 1 I_1^1, 2 I_1^2, 3 I_1^3, 4 I_2,
  // 5 {t_1}, 6 I_1^4 = {s_1}, 7 I_1^5 = {s_2}, 8 {t_2}.
  // Base map swaps I_0 <-> I_2 and {t_1} <-> {t_2}, fixing I_1.
  const auto same = refine_real_line(base, {{1, {Rational(3), Rational(7)}}});
  const auto same_base = with_cycles(5, {{0, 2}, {3, 4}});
  auto same_case = [&](std::string id, std::string title, std::initializer_list<std::vector<PieceId>> inside) {
    std::vector<std::vector<PieceId>> cycles{{0, 4}, {5, 8}};
    cycles.insert(cycles.end(), inside.begin(), inside.end());
    return BuiltinCase{std::move(id), std::move(title), Instance{same, same_base, with_cycles(9, cycles)}};
  };

  // One point in each of I_0 and I_1. Refined ids: 0 I_0^1, 1 I_0^2,
  // 2 I_1^1, 3 I_1^2, 4 I_2, 5 I_0^3 = {s_1}, 6 {t_1}, 7 I_1^3 = {s_2}, 8 {t_2}.
  const auto split = refine_real_line(base, {{0, {Rational(-5)}}, {1, {Rational(5)}}});
  const auto fixed_base = with_cycles(5, {{3, 4}});
  const auto swap_base = with_cycles(5, {{0, 1}});

  return {
      same_case("6.1.1", "every new piece fixed", {}),
      same_case("6.1.2", "I^1 <-> I^2", {{1, 2}}),
      same_case("6.1.3", "{s_1} <-> {s_2}", {{6, 7}}),
      same_case("6.1.4", "I^1 -> I^2 -> I^3 -> I^1", {{1, 2, 3}}),
      same_case("6.1.5", "I^1 -> I^2 -> I^3 -> I^1 and {s_1} <-> {s_2}", {{1, 2, 3}, {6, 7}}),
      {"6.2.1", "s_1, s_2 fixed, every new piece fixed", {split, fixed_base, with_cycles(9, {{6, 8}})}},
      {"6.2.2", "s_i fixed, I_a1^1 <-> I_a1^2", {split, fixed_base, with_cycles(9, {{6, 8}, {0, 1}})}},
      {"6.2.3a", "s_1 <-> s_2, subintervals in 2-cycles", {split, swap_base, with_cycles(9, {{0, 2}, {1, 3}, {5, 7}})}},
      {"6.2.3b", "s_1 <-> s_2, subintervals in one 4-cycle", {split, swap_base, with_cycles(9, {{0, 2, 1, 3}, {5, 7}})}},
  };
}

}  // namespace

const std::vector<BuiltinCase>& builtin_cases() {
  static const std::vector<BuiltinCase> cases = make_cases();
  return cases;
}

const BuiltinCase& builtin_case(const std::string& id) {
  for (const auto& c : builtin_cases()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorCode::ParseError, "no built-in case \"" + id + "\"");
}

}  // namespace xcomm
