#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "xcomm/cases.hpp"
#include "xcomm/dynamics.hpp"
#include "xcomm/partition.hpp"

namespace xcomm::test {

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::vector<Rational> points(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

/// Permutation from disjoint cycles on n pieces.
inline PieceMap cycles(std::size_t n, const std::vector<std::vector<PieceId>>& cs) {
  std::vector<PieceId> perm(n);
  std::iota(perm.begin(), perm.end(), PieceId{0});
  for (const auto& c : cs) {
    for (std::size_t i = 0; i < c.size(); ++i) perm[c[i]] = c[(i + 1) % c.size()];
  }
  return PieceMap(std::move(perm));
}

/// N=2: I_0 <-> I_1, I_2 fixed, {t_1} <-> {t_2}.
inline Partition swap_partition() { return build_real_line_partition(points({0, 10})); }
inline PieceMap swap_map() { return cycles(5, {{0, 1}, {3, 4}}); }

inline std::vector<PieceId> sorted(std::vector<PieceId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<PieceId> set_union(const std::vector<PieceId>& a, const std::vector<PieceId>& b) {
  std::vector<PieceId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Refined ids of the built-in fixtures, looked up by label.
inline PieceId by_label(const Partition& p, const std::string& label) {
  for (const auto& piece : p.pieces()) {
    if (piece.label == label) return piece.id;
  }
  throw std::out_of_range(label);
}

}  // namespace xcomm::test
