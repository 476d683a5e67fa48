#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "xcomm/dynamics.hpp"
#include "xcomm/enumerate.hpp"

namespace xcomm::test {

/// Number of ways to write n as a sum of non-increasing positive parts,
/// by listing them.
inline std::uint64_t brute_partitions(std::size_t n) {
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t left, std::size_t cap) {
    if (left == 0) {
      ++count;
      return;
    }
    for (std::size_t part = std::min(left, cap); part >= 1; --part) go(left - part, part);
  };
  go(n, n);
  return count;
}

/// Every permutation of the refined pieces that passes validation.
inline std::vector<PieceMap> brute_lifts(const Refinement& r, const PieceMap& base_map) {
  std::vector<PieceId> perm(r.refined().size());
  for (PieceId i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<PieceMap> out;
  do {
    PieceMap m(perm);
    if (validate_refined_invariance(r, base_map, m).ok()) out.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Every profile l -> pi(l) over 1..p+1 with l | pi(l) and sum p+1, built
/// by choosing the number of l-blocks for each l.
inline std::vector<std::map<std::size_t, std::size_t>> admissible_profiles(std::size_t p) {
  std::vector<std::map<std::size_t, std::size_t>> out;
  std::map<std::size_t, std::size_t> current;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t l, std::size_t left) {
    if (l > p + 1) {
      if (left == 0) out.push_back(current);
      return;
    }
    for (std::size_t blocks = 0; blocks * l <= left; ++blocks) {
      if (blocks > 0) current[l] = blocks * l;
      go(l + 1, left - blocks * l);
      current.erase(l);
    }
  };
  go(1, p + 1);
  return out;
}

}  // namespace xcomm::test
