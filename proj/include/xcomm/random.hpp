#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "xcomm/commutant.hpp"
#include "xcomm/crossed.hpp"
#include "xcomm/enumerate.hpp"

namespace xcomm {

/// A tower of refinements level_0 -> level_1 -> ... with a compatible map on
/// every level. steps[i] refines level i into level i+1; maps[i] acts on
/// level i.
struct Tower {
  Partition base;
  std::vector<Refinement> steps;
  std::vector<PieceMap> maps;

  const Partition& finest() const { return steps.empty() ? base : steps.back().refined(); }
  std::size_t levels() const noexcept { return maps.size(); }

  /// The refinement from `level` to the finest level, with both maps.
  Instance from_level(std::size_t level) const;
};

struct TowerShape {
  std::size_t max_pieces = 11;
  std::size_t max_refinements = 2;
};

PieceMap random_kind_preserving_map(const Partition& partition, std::mt19937_64& rng);

/// A uniformly chosen lift of base_map (see LiftEnumerator).
PieceMap random_lift(const Refinement& refinement, const PieceMap& base_map, std::mt19937_64& rng);

/// Random admissible refinement of `partition` for `map`: along every cycle
/// of intervals (or of abstract pieces) the same number of points/cells is
/// added, keeping the result within max_pieces.
Refinement random_refinement(const Partition& partition, const PieceMap& map, std::size_t max_pieces,
                             std::mt19937_64& rng);

/// Real-line or abstract tower with 0..shape.max_refinements refinement steps.
Tower random_tower(std::mt19937_64& rng, const TowerShape& shape = {});

Rational random_rational(std::mt19937_64& rng);

/// Sparse element with degrees in [-max_degree, max_degree].
CrossedElement random_element(std::size_t pieces, std::mt19937_64& rng, Degree max_degree = 3);

/// Random element of the commutant (coefficients only on allowed pieces).
CrossedElement random_commutant_member(const CommutantDescription& description, std::mt19937_64& rng,
                                       Degree max_degree = 3);

/// Random element outside the commutant; requires some Sep^n with
/// 0 < |n| <= max_degree to be nonempty.
CrossedElement random_non_member(const CommutantDescription& description, std::mt19937_64& rng,
                                 Degree max_degree = 3);

}  // namespace xcomm
