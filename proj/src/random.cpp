#include "xcomm/random.hpp"

#include <algorithm>
#include <numeric>

#include "xcomm/error.hpp"

namespace xcomm {
namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::vector<PieceId>> groups_of(const Refinement& refinement, PieceId b) {
  if (!refinement.refined().is_real_line()) return {refinement.children_of(b)};
  return {refinement.interval_children(b), refinement.point_children(b)};
}

// Bounds used to place new points inside interval alpha; unbounded ends get
// a finite stand-in.
std::pair<Rational, Rational> interval_bounds(const Partition& partition, PieceId alpha, std::size_t p) {
  const auto& t = partition.jump_points();
  const Rational width(static_cast<long>(p + 1));
  if (t.empty()) return {Rational(0), width};
  if (alpha == 0) return {t.front() - width, t.front()};
  if (alpha == t.size()) return {t.back(), t.back() + width};
  return {t[alpha - 1], t[alpha]};
}

}  // namespace

Instance Tower::from_level(std::size_t level) const {
  if (level >= maps.size()) throw Error(ErrorCode::UnknownPiece, "tower has no level " + std::to_string(level));
  if (level == steps.size()) {
    const auto& top = finest();
    return {identity_refinement(top), maps.back(), maps.back()};
  }
  Refinement composed = steps[level];
  for (std::size_t i = level + 1; i < steps.size(); ++i) composed = compose(composed, steps[i]);
  return {std::move(composed), maps[level], maps.back()};
}

PieceMap random_kind_preserving_map(const Partition& partition, std::mt19937_64& rng) {
  std::vector<PieceId> perm(partition.size());
  std::vector<PieceId> intervals, points;
  for (const auto& piece : partition.pieces()) {
    (partition.is_real_line() && piece.kind == PieceKind::Point ? points : intervals).push_back(piece.id);
  }
  for (auto* group : {&intervals, &points}) {
    auto images = *group;
    std::shuffle(images.begin(), images.end(), rng);
    for (std::size_t i = 0; i < group->size(); ++i) perm[(*group)[i]] = images[i];
  }
  return PieceMap(std::move(perm));
}

PieceMap random_lift(const Refinement& refinement, const PieceMap& base_map, std::mt19937_64& rng) {
  std::vector<PieceId> perm(refinement.refined().size());
  for (PieceId b = 0; b < base_map.size(); ++b) {
    auto from = groups_of(refinement, b);
    auto to = groups_of(refinement, base_map(b));
    for (std::size_t g = 0; g < from.size(); ++g) {
      if (from[g].size() != to[g].size()) {
        throw Error(ErrorCode::UnequalChildCounts, "base map admits no lift");
      }
      std::shuffle(to[g].begin(), to[g].end(), rng);
      for (std::size_t i = 0; i < from[g].size(); ++i) perm[from[g][i]] = to[g][i];
    }
  }
  return PieceMap(std::move(perm));
}

Refinement random_refinement(const Partition& partition, const PieceMap& map, std::size_t max_pieces,
                             std::mt19937_64& rng) {
  std::size_t total = partition.size();
  std::vector<bool> visited(partition.size(), false);
  std::map<PieceId, std::size_t> cells;
  std::map<PieceId, std::vector<Rational>> additions;

  for (PieceId start = 0; start < partition.size(); ++start) {
    if (visited[start]) continue;
    auto cycle = cycle_of(map, start);
    for (PieceId x : cycle) visited[x] = true;
    if (partition.is_real_line() && partition.kind(start) == PieceKind::Point) continue;

    // Each added point costs two pieces on the real line, each extra cell one.
    const std::size_t unit = partition.is_real_line() ? 2 : 1;
    std::size_t extra = uniform(rng, 0, 2);
    while (extra > 0 && total + extra * unit * cycle.size() > max_pieces) --extra;
    total += extra * unit * cycle.size();
    if (extra == 0) continue;
    for (PieceId b : cycle) {
      if (!partition.is_real_line()) {
        cells[b] = extra + 1;
        continue;
      }
      auto [lo, hi] = interval_bounds(partition, b, extra);
      for (std::size_t j = 1; j <= extra; ++j) {
        Rational fraction(static_cast<long>(j), static_cast<long>(extra + 1));
        fraction.canonicalize();
        Rational step = (hi - lo) * fraction;
        additions[b].push_back(lo + step);
      }
    }
  }
  return partition.is_real_line() ? refine_real_line(partition, additions) : refine_abstract(partition, cells);
}

Tower random_tower(std::mt19937_64& rng, const TowerShape& shape) {
  Tower tower;
  if (uniform(rng, 0, 1) == 0) {
    // N jump points give 2N+1 pieces.
    const std::size_t n = uniform(rng, 0, std::min<std::size_t>(3, (shape.max_pieces - 1) / 2));
    std::vector<Rational> t;
    for (std::size_t a = 0; a < n; ++a) t.emplace_back(static_cast<long>(10 * a));
    tower.base = build_real_line_partition(std::move(t));
  } else {
    tower.base = build_abstract_partition(uniform(rng, 1, std::min<std::size_t>(5, shape.max_pieces)));
  }
  tower.maps.push_back(random_kind_preserving_map(tower.base, rng));

  const std::size_t steps = uniform(rng, 0, shape.max_refinements);
  for (std::size_t s = 0; s < steps; ++s) {
    const auto& current = tower.finest();
    auto step = random_refinement(current, tower.maps.back(), shape.max_pieces, rng);
    auto lifted = random_lift(step, tower.maps.back(), rng);
    tower.steps.push_back(std::move(step));
    tower.maps.push_back(std::move(lifted));
  }
  return tower;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  Rational x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

CrossedElement random_element(std::size_t pieces, std::mt19937_64& rng, Degree max_degree) {
  CrossedElement e(pieces);
  std::uniform_int_distribution<Degree> degree(-max_degree, max_degree);
  const std::size_t terms = uniform(rng, 0, 3);
  for (std::size_t t = 0; t < terms; ++t) {
    CoefficientVector f(pieces);
    for (auto& x : f.values) {
      if (uniform(rng, 0, 2) != 0) x = random_rational(rng);
    }
    e.add_term(degree(rng), f);
  }
  return e;
}

CrossedElement random_commutant_member(const CommutantDescription& description, std::mt19937_64& rng,
                                       Degree max_degree) {
  const std::size_t pieces = description.view().ambient.size();
  CrossedElement e(pieces);
  std::uniform_int_distribution<Degree> degree(-max_degree, max_degree);
  const std::size_t terms = uniform(rng, 1, 3);
  for (std::size_t t = 0; t < terms; ++t) {
    const Degree n = degree(rng);
    CoefficientVector f(pieces);
    for (PieceId p : description.allowed(n)) {
      if (uniform(rng, 0, 2) != 0) f.values[p] = random_rational(rng);
    }
    e.add_term(n, f);
  }
  return e;
}

CrossedElement random_non_member(const CommutantDescription& description, std::mt19937_64& rng,
                                 Degree max_degree) {
  std::vector<std::pair<Degree, PieceId>> separated;
  for (Degree n = -max_degree; n <= max_degree; ++n) {
    for (PieceId p : description.separated(n)) separated.emplace_back(n, p);
  }
  if (separated.empty()) throw Error(ErrorCode::InfeasibleProfile, "every degree in the window is unrestricted");
  auto e = random_commutant_member(description, rng, max_degree);
  const auto [n, p] = separated[uniform(rng, 0, separated.size() - 1)];
  CoefficientVector bump(description.view().ambient.size());
  Rational value = random_rational(rng);
  if (sgn(value) == 0) value = 1;
  // The coefficient at (n, p) ends up exactly `value`, never zero.
  bump.values[p] = value - e.coefficient(n).values[p];
  e.add_term(n, bump);
  return e;
}

}  // namespace xcomm
