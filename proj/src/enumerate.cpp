#include "xcomm/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "xcomm/error.hpp"

namespace xcomm {
namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Children of a base piece split into the groups a lift must preserve.
std::vector<std::vector<PieceId>> child_groups(const Refinement& refinement, PieceId b) {
  if (!refinement.refined().is_real_line()) return {refinement.children_of(b)};
  return {refinement.interval_children(b), refinement.point_children(b)};
}

auto instance_key(const Instance& i) {
  return std::tuple(i.refinement.refined().size(), i.refinement.base().size(), i.base_map.perm(),
                    i.refined_map.perm());
}

}  // namespace

LiftEnumerator::LiftEnumerator(const Refinement& refinement, const PieceMap& base_map)
    : pieces_(refinement.refined().size()) {
  if (base_map.size() != refinement.base().size()) {
    throw Error(ErrorCode::PartitionMismatch, "base map does not act on the base partition");
  }
  for (PieceId b = 0; b < base_map.size(); ++b) {
    auto from = child_groups(refinement, b);
    auto to = child_groups(refinement, base_map(b));
    for (std::size_t g = 0; g < from.size(); ++g) {
      if (from[g].size() != to[g].size()) {
        done_ = true;
        return;
      }
      if (from[g].empty()) continue;
      std::vector<std::size_t> order(from[g].size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      slots_.push_back({std::move(from[g]), std::move(to[g]), std::move(order)});
    }
  }
}

PieceMap LiftEnumerator::current() const {
  std::vector<PieceId> perm(pieces_);
  for (const auto& slot : slots_) {
    for (std::size_t i = 0; i < slot.from.size(); ++i) perm[slot.from[i]] = slot.to[slot.order[i]];
  }
  return PieceMap(std::move(perm));
}

std::optional<PieceMap> LiftEnumerator::next() {
  if (done_) return std::nullopt;
  PieceMap out = current();
  // Odometer over the per-slot permutations; next_permutation returns false
  // exactly when a slot wraps back to the identity and must carry.
  bool advanced = false;
  for (auto& slot : slots_) {
    if (std::next_permutation(slot.order.begin(), slot.order.end())) {
      advanced = true;
      break;
    }
  }
  if (!advanced) done_ = true;
  return out;
}

std::vector<PieceMap> enumerate_refined_maps(const Refinement& refinement, const PieceMap& base_map) {
  std::vector<PieceMap> out;
  LiftEnumerator lifts(refinement, base_map);
  while (auto m = lifts.next()) out.push_back(std::move(*m));
  return out;
}

std::uint64_t lift_count(const Refinement& refinement, const PieceMap& base_map) {
  std::uint64_t count = 1;
  for (PieceId b = 0; b < base_map.size(); ++b) {
    auto from = child_groups(refinement, b);
    auto to = child_groups(refinement, base_map(b));
    for (std::size_t g = 0; g < from.size(); ++g) {
      if (from[g].size() != to[g].size()) return 0;
      count *= factorial(from[g].size());
    }
  }
  return count;
}

std::string CaseSignature::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& [k, l, count] = triples[i];
    out << (i ? "," : "") << '(' << k << ',' << l << ',' << count << ')';
  }
  out << '}';
  return out.str();
}

CaseSignature signature_of(const Instance& instance) {
  auto rcc = refined_cycle_classes(instance.refinement, instance.base_map, instance.refined_map);
  CaseSignature sig;
  for (const auto& [kl, ids] : rcc.tilde_classes) {
    if (kl.second > 1) sig.triples.emplace_back(kl.first, kl.second, ids.size());
  }
  std::sort(sig.triples.begin(), sig.triples.end());
  return sig;
}

void merge_cases(std::map<CaseSignature, CaseEntry>& into, const std::map<CaseSignature, CaseEntry>& from) {
  for (const auto& [sig, entry] : from) {
    auto it = into.find(sig);
    if (it == into.end()) {
      into.emplace(sig, entry);
      continue;
    }
    it->second.count += entry.count;
    if (instance_key(entry.representative) < instance_key(it->second.representative)) {
      it->second.representative = entry.representative;
    }
  }
}

std::map<CaseSignature, CaseEntry> classify_cases(const std::vector<Instance>& instances) {
  std::map<CaseSignature, CaseEntry> out;
  for (const auto& instance : instances) merge_cases(out, {{signature_of(instance), CaseEntry{instance, 1}}});
  return out;
}

std::uint64_t integer_partition_count(std::size_t n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t i = part; i <= n; ++i) {
      if (__builtin_add_overflow(p[i], p[i - part], &p[i])) {
        throw Error(ErrorCode::ScaleExceeded, "p(" + std::to_string(n) + ") does not fit in 64 bits");
      }
    }
  }
  return p[n];
}

std::vector<std::size_t> cycle_type(const PieceMap& map, const std::vector<PieceId>& subset) {
  std::set<PieceId> remaining(subset.begin(), subset.end());
  std::vector<std::size_t> type;
  while (!remaining.empty()) {
    auto cycle = cycle_of(map, *remaining.begin());
    for (PieceId x : cycle) {
      if (remaining.erase(x) == 0) throw Error(ErrorCode::InvalidPermutation, "subset is not invariant");
    }
    type.push_back(cycle.size());
  }
  std::sort(type.begin(), type.end());
  return type;
}

SubcaseCount c1_subcase_count(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InfeasibleProfile, "k must be at least 1");
  SubcaseCount out;
  out.formula = integer_partition_count(k) * integer_partition_count(k + 1);

  std::vector<Rational> points;
  for (std::size_t j = 1; j <= k; ++j) points.emplace_back(static_cast<long>(j));
  auto refinement = refine_real_line(build_real_line_partition({}), {{0, points}});
  auto intervals = refinement.interval_children(0);
  auto jumps = refinement.point_children(0);

  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen;
  LiftEnumerator lifts(refinement, PieceMap::identity(1));
  while (auto m = lifts.next()) seen.emplace(cycle_type(*m, jumps), cycle_type(*m, intervals));
  out.machine = seen.size();
  return out;
}

std::vector<Instance> atlas_instances(const AtlasConfig& config) {
  const std::size_t n = config.jump_points;
  std::size_t added = 0;
  for (const auto& [alpha, count] : config.additions) {
    if (alpha > n) {
      throw Error(ErrorCode::PointOutsideInterval, "interval I_" + std::to_string(alpha) + " does not exist");
    }
    added += count;
  }
  const std::size_t pieces = 2 * (n + added) + 1;
  if (pieces > kMaxAtlasPieces) {
    throw Error(ErrorCode::ScaleExceeded, "refined partition would have " + std::to_string(pieces) +
                                              " pieces; the bound is " + std::to_string(kMaxAtlasPieces));
  }

  // Jump points at 0, 10, 20, ...; additions spread evenly inside each interval.
  std::vector<Rational> t;
  for (std::size_t a = 1; a <= n; ++a) t.emplace_back(static_cast<long>(10 * (a - 1)));
  std::map<PieceId, std::vector<Rational>> additions;
  for (const auto& [alpha, count] : config.additions) {
    const long lo = alpha == 0 ? -10 : static_cast<long>(10 * (alpha - 1));
    for (std::size_t j = 1; j <= count; ++j) {
      Rational x(static_cast<long>(10 * j), static_cast<long>(count + 1));
      x.canonicalize();
      additions[alpha].push_back(lo + x);
    }
  }
  const auto refinement = refine_real_line(build_real_line_partition(t), additions);
  const auto& base = refinement.base();

  std::vector<PieceId> intervals(n + 1), points(n);
  std::iota(intervals.begin(), intervals.end(), PieceId{0});
  std::iota(points.begin(), points.end(), PieceId{n + 1});

  std::vector<Instance> out;
  std::vector<PieceId> interval_images = intervals;
  do {
    bool admissible = true;
    for (std::size_t a = 0; a <= n; ++a) {
      if (refinement.added_count(a) != refinement.added_count(interval_images[a])) admissible = false;
    }
    if (!admissible) continue;
    std::vector<PieceId> point_images = points;
    do {
      std::vector<PieceId> perm(base.size());
      for (std::size_t a = 0; a <= n; ++a) perm[a] = interval_images[a];
      for (std::size_t a = 0; a < n; ++a) perm[n + 1 + a] = point_images[a];
      PieceMap base_map(std::move(perm));
      LiftEnumerator lifts(refinement, base_map);
      while (auto m = lifts.next()) out.push_back({refinement, base_map, std::move(*m)});
    } while (std::next_permutation(point_images.begin(), point_images.end()));
  } while (std::next_permutation(interval_images.begin(), interval_images.end()));
  return out;
}

std::vector<AtlasConfig> two_point_configs() {
  return {AtlasConfig{0, {{0, 2}}}, AtlasConfig{1, {{0, 1}, {1, 1}}}};
}

}  // namespace xcomm
