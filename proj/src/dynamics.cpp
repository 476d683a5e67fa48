#include "xcomm/dynamics.hpp"

#include <algorithm>
#include <numeric>

#include "xcomm/error.hpp"

namespace xcomm {

PieceMap PieceMap::identity(std::size_t n) {
  std::vector<PieceId> perm(n);
  std::iota(perm.begin(), perm.end(), PieceId{0});
  return PieceMap(std::move(perm));
}

bool PieceMap::is_bijection() const {
  std::vector<bool> hit(perm_.size(), false);
  for (PieceId target : perm_) {
    if (target >= perm_.size() || hit[target]) return false;
    hit[target] = true;
  }
  return true;
}

PieceMap PieceMap::inverse() const {
  if (!is_bijection()) throw Error(ErrorCode::InvalidPermutation, "cannot invert a non-bijection");
  std::vector<PieceId> inv(perm_.size());
  for (PieceId i = 0; i < perm_.size(); ++i) inv[perm_[i]] = i;
  return PieceMap(std::move(inv));
}

PieceMap PieceMap::power(std::int64_t n) const {
  PieceMap base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  PieceMap result = identity(perm_.size());
  while (e > 0) {
    if (e & 1u) result = base.after(result);
    base = base.after(base);
    e >>= 1u;
  }
  return result;
}

PieceMap PieceMap::after(const PieceMap& other) const {
  if (other.size() != size()) throw Error(ErrorCode::PartitionMismatch, "composing maps of different sizes");
  std::vector<PieceId> out(size());
  for (PieceId i = 0; i < size(); ++i) out[i] = perm_.at(other.perm_[i]);
  return PieceMap(std::move(out));
}

std::string rule_name(Rule rule, Flavor flavor) {
  const bool real = flavor == Flavor::RealLine;
  switch (rule) {
    case Rule::Length: return "length";
    case Rule::Bijection: return real ? "Lemma 1" : "Lemma 5";
    case Rule::KindPreserving: return "Lemma 1";
    case Rule::RefinedSet: return "Lemma 2";
    case Rule::ChildCount: return real ? "Lemma 3" : "Lemma 6";
    case Rule::Lift: return "lift law";
  }
  return "unknown";
}

bool ValidationReport::mentions(Rule rule) const {
  for (const auto& v : violations) {
    if (v.rule == rule) return true;
  }
  return false;
}

ValidationReport validate_invariance(const Partition& partition, const PieceMap& map) {
  ValidationReport report;
  if (map.size() != partition.size()) {
    report.violations.push_back({Rule::Length, 0,
                                 "map has " + std::to_string(map.size()) + " entries for " +
                                     std::to_string(partition.size()) + " pieces"});
    return report;
  }
  std::vector<std::size_t> hits(map.size(), 0);
  for (PieceId i = 0; i < map.size(); ++i) {
    PieceId j = map(i);
    if (j >= map.size()) {
      report.violations.push_back({Rule::Bijection, i,
                                   "piece " + std::to_string(i) + " (" + partition.label(i) +
                                       ") maps to nonexistent piece " + std::to_string(j)});
      continue;
    }
    if (++hits[j] == 2) {
      report.violations.push_back({Rule::Bijection, j,
                                   "piece " + std::to_string(j) + " (" + partition.label(j) +
                                       ") is hit more than once"});
    }
    if (partition.is_real_line() && partition.kind(i) != partition.kind(j)) {
      report.violations.push_back(
          {Rule::KindPreserving, i,
           "piece " + std::to_string(i) + " (" + std::string(to_string(partition.kind(i))) + ") ↦ piece " +
               std::to_string(j) + " (" + std::string(to_string(partition.kind(j))) + ")"});
    }
  }
  return report;
}

ValidationReport validate_refined_invariance(const Refinement& refinement, const PieceMap& base_map,
                                             const PieceMap& refined_map) {
  const auto& base = refinement.base();
  const auto& fine = refinement.refined();
  ValidationReport report = validate_invariance(base, base_map);
  for (auto& v : validate_invariance(fine, refined_map).violations) {
    const bool repeated = std::any_of(report.violations.begin(), report.violations.end(), [&](const Violation& w) {
      return w.rule == v.rule && w.message == v.message;
    });
    if (!repeated) report.violations.push_back(std::move(v));
  }
  if (report.mentions(Rule::Length) || report.mentions(Rule::Bijection)) return report;

  for (PieceId b = 0; b < base.size(); ++b) {
    PieceId image = base_map(b);
    const std::size_t here = refinement.children_of(b).size();
    const std::size_t there = refinement.children_of(image).size();
    if (base.is_real_line() && base.kind(b) == PieceKind::Interval) {
      const std::size_t p = refinement.added_count(b);
      const std::size_t q = refinement.added_count(image);
      if ((p > 0) != (q > 0)) {
        report.violations.push_back({Rule::RefinedSet, b,
                                     base.label(b) + " ↦ " + base.label(image) +
                                         " leaves the union of refined intervals"});
      }
    }
    if (here != there) {
      report.violations.push_back({Rule::ChildCount, b,
                                   base.label(b) + " has " + std::to_string(here) + " children but its image " +
                                       base.label(image) + " has " + std::to_string(there)});
    }
  }

  for (PieceId c = 0; c < fine.size(); ++c) {
    PieceId expected = base_map(refinement.parent_of(c));
    PieceId actual = refinement.parent_of(refined_map(c));
    if (expected != actual) {
      report.violations.push_back({Rule::Lift, c,
                                   fine.label(c) + " ↦ " + fine.label(refined_map(c)) + " lies in " +
                                       base.label(actual) + ", expected " + base.label(expected)});
    }
  }
  return report;
}

std::vector<PieceId> cycle_of(const PieceMap& map, PieceId start) {
  std::vector<PieceId> cycle{start};
  for (PieceId x = map(start); x != start; x = map(x)) {
    cycle.push_back(x);
    if (cycle.size() > map.size()) throw Error(ErrorCode::InvalidPermutation, "map is not a bijection");
  }
  return cycle;
}

CycleClassification cycle_classes(const PieceMap& map) {
  if (!map.is_bijection()) throw Error(ErrorCode::InvalidPermutation, "map is not a bijection");
  CycleClassification out;
  out.period_of.assign(map.size(), 0);
  for (PieceId i = 0; i < map.size(); ++i) {
    if (out.period_of[i] != 0) continue;
    auto cycle = cycle_of(map, i);
    for (PieceId x : cycle) out.period_of[x] = cycle.size();
  }
  for (PieceId i = 0; i < map.size(); ++i) out.classes[out.period_of[i]].push_back(i);
  return out;
}

RefinedCycleClassification refined_cycle_classes(const Refinement& refinement, const PieceMap& base_map,
                                                 const PieceMap& refined_map) {
  if (base_map.size() != refinement.base().size() || refined_map.size() != refinement.refined().size()) {
    throw Error(ErrorCode::PartitionMismatch, "map sizes do not match the refinement");
  }
  RefinedCycleClassification out;
  out.base_period_of = cycle_classes(base_map).period_of;
  out.refined_period_of = cycle_classes(refined_map).period_of;
  out.multiplier_of.resize(refined_map.size());
  for (PieceId c = 0; c < refined_map.size(); ++c) {
    const std::size_t k = out.base_period_of[refinement.parent_of(c)];
    const std::size_t period = out.refined_period_of[c];
    if (period % k != 0) {
      throw Error(ErrorCode::LiftInconsistent, refinement.refined().label(c) + " has period " +
                                                   std::to_string(period) + ", not a multiple of " +
                                                   std::to_string(k));
    }
    out.multiplier_of[c] = period / k;
    out.tilde_classes[{k, period / k}].push_back(c);
  }
  return out;
}

PiProfile pi_profile(const Refinement& refinement, const RefinedCycleClassification& rcc,
                     const PieceMap& base_map, PieceId parent) {
  const auto& base = refinement.base();
  const bool real = base.is_real_line();
  if (parent >= base.size() || (real && base.kind(parent) != PieceKind::Interval)) {
    throw Error(ErrorCode::UnknownPiece, "pi profiles are taken over an interval parent");
  }
  auto cycle = cycle_of(base_map, parent);
  std::optional<PiProfile> first;
  for (PieceId b : cycle) {
    auto slots = refinement.interval_children(b);
    PiProfile profile;
    profile.k = cycle.size();
    profile.p = real ? refinement.added_count(b) : slots.size() - 1;
    for (PieceId c : slots) ++profile.pi[rcc.multiplier_of.at(c)];
    if (!first) {
      first = std::move(profile);
      continue;
    }
    if (profile.p != first->p) {
      throw Error(ErrorCode::UnequalChildCounts, base.label(b) + " carries " + std::to_string(profile.p) +
                                                     " added points, " + base.label(parent) + " carries " +
                                                     std::to_string(first->p));
    }
    if (profile.pi != first->pi) {
      throw Error(ErrorCode::LiftInconsistent,
                  "multiplier counts of " + base.label(b) + " and " + base.label(parent) + " differ");
    }
  }
  return *first;
}

PiCheck check_pi(const PiProfile& profile) {
  PiCheck check;
  std::size_t total = 0;
  for (const auto& [l, count] : profile.pi) {
    if (count == 0) continue;
    total += count;
    if (l == 0 || l > profile.p + 1) {
      check.problems.push_back("multiplier " + std::to_string(l) + " is outside 1.." +
                               std::to_string(profile.p + 1));
    } else if (count % l != 0) {
      check.problems.push_back(std::to_string(l) + " does not divide pi(" + std::to_string(l) +
                               ") = " + std::to_string(count));
    }
  }
  if (total != profile.p + 1) {
    check.problems.push_back("pi sums to " + std::to_string(total) + ", expected p+1 = " +
                             std::to_string(profile.p + 1));
  }
  check.ok = check.problems.empty();
  return check;
}

RealizedInstance realize_pi(const PiProfile& profile) {
  auto check = check_pi(profile);
  if (!check.ok || profile.k == 0) {
    throw Error(ErrorCode::InfeasibleProfile, check.problems.empty() ? "k must be positive" : check.problems.front());
  }
  const std::size_t k = profile.k;
  const std::size_t p = profile.p;
  const std::size_t width = p + 1;

  // Interval alpha spans (alpha*width, (alpha+1)*width); its added points are
  // the integers strictly inside.
  std::vector<Rational> t;
  for (std::size_t a = 1; a < k; ++a) t.emplace_back(static_cast<long>(a * width));
  std::map<PieceId, std::vector<Rational>> additions;
  for (std::size_t a = 0; a < k && p > 0; ++a) {
    for (std::size_t j = 1; j <= p; ++j) additions[a].emplace_back(static_cast<long>(a * width + j));
  }
  Partition base = build_real_line_partition(t);
  Refinement refinement = refine_real_line(base, additions);

  std::vector<PieceId> base_perm = PieceMap::identity(base.size()).perm();
  for (std::size_t a = 0; a < k; ++a) base_perm[a] = (a + 1) % k;

  std::vector<std::vector<PieceId>> sub(k), pts(k);
  for (std::size_t a = 0; a < k; ++a) {
    sub[a] = refinement.interval_children(a);
    pts[a] = refinement.point_children(a);
  }

  std::vector<PieceId> fine = PieceMap::identity(refinement.refined().size()).perm();
  // Slots are grouped into blocks of l consecutive subintervals; a block's
  // k*l subintervals form one cycle that steps through the parents in order
  // and advances one slot whenever it wraps back to parent 0.
  std::size_t slot = 0;
  for (const auto& [l, count] : profile.pi) {
    for (std::size_t block = 0; block < count / l; ++block, slot += l) {
      for (std::size_t j = 0; j < l; ++j) {
        for (std::size_t a = 0; a < k; ++a) {
          std::size_t next_a = (a + 1) % k;
          std::size_t next_j = next_a == 0 ? (j + 1) % l : j;
          fine[sub[a][slot + j]] = sub[next_a][slot + next_j];
        }
      }
    }
  }
  // Added points ride along with their parents slot for slot.
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t j = 0; j < pts[a].size(); ++j) fine[pts[a][j]] = pts[(a + 1) % k][j];
  }
  return {std::move(refinement), PieceMap(std::move(base_perm)), PieceMap(std::move(fine))};
}

}  // namespace xcomm
