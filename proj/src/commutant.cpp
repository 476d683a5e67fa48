#include "xcomm/commutant.hpp"

#include <algorithm>

#include "xcomm/error.hpp"

namespace xcomm {
namespace {

bool divides(std::size_t k, Degree n) {
  return n % static_cast<Degree>(k) == 0;
}

std::vector<PieceId> identity_embed(std::size_t n) {
  return PieceMap::identity(n).perm();
}

}  // namespace

SubalgebraView SubalgebraView::whole(const Partition& partition) {
  return {partition, partition, identity_embed(partition.size())};
}

SubalgebraView SubalgebraView::coarse(const Refinement& refinement) {
  return {refinement.refined(), refinement.base(), refinement.parent_map()};
}

SubalgebraView SubalgebraView::fine(const Refinement& refinement) {
  return whole(refinement.refined());
}

PieceMap descend(const SubalgebraView& view, const PieceMap& ambient_map) {
  if (ambient_map.size() != view.ambient.size() || view.embed.size() != view.ambient.size()) {
    throw Error(ErrorCode::PartitionMismatch, "map does not act on the ambient partition");
  }
  constexpr auto unset = static_cast<PieceId>(-1);
  std::vector<PieceId> coarse(view.sub.size(), unset);
  for (PieceId p = 0; p < ambient_map.size(); ++p) {
    const PieceId from = view.embed[p];
    const PieceId to = view.embed.at(ambient_map(p));
    if (coarse.at(from) == unset) {
      coarse[from] = to;
    } else if (coarse[from] != to) {
      throw Error(ErrorCode::MapDoesNotDescend, view.sub.label(from) + " is spread over " +
                                                    view.sub.label(coarse[from]) + " and " + view.sub.label(to));
    }
  }
  PieceMap out(std::move(coarse));
  if (!out.is_bijection()) {
    throw Error(ErrorCode::MapDoesNotDescend, "induced map on the subalgebra's pieces is not a bijection");
  }
  return out;
}

std::vector<PieceId> sep_set(const SubalgebraView& view, const PieceMap& map, Degree n) {
  const auto periods = cycle_classes(descend(view, map)).period_of;
  std::vector<PieceId> out;
  for (PieceId p = 0; p < view.ambient.size(); ++p) {
    if (!divides(periods[view.embed[p]], n)) out.push_back(p);
  }
  return out;
}

std::vector<PieceId> brute_force_sep(const SubalgebraView& view, const PieceMap& map, Degree n) {
  descend(view, map);
  std::vector<bool> separated(view.ambient.size(), false);
  for (PieceId q = 0; q < view.sub.size(); ++q) {
    CoefficientVector chi(view.ambient.size());
    for (PieceId p = 0; p < view.ambient.size(); ++p) {
      if (view.embed[p] == q) chi.values[p] = 1;
    }
    const auto shifted = sigma_tilde_pow(chi, map, n);
    for (PieceId p = 0; p < chi.size(); ++p) {
      if (chi.values[p] != shifted.values[p]) separated[p] = true;
    }
  }
  std::vector<PieceId> out;
  for (PieceId p = 0; p < separated.size(); ++p) {
    if (separated[p]) out.push_back(p);
  }
  return out;
}

CommutantDescription::CommutantDescription(SubalgebraView view, const PieceMap& map) : view_(std::move(view)) {
  const auto coarse_periods = cycle_classes(descend(view_, map)).period_of;
  period_of_.resize(view_.ambient.size());
  for (PieceId p = 0; p < period_of_.size(); ++p) {
    period_of_[p] = coarse_periods[view_.embed[p]];
    classes_[period_of_[p]].push_back(p);
  }
}

bool CommutantDescription::is_allowed(Degree n, PieceId ambient_id) const {
  return divides(period_of_.at(ambient_id), n);
}

std::vector<PieceId> CommutantDescription::allowed(Degree n) const {
  std::vector<PieceId> out;
  for (PieceId p = 0; p < period_of_.size(); ++p) {
    if (is_allowed(n, p)) out.push_back(p);
  }
  return out;
}

std::vector<PieceId> CommutantDescription::separated(Degree n) const {
  std::vector<PieceId> out;
  for (PieceId p = 0; p < period_of_.size(); ++p) {
    if (!is_allowed(n, p)) out.push_back(p);
  }
  return out;
}

CommutantDescription commutant_description(const SubalgebraView& view, const PieceMap& map) {
  return CommutantDescription(view, map);
}

Membership is_in_commutant(const CrossedElement& element, const CommutantDescription& description) {
  if (element.pieces() != description.view().ambient.size()) {
    throw Error(ErrorCode::PartitionMismatch, "element does not live on the ambient partition");
  }
  for (const auto& [n, f] : element.terms()) {
    for (PieceId p : f.support()) {
      if (!description.is_allowed(n, p)) return {false, std::pair{n, p}};
    }
  }
  return {};
}

std::optional<PieceId> find_noncommuting_witness(const CrossedElement& element, const SubalgebraView& view,
                                                 const PieceMap& map, std::mt19937_64& rng, std::size_t samples) {
  const std::size_t pieces = view.ambient.size();
  auto generator = [&](PieceId q) {
    CoefficientVector chi(pieces);
    for (PieceId p = 0; p < pieces; ++p) {
      if (view.embed[p] == q) chi.values[p] = 1;
    }
    return CrossedElement::monomial(std::move(chi), 0);
  };
  const bool member = is_in_commutant(element, CommutantDescription(view, map)).member;

  for (PieceId q = 0; q < view.sub.size(); ++q) {
    auto g = generator(q);
    if (multiply(element, g, map) != multiply(g, element, map)) {
      if (member) {
        throw Error(ErrorCode::LiftInconsistent, "commutant member fails to commute with " + view.sub.label(q));
      }
      return q;
    }
  }
  if (!member) throw Error(ErrorCode::LiftInconsistent, "non-member commutes with every generator");

  std::uniform_int_distribution<int> coeff(-6, 6);
  for (std::size_t s = 0; s < samples; ++s) {
    CrossedElement a(pieces);
    for (PieceId q = 0; q < view.sub.size(); ++q) {
      const int c = coeff(rng);
      Rational weight(c, 1 + c * c);
      weight.canonicalize();
      a += generator(q) * weight;
    }
    if (multiply(element, a, map) != multiply(a, element, map)) {
      throw Error(ErrorCode::LiftInconsistent, "commutant member fails to commute with a sampled element");
    }
  }
  return std::nullopt;
}

std::vector<PieceId> refined_sep_decomposition(const Refinement& refinement, const RefinedCycleClassification& rcc,
                                               Degree n) {
  std::vector<PieceId> out;
  for (PieceId c = 0; c < refinement.refined().size(); ++c) {
    const std::size_t k = rcc.base_period_of.at(refinement.parent_of(c));
    const std::size_t l = rcc.multiplier_of.at(c);
    const bool coarse = !divides(k, n);
    const bool tilde = !coarse && !divides(l, n / static_cast<Degree>(k));
    if (coarse || tilde) out.push_back(c);
  }
  return out;
}

std::vector<PieceId> refined_sep(const Refinement& refinement, const PieceMap& base_map, const PieceMap& refined_map,
                                 Degree n) {
  auto report = validate_refined_invariance(refinement, base_map, refined_map);
  if (!report.ok()) throw Error(ErrorCode::LiftInconsistent, report.violations.front().message);
  auto direct = sep_set(SubalgebraView::fine(refinement), refined_map, n);
  auto rcc = refined_cycle_classes(refinement, base_map, refined_map);
  if (direct != refined_sep_decomposition(refinement, rcc, n)) {
    throw Error(ErrorCode::LiftInconsistent, "Sep^" + std::to_string(n) + " does not decompose over tilde classes");
  }
  return direct;
}

CommutantDifference::CommutantDifference(const Refinement& refinement, const PieceMap& base_map,
                                         const PieceMap& refined_map)
    : rcc_(refined_cycle_classes(refinement, base_map, refined_map)),
      coarse_(SubalgebraView::coarse(refinement), refined_map),
      fine_(SubalgebraView::fine(refinement), refined_map) {
  auto report = validate_refined_invariance(refinement, base_map, refined_map);
  if (!report.ok()) throw Error(ErrorCode::LiftInconsistent, report.violations.front().message);
}

std::vector<PieceId> CommutantDifference::forbidden(Degree n) const {
  std::vector<PieceId> out;
  for (const auto& [kl, ids] : rcc_.tilde_classes) {
    const auto [k, l] = kl;
    if (divides(k, n) && !divides(l, n / static_cast<Degree>(k))) out.insert(out.end(), ids.begin(), ids.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::pair<std::size_t, std::size_t>, std::vector<PieceId>> CommutantDifference::contributing() const {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PieceId>> out;
  for (const auto& [kl, ids] : rcc_.tilde_classes) {
    if (kl.second > 1) out.emplace(kl, ids);
  }
  return out;
}

bool CommutantDifference::empty() const {
  return contributing().empty();
}

bool CommutantDifference::in_difference(const CrossedElement& element) const {
  return is_in_commutant(element, coarse_).member && !is_in_commutant(element, fine_).member;
}

CommutantDifference commutant_difference(const Refinement& refinement, const PieceMap& base_map,
                                         const PieceMap& refined_map) {
  return CommutantDifference(refinement, base_map, refined_map);
}

std::string separation_rule(std::size_t period) {
  if (period == 1) return "never";
  if (period == 2) return "n odd";
  return std::to_string(period) + "∤n";
}

std::string difference_rule(std::size_t k, std::size_t l) {
  if (l == 1) return "never";
  if (k == 1) return separation_rule(l);
  return std::to_string(k) + "|n and " + std::to_string(k * l) + "∤n";
}

}  // namespace xcomm
