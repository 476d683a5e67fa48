#include "xcomm/partition.hpp"

#include <algorithm>
#include <set>

#include "xcomm/error.hpp"

namespace xcomm {

std::string_view to_string(PieceKind kind) noexcept {
  return kind == PieceKind::Interval ? "Interval" : "Point";
}

std::size_t Partition::interval_count() const noexcept {
  if (!is_real_line()) return pieces_.size();
  return jump_points_.size() + 1;
}

PieceId Partition::locate(const Rational& x) const {
  if (!is_real_line()) {
    throw Error(ErrorCode::PartitionMismatch, "locate() needs a real-line partition");
  }
  auto it = std::lower_bound(jump_points_.begin(), jump_points_.end(), x);
  auto alpha = static_cast<std::size_t>(it - jump_points_.begin());
  if (it != jump_points_.end() && *it == x) return interval_count() + alpha;
  return alpha;
}

Partition build_real_line_partition(std::vector<Rational> jump_points) {
  for (std::size_t i = 1; i < jump_points.size(); ++i) {
    if (!(jump_points[i - 1] < jump_points[i])) {
      throw Error(ErrorCode::NonIncreasingPoints,
                  "jump point " + std::to_string(i + 1) + " (" + to_string(jump_points[i]) +
                      ") does not exceed its predecessor (" + to_string(jump_points[i - 1]) + ")");
    }
  }
  Partition p;
  p.flavor_ = Flavor::RealLine;
  const std::size_t n = jump_points.size();
  p.pieces_.reserve(2 * n + 1);
  for (std::size_t a = 0; a <= n; ++a) {
    p.pieces_.push_back({a, PieceKind::Interval, std::nullopt, "I_" + std::to_string(a)});
  }
  for (std::size_t a = 1; a <= n; ++a) {
    p.pieces_.push_back({n + a, PieceKind::Point, std::nullopt, "{t_" + std::to_string(a) + "}"});
  }
  p.jump_points_ = std::move(jump_points);
  return p;
}

Partition build_abstract_partition(std::size_t cardinality) {
  if (cardinality == 0) {
    throw Error(ErrorCode::ZeroCellCount, "an abstract partition needs at least one piece");
  }
  Partition p;
  p.flavor_ = Flavor::Abstract;
  for (std::size_t i = 0; i < cardinality; ++i) {
    p.pieces_.push_back({i, PieceKind::Interval, std::nullopt, "X_" + std::to_string(i)});
  }
  return p;
}

struct RefinementBuilder {
  static Refinement finish(Partition base, Partition refined, std::vector<PieceId> parent_of,
                           std::map<PieceId, std::vector<Rational>> added) {
    Refinement r;
    r.children_.assign(base.size(), {});
    // Refined ids are already in canonical order, so grouping by parent keeps
    // subintervals before points and both left to right.
    for (PieceId c = 0; c < parent_of.size(); ++c) {
      r.children_.at(parent_of[c]).push_back(c);
      refined.pieces_[c].parent = parent_of[c];
    }
    r.base_ = std::move(base);
    r.refined_ = std::move(refined);
    r.parent_of_ = std::move(parent_of);
    r.added_points_ = std::move(added);
    return r;
  }

  static Refinement real_line(const Partition& base,
                              const std::map<PieceId, std::vector<Rational>>& additions) {
    const auto& t = base.jump_points();
    const std::size_t intervals = base.interval_count();
    std::set<Rational> seen(t.begin(), t.end());
    std::map<PieceId, std::vector<Rational>> added;

    for (const auto& [alpha, points] : additions) {
      if (alpha >= intervals) {
        throw Error(ErrorCode::PointOutsideInterval,
                    "piece " + std::to_string(alpha) + " is not an interval of the base partition");
      }
      std::vector<Rational> sorted = points;
      std::sort(sorted.begin(), sorted.end());
      for (const auto& s : sorted) {
        if (!seen.insert(s).second) {
          throw Error(ErrorCode::DuplicatePoint, "point " + to_string(s) + " is already a jump point or listed twice");
        }
        bool above = alpha == 0 || t[alpha - 1] < s;
        bool below = alpha == intervals - 1 || s < t[alpha];
        if (!above || !below) {
          throw Error(ErrorCode::PointOutsideInterval,
                      "point " + to_string(s) + " is not inside " + base.label(alpha));
        }
      }
      if (!sorted.empty()) added.emplace(alpha, std::move(sorted));
    }

    std::vector<Rational> all(seen.begin(), seen.end());
    Partition refined = build_real_line_partition(all);
    const std::size_t fine_intervals = refined.interval_count();
    std::vector<PieceId> parent_of(refined.size());

    // Walk the fine intervals left to right; each coarse interval alpha
    // covers added(alpha).size() + 1 consecutive fine intervals.
    PieceId fine = 0;
    for (PieceId alpha = 0; alpha < intervals; ++alpha) {
      auto it = added.find(alpha);
      std::size_t p = it == added.end() ? 0 : it->second.size();
      for (std::size_t j = 1; j <= p + 1; ++j, ++fine) {
        parent_of[fine] = alpha;
        refined.pieces_[fine].label =
            p == 0 ? base.label(alpha) : base.label(alpha) + "^" + std::to_string(j);
      }
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
      PieceId fine_point = fine_intervals + k;
      PieceId coarse = base.locate(all[k]);
      parent_of[fine_point] = coarse;
      if (base.kind(coarse) == PieceKind::Point) {
        refined.pieces_[fine_point].label = base.label(coarse);
      } else {
        const auto& pts = added.at(coarse);
        auto j = static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), all[k]) - pts.begin());
        refined.pieces_[fine_point].label =
            base.label(coarse) + "^" + std::to_string(pts.size() + 2 + j);
      }
    }
    return finish(base, std::move(refined), std::move(parent_of), std::move(added));
  }

  static Refinement abstract(const Partition& base, const std::map<PieceId, std::size_t>& cell_counts) {
    for (const auto& [id, count] : cell_counts) {
      if (id >= base.size()) {
        throw Error(ErrorCode::UnknownPiece, "no piece " + std::to_string(id) + " in the base partition");
      }
      if (count == 0) {
        throw Error(ErrorCode::ZeroCellCount, base.label(id) + " must keep at least one cell");
      }
    }
    Partition refined;
    refined.flavor_ = Flavor::Abstract;
    std::vector<PieceId> parent_of;
    for (PieceId i = 0; i < base.size(); ++i) {
      auto it = cell_counts.find(i);
      std::size_t s = it == cell_counts.end() ? 1 : it->second;
      for (std::size_t r = 1; r <= s; ++r) {
        PieceId id = refined.pieces_.size();
        std::string label = s == 1 ? base.label(i) : base.label(i) + "." + std::to_string(r);
        refined.pieces_.push_back({id, PieceKind::Interval, std::nullopt, std::move(label)});
        parent_of.push_back(i);
      }
    }
    return finish(base, std::move(refined), std::move(parent_of), {});
  }

  static Refinement compose(const Refinement& inner, const Refinement& outer) {
    if (!(inner.refined() == outer.base())) {
      throw Error(ErrorCode::PartitionMismatch, "refinements do not chain");
    }
    std::vector<PieceId> parent_of(outer.refined().size());
    for (PieceId c = 0; c < parent_of.size(); ++c) {
      parent_of[c] = inner.parent_of(outer.parent_of(c));
    }
    std::map<PieceId, std::vector<Rational>> added;
    if (inner.base().is_real_line()) {
      const auto& coarse = inner.base();
      const auto& coarse_t = coarse.jump_points();
      for (const auto& x : outer.refined().jump_points()) {
        if (std::binary_search(coarse_t.begin(), coarse_t.end(), x)) continue;
        added[coarse.locate(x)].push_back(x);
      }
    }
    Partition refined = outer.refined();
    for (auto& piece : refined.pieces_) piece.parent.reset();
    return finish(inner.base(), std::move(refined), std::move(parent_of), std::move(added));
  }
};

std::vector<PieceId> Refinement::interval_children(PieceId base_id) const {
  std::vector<PieceId> out;
  for (PieceId c : children_.at(base_id)) {
    if (refined_.kind(c) == PieceKind::Interval) out.push_back(c);
  }
  return out;
}

std::vector<PieceId> Refinement::point_children(PieceId base_id) const {
  std::vector<PieceId> out;
  if (!refined_.is_real_line()) return out;
  for (PieceId c : children_.at(base_id)) {
    if (refined_.kind(c) == PieceKind::Point) out.push_back(c);
  }
  return out;
}

std::size_t Refinement::added_count(PieceId base_id) const {
  auto it = added_points_.find(base_id);
  return it == added_points_.end() ? 0 : it->second.size();
}

Refinement refine_real_line(const Partition& base,
                            const std::map<PieceId, std::vector<Rational>>& additions) {
  if (!base.is_real_line()) {
    throw Error(ErrorCode::PartitionMismatch, "refine_real_line needs a real-line partition");
  }
  return RefinementBuilder::real_line(base, additions);
}

Refinement refine_abstract(const Partition& base, const std::map<PieceId, std::size_t>& cell_counts) {
  if (base.is_real_line()) {
    throw Error(ErrorCode::PartitionMismatch, "refine_abstract needs an abstract partition");
  }
  return RefinementBuilder::abstract(base, cell_counts);
}

Refinement identity_refinement(const Partition& base) {
  return base.is_real_line() ? RefinementBuilder::real_line(base, {})
                             : RefinementBuilder::abstract(base, {});
}

Refinement compose(const Refinement& inner, const Refinement& outer) {
  return RefinementBuilder::compose(inner, outer);
}

}  // namespace xcomm
