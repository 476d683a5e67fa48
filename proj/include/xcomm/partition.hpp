#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xcomm/rational.hpp"

namespace xcomm {

using PieceId = std::size_t;

enum class PieceKind { Interval, Point };

std::string_view to_string(PieceKind kind) noexcept;

struct Piece {
  PieceId id = 0;
  PieceKind kind = PieceKind::Interval;
  std::optional<PieceId> parent;
  std::string label;

  friend bool operator==(const Piece&, const Piece&) = default;
};

enum class Flavor { RealLine, Abstract };

/// A finite partition of the underlying set into labeled pieces.
///
/// Real-line partitions with jump points t_1 < ... < t_N hold 2N+1 pieces:
/// the open intervals I_0..I_N left to right, followed by the jump points
/// {t_1}..{t_N} as zero-length Point pieces. Abstract partitions hold
/// kind-free pieces (stored as Interval and never inspected).
class Partition {
 public:
  Partition() = default;

  Flavor flavor() const noexcept { return flavor_; }
  bool is_real_line() const noexcept { return flavor_ == Flavor::RealLine; }

  std::size_t size() const noexcept { return pieces_.size(); }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  const Piece& piece(PieceId id) const { return pieces_.at(id); }
  const std::string& label(PieceId id) const { return pieces_.at(id).label; }
  PieceKind kind(PieceId id) const { return pieces_.at(id).kind; }

  /// Jump points, strictly increasing. Empty for abstract partitions.
  const std::vector<Rational>& jump_points() const noexcept { return jump_points_; }
  std::size_t interval_count() const noexcept;

  /// Id of the interval piece whose open interval contains x, or of the
  /// point piece equal to x. Real-line flavor only.
  PieceId locate(const Rational& x) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  friend Partition build_real_line_partition(std::vector<Rational> jump_points);
  friend Partition build_abstract_partition(std::size_t cardinality);
  friend struct RefinementBuilder;

  Flavor flavor_ = Flavor::Abstract;
  std::vector<Piece> pieces_;
  std::vector<Rational> jump_points_;
};

Partition build_real_line_partition(std::vector<Rational> jump_points);

/// Abstract partition {X_0, ..., X_{n-1}}. Requires n >= 1.
Partition build_abstract_partition(std::size_t cardinality);

/// A fine partition together with its coarse parent.
///
/// Children of every base piece are listed in canonical slot order:
/// subintervals left to right, then added points left to right (real line),
/// or cells X_{i,1}..X_{i,s} (abstract). Unrefined base pieces have exactly
/// one child, themselves.
class Refinement {
 public:
  const Partition& base() const noexcept { return base_; }
  const Partition& refined() const noexcept { return refined_; }

  PieceId parent_of(PieceId refined_id) const { return parent_of_.at(refined_id); }
  const std::vector<PieceId>& parent_map() const noexcept { return parent_of_; }
  const std::vector<PieceId>& children_of(PieceId base_id) const { return children_.at(base_id); }

  /// Child slots of kind Interval / Point (real-line flavor). For abstract
  /// refinements every child counts as an interval-like cell.
  std::vector<PieceId> interval_children(PieceId base_id) const;
  std::vector<PieceId> point_children(PieceId base_id) const;

  /// Points inserted into each base interval (real-line flavor only).
  const std::map<PieceId, std::vector<Rational>>& added_points() const noexcept {
    return added_points_;
  }
  std::size_t added_count(PieceId base_id) const;

  bool is_identity() const noexcept { return refined_.size() == base_.size(); }

 private:
  friend struct RefinementBuilder;

  Partition base_;
  Partition refined_;
  std::vector<PieceId> parent_of_;
  std::vector<std::vector<PieceId>> children_;
  std::map<PieceId, std::vector<Rational>> added_points_;
};

/// Inserts the given rationals into base intervals. Every added point must
/// lie strictly inside its target interval and be distinct from all other
/// jump points.
Refinement refine_real_line(const Partition& base,
                            const std::map<PieceId, std::vector<Rational>>& additions);

/// Splits X_i into cell_counts[i] cells; unlisted pieces keep one cell.
Refinement refine_abstract(const Partition& base, const std::map<PieceId, std::size_t>& cell_counts);

/// The trivial refinement of a partition by itself.
Refinement identity_refinement(const Partition& base);

/// Composes two refinements: coarse -> middle -> fine becomes coarse -> fine.
/// The middle partition of `outer` must equal the refined partition of `inner`.
Refinement compose(const Refinement& inner, const Refinement& outer);

}  // namespace xcomm
