#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "xcomm/crossed.hpp"
#include "xcomm/dynamics.hpp"
#include "xcomm/partition.hpp"

namespace xcomm {

/// The subalgebra of functions constant on the pieces of `sub`, sitting
/// inside the crossed product over the finer `ambient` partition.
struct SubalgebraView {
  Partition ambient;
  Partition sub;
  std::vector<PieceId> embed;  // ambient piece -> containing sub piece

  static SubalgebraView whole(const Partition& partition);
  /// A = base-piecewise constants inside the refined crossed product.
  static SubalgebraView coarse(const Refinement& refinement);
  /// A_S = refined-piecewise constants inside the refined crossed product.
  static SubalgebraView fine(const Refinement& refinement);
};

/// The permutation induced on sub pieces. Throws MapDoesNotDescend when the
/// ambient map sends two pieces of one sub piece into different sub pieces.
PieceMap descend(const SubalgebraView& view, const PieceMap& ambient_map);

/// Sep^n via cycle classes: P is separated iff the period of embed(P) does
/// not divide n. Sorted ambient ids.
std::vector<PieceId> sep_set(const SubalgebraView& view, const PieceMap& map, Degree n);

/// Sep^n straight from the definition: P is separated iff some generator
/// chi_Q of the subalgebra differs from sigma~^n(chi_Q) on P.
std::vector<PieceId> brute_force_sep(const SubalgebraView& view, const PieceMap& map, Degree n);

/// The commutant A' described by its cycle classes and the divisibility rule:
/// f_n may be nonzero exactly on ambient pieces whose sub piece has period
/// k dividing n. Valid for every degree.
class CommutantDescription {
 public:
  CommutantDescription(SubalgebraView view, const PieceMap& map);

  const SubalgebraView& view() const noexcept { return view_; }
  /// Coarse classes C_k, listed as ambient ids.
  const std::map<std::size_t, std::vector<PieceId>>& classes() const noexcept { return classes_; }
  std::size_t period_of(PieceId ambient_id) const { return period_of_.at(ambient_id); }

  std::vector<PieceId> allowed(Degree n) const;
  std::vector<PieceId> separated(Degree n) const;
  bool is_allowed(Degree n, PieceId ambient_id) const;

 private:
  SubalgebraView view_;
  std::vector<std::size_t> period_of_;
  std::map<std::size_t, std::vector<PieceId>> classes_;
};

CommutantDescription commutant_description(const SubalgebraView& view, const PieceMap& map);

struct Membership {
  bool member = true;
  std::optional<std::pair<Degree, PieceId>> witness;  // first (degree, piece) violation
};

Membership is_in_commutant(const CrossedElement& element, const CommutantDescription& description);

/// For an element outside the commutant, a sub piece Q whose generator chi_Q
/// fails to commute with it. Returns nullopt for members after checking
/// commutation against `samples` random elements of the subalgebra drawn
/// from `rng`; throws LiftInconsistent if that sanity layer or the witness
/// search ever fails.
std::optional<PieceId> find_noncommuting_witness(const CrossedElement& element, const SubalgebraView& view,
                                                 const PieceMap& map, std::mt19937_64& rng,
                                                 std::size_t samples = 4);

/// Sep^n of A_S in A_S x Z, checked against the decomposition
/// Sep_A^n  u  U_{k | n} U_{l does not divide n/k} C~_{kl}.
std::vector<PieceId> refined_sep(const Refinement& refinement, const PieceMap& base_map,
                                 const PieceMap& refined_map, Degree n);

/// The right-hand side of that decomposition, computed from tilde classes
/// alone.
std::vector<PieceId> refined_sep_decomposition(const Refinement& refinement,
                                               const RefinedCycleClassification& rcc, Degree n);

/// What refining the partition removes from the commutant: at degree n, the
/// refined pieces allowed for A' (commutant of the coarse algebra in the
/// refined crossed product) but forbidden for A_S'.
class CommutantDifference {
 public:
  CommutantDifference(const Refinement& refinement, const PieceMap& base_map, const PieceMap& refined_map);

  const RefinedCycleClassification& tilde() const noexcept { return rcc_; }
  const CommutantDescription& coarse() const noexcept { return coarse_; }
  const CommutantDescription& fine() const noexcept { return fine_; }

  /// Union of C~_{kl} with k | n and l not dividing n/k.
  std::vector<PieceId> forbidden(Degree n) const;
  /// Tilde classes that ever contribute (l > 1), keyed by (k, l).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PieceId>> contributing() const;
  bool empty() const;

  /// element in A' but not in A_S'.
  bool in_difference(const CrossedElement& element) const;

 private:
  RefinedCycleClassification rcc_;
  CommutantDescription coarse_;
  CommutantDescription fine_;
};

CommutantDifference commutant_difference(const Refinement& refinement, const PieceMap& base_map,
                                         const PieceMap& refined_map);

/// Degrees n at which a piece of the given period lies in Sep^n, written as a
/// divisibility rule: "never", "n odd", "3∤n", ...
std::string separation_rule(std::size_t period);

/// Degrees at which C~_{kl} sits in the commutant difference: "k|n and kl∤n",
/// simplified to e.g. "n odd" or "3∤n" when k = 1.
std::string difference_rule(std::size_t k, std::size_t l);

}  // namespace xcomm
