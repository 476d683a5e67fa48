#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xcomm/partition.hpp"

namespace xcomm {

/// The action induced by sigma on the pieces of a partition: perm[i] is the
/// id of the piece that piece i is carried onto.
class PieceMap {
 public:
  PieceMap() = default;
  explicit PieceMap(std::vector<PieceId> perm) : perm_(std::move(perm)) {}

  static PieceMap identity(std::size_t n);

  std::size_t size() const noexcept { return perm_.size(); }
  PieceId operator()(PieceId id) const { return perm_.at(id); }
  const std::vector<PieceId>& perm() const noexcept { return perm_; }

  bool is_bijection() const;

  /// Requires is_bijection().
  PieceMap inverse() const;
  /// perm^n for any integer n (negative powers go through the inverse).
  PieceMap power(std::int64_t n) const;
  /// (*this)(other(i)).
  PieceMap after(const PieceMap& other) const;

  friend bool operator==(const PieceMap&, const PieceMap&) = default;
  friend auto operator<=>(const PieceMap&, const PieceMap&) = default;

 private:
  std::vector<PieceId> perm_;
};

enum class Rule {
  Length,          // perm length differs from the piece count
  Bijection,       // perm is not a bijection
  KindPreserving,  // Lemma 1: intervals onto intervals, jump points onto jump points
  RefinedSet,      // Lemma 2: the union of refined base intervals is invariant
  ChildCount,      // Lemma 3 / Lemma 6: equal child counts along a base orbit
  Lift,            // parent_of(refined(c)) == base(parent_of(c))
};

/// Name of the lemma a rule comes from, e.g. "Lemma 1". Abstract partitions
/// use the general-set lemma numbers.
std::string rule_name(Rule rule, Flavor flavor);

struct Violation {
  Rule rule;
  PieceId piece;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool mentions(Rule rule) const;
};

ValidationReport validate_invariance(const Partition& partition, const PieceMap& map);

ValidationReport validate_refined_invariance(const Refinement& refinement, const PieceMap& base_map,
                                             const PieceMap& refined_map);

/// Pieces grouped by their minimal period k (the classes C_k).
struct CycleClassification {
  std::vector<std::size_t> period_of;
  std::map<std::size_t, std::vector<PieceId>> classes;
};

CycleClassification cycle_classes(const PieceMap& map);

/// The orbit of one piece, starting at the piece itself.
std::vector<PieceId> cycle_of(const PieceMap& map, PieceId start);

struct RefinedCycleClassification {
  std::vector<std::size_t> base_period_of;     // indexed by base id
  std::vector<std::size_t> refined_period_of;  // indexed by refined id
  std::vector<std::size_t> multiplier_of;      // l, with refined period = k * l
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PieceId>> tilde_classes;
};

RefinedCycleClassification refined_cycle_classes(const Refinement& refinement, const PieceMap& base_map,
                                                 const PieceMap& refined_map);

/// Counts pi(l) of subinterval children of one parent interval by multiplier.
/// For abstract refinements every cell counts and p is s - 1, so that the
/// sum over l is always p + 1.
struct PiProfile {
  std::size_t k = 1;
  std::size_t p = 0;
  std::map<std::size_t, std::size_t> pi;

  friend bool operator==(const PiProfile&, const PiProfile&) = default;
};

/// Profile of the base cycle through `parent`, which must be an interval on
/// real-line refinements. Throws UnequalChildCounts when parents along the
/// cycle carry different numbers of children and LiftInconsistent when their
/// multiplier counts disagree.
PiProfile pi_profile(const Refinement& refinement, const RefinedCycleClassification& rcc,
                     const PieceMap& base_map, PieceId parent);

struct PiCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

PiCheck check_pi(const PiProfile& profile);

struct RealizedInstance {
  Refinement refinement;
  PieceMap base_map;
  PieceMap refined_map;
};

/// Builds a real-line instance with one base k-cycle of intervals, p points
/// added to each, whose subinterval multipliers reproduce `profile`.
RealizedInstance realize_pi(const PiProfile& profile);

}  // namespace xcomm
