#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "xcomm/commutant.hpp"
#include "xcomm/dynamics.hpp"
#include "xcomm/partition.hpp"

namespace xcomm {

/// A refinement with compatible dynamics on both levels.
struct Instance {
  Refinement refinement;
  PieceMap base_map;
  PieceMap refined_map;
};

/// Streams every refined map that lifts `base_map`: each base piece's
/// children are sent bijectively (and kind-preservingly on the real line)
/// onto the children of its image. Order is deterministic.
class LiftEnumerator {
 public:
  LiftEnumerator(const Refinement& refinement, const PieceMap& base_map);

  std::optional<PieceMap> next();

 private:
  struct Slot {
    std::vector<PieceId> from;
    std::vector<PieceId> to;
    std::vector<std::size_t> order;
  };

  PieceMap current() const;

  std::size_t pieces_;
  std::vector<Slot> slots_;
  bool done_ = false;
};

std::vector<PieceMap> enumerate_refined_maps(const Refinement& refinement, const PieceMap& base_map);

/// Number of lifts, counted as the product over base pieces of
/// (interval children)! * (point children)!.
std::uint64_t lift_count(const Refinement& refinement, const PieceMap& base_map);

/// Sorted (k, l, count) triples over the tilde classes that change the
/// commutant (l > 1). Equal signatures mean equal commutant differences up
/// to relabeling pieces.
struct CaseSignature {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples;

  std::string to_string() const;
  friend auto operator<=>(const CaseSignature&, const CaseSignature&) = default;
};

CaseSignature signature_of(const Instance& instance);

struct CaseEntry {
  Instance representative;
  std::size_t count = 0;
};

/// Groups instances by signature, keeping the least instance of each group
/// under (refined size, base size, base perm, refined perm).
std::map<CaseSignature, CaseEntry> classify_cases(const std::vector<Instance>& instances);

/// Merges two classifications; counts add, representatives take the minimum.
void merge_cases(std::map<CaseSignature, CaseEntry>& into, const std::map<CaseSignature, CaseEntry>& from);

std::uint64_t integer_partition_count(std::size_t n);

/// Sorted cycle lengths of a permutation restricted to an invariant set.
std::vector<std::size_t> cycle_type(const PieceMap& map, const std::vector<PieceId>& subset);

struct SubcaseCount {
  std::uint64_t formula = 0;  // p(k) p(k+1)
  std::uint64_t machine = 0;  // distinct (point type, subinterval type) pairs over all lifts
  bool agree() const noexcept { return formula == machine; }
};

/// Sub-cases of adding k points into one fixed interval.
SubcaseCount c1_subcase_count(std::size_t k);

/// Atlas configuration: a real-line base with `jump_points` jump points and
/// `additions[alpha]` points added into interval alpha.
struct AtlasConfig {
  std::size_t jump_points = 0;
  std::map<PieceId, std::size_t> additions;
};

inline constexpr std::size_t kMaxAtlasPieces = 14;

/// Every admissible (base map, lift) pair for the configuration. Throws
/// ScaleExceeded when the refined partition has more than kMaxAtlasPieces.
std::vector<Instance> atlas_instances(const AtlasConfig& config);

/// The configurations for adding two jump points at minimal base size:
/// both into one interval, or one each into two intervals.
std::vector<AtlasConfig> two_point_configs();

}  // namespace xcomm
