#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "xcomm/crossed.hpp"
#include "xcomm/enumerate.hpp"

namespace xcomm {

using nlohmann::json;

/// An instance file: a partition (real-line or abstract), its refinement,
/// both maps, and the degree window used when materializing reports.
///
///   {"type": "real_line", "jump_points": ["0", "10"],
///    "additions": {"1": ["3", "7"]},
///    "base_perm": [2, 1, 0, 4, 3], "refined_perm": [...], "window": 3}
///
///   {"type": "abstract", "cardinality": 2, "cells": {"0": 3, "1": 3},
///    "base_perm": [1, 0], "refined_perm": [...]}
///
/// "perm" is accepted in place of "base_perm". A missing refined_perm
/// defaults to base_perm when nothing is refined.
struct LoadedInstance {
  Instance instance;
  Degree window = 3;
};

struct InstanceParse {
  std::optional<LoadedInstance> loaded;
  std::vector<std::string> errors;  // "field: message"
};

InstanceParse parse_instance(const json& document);
json instance_to_json(const Instance& instance, std::optional<Degree> window = std::nullopt);

/// {"terms": {"<n>": ["p/q", ...]}}
json element_to_json(const CrossedElement& element);
CrossedElement element_from_json(const json& document, std::size_t pieces);

/// Full analysis: cycle classes, tilde classes, Sep^n / allowed(n) /
/// difference(n) for |n| <= window, the divisibility rules, and the
/// strong-grading verdict for the refined commutant.
json build_report(const Instance& instance, Degree window);
std::string render_report_text(const json& report);

/// Validation of both maps, rendered with lemma names.
json validation_to_json(const Instance& instance);

json atlas_to_json(const std::map<CaseSignature, CaseEntry>& cases);
std::string render_atlas_text(const std::map<CaseSignature, CaseEntry>& cases);

}  // namespace xcomm
