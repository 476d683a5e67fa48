#include "xcomm/io.hpp"

#include <sstream>

#include "xcomm/commutant.hpp"
#include "xcomm/error.hpp"

namespace xcomm {
namespace {

Rational rational_from(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational as a string or integer");
}

PieceId piece_key(const std::string& key) {
  std::size_t used = 0;
  unsigned long id = 0;
  try {
    id = std::stoul(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw Error(ErrorCode::ParseError, "\"" + key + "\" is not a piece id");
  return id;
}

std::optional<PieceMap> read_perm(const json& doc, const char* field, std::vector<std::string>& errors) {
  if (!doc.contains(field)) return std::nullopt;
  const auto& value = doc.at(field);
  if (!value.is_array()) {
    errors.push_back(std::string(field) + ": expected an array of piece ids");
    return std::nullopt;
  }
  std::vector<PieceId> perm;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number_unsigned() && !(value[i].is_number_integer() && value[i].get<long>() >= 0)) {
      errors.push_back(std::string(field) + "[" + std::to_string(i) + "]: expected a non-negative integer");
      return std::nullopt;
    }
    perm.push_back(value[i].get<PieceId>());
  }
  return PieceMap(std::move(perm));
}

json ids(const std::vector<PieceId>& v) {
  return json(v);
}

std::string tilde_key(std::size_t k, std::size_t l) {
  return std::to_string(k) + "," + std::to_string(l);
}

std::string join_labels(const json& ids_json, const json& labels) {
  std::string out;
  for (const auto& id : ids_json) {
    if (!out.empty()) out += ", ";
    out += labels.at(id.get<std::size_t>()).get<std::string>();
  }
  return out.empty() ? "∅" : "{" + out + "}";
}

}  // namespace

InstanceParse parse_instance(const json& doc) {
  InstanceParse result;
  auto& errors = result.errors;
  if (!doc.is_object()) {
    errors.push_back("<root>: expected a JSON object");
    return result;
  }
  const std::string type = doc.value("type", "");
  std::optional<Refinement> refinement;

  try {
    if (type == "real_line") {
      std::vector<Rational> t;
      if (doc.contains("jump_points")) {
        for (const auto& x : doc.at("jump_points")) t.push_back(rational_from(x));
      }
      std::map<PieceId, std::vector<Rational>> additions;
      if (doc.contains("additions")) {
        for (const auto& [key, points] : doc.at("additions").items()) {
          for (const auto& x : points) additions[piece_key(key)].push_back(rational_from(x));
        }
      }
      refinement = refine_real_line(build_real_line_partition(std::move(t)), additions);
    } else if (type == "abstract") {
      if (!doc.contains("cardinality") || !doc.at("cardinality").is_number_integer()) {
        errors.push_back("cardinality: required positive integer for abstract instances");
      } else {
        std::map<PieceId, std::size_t> cells;
        if (doc.contains("cells")) {
          for (const auto& [key, count] : doc.at("cells").items()) {
            if (!count.is_number_integer() || count.get<long>() < 0) {
              errors.push_back("cells." + key + ": expected a non-negative integer");
              continue;
            }
            cells[piece_key(key)] = count.get<std::size_t>();
          }
        }
        const long n = doc.at("cardinality").get<long>();
        refinement = refine_abstract(build_abstract_partition(n > 0 ? static_cast<std::size_t>(n) : 0), cells);
      }
    } else {
      errors.push_back("type: expected \"real_line\" or \"abstract\"");
    }
  } catch (const Error& e) {
    errors.push_back(std::string(type == "abstract" ? "cells" : "jump_points/additions") + ": " + e.what());
  } catch (const json::exception& e) {
    errors.push_back(std::string("partition: ") + e.what());
  }

  auto base_map = read_perm(doc, doc.contains("base_perm") ? "base_perm" : "perm", errors);
  auto refined_map = read_perm(doc, "refined_perm", errors);
  Degree window = 3;
  if (doc.contains("window")) {
    if (!doc.at("window").is_number_integer() || doc.at("window").get<long>() < 1) {
      errors.push_back("window: expected a positive integer");
    } else {
      window = doc.at("window").get<Degree>();
    }
  }
  if (!refinement || !errors.empty()) return result;

  if (!base_map) base_map = PieceMap::identity(refinement->base().size());
  if (!refined_map) {
    if (!refinement->is_identity()) {
      errors.push_back("refined_perm: required when points or cells are added");
      return result;
    }
    refined_map = base_map;
  }
  result.loaded = LoadedInstance{{std::move(*refinement), std::move(*base_map), std::move(*refined_map)}, window};
  return result;
}

json instance_to_json(const Instance& instance, std::optional<Degree> window) {
  const auto& r = instance.refinement;
  json out;
  if (r.base().is_real_line()) {
    out["type"] = "real_line";
    json t = json::array();
    for (const auto& x : r.base().jump_points()) t.push_back(to_string(x));
    out["jump_points"] = t;
    json additions = json::object();
    for (const auto& [alpha, points] : r.added_points()) {
      json pts = json::array();
      for (const auto& x : points) pts.push_back(to_string(x));
      additions[std::to_string(alpha)] = pts;
    }
    out["additions"] = additions;
  } else {
    out["type"] = "abstract";
    out["cardinality"] = r.base().size();
    json cells = json::object();
    for (PieceId b = 0; b < r.base().size(); ++b) {
      if (r.children_of(b).size() > 1) cells[std::to_string(b)] = r.children_of(b).size();
    }
    out["cells"] = cells;
  }
  out["base_perm"] = instance.base_map.perm();
  out["refined_perm"] = instance.refined_map.perm();
  if (window) out["window"] = *window;
  return out;
}

json element_to_json(const CrossedElement& element) {
  json terms = json::object();
  for (const auto& [n, f] : element.terms()) {
    json values = json::array();
    for (const auto& x : f.values) values.push_back(to_string(x));
    terms[std::to_string(n)] = values;
  }
  return json{{"terms", terms}};
}

CrossedElement element_from_json(const json& doc, std::size_t pieces) {
  CrossedElement e(pieces);
  if (!doc.contains("terms")) return e;
  for (const auto& [key, values] : doc.at("terms").items()) {
    Degree n = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "terms: \"" + key + "\" is not a degree");
    }
    if (values.size() != pieces) {
      throw Error(ErrorCode::PartitionMismatch, "terms." + key + ": expected " + std::to_string(pieces) + " values");
    }
    CoefficientVector f(pieces);
    for (std::size_t i = 0; i < pieces; ++i) f.values[i] = rational_from(values[i]);
    e.add_term(n, f);
  }
  return e;
}

json validation_to_json(const Instance& instance) {
  const auto& r = instance.refinement;
  auto report = validate_refined_invariance(r, instance.base_map, instance.refined_map);
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"lemma", rule_name(v.rule, r.base().flavor())}, {"piece", v.piece}, {"message", v.message}});
  }
  return json{{"ok", report.ok()}, {"violations", violations}};
}

json build_report(const Instance& instance, Degree window) {
  const auto& r = instance.refinement;
  const CommutantDifference diff(r, instance.base_map, instance.refined_map);
  const auto& rcc = diff.tilde();

  json report;
  report["flavor"] = r.base().is_real_line() ? "real_line" : "abstract";
  report["window"] = window;
  json labels = json::array(), base_labels = json::array();
  for (const auto& p : r.refined().pieces()) labels.push_back(p.label);
  for (const auto& p : r.base().pieces()) base_labels.push_back(p.label);
  report["labels"] = labels;
  report["base_labels"] = base_labels;
  report["parent_of"] = r.parent_map();

  const auto base_classes = cycle_classes(instance.base_map);
  json classes = json::object(), class_rules = json::object();
  for (const auto& [k, members] : base_classes.classes) {
    classes[std::to_string(k)] = ids(members);
    class_rules[std::to_string(k)] = separation_rule(k);
  }
  json tilde = json::object(), tilde_rules = json::object();
  for (const auto& [kl, members] : rcc.tilde_classes) {
    const auto [k, l] = kl;
    tilde[tilde_key(k, l)] = ids(members);
    tilde_rules[tilde_key(k, l)] = {{"separated", separation_rule(k * l)}, {"difference", difference_rule(k, l)}};
  }
  report["classes"] = classes;
  report["tilde_classes"] = tilde;
  report["rules"] = {{"classes", class_rules}, {"tilde_classes", tilde_rules}};

  json sep = json::object(), sep_base = json::object(), allowed = json::object(), difference = json::object();
  for (Degree n = -window; n <= window; ++n) {
    const auto key = std::to_string(n);
    sep[key] = ids(refined_sep(r, instance.base_map, instance.refined_map, n));
    sep_base[key] = ids(diff.coarse().separated(n));
    allowed[key] = ids(diff.fine().allowed(n));
    difference[key] = ids(diff.forbidden(n));
  }
  report["sep"] = sep;
  report["sep_base"] = sep_base;
  report["allowed"] = allowed;
  report["difference"] = difference;

  const auto verdict = is_strongly_graded(diff.fine(), instance.refined_map, window);
  json grading = {{"strongly_graded", verdict.strongly_graded}, {"window", window}};
  if (verdict.witness) {
    grading["witness"] = {verdict.witness->first, verdict.witness->second};
    grading["product_rank"] = verdict.product_rank;
    grading["target_dim"] = verdict.target_dim;
  } else {
    grading["witness"] = nullptr;
  }
  report["grading"] = grading;
  return report;
}

std::string render_report_text(const json& report) {
  const auto& labels = report.at("labels");
  const auto& base_labels = report.at("base_labels");
  std::ostringstream out;

  out << "Pieces (" << labels.size() << "):";
  for (std::size_t i = 0; i < labels.size(); ++i) out << ' ' << i << '=' << labels[i].get<std::string>();
  out << "\n\nCycle classes C_k of the base map:\n";
  for (const auto& [k, members] : report.at("classes").items()) {
    out << "  C_" << k << " = " << join_labels(members, base_labels) << "   in Sep^n iff "
        << report.at("rules").at("classes").at(k).get<std::string>() << '\n';
  }
  out << "\nRefined classes C~_{kl}:\n";
  for (const auto& [kl, members] : report.at("tilde_classes").items()) {
    const auto& rule = report.at("rules").at("tilde_classes").at(kl);
    out << "  C~_{" << kl << "} = " << join_labels(members, labels) << "   in Sep^n iff "
        << rule.at("separated").get<std::string>() << ";  leaves the commutant when "
        << rule.at("difference").get<std::string>() << '\n';
  }

  out << "\nRule: f_n may be nonzero on a piece of period k exactly when k | n (all n in Z).\n";
  out << "\n   n | Sep_{A_S}^n | Sep_A^n | A'\\A_S' forbidden\n";
  const Degree window = report.at("window").get<Degree>();
  for (Degree n = -window; n <= window; ++n) {
    const auto key = std::to_string(n);
    out << "  " << (n < 0 ? "" : " ") << n << " | " << join_labels(report.at("sep").at(key), labels) << " | "
        << join_labels(report.at("sep_base").at(key), labels) << " | "
        << join_labels(report.at("difference").at(key), labels) << "\n";
  }

  const auto& grading = report.at("grading");
  out << "\nGrading (window " << grading.at("window").get<Degree>() << "): ";
  if (grading.at("strongly_graded").get<bool>()) {
    out << "strongly graded within the window\n";
  } else {
    const auto& w = grading.at("witness");
    out << "not strongly graded, witness (" << w[0].get<Degree>() << "," << w[1].get<Degree>() << "): rank "
        << grading.at("product_rank").get<std::size_t>() << " < dim " << grading.at("target_dim").get<std::size_t>()
        << '\n';
  }
  return out.str();
}

json atlas_to_json(const std::map<CaseSignature, CaseEntry>& cases) {
  json rows = json::array();
  for (const auto& [sig, entry] : cases) {
    json triples = json::array();
    for (const auto& [k, l, count] : sig.triples) triples.push_back({k, l, count});
    rows.push_back({{"signature", sig.to_string()},
                    {"triples", triples},
                    {"count", entry.count},
                    {"representative", instance_to_json(entry.representative)}});
  }
  return rows;
}

std::string render_atlas_text(const std::map<CaseSignature, CaseEntry>& cases) {
  std::ostringstream out;
  out << cases.size() << " distinct case" << (cases.size() == 1 ? "" : "s") << '\n';
  std::size_t row = 0;
  for (const auto& [sig, entry] : cases) {
    const auto& rep = entry.representative;
    const auto& fine = rep.refinement.refined();
    const auto& base = rep.refinement.base();
    out << "\n[" << ++row << "] signature " << sig.to_string() << "  (" << entry.count << " instance"
        << (entry.count == 1 ? "" : "s") << ")\n";
    out << "    base map:";
    for (PieceId b = 0; b < base.size(); ++b) {
      if (rep.base_map(b) != b) out << ' ' << base.label(b) << "->" << base.label(rep.base_map(b));
    }
    out << "\n    refined map:";
    for (PieceId c = 0; c < fine.size(); ++c) {
      if (rep.refined_map(c) != c) out << ' ' << fine.label(c) << "->" << fine.label(rep.refined_map(c));
    }
    out << '\n';
    for (const auto& [k, l, count] : sig.triples) {
      out << "    C~_{" << k << ',' << l << "}: " << count << " pieces leave the commutant when "
          << difference_rule(k, l) << '\n';
    }
    if (sig.triples.empty()) out << "    A_S' = A'\n";
  }
  return out.str();
}

}  // namespace xcomm
