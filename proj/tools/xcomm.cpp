#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "xcomm/cases.hpp"
#include "xcomm/error.hpp"
#include "xcomm/io.hpp"
#include "xcomm/selftest.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct InputError {
  std::vector<std::string> messages;
};

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

xcomm::LoadedInstance load(const std::string& path, const std::string& case_id) {
  if (!case_id.empty()) {
    try {
      return {xcomm::builtin_case(case_id).instance, 3};
    } catch (const xcomm::Error& e) {
      throw InputError{{e.what()}};
    }
  }
  if (path.empty()) throw InputError{{"an instance file or --case is required"}};
  std::ifstream in(path);
  if (!in) throw InputError{{path + ": cannot open file"}};
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  xcomm::json doc;
  try {
    doc = xcomm::json::parse(text);
  } catch (const xcomm::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InputError{{path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what()}};
  }
  auto parsed = xcomm::parse_instance(doc);
  if (!parsed.loaded) {
    for (auto& m : parsed.errors) m = path + ": " + m;
    throw InputError{std::move(parsed.errors)};
  }
  return std::move(*parsed.loaded);
}

int print_validation(const xcomm::Instance& instance, bool as_json) {
  const auto report = xcomm::validation_to_json(instance);
  if (as_json) {
    std::cout << report.dump(2) << '\n';
  } else if (report.at("ok").get<bool>()) {
    std::cout << "valid\n";
  } else {
    for (const auto& v : report.at("violations")) {
      std::cout << v.at("lemma").get<std::string>() << " violated: " << v.at("message").get<std::string>() << '\n';
    }
  }
  return report.at("ok").get<bool>() ? kOk : kViolation;
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("CROSSED_COMMUTANT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError{{std::string("CROSSED_COMMUTANT_SEED: not an unsigned integer: \"") + env + "\""}};
    }
  }
  return seed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact commutants in crossed products of piecewise constant function algebras"};
  app.require_subcommand(1);

  std::string file, case_id;
  bool as_json = false, as_text = false;

  auto* validate = app.add_subcommand("validate", "Check that both maps respect the partition and refinement");
  validate->add_option("file", file, "Instance JSON file");
  validate->add_option("--case,--paper-case", case_id, "Built-in fixture id, e.g. 6.1.2");
  validate->add_flag("--json", as_json, "Emit JSON");

  std::optional<xcomm::Degree> window;
  auto* report = app.add_subcommand("report", "Cycle classes, Sep^n tables, commutant difference and grading");
  report->add_option("file", file, "Instance JSON file");
  report->add_option("--case,--paper-case", case_id, "Built-in fixture id, e.g. 6.1.4");
  report->add_option("--window", window, "Largest |n| to tabulate")->check(CLI::Range(1, 64));
  auto* json_flag = report->add_flag("--json", as_json, "Emit JSON");
  report->add_flag("--text", as_text, "Emit text (default)")->excludes(json_flag);

  std::size_t jump_points = 0;
  std::vector<std::string> adds;
  bool two_points = false;
  auto* atlas = app.add_subcommand("atlas", "Enumerate and classify admissible dynamics");
  atlas->add_option("--jump-points", jump_points, "Number of jump points of the base partition");
  atlas->add_option("--add", adds, "alpha:count, points added into interval I_alpha (repeatable)");
  atlas->add_flag("--two-points,--paper-cases", two_points, "All ways of adding two jump points at minimal base size");
  atlas->add_flag("--json", as_json, "Emit JSON");

  std::uint64_t seed = 20240601;
  std::size_t iterations = 1000;
  auto* selftest = app.add_subcommand("selftest", "Randomized oracle and algebraic-law suites");
  selftest->add_option("--seed", seed, "Seed (CROSSED_COMMUTANT_SEED overrides)");
  selftest->add_option("--iterations", iterations, "Iterations per suite");

  auto* list = app.add_subcommand("cases", "List the built-in fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) {
      return print_validation(load(file, case_id).instance, as_json);
    }
    if (*report) {
      auto loaded = load(file, case_id);
      const auto& i = loaded.instance;
      if (!xcomm::validate_refined_invariance(i.refinement, i.base_map, i.refined_map).ok()) {
        return print_validation(i, as_json);
      }
      const auto doc = xcomm::build_report(loaded.instance, window.value_or(loaded.window));
      std::cout << (as_json ? doc.dump(2) + "\n" : xcomm::render_report_text(doc));
      return kOk;
    }
    if (*atlas) {
      std::vector<xcomm::AtlasConfig> configs;
      if (two_points) {
        configs = xcomm::two_point_configs();
      } else {
        xcomm::AtlasConfig config{jump_points, {}};
        for (const auto& entry : adds) {
          const auto colon = entry.find(':');
          std::size_t alpha = 0, count = 0, used_a = 0, used_c = 0;
          try {
            if (colon == std::string::npos) throw std::invalid_argument(entry);
            alpha = std::stoul(entry.substr(0, colon), &used_a);
            count = std::stoul(entry.substr(colon + 1), &used_c);
          } catch (const std::exception&) {
            used_a = 0;
          }
          if (used_a != colon || used_c != entry.size() - colon - 1) {
            throw InputError{{"--add: expected alpha:count, got \"" + entry + "\""}};
          }
          config.additions[alpha] += count;
        }
        configs.push_back(std::move(config));
      }
      std::map<xcomm::CaseSignature, xcomm::CaseEntry> cases;
      for (const auto& config : configs) xcomm::merge_cases(cases, xcomm::classify_cases(xcomm::atlas_instances(config)));
      std::cout << (as_json ? xcomm::atlas_to_json(cases).dump(2) + "\n" : xcomm::render_atlas_text(cases));
      return kOk;
    }
    if (*selftest) {
      const auto results = xcomm::run_selftest(effective_seed(seed), iterations);
      bool ok = true;
      for (const auto& r : results) {
        std::cout << r.name << ": " << r.passed << '/' << r.total << '\n';
        if (!r.ok()) {
          ok = false;
          std::cout << "  first counterexample: " << r.counterexample << '\n';
        }
      }
      return ok ? kOk : kViolation;
    }
    if (*list) {
      for (const auto& c : xcomm::builtin_cases()) std::cout << c.id << "  " << c.title << '\n';
      return kOk;
    }
  } catch (const InputError& e) {
    for (const auto& m : e.messages) std::cerr << "error: " << m << '\n';
    return kInputError;
  } catch (const xcomm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool input = e.code() == xcomm::ErrorCode::ParseError || e.code() == xcomm::ErrorCode::ScaleExceeded ||
                       e.code() == xcomm::ErrorCode::PointOutsideInterval ||
                       e.code() == xcomm::ErrorCode::InvalidArgument;
    return input ? kInputError : kViolation;
  }
  return kOk;
}
