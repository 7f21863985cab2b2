// Command-line front end: list the catalog, classify a point, run
// transformation witnesses, run the verification suite, or explain an entry.
// Exit codes: 0 all requested checks pass, 1 at least one violation or
// witness failure, 2 usage or configuration error.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ineq/checker.hpp"

namespace {

using ineq::CatalogEntryInfo;
using ineq::EntryJob;
using ineq::EntryReport;
using ineq::EvalPoint;
using ineq::InequalityDescriptor;
using ineq::ParamMap;
using ineq::ParamValue;
using ineq::PointClassification;
using ineq::PrecisionContext;
using ineq::Scalar;
using ineq::Side;
using ineq::SuiteConfig;
using ineq::SuiteReport;
using ineq::Verdict;
using ineq::WitnessReport;
using ordered_json = nlohmann::ordered_json;

// A usage-level problem: reported on stderr with exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

ParamValue parse_param_value(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const long as_long = std::strtol(begin, &end, 10);
  if (end != begin && *end == '\0') return as_long;
  const double as_double = std::strtod(begin, &end);
  if (end != begin && *end == '\0') return as_double;
  return text;
}

ParamMap parse_params(const std::vector<std::string>& assignments) {
  ParamMap params;
  for (const std::string& a : assignments) {
    const std::size_t eq = a.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects key=value, got '" + a + "'");
    }
    params[a.substr(0, eq)] = parse_param_value(a.substr(eq + 1));
  }
  return params;
}

std::vector<Scalar> parse_scalar_list(const std::string& csv, const PrecisionContext& ctx) {
  std::vector<Scalar> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      out.push_back(ctx.parse(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("empty coordinate list '" + csv + "'");
  return out;
}

void require_count(const char* what, std::size_t got, long want) {
  if (static_cast<long>(got) != want) {
    std::ostringstream msg;
    msg << "expected " << want << " " << what << ", got " << got;
    throw UsageError(msg.str());
  }
}

Side parse_side(const std::string& side) {
  return side == "complement" ? Side::Complement : Side::Primary;
}

// ---------------------------------------------------------------------------

int run_list(bool json) {
  const std::vector<CatalogEntryInfo> entries = ineq::list_catalog();
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const CatalogEntryInfo& info : entries) {
      ordered_json j;
      j["name"] = info.name;
      j["summary"] = info.summary;
      j["params"] = ineq::params_str(info.default_params);
      j["has_complement"] = info.has_complement;
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  std::size_t width = 0;
  for (const CatalogEntryInfo& info : entries) width = std::max(width, info.name.size());
  for (const CatalogEntryInfo& info : entries) {
    std::cout << info.name << std::string(width - info.name.size() + 2, ' ') << info.summary
              << (info.has_complement ? "  [has complement]" : "") << "\n";
  }
  std::cout << entries.size() << " entries\n";
  return 0;
}

int run_explain(const std::string& name, bool json) {
  for (const CatalogEntryInfo& info : ineq::list_catalog()) {
    if (info.name != name) continue;
    const InequalityDescriptor d = ineq::lookup(name, {});
    if (json) {
      ordered_json j;
      j["name"] = info.name;
      j["summary"] = info.summary;
      j["reference"] = info.reference;
      j["relation"] = info.formula_desc;
      j["direction"] = ineq::direction_str(d.direction);
      j["valid_when"] = info.validity_desc;
      j["equality_when"] = info.equality_desc;
      j["params"] = ineq::params_str(info.default_params);
      j["complement"] = info.complement_desc;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::cout << info.name << " — " << info.summary << "\n"
              << "  reference:  " << info.reference << "\n"
              << "  relation:   " << info.formula_desc << "  (direction: lhs "
              << ineq::direction_str(d.direction) << " rhs)\n"
              << "  valid when: " << info.validity_desc << "\n"
              << "  equal when: " << info.equality_desc << "\n";
    if (!info.default_params.empty()) {
      std::cout << "  params:     " << ineq::params_str(info.default_params) << "\n";
    }
    if (info.has_complement) {
      std::cout << "  complement: " << info.complement_desc << "\n";
    }
    return 0;
  }
  throw UsageError("unknown entry '" + name + "' (see `list`)");
}

int run_check(const std::string& name, const std::string& side, const ParamMap& params,
              const std::string& point, const std::string& values2, const std::string& weights,
              bool json, const PrecisionContext& ctx) {
  InequalityDescriptor d;
  try {
    d = ineq::lookup(name, params);
    if (parse_side(side) == Side::Complement) d = ineq::complementary(d);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }

  EvalPoint pt;
  std::vector<Scalar> coords = parse_scalar_list(point, ctx);
  if (!d.shape.scalar_names.empty()) {
    require_count("scalars", coords.size(), static_cast<long>(d.shape.scalar_names.size()));
    pt.scalars = std::move(coords);
  } else {
    require_count("values", coords.size(), d.shape.values_count);
    pt.values = std::move(coords);
  }
  if (d.shape.values2_count > 0) {
    if (values2.empty()) throw UsageError("entry " + name + " needs --values2");
    pt.values2 = parse_scalar_list(values2, ctx);
    require_count("second-vector values", pt.values2.size(), d.shape.values2_count);
  }
  if (d.shape.weights_count > 0) {
    if (weights.empty()) throw UsageError("entry " + name + " needs --weights");
    pt.weights = parse_scalar_list(weights, ctx);
    require_count("weights", pt.weights.size(), d.shape.weights_count);
  }

  PointClassification cls;
  try {
    cls = ineq::classify(d, pt, ctx);
  } catch (const ineq::OverflowError& e) {
    // Indeterminate rather than violated; report and succeed.
    if (json) {
      std::cout << ordered_json{{"instance", d.instance_key()}, {"verdict", "Overflow"},
                                {"detail", e.what()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "Overflow (" << e.what() << ")\n";
    }
    return 0;
  }

  if (json) {
    ordered_json j;
    j["instance"] = d.instance_key();
    j["verdict"] = ineq::verdict_str(cls.verdict);
    if (cls.lhs) j["lhs"] = cls.lhs->compact();
    if (cls.rhs) j["rhs"] = cls.rhs->compact();
    if (cls.margin) j["margin"] = cls.margin->compact();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << ineq::verdict_str(cls.verdict);
    if (cls.margin) std::cout << " margin=" << cls.margin->compact();
    std::cout << "\n";
  }
  return cls.verdict == Verdict::Violated ? 1 : 0;
}

int run_witness(const std::string& name, bool all, std::size_t samples, std::uint64_t seed,
                bool json, const PrecisionContext& ctx) {
  std::vector<std::string> names;
  if (all) {
    names = ineq::list_witnesses();
  } else if (!name.empty()) {
    names.push_back(name);
  } else {
    throw UsageError("witness needs a name or --all");
  }

  std::vector<WitnessReport> reports;
  for (const std::string& n : names) {
    try {
      reports.push_back(ineq::verify_witness(ineq::find_witness(n), samples, seed, ctx));
    } catch (const ineq::UnknownWitnessError& e) {
      throw UsageError(e.what());
    }
  }

  bool failed = false;
  if (json) {
    if (reports.size() == 1) {
      std::cout << ineq::witness_report_json(reports[0]) << "\n";
    } else {
      ordered_json arr = ordered_json::array();
      for (const WitnessReport& r : reports) {
        arr.push_back(ordered_json::parse(ineq::witness_report_json(r)));
      }
      std::cout << arr.dump(2) << "\n";
    }
    for (const WitnessReport& r : reports) failed = failed || !r.passed();
  } else {
    for (const WitnessReport& r : reports) {
      if (r.passed()) {
        std::cout << r.witness << ": PASS (samples=" << r.samples << ", checks=" << r.checked
                  << ")\n";
      } else {
        failed = true;
        const ineq::WitnessFailure& f = r.failures[0];
        std::cout << r.witness << ": FAIL (" << r.failures.size() << " of " << r.checked
                  << " checks)\n"
                  << "  first: " << ineq::witness_direction_str(f.direction) << " sample #"
                  << f.sample_index << " seed=" << f.sample_seed << "\n"
                  << "  at: " << f.source_pt << "\n"
                  << "  expected: " << f.expected << "\n"
                  << "  got:      " << f.got << "\n";
      }
    }
  }
  return failed ? 1 : 0;
}

SuiteConfig load_suite_config(const std::string& path, const PrecisionContext& ctx) {
  SuiteConfig config;
  config.ctx = ctx;
  if (path.empty()) return config;

  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  try {
    if (j.contains("samples_per_entry")) config.samples_per_entry = j["samples_per_entry"];
    if (j.contains("seed")) config.seed = j["seed"];
    if (j.contains("boundary_fraction")) config.boundary_fraction = j["boundary_fraction"];
    if (j.contains("precision_bits")) config.ctx.precision_bits = j["precision_bits"];
    if (j.contains("rel_tolerance")) config.ctx.rel_tolerance = j["rel_tolerance"];
    if (j.contains("abs_floor")) config.ctx.abs_floor = j["abs_floor"];
    const ordered_json entry_list = j.value("entries", ordered_json::array());
    for (const auto& e : entry_list) {
      EntryJob job;
      job.name = e.at("name");
      job.side = parse_side(e.value("side", "primary"));
      const ordered_json entry_params = e.value("params", ordered_json::object());
      for (const auto& [key, value] : entry_params.items()) {
        if (value.is_number_integer()) {
          job.params[key] = value.get<long>();
        } else if (value.is_number_float()) {
          job.params[key] = value.get<double>();
        } else {
          job.params[key] = value.get<std::string>();
        }
      }
      config.entries.push_back(std::move(job));
    }
  } catch (const std::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  return config;
}

int run_suite_cmd(const SuiteConfig& config, bool json) {
  const SuiteReport rep = ineq::run_suite(config);
  if (json) {
    std::cout << ineq::suite_report_json(rep) << "\n";
  } else {
    std::size_t entries_passed = 0;
    for (const EntryReport& e : rep.entries) entries_passed += e.passed();
    std::size_t witnesses_passed = 0;
    for (const WitnessReport& w : rep.witnesses) witnesses_passed += w.passed();
    std::size_t limits_passed = 0;
    for (const ineq::LimitReport& l : rep.limits) limits_passed += l.passed;
    std::size_t mono_passed = 0;
    for (const ineq::MonotonicityReport& m : rep.monotonicity) mono_passed += m.passed;

    std::cout << "suite seed=" << rep.seed << " precision=" << rep.precision_bits
              << " samples=" << config.samples_per_entry << "\n"
              << "entries:      " << entries_passed << "/" << rep.entries.size() << " passed\n";
    for (const EntryReport& e : rep.entries) {
      if (e.passed()) continue;
      const ineq::CounterexampleRecord& c = e.counterexamples[0];
      std::cout << "  VIOLATED " << c.instance << " at " << c.point << " margin=" << c.margin
                << " (seed=" << c.seed << ", sample #" << c.index << ")\n";
    }
    std::cout << "witnesses:    " << witnesses_passed << "/" << rep.witnesses.size()
              << " passed\n";
    for (const WitnessReport& w : rep.witnesses) {
      if (!w.passed()) {
        std::cout << "  FAILED " << w.witness << " (" << w.failures.size() << " failures)\n";
      }
    }
    std::cout << "limits:       " << limits_passed << "/" << rep.limits.size() << " passed\n";
    for (const ineq::LimitReport& l : rep.limits) {
      if (!l.passed) std::cout << "  FAILED " << l.tuple << ": " << l.detail << "\n";
    }
    std::cout << "monotonicity: " << mono_passed << "/" << rep.monotonicity.size()
              << " passed\n";
    for (const ineq::MonotonicityReport& m : rep.monotonicity) {
      if (!m.passed) std::cout << "  FAILED " << m.subject << ": " << m.detail << "\n";
    }
    std::cout << "result: " << (rep.passed() ? "PASS" : "FAIL") << " ("
              << rep.wall_time_sec << "s)\n";
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inequality catalog checker: classify points, verify transformation "
               "witnesses, and run the sampling suite"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  long precision = ineq::kDefaultPrecisionBits;
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_option("--seed", seed, "master seed for all sampling")->capture_default_str();
  app.add_option("--samples", samples, "samples per entry / witness direction")
      ->capture_default_str();
  app.add_option("--precision", precision, "working precision in bits")->capture_default_str();

  CLI::App* list_cmd = app.add_subcommand("list", "list every catalog entry");

  CLI::App* check_cmd = app.add_subcommand("check", "classify one point under one entry");
  std::string check_name, check_point, check_values2, check_weights;
  std::string check_side = "primary";
  std::vector<std::string> check_params;
  check_cmd->add_option("name", check_name, "catalog entry name")->required();
  check_cmd->add_option("--point", check_point, "comma-separated coordinates")->required();
  check_cmd->add_option("--values2", check_values2, "second vector, comma-separated");
  check_cmd->add_option("--weights", check_weights, "weights, comma-separated");
  check_cmd->add_option("--param", check_params, "entry parameter as key=value (repeatable)");
  check_cmd->add_option("--side", check_side, "primary or complement")
      ->check(CLI::IsMember({"primary", "complement"}));

  CLI::App* witness_cmd = app.add_subcommand("witness", "verify transformation witnesses");
  std::string witness_name;
  bool witness_all = false;
  witness_cmd->add_option("name", witness_name, "witness name, e.g. W_REFLECT");
  witness_cmd->add_flag("--all", witness_all, "verify every registered witness");

  CLI::App* suite_cmd = app.add_subcommand("suite", "run the full verification suite");
  std::string config_path;
  suite_cmd->add_option("--config", config_path, "JSON file of suite settings");

  CLI::App* explain_cmd = app.add_subcommand("explain", "describe one entry in prose");
  std::string explain_name;
  explain_cmd->add_option("name", explain_name, "catalog entry name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    PrecisionContext ctx;
    ctx.precision_bits = precision;
    ctx.validate();

    if (*list_cmd) return run_list(json);
    if (*explain_cmd) return run_explain(explain_name, json);
    if (*check_cmd) {
      return run_check(check_name, check_side, parse_params(check_params), check_point,
                       check_values2, check_weights, json, ctx);
    }
    if (*witness_cmd) return run_witness(witness_name, witness_all, samples, seed, json, ctx);
    if (*suite_cmd) {
      SuiteConfig config = load_suite_config(config_path, ctx);
      if (app.count("--seed") > 0) config.seed = seed;
      if (app.count("--samples") > 0) config.samples_per_entry = samples;
      if (app.count("--precision") > 0) config.ctx.precision_bits = precision;
      config.ctx.validate();
      return run_suite_cmd(config, json);
    }
    return 2;  // unreachable with require_subcommand(1)
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
