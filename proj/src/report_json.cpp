#include <string>
#include <variant>

#include "ineq/checker.hpp"
#include "json.hpp"

namespace ineq {

namespace {

using nlohmann::ordered_json;

ordered_json params_json(const ParamMap& params) {
  ordered_json j = ordered_json::object();
  for (const auto& [key, value] : params) {
    std::visit([&](const auto& v) { j[key] = v; }, value);
  }
  return j;
}

ordered_json counts_json(const EntryCounts& c) {
  return ordered_json{{"strict", c.strict},
                      {"equality", c.equality},
                      {"violated", c.violated},
                      {"outside", c.outside},
                      {"overflow", c.overflow}};
}

ordered_json entry_json(const EntryReport& e) {
  ordered_json j;
  j["name"] = e.name;
  j["side"] = e.side == Side::Complement ? "complement" : "primary";
  j["params"] = params_json(e.params);
  j["counts"] = counts_json(e.counts);
  ordered_json cxs = ordered_json::array();
  for (const CounterexampleRecord& c : e.counterexamples) {
    cxs.push_back(ordered_json{{"instance", c.instance},
                               {"point", c.point},
                               {"margin", c.margin},
                               {"seed", c.seed},
                               {"index", c.index}});
  }
  j["counterexamples"] = std::move(cxs);
  return j;
}

ordered_json witness_json(const WitnessReport& w) {
  ordered_json j;
  j["witness"] = w.witness;
  j["samples"] = w.samples;
  j["checked"] = w.checked;
  ordered_json fails = ordered_json::array();
  for (const WitnessFailure& f : w.failures) {
    fails.push_back(ordered_json{{"direction", witness_direction_str(f.direction)},
                                 {"sample_index", f.sample_index},
                                 {"sample_seed", f.sample_seed},
                                 {"source_pt", f.source_pt},
                                 {"mapped_pt", f.mapped_pt},
                                 {"expected", f.expected},
                                 {"got", f.got}});
  }
  j["failures"] = std::move(fails);
  return j;
}

ordered_json limit_json(const LimitReport& l) {
  return ordered_json{{"tuple", l.tuple},
                      {"passed", l.passed},
                      {"worst_rel_gap", l.worst_rel_gap},
                      {"detail", l.detail}};
}

ordered_json monotonicity_json(const MonotonicityReport& m) {
  return ordered_json{{"subject", m.subject}, {"passed", m.passed}, {"detail", m.detail}};
}

}  // namespace

std::string witness_report_json(const WitnessReport& rep) {
  return witness_json(rep).dump(2);
}

std::string suite_report_json(const SuiteReport& rep) {
  ordered_json j;
  j["version"] = "1";
  j["seed"] = rep.seed;
  j["precision_bits"] = rep.precision_bits;
  j["entries"] = ordered_json::array();
  for (const EntryReport& e : rep.entries) j["entries"].push_back(entry_json(e));
  j["witnesses"] = ordered_json::array();
  for (const WitnessReport& w : rep.witnesses) j["witnesses"].push_back(witness_json(w));
  j["limits"] = ordered_json::array();
  for (const LimitReport& l : rep.limits) j["limits"].push_back(limit_json(l));
  j["monotonicity"] = ordered_json::array();
  for (const MonotonicityReport& m : rep.monotonicity) j["monotonicity"].push_back(monotonicity_json(m));
  j["passed"] = rep.passed();
  j["wall_time"] = rep.wall_time_sec;
  return j.dump(2);
}

}  // namespace ineq
