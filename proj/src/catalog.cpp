#include "ineq/catalog.hpp"

#include <cmath>
#include <sstream>

#include "catalog_registry.hpp"

namespace ineq {

std::string direction_str(Direction d) { return d == Direction::LessEq ? "<=" : ">="; }

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::StrictlyHolds: return "StrictlyHolds";
    case Verdict::Equality: return "Equality";
    case Verdict::Violated: return "Violated";
    case Verdict::OutsideValidity: return "OutsideValidity";
  }
  return "?";
}

std::string param_value_str(const ParamValue& v) {
  if (std::holds_alternative<long>(v)) return std::to_string(std::get<long>(v));
  if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
  const double d = std::get<double>(v);
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(17);
  os << d;
  return os.str();
}

std::string params_str(const ParamMap& m) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (!out.empty()) out += ",";
    out += k + "=" + param_value_str(v);
  }
  return out;
}

long param_int(const ParamMap& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw BadParamsError("missing parameter '" + key + "'");
  if (const long* p = std::get_if<long>(&it->second)) return *p;
  throw BadParamsError("parameter '" + key + "' must be an integer");
}

double param_real(const ParamMap& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw BadParamsError("missing parameter '" + key + "'");
  if (const double* p = std::get_if<double>(&it->second)) return *p;
  if (const long* p = std::get_if<long>(&it->second)) return static_cast<double>(*p);
  throw BadParamsError("parameter '" + key + "' must be numeric");
}

std::string param_enum(const ParamMap& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw BadParamsError("missing parameter '" + key + "'");
  if (const std::string* p = std::get_if<std::string>(&it->second)) return *p;
  throw BadParamsError("parameter '" + key + "' must be a name");
}

std::string InequalityDescriptor::display_name() const {
  return side == Side::Complement ? entry + "~" : entry;
}

std::string InequalityDescriptor::instance_key() const {
  return display_name() + "(" + params_str(params) + ")";
}

namespace {

ParamMap merge_with_defaults(const detail::EntryDef& def, const ParamMap& params) {
  ParamMap merged = def.info.default_params;
  for (const auto& [k, v] : params) {
    if (merged.find(k) == merged.end()) {
      throw BadParamsError("entry " + def.info.name + " has no parameter '" + k + "'");
    }
    merged[k] = v;
  }
  return merged;
}

bool shape_matches(const PointShape& s, const EvalPoint& pt) {
  if (pt.scalars.size() != s.scalar_names.size()) return false;
  if (static_cast<long>(pt.values.size()) != s.values_count) return false;
  if (static_cast<long>(pt.values2.size()) != s.values2_count) return false;
  if (static_cast<long>(pt.weights.size()) != s.weights_count) return false;
  return true;
}

bool all_finite(const std::vector<Scalar>& v) {
  for (const Scalar& x : v) {
    if (!x.is_finite()) return false;
  }
  return true;
}

}  // namespace

InequalityDescriptor lookup(const std::string& name, const ParamMap& params) {
  const detail::EntryDef& def = detail::find_entry(name);
  ParamMap merged = merge_with_defaults(def, params);
  def.validate(merged);
  return def.build(merged, Side::Primary);
}

InequalityDescriptor complementary(const InequalityDescriptor& d) {
  const detail::EntryDef& def = detail::find_entry(d.entry);
  if (!def.info.has_complement) {
    throw NoComplementError("entry " + d.entry + " has no complementary statement");
  }
  return def.build(d.params, d.side == Side::Primary ? Side::Complement : Side::Primary);
}

PointClassification classify(const InequalityDescriptor& d, const EvalPoint& pt,
                             const PrecisionContext& ctx) {
  if (!shape_matches(d.shape, pt)) {
    throw std::invalid_argument("point shape does not match " + d.display_name() +
                                ": expected " + std::to_string(d.shape.scalar_names.size()) +
                                " scalars, " + std::to_string(d.shape.values_count) +
                                " values, " + std::to_string(d.shape.values2_count) +
                                " values2, " + std::to_string(d.shape.weights_count) +
                                " weights");
  }
  PointClassification out;
  if (!all_finite(pt.scalars) || !all_finite(pt.values) || !all_finite(pt.values2) ||
      !all_finite(pt.weights) || !d.validity(pt, ctx)) {
    out.verdict = Verdict::OutsideValidity;
    return out;
  }
  LhsRhs f = d.formula(pt, ctx);
  ensure_finite(f.lhs, "lhs");
  ensure_finite(f.rhs, "rhs");
  Scalar margin = d.direction == Direction::LessEq ? f.rhs - f.lhs : f.lhs - f.rhs;
  Scalar scale = max_scalar(abs_scalar(f.lhs), abs_scalar(f.rhs));
  switch (classify_sign(margin, scale, ctx)) {
    case Sign::Positive: out.verdict = Verdict::StrictlyHolds; break;
    case Sign::Zero: out.verdict = Verdict::Equality; break;
    case Sign::Negative: out.verdict = Verdict::Violated; break;
  }
  out.lhs = f.lhs;
  out.rhs = f.rhs;
  out.margin = margin;
  return out;
}

SidedClassification classify_complete(const InequalityDescriptor& d, const EvalPoint& pt,
                                      const PrecisionContext& ctx) {
  PointClassification first = classify(d, pt, ctx);
  if (first.verdict != Verdict::OutsideValidity || !d.has_complement) {
    return {first, d.side};
  }
  InequalityDescriptor other = complementary(d);
  PointClassification second = classify(other, pt, ctx);
  if (second.verdict != Verdict::OutsideValidity) {
    return {second, other.side};
  }
  return {first, d.side};
}

std::vector<CatalogEntryInfo> list_catalog() {
  std::vector<CatalogEntryInfo> out;
  for (const detail::EntryDef& def : detail::entry_registry()) out.push_back(def.info);
  return out;
}

ParamMap sample_entry_params(const std::string& name, Side side, Rng& rng) {
  const detail::EntryDef& def = detail::find_entry(name);
  if (!def.sample_params) return def.info.default_params;
  return def.sample_params(rng, side);
}

namespace detail {

const EntryDef& find_entry(const std::string& name) {
  for (const EntryDef& def : entry_registry()) {
    if (def.info.name == name) return def;
  }
  throw UnknownNameError("no catalog entry named '" + name + "'");
}

}  // namespace detail

}  // namespace ineq
