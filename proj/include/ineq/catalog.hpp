#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ineq/means.hpp"

namespace ineq {

class UnknownNameError : public std::runtime_error {
 public:
  explicit UnknownNameError(const std::string& what) : std::runtime_error(what) {}
};

class BadParamsError : public std::runtime_error {
 public:
  explicit BadParamsError(const std::string& what) : std::runtime_error(what) {}
};

class NoComplementError : public std::runtime_error {
 public:
  explicit NoComplementError(const std::string& what) : std::runtime_error(what) {}
};

enum class Direction { LessEq, GreaterEq };
enum class Verdict { StrictlyHolds, Equality, Violated, OutsideValidity };
// An inequality statement has a primary side (its validity set V with the
// stated direction) and, where registered, a complementary side (the reversed
// relation on a complementary set ~V).
enum class Side { Primary, Complement };

std::string direction_str(Direction d);
std::string verdict_str(Verdict v);

using ParamValue = std::variant<long, double, std::string>;
using ParamMap = std::map<std::string, ParamValue>;

std::string param_value_str(const ParamValue& v);
std::string params_str(const ParamMap& m);
// Typed accessors; throw BadParamsError when the key is missing or mistyped.
// param_real accepts integer-valued params and promotes them.
long param_int(const ParamMap& m, const std::string& key);
double param_real(const ParamMap& m, const std::string& key);
std::string param_enum(const ParamMap& m, const std::string& key);

// A point in the evaluation domain of a statement. Which slots are used, and
// how long the vectors must be, is described by the statement's PointShape.
struct EvalPoint {
  std::vector<Scalar> scalars;
  std::vector<Scalar> values;
  std::vector<Scalar> values2;
  std::vector<Scalar> weights;
};

struct PointShape {
  std::vector<std::string> scalar_names;
  long values_count = 0;   // 0 means the slot is unused
  long values2_count = 0;
  long weights_count = 0;
  bool signed_values = false;  // values are general reals rather than positives
};

struct LhsRhs {
  Scalar lhs;
  Scalar rhs;
};

struct PointClassification {
  Verdict verdict = Verdict::OutsideValidity;
  std::optional<Scalar> lhs, rhs;
  // Oriented margin: rhs-lhs for LessEq, lhs-rhs for GreaterEq, so that a
  // nonnegative margin always means the relation holds.
  std::optional<Scalar> margin;
};

// A fully bound inequality statement: fixed parameters, one side, and the
// executable pieces (validity set, equality set, formula, samplers).
struct InequalityDescriptor {
  std::string entry;
  ParamMap params;
  Side side = Side::Primary;
  Direction direction = Direction::LessEq;
  PointShape shape;
  bool has_complement = false;
  std::string validity_desc;
  std::string equality_desc;
  std::string formula_desc;

  std::function<bool(const EvalPoint&, const PrecisionContext&)> validity;
  std::function<bool(const EvalPoint&, const PrecisionContext&)> equality;
  std::function<LhsRhs(const EvalPoint&, const PrecisionContext&)> formula;
  std::function<EvalPoint(Rng&, const PrecisionContext&)> sample;
  // Draws a point of the equality set; never null for registered entries.
  std::function<EvalPoint(Rng&, const PrecisionContext&)> sample_equality;

  // Entry name, with a "~" suffix on the complementary side.
  std::string display_name() const;
  // display_name plus the bound parameters, e.g. "RADO(n=5)".
  std::string instance_key() const;
};

struct CatalogEntryInfo {
  std::string name;
  std::string summary;
  std::string reference;
  std::string formula_desc;
  std::string validity_desc;
  std::string equality_desc;
  std::string complement_desc;  // empty when the entry has no complement
  std::vector<std::string> param_names;
  ParamMap default_params;
  bool has_complement = false;
};

// Binds an entry to parameters (defaults filled in for omitted keys) and
// returns its primary side. Throws UnknownNameError / BadParamsError.
InequalityDescriptor lookup(const std::string& name, const ParamMap& params);

// The reversed statement on the complementary set, with the same parameters.
// Applying it twice returns to the primary side. Throws NoComplementError.
InequalityDescriptor complementary(const InequalityDescriptor& d);

// Evaluates the statement at a point: OutsideValidity when the point is not
// in the side's validity set, otherwise Strict/Equality/Violated according to
// the sign of the oriented margin measured against the tolerance band.
PointClassification classify(const InequalityDescriptor& d, const EvalPoint& pt,
                             const PrecisionContext& ctx);

// Classification under d, falling back to d's complement when the point lies
// outside d's side but inside the complementary one.
struct SidedClassification {
  PointClassification cls;
  Side side = Side::Primary;
};
SidedClassification classify_complete(const InequalityDescriptor& d, const EvalPoint& pt,
                                      const PrecisionContext& ctx);

// Registry listing in registration order.
std::vector<CatalogEntryInfo> list_catalog();

// Draws suite parameters for an entry appropriate to the requested side
// (entries whose complement region lives in parameter space draw from that
// region when side is Complement). Throws UnknownNameError.
ParamMap sample_entry_params(const std::string& name, Side side, Rng& rng);

}  // namespace ineq
