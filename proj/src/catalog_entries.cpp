#include <cmath>
#include <utility>

#include "catalog_registry.hpp"

// Catalog registry. Every entry binds an inequality statement to executable
// pieces: a validity predicate (the set V where the stated relation holds), an
// equality predicate (the subset E where it holds with equality), the formula
// producing both sides, and samplers for V and E. Entries with a complementary
// statement also build the reversed relation on the complementary set.

namespace ineq {
namespace detail {
namespace {

constexpr double kValLo = 1e-3;
constexpr double kValHi = 1e3;
constexpr double kWtLo = 1e-2;
constexpr double kWtHi = 1e2;
constexpr double kMidLo = 1e-2;
constexpr double kMidHi = 1e2;

bool positive(const Scalar& x) { return x.is_finite() && x.sgn() > 0; }

bool all_positive(const std::vector<Scalar>& v) {
  for (const Scalar& x : v) {
    if (!positive(x)) return false;
  }
  return true;
}

bool all_nonnegative(const std::vector<Scalar>& v) {
  for (const Scalar& x : v) {
    if (!x.is_finite() || x.sgn() < 0) return false;
  }
  return true;
}

bool in_unit_interval(const Scalar& a, const PrecisionContext& ctx) {
  return a >= ctx.make_int(0) && a <= ctx.make_int(1);
}

bool is_constant(const std::vector<Scalar>& v, const PrecisionContext& ctx) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!approx_equal(v[i], v[0], ctx)) return false;
  }
  return true;
}

bool all_near(const std::vector<Scalar>& v, const Scalar& c, const PrecisionContext& ctx) {
  for (const Scalar& x : v) {
    if (!approx_equal(x, c, ctx)) return false;
  }
  return true;
}

// True when b_i = c * a_i^e for a single c (ratios agree within the band).
bool proportional_power(const std::vector<Scalar>& b, const std::vector<Scalar>& a, double e,
                        const PrecisionContext& ctx) {
  Scalar ee = ctx.make(e);
  Scalar r0 = b[0] / pow_scalar(a[0], ee);
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (!approx_equal(b[i] / pow_scalar(a[i], ee), r0, ctx)) return false;
  }
  return true;
}

Scalar sum(const std::vector<Scalar>& v, const PrecisionContext& ctx) {
  Scalar s = ctx.make_int(0);
  for (const Scalar& x : v) s = s + x;
  return s;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
           const PrecisionContext& ctx) {
  Scalar s = ctx.make_int(0);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

Scalar sum_pow(const std::vector<Scalar>& v, double e, const PrecisionContext& ctx) {
  Scalar s = ctx.make_int(0);
  Scalar ee = ctx.make(e);
  for (const Scalar& x : v) s = s + pow_scalar(x, ee);
  return s;
}

Scalar weighted_sum_pow(const std::vector<Scalar>& w, const std::vector<Scalar>& v, double e,
                        const PrecisionContext& ctx) {
  Scalar s = ctx.make_int(0);
  Scalar ee = ctx.make(e);
  for (std::size_t i = 0; i < v.size(); ++i) s = s + w[i] * pow_scalar(v[i], ee);
  return s;
}

WeightedTuple tup(const EvalPoint& pt) { return WeightedTuple::of(pt.values, pt.weights); }

WeightedTuple tup_equal(const EvalPoint& pt, const PrecisionContext& ctx) {
  return WeightedTuple::equal_weights(pt.values, ctx.precision_bits);
}

std::vector<Scalar> draw_vec(Rng& rng, long n, double lo, double hi,
                             const PrecisionContext& ctx) {
  std::vector<Scalar> v;
  for (long i = 0; i < n; ++i) v.push_back(rng.log_uniform(lo, hi, ctx));
  return v;
}

std::vector<Scalar> const_vec(long n, const Scalar& c) {
  return std::vector<Scalar>(static_cast<std::size_t>(n), c);
}

// x > -1, mixing decades of positive magnitudes with draws from (-1, 0].
Scalar draw_gt_minus_one(Rng& rng, double pos_hi, const PrecisionContext& ctx) {
  if (rng.coin()) return rng.log_uniform(1e-3, pos_hi, ctx);
  return -(rng.unit(ctx) * ctx.make(1.0 - 1e-6));
}

// exp((sum of w_i log x_i) / W): weighted geometric combination of two terms.
Scalar two_term_geometric(const Scalar& x, const Scalar& y, const Scalar& u, const Scalar& v) {
  return exp_scalar((u * log_scalar(x) + v * log_scalar(y)) / (u + v));
}

long entry_n(const ParamMap& params) { return param_int(params, "n"); }

void require(bool ok, const std::string& message) {
  if (!ok) throw BadParamsError(message);
}

void require_n_at_least(const ParamMap& params, long lo) {
  require(entry_n(params) >= lo, "n must be at least " + std::to_string(lo));
}

double uniform_d(Rng& rng, double lo, double hi) {
  return lo + std::ldexp(static_cast<double>(rng.next()), -64) * (hi - lo);
}

// ---------------------------------------------------------------------------
// Two-term arithmetic/geometric family
// ---------------------------------------------------------------------------

EntryDef ga2e_def() {
  EntryDef def;
  def.info.name = "GA2E";
  def.info.summary = "Two-term arithmetic-geometric mean inequality, equal weights";
  def.info.reference = "classical (Euclid; Cauchy 1821)";
  def.info.formula_desc = "sqrt(x*y) <= (x+y)/2";
  def.info.validity_desc = "x > 0, y > 0";
  def.info.equality_desc = "x = y";
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side) {
    InequalityDescriptor d;
    d.entry = "GA2E";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.scalar_names = {"x", "y"};
    d.validity_desc = "x > 0, y > 0";
    d.equality_desc = "x = y";
    d.formula_desc = "sqrt(x*y) <= (x+y)/2";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return positive(pt.scalars[0]) && positive(pt.scalars[1]);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return approx_equal(pt.scalars[0], pt.scalars[1], ctx);
    };
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar& x = pt.scalars[0];
      const Scalar& y = pt.scalars[1];
      return {sqrt_scalar(x * y), (x + y) / ctx.make_int(2)};
    };
    d.sample = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.scalars = {rng.log_uniform(kValLo, kValHi, ctx), rng.log_uniform(kValLo, kValHi, ctx)};
      return pt;
    };
    d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      Scalar x = rng.log_uniform(kValLo, kValHi, ctx);
      pt.scalars = {x, x};
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef ga2w_def() {
  EntryDef def;
  def.info.name = "GA2W";
  def.info.summary = "Two-term weighted arithmetic-geometric mean inequality";
  def.info.reference = "classical";
  def.info.formula_desc = "(x^u * y^v)^(1/(u+v)) <= (u*x + v*y)/(u+v)";
  def.info.validity_desc = "x, y, u, v > 0";
  def.info.equality_desc = "x = y";
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side) {
    InequalityDescriptor d;
    d.entry = "GA2W";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.scalar_names = {"x", "y", "u", "v"};
    d.validity_desc = "x, y, u, v > 0";
    d.equality_desc = "x = y";
    d.formula_desc = "(x^u * y^v)^(1/(u+v)) <= (u*x + v*y)/(u+v)";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return all_positive(pt.scalars);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return approx_equal(pt.scalars[0], pt.scalars[1], ctx);
    };
    d.formula = [](const EvalPoint& pt, const PrecisionContext&) -> LhsRhs {
      const Scalar &x = pt.scalars[0], &y = pt.scalars[1], &u = pt.scalars[2], &v = pt.scalars[3];
      return {two_term_geometric(x, y, u, v), (u * x + v * y) / (u + v)};
    };
    d.sample = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.scalars = {rng.log_uniform(kValLo, kValHi, ctx), rng.log_uniform(kValLo, kValHi, ctx),
                    rng.log_uniform(kWtLo, kWtHi, ctx), rng.log_uniform(kWtLo, kWtHi, ctx)};
      return pt;
    };
    d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      Scalar x = rng.log_uniform(kValLo, kValHi, ctx);
      pt.scalars = {x, x, rng.log_uniform(kWtLo, kWtHi, ctx), rng.log_uniform(kWtLo, kWtHi, ctx)};
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef ga2_complete_def() {
  EntryDef def;
  def.info.name = "GA2_COMPLETE";
  def.info.summary = "Two-term weighted AM-GM over the full weight line, with reversal";
  def.info.reference = "classical";
  def.info.formula_desc = "x^(1-alpha) * y^alpha <= (1-alpha)*x + alpha*y";
  def.info.validity_desc = "x, y > 0, 0 <= alpha <= 1";
  def.info.equality_desc = "x = y, or alpha in {0, 1}";
  def.info.complement_desc = "reversed for alpha < 0 or alpha > 1 (x, y > 0); equality iff x = y";
  def.info.has_complement = true;
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side side) {
    InequalityDescriptor d;
    d.entry = "GA2_COMPLETE";
    d.params = params;
    d.side = side;
    d.has_complement = true;
    d.shape.scalar_names = {"x", "y", "alpha"};
    d.formula_desc = "x^(1-alpha) * y^alpha vs (1-alpha)*x + alpha*y";
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar &x = pt.scalars[0], &y = pt.scalars[1], &a = pt.scalars[2];
      Scalar one = ctx.make_int(1);
      Scalar lhs = exp_scalar((one - a) * log_scalar(x) + a * log_scalar(y));
      return {lhs, (one - a) * x + a * y};
    };
    if (side == Side::Primary) {
      d.direction = Direction::LessEq;
      d.validity_desc = "x, y > 0, 0 <= alpha <= 1";
      d.equality_desc = "x = y, or alpha in {0, 1}";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return positive(pt.scalars[0]) && positive(pt.scalars[1]) &&
               in_unit_interval(pt.scalars[2], ctx);
      };
      d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return approx_equal(pt.scalars[0], pt.scalars[1], ctx) ||
               approx_equal(pt.scalars[2], ctx.make_int(0), ctx) ||
               approx_equal(pt.scalars[2], ctx.make_int(1), ctx);
      };
      d.sample = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {rng.log_uniform(kValLo, kValHi, ctx), rng.log_uniform(kValLo, kValHi, ctx),
                      rng.unit(ctx)};
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        Scalar x = rng.log_uniform(kValLo, kValHi, ctx);
        switch (rng.below(3)) {
          case 0: pt.scalars = {x, x, rng.unit(ctx)}; break;
          case 1: pt.scalars = {x, rng.log_uniform(kValLo, kValHi, ctx), ctx.make_int(0)}; break;
          default: pt.scalars = {x, rng.log_uniform(kValLo, kValHi, ctx), ctx.make_int(1)}; break;
        }
        return pt;
      };
    } else {
      d.direction = Direction::GreaterEq;
      d.validity_desc = "x, y > 0, alpha < 0 or alpha > 1";
      d.equality_desc = "x = y";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return positive(pt.scalars[0]) && positive(pt.scalars[1]) &&
               !in_unit_interval(pt.scalars[2], ctx);
      };
      d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return approx_equal(pt.scalars[0], pt.scalars[1], ctx);
      };
      auto outside_alpha = [](Rng& rng, const PrecisionContext& ctx) {
        return rng.coin() ? -rng.log_uniform(1e-2, 8, ctx)
                          : ctx.make_int(1) + rng.log_uniform(1e-2, 8, ctx);
      };
      d.sample = [outside_alpha](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {rng.log_uniform(kValLo, kValHi, ctx), rng.log_uniform(kValLo, kValHi, ctx),
                      outside_alpha(rng, ctx)};
        return pt;
      };
      d.sample_equality = [outside_alpha](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        Scalar x = rng.log_uniform(kValLo, kValHi, ctx);
        pt.scalars = {x, x, outside_alpha(rng, ctx)};
        return pt;
      };
    }
    return d;
  };
  return def;
}

// ---------------------------------------------------------------------------
// n-term mean chain
// ---------------------------------------------------------------------------

// Shared scaffold for entries on a positive weighted tuple with E = {constant}.
EntryDef tuple_mean_entry(const std::string& name, const std::string& summary,
                          const std::string& reference, const std::string& formula_desc,
                          std::function<LhsRhs(const WeightedTuple&, const PrecisionContext&)> f,
                          Direction dir) {
  EntryDef def;
  def.info.name = name;
  def.info.summary = summary;
  def.info.reference = reference;
  def.info.formula_desc = formula_desc;
  def.info.validity_desc = "a_i > 0, w_i > 0";
  def.info.equality_desc = "all a_i equal";
  def.info.param_names = {"n"};
  def.info.default_params = {{"n", 4L}};
  def.validate = [](const ParamMap& params) { require_n_at_least(params, 2); };
  def.sample_params = [](Rng& rng, Side) -> ParamMap { return {{"n", (long)rng.int_in(2, 8)}}; };
  def.build = [name, f, dir, formula_desc](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = name;
    d.params = params;
    d.direction = dir;
    d.shape.values_count = n;
    d.shape.weights_count = n;
    d.validity_desc = "a_i > 0, w_i > 0";
    d.equality_desc = "all a_i equal";
    d.formula_desc = formula_desc;
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return all_positive(pt.values) && all_positive(pt.weights);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return is_constant(pt.values, ctx);
    };
    d.formula = [f](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      return f(tup(pt), ctx);
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kValLo, kValHi, ctx);
      pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    d.sample_equality = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = const_vec(n, rng.log_uniform(kValLo, kValHi, ctx));
      pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef gane_def() {
  EntryDef def;
  def.info.name = "GANE";
  def.info.summary = "n-term arithmetic-geometric mean inequality, equal weights";
  def.info.reference = "classical (Cauchy 1821)";
  def.info.formula_desc = "geomean(a) <= mean(a)";
  def.info.validity_desc = "a_i > 0";
  def.info.equality_desc = "all a_i equal";
  def.info.param_names = {"n"};
  def.info.default_params = {{"n", 4L}};
  def.validate = [](const ParamMap& params) { require_n_at_least(params, 2); };
  def.sample_params = [](Rng& rng, Side) -> ParamMap { return {{"n", (long)rng.int_in(2, 8)}}; };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = "GANE";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.values_count = n;
    d.validity_desc = "a_i > 0";
    d.equality_desc = "all a_i equal";
    d.formula_desc = "geomean(a) <= mean(a)";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return all_positive(pt.values);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return is_constant(pt.values, ctx);
    };
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      WeightedTuple t = tup_equal(pt, ctx);
      return {geometric_mean(t, ctx), arithmetic_mean(t, ctx)};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kValLo, kValHi, ctx);
      return pt;
    };
    d.sample_equality = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = const_vec(n, rng.log_uniform(kValLo, kValHi, ctx));
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef prod1_sum_def() {
  EntryDef def;
  def.info.name = "PROD1_SUM";
  def.info.summary = "Tuples with unit product have sum at least n";
  def.info.reference = "classical (AM-GM normal form)";
  def.info.formula_desc = "n <= sum(a)  when prod(a) = 1";
  def.info.validity_desc = "a_i > 0, prod(a) = 1";
  def.info.equality_desc = "all a_i = 1";
  def.info.param_names = {"n"};
  def.info.default_params = {{"n", 4L}};
  def.validate = [](const ParamMap& params) { require_n_at_least(params, 2); };
  def.sample_params = [](Rng& rng, Side) -> ParamMap { return {{"n", (long)rng.int_in(2, 8)}}; };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = "PROD1_SUM";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.values_count = n;
    d.validity_desc = "a_i > 0, prod(a) = 1";
    d.equality_desc = "all a_i = 1";
    d.formula_desc = "n <= sum(a)";
    d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      if (!all_positive(pt.values)) return false;
      Scalar prod = ctx.make_int(1);
      for (const Scalar& v : pt.values) prod = prod * v;
      return approx_equal(prod, ctx.make_int(1), ctx);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return all_near(pt.values, ctx.make_int(1), ctx);
    };
    d.formula = [n](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      return {ctx.make_int(n), sum(pt.values, ctx)};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kValLo, kValHi, ctx);
      Scalar prod = ctx.make_int(1);
      for (const Scalar& v : pt.values) prod = prod * v;
      Scalar g = pow_scalar(prod, ctx.make_int(1) / ctx.make_int(n));
      for (Scalar& v : pt.values) v = v / g;
      return pt;
    };
    d.sample_equality = [n](Rng&, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = const_vec(n, ctx.make_int(1));
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef sum1_prod_def() {
  EntryDef def;
  def.info.name = "SUM1_PROD";
  def.info.summary = "Tuples with unit sum have product at most n^-n";
  def.info.reference = "classical (AM-GM normal form)";
  def.info.formula_desc = "prod(a) <= n^-n  when sum(a) = 1";
  def.info.validity_desc = "a_i > 0, sum(a) = 1";
  def.info.equality_desc = "all a_i = 1/n";
  def.info.param_names = {"n"};
  def.info.default_params = {{"n", 4L}};
  def.validate = [](const ParamMap& params) { require_n_at_least(params, 2); };
  def.sample_params = [](Rng& rng, Side) -> ParamMap { return {{"n", (long)rng.int_in(2, 8)}}; };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = "SUM1_PROD";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.values_count = n;
    d.validity_desc = "a_i > 0, sum(a) = 1";
    d.equality_desc = "all a_i = 1/n";
    d.formula_desc = "prod(a) <= n^-n";
    d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return all_positive(pt.values) && approx_equal(sum(pt.values, ctx), ctx.make_int(1), ctx);
    };
    d.equality = [n](const EvalPoint& pt, const PrecisionContext& ctx) {
      return all_near(pt.values, ctx.make_int(1) / ctx.make_int(n), ctx);
    };
    d.formula = [n](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      Scalar prod = ctx.make_int(1);
      for (const Scalar& v : pt.values) prod = prod * v;
      return {prod, pow_scalar(ctx.make_int(n), ctx.make_int(-n))};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kValLo, kValHi, ctx);
      Scalar s = sum(pt.values, ctx);
      for (Scalar& v : pt.values) v = v / s;
      return pt;
    };
    d.sample_equality = [n](Rng&, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = const_vec(n, ctx.make_int(1) / ctx.make_int(n));
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef sum_reciprocal_def() {
  EntryDef def;
  def.info.name = "SUM_RECIPROCAL";
  def.info.summary = "Product of a sum with the sum of reciprocals dominates n^2";
  def.info.reference = "classical (Cauchy-Schwarz corollary)";
  def.info.formula_desc = "sum(a) * sum(1/a) >= n^2";
  def.info.validity_desc = "a_i > 0";
  def.info.equality_desc = "all a_i equal";
  def.info.param_names = {"n"};
  def.info.default_params = {{"n", 4L}};
  def.validate = [](const ParamMap& params) { require_n_at_least(params, 2); };
  def.sample_params = [](Rng& rng, Side) -> ParamMap { return {{"n", (long)rng.int_in(2, 8)}}; };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = "SUM_RECIPROCAL";
    d.params = params;
    d.direction = Direction::GreaterEq;
    d.shape.values_count = n;
    d.validity_desc = "a_i > 0";
    d.equality_desc = "all a_i equal";
    d.formula_desc = "sum(a) * sum(1/a) >= n^2";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return all_positive(pt.values);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return is_constant(pt.values, ctx);
    };
    d.formula = [n](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      Scalar recip = ctx.make_int(0);
      for (const Scalar& v : pt.values) recip = recip + ctx.make_int(1) / v;
      return {sum(pt.values, ctx) * recip, ctx.make_int(n * n)};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kValLo, kValHi, ctx);
      return pt;
    };
    d.sample_equality = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = const_vec(n, rng.log_uniform(kValLo, kValHi, ctx));
      return pt;
    };
    return d;
  };
  return def;
}

// ---------------------------------------------------------------------------
// Midpoint convexity checks for log and exp
// ---------------------------------------------------------------------------

EntryDef log_midpoint_def() {
  EntryDef def;
  def.info.name = "LOG_MIDPOINT_CONCAVE";
  def.info.summary = "Midpoint concavity of the logarithm";
  def.info.reference = "classical";
  def.info.formula_desc = "(log x + log y)/2 <= log((x+y)/2)";
  def.info.validity_desc = "x > 0, y > 0";
  def.info.equality_desc = "x = y";
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side) {
    InequalityDescriptor d;
    d.entry = "LOG_MIDPOINT_CONCAVE";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.scalar_names = {"x", "y"};
    d.validity_desc = "x > 0, y > 0";
    d.equality_desc = "x = y";
    d.formula_desc = "(log x + log y)/2 <= log((x+y)/2)";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return all_positive(pt.scalars);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return approx_equal(pt.scalars[0], pt.scalars[1], ctx);
    };
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar &x = pt.scalars[0], &y = pt.scalars[1];
      Scalar two = ctx.make_int(2);
      return {(log_scalar(x) + log_scalar(y)) / two, log_scalar((x + y) / two)};
    };
    d.sample = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.scalars = {rng.log_uniform(kValLo, kValHi, ctx), rng.log_uniform(kValLo, kValHi, ctx)};
      return pt;
    };
    d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      Scalar x = rng.log_uniform(kValLo, kValHi, ctx);
      pt.scalars = {x, x};
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef exp_midpoint_def() {
  EntryDef def;
  def.info.name = "EXP_MIDPOINT_CONVEX";
  def.info.summary = "Midpoint convexity of the exponential";
  def.info.reference = "classical";
  def.info.formula_desc = "exp((x+y)/2) <= (exp x + exp y)/2";
  def.info.validity_desc = "x, y real";
  def.info.equality_desc = "x = y";
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side) {
    InequalityDescriptor d;
    d.entry = "EXP_MIDPOINT_CONVEX";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.scalar_names = {"x", "y"};
    d.validity_desc = "x, y real";
    d.equality_desc = "x = y";
    d.formula_desc = "exp((x+y)/2) <= (exp x + exp y)/2";
    d.validity = [](const EvalPoint&, const PrecisionContext&) { return true; };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return approx_equal(pt.scalars[0], pt.scalars[1], ctx);
    };
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar &x = pt.scalars[0], &y = pt.scalars[1];
      Scalar two = ctx.make_int(2);
      return {exp_scalar((x + y) / two), (exp_scalar(x) + exp_scalar(y)) / two};
    };
    d.sample = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.scalars = {rng.uniform(-5, 5, ctx), rng.uniform(-5, 5, ctx)};
      return pt;
    };
    d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      Scalar x = rng.uniform(-5, 5, ctx);
      pt.scalars = {x, x};
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef young_def() {
  EntryDef def;
  def.info.name = "YOUNG";
  def.info.summary = "Young's inequality for products with conjugate exponents";
  def.info.reference = "W. H. Young (1912)";
  def.info.formula_desc = "x*y <= x^p/p + y^q/q,  q = p/(p-1)";
  def.info.validity_desc = "x > 0, y > 0, p > 1";
  def.info.equality_desc = "x^p = y^q";
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side) {
    InequalityDescriptor d;
    d.entry = "YOUNG";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.scalar_names = {"x", "y", "p"};
    d.validity_desc = "x > 0, y > 0, p > 1";
    d.equality_desc = "x^p = y^q";
    d.formula_desc = "x*y <= x^p/p + y^q/q";
    d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return positive(pt.scalars[0]) && positive(pt.scalars[1]) &&
             pt.scalars[2] > ctx.make_int(1);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      const Scalar &x = pt.scalars[0], &y = pt.scalars[1], &p = pt.scalars[2];
      Scalar q = p / (p - ctx.make_int(1));
      return approx_equal(pow_scalar(x, p), pow_scalar(y, q), ctx);
    };
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar &x = pt.scalars[0], &y = pt.scalars[1], &p = pt.scalars[2];
      Scalar q = p / (p - ctx.make_int(1));
      return {x * y, pow_scalar(x, p) / p + pow_scalar(y, q) / q};
    };
    d.sample = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.scalars = {rng.log_uniform(kMidLo, kMidHi, ctx), rng.log_uniform(kMidLo, kMidHi, ctx),
                    rng.uniform(1.1, 4, ctx)};
      return pt;
    };
    d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      Scalar x = rng.log_uniform(kMidLo, kMidHi, ctx);
      Scalar p = rng.uniform(1.1, 4, ctx);
      // y = x^(p-1) makes y^q = x^p.
      pt.scalars = {x, pow_scalar(x, p - ctx.make_int(1)), p};
      return pt;
    };
    return d;
  };
  return def;
}

// ---------------------------------------------------------------------------
// Mean-gap chains
// ---------------------------------------------------------------------------

EntryDef rado_def() {
  EntryDef def;
  def.info.name = "RADO";
  def.info.summary = "Scaled arithmetic-geometric gap grows with each appended term";
  def.info.reference = "R. Rado";
  def.info.formula_desc = "W_n*(A_n - G_n) >= W_(n-1)*(A_(n-1) - G_(n-1))";
  def.info.validity_desc = "a_i > 0, w_i > 0";
  def.info.equality_desc = "a_n = G_(n-1)";
  def.info.param_names = {"n"};
  def.info.default_params = {{"n", 5L}};
  def.validate = [](const ParamMap& params) { require_n_at_least(params, 2); };
  def.sample_params = [](Rng& rng, Side) -> ParamMap { return {{"n", (long)rng.int_in(2, 10)}}; };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = "RADO";
    d.params = params;
    d.direction = Direction::GreaterEq;
    d.shape.values_count = n;
    d.shape.weights_count = n;
    d.validity_desc = "a_i > 0, w_i > 0";
    d.equality_desc = "a_n = G_(n-1)";
    d.formula_desc = "W_n*(A_n - G_n) >= W_(n-1)*(A_(n-1) - G_(n-1))";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return all_positive(pt.values) && all_positive(pt.weights);
    };
    d.equality = [n](const EvalPoint& pt, const PrecisionContext& ctx) {
      WeightedTuple t = tup(pt);
      return approx_equal(pt.values[n - 1], geometric_mean(t.prefix(n - 1), ctx), ctx);
    };
    d.formula = [n](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      WeightedTuple t = tup(pt);
      return {rado_gap(t, n, ctx), rado_gap(t, n - 1, ctx)};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kValLo, kValHi, ctx);
      pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    d.sample_equality = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n - 1, kValLo, kValHi, ctx);
      pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      std::vector<Scalar> wprefix(pt.weights.begin(), pt.weights.end() - 1);
      WeightedTuple head = WeightedTuple::of(pt.values, wprefix);
      pt.values.push_back(geometric_mean(head, ctx));
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef popoviciu_def() {
  EntryDef def;
  def.info.name = "POPOVICIU";
  def.info.summary = "Mean-ratio chain (A_k/G_k)^e_k; the InvWk exponent variant is false "
                     "and kept as a falsification target";
  def.info.reference = "T. Popoviciu";
  def.info.formula_desc = "(A_n/G_n)^e_n >= (A_(n-1)/G_(n-1))^e_(n-1)";
  def.info.validity_desc = "a_i > 0, w_i > 0";
  def.info.equality_desc = "a_n = A_(n-1)";
  def.info.param_names = {"n", "convention"};
  def.info.default_params = {{"n", 5L}, {"convention", std::string("Wk")}};
  def.validate = [](const ParamMap& params) {
    require_n_at_least(params, 2);
    const std::string c = param_enum(params, "convention");
    require(c == "Wk" || c == "InvWk", "convention must be Wk or InvWk");
  };
  def.sample_params = [](Rng& rng, Side) -> ParamMap {
    return {{"n", (long)rng.int_in(2, 10)}, {"convention", std::string("Wk")}};
  };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    const PopoviciuConvention conv = param_enum(params, "convention") == "Wk"
                                         ? PopoviciuConvention::ExponentWk
                                         : PopoviciuConvention::ExponentInvWk;
    InequalityDescriptor d;
    d.entry = "POPOVICIU";
    d.params = params;
    d.direction = Direction::GreaterEq;
    d.shape.values_count = n;
    d.shape.weights_count = n;
    d.validity_desc = "a_i > 0, w_i > 0";
    d.equality_desc = "a_n = A_(n-1)";
    d.formula_desc = "(A_n/G_n)^e_n >= (A_(n-1)/G_(n-1))^e_(n-1)";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return all_positive(pt.values) && all_positive(pt.weights);
    };
    d.equality = [n](const EvalPoint& pt, const PrecisionContext& ctx) {
      WeightedTuple t = tup(pt);
      return approx_equal(pt.values[n - 1], arithmetic_mean(t.prefix(n - 1), ctx), ctx);
    };
    d.formula = [n, conv](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      WeightedTuple t = tup(pt);
      return {popoviciu_ratio(t, n, conv, ctx), popoviciu_ratio(t, n - 1, conv, ctx)};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kValLo, kValHi, ctx);
      pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    d.sample_equality = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n - 1, kValLo, kValHi, ctx);
      pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      std::vector<Scalar> wprefix(pt.weights.begin(), pt.weights.end() - 1);
      WeightedTuple head = WeightedTuple::of(pt.values, wprefix);
      pt.values.push_back(arithmetic_mean(head, ctx));
      return pt;
    };
    return d;
  };
  return def;
}

// ---------------------------------------------------------------------------
// Bernoulli family
// ---------------------------------------------------------------------------

LhsRhs bernoulli_formula(const Scalar& x, const Scalar& a, const PrecisionContext& ctx) {
  Scalar one = ctx.make_int(1);
  return {pow_scalar(one + x, a), one + a * x};
}

bool bernoulli_three_branch_equality(const EvalPoint& pt, const PrecisionContext& ctx) {
  return approx_equal(pt.scalars[0], ctx.make_int(0), ctx) ||
         approx_equal(pt.scalars[1], ctx.make_int(0), ctx) ||
         approx_equal(pt.scalars[1], ctx.make_int(1), ctx);
}

bool x_is_zero_equality(const EvalPoint& pt, const PrecisionContext& ctx) {
  return approx_equal(pt.scalars[0], ctx.make_int(0), ctx);
}

Scalar alpha_outside_unit(Rng& rng, const PrecisionContext& ctx) {
  return rng.coin() ? -rng.log_uniform(1e-2, 8, ctx)
                    : ctx.make_int(1) + rng.log_uniform(1e-2, 8, ctx);
}

// Builds one member of the Bernoulli family. `x_dom` restricts x; alpha runs
// over [0,1] with direction <= on one side and outside [0,1] with >= on the
// other. `low_side_is_primary` selects which of the two is the primary side.
EntryDef bernoulli_variant(const std::string& name, const std::string& summary,
                           const std::string& x_desc,
                           std::function<bool(const Scalar&, const PrecisionContext&)> x_dom,
                           std::function<Scalar(Rng&, const PrecisionContext&)> x_draw,
                           bool low_side_is_primary, bool with_complement = true) {
  EntryDef def;
  def.info.name = name;
  def.info.summary = summary;
  def.info.reference = "Jacob Bernoulli (1689); general exponent form classical";
  def.info.formula_desc = "(1+x)^alpha vs 1 + alpha*x";
  const std::string low_desc = x_desc + ", 0 <= alpha <= 1 (direction <=)";
  const std::string high_desc = x_desc + ", alpha < 0 or alpha > 1 (direction >=)";
  def.info.validity_desc = low_side_is_primary ? low_desc : high_desc;
  if (with_complement) def.info.complement_desc = low_side_is_primary ? high_desc : low_desc;
  def.info.equality_desc = low_side_is_primary ? "x = 0, or alpha in {0, 1}" : "x = 0";
  def.info.has_complement = with_complement;
  def.validate = [](const ParamMap&) {};
  def.build = [name, x_dom, x_draw, low_side_is_primary, with_complement, low_desc, high_desc](
                  const ParamMap& params, Side side) {
    const bool low_side = (side == Side::Primary) == low_side_is_primary;
    InequalityDescriptor d;
    d.entry = name;
    d.params = params;
    d.side = side;
    d.has_complement = with_complement;
    d.shape.scalar_names = {"x", "alpha"};
    d.formula_desc = "(1+x)^alpha vs 1 + alpha*x";
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return bernoulli_formula(pt.scalars[0], pt.scalars[1], ctx);
    };
    if (low_side) {
      d.direction = Direction::LessEq;
      d.validity_desc = low_desc;
      d.equality_desc = "x = 0, or alpha in {0, 1}";
      d.validity = [x_dom](const EvalPoint& pt, const PrecisionContext& ctx) {
        return x_dom(pt.scalars[0], ctx) && in_unit_interval(pt.scalars[1], ctx);
      };
      d.equality = bernoulli_three_branch_equality;
      d.sample = [x_draw](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {x_draw(rng, ctx), rng.unit(ctx)};
        return pt;
      };
      d.sample_equality = [x_draw](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        switch (rng.below(3)) {
          case 0: pt.scalars = {ctx.make_int(0), rng.unit(ctx)}; break;
          case 1: pt.scalars = {x_draw(rng, ctx), ctx.make_int(0)}; break;
          default: pt.scalars = {x_draw(rng, ctx), ctx.make_int(1)}; break;
        }
        return pt;
      };
    } else {
      d.direction = Direction::GreaterEq;
      d.validity_desc = high_desc;
      d.equality_desc = "x = 0";
      d.validity = [x_dom](const EvalPoint& pt, const PrecisionContext& ctx) {
        return x_dom(pt.scalars[0], ctx) && !in_unit_interval(pt.scalars[1], ctx);
      };
      d.equality = x_is_zero_equality;
      d.sample = [x_draw](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {x_draw(rng, ctx), alpha_outside_unit(rng, ctx)};
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {ctx.make_int(0), alpha_outside_unit(rng, ctx)};
        return pt;
      };
    }
    return d;
  };
  return def;
}

// Variant with a fixed alpha region (alpha > 1 or alpha < 0) as the primary
// side, reversed direction, and the unit-interval side as its complement.
EntryDef bernoulli_alpha_variant(const std::string& name, const std::string& summary,
                                 bool alpha_high) {
  EntryDef def;
  def.info.name = name;
  def.info.summary = summary;
  def.info.reference = "Jacob Bernoulli (1689); general exponent form classical";
  def.info.formula_desc = "(1+x)^alpha vs 1 + alpha*x";
  const std::string region = alpha_high ? "alpha > 1" : "alpha < 0";
  def.info.validity_desc = "x > -1, " + region + " (direction >=)";
  def.info.complement_desc = "x > -1, 0 <= alpha <= 1 (direction <=)";
  def.info.equality_desc = "x = 0";
  def.info.has_complement = true;
  def.validate = [](const ParamMap&) {};
  def.build = [name, alpha_high, region](const ParamMap& params, Side side) {
    InequalityDescriptor d;
    d.entry = name;
    d.params = params;
    d.side = side;
    d.has_complement = true;
    d.shape.scalar_names = {"x", "alpha"};
    d.formula_desc = "(1+x)^alpha vs 1 + alpha*x";
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return bernoulli_formula(pt.scalars[0], pt.scalars[1], ctx);
    };
    auto x_gt_m1 = [](const Scalar& x, const PrecisionContext& ctx) {
      return x > ctx.make_int(-1);
    };
    if (side == Side::Primary) {
      d.direction = Direction::GreaterEq;
      d.validity_desc = "x > -1, " + region;
      d.equality_desc = "x = 0";
      d.validity = [x_gt_m1, alpha_high](const EvalPoint& pt, const PrecisionContext& ctx) {
        const Scalar& a = pt.scalars[1];
        bool region_ok = alpha_high ? a > ctx.make_int(1) : a < ctx.make_int(0);
        return x_gt_m1(pt.scalars[0], ctx) && region_ok;
      };
      d.equality = x_is_zero_equality;
      auto draw_alpha = [alpha_high](Rng& rng, const PrecisionContext& ctx) {
        Scalar m = rng.log_uniform(1e-2, 8, ctx);
        return alpha_high ? ctx.make_int(1) + m : -m;
      };
      d.sample = [draw_alpha](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {draw_gt_minus_one(rng, kValHi, ctx), draw_alpha(rng, ctx)};
        return pt;
      };
      d.sample_equality = [draw_alpha](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {ctx.make_int(0), draw_alpha(rng, ctx)};
        return pt;
      };
    } else {
      d.direction = Direction::LessEq;
      d.validity_desc = "x > -1, 0 <= alpha <= 1";
      d.equality_desc = "x = 0, or alpha in {0, 1}";
      d.validity = [x_gt_m1](const EvalPoint& pt, const PrecisionContext& ctx) {
        return x_gt_m1(pt.scalars[0], ctx) && in_unit_interval(pt.scalars[1], ctx);
      };
      d.equality = bernoulli_three_branch_equality;
      d.sample = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {draw_gt_minus_one(rng, kValHi, ctx), rng.unit(ctx)};
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        switch (rng.below(3)) {
          case 0: pt.scalars = {ctx.make_int(0), rng.unit(ctx)}; break;
          case 1: pt.scalars = {draw_gt_minus_one(rng, kValHi, ctx), ctx.make_int(0)}; break;
          default: pt.scalars = {draw_gt_minus_one(rng, kValHi, ctx), ctx.make_int(1)}; break;
        }
        return pt;
      };
    }
    return d;
  };
  return def;
}

EntryDef original_bernoulli_def() {
  EntryDef def;
  def.info.name = "ORIGINAL_BERNOULLI";
  def.info.summary = "Bernoulli's inequality with a fixed integer exponent";
  def.info.reference = "Jacob Bernoulli (1689)";
  def.info.formula_desc = "(1+x)^n >= 1 + n*x";
  def.info.validity_desc = "x > -1";
  def.info.equality_desc = "x = 0";
  def.info.param_names = {"n"};
  def.info.default_params = {{"n", 3L}};
  def.validate = [](const ParamMap& params) { require_n_at_least(params, 2); };
  def.sample_params = [](Rng& rng, Side) -> ParamMap { return {{"n", (long)rng.int_in(2, 8)}}; };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = "ORIGINAL_BERNOULLI";
    d.params = params;
    d.direction = Direction::GreaterEq;
    d.shape.scalar_names = {"x"};
    d.validity_desc = "x > -1";
    d.equality_desc = "x = 0";
    d.formula_desc = "(1+x)^n >= 1 + n*x";
    d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return pt.scalars[0] > ctx.make_int(-1);
    };
    d.equality = x_is_zero_equality;
    d.formula = [n](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      Scalar one = ctx.make_int(1);
      return {pow_scalar(one + pt.scalars[0], ctx.make_int(n)),
              one + ctx.make_int(n) * pt.scalars[0]};
    };
    d.sample = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.scalars = {draw_gt_minus_one(rng, 1e2, ctx)};
      return pt;
    };
    d.sample_equality = [](Rng&, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.scalars = {ctx.make_int(0)};
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef neg_reflect_def() {
  EntryDef def;
  def.info.name = "NEG_REFLECT";
  def.info.summary = "Bernoulli's inequality with the argument reflected (x -> -x)";
  def.info.reference = "classical";
  def.info.formula_desc = "(1-x)^alpha vs 1 - alpha*x";
  def.info.validity_desc = "x < 1, 0 <= alpha <= 1 (direction <=)";
  def.info.complement_desc = "x < 1, alpha < 0 or alpha > 1 (direction >=)";
  def.info.equality_desc = "x = 0, or alpha in {0, 1}";
  def.info.has_complement = true;
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side side) {
    InequalityDescriptor d;
    d.entry = "NEG_REFLECT";
    d.params = params;
    d.side = side;
    d.has_complement = true;
    d.shape.scalar_names = {"x", "alpha"};
    d.formula_desc = "(1-x)^alpha vs 1 - alpha*x";
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar &x = pt.scalars[0], &a = pt.scalars[1];
      Scalar one = ctx.make_int(1);
      return {pow_scalar(one - x, a), one - a * x};
    };
    auto draw_x_lt_1 = [](Rng& rng, const PrecisionContext& ctx) {
      return ctx.make_int(1) - rng.log_uniform(1e-6, kValHi, ctx);
    };
    if (side == Side::Primary) {
      d.direction = Direction::LessEq;
      d.validity_desc = "x < 1, 0 <= alpha <= 1";
      d.equality_desc = "x = 0, or alpha in {0, 1}";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return pt.scalars[0] < ctx.make_int(1) && in_unit_interval(pt.scalars[1], ctx);
      };
      d.equality = bernoulli_three_branch_equality;
      d.sample = [draw_x_lt_1](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {draw_x_lt_1(rng, ctx), rng.unit(ctx)};
        return pt;
      };
      d.sample_equality = [draw_x_lt_1](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        switch (rng.below(3)) {
          case 0: pt.scalars = {ctx.make_int(0), rng.unit(ctx)}; break;
          case 1: pt.scalars = {draw_x_lt_1(rng, ctx), ctx.make_int(0)}; break;
          default: pt.scalars = {draw_x_lt_1(rng, ctx), ctx.make_int(1)}; break;
        }
        return pt;
      };
    } else {
      d.direction = Direction::GreaterEq;
      d.validity_desc = "x < 1, alpha < 0 or alpha > 1";
      d.equality_desc = "x = 0";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return pt.scalars[0] < ctx.make_int(1) && !in_unit_interval(pt.scalars[1], ctx);
      };
      d.equality = x_is_zero_equality;
      d.sample = [draw_x_lt_1](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {draw_x_lt_1(rng, ctx), alpha_outside_unit(rng, ctx)};
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {ctx.make_int(0), alpha_outside_unit(rng, ctx)};
        return pt;
      };
    }
    return d;
  };
  return def;
}

EntryDef power_secant_def() {
  EntryDef def;
  def.info.name = "POWER_SECANT";
  def.info.summary = "Power function against its tangent line at 1";
  def.info.reference = "classical";
  def.info.formula_desc = "x^alpha vs 1 - alpha + alpha*x";
  def.info.validity_desc = "x > 0, 0 <= alpha <= 1 (direction <=)";
  def.info.complement_desc = "x > 0, alpha < 0 or alpha > 1 (direction >=)";
  def.info.equality_desc = "x = 1, or alpha in {0, 1}";
  def.info.has_complement = true;
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side side) {
    InequalityDescriptor d;
    d.entry = "POWER_SECANT";
    d.params = params;
    d.side = side;
    d.has_complement = true;
    d.shape.scalar_names = {"x", "alpha"};
    d.formula_desc = "x^alpha vs 1 - alpha + alpha*x";
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar &x = pt.scalars[0], &a = pt.scalars[1];
      Scalar one = ctx.make_int(1);
      return {pow_scalar(x, a), one - a + a * x};
    };
    auto x_eq_one = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return approx_equal(pt.scalars[0], ctx.make_int(1), ctx);
    };
    if (side == Side::Primary) {
      d.direction = Direction::LessEq;
      d.validity_desc = "x > 0, 0 <= alpha <= 1";
      d.equality_desc = "x = 1, or alpha in {0, 1}";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return positive(pt.scalars[0]) && in_unit_interval(pt.scalars[1], ctx);
      };
      d.equality = [x_eq_one](const EvalPoint& pt, const PrecisionContext& ctx) {
        return x_eq_one(pt, ctx) || approx_equal(pt.scalars[1], ctx.make_int(0), ctx) ||
               approx_equal(pt.scalars[1], ctx.make_int(1), ctx);
      };
      d.sample = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {rng.log_uniform(kValLo, kValHi, ctx), rng.unit(ctx)};
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        switch (rng.below(3)) {
          case 0: pt.scalars = {ctx.make_int(1), rng.unit(ctx)}; break;
          case 1: pt.scalars = {rng.log_uniform(kValLo, kValHi, ctx), ctx.make_int(0)}; break;
          default: pt.scalars = {rng.log_uniform(kValLo, kValHi, ctx), ctx.make_int(1)}; break;
        }
        return pt;
      };
    } else {
      d.direction = Direction::GreaterEq;
      d.validity_desc = "x > 0, alpha < 0 or alpha > 1";
      d.equality_desc = "x = 1";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return positive(pt.scalars[0]) && !in_unit_interval(pt.scalars[1], ctx);
      };
      d.equality = x_eq_one;
      d.sample = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {rng.log_uniform(kValLo, kValHi, ctx), alpha_outside_unit(rng, ctx)};
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {ctx.make_int(1), alpha_outside_unit(rng, ctx)};
        return pt;
      };
    }
    return d;
  };
  return def;
}

EntryDef barrow_lemma_def() {
  EntryDef def;
  def.info.name = "BARROW_LEMMA";
  def.info.summary = "(y^p - 1)/p is nondecreasing in the integer exponent p";
  def.info.reference = "classical";
  def.info.formula_desc = "(y^p - 1)/p >= (y^q - 1)/q";
  def.info.validity_desc = "y > 0";
  def.info.equality_desc = "y = 1";
  def.info.param_names = {"p", "q"};
  def.info.default_params = {{"p", 3L}, {"q", 1L}};
  def.validate = [](const ParamMap& params) {
    const long p = param_int(params, "p"), q = param_int(params, "q");
    require(q >= 1 && p > q, "need integers p > q >= 1");
  };
  def.sample_params = [](Rng& rng, Side) -> ParamMap {
    long q = rng.int_in(1, 8);
    long p = q + rng.int_in(1, static_cast<int>(9 - q));
    return {{"p", p}, {"q", q}};
  };
  def.build = [](const ParamMap& params, Side) {
    const long p = param_int(params, "p"), q = param_int(params, "q");
    InequalityDescriptor d;
    d.entry = "BARROW_LEMMA";
    d.params = params;
    d.direction = Direction::GreaterEq;
    d.shape.scalar_names = {"y"};
    d.validity_desc = "y > 0";
    d.equality_desc = "y = 1";
    d.formula_desc = "(y^p - 1)/p >= (y^q - 1)/q";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return positive(pt.scalars[0]);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return approx_equal(pt.scalars[0], ctx.make_int(1), ctx);
    };
    d.formula = [p, q](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar& y = pt.scalars[0];
      Scalar one = ctx.make_int(1);
      return {(pow_scalar(y, ctx.make_int(p)) - one) / ctx.make_int(p),
              (pow_scalar(y, ctx.make_int(q)) - one) / ctx.make_int(q)};
    };
    d.sample = [](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.scalars = {rng.log_uniform(kMidLo, kMidHi, ctx)};
      return pt;
    };
    d.sample_equality = [](Rng&, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.scalars = {ctx.make_int(1)};
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef ruthing_def() {
  EntryDef def;
  def.info.name = "RUTHING";
  def.info.summary = "Power function against its tangent line, two-point homogeneous form";
  def.info.reference = "D. Ruething";
  def.info.formula_desc = "alpha*a^(alpha-1)*(a-b) vs a^alpha - b^alpha";
  def.info.validity_desc = "a, b > 0, 0 <= alpha <= 1 (direction <=)";
  def.info.complement_desc = "a, b > 0, alpha < 0 or alpha > 1 (direction >=)";
  def.info.equality_desc = "a = b, or alpha in {0, 1}";
  def.info.has_complement = true;
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side side) {
    InequalityDescriptor d;
    d.entry = "RUTHING";
    d.params = params;
    d.side = side;
    d.has_complement = true;
    d.shape.scalar_names = {"a", "b", "alpha"};
    d.formula_desc = "alpha*a^(alpha-1)*(a-b) vs a^alpha - b^alpha";
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar &a = pt.scalars[0], &b = pt.scalars[1], &al = pt.scalars[2];
      Scalar one = ctx.make_int(1);
      return {al * pow_scalar(a, al - one) * (a - b), pow_scalar(a, al) - pow_scalar(b, al)};
    };
    auto a_eq_b = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return approx_equal(pt.scalars[0], pt.scalars[1], ctx);
    };
    if (side == Side::Primary) {
      d.direction = Direction::LessEq;
      d.validity_desc = "a, b > 0, 0 <= alpha <= 1";
      d.equality_desc = "a = b, or alpha in {0, 1}";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return positive(pt.scalars[0]) && positive(pt.scalars[1]) &&
               in_unit_interval(pt.scalars[2], ctx);
      };
      d.equality = [a_eq_b](const EvalPoint& pt, const PrecisionContext& ctx) {
        return a_eq_b(pt, ctx) || approx_equal(pt.scalars[2], ctx.make_int(0), ctx) ||
               approx_equal(pt.scalars[2], ctx.make_int(1), ctx);
      };
      d.sample = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {rng.log_uniform(kMidLo, kMidHi, ctx), rng.log_uniform(kMidLo, kMidHi, ctx),
                      rng.unit(ctx)};
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        Scalar a = rng.log_uniform(kMidLo, kMidHi, ctx);
        switch (rng.below(3)) {
          case 0: pt.scalars = {a, a, rng.unit(ctx)}; break;
          case 1:
            pt.scalars = {a, rng.log_uniform(kMidLo, kMidHi, ctx), ctx.make_int(0)};
            break;
          default:
            pt.scalars = {a, rng.log_uniform(kMidLo, kMidHi, ctx), ctx.make_int(1)};
            break;
        }
        return pt;
      };
    } else {
      d.direction = Direction::GreaterEq;
      d.validity_desc = "a, b > 0, alpha < 0 or alpha > 1";
      d.equality_desc = "a = b";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return positive(pt.scalars[0]) && positive(pt.scalars[1]) &&
               !in_unit_interval(pt.scalars[2], ctx);
      };
      d.equality = a_eq_b;
      d.sample = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {rng.log_uniform(kMidLo, kMidHi, ctx), rng.log_uniform(kMidLo, kMidHi, ctx),
                      alpha_outside_unit(rng, ctx)};
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        Scalar a = rng.log_uniform(kMidLo, kMidHi, ctx);
        pt.scalars = {a, a, alpha_outside_unit(rng, ctx)};
        return pt;
      };
    }
    return d;
  };
  return def;
}

EntryDef jacobsthal_def() {
  EntryDef def;
  def.info.name = "JACOBSTHAL";
  def.info.summary = "Weighted two-power comparison alpha*a^(alpha+1) + b^(alpha+1) vs "
                     "(alpha+1)*a^alpha*b";
  def.info.reference = "E. Jacobsthal";
  def.info.formula_desc = "alpha*a^(alpha+1) + b^(alpha+1) vs (alpha+1)*a^alpha*b";
  def.info.validity_desc = "a, b > 0, alpha >= 0 (direction >=)";
  def.info.complement_desc = "a, b > 0, -1 <= alpha <= 0 (direction <=)";
  def.info.equality_desc = "a = b, or alpha = 0";
  def.info.has_complement = true;
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side side) {
    InequalityDescriptor d;
    d.entry = "JACOBSTHAL";
    d.params = params;
    d.side = side;
    d.has_complement = true;
    d.shape.scalar_names = {"a", "b", "alpha"};
    d.formula_desc = "alpha*a^(alpha+1) + b^(alpha+1) vs (alpha+1)*a^alpha*b";
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar &a = pt.scalars[0], &b = pt.scalars[1], &al = pt.scalars[2];
      Scalar one = ctx.make_int(1);
      return {al * pow_scalar(a, al + one) + pow_scalar(b, al + one),
              (al + one) * pow_scalar(a, al) * b};
    };
    auto a_eq_b = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return approx_equal(pt.scalars[0], pt.scalars[1], ctx);
    };
    if (side == Side::Primary) {
      d.direction = Direction::GreaterEq;
      d.validity_desc = "a, b > 0, alpha >= 0";
      d.equality_desc = "a = b, or alpha = 0";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return positive(pt.scalars[0]) && positive(pt.scalars[1]) &&
               pt.scalars[2] >= ctx.make_int(0);
      };
      d.equality = [a_eq_b](const EvalPoint& pt, const PrecisionContext& ctx) {
        return a_eq_b(pt, ctx) || approx_equal(pt.scalars[2], ctx.make_int(0), ctx);
      };
      d.sample = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {rng.log_uniform(kMidLo, kMidHi, ctx), rng.log_uniform(kMidLo, kMidHi, ctx),
                      rng.log_uniform(1e-2, 8, ctx)};
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        Scalar a = rng.log_uniform(kMidLo, kMidHi, ctx);
        if (rng.coin()) {
          pt.scalars = {a, a, rng.log_uniform(1e-2, 8, ctx)};
        } else {
          pt.scalars = {a, rng.log_uniform(kMidLo, kMidHi, ctx), ctx.make_int(0)};
        }
        return pt;
      };
    } else {
      d.direction = Direction::LessEq;
      d.validity_desc = "a, b > 0, -1 <= alpha <= 0";
      d.equality_desc = "a = b, or alpha in {-1, 0}";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return positive(pt.scalars[0]) && positive(pt.scalars[1]) &&
               pt.scalars[2] >= ctx.make_int(-1) && pt.scalars[2] <= ctx.make_int(0);
      };
      d.equality = [a_eq_b](const EvalPoint& pt, const PrecisionContext& ctx) {
        return a_eq_b(pt, ctx) || approx_equal(pt.scalars[2], ctx.make_int(0), ctx) ||
               approx_equal(pt.scalars[2], ctx.make_int(-1), ctx);
      };
      d.sample = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {rng.log_uniform(kMidLo, kMidHi, ctx), rng.log_uniform(kMidLo, kMidHi, ctx),
                      -rng.unit(ctx)};
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        Scalar a = rng.log_uniform(kMidLo, kMidHi, ctx);
        switch (rng.below(3)) {
          case 0: pt.scalars = {a, a, -rng.unit(ctx)}; break;
          case 1:
            pt.scalars = {a, rng.log_uniform(kMidLo, kMidHi, ctx), ctx.make_int(0)};
            break;
          default:
            pt.scalars = {a, rng.log_uniform(kMidLo, kMidHi, ctx), ctx.make_int(-1)};
            break;
        }
        return pt;
      };
    }
    return d;
  };
  return def;
}

EntryDef bush_def() {
  EntryDef def;
  def.info.name = "BUSH";
  def.info.summary = "Compound-growth comparison (1 + x/p)^p vs (1 + x/q)^q";
  def.info.reference = "L. E. Bush, Amer. Math. Monthly 62 (1955)";
  def.info.formula_desc = "(1 + x/p)^p vs (1 + x/q)^q";
  def.info.validity_desc = "0 < p <= q with x > -p, or p <= q < 0 with x < -q (direction <=)";
  def.info.complement_desc = "p < 0 < q with -q < x < -p (direction >=)";
  def.info.equality_desc = "x = 0, or p = q";
  def.info.has_complement = true;
  def.validate = [](const ParamMap&) {};
  def.build = [](const ParamMap& params, Side side) {
    InequalityDescriptor d;
    d.entry = "BUSH";
    d.params = params;
    d.side = side;
    d.has_complement = true;
    d.shape.scalar_names = {"x", "p", "q"};
    d.formula_desc = "(1 + x/p)^p vs (1 + x/q)^q";
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      const Scalar &x = pt.scalars[0], &p = pt.scalars[1], &q = pt.scalars[2];
      Scalar one = ctx.make_int(1);
      return {pow_scalar(one + x / p, p), pow_scalar(one + x / q, q)};
    };
    if (side == Side::Primary) {
      d.direction = Direction::LessEq;
      d.validity_desc = "0 < p <= q with x > -p, or p <= q < 0 with x < -q";
      d.equality_desc = "x = 0, or p = q";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        const Scalar &x = pt.scalars[0], &p = pt.scalars[1], &q = pt.scalars[2];
        Scalar zero = ctx.make_int(0);
        if (p > zero && p <= q) return x > -p;
        if (q < zero && p <= q) return x < -q;
        return false;
      };
      d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return approx_equal(pt.scalars[0], ctx.make_int(0), ctx) ||
               approx_equal(pt.scalars[1], pt.scalars[2], ctx);
      };
      d.sample = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        Scalar u = rng.log_uniform(0.1, 20, ctx);
        Scalar v = rng.log_uniform(0.1, 20, ctx);
        Scalar lam = rng.log_uniform(0.05, 20, ctx);
        Scalar one = ctx.make_int(1);
        if (rng.coin()) {
          Scalar p = min_scalar(u, v), q = max_scalar(u, v);
          pt.scalars = {p * (lam - one), p, q};
        } else {
          Scalar p = -max_scalar(u, v), q = -min_scalar(u, v);
          pt.scalars = {(-q) * (one - lam), p, q};  // x = |q|*(1-lam) < |q|
        }
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        Scalar one = ctx.make_int(1);
        switch (rng.below(3)) {
          case 0: {  // x = 0 on the positive branch, with well-separated p < q
            Scalar p = rng.log_uniform(0.1, 5, ctx);
            Scalar q = p * (ctx.make_int(2) + rng.log_uniform(0.1, 5, ctx));
            pt.scalars = {ctx.make_int(0), p, q};
            break;
          }
          case 1: {  // x = 0 on the negative branch
            Scalar u = rng.log_uniform(0.1, 5, ctx);
            Scalar q = u * (ctx.make_int(2) + rng.log_uniform(0.1, 5, ctx));
            pt.scalars = {ctx.make_int(0), -q, -u};
            break;
          }
          default: {  // p = q > 0
            Scalar p = rng.log_uniform(0.1, 20, ctx);
            Scalar lam = rng.log_uniform(0.05, 20, ctx);
            pt.scalars = {p * (lam - one), p, p};
            break;
          }
        }
        return pt;
      };
    } else {
      d.direction = Direction::GreaterEq;
      d.validity_desc = "p < 0 < q, -q < x < -p";
      d.equality_desc = "x = 0";
      d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        const Scalar &x = pt.scalars[0], &p = pt.scalars[1], &q = pt.scalars[2];
        Scalar zero = ctx.make_int(0);
        return p < zero && q > zero && x > -q && x < -p;
      };
      d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
        return approx_equal(pt.scalars[0], ctx.make_int(0), ctx);
      };
      d.sample = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        Scalar p = -rng.log_uniform(0.1, 20, ctx);
        Scalar q = rng.log_uniform(0.1, 20, ctx);
        Scalar t = rng.uniform(1e-6, 1.0 - 1e-6, ctx);
        pt.scalars = {-q + t * (q - p), p, q};  // interior of (-q, -p)
        return pt;
      };
      d.sample_equality = [](Rng& rng, const PrecisionContext& ctx) {
        EvalPoint pt;
        pt.scalars = {ctx.make_int(0), -rng.log_uniform(0.1, 20, ctx),
                      rng.log_uniform(0.1, 20, ctx)};
        return pt;
      };
    }
    return d;
  };
  return def;
}

EntryDef pecaric_def() {
  EntryDef def;
  def.info.name = "PECARIC";
  def.info.summary = "Weighted-product Bernoulli bound for subunit total weight";
  def.info.reference = "J. Pecaric";
  def.info.formula_desc = "prod((1+a_i)^w_i) <= 1 + sum(w_i*a_i)";
  def.info.validity_desc = "a_i > -1, w_i >= 0, sum(w) <= 1";
  def.info.equality_desc = "W = 0, or values constant on the weight support with W = 1 or the constant 0";
  def.info.param_names = {"n"};
  def.info.default_params = {{"n", 4L}};
  def.validate = [](const ParamMap& params) { require_n_at_least(params, 2); };
  def.sample_params = [](Rng& rng, Side) -> ParamMap { return {{"n", (long)rng.int_in(2, 8)}}; };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = "PECARIC";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.values_count = n;
    d.shape.weights_count = n;
    d.shape.signed_values = true;
    d.validity_desc = "a_i > -1, w_i >= 0, sum(w) <= 1";
    d.equality_desc = "W = 0, or values constant on the weight support with W = 1 or the constant 0";
    d.formula_desc = "prod((1+a_i)^w_i) <= 1 + sum(w_i*a_i)";
    d.validity = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      Scalar minus_one = ctx.make_int(-1);
      for (const Scalar& a : pt.values) {
        if (!a.is_finite() || !(a > minus_one)) return false;
      }
      if (!all_nonnegative(pt.weights)) return false;
      Scalar w = sum(pt.weights, ctx);
      return w < ctx.make_int(1) || approx_equal(w, ctx.make_int(1), ctx);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      // Equality cases: W = 0, or the values on the weight support are all
      // equal to some c with W = 1 or c = 0.
      Scalar w = sum(pt.weights, ctx);
      Scalar zero = ctx.make_int(0);
      if (approx_equal(w, zero, ctx)) return true;
      std::size_t first = pt.values.size();
      for (std::size_t i = 0; i < pt.values.size(); ++i) {
        if (pt.weights[i].sgn() > 0) {
          first = i;
          break;
        }
      }
      if (first == pt.values.size()) return true;  // all weights exactly zero
      const Scalar& c = pt.values[first];
      for (std::size_t i = first + 1; i < pt.values.size(); ++i) {
        if (pt.weights[i].sgn() > 0 && !approx_equal(pt.values[i], c, ctx)) return false;
      }
      return approx_equal(w, ctx.make_int(1), ctx) || approx_equal(c, zero, ctx);
    };
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      Scalar one = ctx.make_int(1);
      Scalar prod = one;
      Scalar lin = ctx.make_int(0);
      for (std::size_t i = 0; i < pt.values.size(); ++i) {
        prod = prod * pow_scalar(one + pt.values[i], pt.weights[i]);
        lin = lin + pt.weights[i] * pt.values[i];
      }
      return {prod, one + lin};
    };
    auto draw_signed = [](Rng& rng, const PrecisionContext& ctx) {
      if (rng.coin()) return rng.log_uniform(1e-3, 10, ctx);
      return -(rng.unit(ctx) * ctx.make(1.0 - 1e-6));
    };
    auto scaled_weights = [](Rng& rng, long count, const Scalar& target,
                             const PrecisionContext& ctx) {
      std::vector<Scalar> w = draw_vec(rng, count, kWtLo, kWtHi, ctx);
      Scalar total = sum(w, ctx);
      for (Scalar& wi : w) wi = wi * target / total;
      return w;
    };
    d.sample = [n, draw_signed, scaled_weights](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      for (long i = 0; i < n; ++i) pt.values.push_back(draw_signed(rng, ctx));
      pt.weights = scaled_weights(rng, n, rng.uniform(1e-3, 1.0, ctx), ctx);
      return pt;
    };
    d.sample_equality = [n, draw_signed, scaled_weights](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      switch (rng.below(3)) {
        case 0:  // unit total weight, constant values
          pt.values = const_vec(n, draw_signed(rng, ctx));
          pt.weights = scaled_weights(rng, n, ctx.make_int(1), ctx);
          break;
        case 1:  // all values zero, interior total weight
          pt.values = const_vec(n, ctx.make_int(0));
          pt.weights = scaled_weights(rng, n, rng.uniform(0.2, 0.8, ctx), ctx);
          break;
        default:  // vanishing total weight
          for (long i = 0; i < n; ++i) pt.values.push_back(draw_signed(rng, ctx));
          pt.weights = scaled_weights(rng, n, ctx.make(1e-12), ctx);
          break;
      }
      return pt;
    };
    return d;
  };
  return def;
}

// ---------------------------------------------------------------------------
// Power means and the sum-form inequalities
// ---------------------------------------------------------------------------

ExtendedReal param_order(const ParamMap& params, const std::string& key, long bits) {
  const double v = param_real(params, key);
  if (std::isinf(v)) return v > 0 ? ExtendedReal::pos_inf() : ExtendedReal::neg_inf();
  return ExtendedReal(Scalar::of(v, bits));
}

EntryDef powermean_def() {
  EntryDef def;
  def.info.name = "POWERMEAN";
  def.info.summary = "Weighted power means are nondecreasing in the order";
  def.info.reference = "classical (Schloemilch; Hardy-Littlewood-Polya ch. II)";
  def.info.formula_desc = "M_r(a;w) <= M_s(a;w)  for r < s";
  def.info.validity_desc = "a_i > 0, w_i > 0";
  def.info.equality_desc = "all a_i equal";
  def.info.param_names = {"n", "r", "s"};
  def.info.default_params = {{"n", 4L}, {"r", -1.0}, {"s", 2.0}};
  def.validate = [](const ParamMap& params) {
    require_n_at_least(params, 2);
    ExtendedReal r = param_order(params, "r", kDefaultPrecisionBits);
    ExtendedReal s = param_order(params, "s", kDefaultPrecisionBits);
    require(ExtendedReal::compare(r, s) < 0, "need r < s");
  };
  def.sample_params = [](Rng& rng, Side) -> ParamMap {
    double r = uniform_d(rng, -8, 7.8);
    double s = r + 0.1 + uniform_d(rng, 0, 8.0 - (r + 0.1) > 0 ? 8.0 - (r + 0.1) : 0.1);
    if (rng.coin(0.05)) r = -std::numeric_limits<double>::infinity();
    if (rng.coin(0.05)) s = std::numeric_limits<double>::infinity();
    return {{"n", (long)rng.int_in(2, 8)}, {"r", r}, {"s", s}};
  };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = "POWERMEAN";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.values_count = n;
    d.shape.weights_count = n;
    d.validity_desc = "a_i > 0, w_i > 0";
    d.equality_desc = "all a_i equal";
    d.formula_desc = "M_r(a;w) <= M_s(a;w)";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return all_positive(pt.values) && all_positive(pt.weights);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return is_constant(pt.values, ctx);
    };
    d.formula = [params](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      WeightedTuple t = tup(pt);
      ExtendedReal r = param_order(params, "r", ctx.precision_bits);
      ExtendedReal s = param_order(params, "s", ctx.precision_bits);
      return {power_mean(t, r, ctx), power_mean(t, s, ctx)};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kValLo, kValHi, ctx);
      pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    d.sample_equality = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = const_vec(n, rng.log_uniform(kValLo, kValHi, ctx));
      pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    return d;
  };
  return def;
}

// Shared machinery for the Hoelder-type entries (optionally weighted; the
// full versions carry a parameter-region complement for p < 1).
EntryDef holder_like(const std::string& name, const std::string& summary, bool weighted,
                     bool full_range) {
  EntryDef def;
  def.info.name = name;
  def.info.summary = summary;
  def.info.reference = "O. Hoelder (1889); L. J. Rogers (1888)";
  const std::string wprefix = weighted ? "w_i*" : "";
  def.info.formula_desc = "sum(" + wprefix + "a_i*b_i) vs (sum(" + wprefix + "a_i^p))^(1/p) * (sum(" +
                          wprefix + "b_i^p'))^(1/p')";
  def.info.validity_desc = std::string("a_i, b_i > 0") + (weighted ? ", w_i > 0" : "") +
                           (full_range ? "; p > 1 (direction <=)" : "; parameter p > 1");
  if (full_range) def.info.complement_desc = "p < 1, p != 0 (direction >=)";
  def.info.equality_desc = "b_i proportional to a_i^(p-1)";
  def.info.has_complement = full_range;
  def.info.param_names = {"n", "p"};
  def.info.default_params = {{"n", 4L}, {"p", 2.5}};
  def.validate = [full_range](const ParamMap& params) {
    require_n_at_least(params, 2);
    const double p = param_real(params, "p");
    if (full_range) {
      require(p != 0.0 && p != 1.0, "need p outside {0, 1}");
    } else {
      require(p > 1.0, "need p > 1");
    }
  };
  def.sample_params = [full_range](Rng& rng, Side side) -> ParamMap {
    long n = rng.int_in(2, 8);
    double p;
    if (!full_range || side == Side::Primary) {
      p = 1.1 + uniform_d(rng, 0, 2.9);
    } else {
      p = rng.coin() ? uniform_d(rng, 0.1, 0.9) : uniform_d(rng, -4.0, -0.1);
    }
    return {{"n", n}, {"p", p}};
  };
  def.build = [name, weighted, full_range](const ParamMap& params, Side side) {
    const long n = entry_n(params);
    const double p = param_real(params, "p");
    const double pc = p / (p - 1.0);  // conjugate exponent
    InequalityDescriptor d;
    d.entry = name;
    d.params = params;
    d.side = side;
    d.has_complement = full_range;
    d.shape.values_count = n;
    d.shape.values2_count = n;
    if (weighted) d.shape.weights_count = n;
    d.equality_desc = "b_i proportional to a_i^(p-1)";
    d.formula_desc = "sum(a*b) vs (sum(a^p))^(1/p) * (sum(b^p'))^(1/p')";
    const bool holds_le = side == Side::Primary;  // p > 1 side is the <= side
    d.direction = holds_le ? Direction::LessEq : Direction::GreaterEq;
    const bool side_ok = holds_le ? (p > 1.0) : (p < 1.0 && p != 0.0);
    d.validity_desc = std::string("a_i, b_i > 0") + (weighted ? ", w_i > 0" : "") +
                      (holds_le ? "; p > 1" : "; p < 1, p != 0");
    d.validity = [side_ok, weighted](const EvalPoint& pt, const PrecisionContext&) {
      if (!side_ok) return false;
      if (weighted && !all_positive(pt.weights)) return false;
      return all_positive(pt.values) && all_positive(pt.values2);
    };
    d.equality = [p](const EvalPoint& pt, const PrecisionContext& ctx) {
      return proportional_power(pt.values2, pt.values, p - 1.0, ctx);
    };
    d.formula = [p, pc, weighted](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      Scalar lhs(ctx.precision_bits), sa(ctx.precision_bits), sb(ctx.precision_bits);
      if (weighted) {
        Scalar acc = ctx.make_int(0);
        for (std::size_t i = 0; i < pt.values.size(); ++i) {
          acc = acc + pt.weights[i] * pt.values[i] * pt.values2[i];
        }
        lhs = acc;
        sa = weighted_sum_pow(pt.weights, pt.values, p, ctx);
        sb = weighted_sum_pow(pt.weights, pt.values2, pc, ctx);
      } else {
        lhs = dot(pt.values, pt.values2, ctx);
        sa = sum_pow(pt.values, p, ctx);
        sb = sum_pow(pt.values2, pc, ctx);
      }
      Scalar rhs = pow_scalar(sa, ctx.make_int(1) / ctx.make(p)) *
                   pow_scalar(sb, ctx.make_int(1) / ctx.make(pc));
      return {lhs, rhs};
    };
    d.sample = [n, weighted](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      pt.values2 = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      if (weighted) pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    d.sample_equality = [n, p, weighted](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      Scalar c = rng.log_uniform(kMidLo, kMidHi, ctx);
      Scalar e = ctx.make(p - 1.0);
      for (const Scalar& a : pt.values) pt.values2.push_back(c * pow_scalar(a, e));
      if (weighted) pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef cauchy_def() {
  EntryDef def;
  def.info.name = "CAUCHY";
  def.info.summary = "Cauchy-Schwarz inequality for positive sequences";
  def.info.reference = "A. L. Cauchy (1821)";
  def.info.formula_desc = "sum(a*b) <= sqrt(sum(a^2)) * sqrt(sum(b^2))";
  def.info.validity_desc = "a_i, b_i > 0";
  def.info.equality_desc = "b proportional to a";
  def.info.param_names = {"n"};
  def.info.default_params = {{"n", 4L}};
  def.validate = [](const ParamMap& params) { require_n_at_least(params, 2); };
  def.sample_params = [](Rng& rng, Side) -> ParamMap { return {{"n", (long)rng.int_in(2, 8)}}; };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = "CAUCHY";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.values_count = n;
    d.shape.values2_count = n;
    d.validity_desc = "a_i, b_i > 0";
    d.equality_desc = "b proportional to a";
    d.formula_desc = "sum(a*b) <= sqrt(sum(a^2)) * sqrt(sum(b^2))";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return all_positive(pt.values) && all_positive(pt.values2);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return proportional_power(pt.values2, pt.values, 1.0, ctx);
    };
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      return {dot(pt.values, pt.values2, ctx),
              sqrt_scalar(sum_pow(pt.values, 2.0, ctx)) *
                  sqrt_scalar(sum_pow(pt.values2, 2.0, ctx))};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      pt.values2 = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      return pt;
    };
    d.sample_equality = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      Scalar c = rng.log_uniform(kMidLo, kMidHi, ctx);
      for (const Scalar& a : pt.values) pt.values2.push_back(c * a);
      return pt;
    };
    return d;
  };
  return def;
}

// Minkowski-type entries. full_range selects the two-sided version with the
// p < 1 region as the reversed primary side.
EntryDef minkowski_like(const std::string& name, const std::string& summary, bool weighted,
                        bool full_range) {
  EntryDef def;
  def.info.name = name;
  def.info.summary = summary;
  def.info.reference = "H. Minkowski (1896)";
  def.info.formula_desc = "(sum((a+b)^p))^(1/p) vs (sum(a^p))^(1/p) + (sum(b^p))^(1/p)";
  def.info.validity_desc = std::string("a_i, b_i > 0") + (weighted ? ", w_i > 0" : "") +
                           (full_range ? "; p < 1, p != 0 (direction >=)" : "; parameter p >= 1");
  if (full_range) def.info.complement_desc = "p >= 1 (direction <=)";
  def.info.equality_desc =
      full_range ? "b proportional to a (p = 1 on the complement side)" : "p = 1, or b proportional to a";
  def.info.has_complement = full_range;
  def.info.param_names = {"n", "p"};
  def.info.default_params = full_range ? ParamMap{{"n", 4L}, {"p", 0.5}}
                                       : ParamMap{{"n", 4L}, {"p", 2.5}};
  def.validate = [full_range](const ParamMap& params) {
    require_n_at_least(params, 2);
    const double p = param_real(params, "p");
    if (full_range) {
      require(p != 0.0, "need p != 0");
    } else {
      require(p >= 1.0, "need p >= 1");
    }
  };
  def.sample_params = [full_range](Rng& rng, Side side) -> ParamMap {
    long n = rng.int_in(2, 8);
    double p;
    const bool low_region = full_range && side == Side::Primary;
    if (low_region) {
      p = rng.coin() ? uniform_d(rng, 0.1, 0.9) : uniform_d(rng, -4.0, -0.1);
    } else {
      p = 1.0 + uniform_d(rng, 0, 3.0);
    }
    return {{"n", n}, {"p", p}};
  };
  def.build = [name, weighted, full_range](const ParamMap& params, Side side) {
    const long n = entry_n(params);
    const double p = param_real(params, "p");
    InequalityDescriptor d;
    d.entry = name;
    d.params = params;
    d.side = side;
    d.has_complement = full_range;
    d.shape.values_count = n;
    d.shape.values2_count = n;
    if (weighted) d.shape.weights_count = n;
    d.formula_desc = "(sum((a+b)^p))^(1/p) vs (sum(a^p))^(1/p) + (sum(b^p))^(1/p)";
    // In the full-range entry the primary side is the reversed region p < 1.
    const bool reversed_side = full_range && side == Side::Primary;
    d.direction = reversed_side ? Direction::GreaterEq : Direction::LessEq;
    const bool side_ok = reversed_side ? (p < 1.0 && p != 0.0) : (p >= 1.0);
    d.validity_desc = std::string("a_i, b_i > 0") + (weighted ? ", w_i > 0" : "") +
                      (reversed_side ? "; p < 1, p != 0" : "; p >= 1");
    d.equality_desc = reversed_side ? "b proportional to a" : "p = 1, or b proportional to a";
    d.validity = [side_ok, weighted](const EvalPoint& pt, const PrecisionContext&) {
      if (!side_ok) return false;
      if (weighted && !all_positive(pt.weights)) return false;
      return all_positive(pt.values) && all_positive(pt.values2);
    };
    d.equality = [p, reversed_side](const EvalPoint& pt, const PrecisionContext& ctx) {
      if (!reversed_side && p == 1.0) return true;
      return proportional_power(pt.values2, pt.values, 1.0, ctx);
    };
    d.formula = [p, weighted](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      std::vector<Scalar> sums;
      for (std::size_t i = 0; i < pt.values.size(); ++i) {
        sums.push_back(pt.values[i] + pt.values2[i]);
      }
      Scalar inv_p = ctx.make_int(1) / ctx.make(p);
      Scalar sab(ctx.precision_bits), sa(ctx.precision_bits), sb(ctx.precision_bits);
      if (weighted) {
        sab = weighted_sum_pow(pt.weights, sums, p, ctx);
        sa = weighted_sum_pow(pt.weights, pt.values, p, ctx);
        sb = weighted_sum_pow(pt.weights, pt.values2, p, ctx);
      } else {
        sab = sum_pow(sums, p, ctx);
        sa = sum_pow(pt.values, p, ctx);
        sb = sum_pow(pt.values2, p, ctx);
      }
      return {pow_scalar(sab, inv_p), pow_scalar(sa, inv_p) + pow_scalar(sb, inv_p)};
    };
    d.sample = [n, weighted](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      pt.values2 = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      if (weighted) pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    d.sample_equality = [n, weighted](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      Scalar c = rng.log_uniform(kMidLo, kMidHi, ctx);
      for (const Scalar& a : pt.values) pt.values2.push_back(c * a);
      if (weighted) pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef triangle_def() {
  EntryDef def;
  def.info.name = "TRIANGLE";
  def.info.summary = "Euclidean triangle inequality for positive coordinate vectors";
  def.info.reference = "classical";
  def.info.formula_desc = "sqrt(sum((a+b)^2)) <= sqrt(sum(a^2)) + sqrt(sum(b^2))";
  def.info.validity_desc = "a_i, b_i > 0";
  def.info.equality_desc = "b proportional to a";
  def.info.param_names = {"n"};
  def.info.default_params = {{"n", 4L}};
  def.validate = [](const ParamMap& params) { require_n_at_least(params, 2); };
  def.sample_params = [](Rng& rng, Side) -> ParamMap { return {{"n", (long)rng.int_in(2, 8)}}; };
  def.build = [](const ParamMap& params, Side) {
    const long n = entry_n(params);
    InequalityDescriptor d;
    d.entry = "TRIANGLE";
    d.params = params;
    d.direction = Direction::LessEq;
    d.shape.values_count = n;
    d.shape.values2_count = n;
    d.validity_desc = "a_i, b_i > 0";
    d.equality_desc = "b proportional to a";
    d.formula_desc = "sqrt(sum((a+b)^2)) <= sqrt(sum(a^2)) + sqrt(sum(b^2))";
    d.validity = [](const EvalPoint& pt, const PrecisionContext&) {
      return all_positive(pt.values) && all_positive(pt.values2);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return proportional_power(pt.values2, pt.values, 1.0, ctx);
    };
    d.formula = [](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      Scalar sab = ctx.make_int(0);
      for (std::size_t i = 0; i < pt.values.size(); ++i) {
        Scalar s = pt.values[i] + pt.values2[i];
        sab = sab + s * s;
      }
      return {sqrt_scalar(sab), sqrt_scalar(sum_pow(pt.values, 2.0, ctx)) +
                                    sqrt_scalar(sum_pow(pt.values2, 2.0, ctx))};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      pt.values2 = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      return pt;
    };
    d.sample_equality = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      Scalar c = rng.log_uniform(kMidLo, kMidHi, ctx);
      for (const Scalar& a : pt.values) pt.values2.push_back(c * a);
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef radon_def() {
  EntryDef def;
  def.info.name = "RADON";
  def.info.summary = "Two-sequence power interpolation between sums";
  def.info.reference = "J. Radon (1913)";
  def.info.formula_desc = "sum(a^s * b^(1-s)) vs (sum(a))^s * (sum(b))^(1-s)";
  def.info.validity_desc = "a_i, b_i > 0; 0 < s < 1 (direction <=)";
  def.info.complement_desc = "s < 0 or s > 1 (direction >=)";
  def.info.equality_desc = "a proportional to b";
  def.info.has_complement = true;
  def.info.param_names = {"n", "s"};
  def.info.default_params = {{"n", 4L}, {"s", 0.5}};
  def.validate = [](const ParamMap& params) {
    require_n_at_least(params, 2);
    const double s = param_real(params, "s");
    require(s != 0.0 && s != 1.0, "need s outside {0, 1}");
  };
  def.sample_params = [](Rng& rng, Side side) -> ParamMap {
    long n = rng.int_in(2, 8);
    double s;
    if (side == Side::Primary) {
      s = uniform_d(rng, 0.05, 0.95);
    } else {
      s = rng.coin() ? uniform_d(rng, 1.1, 5.0) : uniform_d(rng, -4.0, -0.1);
    }
    return {{"n", n}, {"s", s}};
  };
  def.build = [](const ParamMap& params, Side side) {
    const long n = entry_n(params);
    const double s = param_real(params, "s");
    InequalityDescriptor d;
    d.entry = "RADON";
    d.params = params;
    d.side = side;
    d.has_complement = true;
    d.shape.values_count = n;
    d.shape.values2_count = n;
    d.formula_desc = "sum(a^s * b^(1-s)) vs (sum(a))^s * (sum(b))^(1-s)";
    const bool interior = side == Side::Primary;
    d.direction = interior ? Direction::LessEq : Direction::GreaterEq;
    const bool side_ok = interior ? (s > 0.0 && s < 1.0) : (s < 0.0 || s > 1.0);
    d.validity_desc = std::string("a_i, b_i > 0; ") + (interior ? "0 < s < 1" : "s < 0 or s > 1");
    d.equality_desc = "a proportional to b";
    d.validity = [side_ok](const EvalPoint& pt, const PrecisionContext&) {
      return side_ok && all_positive(pt.values) && all_positive(pt.values2);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return proportional_power(pt.values, pt.values2, 1.0, ctx);
    };
    d.formula = [s](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      Scalar se = ctx.make(s);
      Scalar ce = ctx.make(1.0 - s);
      Scalar lhs = ctx.make_int(0);
      for (std::size_t i = 0; i < pt.values.size(); ++i) {
        lhs = lhs + pow_scalar(pt.values[i], se) * pow_scalar(pt.values2[i], ce);
      }
      Scalar rhs = pow_scalar(sum(pt.values, ctx), se) * pow_scalar(sum(pt.values2, ctx), ce);
      return {lhs, rhs};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      pt.values2 = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      return pt;
    };
    d.sample_equality = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values2 = draw_vec(rng, n, kMidLo, kMidHi, ctx);
      Scalar c = rng.log_uniform(kMidLo, kMidHi, ctx);
      for (const Scalar& b : pt.values2) pt.values.push_back(c * b);
      return pt;
    };
    return d;
  };
  return def;
}

EntryDef liapunov_def() {
  EntryDef def;
  def.info.name = "LIAPUNOV";
  def.info.summary = "Log-convexity of weighted power sums in the exponent";
  def.info.reference = "A. M. Lyapunov";
  def.info.formula_desc =
      "(sum(w*x^s))^(r-t) vs (sum(w*x^t))^(r-s) * (sum(w*x^r))^(s-t)";
  def.info.validity_desc =
      "x_i > 0, w_i > 0; exponent orderings with (r-s)(s-t)(r-t) > 0 (direction <=)";
  def.info.complement_desc = "orderings with (r-s)(s-t)(r-t) < 0 (direction >=)";
  def.info.equality_desc = "all x_i equal";
  def.info.has_complement = true;
  def.info.param_names = {"n", "r", "s", "t"};
  def.info.default_params = {{"n", 4L}, {"r", 2.0}, {"s", 1.0}, {"t", 0.0}};
  def.validate = [](const ParamMap& params) {
    require_n_at_least(params, 2);
    const double r = param_real(params, "r"), s = param_real(params, "s"),
                 t = param_real(params, "t");
    require(r != s && s != t && r != t, "need pairwise distinct exponents r, s, t");
  };
  def.sample_params = [](Rng& rng, Side side) -> ParamMap {
    long n = rng.int_in(2, 8);
    double e1 = uniform_d(rng, -6, 6);
    double e2 = e1 + 0.1 + uniform_d(rng, 0, 3);
    double e3 = e2 + 0.1 + uniform_d(rng, 0, 3);
    // Ascending t < s < r satisfies the product rule; swapping s and t flips it.
    if (side == Side::Primary) {
      return {{"n", n}, {"r", e3}, {"s", e2}, {"t", e1}};
    }
    return {{"n", n}, {"r", e3}, {"s", e1}, {"t", e2}};
  };
  def.build = [](const ParamMap& params, Side side) {
    const long n = entry_n(params);
    const double r = param_real(params, "r"), s = param_real(params, "s"),
                 t = param_real(params, "t");
    const double orientation = (r - s) * (s - t) * (r - t);
    InequalityDescriptor d;
    d.entry = "LIAPUNOV";
    d.params = params;
    d.side = side;
    d.has_complement = true;
    d.shape.values_count = n;
    d.shape.weights_count = n;
    d.formula_desc = "(sum(w*x^s))^(r-t) vs (sum(w*x^t))^(r-s) * (sum(w*x^r))^(s-t)";
    const bool interior = side == Side::Primary;
    d.direction = interior ? Direction::LessEq : Direction::GreaterEq;
    const bool side_ok = interior ? orientation > 0 : orientation < 0;
    d.validity_desc = std::string("x_i > 0, w_i > 0; (r-s)(s-t)(r-t) ") +
                      (interior ? "> 0" : "< 0");
    d.equality_desc = "all x_i equal";
    d.validity = [side_ok](const EvalPoint& pt, const PrecisionContext&) {
      return side_ok && all_positive(pt.values) && all_positive(pt.weights);
    };
    d.equality = [](const EvalPoint& pt, const PrecisionContext& ctx) {
      return is_constant(pt.values, ctx);
    };
    d.formula = [r, s, t](const EvalPoint& pt, const PrecisionContext& ctx) -> LhsRhs {
      Scalar ss = weighted_sum_pow(pt.weights, pt.values, s, ctx);
      Scalar st = weighted_sum_pow(pt.weights, pt.values, t, ctx);
      Scalar sr = weighted_sum_pow(pt.weights, pt.values, r, ctx);
      Scalar lhs = pow_scalar(ss, ctx.make(r - t));
      Scalar rhs = pow_scalar(st, ctx.make(r - s)) * pow_scalar(sr, ctx.make(s - t));
      return {lhs, rhs};
    };
    d.sample = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = draw_vec(rng, n, 1e-1, 1e1, ctx);
      pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    d.sample_equality = [n](Rng& rng, const PrecisionContext& ctx) {
      EvalPoint pt;
      pt.values = const_vec(n, rng.log_uniform(1e-1, 1e1, ctx));
      pt.weights = draw_vec(rng, n, kWtLo, kWtHi, ctx);
      return pt;
    };
    return d;
  };
  return def;
}

std::vector<EntryDef> build_registry() {
  std::vector<EntryDef> reg;
  reg.push_back(ga2e_def());
  reg.push_back(ga2w_def());
  reg.push_back(ga2_complete_def());
  reg.push_back(gane_def());
  reg.push_back(tuple_mean_entry(
      "GAN", "n-term weighted arithmetic-geometric mean inequality", "classical",
      "geomean(a;w) <= mean(a;w)",
      [](const WeightedTuple& t, const PrecisionContext& ctx) -> LhsRhs {
        return {geometric_mean(t, ctx), arithmetic_mean(t, ctx)};
      },
      Direction::LessEq));
  reg.push_back(prod1_sum_def());
  reg.push_back(sum1_prod_def());
  reg.push_back(sum_reciprocal_def());
  reg.push_back(tuple_mean_entry(
      "HARMONIC_GEOMETRIC", "Weighted harmonic mean never exceeds the geometric mean",
      "classical", "harmonic(a;w) <= geomean(a;w)",
      [](const WeightedTuple& t, const PrecisionContext& ctx) -> LhsRhs {
        return {harmonic_mean(t, ctx), geometric_mean(t, ctx)};
      },
      Direction::LessEq));
  reg.push_back(tuple_mean_entry(
      "ARITHMETIC_QUADRATIC", "Weighted arithmetic mean never exceeds the quadratic mean",
      "classical", "mean(a;w) <= quadmean(a;w)",
      [](const WeightedTuple& t, const PrecisionContext& ctx) -> LhsRhs {
        return {arithmetic_mean(t, ctx), quadratic_mean(t, ctx)};
      },
      Direction::LessEq));
  reg.push_back(log_midpoint_def());
  reg.push_back(exp_midpoint_def());
  reg.push_back(young_def());
  reg.push_back(rado_def());
  reg.push_back(popoviciu_def());
  reg.push_back(bernoulli_variant(
      "BERNOULLI_FULL", "Bernoulli's inequality over its full domain, with reversal", "x > -1",
      [](const Scalar& x, const PrecisionContext& ctx) { return x > ctx.make_int(-1); },
      [](Rng& rng, const PrecisionContext& ctx) { return draw_gt_minus_one(rng, kValHi, ctx); },
      true));
  reg.push_back(bernoulli_variant(
      "BERNOULLI_B1", "Bernoulli's inequality restricted to nonnegative arguments", "x >= 0",
      [](const Scalar& x, const PrecisionContext& ctx) { return x >= ctx.make_int(0); },
      [](Rng& rng, const PrecisionContext& ctx) { return rng.log_uniform(kValLo, kValHi, ctx); },
      true));
  reg.push_back(bernoulli_variant(
      "BERNOULLI_B2", "Bernoulli's inequality restricted to arguments in (-1, 0]",
      "-1 < x <= 0",
      [](const Scalar& x, const PrecisionContext& ctx) {
        return x > ctx.make_int(-1) && x <= ctx.make_int(0);
      },
      [](Rng& rng, const PrecisionContext& ctx) {
        return -(rng.unit(ctx) * ctx.make(1.0 - 1e-6));
      },
      true));
  reg.push_back(bernoulli_variant(
      "BERNOULLI_B3", "Bernoulli's inequality on the combined domain x > -1, one-sided",
      "x > -1",
      [](const Scalar& x, const PrecisionContext& ctx) { return x > ctx.make_int(-1); },
      [](Rng& rng, const PrecisionContext& ctx) { return draw_gt_minus_one(rng, kValHi, ctx); },
      true, false));
  reg.push_back(bernoulli_alpha_variant(
      "BERNOULLI_B4", "Reversed Bernoulli inequality for exponents above 1", true));
  reg.push_back(bernoulli_alpha_variant(
      "BERNOULLI_B5", "Reversed Bernoulli inequality for negative exponents", false));
  reg.push_back(original_bernoulli_def());
  reg.push_back(neg_reflect_def());
  reg.push_back(power_secant_def());
  reg.push_back(barrow_lemma_def());
  reg.push_back(ruthing_def());
  reg.push_back(jacobsthal_def());
  reg.push_back(bush_def());
  reg.push_back(pecaric_def());
  reg.push_back(powermean_def());
  reg.push_back(holder_like("HOLDER", "Hoelder's inequality for positive sequences", false, false));
  reg.push_back(cauchy_def());
  reg.push_back(holder_like("HOLDER_EXT",
                            "Hoelder's inequality over the full exponent range, with reversal",
                            false, true));
  reg.push_back(minkowski_like("MINKOWSKI", "Minkowski's inequality for positive sequences",
                               false, false));
  reg.push_back(triangle_def());
  reg.push_back(minkowski_like("MINKOWSKI_EXT",
                               "Minkowski's inequality over the full exponent range, with reversal",
                               false, true));
  reg.push_back(holder_like("HOLDER_W", "Weighted Hoelder inequality", true, false));
  reg.push_back(minkowski_like("MINKOWSKI_W", "Weighted Minkowski inequality", true, false));
  reg.push_back(holder_like("HOLDER_EXT_W",
                            "Weighted Hoelder inequality over the full exponent range",
                            true, true));
  reg.push_back(radon_def());
  reg.push_back(liapunov_def());
  return reg;
}

}  // namespace

const std::vector<EntryDef>& entry_registry() {
  static const std::vector<EntryDef> registry = build_registry();
  return registry;
}

}  // namespace detail
}  // namespace ineq
