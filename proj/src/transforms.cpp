#include "ineq/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace ineq {
namespace {

// ---------------------------------------------------------------------------
// Instance plumbing
// ---------------------------------------------------------------------------

InequalityDescriptor bind_entry(const std::string& entry, const ParamMap& params, Side side) {
  InequalityDescriptor d = lookup(entry, params);
  if (side == Side::Complement) d = complementary(d);
  return d;
}

Instance make_instance(const std::string& entry, const ParamMap& params, Side side,
                       EvalPoint pt) {
  return Instance{bind_entry(entry, params, side), std::move(pt)};
}

Instance draw_from(const std::string& entry, const ParamMap& params, Side side, bool equality,
                   Rng& rng, const PrecisionContext& ctx) {
  InequalityDescriptor d = bind_entry(entry, params, side);
  EvalPoint pt = equality ? d.sample_equality(rng, ctx) : d.sample(rng, ctx);
  return Instance{std::move(d), std::move(pt)};
}

struct Sides {
  Scalar lhs;
  Scalar rhs;
  Scalar margin;  // oriented: nonnegative means the relation holds
};

Sides eval_sides(const Instance& inst, const PrecisionContext& ctx) {
  LhsRhs f = inst.descriptor.formula(inst.point, ctx);
  Scalar m = inst.descriptor.direction == Direction::LessEq ? f.rhs - f.lhs : f.lhs - f.rhs;
  return Sides{f.lhs, f.rhs, std::move(m)};
}

// ---------------------------------------------------------------------------
// Tolerances
//
// Identities between mapped instances are exact algebra, so they are held to
// a few bits above roundoff. Entries whose formulas fix conjugate exponents
// in double precision (the p/(p-1) family) can only agree across a map to
// double roundoff; identities crossing that seam use the coarser bound.
// Round trips compare stored coordinates and get the tightest bound.
// ---------------------------------------------------------------------------

Scalar tight_tol(const PrecisionContext& ctx) {
  return ctx.make(std::ldexp(1.0, 20 - static_cast<int>(ctx.precision_bits)));
}

Scalar seam_tol(const PrecisionContext& ctx) { return ctx.make(1e-13); }

Scalar roundtrip_tol(const PrecisionContext& ctx) {
  return ctx.make(std::ldexp(1.0, 12 - static_cast<int>(ctx.precision_bits)));
}

bool close_to(const Scalar& got, const Scalar& want, const Scalar& scale, const Scalar& tol,
              std::string* why, const char* label) {
  Scalar bound = tol * max_scalar(max_scalar(abs_scalar(got), abs_scalar(want)), scale);
  if (abs_scalar(got - want) <= bound) return true;
  if (why) {
    *why = std::string(label) + ": " + got.compact() + " vs " + want.compact() + " (allowed " +
           bound.compact() + ")";
  }
  return false;
}

bool slot_close(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const char* slot,
                const PrecisionContext& ctx, std::string* why) {
  if (a.size() != b.size()) {
    if (why) *why = std::string(slot) + ": size changed across the round trip";
    return false;
  }
  Scalar tol = roundtrip_tol(ctx);
  Scalar floor = ctx.make(ctx.abs_floor);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Scalar scale = max_scalar(max_scalar(abs_scalar(a[i]), abs_scalar(b[i])), floor);
    if (abs_scalar(a[i] - b[i]) > tol * scale) {
      if (why) {
        *why = std::string(slot) + "[" + std::to_string(i) + "]: " + a[i].compact() + " vs " +
               b[i].compact();
      }
      return false;
    }
  }
  return true;
}

bool points_close(const EvalPoint& a, const EvalPoint& b, const PrecisionContext& ctx,
                  std::string* why) {
  return slot_close(a.scalars, b.scalars, "scalars", ctx, why) &&
         slot_close(a.values, b.values, "values", ctx, why) &&
         slot_close(a.values2, b.values2, "values2", ctx, why) &&
         slot_close(a.weights, b.weights, "weights", ctx, why);
}

std::string vec_str(const std::vector<Scalar>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].compact();
  }
  return out + ")";
}

std::string point_str(const Instance& inst) {
  std::string out = inst.descriptor.instance_key();
  if (!inst.point.scalars.empty()) out += " s=" + vec_str(inst.point.scalars);
  if (!inst.point.values.empty()) out += " a=" + vec_str(inst.point.values);
  if (!inst.point.values2.empty()) out += " b=" + vec_str(inst.point.values2);
  if (!inst.point.weights.empty()) out += " w=" + vec_str(inst.point.weights);
  return out;
}

void set_why(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
}

// A classification sitting within a thousand classifier bands of zero margin.
// Used where a map crosses the equality band boundary: the two ends classify
// the margin against their own scales, so right at the band edge one side may
// say Equality while the other still says StrictlyHolds.
bool within_band_edge(const PointClassification& c, const PrecisionContext& ctx) {
  if (!c.margin || !c.lhs || !c.rhs) return false;
  Scalar scale = max_scalar(abs_scalar(*c.lhs), abs_scalar(*c.rhs));
  Scalar band = ctx.make(1e3) * ctx.make(ctx.rel_tolerance) *
                max_scalar(scale, ctx.make(ctx.abs_floor));
  return abs_scalar(*c.margin) <= band;
}

// Deterministic double draw (53 bits of the next state word).
double uniform_double(Rng& rng, double lo, double hi) {
  double u = static_cast<double>(rng.next() >> 11) * (1.0 / 9007199254740992.0);
  return lo + u * (hi - lo);
}

// Argument above -1, matching the texture of the catalog samplers but with a
// floor of 1e-4 on 1+x: maps that multiply x (rather than 1+x) lose relative
// accuracy near -1, and the floor keeps that loss far below the identity
// tolerances.
Scalar draw_above_minus_one(Rng& rng, double pos_hi, const PrecisionContext& ctx) {
  if (rng.coin()) return rng.log_uniform(1e-3, pos_hi, ctx);
  return ctx.make_int(0) - rng.unit(ctx) * ctx.make(1.0 - 1e-4);
}

Scalar alpha_outside_unit(Rng& rng, const PrecisionContext& ctx) {
  if (rng.coin()) return ctx.make_int(0) - rng.log_uniform(1e-2, 8.0, ctx);
  return ctx.make_int(1) + rng.log_uniform(1e-2, 8.0, ctx);
}

// ---------------------------------------------------------------------------
// W_REFLECT / W_REFLECT_NEG: the involution (x, a) -> (-x/(1+x), 1-a)
// carries one one-sided argument range to the other; the margin picks up the
// factor 1+x.
// ---------------------------------------------------------------------------

Instance reflect_point(const Instance& inst, const std::string& entry,
                       const PrecisionContext& ctx) {
  const Scalar& x = inst.point.scalars[0];
  const Scalar& alpha = inst.point.scalars[1];
  Scalar one = ctx.make_int(1);
  EvalPoint pt;
  pt.scalars = {(ctx.make_int(0) - x) / (one + x), one - alpha};
  return make_instance(entry, {}, Side::Primary, std::move(pt));
}

bool reflect_relation(const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                      std::string* why) {
  Sides s = eval_sides(src, ctx);
  Sides t = eval_sides(tgt, ctx);
  const Scalar& x = src.point.scalars[0];
  Scalar one = ctx.make_int(1);
  Scalar scale = abs_scalar(s.lhs) + abs_scalar(s.rhs);
  return close_to(t.margin * (one + x), s.margin, scale, tight_tol(ctx), why,
                  "margin scaling by 1+x");
}

TransformationWitness reflect_witness() {
  TransformationWitness w;
  w.name = "W_REFLECT";
  w.source_entry = "BERNOULLI_B1";
  w.target_entry = "BERNOULLI_B2";
  w.summary =
      "(x, a) -> (-x/(1+x), 1-a) is an involution exchanging the x >= 0 and "
      "-1 < x <= 0 branches of the power bound; margins scale by 1+x.";
  w.two_way = true;
  w.roundtrip_source = true;
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("BERNOULLI_B1", {}, Side::Primary, false, rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("BERNOULLI_B2", {}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("BERNOULLI_B1", {}, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    return reflect_point(inst, "BERNOULLI_B2", ctx);
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    return reflect_point(inst, "BERNOULLI_B1", ctx);
  };
  w.relation = reflect_relation;
  return w;
}

TransformationWitness reflect_neg_witness() {
  TransformationWitness w;
  w.name = "W_REFLECT_NEG";
  w.source_entry = "BERNOULLI_B4";
  w.target_entry = "BERNOULLI_B5";
  w.summary =
      "the same involution (x, a) -> (-x/(1+x), 1-a) exchanges the a > 1 and "
      "a < 0 branches of the reversed bound.";
  w.two_way = true;
  w.roundtrip_source = true;
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("BERNOULLI_B4", {}, Side::Primary, false, rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("BERNOULLI_B5", {}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("BERNOULLI_B4", {}, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    return reflect_point(inst, "BERNOULLI_B5", ctx);
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    return reflect_point(inst, "BERNOULLI_B4", ctx);
  };
  w.relation = reflect_relation;
  return w;
}

// ---------------------------------------------------------------------------
// W_RECIP: (x, a) -> (a x, 1/a) carries the a in (0,1) bound to the a > 1
// reversed bound; raising the target relation to the a-th power recovers the
// source relation.
// ---------------------------------------------------------------------------

TransformationWitness recip_witness() {
  TransformationWitness w;
  w.name = "W_RECIP";
  w.source_entry = "BERNOULLI_B1";
  w.target_entry = "BERNOULLI_B4";
  w.summary =
      "(x, a) -> (a x, 1/a) turns the fractional-exponent bound into the "
      "super-unit reversed bound: (1+ax)^(1/a) >= 1+x.";
  w.two_way = true;
  w.roundtrip_source = true;
  w.roundtrip_target = true;
  // The exponent swap needs a bounded away from {0, 1}, so the witness
  // samples that subset of each validity set instead of the entry samplers.
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    EvalPoint pt;
    pt.scalars = {rng.log_uniform(1e-3, 1e2, ctx), rng.uniform(0.05, 0.95, ctx)};
    return make_instance("BERNOULLI_B1", {}, Side::Primary, std::move(pt));
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    EvalPoint pt;
    Scalar one = ctx.make_int(1);
    pt.scalars = {rng.log_uniform(1e-3, 1e2, ctx), one / rng.uniform(0.05, 0.95, ctx)};
    return make_instance("BERNOULLI_B4", {}, Side::Primary, std::move(pt));
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    EvalPoint pt;
    pt.scalars = {ctx.make_int(0), rng.uniform(0.05, 0.95, ctx)};
    return make_instance("BERNOULLI_B1", {}, Side::Primary, std::move(pt));
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    const Scalar& x = inst.point.scalars[0];
    const Scalar& alpha = inst.point.scalars[1];
    EvalPoint pt;
    pt.scalars = {alpha * x, ctx.make_int(1) / alpha};
    return make_instance("BERNOULLI_B4", {}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    const Scalar& x = inst.point.scalars[0];
    const Scalar& alpha = inst.point.scalars[1];
    EvalPoint pt;
    pt.scalars = {x * alpha, ctx.make_int(1) / alpha};
    return make_instance("BERNOULLI_B1", {}, Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    const Scalar& x = src.point.scalars[0];
    const Scalar& alpha = src.point.scalars[1];
    Scalar one = ctx.make_int(1);
    Scalar base = one + x;
    // (m_t + (1+x))^a = (1+ax) = m_s + (1+x)^a.
    Scalar got = pow_scalar(t.margin + base, alpha);
    Scalar want = s.margin + pow_scalar(base, alpha);
    return close_to(got, want, abs_scalar(s.rhs), tight_tol(ctx), why,
                    "exponent-swap margin identity");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_SHIFT: x -> 1+x identifies the additive power bound with the secant
// bound for the power function; both sides are carried verbatim.
// ---------------------------------------------------------------------------

TransformationWitness shift_witness() {
  TransformationWitness w;
  w.name = "W_SHIFT";
  w.source_entry = "BERNOULLI_FULL";
  w.target_entry = "POWER_SECANT";
  w.summary =
      "the shift t -> 1+t identifies (1+t)^a <= 1+at with the secant bound "
      "x^a <= (1-a)+ax; both formula sides transport unchanged.";
  w.two_way = true;
  w.roundtrip_source = true;
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("BERNOULLI_FULL", {}, Side::Primary, false, rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("POWER_SECANT", {}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("BERNOULLI_FULL", {}, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    EvalPoint pt;
    pt.scalars = {ctx.make_int(1) + inst.point.scalars[0], inst.point.scalars[1]};
    return make_instance("POWER_SECANT", {}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    EvalPoint pt;
    pt.scalars = {inst.point.scalars[0] - ctx.make_int(1), inst.point.scalars[1]};
    return make_instance("BERNOULLI_FULL", {}, Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(s.lhs) + abs_scalar(s.rhs);
    return close_to(t.lhs, s.lhs, scale, tight_tol(ctx), why, "shifted left side") &&
           close_to(t.rhs, s.rhs, scale, tight_tol(ctx), why, "shifted right side");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_RATIO: (x, a) -> (x, 1, a, 1-a) realizes the secant bound as the
// two-term weighted mean bound; dividing the general two-term instance by
// its second value comes back.
// ---------------------------------------------------------------------------

TransformationWitness ratio_witness() {
  TransformationWitness w;
  w.name = "W_RATIO";
  w.source_entry = "POWER_SECANT";
  w.target_entry = "GA2W";
  w.summary =
      "homogeneity in the second argument: the secant bound at x/y scaled by "
      "y is the two-term weighted mean bound, and (x, a) -> (x, 1, a, 1-a) "
      "embeds it back.";
  w.two_way = true;
  w.roundtrip_source = true;
  w.roundtrip_target = false;  // forward normalizes the second value to 1
  // The embedding needs weights strictly inside (0, 1).
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    EvalPoint pt;
    pt.scalars = {rng.log_uniform(1e-3, 1e3, ctx), rng.uniform(0.01, 0.99, ctx)};
    return make_instance("POWER_SECANT", {}, Side::Primary, std::move(pt));
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("GA2W", {}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    EvalPoint pt;
    pt.scalars = {ctx.make_int(1), rng.uniform(0.01, 0.99, ctx)};
    return make_instance("POWER_SECANT", {}, Side::Primary, std::move(pt));
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    const Scalar& x = inst.point.scalars[0];
    const Scalar& alpha = inst.point.scalars[1];
    Scalar one = ctx.make_int(1);
    EvalPoint pt;
    pt.scalars = {x, one, alpha, one - alpha};
    return make_instance("GA2W", {}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext&) {
    const auto& s = inst.point.scalars;  // x, y, u, v
    EvalPoint pt;
    pt.scalars = {s[0] / s[1], s[2] / (s[2] + s[3])};
    return make_instance("POWER_SECANT", {}, Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    const Scalar& y = tgt.point.scalars[1];
    Scalar scale = abs_scalar(t.lhs) + abs_scalar(t.rhs);
    return close_to(t.margin, s.margin * y, scale, tight_tol(ctx), why,
                    "margin scaling by the second value");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_YOUNG: raising the two-term weighted mean bound at (x, y, u, v) to
// nothing but regrouped exponents gives the product bound xy <= x^p/p+y^q/q
// with p = (u+v)/u, and conversely.
// ---------------------------------------------------------------------------

TransformationWitness young_witness() {
  TransformationWitness w;
  w.name = "W_YOUNG";
  w.source_entry = "GA2W";
  w.target_entry = "YOUNG";
  w.summary =
      "substituting X = x^(u/W), Y = y^(v/W), p = W/u turns the two-term "
      "weighted mean bound into the conjugate-exponent product bound; both "
      "sides transport verbatim.";
  w.two_way = true;
  w.roundtrip_source = false;  // forward normalizes the weights to 1/p + 1/q = 1
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    EvalPoint pt;
    pt.scalars = {rng.log_uniform(1e-2, 1e2, ctx), rng.log_uniform(1e-2, 1e2, ctx),
                  rng.log_uniform(1e-1, 1e1, ctx), rng.log_uniform(1e-1, 1e1, ctx)};
    return make_instance("GA2W", {}, Side::Primary, std::move(pt));
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("YOUNG", {}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    Scalar x = rng.log_uniform(1e-2, 1e2, ctx);
    EvalPoint pt;
    pt.scalars = {x, x, rng.log_uniform(1e-1, 1e1, ctx), rng.log_uniform(1e-1, 1e1, ctx)};
    return make_instance("GA2W", {}, Side::Primary, std::move(pt));
  };
  w.forward = [](const Instance& inst, const PrecisionContext&) {
    const auto& s = inst.point.scalars;  // x, y, u, v
    Scalar total = s[2] + s[3];
    EvalPoint pt;
    pt.scalars = {pow_scalar(s[0], s[2] / total), pow_scalar(s[1], s[3] / total), total / s[2]};
    return make_instance("YOUNG", {}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    const auto& s = inst.point.scalars;  // x, y, p
    Scalar q = conjugate_index(s[2], ctx);
    Scalar one = ctx.make_int(1);
    EvalPoint pt;
    pt.scalars = {pow_scalar(s[0], s[2]), pow_scalar(s[1], q), one / s[2], one / q};
    return make_instance("GA2W", {}, Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(s.lhs) + abs_scalar(s.rhs);
    return close_to(t.lhs, s.lhs, scale, tight_tol(ctx), why, "product side") &&
           close_to(t.rhs, s.rhs, scale, tight_tol(ctx), why, "split-exponent side");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_NORMALIZE / W_NORMALIZE_SUM: dividing an n-tuple by its geometric mean
// (resp. its sum) lands in the product-one (resp. sum-one) special form; the
// special forms include back verbatim.
// ---------------------------------------------------------------------------

Scalar equal_weight_geometric(const std::vector<Scalar>& values, const PrecisionContext& ctx) {
  return geometric_mean(WeightedTuple::equal_weights(values, ctx.precision_bits), ctx);
}

TransformationWitness normalize_witness() {
  TransformationWitness w;
  w.name = "W_NORMALIZE";
  w.source_entry = "GANE";
  w.target_entry = "PROD1_SUM";
  w.summary =
      "dividing a positive tuple by its geometric mean gives a product-one "
      "tuple, where the mean bound reads n <= sum; margins scale by n/G.";
  w.two_way = true;
  w.roundtrip_source = false;  // forward rescales the tuple
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    ParamMap params = sample_entry_params("GANE", Side::Primary, rng);
    return draw_from("GANE", params, Side::Primary, false, rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    ParamMap params = sample_entry_params("PROD1_SUM", Side::Primary, rng);
    return draw_from("PROD1_SUM", params, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    ParamMap params = sample_entry_params("GANE", Side::Primary, rng);
    return draw_from("GANE", params, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    Scalar g = equal_weight_geometric(inst.point.values, ctx);
    long n = static_cast<long>(inst.point.values.size());
    EvalPoint pt;
    pt.values.reserve(inst.point.values.size());
    for (const Scalar& a : inst.point.values) pt.values.push_back(a / g);
    return make_instance("PROD1_SUM", ParamMap{{"n", n}}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    (void)ctx;
    long n = static_cast<long>(inst.point.values.size());
    EvalPoint pt;
    pt.values = inst.point.values;
    return make_instance("GANE", ParamMap{{"n", n}}, Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar g = equal_weight_geometric(src.point.values, ctx);
    Scalar n = ctx.make_int(static_cast<long>(src.point.values.size()));
    Scalar scale = n * (abs_scalar(s.lhs) + abs_scalar(s.rhs));
    return close_to(t.margin * g, n * s.margin, scale, tight_tol(ctx), why,
                    "margin scaling by n/G");
  };
  return w;
}

TransformationWitness normalize_sum_witness() {
  TransformationWitness w;
  w.name = "W_NORMALIZE_SUM";
  w.source_entry = "GANE";
  w.target_entry = "SUM1_PROD";
  w.summary =
      "dividing a positive tuple by its sum gives a sum-one tuple, where the "
      "mean bound reads prod <= n^-n; margins scale by a power-sum factor.";
  w.two_way = true;
  w.roundtrip_source = false;
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    ParamMap params = sample_entry_params("GANE", Side::Primary, rng);
    return draw_from("GANE", params, Side::Primary, false, rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    ParamMap params = sample_entry_params("SUM1_PROD", Side::Primary, rng);
    return draw_from("SUM1_PROD", params, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    ParamMap params = sample_entry_params("GANE", Side::Primary, rng);
    return draw_from("GANE", params, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    Scalar total = ctx.make_int(0);
    for (const Scalar& a : inst.point.values) total = total + a;
    long n = static_cast<long>(inst.point.values.size());
    EvalPoint pt;
    pt.values.reserve(inst.point.values.size());
    for (const Scalar& a : inst.point.values) pt.values.push_back(a / total);
    return make_instance("SUM1_PROD", ParamMap{{"n", n}}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    (void)ctx;
    long n = static_cast<long>(inst.point.values.size());
    EvalPoint pt;
    pt.values = inst.point.values;
    return make_instance("GANE", ParamMap{{"n", n}}, Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    // m_t (nA)^n = m_s sum_{j<n} A^{n-1-j} G^j: both sides equal A^n - G^n.
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    long nn = static_cast<long>(src.point.values.size());
    WeightedTuple tup = WeightedTuple::equal_weights(src.point.values, ctx.precision_bits);
    Scalar am = arithmetic_mean(tup, ctx);
    Scalar gm = geometric_mean(tup, ctx);
    Scalar n = ctx.make_int(nn);
    Scalar comb = ctx.make_int(0);
    for (long j = 0; j < nn; ++j) {
      comb = comb + pow_scalar(am, ctx.make_int(nn - 1 - j)) * pow_scalar(gm, ctx.make_int(j));
    }
    Scalar scale = n * pow_scalar(am, n);
    return close_to(t.margin * pow_scalar(n * am, n), s.margin * comb, scale, tight_tol(ctx),
                    why, "margin scaling by the sum power");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_DOUBLE: the power-of-two mean bound re-proved as a binary tree of
// two-term applications. A derivation check, not a point map: the content of
// the deduction is the tree, so the check replays it.
// ---------------------------------------------------------------------------

TransformationWitness double_witness() {
  TransformationWitness w;
  w.name = "W_DOUBLE";
  w.source_entry = "GA2E";
  w.target_entry = "GANE";
  w.summary =
      "doubling: the 2^k-term equal-weight mean bound follows from a binary "
      "tree of two-term applications; the check replays the tree and matches "
      "its root against the entry formula.";
  w.derivation_sampler = [](Rng& rng, const PrecisionContext& ctx) {
    long n = 1L << rng.int_in(1, 3);
    return draw_from("GANE", ParamMap{{"n", n}}, Side::Primary, rng.coin(0.2), rng, ctx);
  };
  w.derivation = [](const Instance& inst, bool corrupt, const PrecisionContext& ctx,
                    std::string* why) -> bool {
    PointClassification full = classify(inst.descriptor, inst.point, ctx);
    if (full.verdict == Verdict::OutsideValidity) {
      set_why(why, "instance outside validity");
      return false;
    }
    bool want_eq = full.verdict == Verdict::Equality;
    InequalityDescriptor two = lookup("GA2E", {});
    struct Block {
      Scalar g;
      Scalar a;
    };
    std::vector<Block> level;
    level.reserve(inst.point.values.size());
    for (const Scalar& v : inst.point.values) level.push_back(Block{v, v});
    Scalar half = ctx.make(0.5);
    while (level.size() > 1) {
      std::vector<Block> next;
      next.reserve(level.size() / 2);
      for (std::size_t j = 0; j + 1 < level.size(); j += 2) {
        EvalPoint pt;
        pt.scalars = {level[j].a, level[j + 1].a};
        PointClassification c = classify(two, pt, ctx);
        if (c.verdict == Verdict::OutsideValidity || c.verdict == Verdict::Violated) {
          set_why(why, "two-term application " + verdict_str(c.verdict) + " at (" +
                           level[j].a.compact() + ", " + level[j + 1].a.compact() + ")");
          return false;
        }
        if (want_eq && c.verdict != Verdict::Equality && !within_band_edge(c, ctx)) {
          set_why(why, "equality instance fails to reduce to two-term equalities");
          return false;
        }
        next.push_back(Block{sqrt_scalar(level[j].g * level[j + 1].g),
                             (level[j].a + level[j + 1].a) * half});
      }
      level = std::move(next);
    }
    Scalar g_top = level[0].g;
    Scalar a_top = level[0].a;
    if (corrupt) g_top = g_top * ctx.make(1.1);
    LhsRhs f = inst.descriptor.formula(inst.point, ctx);
    Scalar scale = abs_scalar(f.lhs) + abs_scalar(f.rhs);
    return close_to(g_top, f.lhs, scale, tight_tol(ctx), why, "tree geometric mean") &&
           close_to(a_top, f.rhs, scale, tight_tol(ctx), why, "tree arithmetic mean");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_DOUBLE_REV: the reverse specialization; the two-term bound is the
// four-term bound at (x, y, g, g) with g = sqrt(xy), at half the margin.
// ---------------------------------------------------------------------------

TransformationWitness double_rev_witness() {
  TransformationWitness w;
  w.name = "W_DOUBLE_REV";
  w.source_entry = "GA2E";
  w.target_entry = "GANE";
  w.summary =
      "specialization: padding (x, y) with two copies of sqrt(xy) exhibits "
      "the two-term bound inside the four-term one at exactly half the "
      "margin.";
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("GA2E", {}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("GA2E", {}, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    (void)ctx;
    const Scalar& x = inst.point.scalars[0];
    const Scalar& y = inst.point.scalars[1];
    Scalar g = sqrt_scalar(x * y);
    EvalPoint pt;
    pt.values = {x, y, g, g};
    return make_instance("GANE", ParamMap{{"n", 4L}}, Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(s.lhs) + abs_scalar(s.rhs);
    return close_to(t.margin * ctx.make_int(2), s.margin, scale, tight_tol(ctx), why,
                    "margin halving");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_BACKWARD: the m-term weighted mean bound follows from the (m+2)-term one
// by appending two copies of the arithmetic mean; the appended instance's
// right side is unchanged and its verdict matches the original.
// ---------------------------------------------------------------------------

TransformationWitness backward_witness() {
  TransformationWitness w;
  w.name = "W_BACKWARD";
  w.source_entry = "GAN";
  w.target_entry = "GAN";
  w.summary =
      "tuple extension: appending copies of the arithmetic mean (with unit "
      "weights) keeps the right side fixed, so the shorter bound is read off "
      "the longer one.";
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    long m = rng.int_in(2, 6);
    return draw_from("GAN", ParamMap{{"n", m}}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    long m = rng.int_in(2, 6);
    return draw_from("GAN", ParamMap{{"n", m}}, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    WeightedTuple t = WeightedTuple::of(inst.point.values, inst.point.weights);
    Scalar am = arithmetic_mean(t, ctx);
    Scalar one = ctx.make_int(1);
    EvalPoint pt = inst.point;
    pt.values.push_back(am);
    pt.values.push_back(am);
    pt.weights.push_back(one);
    pt.weights.push_back(one);
    long n = static_cast<long>(pt.values.size());
    return make_instance("GAN", ParamMap{{"n", n}}, Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    WeightedTuple t0 = WeightedTuple::of(src.point.values, src.point.weights);
    Scalar am = arithmetic_mean(t0, ctx);
    Scalar gm = geometric_mean(t0, ctx);
    Scalar total = total_weight(t0, ctx);
    Scalar two = ctx.make_int(2);
    Sides t = eval_sides(tgt, ctx);
    Scalar lhs_want =
        exp_scalar((total * log_scalar(gm) + two * log_scalar(am)) / (total + two));
    return close_to(t.rhs, am, am, tight_tol(ctx), why, "appended arithmetic mean") &&
           close_to(t.lhs, lhs_want, am, tight_tol(ctx), why, "appended geometric mean");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_RADO_REWRITE: the mean-gap chain at its top step is the two-term
// weighted mean bound at (a_n, G_{n-1}) with weights (w_n, W_{n-1}); the
// margin picks up the total weight.
// ---------------------------------------------------------------------------

TransformationWitness rado_rewrite_witness() {
  TransformationWitness w;
  w.name = "W_RADO_REWRITE";
  w.source_entry = "RADO";
  w.target_entry = "GA2W";
  w.summary =
      "the gap-chain step W_n(A_n - G_n) >= W_{n-1}(A_{n-1} - G_{n-1}) "
      "rewritten as the two-term bound at (a_n, G_{n-1}; w_n, W_{n-1}); "
      "margins scale by W_n.";
  w.two_way = true;
  w.roundtrip_source = false;  // forward collapses the head to its geometric mean
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    ParamMap params = sample_entry_params("RADO", Side::Primary, rng);
    return draw_from("RADO", params, Side::Primary, false, rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("GA2W", {}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    ParamMap params = sample_entry_params("RADO", Side::Primary, rng);
    return draw_from("RADO", params, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    const auto& a = inst.point.values;
    const auto& wt = inst.point.weights;
    std::size_t n = a.size();
    WeightedTuple head = WeightedTuple::of(a, wt).prefix(n - 1);
    Scalar gh = geometric_mean(head, ctx);
    Scalar wh = total_weight(head, ctx);
    EvalPoint pt;
    pt.scalars = {a[n - 1], gh, wt[n - 1], wh};
    return make_instance("GA2W", {}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    (void)ctx;
    const auto& s = inst.point.scalars;  // x, y, u, v
    EvalPoint pt;
    pt.values = {s[1], s[0]};
    pt.weights = {s[3], s[2]};
    return make_instance("RADO", ParamMap{{"n", 2L}}, Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar total = ctx.make_int(0);
    for (const Scalar& wi : src.point.weights) total = total + wi;
    Scalar scale = total * (abs_scalar(t.lhs) + abs_scalar(t.rhs));
    return close_to(s.margin, total * t.margin, scale, tight_tol(ctx), why,
                    "margin scaling by the total weight");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_BUSH: (u, a) <-> (x, p, q) with x = u p, a = p/q. The compound-growth
// bound with exponent pair (p, q) is the power bound raised to the q-th
// power; the exponent ranges decide which branch of each entry is hit.
// ---------------------------------------------------------------------------

TransformationWitness bush_witness() {
  TransformationWitness w;
  w.name = "W_BUSH";
  w.source_entry = "BERNOULLI_FULL";
  w.target_entry = "BUSH";
  w.summary =
      "(u, a) -> (u a, a, 1) and its sign-flipped variants identify the "
      "power bound with the exponent-pair growth bound; raising the source "
      "sides to the q-th power gives the target sides.";
  w.two_way = true;
  w.roundtrip_source = true;
  w.roundtrip_target = false;  // forward normalizes q to +-1
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    EvalPoint pt;
    switch (rng.below(3)) {
      case 0: {
        // fractional exponent, the direct branch
        Scalar u = draw_above_minus_one(rng, 1e2, ctx);
        pt.scalars = {u, rng.uniform(0.01, 1.0, ctx)};
        return make_instance("BERNOULLI_FULL", {}, Side::Primary, std::move(pt));
      }
      case 1: {
        // exponent above one; positive arguments capped at 1 so the
        // reciprocal-scale image stays within the classifier band edge
        Scalar alpha = ctx.make_int(1) + rng.log_uniform(1e-2, 8.0, ctx);
        Scalar u = rng.coin() ? rng.log_uniform(1e-3, 1.0, ctx)
                              : ctx.make_int(0) - rng.unit(ctx) * ctx.make(0.99) / alpha;
        pt.scalars = {u, alpha};
        return make_instance("BERNOULLI_FULL", {}, Side::Complement, std::move(pt));
      }
      default: {
        // negative exponent
        Scalar alpha = ctx.make_int(0) - rng.log_uniform(1e-2, 8.0, ctx);
        Scalar u = rng.coin() ? ctx.make_int(0) - rng.unit(ctx) * ctx.make(1.0 - 1e-4)
                              : rng.unit(ctx) * ctx.make(0.99) / abs_scalar(alpha);
        pt.scalars = {u, alpha};
        return make_instance("BERNOULLI_FULL", {}, Side::Complement, std::move(pt));
      }
    }
  };
  // The entry sampler roams scales where the banded classifier goes
  // absolute; keep both exponents and both side magnitudes moderate so the
  // verdict survives transport through the q-th power.
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    Side side = rng.below(3) < 2 ? Side::Primary : Side::Complement;
    InequalityDescriptor d = bind_entry("BUSH", {}, side);
    for (int attempt = 0; attempt < 200; ++attempt) {
      EvalPoint pt = d.sample(rng, ctx);
      double x = pt.scalars[0].to_double();
      double p = pt.scalars[1].to_double();
      double q = pt.scalars[2].to_double();
      if (std::min(std::fabs(p), std::fabs(q)) < 0.5) continue;
      double lp = p * std::log1p(x / p);
      double lq = q * std::log1p(x / q);
      if (std::isfinite(lp) && std::isfinite(lq) && std::fabs(lp) <= 5.5 &&
          std::fabs(lq) <= 5.5) {
        return Instance{std::move(d), std::move(pt)};
      }
    }
    EvalPoint pt;  // unreached in practice: a safe interior point
    Scalar half = ctx.make(0.5);
    pt.scalars = {half, ctx.make_int(side == Side::Primary ? 1 : -1), ctx.make_int(2)};
    return Instance{std::move(d), std::move(pt)};
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    EvalPoint pt;
    if (rng.coin()) {
      pt.scalars = {ctx.make_int(0), rng.uniform(0.01, 1.0, ctx)};
    } else {
      pt.scalars = {draw_above_minus_one(rng, 1e2, ctx), ctx.make_int(1)};
    }
    return make_instance("BERNOULLI_FULL", {}, Side::Primary, std::move(pt));
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    const Scalar& u = inst.point.scalars[0];
    const Scalar& alpha = inst.point.scalars[1];
    Scalar zero = ctx.make_int(0);
    Scalar one = ctx.make_int(1);
    EvalPoint pt;
    if (alpha > one) {
      pt.scalars = {zero - u * alpha, zero - alpha, zero - one};
      return make_instance("BUSH", {}, Side::Primary, std::move(pt));
    }
    if (alpha < zero) {
      pt.scalars = {u * alpha, alpha, one};
      return make_instance("BUSH", {}, Side::Complement, std::move(pt));
    }
    pt.scalars = {u * alpha, alpha, one};
    return make_instance("BUSH", {}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    const auto& s = inst.point.scalars;  // x, p, q
    Scalar u = s[0] / s[1];
    Scalar alpha = s[1] / s[2];
    Scalar zero = ctx.make_int(0);
    Scalar one = ctx.make_int(1);
    Side side = (!(alpha < zero) && !(alpha > one)) ? Side::Primary : Side::Complement;
    EvalPoint pt;
    pt.scalars = {u, alpha};
    return make_instance("BERNOULLI_FULL", {}, side, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    const Scalar& q = tgt.point.scalars[2];
    Scalar scale = abs_scalar(t.lhs) + abs_scalar(t.rhs);
    return close_to(t.lhs, pow_scalar(s.lhs, q), scale, tight_tol(ctx), why,
                    "left side q-th power") &&
           close_to(t.rhs, pow_scalar(s.rhs, q), scale, tight_tol(ctx), why,
                    "right side q-th power");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_RUTHING: (x, a) -> (1, 1+x, a); conversely (a, b, alpha) -> (b/a - 1,
// alpha). The tangent-difference bound is the power bound scaled by a^alpha.
// ---------------------------------------------------------------------------

TransformationWitness ruthing_witness() {
  TransformationWitness w;
  w.name = "W_RUTHING";
  w.source_entry = "BERNOULLI_FULL";
  w.target_entry = "RUTHING";
  w.summary =
      "dividing the tangent-difference bound by a^alpha reduces it to the "
      "power bound at b/a - 1; the embedding a = 1, b = 1+x comes back.";
  w.two_way = true;
  w.roundtrip_source = true;
  w.roundtrip_target = false;  // forward pins the first argument to 1
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    Side side = rng.coin() ? Side::Primary : Side::Complement;
    return draw_from("BERNOULLI_FULL", {}, side, false, rng, ctx);
  };
  // The target draw bounds |alpha * log a| so that a^alpha stays within the
  // classifier's band-edge factor of the source scale.
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    bool comp = rng.coin();
    Scalar alpha = comp ? alpha_outside_unit(rng, ctx) : rng.unit(ctx);
    double cap = std::min(100.0, std::exp(5.5 / std::max(1.0, std::fabs(alpha.to_double()))));
    EvalPoint pt;
    pt.scalars = {rng.log_uniform(1.0 / cap, cap, ctx), rng.log_uniform(1.0 / cap, cap, ctx),
                  alpha};
    return make_instance("RUTHING", {}, comp ? Side::Complement : Side::Primary, std::move(pt));
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    Side side = rng.coin() ? Side::Primary : Side::Complement;
    return draw_from("BERNOULLI_FULL", {}, side, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    Scalar one = ctx.make_int(1);
    EvalPoint pt;
    pt.scalars = {one, one + inst.point.scalars[0], inst.point.scalars[1]};
    return make_instance("RUTHING", {}, inst.descriptor.side, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    const auto& s = inst.point.scalars;  // a, b, alpha
    EvalPoint pt;
    pt.scalars = {s[1] / s[0] - ctx.make_int(1), s[2]};
    return make_instance("BERNOULLI_FULL", {}, inst.descriptor.side, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    const Scalar& a = tgt.point.scalars[0];
    const Scalar& alpha = src.point.scalars[1];
    Scalar scale = abs_scalar(t.lhs) + abs_scalar(t.rhs);
    return close_to(s.margin * pow_scalar(a, alpha), t.margin, scale, tight_tol(ctx), why,
                    "margin scaling by a^alpha");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_PECARIC_STEP: the inductive step of the weighted product bound. Merging
// the first n-1 terms into their weighted average keeps the linear side and
// can only raise the product side, so the n-term margin dominates the
// two-term margin. Also carried as a derivation check replaying the
// induction.
// ---------------------------------------------------------------------------

Instance pecaric_merge(const Instance& inst, const PrecisionContext& ctx) {
  long n = param_int(inst.descriptor.params, "n");
  const auto& a = inst.point.values;
  const auto& wt = inst.point.weights;
  Scalar wp = ctx.make_int(0);
  Scalar dot = ctx.make_int(0);
  for (long i = 0; i + 1 < n; ++i) {
    wp = wp + wt[i];
    dot = dot + wt[i] * a[i];
  }
  Scalar merged = dot / wp;
  EvalPoint pt;
  pt.values = {merged, a[n - 1]};
  pt.weights = {wp, wt[n - 1]};
  return make_instance("PECARIC", ParamMap{{"n", 2L}}, Side::Primary, std::move(pt));
}

TransformationWitness pecaric_step_witness() {
  TransformationWitness w;
  w.name = "W_PECARIC_STEP";
  w.source_entry = "PECARIC";
  w.target_entry = "PECARIC";
  w.summary =
      "inductive step: merging the head of the tuple into its weighted "
      "average preserves the linear side, and the hypothesis bounds the "
      "merged product side from above; the n-term margin dominates.";
  // Merging can land a strict instance exactly on the merged equality set.
  w.verdicts_correspond = false;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(3, 8);
    return draw_from("PECARIC", ParamMap{{"n", n}}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(3, 8);
    return draw_from("PECARIC", ParamMap{{"n", n}}, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    return pecaric_merge(inst, ctx);
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(s.lhs) + abs_scalar(s.rhs);
    Scalar tol = tight_tol(ctx);
    if (!close_to(t.rhs, s.rhs, scale, tol, why, "merged linear side")) return false;
    if (t.margin > s.margin + tol * scale) {
      set_why(why, "merged margin " + t.margin.compact() + " exceeds the source margin " +
                       s.margin.compact());
      return false;
    }
    return true;
  };
  w.derivation_sampler = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(3, 8);
    return draw_from("PECARIC", ParamMap{{"n", n}}, Side::Primary, rng.coin(0.2), rng, ctx);
  };
  w.derivation = [](const Instance& inst, bool corrupt, const PrecisionContext& ctx,
                    std::string* why) -> bool {
    long n = param_int(inst.descriptor.params, "n");
    const auto& a = inst.point.values;
    const auto& wt = inst.point.weights;
    Scalar one = ctx.make_int(1);
    Scalar wp = ctx.make_int(0);
    Scalar dot = ctx.make_int(0);
    for (long i = 0; i + 1 < n; ++i) {
      wp = wp + wt[i];
      dot = dot + wt[i] * a[i];
    }
    Scalar merged = dot / wp;
    // induction hypothesis: the (n-1)-term bound at normalized weights
    std::vector<Scalar> ha(a.begin(), a.begin() + (n - 1));
    std::vector<Scalar> hw;
    hw.reserve(n - 1);
    for (long i = 0; i + 1 < n; ++i) hw.push_back(wt[i] / wp);
    InequalityDescriptor hyp = lookup("PECARIC", ParamMap{{"n", n - 1}});
    EvalPoint hp;
    hp.values = std::move(ha);
    hp.weights = std::move(hw);
    PointClassification hc = classify(hyp, hp, ctx);
    if (hc.verdict == Verdict::OutsideValidity || hc.verdict == Verdict::Violated) {
      set_why(why, "hypothesis application " + verdict_str(hc.verdict));
      return false;
    }
    Scalar lhs_hyp = *hc.lhs;
    if (corrupt) lhs_hyp = lhs_hyp * ctx.make(1.1);
    // the merged two-term instance
    Instance step = pecaric_merge(inst, ctx);
    PointClassification sc = classify(step.descriptor, step.point, ctx);
    if (sc.verdict == Verdict::OutsideValidity || sc.verdict == Verdict::Violated) {
      set_why(why, "merged application " + verdict_str(sc.verdict));
      return false;
    }
    LhsRhs full = inst.descriptor.formula(inst.point, ctx);
    Scalar scale = abs_scalar(full.lhs) + abs_scalar(full.rhs);
    Scalar tol = tight_tol(ctx);
    Scalar tail = pow_scalar(one + a[n - 1], wt[n - 1]);
    // (i) the full product side factors through the hypothesis's
    if (!close_to(pow_scalar(lhs_hyp, wp) * tail, full.lhs, scale, tol, why,
                  "head refactoring")) {
      return false;
    }
    // (ii) the merged instance's product side is the bound the hypothesis gives
    Scalar bound = pow_scalar(one + merged, wp) * tail;
    if (!close_to(bound, *sc.lhs, scale, tol, why, "merged product side")) return false;
    // (iii) linear sides agree
    if (!close_to(*sc.rhs, full.rhs, scale, tol, why, "linear side")) return false;
    // (iv) the chain closes: product side <= merged bound
    if (full.lhs > bound + tol * scale) {
      set_why(why, "chain fails: product side " + full.lhs.compact() + " above merged bound " +
                       bound.compact());
      return false;
    }
    return true;
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_PECARIC_REV: the reverse specialization; the two-scalar power bound is
// the n-term weighted product bound at a constant tuple.
// ---------------------------------------------------------------------------

TransformationWitness pecaric_rev_witness() {
  TransformationWitness w;
  w.name = "W_PECARIC_REV";
  w.source_entry = "BERNOULLI_FULL";
  w.target_entry = "PECARIC";
  w.summary =
      "specialization: a constant tuple with weights summing to a exhibits "
      "the power bound inside the weighted product bound; both sides "
      "transport verbatim.";
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("BERNOULLI_FULL", {}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    return draw_from("BERNOULLI_FULL", {}, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    const Scalar& x = inst.point.scalars[0];
    Scalar third = inst.point.scalars[1] / ctx.make_int(3);
    EvalPoint pt;
    pt.values = {x, x, x};
    pt.weights = {third, third, third};
    return make_instance("PECARIC", ParamMap{{"n", 3L}}, Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(s.lhs) + abs_scalar(s.rhs);
    return close_to(t.lhs, s.lhs, scale, tight_tol(ctx), why, "product side") &&
           close_to(t.rhs, s.rhs, scale, tight_tol(ctx), why, "linear side");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_POWER_IDENT and friends: the power-mean substitution identities.
// Exponents are drawn from dyadic grids (multiples of 1/16) so that the
// parameter arithmetic below is exact in double precision.
// ---------------------------------------------------------------------------

TransformationWitness power_ident_witness() {
  TransformationWitness w;
  w.name = "W_POWER_IDENT";
  w.source_entry = "POWERMEAN";
  w.target_entry = "POWERMEAN";
  w.summary =
      "substituting b = a^r carries the (r, s) mean pair with 0 < r < s to "
      "the base pair (1, s/r): both means pick up exactly the r-th power.";
  w.two_way = true;
  w.roundtrip_source = false;  // forward renormalizes the exponent pair
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double r = rng.int_in(2, 40) / 16.0;
    double t = rng.int_in(18, 48) / 16.0;
    return draw_from("POWERMEAN", ParamMap{{"n", n}, {"r", r}, {"s", r * t}}, Side::Primary,
                     false, rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double t = rng.int_in(18, 48) / 16.0;
    return draw_from("POWERMEAN", ParamMap{{"n", n}, {"r", 1.0}, {"s", t}}, Side::Primary,
                     false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double r = rng.int_in(2, 40) / 16.0;
    double t = rng.int_in(18, 48) / 16.0;
    return draw_from("POWERMEAN", ParamMap{{"n", n}, {"r", r}, {"s", r * t}}, Side::Primary,
                     true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double r = param_real(inst.descriptor.params, "r");
    double s = param_real(inst.descriptor.params, "s");
    Scalar re = ctx.make(r);
    EvalPoint pt;
    pt.weights = inst.point.weights;
    pt.values.reserve(inst.point.values.size());
    for (const Scalar& a : inst.point.values) pt.values.push_back(pow_scalar(a, re));
    return make_instance("POWERMEAN", ParamMap{{"n", n}, {"r", 1.0}, {"s", s / r}},
                         Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double s = param_real(inst.descriptor.params, "s");
    Scalar two = ctx.make_int(2);
    EvalPoint pt;
    pt.weights = inst.point.weights;
    pt.values.reserve(inst.point.values.size());
    for (const Scalar& b : inst.point.values) pt.values.push_back(pow_scalar(b, two));
    return make_instance("POWERMEAN", ParamMap{{"n", n}, {"r", 0.5}, {"s", s / 2.0}},
                         Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Scalar re = ctx.make(param_real(src.descriptor.params, "r"));
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(t.lhs) + abs_scalar(t.rhs);
    return close_to(t.lhs, pow_scalar(s.lhs, re), scale, tight_tol(ctx), why,
                    "left mean power identity") &&
           close_to(t.rhs, pow_scalar(s.rhs, re), scale, tight_tol(ctx), why,
                    "right mean power identity");
  };
  return w;
}

TransformationWitness power_ident_neg_witness() {
  TransformationWitness w;
  w.name = "W_POWER_IDENT_NEG";
  w.source_entry = "POWERMEAN";
  w.target_entry = "POWERMEAN";
  w.summary =
      "substituting b = 1/a carries the (r, s) mean pair with r < s < 0 to "
      "the positive pair (-s, -r): each mean maps to the reciprocal of the "
      "other.";
  w.two_way = true;
  w.roundtrip_source = true;
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double s = -(rng.int_in(2, 40) / 16.0);
    double r = s - rng.int_in(2, 40) / 16.0;
    return draw_from("POWERMEAN", ParamMap{{"n", n}, {"r", r}, {"s", s}}, Side::Primary, false,
                     rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double r = rng.int_in(2, 40) / 16.0;
    double s = r + rng.int_in(2, 40) / 16.0;
    return draw_from("POWERMEAN", ParamMap{{"n", n}, {"r", r}, {"s", s}}, Side::Primary, false,
                     rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double s = -(rng.int_in(2, 40) / 16.0);
    double r = s - rng.int_in(2, 40) / 16.0;
    return draw_from("POWERMEAN", ParamMap{{"n", n}, {"r", r}, {"s", s}}, Side::Primary, true,
                     rng, ctx);
  };
  auto flip = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double r = param_real(inst.descriptor.params, "r");
    double s = param_real(inst.descriptor.params, "s");
    Scalar one = ctx.make_int(1);
    EvalPoint pt;
    pt.weights = inst.point.weights;
    pt.values.reserve(inst.point.values.size());
    for (const Scalar& a : inst.point.values) pt.values.push_back(one / a);
    return make_instance("POWERMEAN", ParamMap{{"n", n}, {"r", -s}, {"s", -r}}, Side::Primary,
                         std::move(pt));
  };
  w.forward = flip;
  w.backward = flip;
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar one = ctx.make_int(1);
    return close_to(t.lhs * s.rhs, one, one, tight_tol(ctx), why,
                    "reciprocal mean product (left)") &&
           close_to(t.rhs * s.lhs, one, one, tight_tol(ctx), why,
                    "reciprocal mean product (right)");
  };
  return w;
}

TransformationWitness power_ident_ga_witness() {
  TransformationWitness w;
  w.name = "W_POWER_IDENT_GA";
  w.source_entry = "POWERMEAN";
  w.target_entry = "GAN";
  w.summary =
      "substituting b = a^s carries the (0, s) mean pair with s > 0 to the "
      "geometric-arithmetic pair: both means pick up exactly the s-th power.";
  w.two_way = true;
  w.roundtrip_source = false;  // forward absorbs s into the tuple
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double s = rng.int_in(2, 40) / 16.0;
    return draw_from("POWERMEAN", ParamMap{{"n", n}, {"r", 0.0}, {"s", s}}, Side::Primary,
                     false, rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    return draw_from("GAN", ParamMap{{"n", n}}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double s = rng.int_in(2, 40) / 16.0;
    return draw_from("POWERMEAN", ParamMap{{"n", n}, {"r", 0.0}, {"s", s}}, Side::Primary, true,
                     rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    Scalar se = ctx.make(param_real(inst.descriptor.params, "s"));
    EvalPoint pt;
    pt.weights = inst.point.weights;
    pt.values.reserve(inst.point.values.size());
    for (const Scalar& a : inst.point.values) pt.values.push_back(pow_scalar(a, se));
    return make_instance("GAN", ParamMap{{"n", n}}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    (void)ctx;
    long n = static_cast<long>(inst.point.values.size());
    EvalPoint pt;
    pt.weights = inst.point.weights;
    pt.values.reserve(inst.point.values.size());
    for (const Scalar& b : inst.point.values) pt.values.push_back(sqrt_scalar(b));
    return make_instance("POWERMEAN", ParamMap{{"n", n}, {"r", 0.0}, {"s", 2.0}}, Side::Primary,
                         std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Scalar se = ctx.make(param_real(src.descriptor.params, "s"));
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(t.lhs) + abs_scalar(t.rhs);
    return close_to(t.lhs, pow_scalar(s.lhs, se), scale, tight_tol(ctx), why,
                    "geometric side power identity") &&
           close_to(t.rhs, pow_scalar(s.rhs, se), scale, tight_tol(ctx), why,
                    "arithmetic side power identity");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_HOLDER_MINK: a derivation check. The triangle-type bound at (a, b) is
// re-proved from two product-form applications against the split sums
// s = a + b: their left sides add to the power sum of s and their right
// sides add to the target's right side times S^(1-1/p).
// ---------------------------------------------------------------------------

TransformationWitness holder_mink_witness() {
  TransformationWitness w;
  w.name = "W_HOLDER_MINK";
  w.source_entry = "HOLDER";
  w.target_entry = "MINKOWSKI";
  w.summary =
      "the sum bound re-proved from two product-form applications against "
      "the termwise sums; the check replays the split and the margin chain.";
  w.derivation_sampler = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = 1.1 + uniform_double(rng, 0.0, 2.9);
    return draw_from("MINKOWSKI", ParamMap{{"n", n}, {"p", p}}, Side::Primary, rng.coin(0.2),
                     rng, ctx);
  };
  w.derivation = [](const Instance& inst, bool corrupt, const PrecisionContext& ctx,
                    std::string* why) -> bool {
    long n = param_int(inst.descriptor.params, "n");
    double pd = param_real(inst.descriptor.params, "p");
    Scalar pe = ctx.make(pd);
    Scalar one = ctx.make_int(1);
    PointClassification mc = classify(inst.descriptor, inst.point, ctx);
    if (mc.verdict == Verdict::OutsideValidity) {
      set_why(why, "instance outside validity");
      return false;
    }
    const auto& a = inst.point.values;
    const auto& b = inst.point.values2;
    Scalar conj_pow = ctx.make(pd - 1.0);
    std::vector<Scalar> c;
    c.reserve(a.size());
    Scalar power_sum = ctx.make_int(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      Scalar si = a[i] + b[i];
      c.push_back(pow_scalar(si, conj_pow));
      power_sum = power_sum + pow_scalar(si, pe);
    }
    InequalityDescriptor prod = lookup("HOLDER", ParamMap{{"n", n}, {"p", pd}});
    EvalPoint leg1;
    leg1.values = a;
    leg1.values2 = c;
    EvalPoint leg2;
    leg2.values = b;
    leg2.values2 = c;
    PointClassification c1 = classify(prod, leg1, ctx);
    PointClassification c2 = classify(prod, leg2, ctx);
    for (const PointClassification* leg : {&c1, &c2}) {
      if (leg->verdict == Verdict::OutsideValidity || leg->verdict == Verdict::Violated) {
        set_why(why, "product-form application " + verdict_str(leg->verdict));
        return false;
      }
    }
    Scalar l1 = *c1.lhs;
    if (corrupt) l1 = l1 * ctx.make(1.1);
    Scalar tol = tight_tol(ctx);
    // (i) the two product sides add to the power sum of the termwise sums
    if (!close_to(l1 + *c2.lhs, power_sum, power_sum, tol, why, "split product sides")) {
      return false;
    }
    // (ii) the two bounds add to the target's right side times S^(1-1/p)
    Scalar sq = pow_scalar(power_sum, one - one / pe);
    Scalar scale2 = abs_scalar(*c1.rhs) + abs_scalar(*c2.rhs);
    if (!close_to(*c1.rhs + *c2.rhs, *mc.rhs * sq, scale2, seam_tol(ctx), why,
                  "split bounds")) {
      return false;
    }
    // (iii) the target's left side is the p-th root of the power sum
    if (!close_to(pow_scalar(power_sum, one / pe), *mc.lhs, *mc.lhs, tol, why,
                  "root of the power sum")) {
      return false;
    }
    // (iv) margins chain across the split
    if (!close_to(*mc.margin * sq, *c1.margin + *c2.margin, power_sum, seam_tol(ctx), why,
                  "margin chain")) {
      return false;
    }
    // equality travels both ways across the split
    bool target_eq = mc.verdict == Verdict::Equality;
    bool legs_eq = c1.verdict == Verdict::Equality && c2.verdict == Verdict::Equality;
    if (target_eq != legs_eq) {
      if (target_eq) {
        for (const PointClassification* leg : {&c1, &c2}) {
          if (leg->verdict != Verdict::Equality && !within_band_edge(*leg, ctx)) {
            set_why(why, "equality instance with a strict product-form leg");
            return false;
          }
        }
      } else if (!within_band_edge(mc, ctx)) {
        set_why(why, "strict instance whose product-form legs both sit at equality");
        return false;
      }
    }
    return true;
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_WEIGHT_ABSORB / W_WEIGHT_ABSORB_MINK: weights are absorbed into the
// tuples as w^(1/p) factors. For the product-form pair the conjugate share
// w^(1/p') appears on the second tuple, so exponent pairs are drawn from a
// dyadic self-conjugate set where p/(p-1) is exact in double precision.
// ---------------------------------------------------------------------------

constexpr double kSelfConjugate[] = {1.125, 1.25, 1.5, 2.0, 3.0, 5.0, 9.0, 17.0};

TransformationWitness weight_absorb_witness() {
  TransformationWitness w;
  w.name = "W_WEIGHT_ABSORB";
  w.source_entry = "HOLDER_W";
  w.target_entry = "HOLDER";
  w.summary =
      "absorbing weights into the tuples as a w^(1/p), b w^(1/p') factors "
      "removes them; unit weights include back.";
  w.two_way = true;
  w.roundtrip_source = false;  // forward erases the weights
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = kSelfConjugate[rng.below(8)];
    return draw_from("HOLDER_W", ParamMap{{"n", n}, {"p", p}}, Side::Primary, false, rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = kSelfConjugate[rng.below(8)];
    return draw_from("HOLDER", ParamMap{{"n", n}, {"p", p}}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = kSelfConjugate[rng.below(8)];
    return draw_from("HOLDER_W", ParamMap{{"n", n}, {"p", p}}, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double pd = param_real(inst.descriptor.params, "p");
    Scalar u = ctx.make_int(1) / ctx.make(pd);
    Scalar v = ctx.make_int(1) - u;
    EvalPoint pt;
    pt.values.reserve(inst.point.values.size());
    pt.values2.reserve(inst.point.values.size());
    for (std::size_t i = 0; i < inst.point.values.size(); ++i) {
      pt.values.push_back(inst.point.values[i] * pow_scalar(inst.point.weights[i], u));
      pt.values2.push_back(inst.point.values2[i] * pow_scalar(inst.point.weights[i], v));
    }
    return make_instance("HOLDER", ParamMap{{"n", n}, {"p", pd}}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double pd = param_real(inst.descriptor.params, "p");
    EvalPoint pt = inst.point;
    pt.weights.assign(inst.point.values.size(), ctx.make_int(1));
    return make_instance("HOLDER_W", ParamMap{{"n", n}, {"p", pd}}, Side::Primary,
                         std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(s.lhs) + abs_scalar(s.rhs);
    return close_to(t.lhs, s.lhs, scale, tight_tol(ctx), why, "absorbed product side") &&
           close_to(t.rhs, s.rhs, scale, tight_tol(ctx), why, "absorbed bound side");
  };
  return w;
}

TransformationWitness weight_absorb_mink_witness() {
  TransformationWitness w;
  w.name = "W_WEIGHT_ABSORB_MINK";
  w.source_entry = "MINKOWSKI_W";
  w.target_entry = "MINKOWSKI";
  w.summary =
      "absorbing weights into both tuples as a single w^(1/p) factor removes "
      "them from the sum bound; unit weights include back.";
  w.two_way = true;
  w.roundtrip_source = false;
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = 1.0 + uniform_double(rng, 0.0, 3.0);
    return draw_from("MINKOWSKI_W", ParamMap{{"n", n}, {"p", p}}, Side::Primary, false, rng,
                     ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = 1.0 + uniform_double(rng, 0.0, 3.0);
    return draw_from("MINKOWSKI", ParamMap{{"n", n}, {"p", p}}, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = 1.0 + uniform_double(rng, 0.0, 3.0);
    return draw_from("MINKOWSKI_W", ParamMap{{"n", n}, {"p", p}}, Side::Primary, true, rng,
                     ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double pd = param_real(inst.descriptor.params, "p");
    Scalar u = ctx.make_int(1) / ctx.make(pd);
    EvalPoint pt;
    pt.values.reserve(inst.point.values.size());
    pt.values2.reserve(inst.point.values.size());
    for (std::size_t i = 0; i < inst.point.values.size(); ++i) {
      Scalar f = pow_scalar(inst.point.weights[i], u);
      pt.values.push_back(f * inst.point.values[i]);
      pt.values2.push_back(f * inst.point.values2[i]);
    }
    return make_instance("MINKOWSKI", ParamMap{{"n", n}, {"p", pd}}, Side::Primary,
                         std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double pd = param_real(inst.descriptor.params, "p");
    EvalPoint pt = inst.point;
    pt.weights.assign(inst.point.values.size(), ctx.make_int(1));
    return make_instance("MINKOWSKI_W", ParamMap{{"n", n}, {"p", pd}}, Side::Primary,
                         std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(s.lhs) + abs_scalar(s.rhs);
    return close_to(t.lhs, s.lhs, scale, tight_tol(ctx), why, "absorbed sum side") &&
           close_to(t.rhs, s.rhs, scale, tight_tol(ctx), why, "absorbed bound side");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_RADON_MAP: a = x^p, b = y^(1/(1-s)) with s = 1/p turns the product-form
// bound into the split-exponent quotient bound. Exponents are kept to
// p in {2, 4, 8} so that s and 1-s are exact dyadic doubles.
// ---------------------------------------------------------------------------

constexpr double kDyadicConjugate[] = {2.0, 4.0, 8.0};

TransformationWitness radon_map_witness() {
  TransformationWitness w;
  w.name = "W_RADON_MAP";
  w.source_entry = "HOLDER";
  w.target_entry = "RADON";
  w.summary =
      "the change of variables a = x^p, b = y^(p/(p-1)) with s = 1/p "
      "identifies the product bound with the split-exponent bound; the "
      "product sides agree verbatim.";
  w.two_way = true;
  w.roundtrip_source = true;
  w.roundtrip_target = true;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = kDyadicConjugate[rng.below(3)];
    return draw_from("HOLDER", ParamMap{{"n", n}, {"p", p}}, Side::Primary, false, rng, ctx);
  };
  w.sample_target = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = kDyadicConjugate[rng.below(3)];
    return draw_from("RADON", ParamMap{{"n", n}, {"s", 1.0 / p}}, Side::Primary, false, rng,
                     ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = kDyadicConjugate[rng.below(3)];
    return draw_from("HOLDER", ParamMap{{"n", n}, {"p", p}}, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double pd = param_real(inst.descriptor.params, "p");
    double sd = 1.0 / pd;
    Scalar pe = ctx.make(pd);
    Scalar be = ctx.make_int(1) / (ctx.make_int(1) - ctx.make(sd));
    EvalPoint pt;
    pt.values.reserve(inst.point.values.size());
    pt.values2.reserve(inst.point.values.size());
    for (const Scalar& x : inst.point.values) pt.values.push_back(pow_scalar(x, pe));
    for (const Scalar& y : inst.point.values2) pt.values2.push_back(pow_scalar(y, be));
    return make_instance("RADON", ParamMap{{"n", n}, {"s", sd}}, Side::Primary, std::move(pt));
  };
  w.backward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double sd = param_real(inst.descriptor.params, "s");
    Scalar se = ctx.make(sd);
    Scalar ce = ctx.make(1.0 - sd);
    EvalPoint pt;
    pt.values.reserve(inst.point.values.size());
    pt.values2.reserve(inst.point.values.size());
    for (const Scalar& a : inst.point.values) pt.values.push_back(pow_scalar(a, se));
    for (const Scalar& b : inst.point.values2) pt.values2.push_back(pow_scalar(b, ce));
    return make_instance("HOLDER", ParamMap{{"n", n}, {"p", 1.0 / sd}}, Side::Primary,
                         std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(s.lhs) + abs_scalar(s.rhs);
    return close_to(t.lhs, s.lhs, scale, tight_tol(ctx), why, "product side") &&
           close_to(t.rhs, s.rhs, scale, seam_tol(ctx), why, "factored side");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_LIAPUNOV_MAP: the product-form bound at (a, b, w) becomes a moment
// bound with exponents (p', 1, 0) after the substitution
// x = (sa/lhs) b a^(1-p), w' = w a^p / sa, which also normalizes the image
// so its left side is exactly 1.
// ---------------------------------------------------------------------------

TransformationWitness liapunov_map_witness() {
  TransformationWitness w;
  w.name = "W_LIAPUNOV_MAP";
  w.source_entry = "HOLDER_W";
  w.target_entry = "LIAPUNOV";
  w.summary =
      "the product bound becomes the (p', 1, 0) moment bound under "
      "x = c b a^(1-p) with reweighted tuple w a^p; the image is normalized "
      "so its first moment is one.";
  // The image is kept at unit scale, so the classifier tracks verdicts; the
  // sampler stays in a moderate range to keep the source scale near one too.
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = 1.1 + uniform_double(rng, 0.0, 2.9);
    InequalityDescriptor d = bind_entry("HOLDER_W", ParamMap{{"n", n}, {"p", p}}, Side::Primary);
    EvalPoint pt;
    for (long i = 0; i < n; ++i) pt.values.push_back(rng.log_uniform(0.5, 5.0, ctx));
    for (long i = 0; i < n; ++i) pt.values2.push_back(rng.log_uniform(0.5, 5.0, ctx));
    for (long i = 0; i < n; ++i) pt.weights.push_back(rng.log_uniform(0.1, 10.0, ctx));
    return Instance{std::move(d), std::move(pt)};
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    long n = rng.int_in(2, 8);
    double p = 1.1 + uniform_double(rng, 0.0, 2.9);
    InequalityDescriptor d = bind_entry("HOLDER_W", ParamMap{{"n", n}, {"p", p}}, Side::Primary);
    Scalar pm1 = ctx.make(p) - ctx.make_int(1);
    Scalar c = rng.log_uniform(0.5, 2.0, ctx);
    EvalPoint pt;
    for (long i = 0; i < n; ++i) pt.values.push_back(rng.log_uniform(0.5, 5.0, ctx));
    for (long i = 0; i < n; ++i) pt.values2.push_back(c * pow_scalar(pt.values[i], pm1));
    for (long i = 0; i < n; ++i) pt.weights.push_back(rng.log_uniform(0.1, 10.0, ctx));
    return Instance{std::move(d), std::move(pt)};
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double pd = param_real(inst.descriptor.params, "p");
    Scalar pe = ctx.make(pd);
    Scalar one = ctx.make_int(1);
    const auto& a = inst.point.values;
    const auto& b = inst.point.values2;
    const auto& wt = inst.point.weights;
    Scalar sa = ctx.make_int(0);
    Scalar lhs = ctx.make_int(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      sa = sa + wt[i] * pow_scalar(a[i], pe);
      lhs = lhs + wt[i] * a[i] * b[i];
    }
    Scalar k = sa / lhs;
    EvalPoint pt;
    pt.values.reserve(a.size());
    pt.weights.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      pt.values.push_back(k * b[i] * pow_scalar(a[i], one - pe));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      pt.weights.push_back(wt[i] * pow_scalar(a[i], pe) / sa);
    }
    double pc = pd / (pd - 1.0);
    return make_instance("LIAPUNOV", ParamMap{{"n", n}, {"r", pc}, {"s", 1.0}, {"t", 0.0}},
                         Side::Primary, std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar one = ctx.make_int(1);
    Scalar pc = ctx.make(param_real(tgt.descriptor.params, "r"));
    Scalar want = pow_scalar(s.rhs, pc);
    return close_to(t.lhs, one, one, tight_tol(ctx), why, "normalized first moment") &&
           close_to(t.rhs * pow_scalar(s.lhs, pc), want, want, seam_tol(ctx), why,
                    "factored power identity");
  };
  return w;
}

// ---------------------------------------------------------------------------
// W_LIAPUNOV_REV: the exponent split p = (r-t)/(r-s), a = x^(t/p),
// b = x^(r/p') carries a three-exponent moment instance to the weighted
// product form. The moment scales run over many orders of magnitude, so the
// banded classifier cannot track verdicts across this map.
// ---------------------------------------------------------------------------

TransformationWitness liapunov_rev_witness() {
  TransformationWitness w;
  w.name = "W_LIAPUNOV_REV";
  w.source_entry = "LIAPUNOV";
  w.target_entry = "HOLDER_W";
  w.summary =
      "the exponent split a = x^(t/p), b = x^(r/p') with p = (r-t)/(r-s) "
      "carries the three-exponent moment bound to the weighted product "
      "bound; raising the product sides to r-t recombines them.";
  w.verdicts_correspond = false;
  w.sample_source = [](Rng& rng, const PrecisionContext& ctx) {
    ParamMap params = sample_entry_params("LIAPUNOV", Side::Primary, rng);
    return draw_from("LIAPUNOV", params, Side::Primary, false, rng, ctx);
  };
  w.equality_source = [](Rng& rng, const PrecisionContext& ctx) {
    ParamMap params = sample_entry_params("LIAPUNOV", Side::Primary, rng);
    return draw_from("LIAPUNOV", params, Side::Primary, true, rng, ctx);
  };
  w.forward = [](const Instance& inst, const PrecisionContext& ctx) {
    long n = param_int(inst.descriptor.params, "n");
    double rd = param_real(inst.descriptor.params, "r");
    double sd = param_real(inst.descriptor.params, "s");
    double td = param_real(inst.descriptor.params, "t");
    ExponentSplit split =
        liapunov_to_holder(ctx.make(rd), ctx.make(sd), ctx.make(td), inst.point.values, ctx);
    EvalPoint pt;
    pt.values = std::move(split.a);
    pt.values2 = std::move(split.b);
    pt.weights = inst.point.weights;
    double pd = (rd - td) / (rd - sd);
    return make_instance("HOLDER_W", ParamMap{{"n", n}, {"p", pd}}, Side::Primary,
                         std::move(pt));
  };
  w.relation = [](const Instance& src, const Instance& tgt, const PrecisionContext& ctx,
                  std::string* why) {
    double rd = param_real(src.descriptor.params, "r");
    double td = param_real(src.descriptor.params, "t");
    Scalar rt = ctx.make(rd - td);
    Sides s = eval_sides(src, ctx);
    Sides t = eval_sides(tgt, ctx);
    Scalar scale = abs_scalar(s.lhs) + abs_scalar(s.rhs);
    return close_to(pow_scalar(t.lhs, rt), s.lhs, scale, seam_tol(ctx), why,
                    "left side recombination") &&
           close_to(pow_scalar(t.rhs, rt), s.rhs, scale, seam_tol(ctx), why,
                    "right side recombination");
  };
  return w;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

std::vector<TransformationWitness> build_witnesses() {
  std::vector<TransformationWitness> all;
  all.push_back(reflect_witness());
  all.push_back(recip_witness());
  all.push_back(reflect_neg_witness());
  all.push_back(shift_witness());
  all.push_back(ratio_witness());
  all.push_back(young_witness());
  all.push_back(normalize_witness());
  all.push_back(normalize_sum_witness());
  all.push_back(double_witness());
  all.push_back(double_rev_witness());
  all.push_back(backward_witness());
  all.push_back(rado_rewrite_witness());
  all.push_back(bush_witness());
  all.push_back(ruthing_witness());
  all.push_back(pecaric_step_witness());
  all.push_back(pecaric_rev_witness());
  all.push_back(power_ident_witness());
  all.push_back(power_ident_neg_witness());
  all.push_back(power_ident_ga_witness());
  all.push_back(holder_mink_witness());
  all.push_back(weight_absorb_witness());
  all.push_back(weight_absorb_mink_witness());
  all.push_back(radon_map_witness());
  all.push_back(liapunov_map_witness());
  all.push_back(liapunov_rev_witness());
  return all;
}

const std::vector<TransformationWitness>& registry() {
  static const std::vector<TransformationWitness> all = build_witnesses();
  return all;
}

// One sampled check of one point-map direction; failures append to `rep`.
void check_map_sample(const TransformationWitness& w, WitnessDirection dir, std::size_t index,
                      std::uint64_t sample_seed, Rng& rng, bool want_eq,
                      const PrecisionContext& ctx, WitnessReport& rep) {
  auto fail = [&](const Instance* start, const Instance* img, std::string expected,
                  std::string got) {
    WitnessFailure f;
    f.direction = dir;
    f.sample_index = index;
    f.sample_seed = sample_seed;
    if (start) f.source_pt = point_str(*start);
    if (img) f.mapped_pt = point_str(*img);
    f.expected = std::move(expected);
    f.got = std::move(got);
    rep.failures.push_back(std::move(f));
  };
  const bool fwd = dir == WitnessDirection::Forward;
  const auto& sampler = want_eq ? w.equality_source : (fwd ? w.sample_source : w.sample_target);
  Instance start = sampler(rng, ctx);
  PointClassification c0 = classify(start.descriptor, start.point, ctx);
  if (c0.verdict == Verdict::OutsideValidity) {
    fail(&start, nullptr, "sampled point inside its validity set", "OutsideValidity");
    return;
  }
  const auto& map = fwd ? w.forward : w.backward;
  std::optional<Instance> img;
  try {
    img = map(start, ctx);
  } catch (const std::exception& e) {
    fail(&start, nullptr, "map evaluates", std::string("exception: ") + e.what());
    return;
  }
  PointClassification c1 = classify(img->descriptor, img->point, ctx);
  if (c1.verdict == Verdict::OutsideValidity) {
    fail(&start, &*img, "image inside the target validity set", "OutsideValidity");
    return;
  }
  if (c0.verdict == Verdict::Violated || c1.verdict == Verdict::Violated) {
    fail(&start, &*img, "no violated instances on either end",
         c0.verdict == Verdict::Violated ? "source Violated" : "image Violated");
    return;
  }
  if (w.verdicts_correspond && c0.verdict != c1.verdict) {
    const PointClassification& strict_side = c0.verdict == Verdict::StrictlyHolds ? c0 : c1;
    if (!within_band_edge(strict_side, ctx)) {
      fail(&start, &*img, "matching verdicts (or a band-edge margin)",
           verdict_str(c0.verdict) + " -> " + verdict_str(c1.verdict));
      return;
    }
  }
  if (want_eq && c1.verdict != Verdict::Equality) {
    fail(&start, &*img, "equality point maps to Equality", verdict_str(c1.verdict));
    return;
  }
  if (w.relation) {
    const Instance& src_inst = fwd ? start : *img;
    const Instance& tgt_inst = fwd ? *img : start;
    std::string why;
    if (!w.relation(src_inst, tgt_inst, ctx, &why)) {
      fail(&start, &*img, "margin relation holds", why);
      return;
    }
  }
  const bool check_roundtrip = fwd ? w.roundtrip_source : w.roundtrip_target;
  const auto& inverse = fwd ? w.backward : w.forward;
  if (check_roundtrip && inverse) {
    std::optional<Instance> back;
    try {
      back = inverse(*img, ctx);
    } catch (const std::exception& e) {
      fail(&start, &*img, "inverse map evaluates", std::string("exception: ") + e.what());
      return;
    }
    std::string why;
    if (!points_close(start.point, back->point, ctx, &why)) {
      fail(&start, &*img, "round trip returns to the start", why);
      return;
    }
  }
}

}  // namespace

std::string witness_direction_str(WitnessDirection dir) {
  return dir == WitnessDirection::Forward ? "forward" : "backward";
}

std::vector<std::string> list_witnesses() {
  std::vector<std::string> names;
  names.reserve(registry().size());
  for (const TransformationWitness& w : registry()) names.push_back(w.name);
  return names;
}

const TransformationWitness& find_witness(const std::string& name) {
  for (const TransformationWitness& w : registry()) {
    if (w.name == name) return w;
  }
  throw UnknownWitnessError("no transformation witness named \"" + name + "\"");
}

Instance apply_witness(const TransformationWitness& w, WitnessDirection dir,
                       const Instance& inst, const PrecisionContext& ctx) {
  const auto& map = dir == WitnessDirection::Forward ? w.forward : w.backward;
  if (!map) {
    throw UnsupportedDirectionError(w.name + " has no " + witness_direction_str(dir) +
                                    " point map");
  }
  PointClassification c = classify(inst.descriptor, inst.point, ctx);
  if (c.verdict == Verdict::OutsideValidity) {
    throw OutsideValidityError(w.name + ": input outside the validity set of " +
                               inst.descriptor.instance_key());
  }
  Instance img = map(inst, ctx);
  PointClassification ci = classify(img.descriptor, img.point, ctx);
  if (ci.verdict == Verdict::OutsideValidity) {
    throw OutsideValidityError(w.name + ": image outside the validity set of " +
                               img.descriptor.instance_key());
  }
  return img;
}

WitnessReport verify_witness(const TransformationWitness& w, std::size_t sample_count,
                             std::uint64_t seed, const PrecisionContext& ctx) {
  WitnessReport rep;
  rep.witness = w.name;
  rep.samples = sample_count;
  for (std::size_t i = 0; i < sample_count; ++i) {
    if (w.forward && w.sample_source) {
      std::uint64_t s = derive_seed(seed, w.name + "/forward", i);
      Rng rng(s);
      bool want_eq = static_cast<bool>(w.equality_source) && i % 5 == 4;
      check_map_sample(w, WitnessDirection::Forward, i, s, rng, want_eq, ctx, rep);
      ++rep.checked;
    }
    if (w.two_way && w.backward && w.sample_target) {
      std::uint64_t s = derive_seed(seed, w.name + "/backward", i);
      Rng rng(s);
      check_map_sample(w, WitnessDirection::Backward, i, s, rng, false, ctx, rep);
      ++rep.checked;
    }
    if (w.derivation && w.derivation_sampler) {
      std::uint64_t s = derive_seed(seed, w.name + "/derivation", i);
      Rng rng(s);
      Instance inst = w.derivation_sampler(rng, ctx);
      std::string why;
      bool ok = false;
      try {
        ok = w.derivation(inst, false, ctx, &why);
      } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
      }
      if (!ok) {
        WitnessFailure f;
        f.direction = WitnessDirection::Forward;
        f.sample_index = i;
        f.sample_seed = s;
        f.source_pt = point_str(inst);
        f.expected = "derivation re-proves the instance";
        f.got = why;
        rep.failures.push_back(std::move(f));
      }
      ++rep.checked;
    }
  }
  return rep;
}

TransformationWitness corrupted_witness(const TransformationWitness& w) {
  TransformationWitness bad = w;
  if (bad.forward) {
    auto orig = bad.forward;
    bad.forward = [orig](const Instance& inst, const PrecisionContext& ctx) {
      Instance img = orig(inst, ctx);
      Scalar shift = ctx.make(0.1);
      EvalPoint& pt = img.point;
      if (!pt.scalars.empty()) {
        pt.scalars[0] = pt.scalars[0] + shift;
      } else if (!pt.values.empty()) {
        pt.values[0] = pt.values[0] + shift;
      } else if (!pt.values2.empty()) {
        pt.values2[0] = pt.values2[0] + shift;
      } else if (!pt.weights.empty()) {
        pt.weights[0] = pt.weights[0] + shift;
      }
      return img;
    };
  }
  if (bad.derivation) {
    auto orig = bad.derivation;
    bad.derivation = [orig](const Instance& inst, bool, const PrecisionContext& ctx,
                            std::string* why) { return orig(inst, true, ctx, why); };
  }
  return bad;
}

Scalar conjugate_index(const Scalar& p, const PrecisionContext& ctx) {
  ensure_finite(p, "conjugate index argument");
  Scalar one = ctx.make_int(1);
  if (p == one) throw DegenerateExponentsError("conjugate index is undefined at p = 1");
  if (p.is_zero()) return ctx.make_int(0);
  return p / (p - one);
}

WeightedTuple backward_reduce(const WeightedTuple& t, std::size_t m,
                              const PrecisionContext& ctx) {
  if (m < 2 || m >= t.size()) {
    throw BadIndexError("backward_reduce needs 2 <= m < size; got m=" + std::to_string(m) +
                        " with size " + std::to_string(t.size()));
  }
  Scalar am = arithmetic_mean(t.prefix(m), ctx);
  std::vector<Scalar> values = t.values;
  for (std::size_t i = m; i < values.size(); ++i) values[i] = am;
  return WeightedTuple::of(std::move(values), t.weights);
}

ExponentSplit liapunov_to_holder(const Scalar& r, const Scalar& s, const Scalar& t,
                                 const std::vector<Scalar>& x, const PrecisionContext& ctx) {
  ensure_finite(r, "exponent split argument");
  ensure_finite(s, "exponent split argument");
  ensure_finite(t, "exponent split argument");
  if (r == s || s == t || r == t) {
    throw DegenerateExponentsError("exponent split needs pairwise distinct exponents");
  }
  Scalar one = ctx.make_int(1);
  ExponentSplit out{(r - t) / (r - s), (r - t) / (s - t), {}, {}};
  if (!approx_equal((out.p - one) * (out.p_conjugate - one), one, ctx)) {
    throw DegenerateExponentsError("conjugacy check failed for the exponent split");
  }
  Scalar ea = t / out.p;
  Scalar eb = r / out.p_conjugate;
  out.a.reserve(x.size());
  out.b.reserve(x.size());
  for (const Scalar& xi : x) {
    Scalar ai = pow_scalar(xi, ea);
    Scalar bi = pow_scalar(xi, eb);
    ensure_finite(ai, "exponent split component");
    ensure_finite(bi, "exponent split component");
    if (!approx_equal(ai * bi, pow_scalar(xi, s), ctx)) {
      throw DegenerateExponentsError("split components do not recombine to x^s");
    }
    out.a.push_back(std::move(ai));
    out.b.push_back(std::move(bi));
  }
  return out;
}

}  // namespace ineq
