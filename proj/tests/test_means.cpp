#include "ineq/means.hpp"

#include <gtest/gtest.h>

namespace ineq {
namespace {

PrecisionContext ctx128() { return PrecisionContext(128, 1e-10, 1.0); }

std::vector<Scalar> vals(std::initializer_list<double> xs, const PrecisionContext& ctx) {
  std::vector<Scalar> v;
  for (double x : xs) v.push_back(ctx.make(x));
  return v;
}

WeightedTuple tuple(std::initializer_list<double> values, std::initializer_list<double> weights,
                    const PrecisionContext& ctx) {
  return WeightedTuple::of(vals(values, ctx), vals(weights, ctx));
}

double rel_err(const Scalar& a, const Scalar& b) {
  Scalar d = abs_scalar(a - b);
  Scalar s = max_scalar(abs_scalar(b), Scalar::of_int(1, b.precision()));
  return (d / s).to_double();
}

// Draw a random tuple with values in [1e-3, 1e3] and weights in [1e-2, 1e2].
WeightedTuple random_tuple(Rng& rng, int n, const PrecisionContext& ctx) {
  std::vector<Scalar> v, w;
  for (int i = 0; i < n; ++i) {
    v.push_back(rng.log_uniform(1e-3, 1e3, ctx));
    w.push_back(rng.log_uniform(1e-2, 1e2, ctx));
  }
  return WeightedTuple::of(std::move(v), std::move(w));
}

TEST(TupleValidation, RejectsBadInput) {
  PrecisionContext ctx = ctx128();
  EXPECT_THROW(WeightedTuple::of({}, {}), EmptyTupleError);
  EXPECT_THROW(WeightedTuple::of(vals({1, 2}, ctx), vals({1}, ctx)), BadIndexError);
  EXPECT_THROW(tuple({1, 0}, {1, 1}, ctx), NonPositiveEntryError);
  EXPECT_THROW(tuple({1, -3}, {1, 1}, ctx), NonPositiveEntryError);
  EXPECT_THROW(tuple({1, 2}, {1, 0}, ctx), NonPositiveEntryError);
  EXPECT_THROW(tuple({1, 2}, {-1, 1}, ctx), NonPositiveEntryError);

  WeightedTuple t = tuple({1, 2, 3}, {1, 1, 1}, ctx);
  EXPECT_THROW(t.prefix(0), BadIndexError);
  EXPECT_THROW(t.prefix(4), BadIndexError);
  EXPECT_EQ(t.prefix(2).size(), 2u);
}

// Oracle: hand-written sum. A((2,3,4); equal) = 3 exactly.
TEST(ArithmeticMean, MatchesHandSum) {
  PrecisionContext ctx = ctx128();
  WeightedTuple t = WeightedTuple::equal_weights(vals({2, 3, 4}, ctx), ctx.precision_bits);
  EXPECT_TRUE(arithmetic_mean(t, ctx) == ctx.make_int(3));

  // Weighted: (1*2 + 3*6) / 4 = 5.
  WeightedTuple u = tuple({2, 6}, {1, 3}, ctx);
  EXPECT_TRUE(arithmetic_mean(u, ctx) == ctx.make_int(5));
}

// Oracle: cubing. G((2,3,4)) must satisfy G^3 = 24 to working accuracy.
TEST(GeometricMean, MatchesProductOracle) {
  PrecisionContext ctx = ctx128();
  WeightedTuple t = WeightedTuple::equal_weights(vals({2, 3, 4}, ctx), ctx.precision_bits);
  Scalar g = geometric_mean(t, ctx);
  EXPECT_LT(rel_err(g * g * g, ctx.make_int(24)), 1e-35);

  // Weighted: G((4,9);(1,1)) = 6 (squares to 36).
  WeightedTuple u = tuple({4, 9}, {1, 1}, ctx);
  EXPECT_LT(rel_err(geometric_mean(u, ctx), ctx.make_int(6)), 1e-35);
}

// Oracle: explicit reciprocal sum. H((2,3,6); equal) = 3 / (1/2+1/3+1/6) = 3.
TEST(HarmonicMean, MatchesHandFormula) {
  PrecisionContext ctx = ctx128();
  WeightedTuple t = WeightedTuple::equal_weights(vals({2, 3, 6}, ctx), ctx.precision_bits);
  EXPECT_LT(rel_err(harmonic_mean(t, ctx), ctx.make_int(3)), 1e-35);
}

// Oracle: explicit square sum. Q((4,9);(1,1))^2 = (16+81)/2 = 48.5.
TEST(QuadraticMean, MatchesHandFormula) {
  PrecisionContext ctx = ctx128();
  WeightedTuple t = tuple({4, 9}, {1, 1}, ctx);
  Scalar q = quadratic_mean(t, ctx);
  EXPECT_LT(rel_err(q * q, ctx.make(48.5)), 1e-35);
  Scalar p = power_mean(t, ExtendedReal(ctx.make_int(2)), ctx);
  EXPECT_LT(rel_err(p, q), 1e-35);
}

TEST(PowerMean, SpecialOrdersAgreeWithNamedMeans) {
  PrecisionContext ctx = ctx128();
  Rng rng(314159);
  for (int it = 0; it < 50; ++it) {
    WeightedTuple t = random_tuple(rng, rng.int_in(1, 6), ctx);
    EXPECT_LT(rel_err(power_mean(t, ExtendedReal(ctx.make_int(1)), ctx), arithmetic_mean(t, ctx)),
              1e-30);
    EXPECT_LT(rel_err(power_mean(t, ExtendedReal(ctx.make_int(0)), ctx), geometric_mean(t, ctx)),
              1e-30);
    EXPECT_LT(rel_err(power_mean(t, ExtendedReal(ctx.make_int(-1)), ctx), harmonic_mean(t, ctx)),
              1e-30);
    EXPECT_LT(rel_err(power_mean(t, ExtendedReal(ctx.make_int(2)), ctx), quadratic_mean(t, ctx)),
              1e-30);
    // Infinite orders are exactly the extreme values.
    Scalar mx = t.values[0], mn = t.values[0];
    for (const Scalar& v : t.values) {
      mx = max_scalar(mx, v);
      mn = min_scalar(mn, v);
    }
    EXPECT_TRUE(power_mean(t, ExtendedReal::pos_inf(), ctx) == mx);
    EXPECT_TRUE(power_mean(t, ExtendedReal::neg_inf(), ctx) == mn);
  }
}

// Property: min <= M^[r] <= max, with equality only for constant tuples.
TEST(PowerMean, BoundedByExtremes) {
  PrecisionContext ctx = ctx128();
  Rng rng(271828);
  for (int it = 0; it < 100; ++it) {
    WeightedTuple t = random_tuple(rng, rng.int_in(2, 6), ctx);
    Scalar r = rng.uniform(-20, 20, ctx);
    Scalar m = power_mean(t, ExtendedReal(r), ctx);
    Scalar mx = power_mean(t, ExtendedReal::pos_inf(), ctx);
    Scalar mn = power_mean(t, ExtendedReal::neg_inf(), ctx);
    EXPECT_TRUE(m >= mn && m <= mx) << "r=" << r.compact();
  }
}

// Property: r < s implies M^[r] <= M^[s] (allowing the representation band).
TEST(PowerMean, MonotoneInOrder) {
  PrecisionContext ctx = ctx128();
  Rng rng(161803);
  Scalar slack = ctx.make(1e-30);
  for (int it = 0; it < 100; ++it) {
    WeightedTuple t = random_tuple(rng, rng.int_in(2, 6), ctx);
    Scalar r = rng.uniform(-10, 10, ctx);
    Scalar s = r + rng.log_uniform(1e-2, 10, ctx);
    Scalar mr = power_mean(t, ExtendedReal(r), ctx);
    Scalar ms = power_mean(t, ExtendedReal(s), ctx);
    EXPECT_TRUE(mr <= ms + slack * ms) << "r=" << r.compact() << " s=" << s.compact();
  }
}

// Property: M^[s](a;w) = A(a^s;w)^(1/s) for finite nonzero s.
TEST(PowerMean, AgreesWithMeanOfPowers) {
  PrecisionContext ctx = ctx128();
  Rng rng(577215);
  for (int it = 0; it < 100; ++it) {
    WeightedTuple t = random_tuple(rng, rng.int_in(1, 6), ctx);
    Scalar s = rng.symmetric(8.0, ctx);
    if (abs_scalar(s).to_double() < 1e-3) continue;
    std::vector<Scalar> powered;
    for (const Scalar& v : t.values) powered.push_back(pow_scalar(v, s));
    WeightedTuple ts = WeightedTuple::of(powered, t.weights);
    Scalar lhs = power_mean(t, ExtendedReal(s), ctx);
    Scalar rhs = pow_scalar(arithmetic_mean(ts, ctx), ctx.make_int(1) / s);
    EXPECT_LT(rel_err(lhs, rhs), 1e-30);
  }
}

// Property: homogeneity M(c*a; w) = c * M(a; w), and weight-scale invariance
// M(a; c*w) = M(a; w).
TEST(PowerMean, HomogeneityAndWeightScaling) {
  PrecisionContext ctx = ctx128();
  Rng rng(141421);
  for (int it = 0; it < 60; ++it) {
    WeightedTuple t = random_tuple(rng, rng.int_in(2, 5), ctx);
    Scalar c = rng.log_uniform(1e-2, 1e2, ctx);
    Scalar r = rng.uniform(-6, 6, ctx);

    std::vector<Scalar> sv, sw;
    for (const Scalar& v : t.values) sv.push_back(c * v);
    for (const Scalar& w : t.weights) sw.push_back(c * w);

    WeightedTuple scaled_vals = WeightedTuple::of(sv, t.weights);
    WeightedTuple scaled_wts = WeightedTuple::of(t.values, sw);

    Scalar m = power_mean(t, ExtendedReal(r), ctx);
    EXPECT_LT(rel_err(power_mean(scaled_vals, ExtendedReal(r), ctx), c * m), 1e-30);
    EXPECT_LT(rel_err(power_mean(scaled_wts, ExtendedReal(r), ctx), m), 1e-30);
  }
}

TEST(PowerMean, ConstantTupleFixedPoint) {
  PrecisionContext ctx = ctx128();
  WeightedTuple t = tuple({7, 7, 7}, {1, 2, 5}, ctx);
  for (double r : {-5.0, -1.0, 0.0, 0.5, 3.0}) {
    EXPECT_LT(rel_err(power_mean(t, ExtendedReal(ctx.make(r)), ctx), ctx.make_int(7)), 1e-35);
  }
  EXPECT_LT(rel_err(arithmetic_mean(t, ctx) - geometric_mean(t, ctx), ctx.make_int(0)), 1e-35);
}

// The scaled arithmetic-geometric gap W_k (A_k - G_k) is nondecreasing in k.
TEST(RadoGap, PrefixChainIsMonotone) {
  PrecisionContext ctx = ctx128();
  Rng rng(662607);
  for (int it = 0; it < 100; ++it) {
    WeightedTuple t = random_tuple(rng, rng.int_in(2, 8), ctx);
    Scalar prev = rado_gap(t, 1, ctx);
    EXPECT_LT(abs_scalar(prev).to_double(), 1e-30);  // one term: A = G
    for (std::size_t k = 2; k <= t.size(); ++k) {
      Scalar cur = rado_gap(t, k, ctx);
      Scalar slack = ctx.make(1e-30) * max_scalar(abs_scalar(cur), ctx.make_int(1));
      EXPECT_TRUE(cur >= prev - slack) << "k=" << k;
      prev = cur;
    }
  }
  EXPECT_THROW(rado_gap(tuple({1, 2}, {1, 1}, ctx), 0, ctx), BadIndexError);
  EXPECT_THROW(rado_gap(tuple({1, 2}, {1, 1}, ctx), 3, ctx), BadIndexError);
}

// (A_k/G_k)^(W_k) is nondecreasing in k; the inverse-exponent convention is
// exercised (and falsified) elsewhere, here we just check it evaluates.
TEST(PopoviciuRatio, PrefixChainIsMonotoneUnderWkConvention) {
  PrecisionContext ctx = ctx128();
  Rng rng(173205);
  for (int it = 0; it < 100; ++it) {
    WeightedTuple t = random_tuple(rng, rng.int_in(2, 8), ctx);
    Scalar prev = popoviciu_ratio(t, 1, PopoviciuConvention::ExponentWk, ctx);
    EXPECT_LT(rel_err(prev, Scalar::of_int(1, ctx.precision_bits)), 1e-30);
    for (std::size_t k = 2; k <= t.size(); ++k) {
      Scalar cur = popoviciu_ratio(t, k, PopoviciuConvention::ExponentWk, ctx);
      Scalar slack = ctx.make(1e-30) * cur;
      EXPECT_TRUE(cur >= prev - slack) << "k=" << k;
      prev = cur;
    }
  }
  WeightedTuple t = tuple({1, 4}, {1, 1}, ctx);
  Scalar inv = popoviciu_ratio(t, 2, PopoviciuConvention::ExponentInvWk, ctx);
  // (A/G)^(1/2) with A = 2.5, G = 2: sqrt(1.25).
  EXPECT_LT(rel_err(inv * inv, ctx.make(1.25)), 1e-30);
}

}  // namespace
}  // namespace ineq
