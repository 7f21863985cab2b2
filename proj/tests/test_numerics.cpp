#include "ineq/numerics.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace ineq {
namespace {

PrecisionContext ctx128() { return PrecisionContext(128, 1e-10, 1.0); }

// Relative distance |a-b| / max(|b|, 1), as a double, for loose assertions.
double rel_err(const Scalar& a, const Scalar& b) {
  Scalar d = abs_scalar(a - b);
  Scalar s = max_scalar(abs_scalar(b), Scalar::of_int(1, b.precision()));
  return (d / s).to_double();
}

TEST(Scalar, ConstructParseAndRender) {
  PrecisionContext ctx = ctx128();
  Scalar a = ctx.parse("1.5");
  EXPECT_EQ(a.precision(), 128);
  EXPECT_DOUBLE_EQ(a.to_double(), 1.5);
  EXPECT_EQ(a.compact(), "1.5");

  Scalar b = ctx.parse("-2.25e3");
  EXPECT_DOUBLE_EQ(b.to_double(), -2250.0);

  EXPECT_THROW(Scalar::parse("abc", 128), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("1.5x", 128), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("", 128), std::invalid_argument);

  // Deterministic scientific rendering.
  EXPECT_EQ(ctx.make_int(3).decimal(5), "3.0000e+00");
  EXPECT_EQ((ctx.make_int(1) / ctx.make_int(4)).decimal(5), "2.5000e-01");
  // Negative zero renders like zero.
  Scalar z = ctx.make(0.0) * ctx.make(-1.0);
  EXPECT_EQ(z.decimal(5), "0.0000e+00");
}

TEST(Scalar, ArithmeticPropagatesLargerPrecision) {
  Scalar a = Scalar::of_int(1, 64);
  Scalar b = Scalar::of_int(3, 256);
  EXPECT_EQ((a + b).precision(), 256);
  EXPECT_EQ((a / b).precision(), 256);
}

TEST(Scalar, ComparisonsRejectNan) {
  Scalar nan(128);  // default-initialized mpfr value is nan
  Scalar one = Scalar::of_int(1, 128);
  EXPECT_TRUE(nan.is_nan());
  EXPECT_THROW((void)(nan < one), OverflowError);
  EXPECT_THROW((void)(nan == one), OverflowError);
  EXPECT_THROW(nan.sgn(), OverflowError);
}

// Oracle: repeated multiplication. 2^10 accumulated by ten exact doublings
// must agree with pow_scalar to the last bit (both are exact here).
TEST(Pow, IntegerExponentMatchesRepeatedMultiplication) {
  PrecisionContext ctx = ctx128();
  Scalar two = ctx.make_int(2);
  Scalar acc = ctx.make_int(1);
  for (int i = 0; i < 10; ++i) acc = acc * two;
  Scalar p = pow_scalar(two, ctx.make_int(10));
  EXPECT_TRUE(p == acc);
  EXPECT_TRUE(p == ctx.make_int(1024));
}

// Oracle: squaring. pow(9, 1/2) squared must reproduce 9 to working accuracy,
// and the value itself must be 3 to within one ulp.
TEST(Pow, SquareRootByHalfExponent) {
  PrecisionContext ctx = ctx128();
  Scalar r = pow_scalar(ctx.make_int(9), ctx.make(0.5));
  EXPECT_LT(rel_err(r * r, ctx.make_int(9)), 1e-37);
  EXPECT_LT(rel_err(r, ctx.make_int(3)), 1e-37);
}

TEST(Pow, ZeroExponentGivesOne) {
  PrecisionContext ctx = ctx128();
  for (double b : {1e-8, 0.5, 1.0, 3.25, 1e12}) {
    EXPECT_TRUE(pow_scalar(ctx.make(b), ctx.make_int(0)) == ctx.make_int(1));
  }
}

TEST(Pow, DomainErrors) {
  PrecisionContext ctx = ctx128();
  EXPECT_THROW(pow_scalar(ctx.make_int(-2), ctx.make(0.5)), NonPositiveBaseError);
  EXPECT_THROW(pow_scalar(ctx.make_int(-2), ctx.make_int(3)), NonPositiveBaseError);
  EXPECT_THROW(pow_scalar(ctx.make_int(0), ctx.make_int(-1)), NonPositiveBaseError);
  EXPECT_THROW(pow_scalar(ctx.make_int(0), ctx.make_int(0)), NonPositiveBaseError);
  // 0^e with e > 0 is fine and equals 0.
  EXPECT_TRUE(pow_scalar(ctx.make_int(0), ctx.make(2.5)).is_zero());
  // Enormous results overflow the exponent range and must throw, not return inf.
  EXPECT_THROW(pow_scalar(ctx.make(1e300), ctx.make(1e300)), OverflowError);
}

TEST(Pow, RelativeErrorWithinBudget) {
  // Cross-check against exp(e log b) computed at much higher precision.
  PrecisionContext lo(96, 1e-10, 1.0);
  PrecisionContext hi(512, 1e-10, 1.0);
  Rng rng(20240817);
  for (int i = 0; i < 200; ++i) {
    Scalar b = rng.log_uniform(1e-6, 1e6, lo);
    Scalar e = rng.uniform(-30.0, 30.0, lo);
    Scalar got = pow_scalar(b, e);
    Scalar b_hi = Scalar::parse(b.decimal(60), hi.precision_bits);
    Scalar e_hi = Scalar::parse(e.decimal(60), hi.precision_bits);
    Scalar ref = exp_scalar(e_hi * log_scalar(b_hi));
    // Budget: 2^(-96+4) relative.
    EXPECT_LT(rel_err(got, ref) / std::ldexp(1.0, -92), 1.0)
        << "b=" << b.compact() << " e=" << e.compact();
  }
}

TEST(ClassifySign, BandSeparatesZeroFromSign) {
  PrecisionContext ctx(128, 1e-30, 1.0);
  Scalar one = ctx.make_int(1);
  EXPECT_EQ(classify_sign(ctx.make(1e-40), one, ctx), Sign::Zero);
  EXPECT_EQ(classify_sign(ctx.make(-1e-40), one, ctx), Sign::Zero);
  EXPECT_EQ(classify_sign(ctx.make(1e-20), one, ctx), Sign::Positive);
  EXPECT_EQ(classify_sign(ctx.make(-1e-20), one, ctx), Sign::Negative);
  // The band scales with `scale` once it exceeds the floor.
  EXPECT_EQ(classify_sign(ctx.make(1e-20), ctx.make(1e15), ctx), Sign::Zero);
  // ... and is pinned by abs_floor for tiny scales.
  EXPECT_EQ(classify_sign(ctx.make(1e-20), ctx.make(1e-25), ctx), Sign::Positive);
}

TEST(ClassifySign, ApproxEqualFollowsBand) {
  PrecisionContext ctx = ctx128();
  EXPECT_TRUE(approx_equal(ctx.make_int(1), ctx.make_int(1), ctx));
  EXPECT_TRUE(approx_equal(ctx.make(1.0), ctx.make(1.0 + 1e-14), ctx));
  EXPECT_FALSE(approx_equal(ctx.make(1.0), ctx.make(1.0 + 1e-8), ctx));
}

TEST(PrecisionContext, ValidationRules) {
  EXPECT_NO_THROW(PrecisionContext(64, 1e-10, 1.0));
  EXPECT_NO_THROW(PrecisionContext(128, 1e-10, 1.0));
  EXPECT_THROW(PrecisionContext(32, 1e-10, 1.0), std::invalid_argument);
  // 2^(-128+8) ~ 7.5e-37, so 1e-40 is too tight at 128 bits.
  EXPECT_THROW(PrecisionContext(128, 1e-40, 1.0), std::invalid_argument);
  EXPECT_NO_THROW(PrecisionContext(256, 1e-40, 1.0));
  EXPECT_THROW(PrecisionContext(128, 1e-10, 0.0), std::invalid_argument);
  EXPECT_THROW(PrecisionContext(128, 1e-10, -1.0), std::invalid_argument);
}

TEST(ExtendedRealTest, OrderAndParse) {
  ExtendedReal a = ExtendedReal::parse("-inf", 128);
  ExtendedReal b = ExtendedReal::parse("-2.5", 128);
  ExtendedReal c = ExtendedReal::parse("3", 128);
  ExtendedReal d = ExtendedReal::parse("inf", 128);
  EXPECT_LT(ExtendedReal::compare(a, b), 0);
  EXPECT_LT(ExtendedReal::compare(b, c), 0);
  EXPECT_LT(ExtendedReal::compare(c, d), 0);
  EXPECT_EQ(ExtendedReal::compare(d, ExtendedReal::pos_inf()), 0);
  EXPECT_EQ(a.str(), "-inf");
  EXPECT_EQ(c.str(), "3");
  EXPECT_FALSE(a.finite());
  EXPECT_TRUE(b.finite());
  EXPECT_DOUBLE_EQ(b.value().to_double(), -2.5);
}

TEST(RngTest, DeterministicStreams) {
  Rng a(987654321), b(987654321);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());

  PrecisionContext ctx = ctx128();
  Rng c(11), d(11);
  for (int i = 0; i < 50; ++i) {
    EXPECT_TRUE(c.unit(ctx) == d.unit(ctx));
    EXPECT_TRUE(c.log_uniform(1e-3, 1e3, ctx) == d.log_uniform(1e-3, 1e3, ctx));
  }
}

TEST(RngTest, RangesRespected) {
  PrecisionContext ctx = ctx128();
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    Scalar u = rng.unit(ctx);
    EXPECT_TRUE(u >= ctx.make_int(0) && u < ctx.make_int(1));
    Scalar g = rng.log_uniform(1e-3, 1e3, ctx);
    EXPECT_TRUE(g >= ctx.make(1e-3) && g <= ctx.make(1e3));
    int k = rng.int_in(2, 8);
    EXPECT_GE(k, 2);
    EXPECT_LE(k, 8);
  }
}

TEST(RngTest, SeedDerivationSeparatesStreams) {
  const std::uint64_t master = 42;
  EXPECT_NE(derive_seed(master, "alpha", 0), derive_seed(master, "alpha", 1));
  EXPECT_NE(derive_seed(master, "alpha", 0), derive_seed(master, "beta", 0));
  EXPECT_EQ(derive_seed(master, "alpha", 7), derive_seed(master, "alpha", 7));
  EXPECT_NE(derive_seed(1, "alpha", 0), derive_seed(2, "alpha", 0));
}

}  // namespace
}  // namespace ineq
