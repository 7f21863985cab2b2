#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ineq/catalog.hpp"

namespace ineq {
namespace {

PrecisionContext default_ctx() { return PrecisionContext(); }

// Every descriptor reachable from the registry: primary side for each entry,
// plus the complement side where one is registered. Parameters are drawn by
// the entry's own suite sampler so parameterized entries vary across calls.
std::vector<InequalityDescriptor> sampled_descriptors(Rng& rng) {
  std::vector<InequalityDescriptor> out;
  for (const CatalogEntryInfo& info : list_catalog()) {
    out.push_back(lookup(info.name, sample_entry_params(info.name, Side::Primary, rng)));
    if (info.has_complement) {
      InequalityDescriptor d =
          lookup(info.name, sample_entry_params(info.name, Side::Complement, rng));
      out.push_back(complementary(d));
    }
  }
  return out;
}

TEST(CatalogTest, Ga2eHandValues) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("GA2E", {});
  EvalPoint pt;
  pt.scalars = {ctx.make_int(4), ctx.make_int(9)};
  PointClassification cls = classify(d, pt, ctx);
  EXPECT_EQ(cls.verdict, Verdict::StrictlyHolds);
  ASSERT_TRUE(cls.lhs.has_value());
  EXPECT_EQ(cls.lhs->to_double(), 6.0);
  EXPECT_EQ(cls.rhs->to_double(), 6.5);
  EXPECT_EQ(cls.margin->to_double(), 0.5);
}

TEST(CatalogTest, Ga2eEqualityPoint) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("GA2E", {});
  EvalPoint pt;
  pt.scalars = {ctx.make_int(7), ctx.make_int(7)};
  EXPECT_EQ(classify(d, pt, ctx).verdict, Verdict::Equality);
}

TEST(CatalogTest, BernoulliB1OutsideValidityFallsToComplement) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("BERNOULLI_B1", {});
  EvalPoint pt;
  pt.scalars = {ctx.make_int(1), ctx.make_int(2)};  // alpha = 2 leaves [0, 1]
  EXPECT_EQ(classify(d, pt, ctx).verdict, Verdict::OutsideValidity);

  SidedClassification full = classify_complete(d, pt, ctx);
  EXPECT_EQ(full.side, Side::Complement);
  // (1+1)^2 = 4 against 1 + 2 = 3 on the reversed direction.
  EXPECT_EQ(full.cls.verdict, Verdict::StrictlyHolds);
  EXPECT_EQ(full.cls.margin->to_double(), 1.0);
}

TEST(CatalogTest, UnknownNameThrows) {
  EXPECT_THROW(lookup("NOPE", {}), UnknownNameError);
  Rng rng(1);
  EXPECT_THROW(sample_entry_params("NOPE", Side::Primary, rng), UnknownNameError);
}

TEST(CatalogTest, BadParamsThrow) {
  EXPECT_THROW(lookup("HOLDER", {{"n", 2L}, {"p", 1.0}}), BadParamsError);
  EXPECT_THROW(lookup("POWERMEAN", {{"n", 3L}, {"r", 2.0}, {"s", 2.0}}), BadParamsError);
  EXPECT_THROW(lookup("LIAPUNOV", {{"r", 2.0}, {"s", 2.0}}), BadParamsError);
  EXPECT_THROW(lookup("BARROW_LEMMA", {{"p", 2L}, {"q", 2L}}), BadParamsError);
  EXPECT_THROW(lookup("GANE", {{"n", 1L}}), BadParamsError);
  EXPECT_THROW(lookup("GANE", {{"m", 4L}}), BadParamsError);     // unknown key
  EXPECT_THROW(lookup("GANE", {{"n", 0.5}}), BadParamsError);    // wrong type
  EXPECT_THROW(lookup("RADON", {{"s", 1.0}}), BadParamsError);
}

TEST(CatalogTest, NoComplementThrows) {
  EXPECT_THROW(complementary(lookup("CAUCHY", {})), NoComplementError);
  EXPECT_THROW(complementary(lookup("GANE", {})), NoComplementError);
  EXPECT_THROW(complementary(lookup("BERNOULLI_B3", {})), NoComplementError);
}

TEST(CatalogTest, ComplementReversesDirectionAndKeepsFormula) {
  PrecisionContext ctx = default_ctx();
  Rng rng(2026);
  for (const CatalogEntryInfo& info : list_catalog()) {
    if (!info.has_complement) continue;
    InequalityDescriptor d =
        lookup(info.name, sample_entry_params(info.name, Side::Primary, rng));
    InequalityDescriptor cd = complementary(d);
    EXPECT_EQ(cd.side, Side::Complement) << info.name;
    Direction reversed =
        d.direction == Direction::LessEq ? Direction::GreaterEq : Direction::LessEq;
    EXPECT_EQ(cd.direction, reversed) << info.name;
    EXPECT_EQ(cd.entry, d.entry);

    // Same underlying formula: both sides evaluate identically wherever both
    // are defined, here checked on a primary sample.
    EvalPoint pt = d.sample(rng, ctx);
    LhsRhs a = d.formula(pt, ctx);
    LhsRhs b = cd.formula(pt, ctx);
    EXPECT_TRUE(approx_equal(a.lhs, b.lhs, ctx)) << info.name;
    EXPECT_TRUE(approx_equal(a.rhs, b.rhs, ctx)) << info.name;
  }
}

TEST(CatalogTest, ComplementIsInvolution) {
  Rng rng(7);
  for (const CatalogEntryInfo& info : list_catalog()) {
    if (!info.has_complement) continue;
    InequalityDescriptor d =
        lookup(info.name, sample_entry_params(info.name, Side::Primary, rng));
    InequalityDescriptor dd = complementary(complementary(d));
    EXPECT_EQ(dd.side, Side::Primary) << info.name;
    EXPECT_EQ(dd.direction, d.direction) << info.name;
  }
}

TEST(CatalogTest, Ga2CompleteComplementEqualityAtConstantPair) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor cd = complementary(lookup("GA2_COMPLETE", {}));
  EvalPoint pt;
  pt.scalars = {ctx.make_int(3), ctx.make_int(3), ctx.make_int(2)};  // alpha = 2 in ~V
  EXPECT_EQ(classify(cd, pt, ctx).verdict, Verdict::Equality);
}

TEST(CatalogTest, BernoulliB1ComplementHoldsReversed) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor cd = complementary(lookup("BERNOULLI_B1", {}));
  EXPECT_EQ(cd.direction, Direction::GreaterEq);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    EvalPoint pt = cd.sample(rng, ctx);
    Verdict v = classify(cd, pt, ctx).verdict;
    EXPECT_TRUE(v == Verdict::StrictlyHolds || v == Verdict::Equality);
  }
}

TEST(CatalogTest, ListContainsRequiredEntriesExactlyOnce) {
  const std::vector<std::string> required = {
      "GA2E",          "GANE",          "PROD1_SUM",     "SUM1_PROD",
      "GA2W",          "YOUNG",         "GAN",           "RADO",
      "POPOVICIU",     "LOG_MIDPOINT_CONCAVE",           "EXP_MIDPOINT_CONVEX",
      "BERNOULLI_B1",  "BERNOULLI_B2",  "BERNOULLI_B3",  "BERNOULLI_B4",
      "BERNOULLI_B5",  "BERNOULLI_FULL", "ORIGINAL_BERNOULLI", "BARROW_LEMMA",
      "NEG_REFLECT",   "POWER_SECANT",  "GA2_COMPLETE",  "RUTHING",
      "JACOBSTHAL",    "BUSH",          "PECARIC",       "POWERMEAN",
      "HOLDER",        "HOLDER_EXT",    "MINKOWSKI",     "MINKOWSKI_EXT",
      "HOLDER_W",      "MINKOWSKI_W",   "HOLDER_EXT_W",  "CAUCHY",
      "TRIANGLE",      "RADON",         "LIAPUNOV"};
  std::vector<CatalogEntryInfo> listing = list_catalog();
  std::set<std::string> names;
  for (const CatalogEntryInfo& info : listing) {
    EXPECT_TRUE(names.insert(info.name).second) << "duplicate entry " << info.name;
    EXPECT_FALSE(info.summary.empty()) << info.name;
    EXPECT_FALSE(info.reference.empty()) << info.name;
    EXPECT_FALSE(info.formula_desc.empty()) << info.name;
  }
  for (const std::string& name : required) {
    EXPECT_TRUE(names.count(name)) << "missing entry " << name;
  }
}

TEST(CatalogTest, ListIsDeterministic) {
  std::vector<CatalogEntryInfo> a = list_catalog();
  std::vector<CatalogEntryInfo> b = list_catalog();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].name, b[i].name);
}

TEST(CatalogTest, EqualityPointsSatisfyValidityAndClassifyEquality) {
  PrecisionContext ctx = default_ctx();
  Rng rng(401);
  for (const InequalityDescriptor& d : sampled_descriptors(rng)) {
    for (int i = 0; i < 60; ++i) {
      EvalPoint pt = d.sample_equality(rng, ctx);
      EXPECT_TRUE(d.validity(pt, ctx)) << d.display_name() << " " << params_str(d.params);
      EXPECT_TRUE(d.equality(pt, ctx)) << d.display_name() << " " << params_str(d.params);
      PointClassification cls = classify(d, pt, ctx);
      EXPECT_EQ(cls.verdict, Verdict::Equality)
          << d.display_name() << " " << params_str(d.params) << " sample " << i
          << " margin " << (cls.margin ? cls.margin->compact() : std::string("n/a"));
    }
  }
}

TEST(CatalogTest, RandomSamplesNeverViolate) {
  PrecisionContext ctx = default_ctx();
  Rng rng(402);
  for (const InequalityDescriptor& d : sampled_descriptors(rng)) {
    for (int i = 0; i < 300; ++i) {
      EvalPoint pt = d.sample(rng, ctx);
      PointClassification cls = classify(d, pt, ctx);
      EXPECT_TRUE(cls.verdict == Verdict::StrictlyHolds || cls.verdict == Verdict::Equality)
          << d.display_name() << " " << params_str(d.params) << " sample " << i
          << " verdict " << verdict_str(cls.verdict);
    }
  }
}

TEST(CatalogTest, SampledPointsMatchDeclaredShape) {
  PrecisionContext ctx = default_ctx();
  Rng rng(403);
  for (const InequalityDescriptor& d : sampled_descriptors(rng)) {
    EvalPoint pt = d.sample(rng, ctx);
    EXPECT_EQ(pt.scalars.size(), d.shape.scalar_names.size()) << d.display_name();
    EXPECT_EQ(pt.values.size(), static_cast<std::size_t>(d.shape.values_count))
        << d.display_name();
    EXPECT_EQ(pt.values2.size(), static_cast<std::size_t>(d.shape.values2_count))
        << d.display_name();
    EXPECT_EQ(pt.weights.size(), static_cast<std::size_t>(d.shape.weights_count))
        << d.display_name();
  }
}

TEST(CatalogTest, ShapeMismatchThrows) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("GA2E", {});
  EvalPoint pt;
  pt.scalars = {ctx.make_int(4)};  // arity 1, entry expects 2
  EXPECT_THROW(classify(d, pt, ctx), std::invalid_argument);
}

TEST(CatalogTest, NonFiniteCoordinatesAreOutsideValidity) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("GA2E", {});
  EvalPoint pt;
  pt.scalars = {ctx.make(std::numeric_limits<double>::quiet_NaN()), ctx.make_int(2)};
  EXPECT_EQ(classify(d, pt, ctx).verdict, Verdict::OutsideValidity);
}

TEST(CatalogTest, SampledParamsAlwaysValidate) {
  Rng rng(404);
  for (const CatalogEntryInfo& info : list_catalog()) {
    for (int i = 0; i < 25; ++i) {
      ParamMap p = sample_entry_params(info.name, Side::Primary, rng);
      EXPECT_NO_THROW(lookup(info.name, p)) << info.name << " " << params_str(p);
      if (info.has_complement) {
        ParamMap q = sample_entry_params(info.name, Side::Complement, rng);
        EXPECT_NO_THROW(complementary(lookup(info.name, q))) << info.name;
      }
    }
  }
}

TEST(CatalogTest, OriginalBernoulliSpotValues) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("ORIGINAL_BERNOULLI", {{"n", 3L}});
  EvalPoint pt;
  pt.scalars = {ctx.make_int(2)};  // 27 >= 7
  PointClassification cls = classify(d, pt, ctx);
  EXPECT_EQ(cls.verdict, Verdict::StrictlyHolds);
  EXPECT_EQ(cls.margin->to_double(), 20.0);
  pt.scalars = {ctx.make_int(0)};
  EXPECT_EQ(classify(d, pt, ctx).verdict, Verdict::Equality);
}

TEST(CatalogTest, DefaultParamsAreUsable) {
  PrecisionContext ctx = default_ctx();
  Rng rng(405);
  for (const CatalogEntryInfo& info : list_catalog()) {
    InequalityDescriptor d = lookup(info.name, {});  // defaults fill every slot
    EvalPoint pt = d.sample(rng, ctx);
    PointClassification cls = classify(d, pt, ctx);
    EXPECT_TRUE(cls.verdict == Verdict::StrictlyHolds || cls.verdict == Verdict::Equality)
        << info.name;
  }
}

}  // namespace
}  // namespace ineq
