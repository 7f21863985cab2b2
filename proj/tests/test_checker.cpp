#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ineq/checker.hpp"
#include "json.hpp"

namespace ineq {
namespace {

PrecisionContext default_ctx() { return PrecisionContext(); }

std::string render(const EvalPoint& pt) {
  std::string out;
  auto add = [&](const std::vector<Scalar>& v) {
    for (const Scalar& s : v) out += s.decimal() + ";";
  };
  add(pt.scalars);
  add(pt.values);
  add(pt.values2);
  add(pt.weights);
  return out;
}

TEST(SamplePointTest, StaysInsideValidityWithBoundaryDraws) {
  PrecisionContext ctx = default_ctx();
  Rng rng(2024);
  for (const char* name : {"GA2E", "GAN", "RADO", "HOLDER", "BERNOULLI_B1"}) {
    InequalityDescriptor d = lookup(name, sample_entry_params(name, Side::Primary, rng));
    for (int i = 0; i < 200; ++i) {
      EvalPoint pt = sample_point(d, rng, ctx, 0.5);
      EXPECT_TRUE(d.validity(pt, ctx)) << name;
    }
  }
}

TEST(SamplePointTest, DeterministicGivenSeed) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("RADO", {{"n", 4L}});
  Rng r1(99), r2(99);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(render(sample_point(d, r1, ctx, 0.3)), render(sample_point(d, r2, ctx, 0.3)));
  }
}

TEST(SamplePointTest, BoundaryDrawsLandInTheToleranceBand) {
  // A relative 1e-6 nudge off the equality set moves the two-value mean gap
  // by a second-order amount, far inside the classifier band.
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("GA2E", {});
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    EvalPoint pt = sample_point(d, rng, ctx, 1.0);
    EXPECT_EQ(classify(d, pt, ctx).verdict, Verdict::Equality);
  }
}

TEST(SamplePointTest, MissingSamplerThrows) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d;  // no sampler bound
  Rng rng(1);
  EXPECT_THROW(sample_point(d, rng, ctx, 0.0), SamplerMissingError);
}

TEST(RunInequalityCheckTest, CountsAreExhaustiveAndClean) {
  SuiteConfig config;
  config.samples_per_entry = 500;
  EntryJob job{"GAN", Side::Primary, {}};
  EntryReport rep = run_inequality_check(job, config);
  EXPECT_EQ(rep.counts.total(), 500u);
  EXPECT_EQ(rep.counts.violated, 0u);
  EXPECT_TRUE(rep.counterexamples.empty());
  EXPECT_GT(rep.counts.strict, 0u);
  EXPECT_GT(rep.counts.equality, 0u);  // boundary draws classify as equality
}

TEST(RunInequalityCheckTest, PinnedParametersAreEchoed) {
  SuiteConfig config;
  config.samples_per_entry = 100;
  EntryJob job{"RADO", Side::Primary, {{"n", 5L}}};
  EntryReport rep = run_inequality_check(job, config);
  EXPECT_EQ(rep.name, "RADO");
  EXPECT_EQ(param_int(rep.params, "n"), 5);
  EXPECT_EQ(rep.counts.total(), 100u);
  EXPECT_EQ(rep.counts.violated, 0u);
}

TEST(RunInequalityCheckTest, ReportsAreSeedDeterministic) {
  SuiteConfig config;
  config.samples_per_entry = 200;
  EntryJob job{"BERNOULLI_FULL", Side::Primary, {}};
  EntryReport a = run_inequality_check(job, config);
  EntryReport b = run_inequality_check(job, config);
  EXPECT_EQ(a.counts.strict, b.counts.strict);
  EXPECT_EQ(a.counts.equality, b.counts.equality);
  EXPECT_EQ(a.counts.outside, b.counts.outside);
  EXPECT_EQ(a.counts.overflow, b.counts.overflow);
}

TEST(FlippedDirectionTest, StrictPointsViolateTheFlippedStatement) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("HOLDER", {{"n", 3L}, {"p", 2.0}});
  InequalityDescriptor rev = flipped_direction(d);
  EXPECT_NE(rev.direction, d.direction);
  Rng rng(5);
  int strict_seen = 0;
  for (int i = 0; i < 100; ++i) {
    EvalPoint pt = d.sample(rng, ctx);
    PointClassification cls = classify(d, pt, ctx);
    if (cls.verdict != Verdict::StrictlyHolds) continue;
    ++strict_seen;
    EXPECT_EQ(classify(rev, pt, ctx).verdict, Verdict::Violated);
  }
  EXPECT_GT(strict_seen, 50);
  // Equality points are direction-blind.
  EvalPoint eq = d.sample_equality(rng, ctx);
  EXPECT_EQ(classify(rev, eq, ctx).verdict, Verdict::Equality);
}

TEST(SearchViolationTest, FindsTheFlippedStatementImmediately) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor rev = flipped_direction(lookup("HOLDER", {{"n", 3L}, {"p", 2.0}}));
  auto hit = search_violation(rev, 1000, 7, ctx);
  ASSERT_TRUE(hit.has_value());
  EXPECT_LT(hit->second.sgn(), 0);
  // The returned verdict survives a much higher working precision.
  PrecisionContext sharp = ctx.with_precision(512);
  EXPECT_EQ(classify(rev, hit->first, sharp).verdict, Verdict::Violated);
}

TEST(SearchViolationTest, HonestStatementYieldsNothing) {
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("GAN", {{"n", 4L}});
  EXPECT_FALSE(search_violation(d, 10000, 7, ctx).has_value());
}

TEST(SearchViolationTest, DescentCatchesANarrowCorruption) {
  // Shift one side of a sound statement by a constant: points near the
  // equality set now violate it, and the margin descent should steer there
  // even though most random draws still satisfy the corrupted relation.
  PrecisionContext ctx = default_ctx();
  InequalityDescriptor d = lookup("GAN", {{"n", 3L}});
  auto original = d.formula;
  d.formula = [original, &ctx](const EvalPoint& pt, const PrecisionContext& c) {
    LhsRhs s = original(pt, c);
    s.lhs = s.lhs + c.make(0.05) * s.rhs;  // lhs now exceeds rhs near equality
    return s;
  };
  auto hit = search_violation(d, 20000, 11, ctx);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(classify(d, hit->first, ctx.with_precision(512)).verdict, Verdict::Violated);
}

TEST(PowerMeanLimitTest, HandTupleApproachesItsMax) {
  PrecisionContext ctx = default_ctx();
  WeightedTuple t = WeightedTuple::of({ctx.make_int(4), ctx.make_int(9)},
                                      {ctx.make_int(1), ctx.make_int(1)});
  LimitReport rep = check_power_mean_limits(t, ctx.make(1e-4), ctx);
  EXPECT_TRUE(rep.passed) << rep.detail;
  // The top-exponent gap for an equal-weight pair is (1 - 2^(-1/r)) ~ ln2/r.
  EXPECT_NEAR(rep.worst_rel_gap, std::log(2.0) / 1e4, 5e-7);
}

TEST(PowerMeanLimitTest, ConstantTupleIsExactAtEveryExponent) {
  PrecisionContext ctx = default_ctx();
  WeightedTuple t = WeightedTuple::of({ctx.make_int(5), ctx.make_int(5), ctx.make_int(5)},
                                      {ctx.make_int(2), ctx.make_int(1), ctx.make_int(3)});
  LimitReport rep = check_power_mean_limits(t, ctx.make(1e-12), ctx);
  EXPECT_TRUE(rep.passed) << rep.detail;
  EXPECT_LT(rep.worst_rel_gap, 1e-25);
}

TEST(PowerMeanLimitTest, StarvedMaxWeightFailsHonestly) {
  // When the largest value carries almost no weight the r = 1e4 endpoint is
  // genuinely farther than 1e-4 from the max; the check must say so.
  PrecisionContext ctx = default_ctx();
  WeightedTuple t = WeightedTuple::of({ctx.make_int(1), ctx.make_int(100)},
                                      {ctx.make_int(1), ctx.make(1e-6)});
  LimitReport rep = check_power_mean_limits(t, ctx.make(1e-4), ctx);
  EXPECT_FALSE(rep.passed);
  EXPECT_NE(rep.detail.find("top exponent"), std::string::npos) << rep.detail;
  EXPECT_GT(rep.worst_rel_gap, 1e-4);
}

std::vector<Scalar> dyadic_grid(long a, const PrecisionContext& ctx) {
  std::vector<Scalar> grid;
  for (int k = 0; k <= 20; ++k) {
    const Scalar step = ctx.make(std::ldexp(1.0, k));
    grid.push_back(ctx.make_int(std::min(0L, -a)) - step);
    grid.push_back(ctx.make_int(std::max(0L, -a)) + step);
  }
  return grid;
}

TEST(CurveMonotonicityTest, BothFamiliesPassOnDyadicGrids) {
  PrecisionContext ctx = default_ctx();
  for (long a : {-2L, -1L, 1L, 2L}) {
    std::vector<Scalar> grid = dyadic_grid(a, ctx);
    MonotonicityReport f = check_function_monotonicity(CurveFamily::F, ctx.make_int(a), grid, ctx);
    EXPECT_TRUE(f.passed) << f.subject << ": " << f.detail;
    MonotonicityReport g = check_function_monotonicity(CurveFamily::G, ctx.make_int(a), grid, ctx);
    EXPECT_TRUE(g.passed) << g.subject << ": " << g.detail;
  }
}

TEST(CurveMonotonicityTest, ZeroParameterDegeneratesToConstantOne) {
  PrecisionContext ctx = default_ctx();
  MonotonicityReport rep =
      check_function_monotonicity(CurveFamily::G, ctx.make_int(0), dyadic_grid(0, ctx), ctx);
  EXPECT_TRUE(rep.passed) << rep.detail;
}

TEST(CurveMonotonicityTest, PointsInTheExcludedStripThrow) {
  PrecisionContext ctx = default_ctx();
  // For a = -1 the domain is (-inf, 0) union (1, inf); 0.5 sits in the gap.
  std::vector<Scalar> bad = {ctx.make(0.5)};
  EXPECT_THROW(
      check_function_monotonicity(CurveFamily::F, ctx.make_int(-1), bad, ctx),
      GridOutsideDomainError);
  // Interval endpoints are excluded too.
  std::vector<Scalar> edge = {ctx.make_int(1)};
  EXPECT_THROW(
      check_function_monotonicity(CurveFamily::F, ctx.make_int(-1), edge, ctx),
      GridOutsideDomainError);
}

SuiteConfig small_config() {
  SuiteConfig config;
  config.entries = {EntryJob{"GA2E", Side::Primary, {}},
                    EntryJob{"GAN", Side::Primary, {}},
                    EntryJob{"BERNOULLI_B1", Side::Complement, {}}};
  config.samples_per_entry = 150;
  return config;
}

TEST(RunSuiteTest, SmallConfigIsGreen) {
  SuiteReport rep = run_suite(small_config());
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.entries.size(), 3u);
  EXPECT_EQ(rep.witnesses.size(), list_witnesses().size());
  EXPECT_EQ(rep.limits.size(), 20u);
  // Ten curve rows plus the two prefix-chain rows.
  EXPECT_EQ(rep.monotonicity.size(), 12u);
}

TEST(RunSuiteTest, DefaultConfigSweepsTheWholeCatalog) {
  SuiteConfig config;
  config.samples_per_entry = 60;
  SuiteReport rep = run_suite(config);
  std::size_t expected = 0;
  for (const CatalogEntryInfo& info : list_catalog()) expected += info.has_complement ? 2 : 1;
  EXPECT_EQ(rep.entries.size(), expected);
  EXPECT_TRUE(rep.passed());
}

TEST(RunSuiteTest, ReportsAreByteIdenticalAcrossRuns) {
  SuiteReport a = run_suite(small_config());
  SuiteReport b = run_suite(small_config());
  a.wall_time_sec = 0.0;
  b.wall_time_sec = 0.0;
  EXPECT_EQ(suite_report_json(a), suite_report_json(b));
}

TEST(ReportJsonTest, SuiteDocumentHasTheExpectedShape) {
  SuiteReport rep = run_suite(small_config());
  nlohmann::json doc = nlohmann::json::parse(suite_report_json(rep));
  EXPECT_EQ(doc.at("version"), "1");
  EXPECT_EQ(doc.at("seed"), 42);
  EXPECT_EQ(doc.at("precision_bits"), 128);
  EXPECT_EQ(doc.at("entries").size(), 3u);
  EXPECT_EQ(doc.at("entries")[0].at("name"), "GA2E");
  EXPECT_EQ(doc.at("entries")[0].at("side"), "primary");
  EXPECT_EQ(doc.at("entries")[2].at("side"), "complement");
  for (const auto& e : doc.at("entries")) {
    const auto& counts = e.at("counts");
    std::size_t total = counts.at("strict").get<std::size_t>() +
                        counts.at("equality").get<std::size_t>() +
                        counts.at("violated").get<std::size_t>() +
                        counts.at("outside").get<std::size_t>() +
                        counts.at("overflow").get<std::size_t>();
    EXPECT_EQ(total, 150u);
    EXPECT_TRUE(e.at("counterexamples").is_array());
  }
  EXPECT_TRUE(doc.at("witnesses").is_array());
  EXPECT_TRUE(doc.at("limits").is_array());
  EXPECT_TRUE(doc.at("monotonicity").is_array());
  EXPECT_EQ(doc.at("passed"), true);
  EXPECT_TRUE(doc.at("wall_time").is_number());
}

TEST(ReportJsonTest, WitnessDocumentRoundTripsItsFields) {
  PrecisionContext ctx = default_ctx();
  WitnessReport rep = verify_witness(find_witness("W_REFLECT"), 50, 42, ctx);
  nlohmann::json doc = nlohmann::json::parse(witness_report_json(rep));
  EXPECT_EQ(doc.at("witness"), "W_REFLECT");
  EXPECT_EQ(doc.at("samples"), 50);
  EXPECT_GT(doc.at("checked").get<std::size_t>(), 0u);
  EXPECT_TRUE(doc.at("failures").empty());
}

TEST(ReportJsonTest, FailuresCarryTheirDiagnostics) {
  PrecisionContext ctx = default_ctx();
  TransformationWitness bad = corrupted_witness(find_witness("W_REFLECT"));
  WitnessReport rep = verify_witness(bad, 60, 42, ctx);
  ASSERT_FALSE(rep.failures.empty());
  nlohmann::json doc = nlohmann::json::parse(witness_report_json(rep));
  const auto& f = doc.at("failures")[0];
  EXPECT_FALSE(f.at("direction").get<std::string>().empty());
  EXPECT_FALSE(f.at("source_pt").get<std::string>().empty());
  EXPECT_TRUE(f.at("sample_seed").is_number());
}

}  // namespace
}  // namespace ineq
