// Acceptance gate: eleven numbered end-to-end criteria, one PASS/FAIL line
// each on stdout. Tolerances, budgets, and seeds are pinned here on purpose;
// loosening them is a spec change, not a fix.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ineq/checker.hpp"

namespace ineq {
namespace {

void report(int k, bool ok, const std::string& what) {
  std::printf("CRITERION %d: %s - %s\n", k, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  EXPECT_TRUE(ok) << "criterion " << k << ": " << what;
}

PrecisionContext default_ctx() { return PrecisionContext(); }

std::vector<std::pair<std::string, Side>> all_entry_sides() {
  std::vector<std::pair<std::string, Side>> out;
  for (const CatalogEntryInfo& info : list_catalog()) {
    out.emplace_back(info.name, Side::Primary);
    if (info.has_complement) out.emplace_back(info.name, Side::Complement);
  }
  return out;
}

InequalityDescriptor draw_descriptor(const std::string& name, Side side, Rng& rng) {
  InequalityDescriptor d = lookup(name, sample_entry_params(name, side, rng));
  return side == Side::Complement ? complementary(d) : d;
}

TEST(Acceptance, C01CatalogSoundness) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteConfig config;
  config.samples_per_entry = 10000;  // seed 42, 128-bit, boundary 0.1 by default
  std::size_t samples = 0, violated = 0;
  std::string first;
  for (const CatalogEntryInfo& info : list_catalog()) {
    EntryReport rep = run_inequality_check(EntryJob{info.name, Side::Primary, {}}, config);
    samples += rep.counts.total();
    violated += rep.counts.violated;
    if (!rep.passed() && first.empty()) {
      first = " first: " + rep.counterexamples[0].instance + " at " +
              rep.counterexamples[0].point;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "catalog soundness: %zu violations in %zu samples across %zu entries, %.1fs",
                violated, samples, list_catalog().size(), secs);
  report(1, violated == 0 && secs < 300.0, buf + first);
}

TEST(Acceptance, C02EqualitySets) {
  const PrecisionContext ctx = default_ctx();
  std::size_t checked = 0, misses = 0;
  std::string first;
  for (const auto& [name, side] : all_entry_sides()) {
    const std::string stream = name + (side == Side::Complement ? "~" : "") + "/equality";
    for (int i = 0; i < 100; ++i) {
      Rng rng(derive_seed(42, stream, i));
      InequalityDescriptor d = draw_descriptor(name, side, rng);
      EvalPoint pt = d.sample_equality(rng, ctx);
      ++checked;
      if (classify(d, pt, ctx).verdict != Verdict::Equality) {
        ++misses;
        if (first.empty()) first = " first: " + d.instance_key();
      }
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "equality sets: %zu of %zu constructed points in the band",
                checked - misses, checked);
  report(2, misses == 0, buf + first);
}

TEST(Acceptance, C03StrictnessOffTheEqualitySet) {
  // Strictness must be judged against a relative band: several entries live
  // at scales far below the absolute floor, where the default band absorbs
  // any relative-1e-3 perturbation. The floor is kept positive only to guard
  // exactly-zero scales.
  const PrecisionContext ctx = default_ctx();
  PrecisionContext strict_ctx = default_ctx();
  strict_ctx.abs_floor = 1e-200;

  std::size_t violations = 0, starved = 0;
  std::string first;
  for (const auto& [name, side] : all_entry_sides()) {
    const std::string stream = name + (side == Side::Complement ? "~" : "") + "/strict";
    int successes = 0;
    for (int attempt = 0; attempt < 2000 && successes < 100; ++attempt) {
      Rng rng(derive_seed(42, stream, attempt));
      InequalityDescriptor d = draw_descriptor(name, side, rng);
      EvalPoint pt = d.sample_equality(rng, ctx);

      // Relative nudge with magnitude in [0.5e-3, 1e-3] and random sign;
      // exact zeros take it additively.
      const Scalar one = ctx.make_int(1);
      auto nudge = [&]() {
        const Scalar m = ctx.make(0.5e-3) + ctx.make(0.5e-3) * rng.unit(ctx);
        return rng.coin() ? m : -m;
      };
      for (auto* slot : {&pt.scalars, &pt.values, &pt.values2, &pt.weights}) {
        for (Scalar& c : *slot) c = c.is_zero() ? nudge() : c * (one + nudge());
      }
      // Entries whose validity set is a normalization manifold need the
      // perturbed point projected back onto it.
      if (name == "PROD1_SUM") {
        Scalar prod = one;
        for (const Scalar& c : pt.values) prod = prod * c;
        const Scalar fix =
            pow_scalar(prod, ctx.make(-1.0) / ctx.make_int(static_cast<long>(pt.values.size())));
        for (Scalar& c : pt.values) c = c * fix;
      } else if (name == "SUM1_PROD") {
        Scalar sum = ctx.make_int(0);
        for (const Scalar& c : pt.values) sum = sum + c;
        for (Scalar& c : pt.values) c = c / sum;
      }

      if (!d.validity(pt, strict_ctx)) continue;
      if (d.equality(pt, strict_ctx)) continue;  // nudge cancelled out
      Verdict v;
      try {
        v = classify(d, pt, strict_ctx).verdict;
      } catch (const OverflowError&) {
        continue;
      }
      if (v == Verdict::StrictlyHolds) {
        ++successes;
      } else if (v == Verdict::Violated) {
        ++violations;
        if (first.empty()) first = " violated: " + d.instance_key();
      }
      // Equality here means a curvature-degenerate draw; retry.
    }
    if (successes < 100) {
      ++starved;
      if (first.empty()) {
        first = " starved: " + name + (side == Side::Complement ? "~" : "");
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "strictness: 100 strict perturbed points per entry side, %zu violations, "
                "%zu sides starved",
                violations, starved);
  report(3, violations == 0 && starved == 0, buf + first);
}

TEST(Acceptance, C04ComplementaryReversal) {
  const PrecisionContext ctx = default_ctx();
  SuiteConfig config;
  config.samples_per_entry = 10000;
  std::size_t complements = 0, violated = 0, searches_missed = 0;
  std::string first;
  for (const CatalogEntryInfo& info : list_catalog()) {
    if (!info.has_complement) continue;
    ++complements;
    EntryReport rep = run_inequality_check(EntryJob{info.name, Side::Complement, {}}, config);
    violated += rep.counts.violated;
    if (!rep.passed() && first.empty()) {
      first = " violated: " + rep.counterexamples[0].instance;
    }

    Rng rng(derive_seed(42, info.name + "/flip", 0));
    InequalityDescriptor primary = draw_descriptor(info.name, Side::Primary, rng);
    auto hit = search_violation(flipped_direction(primary), 1000,
                                derive_seed(42, info.name + "/flip-search", 1), ctx);
    if (!hit) {
      ++searches_missed;
      if (first.empty()) first = " search missed: " + info.name;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "complement reversal: %zu entries, %zu violations in 10000-sample sweeps, "
                "%zu reversed searches missed",
                complements, violated, searches_missed);
  report(4, violated == 0 && searches_missed == 0, buf + first);
}

TEST(Acceptance, C05WitnessSuite) {
  const PrecisionContext ctx = default_ctx();
  const std::uint64_t seeds[] = {42, 7, 99, 1234, 2026};
  std::size_t clean_failures = 0, undetected = 0;
  std::string first;
  for (const std::string& name : list_witnesses()) {
    const TransformationWitness& w = find_witness(name);
    for (std::uint64_t seed : seeds) {
      WitnessReport rep = verify_witness(w, 1000, seed, ctx);
      if (!rep.passed()) {
        clean_failures += rep.failures.size();
        if (first.empty()) {
          first = " failed: " + name + " seed=" + std::to_string(seed) + " (" +
                  rep.failures[0].expected + " vs " + rep.failures[0].got + ")";
        }
      }
    }
    WitnessReport corrupted = verify_witness(corrupted_witness(w), 1000, 42, ctx);
    if (corrupted.passed()) {
      ++undetected;
      if (first.empty()) first = " mutation survived: " + name;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "witnesses: %zu registered x 1000 samples x 5 seeds, %zu failures; "
                "%zu corrupted variants undetected",
                list_witnesses().size(), clean_failures, undetected);
  report(5, clean_failures == 0 && undetected == 0, buf + first);
}

TEST(Acceptance, C06RadoChain) {
  const PrecisionContext sharp = default_ctx().with_precision(512);
  std::size_t breaks = 0;
  std::string first;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    Rng rng(derive_seed(42, "acceptance-rado", trial));
    const int n = rng.int_in(2, 10);
    std::vector<Scalar> values, weights;
    for (int i = 0; i < n; ++i) {
      values.push_back(rng.log_uniform(1e-2, 1e2, sharp));
      weights.push_back(rng.log_uniform(1e-1, 1e1, sharp));
    }
    const WeightedTuple t = WeightedTuple::of(std::move(values), std::move(weights));
    Scalar prev = rado_gap(t, 1, sharp);  // identically zero
    for (std::size_t k = 2; k <= t.size(); ++k) {
      const Scalar cur = rado_gap(t, k, sharp);
      if (!(cur > prev)) {
        ++breaks;
        if (first.empty()) {
          first = " first: trial " + std::to_string(trial) + " k=" + std::to_string(k);
        }
        break;
      }
      prev = cur;
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "prefix gap chain: strictly increasing at 512-bit for %zu of 1000 tuples",
                static_cast<std::size_t>(1000 - breaks));
  report(6, breaks == 0, buf + first);
}

TEST(Acceptance, C07RatioChainConvention) {
  const PrecisionContext ctx = default_ctx();
  const Scalar slack = ctx.make(std::ldexp(1.0, -90));

  // With the total prefix weight in the exponent the chain is nondecreasing.
  std::size_t breaks = 0;
  for (std::uint64_t trial = 0; trial < 10000; ++trial) {
    Rng rng(derive_seed(42, "acceptance-ratio", trial));
    const int n = rng.int_in(2, 8);
    std::vector<Scalar> values, weights;
    for (int i = 0; i < n; ++i) {
      values.push_back(rng.log_uniform(0.5, 5.0, ctx));
      weights.push_back(rng.log_uniform(1e-3, 10.0, ctx));
    }
    const WeightedTuple t = WeightedTuple::of(std::move(values), std::move(weights));
    Scalar prev = popoviciu_ratio(t, 1, PopoviciuConvention::ExponentWk, ctx);
    for (std::size_t k = 2; k <= t.size(); ++k) {
      const Scalar cur = popoviciu_ratio(t, k, PopoviciuConvention::ExponentWk, ctx);
      if (cur + slack * prev < prev) {
        ++breaks;
        break;
      }
      prev = cur;
    }
  }

  // The reciprocal-weight exponent is a garbled reading: this tuple is a
  // frozen counterexample (the chain drops from k=2 to k=3)...
  const WeightedTuple frozen = WeightedTuple::of(
      {ctx.make_int(1), ctx.make_int(4), ctx.make(2.5)},
      {ctx.make_int(1), ctx.make_int(1), ctx.make(0.01)});
  const Scalar f2 = popoviciu_ratio(frozen, 2, PopoviciuConvention::ExponentInvWk, ctx);
  const Scalar f3 = popoviciu_ratio(frozen, 3, PopoviciuConvention::ExponentInvWk, ctx);
  const bool frozen_drops = f3 < f2;

  // ...and fresh brute force keeps finding more like it.
  std::size_t fresh_hits = 0;
  for (std::uint64_t trial = 0; trial < 2000; ++trial) {
    Rng rng(derive_seed(42, "acceptance-ratio-inv", trial));
    std::vector<Scalar> values, weights;
    for (int i = 0; i < 3; ++i) {
      values.push_back(rng.log_uniform(0.5, 5.0, ctx));
      weights.push_back(rng.log_uniform(1e-3, 10.0, ctx));
    }
    const WeightedTuple t = WeightedTuple::of(std::move(values), std::move(weights));
    const Scalar r2 = popoviciu_ratio(t, 2, PopoviciuConvention::ExponentInvWk, ctx);
    const Scalar r3 = popoviciu_ratio(t, 3, PopoviciuConvention::ExponentInvWk, ctx);
    if (r3 * (ctx.make_int(1) + slack) < r2) ++fresh_hits;
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "ratio chain: total-weight exponent nondecreasing in 10000 trials (%zu breaks); "
                "reciprocal exponent refuted (frozen %s, %zu fresh counterexamples)",
                breaks, frozen_drops ? "drops" : "HOLDS", fresh_hits);
  report(7, breaks == 0 && frozen_drops && fresh_hits > 0, buf);
}

TEST(Acceptance, C08PowerMeanLimits) {
  const PrecisionContext ctx = default_ctx();
  const Scalar tol = ctx.make(1e-4);
  std::size_t failures = 0;
  std::string first;
  for (std::uint64_t j = 0; j < 100; ++j) {
    Rng rng(derive_seed(42, "acceptance-limits", j));
    const Scalar x = rng.log_uniform(0.5, 5.0, ctx);
    const Scalar ratio = rng.log_uniform(1.0, 100.0, ctx);  // value ratio <= 1e2
    const WeightedTuple t =
        WeightedTuple::of({x, x * ratio}, {ctx.make_int(1), ctx.make_int(1)});
    const LimitReport rep = check_power_mean_limits(t, tol, ctx);
    if (!rep.passed) {
      ++failures;
      if (first.empty()) first = " first: " + rep.tuple + " (" + rep.detail + ")";
    }
  }
  char buf[140];
  std::snprintf(buf, sizeof buf,
                "power-mean limits: %zu of 100 tuples within 1e-4 of max/min/geometric "
                "with a monotone grid",
                static_cast<std::size_t>(100 - failures));
  report(8, failures == 0, buf + first);
}

TEST(Acceptance, C09ExponentialApproachCurves) {
  const PrecisionContext ctx = default_ctx();
  bool ok = true;
  std::string first;
  for (long ai : {-2L, -1L, 0L, 1L, 2L}) {
    const Scalar a = ctx.make_int(ai);
    std::vector<Scalar> grid;
    for (int k = 0; k <= 20; ++k) {
      const Scalar step = ctx.make(std::ldexp(1.0, k));
      grid.push_back(ctx.make_int(std::min(0L, -ai)) - step);
      grid.push_back(ctx.make_int(std::max(0L, -ai)) + step);
    }
    for (CurveFamily family : {CurveFamily::F, CurveFamily::G}) {
      const MonotonicityReport rep = check_function_monotonicity(family, a, grid, ctx);
      if (!rep.passed && ok) {
        ok = false;
        first = " first: " + rep.subject + " (" + rep.detail + ")";
      }
    }
    // Far-tail convergence of the compound-growth curve.
    const Scalar x = ctx.make(1e6 * std::max(1.0, std::abs(static_cast<double>(ai))));
    const Scalar f = pow_scalar(ctx.make_int(1) + a / x, x);
    if (abs_scalar(f - exp_scalar(a)) > ctx.make(1e-4) && ok) {
      ok = false;
      first = " tail miss at a=" + std::to_string(ai);
    }
  }
  report(9, ok,
         "growth curves: monotone on both intervals with separated limits for a in "
         "{-2,-1,0,1,2}; tails within 1e-4 of e^a" +
             first);
}

TEST(Acceptance, C10BackwardReduction) {
  const PrecisionContext ctx = default_ctx();
  const Scalar tol = ctx.make(1e-20);
  std::size_t verdict_mismatches = 0, margin_mismatches = 0;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    Rng rng(derive_seed(42, "acceptance-backward", trial));
    const int n = rng.int_in(3, 8);
    const int m = rng.int_in(2, n - 1);
    std::vector<Scalar> values, weights;
    for (int i = 0; i < n; ++i) {
      values.push_back(rng.log_uniform(0.1, 10.0, ctx));
      weights.push_back(rng.log_uniform(0.1, 10.0, ctx));
    }
    const WeightedTuple t = WeightedTuple::of(values, weights);
    const WeightedTuple reduced = backward_reduce(t, static_cast<std::size_t>(m), ctx);
    const WeightedTuple head = t.prefix(static_cast<std::size_t>(m));

    const InequalityDescriptor d_n = lookup("GAN", {{"n", static_cast<long>(n)}});
    const InequalityDescriptor d_m = lookup("GAN", {{"n", static_cast<long>(m)}});
    EvalPoint pt_n, pt_m;
    pt_n.values = reduced.values;
    pt_n.weights = reduced.weights;
    pt_m.values = head.values;
    pt_m.weights = head.weights;
    const PointClassification c_n = classify(d_n, pt_n, ctx);
    const PointClassification c_m = classify(d_m, pt_m, ctx);
    if (c_n.verdict != c_m.verdict) {
      ++verdict_mismatches;
      continue;
    }

    // Unwind the padding algebraically: the reduced tuple's geometric mean
    // determines the head's, so the head margin is reconstructible from it.
    const Scalar W = total_weight(t, ctx);
    const Scalar Wm = total_weight(head, ctx);
    const Scalar A = arithmetic_mean(head, ctx);
    const Scalar g_reduced = geometric_mean(reduced, ctx);
    const Scalar g_head =
        pow_scalar(g_reduced, W / Wm) * pow_scalar(A, -(W - Wm) / Wm);
    const Scalar margin_rec = A - g_head;
    const Scalar margin_direct = *c_m.margin;
    if (abs_scalar(margin_rec - margin_direct) > tol * abs_scalar(margin_direct)) {
      ++margin_mismatches;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "backward reduction: 1000 random (n,m), %zu verdict mismatches, "
                "%zu margin reconstructions off by more than 1e-20 relative",
                verdict_mismatches, margin_mismatches);
  report(10, verdict_mismatches == 0 && margin_mismatches == 0, buf);
}

TEST(Acceptance, C11Determinism) {
  SuiteConfig config;  // whole catalog, 1000 samples, seed 42
  SuiteReport a = run_suite(config);
  SuiteReport b = run_suite(config);
  a.wall_time_sec = 0.0;
  b.wall_time_sec = 0.0;
  const bool identical = suite_report_json(a) == suite_report_json(b);
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "determinism: two seed-42 suite runs %s byte-identical JSON (suite %s)",
                identical ? "produce" : "DIFFER in", a.passed() ? "passed" : "FAILED");
  report(11, identical && a.passed(), buf);
}

}  // namespace
}  // namespace ineq
