#include "ineq/checker.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ineq {

namespace {

std::string side_tag(Side side) { return side == Side::Complement ? "~" : ""; }

void append_vec(std::string& out, const char* label, const std::vector<Scalar>& v) {
  if (v.empty()) return;
  if (!out.empty()) out += ' ';
  out += label;
  out += "=[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].compact();
  }
  out += ']';
}

std::string point_str(const EvalPoint& pt) {
  std::string out;
  append_vec(out, "s", pt.scalars);
  append_vec(out, "a", pt.values);
  append_vec(out, "b", pt.values2);
  append_vec(out, "w", pt.weights);
  return out;
}

std::string tuple_str(const WeightedTuple& t) {
  std::string out;
  append_vec(out, "a", t.values);
  append_vec(out, "w", t.weights);
  return out;
}

void perturb_slot(std::vector<Scalar>& slot, Rng& rng, const PrecisionContext& ctx) {
  const Scalar one = ctx.make_int(1);
  const Scalar eps = ctx.make(1e-6);
  for (Scalar& c : slot) {
    if (c.is_zero()) continue;  // keep exact zeros (they usually carry the constraint)
    c = c * (one + eps * rng.symmetric(1.0, ctx));
  }
}

// Binds the job's entry on the requested side. When the job pins parameters
// they are used as-is; otherwise the caller passes freshly drawn ones.
InequalityDescriptor bind_job(const std::string& name, Side side, const ParamMap& params) {
  InequalityDescriptor d = lookup(name, params);
  if (side == Side::Complement) d = complementary(d);
  return d;
}

}  // namespace

EvalPoint sample_point(const InequalityDescriptor& d, Rng& rng, const PrecisionContext& ctx,
                       double boundary_fraction) {
  if (!d.sample) {
    throw SamplerMissingError("entry " + d.display_name() + " has no sampler");
  }
  const bool near_boundary =
      boundary_fraction > 0.0 && d.sample_equality && rng.coin(boundary_fraction);
  if (near_boundary) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      EvalPoint pt = d.sample_equality(rng, ctx);
      perturb_slot(pt.scalars, rng, ctx);
      perturb_slot(pt.values, rng, ctx);
      perturb_slot(pt.values2, rng, ctx);
      perturb_slot(pt.weights, rng, ctx);
      if (d.validity(pt, ctx)) return pt;
    }
    // The perturbation kept escaping the validity set; fall back to the bulk.
  }
  return d.sample(rng, ctx);
}

EntryReport run_inequality_check(const EntryJob& job, const SuiteConfig& config) {
  EntryReport rep;
  rep.name = job.name;
  rep.side = job.side;
  rep.params = job.params;

  const std::string stream = job.name + side_tag(job.side);
  const bool pinned = !job.params.empty();
  const InequalityDescriptor pinned_d =
      pinned ? bind_job(job.name, job.side, job.params) : InequalityDescriptor{};
  const PrecisionContext high = config.ctx.with_precision(4 * config.ctx.precision_bits);

  for (std::size_t i = 0; i < config.samples_per_entry; ++i) {
    Rng rng(derive_seed(config.seed, stream, i));
    InequalityDescriptor drawn_d;
    const InequalityDescriptor* d = &pinned_d;
    if (!pinned) {
      drawn_d = bind_job(job.name, job.side, sample_entry_params(job.name, job.side, rng));
      d = &drawn_d;
    }
    EvalPoint pt = sample_point(*d, rng, config.ctx, config.boundary_fraction);

    PointClassification cls;
    try {
      cls = classify(*d, pt, config.ctx);
    } catch (const OverflowError&) {
      ++rep.counts.overflow;
      continue;
    }
    switch (cls.verdict) {
      case Verdict::StrictlyHolds:
        ++rep.counts.strict;
        break;
      case Verdict::Equality:
        ++rep.counts.equality;
        break;
      case Verdict::OutsideValidity:
        ++rep.counts.outside;
        break;
      case Verdict::Violated: {
        // Only a verdict that survives four times the precision counts: the
        // rest are tolerance artifacts and are tallied as what they really are.
        PointClassification confirm;
        try {
          confirm = classify(*d, pt, high);
        } catch (const OverflowError&) {
          ++rep.counts.overflow;
          break;
        }
        if (confirm.verdict == Verdict::Violated) {
          ++rep.counts.violated;
          rep.counterexamples.push_back(CounterexampleRecord{
              d->instance_key(), point_str(pt), confirm.margin->compact(),
              derive_seed(config.seed, stream, i), i});
        } else if (confirm.verdict == Verdict::Equality) {
          ++rep.counts.equality;
        } else {
          ++rep.counts.strict;
        }
        break;
      }
    }
  }
  return rep;
}

InequalityDescriptor flipped_direction(const InequalityDescriptor& d) {
  InequalityDescriptor out = d;
  out.direction =
      d.direction == Direction::LessEq ? Direction::GreaterEq : Direction::LessEq;
  // The reversed statement is a different claim; its catalog complement no
  // longer corresponds to it.
  out.has_complement = false;
  return out;
}

std::optional<std::pair<EvalPoint, Scalar>> search_violation(const InequalityDescriptor& d,
                                                             std::size_t budget,
                                                             std::uint64_t seed,
                                                             const PrecisionContext& ctx) {
  if (!d.sample) {
    throw SamplerMissingError("entry " + d.display_name() + " has no sampler");
  }
  const PrecisionContext high = ctx.with_precision(4 * ctx.precision_bits);
  Rng rng(seed);
  std::size_t used = 0;

  auto evaluate = [&](const EvalPoint& pt) -> std::optional<PointClassification> {
    ++used;
    try {
      PointClassification c = classify(d, pt, ctx);
      if (c.verdict == Verdict::OutsideValidity) return std::nullopt;
      return c;
    } catch (const OverflowError&) {
      return std::nullopt;
    }
  };
  auto confirm = [&](const EvalPoint& pt) -> std::optional<Scalar> {
    try {
      PointClassification c = classify(d, pt, high);
      if (c.verdict == Verdict::Violated) return c.margin;
    } catch (const OverflowError&) {
    }
    return std::nullopt;
  };

  std::optional<std::pair<EvalPoint, Scalar>> found;

  while (used < budget && !found) {
    EvalPoint pt = d.sample(rng, ctx);
    auto start = evaluate(pt);
    if (!start) continue;
    if (start->verdict == Verdict::Violated) {
      if (auto m = confirm(pt)) return std::make_pair(std::move(pt), std::move(*m));
    }
    Scalar best = *start->margin;

    // Coordinate-wise multiplicative descent on the oriented margin, with the
    // step shrinking whenever no coordinate move improves it.
    double delta = 0.1;
    while (used < budget && !found && delta >= 1e-4) {
      bool improved = false;
      auto probe = [&](std::vector<Scalar>& slot) {
        for (std::size_t j = 0; j < slot.size() && used < budget && !found; ++j) {
          for (double f : {1.0 + delta, 1.0 - delta}) {
            const Scalar saved = slot[j];
            slot[j] = saved * ctx.make(f);
            auto c = evaluate(pt);
            if (c && *c->margin < best) {
              best = *c->margin;
              improved = true;
              if (c->verdict == Verdict::Violated) {
                if (auto m = confirm(pt)) found = std::make_pair(pt, std::move(*m));
              }
              break;  // keep the move, try the next coordinate
            }
            slot[j] = saved;
            if (used >= budget) break;
          }
        }
      };
      probe(pt.scalars);
      probe(pt.values);
      probe(pt.values2);
      probe(pt.weights);
      if (!improved) delta *= 0.5;
    }
  }
  return found;
}

LimitReport check_power_mean_limits(const WeightedTuple& t, const Scalar& tolerance,
                                    const PrecisionContext& ctx) {
  LimitReport rep;
  rep.tuple = tuple_str(t);

  static constexpr std::array<double, 8> kGrid = {-1e4, -1e2, -1.0, -1e-6,
                                                  1e-6,  1.0,  1e2,  1e4};
  std::vector<Scalar> m;
  m.reserve(kGrid.size());
  for (double r : kGrid) m.push_back(power_mean(t, ExtendedReal(ctx.make(r)), ctx));

  Scalar top = t.values[0];
  Scalar bottom = t.values[0];
  for (const Scalar& v : t.values) {
    top = max_scalar(top, v);
    bottom = min_scalar(bottom, v);
  }
  const Scalar geo = geometric_mean(t, ctx);

  auto rel_gap = [](const Scalar& got, const Scalar& want) {
    return abs_scalar(got - want) / want;  // want > 0: tuples are positive
  };
  struct Probe {
    const char* what;
    Scalar gap;
  };
  const std::array<Probe, 4> probes = {{{"top exponent vs max", rel_gap(m[7], top)},
                                        {"bottom exponent vs min", rel_gap(m[0], bottom)},
                                        {"exponent -1e-6 vs geometric", rel_gap(m[3], geo)},
                                        {"exponent 1e-6 vs geometric", rel_gap(m[4], geo)}}};

  Scalar worst = probes[0].gap;
  for (const Probe& p : probes) worst = max_scalar(worst, p.gap);
  rep.worst_rel_gap = worst.to_double();

  const Scalar slack = ctx.make(std::ldexp(1.0, -100));
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i] > m[i + 1] + slack * max_scalar(abs_scalar(m[i]), abs_scalar(m[i + 1]))) {
      rep.detail = "grid not nondecreasing between exponents " +
                   ctx.make(kGrid[i]).compact() + " and " + ctx.make(kGrid[i + 1]).compact() +
                   ": " + m[i].compact() + " > " + m[i + 1].compact();
      return rep;
    }
  }
  for (const Probe& p : probes) {
    if (p.gap > tolerance) {
      rep.detail = std::string(p.what) + ": relative gap " + p.gap.compact() +
                   " exceeds tolerance " + tolerance.compact();
      return rep;
    }
  }
  rep.passed = true;
  return rep;
}

MonotonicityReport check_function_monotonicity(CurveFamily family, const Scalar& a,
                                               const std::vector<Scalar>& grid,
                                               const PrecisionContext& ctx) {
  MonotonicityReport rep;
  rep.subject = std::string(family == CurveFamily::F ? "F" : "G") + "(a=" + a.compact() + ")";

  const Scalar zero = ctx.make_int(0);
  const Scalar one = ctx.make_int(1);
  const Scalar left_end = min_scalar(zero, -a);   // domain: (-inf, left_end) ...
  const Scalar right_end = max_scalar(zero, -a);  // ... union (right_end, inf)

  std::vector<Scalar> left, right;
  for (const Scalar& x : grid) {
    if (x < left_end) {
      left.push_back(x);
    } else if (x > right_end) {
      right.push_back(x);
    } else {
      throw GridOutsideDomainError("grid point x=" + x.compact() +
                                   " lies outside the curve domain for a=" + a.compact());
    }
  }
  auto ascending = [](const Scalar& p, const Scalar& q) { return p < q; };
  std::sort(left.begin(), left.end(), ascending);
  std::sort(right.begin(), right.end(), ascending);

  auto value = [&](const Scalar& x) {
    const Scalar base = one + a / x;
    return pow_scalar(base, family == CurveFamily::F ? x : x + a);
  };

  if (a.is_zero()) {
    // Both curves collapse to the constant 1; only constancy is checkable.
    const Scalar slack = ctx.make(std::ldexp(1.0, -100));
    for (const std::vector<Scalar>* part : {&left, &right}) {
      for (const Scalar& x : *part) {
        if (abs_scalar(value(x) - one) > slack) {
          rep.detail = "curve is not constant 1 at x=" + x.compact();
          return rep;
        }
      }
    }
    rep.passed = true;
    return rep;
  }

  std::vector<Scalar> lv, rv;
  lv.reserve(left.size());
  rv.reserve(right.size());
  for (const Scalar& x : left) lv.push_back(value(x));
  for (const Scalar& x : right) rv.push_back(value(x));

  const bool increasing = family == CurveFamily::F;
  auto check_strict = [&](const std::vector<Scalar>& xs, const std::vector<Scalar>& vs,
                          const char* which) -> bool {
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      const bool ok = increasing ? vs[i] < vs[i + 1] : vs[i] > vs[i + 1];
      if (!ok) {
        rep.detail = std::string("not strictly ") + (increasing ? "increasing" : "decreasing") +
                     " on the " + which + " interval between x=" + xs[i].compact() +
                     " and x=" + xs[i + 1].compact();
        return false;
      }
    }
    return true;
  };
  if (!check_strict(left, lv, "left") || !check_strict(right, rv, "right")) return rep;

  // Every left value sits on the far side of e^a from every right value: the
  // extreme pair is the left front (x -> -inf) against the right back
  // (x -> +inf), both of which approach e^a.
  if (!lv.empty() && !rv.empty()) {
    const bool separated = increasing ? lv.front() > rv.back() : lv.front() < rv.back();
    if (!separated) {
      rep.detail = "left and right interval values are not separated: " + lv.front().compact() +
                   " vs " + rv.back().compact();
      return rep;
    }
  }

  // The gap to the shared limit e^a shrinks toward each tail.
  const Scalar limit = exp_scalar(a);
  for (std::size_t i = 0; i + 1 < lv.size(); ++i) {
    if (!(abs_scalar(lv[i] - limit) < abs_scalar(lv[i + 1] - limit))) {
      rep.detail = "gap to the limit does not shrink toward -inf between x=" +
                   left[i].compact() + " and x=" + left[i + 1].compact();
      return rep;
    }
  }
  for (std::size_t i = 0; i + 1 < rv.size(); ++i) {
    if (!(abs_scalar(rv[i] - limit) > abs_scalar(rv[i + 1] - limit))) {
      rep.detail = "gap to the limit does not shrink toward +inf between x=" +
                   right[i].compact() + " and x=" + right[i + 1].compact();
      return rep;
    }
  }
  rep.passed = true;
  return rep;
}

namespace {

MonotonicityReport check_prefix_chain(const char* subject, const SuiteConfig& config,
                                      bool multiplicative) {
  MonotonicityReport rep;
  rep.subject = subject;
  const PrecisionContext& ctx = config.ctx;
  const Scalar slack = ctx.make(std::ldexp(1.0, -90));
  const Scalar one = ctx.make_int(1);

  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Rng rng(derive_seed(config.seed, subject, trial));
    const int n = rng.int_in(3, 10);
    std::vector<Scalar> values, weights;
    for (int i = 0; i < n; ++i) {
      values.push_back(rng.log_uniform(1e-2, 1e2, ctx));
      weights.push_back(rng.log_uniform(1e-1, 1e1, ctx));
    }
    const WeightedTuple t = WeightedTuple::of(std::move(values), std::move(weights));

    Scalar prev = multiplicative
                      ? popoviciu_ratio(t, 1, PopoviciuConvention::ExponentWk, ctx)
                      : rado_gap(t, 1, ctx);
    for (std::size_t k = 2; k <= t.size(); ++k) {
      const Scalar cur = multiplicative
                             ? popoviciu_ratio(t, k, PopoviciuConvention::ExponentWk, ctx)
                             : rado_gap(t, k, ctx);
      const Scalar allowance =
          multiplicative ? slack * prev
                         : slack * max_scalar(max_scalar(abs_scalar(prev), abs_scalar(cur)), one);
      if (cur + allowance < prev) {
        rep.detail = "chain decreases at trial " + std::to_string(trial) + ", prefix " +
                     std::to_string(k) + ": " + cur.compact() + " < " + prev.compact() + " (" +
                     tuple_str(t) + ")";
        return rep;
      }
      prev = cur;
    }
  }
  rep.passed = true;
  return rep;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const EntryReport& e : entries) {
    if (!e.passed()) return false;
  }
  for (const WitnessReport& w : witnesses) {
    if (!w.passed()) return false;
  }
  for (const LimitReport& l : limits) {
    if (!l.passed) return false;
  }
  for (const MonotonicityReport& m : monotonicity) {
    if (!m.passed) return false;
  }
  return true;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const PrecisionContext& ctx = config.ctx;

  SuiteReport rep;
  rep.seed = config.seed;
  rep.precision_bits = ctx.precision_bits;

  std::vector<EntryJob> jobs = config.entries;
  if (jobs.empty()) {
    for (const CatalogEntryInfo& info : list_catalog()) {
      jobs.push_back(EntryJob{info.name, Side::Primary, {}});
      if (info.has_complement) jobs.push_back(EntryJob{info.name, Side::Complement, {}});
    }
  }
  for (const EntryJob& job : jobs) rep.entries.push_back(run_inequality_check(job, config));

  for (const std::string& name : list_witnesses()) {
    rep.witnesses.push_back(
        verify_witness(find_witness(name), config.samples_per_entry, config.seed, ctx));
  }

  // Extreme power-mean exponents on two-value tuples. The approach rate to
  // max/min is |ln(W/w_top)| / r, so modest value ratios with equal weights
  // keep the r = 1e4 endpoint inside a 1e-4 relative tolerance.
  const Scalar limit_tol = ctx.make(1e-4);
  for (std::uint64_t j = 0; j < 20; ++j) {
    Rng rng(derive_seed(config.seed, "limit-tuples", j));
    const Scalar x = rng.log_uniform(0.5, 5.0, ctx);
    const Scalar ratio = rng.log_uniform(1.0, 100.0, ctx);
    const WeightedTuple t =
        WeightedTuple::of({x, x * ratio}, {ctx.make_int(1), ctx.make_int(1)});
    rep.limits.push_back(check_power_mean_limits(t, limit_tol, ctx));
  }

  for (long ai : {-2L, -1L, 0L, 1L, 2L}) {
    const Scalar a = ctx.make_int(ai);
    const long left_end = std::min(0L, -ai);
    const long right_end = std::max(0L, -ai);
    std::vector<Scalar> grid;
    for (int k = 0; k <= 20; ++k) {
      const Scalar step = ctx.make(std::ldexp(1.0, k));
      grid.push_back(ctx.make_int(left_end) - step);
      grid.push_back(ctx.make_int(right_end) + step);
    }
    rep.monotonicity.push_back(check_function_monotonicity(CurveFamily::F, a, grid, ctx));
    rep.monotonicity.push_back(check_function_monotonicity(CurveFamily::G, a, grid, ctx));
  }
  rep.monotonicity.push_back(check_prefix_chain("rado-chain", config, false));
  rep.monotonicity.push_back(check_prefix_chain("popoviciu-chain", config, true));

  rep.wall_time_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace ineq
