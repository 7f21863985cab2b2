#pragma once

// Sampling-based verification: soundness sweeps over validity sets with
// boundary enrichment, counterexample search with high-precision
// confirmation, power-mean limit and curve-monotonicity suites, and a
// deterministic aggregate report over the whole registry.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ineq/catalog.hpp"
#include "ineq/means.hpp"
#include "ineq/transforms.hpp"

namespace ineq {

class SamplerMissingError : public std::runtime_error {
 public:
  explicit SamplerMissingError(const std::string& what) : std::runtime_error(what) {}
};

class GridOutsideDomainError : public std::runtime_error {
 public:
  explicit GridOutsideDomainError(const std::string& what) : std::runtime_error(what) {}
};

// One catalog entry to sweep. Empty `params` means each sample draws fresh
// parameters from the entry's documented ranges; a non-empty map pins them.
struct EntryJob {
  std::string name;
  Side side = Side::Primary;
  ParamMap params;
};

struct SuiteConfig {
  std::vector<EntryJob> entries;  // empty: every registered entry, both sides
  std::size_t samples_per_entry = 1000;
  std::uint64_t seed = 42;
  PrecisionContext ctx;
  double boundary_fraction = 0.1;  // share of samples drawn near the equality set
};

struct EntryCounts {
  std::size_t strict = 0;
  std::size_t equality = 0;
  std::size_t violated = 0;
  std::size_t outside = 0;
  std::size_t overflow = 0;
  std::size_t total() const { return strict + equality + violated + outside + overflow; }
};

// A confirmed violation: the point re-classified Violated at four times the
// working precision, so it is not a tolerance artifact.
struct CounterexampleRecord {
  std::string instance;  // e.g. "RADO(n=5)"
  std::string point;
  std::string margin;
  std::uint64_t seed = 0;
  std::size_t index = 0;
};

struct EntryReport {
  std::string name;
  Side side = Side::Primary;
  ParamMap params;
  EntryCounts counts;
  std::vector<CounterexampleRecord> counterexamples;
  bool passed() const { return counts.violated == 0; }
};

struct LimitReport {
  std::string tuple;
  bool passed = false;
  std::string detail;  // empty when passed; first failed assertion otherwise
  double worst_rel_gap = 0.0;
};

enum class CurveFamily { F, G };  // (1 + a/x)^x and (1 + a/x)^(x + a)

struct MonotonicityReport {
  std::string subject;  // e.g. "F(a=-2)" or "rado-chain"
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  long precision_bits = 0;
  std::vector<EntryReport> entries;
  std::vector<WitnessReport> witnesses;
  std::vector<LimitReport> limits;
  std::vector<MonotonicityReport> monotonicity;
  double wall_time_sec = 0.0;
  bool passed() const;
};

// A point inside the validity set of `d`, drawn by the entry sampler; with
// probability `boundary_fraction` it is an equality-set point perturbed by
// relative 1e-6 instead (still inside validity, possibly still classifying
// Equality). Throws SamplerMissingError if the descriptor has no sampler.
EvalPoint sample_point(const InequalityDescriptor& d, Rng& rng, const PrecisionContext& ctx,
                       double boundary_fraction = 0.0);

// Classifies `config.samples_per_entry` seeded samples of the job's entry.
// Violated verdicts are re-checked at four times the precision and recorded
// as counterexamples when confirmed. Overflow is counted, not fatal.
EntryReport run_inequality_check(const EntryJob& job, const SuiteConfig& config);

// The same formula and sets with the direction of assertion reversed; on
// V \ E the reversed claim is false, which search_violation must discover.
InequalityDescriptor flipped_direction(const InequalityDescriptor& d);

// Random search plus coordinate-wise multiplicative descent on the margin.
// Returns the first point of the validity set whose Violated verdict
// survives re-classification at four times the precision.
std::optional<std::pair<EvalPoint, Scalar>> search_violation(const InequalityDescriptor& d,
                                                             std::size_t budget,
                                                             std::uint64_t seed,
                                                             const PrecisionContext& ctx);

// Evaluates the power mean on the exponent grid {-1e4, -1e2, -1, -1e-6,
// 1e-6, 1, 1e2, 1e4}: asserts the grid is nondecreasing, the top exponent
// sits within tolerance*max of max, the bottom within tolerance*min of min,
// and both near-zero exponents within tolerance*G of the geometric mean.
LimitReport check_power_mean_limits(const WeightedTuple& t, const Scalar& tolerance,
                                    const PrecisionContext& ctx);

// Checks one curve of the exponential-approach family on a grid inside
// S = (-inf, min(0,-a)) union (max(0,-a), inf): F strictly increasing and
// G strictly decreasing on each interval, every left-interval value on the
// proper side of every right-interval value, and the gap to e^a shrinking
// toward each tail. a = 0 degenerates both curves to the constant 1, where
// only constancy is asserted. Throws GridOutsideDomainError for grid points
// outside S.
MonotonicityReport check_function_monotonicity(CurveFamily family, const Scalar& a,
                                               const std::vector<Scalar>& grid,
                                               const PrecisionContext& ctx);

// Sweeps every entry job, verifies every registered transformation witness,
// runs the power-mean limit grid on sampled pairs, the curve suite for
// a in {-2,-1,0,1,2}, and the prefix-gap/ratio chain monotonicity checks.
// Identical (config, seed, precision) give an identical report up to
// wall_time_sec.
SuiteReport run_suite(const SuiteConfig& config);

// JSON renderings (deterministic key order; scalars as decimal strings).
std::string witness_report_json(const WitnessReport& rep);
std::string suite_report_json(const SuiteReport& rep);

}  // namespace ineq
