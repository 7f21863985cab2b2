#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ineq/catalog.hpp"
#include "ineq/means.hpp"
#include "ineq/numerics.hpp"

namespace ineq {

class UnknownWitnessError : public std::runtime_error {
 public:
  explicit UnknownWitnessError(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedDirectionError : public std::runtime_error {
 public:
  explicit UnsupportedDirectionError(const std::string& what) : std::runtime_error(what) {}
};

class OutsideValidityError : public std::runtime_error {
 public:
  explicit OutsideValidityError(const std::string& what) : std::runtime_error(what) {}
};

class DegenerateExponentsError : public std::runtime_error {
 public:
  explicit DegenerateExponentsError(const std::string& what) : std::runtime_error(what) {}
};

// A fully instantiated inequality: a descriptor together with one evaluation
// point. Transformation maps consume and produce instances, so a map is free
// to pick parameters (and the primary/complement side) of its image entry.
struct Instance {
  InequalityDescriptor descriptor;
  EvalPoint point;
};

enum class WitnessDirection { Forward, Backward };

std::string witness_direction_str(WitnessDirection dir);

// An executable record of one deduction between two catalog entries.
//
// A witness connects a source entry and a target entry. The `forward` map
// carries a source instance to a target instance and `backward` (when
// present) the other way; `relation` states the algebraic identity tying the
// margins of a mapped pair together, and must hold for every pair produced
// by either map. Point maps are checked per sample; a witness whose content
// is a multi-step derivation instead of a point map supplies `derivation`,
// which re-proves the target margin using only source-entry applications and
// exact intermediate identities.
//
// `roundtrip_source` / `roundtrip_target` declare on which side the
// composition of the two maps is the identity. Maps that normalize weights
// or absorb a scale cannot round-trip on the side that carries the scale;
// such witnesses declare the flag false and the checker skips that side.
struct TransformationWitness {
  std::string name;
  std::string source_entry;
  std::string target_entry;
  std::string summary;
  bool two_way = false;
  bool roundtrip_source = false;
  bool roundtrip_target = false;
  // Most maps carry Equality points to Equality points and strict points to
  // strict points. This is set false by a one-way reduction whose image may
  // sit at equality while the source is strict (the margin only dominates
  // the image's), and by a map between formulas of such different magnitude
  // that the banded classifier cannot track the sign across it; both ends
  // must still be non-violated.
  bool verdicts_correspond = true;

  // Samplers for validity points of each end (witness-restricted domains
  // sample the subset on which the maps are defined).
  std::function<Instance(Rng&, const PrecisionContext&)> sample_source;
  std::function<Instance(Rng&, const PrecisionContext&)> sample_target;
  // Sampler for source equality points whose forward image must again be an
  // equality point. Null when the witness has no forward point map.
  std::function<Instance(Rng&, const PrecisionContext&)> equality_source;

  // Point maps. Null when the direction is not realized as a point map.
  std::function<Instance(const Instance&, const PrecisionContext&)> forward;
  std::function<Instance(const Instance&, const PrecisionContext&)> backward;

  // Exact margin identity for a (source, target) pair, checked to roundoff.
  std::function<bool(const Instance& src, const Instance& tgt, const PrecisionContext&,
                     std::string* why)>
      relation;

  // Derivation check: re-prove an instance drawn from `derivation_sampler`
  // using only applications of the other entry plus exact intermediate
  // identities. `corrupt` perturbs one internal step so that mutation
  // testing can confirm the check has teeth.
  std::function<Instance(Rng&, const PrecisionContext&)> derivation_sampler;
  std::function<bool(const Instance& inst, bool corrupt, const PrecisionContext&,
                     std::string* why)>
      derivation;
};

struct WitnessFailure {
  WitnessDirection direction = WitnessDirection::Forward;
  std::size_t sample_index = 0;
  std::uint64_t sample_seed = 0;
  std::string source_pt;
  std::string mapped_pt;
  std::string expected;
  std::string got;
};

struct WitnessReport {
  std::string witness;
  std::size_t samples = 0;   // requested sample count
  std::size_t checked = 0;   // individual checks executed
  std::vector<WitnessFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Registered witness names in registration order.
std::vector<std::string> list_witnesses();

// Lookup by name; throws UnknownWitnessError.
const TransformationWitness& find_witness(const std::string& name);

// Apply one direction of a witness to an instance. Throws
// UnsupportedDirectionError when the direction has no point map,
// OutsideValidityError when the input fails its own validity set or the
// image fails the target's.
Instance apply_witness(const TransformationWitness& w, WitnessDirection dir,
                       const Instance& inst, const PrecisionContext& ctx);

// Run `sample_count` deterministic checks of a witness. Every sample draws
// its own generator from derive_seed(seed, <witness stream>, index), so
// reports are reproducible and independent of evaluation order. Failures are
// data, not errors.
WitnessReport verify_witness(const TransformationWitness& w, std::size_t sample_count,
                             std::uint64_t seed, const PrecisionContext& ctx);

// A deliberately broken copy of a witness: the forward point map's first
// mapped coordinate is shifted by +0.1, and derivation checks corrupt one
// internal identity. verify_witness on the result must report failures;
// silence would mean the checks cannot detect a wrong map.
TransformationWitness corrupted_witness(const TransformationWitness& w);

// Conjugate exponent p' with (p - 1)(p' - 1) = 1: p' = p / (p - 1), with
// p' = 0 at p = 0. Throws DegenerateExponentsError at p = 1. Involution
// everywhere except the fixed singularities: p'' = p for p not in {0, 1}.
Scalar conjugate_index(const Scalar& p, const PrecisionContext& ctx);

// Tuple extension used to reduce an n-term mean inequality to its m-term
// prefix: keep the first m entries and replace every later value by the
// weighted arithmetic mean of the prefix (weights are kept). Requires
// 2 <= m < size; throws BadIndexError otherwise.
WeightedTuple backward_reduce(const WeightedTuple& t, std::size_t m,
                              const PrecisionContext& ctx);

// Change of variables carrying a three-exponent mean-moment instance to a
// two-exponent product form: p = (r - t)/(r - s), a_i = x_i^{t/p},
// b_i = x_i^{r/p'}. The exponents must be pairwise distinct
// (DegenerateExponentsError) and the output satisfies
// (p - 1)(p' - 1) = 1 and a_i b_i = x_i^s componentwise.
struct ExponentSplit {
  Scalar p;
  Scalar p_conjugate;
  std::vector<Scalar> a;
  std::vector<Scalar> b;
};

ExponentSplit liapunov_to_holder(const Scalar& r, const Scalar& s, const Scalar& t,
                                 const std::vector<Scalar>& x,
                                 const PrecisionContext& ctx);

}  // namespace ineq
