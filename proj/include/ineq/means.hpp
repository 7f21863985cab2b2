#pragma once

#include <cstddef>
#include <vector>

#include "ineq/numerics.hpp"

namespace ineq {

class EmptyTupleError : public std::runtime_error {
 public:
  explicit EmptyTupleError(const std::string& what) : std::runtime_error(what) {}
};

class NonPositiveEntryError : public std::runtime_error {
 public:
  explicit NonPositiveEntryError(const std::string& what) : std::runtime_error(what) {}
};

class BadIndexError : public std::runtime_error {
 public:
  explicit BadIndexError(const std::string& what) : std::runtime_error(what) {}
};

// A tuple of strictly positive values with strictly positive weights.
// Construction validates both invariants.
struct WeightedTuple {
  std::vector<Scalar> values;
  std::vector<Scalar> weights;

  static WeightedTuple of(std::vector<Scalar> values, std::vector<Scalar> weights);
  static WeightedTuple equal_weights(std::vector<Scalar> values, long precision_bits);

  std::size_t size() const { return values.size(); }
  // First k entries (1 <= k <= size), else BadIndexError.
  WeightedTuple prefix(std::size_t k) const;
};

// Sum of the weights.
Scalar total_weight(const WeightedTuple& t, const PrecisionContext& ctx);

// Weighted arithmetic mean: sum(w_i a_i) / sum(w_i).
Scalar arithmetic_mean(const WeightedTuple& t, const PrecisionContext& ctx);

// Weighted geometric mean, computed in the log domain:
// exp(sum(w_i log a_i) / sum(w_i)).
Scalar geometric_mean(const WeightedTuple& t, const PrecisionContext& ctx);

Scalar harmonic_mean(const WeightedTuple& t, const PrecisionContext& ctx);
Scalar quadratic_mean(const WeightedTuple& t, const PrecisionContext& ctx);

// Weighted power mean of order r:
//   r finite nonzero: (sum(w_i a_i^r)/sum(w_i))^(1/r)
//   r = 0:            geometric mean
//   r = +inf / -inf:  max / min of the values
Scalar power_mean(const WeightedTuple& t, const ExtendedReal& r, const PrecisionContext& ctx);

// Scaled gap between the arithmetic and geometric means of the k-prefix:
// W_k * (A_k - G_k). Throws BadIndexError unless 1 <= k <= size.
Scalar rado_gap(const WeightedTuple& t, std::size_t k, const PrecisionContext& ctx);

// Exponent convention for the multiplicative mean-gap chain.
enum class PopoviciuConvention { ExponentWk, ExponentInvWk };

// (A_k / G_k)^e_k over the k-prefix, where e_k is W_k (ExponentWk) or
// 1/W_k (ExponentInvWk). Throws BadIndexError unless 1 <= k <= size.
Scalar popoviciu_ratio(const WeightedTuple& t, std::size_t k, PopoviciuConvention convention,
                       const PrecisionContext& ctx);

}  // namespace ineq
