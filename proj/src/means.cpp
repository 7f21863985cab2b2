#include "ineq/means.hpp"

#include <utility>

namespace ineq {

WeightedTuple WeightedTuple::of(std::vector<Scalar> values, std::vector<Scalar> weights) {
  if (values.empty()) throw EmptyTupleError("tuple must have at least one entry");
  if (values.size() != weights.size()) {
    throw BadIndexError("values and weights must have the same length");
  }
  for (const Scalar& v : values) {
    if (!v.is_finite() || v.sgn() <= 0) {
      throw NonPositiveEntryError("tuple values must be positive, got " + v.compact());
    }
  }
  for (const Scalar& w : weights) {
    if (!w.is_finite() || w.sgn() <= 0) {
      throw NonPositiveEntryError("tuple weights must be positive, got " + w.compact());
    }
  }
  WeightedTuple t;
  t.values = std::move(values);
  t.weights = std::move(weights);
  return t;
}

WeightedTuple WeightedTuple::equal_weights(std::vector<Scalar> values, long precision_bits) {
  std::vector<Scalar> w(values.size(), Scalar::of_int(1, precision_bits));
  return of(std::move(values), std::move(w));
}

WeightedTuple WeightedTuple::prefix(std::size_t k) const {
  if (k < 1 || k > size()) {
    throw BadIndexError("prefix length out of range: " + std::to_string(k));
  }
  WeightedTuple t;
  t.values.assign(values.begin(), values.begin() + k);
  t.weights.assign(weights.begin(), weights.begin() + k);
  return t;
}

Scalar total_weight(const WeightedTuple& t, const PrecisionContext& ctx) {
  Scalar s = ctx.make_int(0);
  for (const Scalar& w : t.weights) s = s + w;
  return s;
}

Scalar arithmetic_mean(const WeightedTuple& t, const PrecisionContext& ctx) {
  Scalar num = ctx.make_int(0);
  for (std::size_t i = 0; i < t.size(); ++i) num = num + t.weights[i] * t.values[i];
  return num / total_weight(t, ctx);
}

Scalar geometric_mean(const WeightedTuple& t, const PrecisionContext& ctx) {
  Scalar num = ctx.make_int(0);
  for (std::size_t i = 0; i < t.size(); ++i) num = num + t.weights[i] * log_scalar(t.values[i]);
  return exp_scalar(num / total_weight(t, ctx));
}

Scalar harmonic_mean(const WeightedTuple& t, const PrecisionContext& ctx) {
  Scalar num = ctx.make_int(0);
  for (std::size_t i = 0; i < t.size(); ++i) num = num + t.weights[i] / t.values[i];
  return total_weight(t, ctx) / num;
}

Scalar quadratic_mean(const WeightedTuple& t, const PrecisionContext& ctx) {
  Scalar num = ctx.make_int(0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    num = num + t.weights[i] * t.values[i] * t.values[i];
  }
  return sqrt_scalar(num / total_weight(t, ctx));
}

Scalar power_mean(const WeightedTuple& t, const ExtendedReal& r, const PrecisionContext& ctx) {
  switch (r.kind()) {
    case ExtendedReal::Kind::PosInf: {
      Scalar m = t.values[0];
      for (const Scalar& v : t.values) m = max_scalar(m, v);
      return m;
    }
    case ExtendedReal::Kind::NegInf: {
      Scalar m = t.values[0];
      for (const Scalar& v : t.values) m = min_scalar(m, v);
      return m;
    }
    case ExtendedReal::Kind::Finite:
      break;
  }
  const Scalar& rv = r.value();
  if (rv.is_zero()) return geometric_mean(t, ctx);
  Scalar num = ctx.make_int(0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    num = num + t.weights[i] * pow_scalar(t.values[i], rv);
  }
  Scalar mean_of_powers = num / total_weight(t, ctx);
  return pow_scalar(mean_of_powers, ctx.make_int(1) / rv);
}

Scalar rado_gap(const WeightedTuple& t, std::size_t k, const PrecisionContext& ctx) {
  WeightedTuple p = t.prefix(k);
  return total_weight(p, ctx) * (arithmetic_mean(p, ctx) - geometric_mean(p, ctx));
}

Scalar popoviciu_ratio(const WeightedTuple& t, std::size_t k, PopoviciuConvention convention,
                       const PrecisionContext& ctx) {
  WeightedTuple p = t.prefix(k);
  Scalar wk = total_weight(p, ctx);
  Scalar e = convention == PopoviciuConvention::ExponentWk ? wk : ctx.make_int(1) / wk;
  return pow_scalar(arithmetic_mean(p, ctx) / geometric_mean(p, ctx), e);
}

}  // namespace ineq
