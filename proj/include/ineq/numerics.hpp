#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ineq {

// Thrown when an operation leaves the representable range (result is inf/nan).
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by pow_scalar and log_scalar when the base/argument is outside the domain.
class NonPositiveBaseError : public std::runtime_error {
 public:
  explicit NonPositiveBaseError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long kDefaultPrecisionBits = 128;

// Arbitrary-precision real number. Thin RAII wrapper around an mpfr_t; all
// arithmetic rounds to nearest. Binary operations produce a result whose
// precision is the larger of the operand precisions, so precision set at the
// inputs propagates through whole computations.
class Scalar {
 public:
  explicit Scalar(long precision_bits = kDefaultPrecisionBits);
  Scalar(const Scalar& other);
  Scalar(Scalar&& other) noexcept;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&& other) noexcept;
  ~Scalar();

  static Scalar of(double x, long precision_bits);
  static Scalar of_int(long x, long precision_bits);
  static Scalar of_uint(unsigned long x, long precision_bits);
  // Parses a base-10 literal; the whole string must be consumed. Accepts
  // "inf"/"-inf"/"nan" spellings as non-finite values.
  static Scalar parse(const std::string& text, long precision_bits);

  long precision() const;
  bool is_nan() const;
  bool is_inf() const;
  bool is_finite() const;
  bool is_zero() const;
  int sgn() const;  // -1, 0, +1 (0 for zero; throws on nan)

  double to_double() const;
  // Deterministic decimal rendering: scientific notation with the given number
  // of significant digits. Used for reports, where byte-stable output matters.
  std::string decimal(int significant_digits = 25) const;
  // Compact human-facing rendering (shortest %Rg form with 15 digits).
  std::string compact() const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator/(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);

// Comparisons throw OverflowError when either side is nan; ordinary orderings
// otherwise (infinities compare as expected).
bool operator<(const Scalar& a, const Scalar& b);
bool operator<=(const Scalar& a, const Scalar& b);
bool operator>(const Scalar& a, const Scalar& b);
bool operator>=(const Scalar& a, const Scalar& b);
bool operator==(const Scalar& a, const Scalar& b);
bool operator!=(const Scalar& a, const Scalar& b);

Scalar abs_scalar(const Scalar& a);
Scalar max_scalar(const Scalar& a, const Scalar& b);
Scalar min_scalar(const Scalar& a, const Scalar& b);
Scalar sqrt_scalar(const Scalar& a);
Scalar exp_scalar(const Scalar& a);
// Natural log; throws NonPositiveBaseError when a <= 0.
Scalar log_scalar(const Scalar& a);

// b^e with correct rounding. Domain: b > 0, or b = 0 with e > 0. Anything else
// throws NonPositiveBaseError; a non-finite result throws OverflowError.
// |computed - exact| <= 2^(-precision+1) * exact, far inside the documented
// 2^(-precision+4) budget.
Scalar pow_scalar(const Scalar& base, const Scalar& exponent);

// A real extended with the two infinities; used for power-mean exponents.
class ExtendedReal {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  ExtendedReal() : kind_(Kind::Finite), value_(kDefaultPrecisionBits) {}
  explicit ExtendedReal(Scalar v);
  static ExtendedReal pos_inf();
  static ExtendedReal neg_inf();
  static ExtendedReal parse(const std::string& text, long precision_bits);

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::Finite; }
  // Valid only when finite().
  const Scalar& value() const;
  std::string str() const;

  // Total order on the extended real line.
  static int compare(const ExtendedReal& a, const ExtendedReal& b);

 private:
  Kind kind_;
  Scalar value_;
};

// Verdict of a sign query measured against a relative tolerance band.
enum class Sign { Negative, Zero, Positive };

// Numeric environment threaded through every computation: working precision
// plus the tolerance band used to separate "zero" from a definite sign.
struct PrecisionContext {
  long precision_bits = kDefaultPrecisionBits;
  double rel_tolerance = 1e-10;
  double abs_floor = 1.0;

  PrecisionContext() = default;
  PrecisionContext(long bits, double rel_tol, double floor);

  // Throws std::invalid_argument unless precision_bits >= 64 and
  // rel_tolerance >= 2^(-precision_bits + 8).
  void validate() const;

  PrecisionContext with_precision(long bits) const;

  Scalar make(double x) const { return Scalar::of(x, precision_bits); }
  Scalar make_int(long x) const { return Scalar::of_int(x, precision_bits); }
  Scalar parse(const std::string& s) const { return Scalar::parse(s, precision_bits); }
};

// Classifies `value` as Negative/Zero/Positive, where Zero means
// |value| <= rel_tolerance * max(scale, abs_floor). `scale` should carry the
// magnitude of the quantities whose difference produced `value`.
Sign classify_sign(const Scalar& value, const Scalar& scale, const PrecisionContext& ctx);

// True when a and b agree within the tolerance band at their own scale.
bool approx_equal(const Scalar& a, const Scalar& b, const PrecisionContext& ctx);

// Throws OverflowError unless x is finite; `what` names the quantity.
void ensure_finite(const Scalar& x, const char* what);

// --- Deterministic sampling ------------------------------------------------

// splitmix64 step; the generator used for every random draw in the project.
// All derived real draws go through MPFR arithmetic on exact dyadic inputs, so
// sample streams are bit-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform integer in [0, n), n >= 1, via 128-bit multiply (no modulo bias in
  // any way that matters here, and fully deterministic).
  std::uint64_t below(std::uint64_t n);
  int int_in(int lo, int hi);  // inclusive bounds
  bool coin(double p = 0.5);

  // Uniform in [0,1): a 64-bit draw scaled by 2^-64 (exact).
  Scalar unit(const PrecisionContext& ctx);
  Scalar uniform(double lo, double hi, const PrecisionContext& ctx);
  // exp(uniform(log lo, log hi)); requires 0 < lo < hi.
  Scalar log_uniform(double lo, double hi, const PrecisionContext& ctx);
  // Uniform sign flip applied to a magnitude draw.
  Scalar symmetric(double magnitude, const PrecisionContext& ctx);

 private:
  std::uint64_t state_;
};

// Order-sensitive 64-bit combiner for seed derivation.
std::uint64_t mix64(std::uint64_t a, std::uint64_t b);
// FNV-1a over the bytes of `s`; stable across platforms.
std::uint64_t hash_str(const std::string& s);
// Seed for sample `index` of stream `stream_name` under a master seed.
std::uint64_t derive_seed(std::uint64_t master, const std::string& stream_name,
                          std::uint64_t index);

}  // namespace ineq
