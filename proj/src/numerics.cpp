#include "ineq/numerics.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>

namespace ineq {

namespace {

long result_prec(const Scalar& a, const Scalar& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}

void check_not_nan(const Scalar& a, const Scalar& b, const char* op) {
  if (a.is_nan() || b.is_nan()) {
    throw OverflowError(std::string("non-finite operand in comparison: ") + op);
  }
}

}  // namespace

Scalar::Scalar(long precision_bits) { mpfr_init2(v_, precision_bits); }

Scalar::Scalar(const Scalar& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Scalar::Scalar(Scalar&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Scalar& Scalar::operator=(Scalar&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Scalar::~Scalar() { mpfr_clear(v_); }

Scalar Scalar::of(double x, long precision_bits) {
  Scalar s(precision_bits);
  mpfr_set_d(s.v_, x, MPFR_RNDN);
  return s;
}

Scalar Scalar::of_int(long x, long precision_bits) {
  Scalar s(precision_bits);
  mpfr_set_si(s.v_, x, MPFR_RNDN);
  return s;
}

Scalar Scalar::of_uint(unsigned long x, long precision_bits) {
  Scalar s(precision_bits);
  mpfr_set_ui(s.v_, x, MPFR_RNDN);
  return s;
}

Scalar Scalar::parse(const std::string& text, long precision_bits) {
  Scalar s(precision_bits);
  const char* begin = text.c_str();
  char* end = nullptr;
  mpfr_strtofr(s.v_, begin, &end, 10, MPFR_RNDN);
  if (end == begin || end != begin + text.size()) {
    throw std::invalid_argument("not a numeric literal: '" + text + "'");
  }
  return s;
}

long Scalar::precision() const { return mpfr_get_prec(v_); }
bool Scalar::is_nan() const { return mpfr_nan_p(v_) != 0; }
bool Scalar::is_inf() const { return mpfr_inf_p(v_) != 0; }
bool Scalar::is_finite() const { return mpfr_number_p(v_) != 0; }
bool Scalar::is_zero() const { return mpfr_zero_p(v_) != 0; }

int Scalar::sgn() const {
  if (is_nan()) throw OverflowError("sign of nan");
  return mpfr_sgn(v_);
}

double Scalar::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Scalar::decimal(int significant_digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  // Render -0 as 0 so that algebraically-zero results print one way.
  if (is_zero()) {
    mpfr_t z;
    mpfr_init2(z, precision());
    mpfr_set_ui(z, 0, MPFR_RNDN);
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Re", significant_digits - 1, z);
    std::string r(out);
    mpfr_free_str(out);
    mpfr_clear(z);
    return r;
  }
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*Re", significant_digits - 1, v_);
  std::string r(out);
  mpfr_free_str(out);
  return r;
}

std::string Scalar::compact() const {
  if (is_nan()) return "nan";
  if (is_inf()) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (is_zero()) return "0";
  char* out = nullptr;
  mpfr_asprintf(&out, "%.15Rg", v_);
  std::string r(out);
  mpfr_free_str(out);
  return r;
}

#define INEQ_BINOP(opname, fn)                                  \
  Scalar opname(const Scalar& a, const Scalar& b) {             \
    Scalar r(result_prec(a, b));                                \
    fn(r.get(), a.get(), b.get(), MPFR_RNDN);                   \
    return r;                                                   \
  }

INEQ_BINOP(operator+, mpfr_add)
INEQ_BINOP(operator-, mpfr_sub)
INEQ_BINOP(operator*, mpfr_mul)
INEQ_BINOP(operator/, mpfr_div)

#undef INEQ_BINOP

Scalar operator-(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

bool operator<(const Scalar& a, const Scalar& b) {
  check_not_nan(a, b, "<");
  return mpfr_cmp(a.get(), b.get()) < 0;
}
bool operator<=(const Scalar& a, const Scalar& b) {
  check_not_nan(a, b, "<=");
  return mpfr_cmp(a.get(), b.get()) <= 0;
}
bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }
bool operator==(const Scalar& a, const Scalar& b) {
  check_not_nan(a, b, "==");
  return mpfr_cmp(a.get(), b.get()) == 0;
}
bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

Scalar abs_scalar(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Scalar max_scalar(const Scalar& a, const Scalar& b) {
  check_not_nan(a, b, "max");
  Scalar r(result_prec(a, b));
  mpfr_max(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Scalar min_scalar(const Scalar& a, const Scalar& b) {
  check_not_nan(a, b, "min");
  Scalar r(result_prec(a, b));
  mpfr_min(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Scalar sqrt_scalar(const Scalar& a) {
  if (a.sgn() < 0) throw NonPositiveBaseError("sqrt of negative value");
  Scalar r(a.precision());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Scalar exp_scalar(const Scalar& a) {
  Scalar r(a.precision());
  mpfr_exp(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Scalar log_scalar(const Scalar& a) {
  if (a.is_nan() || a.sgn() <= 0) {
    throw NonPositiveBaseError("log requires a positive argument, got " + a.compact());
  }
  Scalar r(a.precision());
  mpfr_log(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Scalar pow_scalar(const Scalar& base, const Scalar& exponent) {
  if (base.is_nan() || exponent.is_nan()) {
    throw OverflowError("pow with nan operand");
  }
  const int bs = mpfr_sgn(base.get());
  if (bs < 0 || (bs == 0 && !(exponent.sgn() > 0))) {
    throw NonPositiveBaseError("pow requires base > 0 (or base = 0 with exponent > 0), got base=" +
                               base.compact() + " exponent=" + exponent.compact());
  }
  Scalar r(result_prec(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  if (r.is_nan() || r.is_inf()) {
    throw OverflowError("pow overflow: base=" + base.compact() +
                        " exponent=" + exponent.compact());
  }
  return r;
}

ExtendedReal::ExtendedReal(Scalar v) : kind_(Kind::Finite), value_(std::move(v)) {
  if (!value_.is_finite()) {
    kind_ = value_.is_inf() && value_.sgn() > 0 ? Kind::PosInf : Kind::NegInf;
    if (value_.is_nan()) throw OverflowError("extended real from nan");
  }
}

ExtendedReal ExtendedReal::pos_inf() {
  ExtendedReal e;
  e.kind_ = Kind::PosInf;
  return e;
}

ExtendedReal ExtendedReal::neg_inf() {
  ExtendedReal e;
  e.kind_ = Kind::NegInf;
  return e;
}

ExtendedReal ExtendedReal::parse(const std::string& text, long precision_bits) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtendedReal(Scalar::parse(text, precision_bits));
}

const Scalar& ExtendedReal::value() const {
  if (!finite()) throw std::logic_error("value() on infinite ExtendedReal");
  return value_;
}

std::string ExtendedReal::str() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    default: return value_.compact();
  }
}

int ExtendedReal::compare(const ExtendedReal& a, const ExtendedReal& b) {
  auto rank = [](Kind k) { return k == Kind::NegInf ? -1 : (k == Kind::PosInf ? 1 : 0); };
  const int ra = rank(a.kind_), rb = rank(b.kind_);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (ra != 0) return 0;
  if (a.value_ < b.value_) return -1;
  if (b.value_ < a.value_) return 1;
  return 0;
}

PrecisionContext::PrecisionContext(long bits, double rel_tol, double floor)
    : precision_bits(bits), rel_tolerance(rel_tol), abs_floor(floor) {
  validate();
}

void PrecisionContext::validate() const {
  if (precision_bits < 64) {
    throw std::invalid_argument("precision_bits must be >= 64");
  }
  if (!(abs_floor > 0)) {
    throw std::invalid_argument("abs_floor must be positive");
  }
  // rel_tolerance must dominate representation error with headroom:
  // rel_tolerance >= 2^(-precision_bits + 8).
  const double min_tol = std::ldexp(1.0, static_cast<int>(-std::min<long>(precision_bits, 1000)) + 8);
  if (!(rel_tolerance >= min_tol)) {
    throw std::invalid_argument("rel_tolerance too small for the working precision");
  }
}

PrecisionContext PrecisionContext::with_precision(long bits) const {
  PrecisionContext c = *this;
  c.precision_bits = bits;
  c.validate();
  return c;
}

Sign classify_sign(const Scalar& value, const Scalar& scale, const PrecisionContext& ctx) {
  if (value.is_nan() || scale.is_nan()) throw OverflowError("classify_sign with nan input");
  Scalar threshold =
      Scalar::of(ctx.rel_tolerance, ctx.precision_bits) *
      max_scalar(abs_scalar(scale), Scalar::of(ctx.abs_floor, ctx.precision_bits));
  if (abs_scalar(value) <= threshold) return Sign::Zero;
  return value.sgn() > 0 ? Sign::Positive : Sign::Negative;
}

bool approx_equal(const Scalar& a, const Scalar& b, const PrecisionContext& ctx) {
  return classify_sign(a - b, max_scalar(abs_scalar(a), abs_scalar(b)), ctx) == Sign::Zero;
}

void ensure_finite(const Scalar& x, const char* what) {
  if (!x.is_finite()) {
    throw OverflowError(std::string(what) + " is non-finite (" + x.compact() + ")");
  }
}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n)) >> 64);
}

int Rng::int_in(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::coin(double p) {
  // Threshold comparison on the raw 64-bit draw; ldexp is exact so the
  // threshold is identical everywhere.
  const double t = std::ldexp(p, 64);
  const double draw = static_cast<double>(next());
  return draw < t;
}

Scalar Rng::unit(const PrecisionContext& ctx) {
  Scalar u = Scalar::of_uint(next(), ctx.precision_bits);
  mpfr_mul_2si(u.get(), u.get(), -64, MPFR_RNDN);  // exact
  return u;
}

Scalar Rng::uniform(double lo, double hi, const PrecisionContext& ctx) {
  Scalar u = unit(ctx);
  Scalar a = Scalar::of(lo, ctx.precision_bits);
  Scalar b = Scalar::of(hi, ctx.precision_bits);
  return a + u * (b - a);
}

Scalar Rng::log_uniform(double lo, double hi, const PrecisionContext& ctx) {
  if (!(0 < lo && lo < hi)) throw std::invalid_argument("log_uniform requires 0 < lo < hi");
  Scalar la = log_scalar(Scalar::of(lo, ctx.precision_bits));
  Scalar lb = log_scalar(Scalar::of(hi, ctx.precision_bits));
  Scalar u = unit(ctx);
  return exp_scalar(la + u * (lb - la));
}

Scalar Rng::symmetric(double magnitude, const PrecisionContext& ctx) {
  Scalar m = uniform(0.0, magnitude, ctx);
  return coin() ? m : -m;
}

std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_str(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, const std::string& stream_name,
                          std::uint64_t index) {
  return mix64(mix64(master, hash_str(stream_name)), index);
}

}  // namespace ineq
