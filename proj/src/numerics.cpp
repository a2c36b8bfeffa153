#include "partclass/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "partclass/errors.hpp"

namespace partclass {

namespace {

constexpr long kGuardBits = 16;

mpfr_prec_t max_prec(const Real& a, const Real& b) {
  return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}

// Raises the precision of `target` (keeping its value) if `other` is wider.
void widen_to(Real& target, const Real& other) {
  if (other.precision() > target.precision()) target.set_precision(other.precision());
}

std::string take_mpfr_string(char* raw) {
  if (raw == nullptr) throw ResourceError("mpfr_asprintf failed");
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

}  // namespace

PrecisionContext::PrecisionContext(long bits) : bits_(bits) {
  if (bits < kMinBits) throw DomainError("precision must be at least 64 bits, got " + std::to_string(bits));
  if (bits > static_cast<long>(MPFR_PREC_MAX)) throw ResourceError("precision exceeds MPFR_PREC_MAX");
}

long auto_precision_bits(long n) {
  if (n < 1) return 256;
  const double magnitude = M_PI * std::sqrt(2.0 * static_cast<double>(n) / 3.0) / std::log(2.0);
  return std::max(256L, static_cast<long>(std::ceil(magnitude)) + 64);
}

PrecisionContext PrecisionContext::for_index(long n) { return PrecisionContext(auto_precision_bits(n)); }

// ---------------------------------------------------------------------------
// Real

Real::Real(const PrecisionContext& ctx) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(ctx.bits()));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, const PrecisionContext& ctx) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(ctx.bits()));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, const PrecisionContext& ctx) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(ctx.bits()));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, const PrecisionContext& ctx) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(ctx.bits()));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real Real::from_string(std::string_view decimal, const PrecisionContext& ctx) {
  Real out(ctx);
  const std::string text(decimal);
  char* end = nullptr;
  mpfr_strtofr(out.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0') {
    throw FormatError("not a decimal number: '" + text + "'");
  }
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real& Real::set_precision(long bits) {
  mpfr_prec_round(value_, static_cast<mpfr_prec_t>(bits), MPFR_RNDN);
  return *this;
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(*this, rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(*this, rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(*this, rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(*this, rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

mpz_class Real::round_to_integer() const {
  if (!is_finite()) throw DomainError("cannot round a non-finite value");
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDN);
  return out;
}

std::string Real::to_scientific(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", std::max(0, digits - 1), value_);
  return take_mpfr_string(raw);
}

std::string Real::to_fixed(int decimals, bool truncate) const {
  char* raw = nullptr;
  if (truncate) {
    mpfr_asprintf(&raw, "%.*RZf", decimals, value_);
  } else {
    mpfr_asprintf(&raw, "%.*RNf", decimals, value_);
  }
  return take_mpfr_string(raw);
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }
Real operator*(Real a, long b) { return a *= b; }
Real operator/(Real a, long b) { return a /= b; }

#define PARTCLASS_UNARY(name, fn)            \
  Real name(const Real& x) {                 \
    Real out(x.context());                   \
    fn(out.get(), x.get(), MPFR_RNDN);       \
    return out;                              \
  }

PARTCLASS_UNARY(sqrt, mpfr_sqrt)
PARTCLASS_UNARY(exp, mpfr_exp)
PARTCLASS_UNARY(log, mpfr_log)
PARTCLASS_UNARY(sinh, mpfr_sinh)
PARTCLASS_UNARY(cosh, mpfr_cosh)
PARTCLASS_UNARY(sin, mpfr_sin)
PARTCLASS_UNARY(cos, mpfr_cos)
PARTCLASS_UNARY(cot, mpfr_cot)
PARTCLASS_UNARY(abs, mpfr_abs)

#undef PARTCLASS_UNARY

Real pow(const Real& base, const Real& exponent) {
  Real out(PrecisionContext(max_prec(base, exponent)));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out(base.context());
  mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
  return out;
}

Real relative_difference(const Real& a, const Real& b) {
  Real scale = std::max(abs(a), abs(b));
  if (scale.is_zero()) return Real(PrecisionContext(max_prec(a, b)));
  return abs(a - b) / scale;
}

// ---------------------------------------------------------------------------
// Complex

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real new_re = re * rhs.re - im * rhs.im;
  Real new_im = re * rhs.im + im * rhs.re;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Real& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator*(Complex a, const Real& b) { return a *= b; }
Complex operator/(Complex a, const Real& b) { return a /= b; }

mpq_class fractional_part(const mpq_class& t) {
  mpz_class floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  mpq_class out = t - mpq_class(floor_value);
  out.canonicalize();
  return out;
}

Complex root_of_unity(const mpq_class& t, const PrecisionContext& ctx) {
  const mpq_class reduced = fractional_part(t);
  // Exact values at the quarter points keep real quantities exactly real.
  if (reduced == 0) return Complex(Real(1, ctx), Real(ctx));
  if (reduced == mpq_class(1, 4)) return Complex(Real(ctx), Real(1, ctx));
  if (reduced == mpq_class(1, 2)) return Complex(Real(-1, ctx), Real(ctx));
  if (reduced == mpq_class(3, 4)) return Complex(Real(ctx), Real(-1, ctx));
  const PrecisionContext wide = ctx.widened(kGuardBits);
  Real angle = pi(wide) * Real(reduced, wide) * 2L;
  Real c(wide);
  Real s(wide);
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  c.set_precision(ctx.bits());
  s.set_precision(ctx.bits());
  return Complex(std::move(c), std::move(s));
}

// ---------------------------------------------------------------------------
// Constants and special functions

Real pi(const PrecisionContext& ctx) {
  Real out(ctx);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real euler_gamma(const PrecisionContext& ctx) {
  Real out(ctx);
  mpfr_const_euler(out.get(), MPFR_RNDN);
  return out;
}

namespace {

bool is_nonpositive_integer(const Real& x) { return x.is_integer() && x.sign() <= 0; }

}  // namespace

Real gamma_fn(const Real& x, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("Gamma has a pole at " + x.to_scientific(20));
  }
  Real out(ctx);
  mpfr_gamma(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real reciprocal_gamma(const Real& x, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(x)) return Real(ctx);
  Real out(ctx);
  mpfr_gamma(out.get(), x.get(), MPFR_RNDN);
  mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

mpq_class bernoulli(long m) {
  if (m < 2 || m % 2 != 0) {
    throw DomainError("bernoulli: index must be even and >= 2, got " + std::to_string(m));
  }
  // sum_{j=0}^{k} C(k+1, j) B_j = 0 for k >= 1.
  std::vector<mpq_class> b(static_cast<std::size_t>(m) + 1);
  b[0] = 1;
  for (long k = 1; k <= m; ++k) {
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(k+1, j), starting at j = 0
    for (long j = 0; j < k; ++j) {
      acc += binom * b[static_cast<std::size_t>(j)];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(k)] = -acc / mpq_class(k + 1);
    b[static_cast<std::size_t>(k)].canonicalize();
  }
  return b[static_cast<std::size_t>(m)];
}

namespace {

// Extra bits lost to cancellation in cosh z - sinh z / z ~ z^2/3 for small z.
long small_argument_guard(const Real& z) {
  const long e = static_cast<long>(mpfr_get_exp(z.get()));
  return e < 0 ? -2 * e + 4 : 0;
}

void require_positive(const Real& z, const char* what) {
  if (!(z.sign() > 0) || !z.is_finite()) {
    throw DomainError(std::string(what) + ": argument must be positive, got " + z.to_scientific(12));
  }
}

}  // namespace

Real bessel_i_half(const Real& z, const PrecisionContext& ctx) {
  require_positive(z, "bessel_i_half");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  Real zw = z;
  zw.set_precision(wide.bits());
  Real out = sqrt(Real(2, wide) / (pi(wide) * zw)) * sinh(zw);
  return out.set_precision(ctx.bits());
}

Real bessel_i_three_half(const Real& z, const PrecisionContext& ctx) {
  require_positive(z, "bessel_i_three_half");
  const PrecisionContext wide = ctx.widened(kGuardBits + small_argument_guard(z));
  Real zw = z;
  zw.set_precision(wide.bits());
  Real bracket = cosh(zw) - sinh(zw) / zw;
  Real out = sqrt(Real(2, wide) / (pi(wide) * zw)) * bracket;
  return out.set_precision(ctx.bits());
}

Real log_main_term(const Real& exp_arg, const Real& prefactor_log, const PrecisionContext& ctx) {
  const PrecisionContext wide = ctx.widened(kGuardBits);
  Real sum(wide);
  mpfr_add(sum.get(), exp_arg.get(), prefactor_log.get(), MPFR_RNDN);
  Real out = exp(sum);
  return out.set_precision(ctx.bits());
}

}  // namespace partclass
