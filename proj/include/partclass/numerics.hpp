#pragma once

// Arbitrary-precision real and complex arithmetic on top of MPFR, together
// with the special functions needed by the asymptotic evaluators.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace partclass {

/// Binary working precision for a computation. Always at least 64 bits.
class PrecisionContext {
 public:
  static constexpr long kMinBits = 64;

  explicit PrecisionContext(long bits);

  /// max(256, ceil(pi*sqrt(2n/3)/ln 2) + 64): the size of the main terms in
  /// bits plus 64 guard bits for ratios against exact values.
  static PrecisionContext for_index(long n);

  long bits() const noexcept { return bits_; }

  /// A context with `extra` additional bits, used for internal guard digits.
  PrecisionContext widened(long extra) const { return PrecisionContext(bits_ + extra); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  long bits_;
};

long auto_precision_bits(long n);

/// Real number with its own MPFR mantissa. Binary operations produce a
/// result at the larger of the two operand precisions; rounding is to
/// nearest throughout.
class Real {
 public:
  explicit Real(const PrecisionContext& ctx);
  Real(long value, const PrecisionContext& ctx);
  Real(const mpz_class& value, const PrecisionContext& ctx);
  Real(const mpq_class& value, const PrecisionContext& ctx);
  static Real from_string(std::string_view decimal, const PrecisionContext& ctx);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const noexcept { return static_cast<long>(mpfr_get_prec(value_)); }
  PrecisionContext context() const { return PrecisionContext(precision()); }

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  /// Rounds this value to `bits` of precision (up or down).
  Real& set_precision(long bits);

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real operator-() const;

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  bool is_integer() const noexcept { return mpfr_integer_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer.
  mpz_class round_to_integer() const;

  /// Scientific notation with `digits` significant digits, e.g. "4.318e+352".
  std::string to_scientific(int digits) const;
  /// Fixed-point notation with `decimals` digits after the point. When
  /// `truncate` is set the value is cut toward zero instead of rounded.
  std::string to_fixed(int decimals, bool truncate = false) const;

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);
Real operator*(Real a, long b);
Real operator/(Real a, long b);

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real cot(const Real& x);
Real abs(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);

/// Relative distance |a-b| / max(|a|,|b|); zero when both are zero.
Real relative_difference(const Real& a, const Real& b);

/// Complex value as a pair of reals.
struct Complex {
  Real re;
  Real im;

  explicit Complex(const PrecisionContext& ctx) : re(ctx), im(ctx) {}
  Complex(Real re_part, Real im_part) : re(std::move(re_part)), im(std::move(im_part)) {}

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Real& rhs);
  Complex operator-() const { return Complex(-re, -im); }

  Complex conj() const { return Complex(re, -im); }
  Real norm_squared() const { return re * re + im * im; }
  Real abs() const { return sqrt(norm_squared()); }
  /// Multiplication by i.
  Complex times_i() const { return Complex(-im, re); }
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator*(Complex a, const Real& b);
Complex operator/(Complex a, const Real& b);

/// exp(2*pi*i*t) for an exact rational t; t is reduced mod 1 before any
/// rounding so large numerators lose no precision.
Complex root_of_unity(const mpq_class& t, const PrecisionContext& ctx);

/// Reduces a rational into [0, 1).
mpq_class fractional_part(const mpq_class& t);

Real pi(const PrecisionContext& ctx);
Real euler_gamma(const PrecisionContext& ctx);

/// Gamma(x). Throws PoleError at 0, -1, -2, ...
Real gamma_fn(const Real& x, const PrecisionContext& ctx);
/// 1/Gamma(x), which is 0 at the poles of Gamma.
Real reciprocal_gamma(const Real& x, const PrecisionContext& ctx);

/// Exact Bernoulli number B_m for even m >= 2. Throws DomainError otherwise.
mpq_class bernoulli(long m);

/// I_{1/2}(z) = sqrt(2/(pi z)) sinh z, z > 0.
Real bessel_i_half(const Real& z, const PrecisionContext& ctx);
/// I_{3/2}(z) = sqrt(2/(pi z)) (cosh z - sinh z / z), z > 0.
Real bessel_i_three_half(const Real& z, const PrecisionContext& ctx);

/// exp(exp_arg + prefactor_log) without an intermediate in double range.
Real log_main_term(const Real& exp_arg, const Real& prefactor_log, const PrecisionContext& ctx);

}  // namespace partclass
