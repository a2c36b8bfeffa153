#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "partclass/errors.hpp"
#include "partclass/numerics.hpp"

using namespace partclass;

namespace {

Real scaled_two(long e, const PrecisionContext& ctx) {
  Real out(1, ctx);
  mpfr_mul_2si(out.get(), out.get(), e, MPFR_RNDN);
  return out;
}

// sum_m (z/2)^{nu+2m} / (m! Gamma(nu+m+1)) with Gamma(nu+1) for nu = 1/2, 3/2 from sqrt(pi)
Real bessel_oracle(int twice_nu, const Real& z, const PrecisionContext& ctx) {
  const PrecisionContext wide(ctx.bits() + 80);
  Real half_z = z;
  half_z.set_precision(wide.bits());
  half_z = half_z / 2L;
  // Gamma(3/2) = sqrt(pi)/2, Gamma(5/2) = 3 sqrt(pi)/4
  Real gamma0 = sqrt(pi(wide)) / 2L;
  if (twice_nu == 3) gamma0 = gamma0 * 3L / 2L;
  const Real nu(mpq_class(twice_nu, 2), wide);
  Real term = pow(half_z, nu) / gamma0;
  Real sum = term;
  for (long m = 1; m < 2000; ++m) {
    term = term * half_z * half_z / (Real(m, wide) * (nu + Real(m, wide)));
    sum += term;
  }
  sum.set_precision(ctx.bits());
  return sum;
}

// t/(e^t - 1) = 1 / (sum_{j>=0} t^j/(j+1)!): invert the series exactly.
std::vector<mpq_class> bernoulli_by_series(long max_m) {
  std::vector<mpq_class> a(static_cast<std::size_t>(max_m) + 1);
  mpz_class factorial = 1;
  for (long j = 0; j <= max_m; ++j) {
    factorial *= j + 1;
    a[static_cast<std::size_t>(j)] = mpq_class(1, factorial);
  }
  std::vector<mpq_class> b(static_cast<std::size_t>(max_m) + 1);  // b_m = B_m / m!
  b[0] = 1;
  for (long m = 1; m <= max_m; ++m) {
    mpq_class acc = 0;
    for (long j = 1; j <= m; ++j) acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(m - j)];
    b[static_cast<std::size_t>(m)] = -acc;
  }
  mpz_class mf = 1;
  for (long m = 1; m <= max_m; ++m) {
    mf *= m;
    b[static_cast<std::size_t>(m)] *= mf;
  }
  return b;
}

}  // namespace

TEST_CASE("precision context") {
  CHECK_THROWS_AS(PrecisionContext(63), DomainError);
  CHECK(PrecisionContext(64).bits() == 64);
  CHECK(auto_precision_bits(0) == 256);
  CHECK(auto_precision_bits(1000) == 256);
  // ceil(pi sqrt(2e5/3) / log 2) + 64 = 1171 + 64
  CHECK(auto_precision_bits(100000) == 1235);
  CHECK(PrecisionContext::for_index(100000).bits() == 1235);
  CHECK(PrecisionContext(100).widened(28).bits() == 128);
}

TEST_CASE("parsing and formatting") {
  const PrecisionContext ctx(128);
  CHECK_THROWS_AS(Real::from_string("1.5x", ctx), FormatError);
  CHECK_THROWS_AS(Real::from_string("", ctx), FormatError);
  const Real x = Real::from_string("-0.810430531", ctx);
  CHECK(x.to_fixed(5, true) == "-0.81043");
  CHECK(x.to_fixed(5, false) == "-0.81043");
  CHECK(Real::from_string("1.0014275", ctx).to_fixed(5, true) == "1.00142");
  CHECK(Real::from_string("1.0014275", ctx).to_fixed(5, false) == "1.00143");
  CHECK(Real(12345, ctx).to_scientific(3) == "1.23e+04");
  CHECK(Real(mpq_class(7, 2), ctx).round_to_integer() == 4);
  CHECK(Real(mpq_class(-7, 2), ctx).round_to_integer() == -4);
}

TEST_CASE("arithmetic widens to the larger precision") {
  const Real a(1, PrecisionContext(64));
  const Real b(3, PrecisionContext(256));
  CHECK((a / b).precision() == 256);
  CHECK(relative_difference(Real(1, PrecisionContext(64)) / 3L * 3L, Real(1, PrecisionContext(64))) <=
        scaled_two(-60, PrecisionContext(64)));
}

TEST_CASE("roots of unity are exact at quarter turns") {
  const PrecisionContext ctx(128);
  const Complex i = root_of_unity(mpq_class(1, 4), ctx);
  CHECK(i.re.is_zero());
  CHECK(i.im == Real(1, ctx));
  const Complex minus_one = root_of_unity(mpq_class(7, 2), ctx);
  CHECK(minus_one.re == Real(-1, ctx));
  CHECK(minus_one.im.is_zero());
  CHECK(fractional_part(mpq_class(-1, 3)) == mpq_class(2, 3));
  const Complex w = root_of_unity(mpq_class(1, 3), ctx);
  CHECK(relative_difference(w.re, Real(mpq_class(-1, 2), ctx)) <= scaled_two(-120, ctx));
}

TEST_CASE("Bessel closed forms agree with the power series") {
  for (long bits : {64L, 128L, 256L}) {
    const PrecisionContext ctx(bits);
    const Real tol = scaled_two(-bits + 16, ctx);
    for (const mpq_class& zq : {mpq_class(1, 10), mpq_class(1), mpq_class(5), mpq_class(20)}) {
      const Real z(zq, ctx);
      CHECK(relative_difference(bessel_i_half(z, ctx), bessel_oracle(1, z, ctx)) <= tol);
      CHECK(relative_difference(bessel_i_three_half(z, ctx), bessel_oracle(3, z, ctx)) <= tol);
    }
  }
  const PrecisionContext ctx(128);
  // small argument: I_{3/2}(z) ~ (z/2)^{3/2} / Gamma(5/2)
  const Real tiny = scaled_two(-40, ctx);
  CHECK(relative_difference(bessel_i_three_half(tiny, ctx), bessel_oracle(3, tiny, ctx)) <= scaled_two(-112, ctx));
  CHECK_THROWS_AS(bessel_i_half(Real(0, ctx), ctx), DomainError);
  CHECK_THROWS_AS(bessel_i_three_half(Real(-1, ctx), ctx), DomainError);
}

TEST_CASE("Bernoulli numbers match t/(e^t - 1)") {
  const auto oracle = bernoulli_by_series(30);
  for (long m = 2; m <= 30; m += 2) CHECK(bernoulli(m) == oracle[static_cast<std::size_t>(m)]);
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  CHECK_THROWS_AS(bernoulli(3), DomainError);
  CHECK_THROWS_AS(bernoulli(0), DomainError);
}

TEST_CASE("Gamma functional equation and poles") {
  const PrecisionContext ctx(192);
  const Real tol = scaled_two(-192 + 8, ctx);
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> pick(0.5, 20.0);
  for (int i = 0; i < 100; ++i) {
    const Real x(mpq_class(pick(rng)), ctx);
    CHECK(relative_difference(gamma_fn(x + Real(1, ctx), ctx), x * gamma_fn(x, ctx)) <= tol);
  }
  CHECK_THROWS_AS(gamma_fn(Real(0, ctx), ctx), PoleError);
  CHECK_THROWS_AS(gamma_fn(Real(-3, ctx), ctx), PoleError);
  CHECK(reciprocal_gamma(Real(-3, ctx), ctx).is_zero());
  CHECK(relative_difference(reciprocal_gamma(Real(5, ctx), ctx), Real(mpq_class(1, 24), ctx)) <= tol);
}

TEST_CASE("results at p and 2p bits agree to p - 8 bits") {
  for (long p : {64L, 128L, 256L}) {
    const PrecisionContext lo(p), hi(2 * p);
    const Real tol = scaled_two(-(p - 8), hi);
    auto both = [&](auto f) { return relative_difference(f(lo), f(hi)) <= tol; };
    CHECK(both([](const PrecisionContext& c) { return exp(sqrt(Real(7, c))); }));
    CHECK(both([](const PrecisionContext& c) { return cot(pi(c) / 7L); }));
    CHECK(both([](const PrecisionContext& c) { return log(euler_gamma(c)); }));
    CHECK(both([](const PrecisionContext& c) { return gamma_fn(Real(mpq_class(13, 3), c), c); }));
    CHECK(both([](const PrecisionContext& c) { return bessel_i_three_half(Real(mpq_class(3, 7), c), c); }));
  }
}

TEST_CASE("log-domain main term") {
  const PrecisionContext ctx(256);
  const Real v = log_main_term(Real(800, ctx), Real(-3, ctx), ctx);  // e^797, beyond double range
  CHECK(v.is_finite());
  CHECK(relative_difference(log(v), Real(797, ctx)) <= scaled_two(-240, ctx));
}
