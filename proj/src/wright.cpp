#include "partclass/wright.hpp"

#include <string>

#include "partclass/errors.hpp"

namespace partclass {

namespace {

constexpr long kGuardBits = 32;

Real rounded(Real x, const PrecisionContext& ctx) { return std::move(x.set_precision(ctx.bits())); }

Real widened(const Real& x, const PrecisionContext& wide) {
  Real out = x;
  if (out.precision() < wide.bits()) out.set_precision(wide.bits());
  return out;
}

// sign(value) * exp(exponent + log|value|)
Real scaled_exponential(const Real& value, const Real& exponent, const PrecisionContext& ctx) {
  if (value.is_zero()) return Real(ctx);
  Real out = log_main_term(exponent, log(abs(value)), ctx);
  return value.sign() < 0 ? -out : out;
}

}  // namespace

void MajorArcProfile::validate() const {
  if (beta.sign() < 0) throw ShapeError("profile: beta must be >= 0");
  if (!(c.sign() > 0)) throw ShapeError("profile: c must be > 0");
  if (!(gamma_bound > c * c)) throw ShapeError("profile: gamma must exceed c^2");
}

Real w_coeff(long s, long r, const MajorArcProfile& profile, const PrecisionContext& ctx) {
  if (s < 0 || r < 0) throw DomainError("w_coeff: s and r must be >= 0");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const Real c = widened(profile.c, wide);
  const Real shift = Real(s, wide) + widened(profile.beta, wide) - widened(profile.B, wide);  // s + beta - B
  const Real half(mpq_class(1, 2), wide);
  const Real three_halves(mpq_class(3, 2), wide);

  const Real numerator_arg = shift + Real(r, wide) + three_halves;
  const Real denominator_arg = shift - Real(r, wide) + three_halves;
  const Real numerator_gamma = gamma_fn(numerator_arg, wide);  // PoleError propagates
  const Real inv_denominator = reciprocal_gamma(denominator_arg, wide);
  if (inv_denominator.is_zero()) return Real(ctx);

  Real r_factorial(1, wide);
  for (long j = 2; j <= r; ++j) r_factorial *= j;

  Real out = pow(c, shift + half) / (pow(c * -4L, r) * 2L * sqrt(pi(wide)));
  out *= numerator_gamma * inv_denominator / r_factorial;
  return rounded(std::move(out), ctx);
}

Real p_coeff(long r, const MajorArcProfile& profile, const PrecisionContext& ctx) {
  if (r < 0) throw DomainError("p_coeff: r must be >= 0");
  if (static_cast<long>(profile.alphas.size()) <= r) {
    throw IndexError("p_coeff: profile has alphas up to index " + std::to_string(profile.alphas.size()) +
                     " - 1, index " + std::to_string(r) + " needed");
  }
  const PrecisionContext wide = ctx.widened(kGuardBits);
  Real acc(wide);
  for (long s = 0; s <= r; ++s) {
    acc += widened(profile.alphas[static_cast<std::size_t>(s)], wide) * w_coeff(s, r - s, profile, wide);
  }
  return rounded(std::move(acc), ctx);
}

Real wright_poly_expand(const MajorArcProfile& profile, long n, long terms, const PrecisionContext& ctx) {
  if (profile.kind != ProfileKind::Polynomial) throw KindError("wright_poly_expand needs a polynomial-type profile");
  if (n < 1) throw DomainError("wright_poly_expand: n must be >= 1");
  if (terms < 1) throw DomainError("wright_poly_expand: M must be >= 1");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const Real nn(n, wide);
  const Real inv_root = Real(1, wide) / sqrt(nn);

  Real series(wide);
  Real power(1, wide);
  for (long r = 0; r < terms; ++r) {
    series += p_coeff(r, profile, wide) * power;
    power *= inv_root;
  }
  const Real c = widened(profile.c, wide);
  const Real exponent_of_n =
      (widened(profile.B, wide) * 2L - widened(profile.beta, wide) * 2L - Real(3, wide)) / 4L;
  const Real exponent = c * 2L * sqrt(nn) + exponent_of_n * log(nn);
  return rounded(scaled_exponential(series, exponent, wide), ctx);
}

Real wright_log_leading(const MajorArcProfile& profile, long n, const PrecisionContext& ctx) {
  if (profile.kind != ProfileKind::Logarithmic) throw KindError("wright_log_leading needs a logarithmic-type profile");
  if (n < 1) throw DomainError("wright_log_leading: n must be >= 1");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  if (widened(profile.B, wide) - widened(profile.beta, wide) != Real(mpq_class(1, 2), wide)) {
    throw ShapeError("wright_log_leading requires B - beta = 1/2");
  }
  if (profile.alphas.empty()) throw IndexError("wright_log_leading: profile has no alpha_0");
  const Real nn(n, wide);
  const Real c = widened(profile.c, wide);
  const Real bracket = log(nn) - log(c) * 2L;
  const Real coefficient = -(widened(profile.alphas[0], wide) / (sqrt(pi(wide)) * 4L)) * bracket;
  const Real exponent = c * 2L * sqrt(nn) - log(nn) / 2L;
  return rounded(scaled_exponential(coefficient, exponent, wide), ctx);
}

mpq_class s0_bernoulli_term(long m, long modulus) {
  if (m < 1) throw DomainError("s0_bernoulli_term: m must be >= 1");
  const mpq_class b = bernoulli(2 * m);
  mpz_class factorial = 1;
  for (long j = 2; j <= 2 * m; ++j) factorial *= j;
  mpz_class n_power;
  mpz_pow_ui(n_power.get_mpz_t(), mpz_class(modulus).get_mpz_t(), static_cast<unsigned long>(2 * m));
  mpq_class out = b * b * mpq_class(n_power) / mpq_class(factorial * (2 * m));
  out.canonicalize();
  return out;
}

namespace {

// Cauchy product of `raw` with e^{-s/24} = sum (-1/24)^j / j! s^j, truncated to raw.size().
std::vector<Real> times_shift_exponential(const std::vector<Real>& raw, const PrecisionContext& ctx) {
  std::vector<Real> shift;
  Real term(1, ctx);
  for (std::size_t j = 0; j < raw.size(); ++j) {
    shift.push_back(term);
    term = term / -24L / static_cast<long>(j + 1);
  }
  std::vector<Real> out;
  for (std::size_t l = 0; l < raw.size(); ++l) {
    Real acc(ctx);
    for (std::size_t j = 0; j <= l; ++j) acc += raw[l - j] * shift[j];
    out.push_back(std::move(acc));
  }
  return out;
}

Real xi_beta(const PrecisionContext& ctx) { return Real(mpq_class(1, 2), ctx); }
Real xi_c(const PrecisionContext& ctx) { return pi(ctx) / sqrt(Real(6, ctx)); }
Real xi_gamma(const PrecisionContext& ctx) {
  const Real p = pi(ctx);
  return p * p * 4L;
}

}  // namespace

std::pair<MajorArcProfile, MajorArcProfile> s0_profile(long modulus, long order, const PrecisionContext& ctx) {
  if (modulus < 1) throw DomainError("s0_profile: N must be >= 1");
  if (order < 0) throw DomainError("s0_profile: order must be >= 0");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const Real norm = Real(1, wide) / (Real(modulus, wide) * sqrt(pi(wide) * 2L));  // 1/(N sqrt(2 pi))
  const auto size = static_cast<std::size_t>(order) + 1;

  std::vector<Real> log_raw(size, Real(wide));
  log_raw[0] = -norm;

  std::vector<Real> poly_raw(size, Real(wide));
  poly_raw[0] = (euler_gamma(wide) - log(Real(modulus, wide))) * norm;
  if (order >= 1) poly_raw[1] = norm * Real(mpq_class(modulus, 4), wide);
  for (long m = 1; 2 * m <= order; ++m) {
    poly_raw[static_cast<std::size_t>(2 * m)] = norm * Real(s0_bernoulli_term(m, modulus), wide);
  }

  auto finish = [&](std::vector<Real> raw) {
    std::vector<Real> alphas = times_shift_exponential(raw, wide);
    for (Real& a : alphas) a.set_precision(ctx.bits());
    return alphas;
  };
  MajorArcProfile log_part{ProfileKind::Logarithmic, Real(1, ctx), finish(std::move(log_raw)),
                           rounded(xi_beta(wide), ctx), rounded(xi_c(wide), ctx), rounded(xi_gamma(wide), ctx)};
  MajorArcProfile poly_part{ProfileKind::Polynomial, Real(1, ctx), finish(std::move(poly_raw)),
                            rounded(xi_beta(wide), ctx), rounded(xi_c(wide), ctx), rounded(xi_gamma(wide), ctx)};
  log_part.validate();
  poly_part.validate();
  return {std::move(log_part), std::move(poly_part)};
}

MajorArcProfile partition_profile(long order, const PrecisionContext& ctx) {
  if (order < 0) throw DomainError("partition_profile: order must be >= 0");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  std::vector<Real> raw(static_cast<std::size_t>(order) + 1, Real(wide));
  raw[0] = Real(1, wide) / sqrt(pi(wide) * 2L);
  std::vector<Real> alphas = times_shift_exponential(raw, wide);
  for (Real& a : alphas) a.set_precision(ctx.bits());
  MajorArcProfile profile{ProfileKind::Polynomial, Real(0, ctx), std::move(alphas),
                          rounded(xi_beta(wide), ctx), rounded(xi_c(wide), ctx), rounded(xi_gamma(wide), ctx)};
  profile.validate();
  return profile;
}

ZeroClassAsymptotic theorem2_main(long n, long modulus, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("theorem2_main: n must be >= 1");
  if (modulus < 1) throw DomainError("theorem2_main: N must be >= 1");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const Real nn(n, wide);
  const Real big_n(modulus, wide);
  const Real p = pi(wide);

  Real log_factor = log(nn) - log(p * p / 6L) + euler_gamma(wide) * 2L - log(big_n) * 2L;
  const Real exponent = p * 2L * sqrt(nn / 6L);
  const Real prefactor_log = -(log(nn) / 2L) - log(p * 4L * big_n * sqrt(Real(2, wide)));
  Real prefactor = log_main_term(exponent, prefactor_log, wide);
  Real value = prefactor * log_factor;
  return ZeroClassAsymptotic{n, modulus, rounded(std::move(log_factor), ctx), rounded(std::move(prefactor), ctx),
                             rounded(std::move(value), ctx)};
}

Real theorem2_engine(long n, long modulus, const PrecisionContext& ctx) {
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const auto [log_part, poly_part] = s0_profile(modulus, 1, wide);
  Real out = wright_log_leading(log_part, n, wide) + wright_poly_expand(poly_part, n, 1, wide);
  return rounded(std::move(out), ctx);
}

Real qn_ratio(long n, long modulus, const PrecisionContext& ctx, const PartitionTable& table) {
  const ZeroClassAsymptotic main = theorem2_main(n, modulus, ctx);
  return Real(zero_class_exact(n, static_cast<int>(modulus), table), ctx) / main.value;
}

}  // namespace partclass
