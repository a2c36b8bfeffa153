#include "partclass/rademacher.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "partclass/errors.hpp"

namespace partclass {

namespace {

constexpr long kGuardBits = 32;

void require_unit_residue(long r, long modulus, const char* what) {
  if (modulus < 3) throw DomainError(std::string(what) + ": need N >= 3");
  if (r < 1 || r >= modulus) throw DomainError(std::string(what) + ": need 1 <= r < N");
  if (gcd(r, modulus) != 1) {
    throw DomainError(std::string(what) + ": gcd(" + std::to_string(r) + ", " + std::to_string(modulus) + ") != 1");
  }
}

// n - 1/24 as an exact rational.
mpq_class shifted_index(long n) {
  mpq_class m(24 * n - 1, 24);
  m.canonicalize();
  return m;
}

// Phase of exp(pi i s(h,k) - 2 pi i n h / k), in turns.
mpq_class kloosterman_turns(long h, long k, long n) {
  mpq_class t = dedekind_sum(h, k) / 2 - mpq_class(n % k * h % k, k);
  return fractional_part(t);
}

}  // namespace

CuspData CuspData::make(long h, long k) {
  if (k < 1) throw DomainError("cusp: k must be >= 1");
  if (k == 1) {
    if (h != 0 && h != 1) throw DomainError("cusp: for k = 1 only h = 0 is allowed");
    return CuspData{0, 1, 1};
  }
  if (h < 0 || h >= k) throw DomainError("cusp: need 0 <= h < k");
  if (gcd(h, k) != 1) throw DomainError("cusp: gcd(h, k) must be 1");
  // H = -h^{-1} mod k, represented in [1, k]
  long H = reduce_mod(-mod_inverse(h, k), k);
  if (H == 0) H = k;
  return CuspData{h, k, H};
}

long CuspData::upper_right() const {
  const __int128 num = static_cast<__int128>(h) * H + 1;
  if (num % k != 0) throw std::logic_error("cusp: hH + 1 not divisible by k");
  return static_cast<long>(num / k);
}

mpq_class dedekind_sum(long h, long k) {
  if (k < 1) throw DomainError("dedekind_sum: k must be >= 1");
  if (gcd(reduce_mod(h, k), k) != 1) {
    throw DomainError("dedekind_sum: gcd(" + std::to_string(h) + ", " + std::to_string(k) + ") != 1");
  }
  const long hh = reduce_mod(h, k);
  // s = sum r (2 (hr mod k) - k) / (2 k^2)
  __int128 acc = 0;
  for (long r = 1; r < k; ++r) {
    const long frac = static_cast<long>(static_cast<__int128>(hh) * r % k);
    acc += static_cast<__int128>(r) * (2 * frac - k);
  }
  mpz_class num;
  const bool negative = acc < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-acc) : static_cast<unsigned __int128>(acc);
  num = static_cast<unsigned long>(mag >> 64);
  num <<= 64;
  num += static_cast<unsigned long>(mag & ~static_cast<unsigned long>(0));
  if (negative) num = -num;
  mpq_class out(num, mpz_class(2) * k * k);
  out.canonicalize();
  return out;
}

Complex kloosterman_A(long k, long n, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("kloosterman_A: k must be >= 1");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  Complex acc(wide);
  for (long h = 0; h < k; ++h) {
    if (gcd(h, k) != 1) continue;
    acc += root_of_unity(kloosterman_turns(h, k, n), wide);
  }
  acc.re.set_precision(ctx.bits());
  acc.im.set_precision(ctx.bits());
  return acc;
}

Real p_rademacher(long n, long truncation, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("p_rademacher: n must be >= 1");
  if (truncation < 1) throw DomainError("p_rademacher: K must be >= 1");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const Real base(24 * n - 1, wide);
  const Real root = sqrt(base);
  const Real pi_w = pi(wide);
  Real sum(wide);
  for (long k = 1; k <= truncation; ++k) {
    const Real a = require_real(kloosterman_A(k, n, wide), wide, "A_k(n)");
    if (a.is_zero()) continue;
    const Real z = pi_w * root / (6 * k);
    sum += a * bessel_i_three_half(z, wide) / k;
  }
  Real out = pi_w * 2L * sum / pow(base, Real(mpq_class(3, 4), wide));
  return out.set_precision(ctx.bits());
}

Complex zeta_special(long d, long modulus, const PrecisionContext& ctx) {
  if (modulus < 1) throw DomainError("zeta_special: N must be >= 1");
  const long dd = reduce_mod(d, modulus);
  if (dd == 0) {
    throw SingularityError("zeta^d(1) is singular for d = 0 mod N (d=" + std::to_string(d) + ", N=" +
                           std::to_string(modulus) + ")");
  }
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const Real pi_over_n = pi(wide) / modulus;
  Real re = pi_over_n * cot(pi_over_n * dd);
  Real im = pi_over_n;
  return Complex(std::move(re.set_precision(ctx.bits())), std::move(im.set_precision(ctx.bits())));
}

Complex c_psi_cusp(const DirichletCharacter& psi, const CuspData& cusp, const PrecisionContext& ctx) {
  const long modulus = psi.modulus();
  const long upper = cusp.upper_right();
  const PrecisionContext wide = ctx.widened(kGuardBits);

  // sum_c psi(c) [ sum_e delta(-hc-ke) zeta^{Ac+He}(1) + (2 pi i / N) sum_e (bar(-hc-ke)/N - 1/2) ]
  Complex zeta_part(wide);
  Complex sawtooth_part(wide);
  for (long c = 0; c < modulus; ++c) {
    if (!psi.value(c)) continue;
    const Complex weight = psi.value(c, wide);
    Complex zeta_sum(wide);
    mpq_class sawtooth = 0;
    for (long e = 0; e < modulus; ++e) {
      const long first = reduce_mod(-cusp.h % modulus * c - cusp.k % modulus * e, modulus);
      if (first == 0) {
        const long second = reduce_mod(upper % modulus * c + cusp.H % modulus * e, modulus);
        zeta_sum += zeta_special(second, modulus, wide);
      }
      sawtooth += mpq_class(first, modulus) - mpq_class(1, 2);
    }
    sawtooth.canonicalize();
    zeta_part += weight * zeta_sum;
    sawtooth_part += weight * Real(sawtooth, wide);
  }
  // total = zeta_part + (2 pi i / N) sawtooth_part;  c_psi = -total / (2 pi i) = i total / (2 pi)
  const Real two_pi = pi(wide) * 2L;
  Complex total = zeta_part + (sawtooth_part * (two_pi / modulus)).times_i();
  Complex out = total.times_i() / two_pi;
  out.re.set_precision(ctx.bits());
  out.im.set_precision(ctx.bits());
  return out;
}

Complex a0(const CuspData& cusp, long r, const CharacterSet& odd, const PrecisionContext& ctx) {
  const long r_inv = mod_inverse(r, odd.modulus);
  Complex acc(ctx);
  for (const auto& psi : odd.members) acc += c_psi_cusp(psi, cusp, ctx) * psi.value(r_inv, ctx);
  return acc;
}

Complex a0(const CuspData& cusp, long r, long modulus, const PrecisionContext& ctx) {
  require_unit_residue(reduce_mod(r, modulus), modulus, "a0");
  return a0(cusp, r, odd_characters(modulus), ctx);
}

Complex an_coeff(long m, const CuspData& cusp, long r, const CharacterSet& odd, const PrecisionContext& ctx) {
  if (m < 1) throw DomainError("an_coeff: m must be >= 1");
  const long modulus = odd.modulus;
  const long r_inv = mod_inverse(r, modulus);
  const long upper = cusp.upper_right();

  std::vector<long> divisors;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    divisors.push_back(d);
    if (d * d != m) divisors.push_back(m / d);
  }

  std::vector<Complex> zeta_n;
  zeta_n.reserve(static_cast<std::size_t>(modulus));
  for (long j = 0; j < modulus; ++j) zeta_n.push_back(root_of_unity(mpq_class(j, modulus), ctx));

  // Per c: integer coefficients of zeta_N^j collected from the (e, d) double sum.
  Complex acc(ctx);
  for (long c = 0; c < modulus; ++c) {
    std::vector<long> coeff(static_cast<std::size_t>(modulus), 0);
    for (long e = 0; e < modulus; ++e) {
      const long first = reduce_mod(-cusp.h % modulus * c - cusp.k % modulus * e, modulus);
      const long second = reduce_mod(upper % modulus * c + cusp.H % modulus * e, modulus);
      for (long d : divisors) {
        const long cofactor = m / d;
        if (reduce_mod(cofactor, modulus) == first) {
          coeff[static_cast<std::size_t>(reduce_mod(d % modulus * second, modulus))] += 1;
        }
        if (reduce_mod(-cofactor, modulus) == first) {
          coeff[static_cast<std::size_t>(reduce_mod(-d % modulus * second, modulus))] -= 1;
        }
      }
    }
    Complex inner(ctx);
    for (long j = 0; j < modulus; ++j) {
      if (coeff[static_cast<std::size_t>(j)] != 0) {
        inner += zeta_n[static_cast<std::size_t>(j)] * Real(coeff[static_cast<std::size_t>(j)], ctx);
      }
    }
    if (inner.re.is_zero() && inner.im.is_zero()) continue;
    Complex weight(ctx);
    for (const auto& psi : odd.members) {
      if (!psi.value(c)) continue;
      weight += psi.value(r_inv, ctx) * psi.value(c, ctx);
    }
    acc += weight * inner;
  }
  return acc / Real(modulus, ctx);
}

Complex an_coeff(long m, const CuspData& cusp, long r, long modulus, const PrecisionContext& ctx) {
  require_unit_residue(reduce_mod(r, modulus), modulus, "an_coeff");
  return an_coeff(m, cusp, r, odd_characters(modulus), ctx);
}

Complex b_k(long k, long n, long r, const CharacterSet& odd, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("b_k: k must be >= 1");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  Complex acc(wide);
  if (k == 1) {
    acc = a0(CuspData::make(0, 1), r, odd, wide);
  } else {
    for (long h = 1; h < k; ++h) {
      if (gcd(h, k) != 1) continue;
      const CuspData cusp = CuspData::make(h, k);
      acc += a0(cusp, r, odd, wide) * root_of_unity(kloosterman_turns(h, k, n), wide);
    }
  }
  acc.re.set_precision(ctx.bits());
  acc.im.set_precision(ctx.bits());
  return acc;
}

Complex b_k(long k, long n, long r, long modulus, const PrecisionContext& ctx) {
  require_unit_residue(reduce_mod(r, modulus), modulus, "b_k");
  return b_k(k, n, r, odd_characters(modulus), ctx);
}

long default_truncation(long n) {
  if (n <= 1) return 1;
  long k = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (k * k < n) ++k;
  while (k > 1 && (k - 1) * (k - 1) >= n) --k;
  return k;
}

Real t1_series(long n, long r, long modulus, long truncation, const PrecisionContext& ctx) {
  require_unit_residue(r, modulus, "t1_series");
  if (n < 1) throw DomainError("t1_series: n must be >= 1");
  if (truncation < 1) throw DomainError("t1_series: K must be >= 1");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const CharacterSet odd = odd_characters(modulus);
  const Real c = require_real(c_constant(r, odd, wide), wide, "c_{r,N}");
  // (c/phi) * Rademacher(n, K); the prefactor 2 pi 24^{-3/4} (n-1/24)^{-3/4}
  // equals 2 pi (24n-1)^{-3/4}.
  Real out = c / euler_phi(modulus) * p_rademacher(n, truncation, wide);
  return out.set_precision(ctx.bits());
}

Real t2_series(long n, long r, long modulus, long truncation, const PrecisionContext& ctx) {
  require_unit_residue(r, modulus, "t2_series");
  if (n < 1) throw DomainError("t2_series: n must be >= 1");
  if (truncation < 1) throw DomainError("t2_series: K must be >= 1");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const CharacterSet odd = odd_characters(modulus);
  const Real m(shifted_index(n), wide);
  const Real pi_w = pi(wide);
  const Real x = pi_w * sqrt(m * 2L / 3L);

  Complex sum(wide);
  for (long k = 1; k <= truncation; ++k) {
    const Complex b = b_k(k, n, r, odd, wide);
    sum += b * (bessel_i_half(x / k, wide) / k);
  }
  // -2 pi i / phi(N) * (pi/12)^{1/2} * (pi^2 m / 6)^{-1/4} * sum
  const Real scale = pi_w * 2L / euler_phi(modulus) * sqrt(pi_w / 12L) /
                     sqrt(sqrt(pi_w * pi_w * m / 6L));
  Complex total = -(sum.times_i() * scale);
  Real out = require_real(total, wide, "t2_series");
  return out.set_precision(ctx.bits());
}

namespace {

// sum_{psi odd} psi(r') sum_{c=1}^{N-1} psi(c) cot(pi c / N); terms with psi(c) = 0 skipped.
Real cotangent_character_sum(long r, const CharacterSet& odd, const PrecisionContext& ctx) {
  const long modulus = odd.modulus;
  const long r_inv = mod_inverse(r, modulus);
  const Real pi_over_n = pi(ctx) / modulus;
  Complex acc(ctx);
  for (const auto& psi : odd.members) {
    Complex inner(ctx);
    for (long c = 1; c < modulus; ++c) {
      if (!psi.value(c)) continue;
      inner += psi.value(c, ctx) * cot(pi_over_n * c);
    }
    acc += psi.value(r_inv, ctx) * inner;
  }
  return require_real(acc, ctx, "cotangent character sum");
}

// sign(coef) * exp(exponent + log|coef| + extra_log), zero when coef is zero.
Real signed_log_assembly(const Real& coef, const Real& exponent, const Real& extra_log, const PrecisionContext& ctx) {
  if (coef.is_zero()) return Real(ctx);
  Real value = log_main_term(exponent, log(abs(coef)) + extra_log, ctx);
  return coef.sign() < 0 ? -value : value;
}

}  // namespace

AsymptoticDiffResult theorem1_terms(long n, long r, long modulus, const PrecisionContext& ctx) {
  require_unit_residue(r, modulus, "theorem1");
  if (n < 1) throw DomainError("theorem1: n must be >= 1");
  const PrecisionContext wide = ctx.widened(kGuardBits);
  const CharacterSet odd = odd_characters(modulus);
  const Real phi(euler_phi(modulus), wide);
  const Real m(shifted_index(n), wide);
  const Real pi_w = pi(wide);
  const Real exponent = pi_w * sqrt(m * 2L / 3L);
  const Real log_m = log(m);

  // main1 = S / (2 sqrt 2 phi N) * e^X / sqrt(m)
  const Real s = cotangent_character_sum(r, odd, wide);
  const Real coef1 = s / (sqrt(Real(2, wide)) * 2L * phi * modulus);
  Real main1 = signed_log_assembly(coef1, exponent, -(log_m / 2L), wide);

  // main2 = -(1/(4 sqrt 3 phi)) sum psi(r') L(0,psi) * e^X / m = c_{r,N} / (4 sqrt 3 phi) * e^X / m
  const Real c = require_real(c_constant(r, odd, wide), wide, "c_{r,N}");
  const Real coef2 = c / (sqrt(Real(3, wide)) * 4L * phi);
  Real main2 = signed_log_assembly(coef2, exponent, -log_m, wide);

  Real estimate = main1 + main2;
  return AsymptoticDiffResult{
      .n = n,
      .r = r,
      .modulus = modulus,
      .mode = EstimateMode::TwoTerm,
      .main1 = std::move(main1.set_precision(ctx.bits())),
      .main2 = std::move(main2.set_precision(ctx.bits())),
      .t1 = std::nullopt,
      .t2 = std::nullopt,
      .estimate = std::move(estimate.set_precision(ctx.bits())),
      .truncation = 0,
  };
}

AsymptoticDiffResult theorem1_main(long n, long r, long modulus, const PrecisionContext& ctx) {
  require_unit_residue(r, modulus, "theorem1_main");
  if (2 * r >= modulus) {
    throw DomainError("theorem1_main: need 1 <= r < N/2, got r=" + std::to_string(r) + ", N=" +
                      std::to_string(modulus));
  }
  return theorem1_terms(n, r, modulus, ctx);
}

AsymptoticDiffResult theorem1_series(long n, long r, long modulus, long truncation, const PrecisionContext& ctx) {
  AsymptoticDiffResult result = theorem1_terms(n, r, modulus, ctx);
  Real t1 = t1_series(n, r, modulus, truncation, ctx);
  Real t2 = t2_series(n, r, modulus, truncation, ctx);
  result.mode = EstimateMode::Series;
  result.estimate = t1 + t2;
  result.t1 = std::move(t1);
  result.t2 = std::move(t2);
  result.truncation = truncation;
  return result;
}

Real q_ratio(long n, long r, long modulus, const PrecisionContext& ctx, const PartitionTable& table,
             const DivisorClassSieve& sieve) {
  const AsymptoticDiffResult est = theorem1_main(n, r, modulus, ctx);
  const mpz_class exact = part_diff_exact(n, static_cast<int>(r), static_cast<int>(modulus), table, sieve);
  return Real(exact, ctx) / est.estimate;
}

}  // namespace partclass
