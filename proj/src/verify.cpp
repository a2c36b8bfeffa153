#include "partclass/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "partclass/dirichlet.hpp"
#include "partclass/errors.hpp"
#include "partclass/exactparts.hpp"
#include "partclass/numerics.hpp"
#include "partclass/rademacher.hpp"
#include "partclass/wright.hpp"

namespace partclass {

namespace {

class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_failure_ = describe();
  }
  void note(std::string summary) { summary_ = std::move(summary); }

  void fill(SuiteReport& report) const {
    report.checks = checks_;
    report.passed = failures_ == 0;
    if (report.passed) {
      report.detail = summary_.empty() ? std::to_string(checks_) + " checks" : summary_;
    } else {
      report.detail = std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed; first: " + first_failure_;
      if (!summary_.empty()) report.detail += "; " + summary_;
    }
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_failure_;
  std::string summary_;
};

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

Real two_pow(long e, const PrecisionContext& ctx) {
  Real out(1, ctx);
  mpfr_mul_2si(out.get(), out.get(), e, MPFR_RNDN);
  return out;
}

bool within(const Real& a, const Real& b, const Real& tolerance) { return relative_difference(a, b) <= tolerance; }

// Runs body(i) for i in [0, count) across worker threads; results are reduced
// by the caller, so body must only touch its own slot.
void parallel_for(long count, const std::function<void(long)>& body) {
  const long workers = std::max(1L, std::min<long>(count, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (long w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (long i = w; i < count; i += workers) body(i);
    }));
  }
  for (auto& job : jobs) job.get();
}

// ---- numerics ----

// (z/2)^nu sum_m (z/2)^{2m} / (m! Gamma(nu+m+1)), summed until the terms drop below the target.
Real bessel_series(const mpq_class& nu, const Real& z, const PrecisionContext& ctx) {
  const PrecisionContext wide = ctx.widened(64);
  Real half_z = z;
  half_z.set_precision(wide.bits());
  half_z = half_z / 2L;
  const Real sq = half_z * half_z;
  const Real nu_r(nu, wide);
  Real term = pow(half_z, nu_r) / gamma_fn(nu_r + Real(1, wide), wide);
  Real sum = term;
  const Real floor = two_pow(-wide.bits(), wide);
  for (long m = 1; m < 100000; ++m) {
    term = term * sq / (Real(m, wide) * (nu_r + Real(m, wide)));
    sum += term;
    if (abs(term) < abs(sum) * floor) break;
  }
  sum.set_precision(ctx.bits());
  return sum;
}

// Akiyama-Tanigawa; returns B_m with B_1 = +1/2 (only even m are compared).
mpq_class bernoulli_akiyama_tanigawa(long m) {
  std::vector<mpq_class> a(static_cast<std::size_t>(m) + 1);
  for (long j = 0; j <= m; ++j) {
    a[static_cast<std::size_t>(j)] = mpq_class(1, j + 1);
    for (long i = j; i >= 1; --i) {
      a[static_cast<std::size_t>(i - 1)] = i * (a[static_cast<std::size_t>(i - 1)] - a[static_cast<std::size_t>(i)]);
    }
  }
  return a[0];
}

void suite_numerics(Tally& tally, const VerifyOptions&) {
  using Op = std::function<Real(const PrecisionContext&)>;
  const std::vector<std::pair<std::string, Op>> ops = {
      {"sqrt(2)", [](const PrecisionContext& c) { return sqrt(Real(2, c)); }},
      {"exp(37/10)", [](const PrecisionContext& c) { return exp(Real(mpq_class(37, 10), c)); }},
      {"log(11/2)", [](const PrecisionContext& c) { return log(Real(mpq_class(11, 2), c)); }},
      {"sin(13/10)", [](const PrecisionContext& c) { return sin(Real(mpq_class(13, 10), c)); }},
      {"cos(13/10)", [](const PrecisionContext& c) { return cos(Real(mpq_class(13, 10), c)); }},
      {"cot(7/10)", [](const PrecisionContext& c) { return cot(Real(mpq_class(7, 10), c)); }},
      {"sinh(5/2)", [](const PrecisionContext& c) { return sinh(Real(mpq_class(5, 2), c)); }},
      {"cosh(5/2)", [](const PrecisionContext& c) { return cosh(Real(mpq_class(5, 2), c)); }},
      {"pow(5/2,17/10)", [](const PrecisionContext& c) { return pow(Real(mpq_class(5, 2), c), Real(mpq_class(17, 10), c)); }},
      {"gamma(29/4)", [](const PrecisionContext& c) { return gamma_fn(Real(mpq_class(29, 4), c), c); }},
      {"I_1/2(5)", [](const PrecisionContext& c) { return bessel_i_half(Real(5, c), c); }},
      {"I_3/2(5)", [](const PrecisionContext& c) { return bessel_i_three_half(Real(5, c), c); }},
      {"I_3/2(1/10)", [](const PrecisionContext& c) { return bessel_i_three_half(Real(mpq_class(1, 10), c), c); }},
      {"pi", [](const PrecisionContext& c) { return pi(c); }},
      {"gamma_E", [](const PrecisionContext& c) { return euler_gamma(c); }},
  };
  for (long p : {64L, 128L, 256L}) {
    const PrecisionContext lo(p), hi(2 * p);
    const Real tolerance = two_pow(-(p - 8), hi);
    for (const auto& [name, op] : ops) {
      const Real a = op(lo);
      const Real b = op(hi);
      tally.check(within(a, b, tolerance), [&, p] { return cat("precision monotonicity ", name, " at ", p, " bits"); });
    }
  }

  const PrecisionContext ctx(256);
  const Real bessel_tol = two_pow(-ctx.bits() + 16, ctx);
  for (const mpq_class& z_q : {mpq_class(1, 10), mpq_class(1), mpq_class(5), mpq_class(20)}) {
    const Real z(z_q, ctx);
    tally.check(within(bessel_i_half(z, ctx), bessel_series(mpq_class(1, 2), z, ctx), bessel_tol),
                [&] { return cat("I_1/2 series oracle at z=", z_q.get_str()); });
    tally.check(within(bessel_i_three_half(z, ctx), bessel_series(mpq_class(3, 2), z, ctx), bessel_tol),
                [&] { return cat("I_3/2 series oracle at z=", z_q.get_str()); });
  }

  for (long m = 2; m <= 30; m += 2) {
    tally.check(bernoulli(m) == bernoulli_akiyama_tanigawa(m), [m] { return cat("bernoulli(", m, ")"); });
  }

  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> numerators((1L << 19) + 1, 20L << 20);
  const Real gamma_tol = two_pow(-ctx.bits() + 8, ctx);
  for (int i = 0; i < 100; ++i) {
    const mpq_class x_q(numerators(rng), 1L << 20);
    const Real x(x_q, ctx);
    tally.check(within(gamma_fn(x + Real(1, ctx), ctx), x * gamma_fn(x, ctx), gamma_tol),
                [&] { return cat("Gamma(x+1) = x Gamma(x) at x=", x_q.get_str()); });
  }
}

// ---- exactparts ----

void suite_pentagonal(Tally& tally, const VerifyOptions&) {
  const PartitionTable table = PartitionTable::build(5000);
  for (long n = 1; n <= table.max_n(); ++n) {
    tally.check(table.satisfies_recurrence(n), [n] { return cat("pentagonal recurrence at n=", n); });
  }
  tally.check(table[100] == mpz_class("190569292"), [] { return std::string("p(100)"); });
}

void suite_oracle(Tally& tally, const VerifyOptions&) {
  constexpr long kMaxN = 40;
  const PartitionTable table = PartitionTable::build(kMaxN);
  for (int modulus = 1; modulus <= 8; ++modulus) {
    const DivisorClassSieve sieve = build_divisor_sieve(modulus, kMaxN);
    for (long n = 0; n <= kMaxN; ++n) {
      mpz_class class_total = 0;
      for (int r = 0; r < modulus; ++r) {
        const mpz_class exact = part_count_exact(PartCountQuery(n, modulus, r), table, sieve);
        const std::uint64_t brute = enumerate_oracle(n, r, modulus);
        tally.check(exact == mpz_class(std::to_string(brute)),
                    [&] { return cat("part_count_exact(", n, ",", modulus, ",", r, ") = ", exact.get_str(), " vs ", brute); });
        class_total += exact;
      }
      const mpz_class zero = zero_class_exact(n, modulus, table);
      tally.check(zero == mpz_class(std::to_string(enumerate_oracle(n, 0, modulus))),
                  [&] { return cat("zero_class_exact(", n, ",", modulus, ")"); });
      tally.check(class_total == zero_class_exact(n, 1, table),
                  [&] { return cat("class partition identity at n=", n, ", N=", modulus); });
    }
  }
}

void suite_coefficient(Tally& tally, const VerifyOptions&) {
  constexpr long kMaxM = 500;
  for (int modulus = 3; modulus <= 8; ++modulus) {
    const CharacterSet odd = odd_characters(modulus);
    const DivisorClassSieve sieve = build_divisor_sieve(modulus, kMaxM);
    for (int r = 1; r < modulus; ++r) {
      if (gcd(r, modulus) != 1) continue;
      std::vector<int> by_residue(static_cast<std::size_t>(modulus));
      for (long d = 0; d < modulus; ++d) by_residue[static_cast<std::size_t>(d)] = indicator(r, odd, d);
      for (long m = 1; m <= kMaxM; ++m) {
        long rhs = 0;
        for (long d = 1; d <= m; ++d) {
          if (m % d == 0) rhs += by_residue[static_cast<std::size_t>(d % modulus)];
        }
        const long lhs = static_cast<long>(sieve.count(r, m)) - static_cast<long>(sieve.count(modulus - r, m));
        tally.check(lhs == rhs, [&] { return cat("d_{r,N}(m) - d_{N-r,N}(m) at m=", m, ", r=", r, ", N=", modulus); });
      }
    }
  }
}

// ---- dirichlet ----

void suite_orthogonality(Tally& tally, const VerifyOptions& options) {
  const PrecisionContext ctx(128);
  const Real tolerance = Real::from_string("1e-12", ctx);
  for (long modulus = 3; modulus <= options.max_modulus; ++modulus) {
    const CharacterSet odd = odd_characters(modulus);
    const long phi = euler_phi(modulus);
    for (long g = 1; g < modulus; ++g) {
      if (gcd(g, modulus) != 1) continue;
      const int expected = g == 1 ? 1 : (g == modulus - 1 ? -1 : 0);
      tally.check(indicator(1, odd, g) == expected, [&] { return cat("exact orthogonality N=", modulus, " g=", g); });
      Complex sum(ctx);
      for (const auto& psi : odd.members) sum += psi.value(g, ctx);
      const Real realized = sum.re * 2L / phi;
      tally.check(abs(realized - Real(expected, ctx)) <= tolerance && abs(sum.im) <= tolerance,
                  [&] { return cat("complex orthogonality N=", modulus, " g=", g); });
    }
    const CharacterSet all = all_characters(modulus);
    const auto odd_count = std::count_if(all.members.begin(), all.members.end(), [](const auto& psi) { return psi.is_odd(); });
    tally.check(static_cast<long>(all.members.size()) == phi && odd_count * 2 == phi &&
                    static_cast<long>(odd.members.size()) == phi / 2,
                [&] { return cat("parity partition N=", modulus); });
  }
}

void suite_multiplicativity(Tally& tally, const VerifyOptions& options) {
  std::mt19937_64 rng(7);
  for (long modulus = 1; modulus <= options.max_modulus; ++modulus) {
    const CharacterSet all = all_characters(modulus);
    std::vector<long> units;
    for (long a = 0; a < modulus; ++a) {
      if (gcd(a, modulus) == 1) units.push_back(a);
    }
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    for (int i = 0; i < 1000; ++i) {
      const long a = units[pick(rng)];
      const long b = units[pick(rng)];
      bool ok = true;
      for (const auto& psi : all.members) {
        const auto va = psi.value(a), vb = psi.value(b), vab = psi.value(reduce_mod(a * b, modulus));
        ok = ok && va && vb && vab && *va * *vb == *vab;
      }
      tally.check(ok, [&] { return cat("psi(ab) = psi(a) psi(b) N=", modulus, " a=", a, " b=", b); });
    }
  }
}

void suite_eisenstein(Tally& tally, const VerifyOptions&) {
  constexpr long kMaxN = 200;
  const PartitionTable table = PartitionTable::build(kMaxN);
  const PrecisionContext ctx(256);
  const Real tolerance = Real::from_string("1e-8", ctx);
  for (int modulus : {3, 4, 5, 6, 7, 8, 12}) {
    const DivisorClassSieve sieve = build_divisor_sieve(modulus, kMaxN);
    for (int r = 1; r < modulus; ++r) {
      if (gcd(r, modulus) != 1) continue;
      const std::vector<Complex> series = g_series_coeffs(r, modulus, kMaxN, table, ctx);
      for (long n = 0; n <= kMaxN; ++n) {
        const Complex& z = series[static_cast<std::size_t>(n)];
        const mpz_class rounded = z.re.round_to_integer();
        const Real residual = abs(z.re - Real(rounded, ctx));
        const mpz_class exact = part_diff_exact(n, r, modulus, table, sieve);
        tally.check(rounded == exact && residual <= tolerance && abs(z.im) <= tolerance,
                    [&] { return cat("q-expansion coefficient n=", n, " r=", r, " N=", modulus); });
      }
    }
  }
}

// ---- rademacher ----

void suite_dedekind(Tally& tally, const VerifyOptions&) {
  for (long k = 2; k <= 100; ++k) {
    for (long h = 1; h < k; ++h) {
      if (gcd(h, k) != 1) continue;
      const mpq_class rhs = mpq_class(-1, 4) + (mpq_class(h, k) + mpq_class(k, h) + mpq_class(1, h * k)) / 12;
      tally.check(dedekind_sum(h, k) + dedekind_sum(k, h) == rhs, [h, k] { return cat("reciprocity h=", h, " k=", k); });
      tally.check(dedekind_sum(k - h, k) == -dedekind_sum(h, k), [h, k] { return cat("oddness h=", h, " k=", k); });
    }
  }
}

void suite_kloosterman(Tally& tally, const VerifyOptions&) {
  const PrecisionContext ctx(128);
  const Real tiny = two_pow(-100, ctx);
  for (long n = 0; n <= 50; ++n) {
    const Complex a1 = kloosterman_A(1, n, ctx);
    tally.check(abs(a1.re - Real(1, ctx)) <= tiny && abs(a1.im) <= tiny, [n] { return cat("A_1(", n, ") = 1"); });
  }
  for (long k = 1; k <= 50; ++k) {
    for (long n = 0; n <= 50; ++n) {
      const Complex a = kloosterman_A(k, n, ctx);
      tally.check(a.abs() <= Real(euler_phi(k), ctx) + tiny, [k, n] { return cat("|A_", k, "(", n, ")| <= phi(k)"); });
    }
  }
}

void suite_rademacher(Tally& tally, const VerifyOptions&) {
  constexpr long kMaxN = 2000;
  const PartitionTable table = PartitionTable::build(kMaxN);
  std::vector<char> ok(kMaxN + 1, 1);
  parallel_for(kMaxN, [&](long i) {
    const long n = i + 1;
    const PrecisionContext ctx(auto_precision_bits(n));
    ok[static_cast<std::size_t>(n)] = p_rademacher(n, default_truncation(n), ctx).round_to_integer() == table[n];
  });
  for (long n = 1; n <= kMaxN; ++n) {
    tally.check(ok[static_cast<std::size_t>(n)] != 0, [n] { return cat("Rademacher series rounds to p(", n, ")"); });
  }
}

void suite_antisymmetry(Tally& tally, const VerifyOptions&) {
  const PrecisionContext ctx(256);
  const Real tolerance = Real::from_string("1e-20", ctx);
  for (long r : {1L, 2L}) {
    const Real a = theorem1_terms(100, r, 5, ctx).estimate;
    const Real b = theorem1_terms(100, 5 - r, 5, ctx).estimate;
    tally.check(within(a, -b, tolerance), [r] { return cat("estimate(100, ", r, ", 5) = -estimate(100, ", 5 - r, ", 5)"); });
  }
  const Real s = theorem1_series(100, 1, 5, 10, ctx).estimate;
  const Real t = theorem1_series(100, 4, 5, 10, ctx).estimate;
  tally.check(within(s, -t, tolerance), [] { return std::string("series estimate antisymmetry at N=5, n=100"); });
}

void suite_cusp_bound(Tally& tally, const VerifyOptions&) {
  constexpr long kModulus = 5;
  const PrecisionContext ctx(128);
  const CharacterSet odd = odd_characters(kModulus);
  const long phi = euler_phi(kModulus);
  const Real slack = two_pow(-60, ctx);
  for (long k = 1; k <= 8; ++k) {
    for (long h = 0; h < k; ++h) {
      if (gcd(h, k) != 1) continue;
      const CuspData cusp = CuspData::make(h, k);
      for (long r = 1; r < kModulus; ++r) {
        for (long m = 1; m <= 50; ++m) {
          const Real bound(2 * phi * kModulus * kModulus * m, ctx);
          tally.check(an_coeff(m, cusp, r, odd, ctx).abs() <= bound + slack,
                      [&] { return cat("|a_", m, "(", h, ",", k, ")| bound, r=", r); });
        }
      }
    }
  }
}

void suite_t1(Tally& tally, const VerifyOptions&) {
  constexpr long kMaxN = 500;
  const PartitionTable table = PartitionTable::build(kMaxN);
  long first_fail = 0, last_fail = 0;
  for (long modulus : {3L, 4L, 5L}) {
    std::vector<char> ok(kMaxN + 1, 1);
    parallel_for(kMaxN, [&](long i) {
      const long n = i + 1;
      const PrecisionContext ctx(auto_precision_bits(n));
      const Real series = t1_series(n, 1, modulus, default_truncation(n), ctx);
      const Real c = require_real(c_constant(1, modulus, ctx), ctx, "c_{r,N}");
      const Real target = c * Real(table[n], ctx) / euler_phi(modulus);
      ok[static_cast<std::size_t>(n)] = within(series, target, Real::from_string("1e-10", ctx));
    });
    for (long n = 1; n <= kMaxN; ++n) {
      const bool good = ok[static_cast<std::size_t>(n)] != 0;
      if (!good) {
        if (first_fail == 0 || n < first_fail) first_fail = n;
        last_fail = std::max(last_fail, n);
      }
      tally.check(good, [&] { return cat("T1 = (c/phi) p(n) to 1e-10 at n=", n, ", N=", modulus); });
    }
  }
  if (last_fail > 0) tally.note(cat("fails for n in [", first_fail, ", ", last_fail, "], holds for n in [", last_fail + 1, ", 500]"));
}

// ---- wright ----

void suite_wright(Tally& tally, const VerifyOptions&) {
  for (long n : {100L, 1000L, 10000L}) {
    const PrecisionContext ctx(auto_precision_bits(n));
    for (long modulus : {1L, 3L, 6L}) {
      const Real direct = theorem2_main(n, modulus, ctx).value;
      const Real engine = theorem2_engine(n, modulus, ctx);
      tally.check(within(direct, engine, Real::from_string("1e-20", ctx)),
                  [&] { return cat("closed form vs L1+L2 engine n=", n, " N=", modulus); });
    }
  }
  {
    const PrecisionContext ctx(256);
    tally.check(within(theorem2_main(1000, 3, ctx).value, theorem2_engine(1000, 3, ctx), Real::from_string("1e-25", ctx)),
                [] { return std::string("closed form vs engine at n=1000, N=3 to 1e-25"); });
  }

  // N = 1: e^{pi sqrt(2n/3)} (2 gamma_E + log(6n/pi^2)) / (4 pi sqrt(2n))
  for (long n : {10L, 100L, 1000L, 10000L}) {
    const PrecisionContext ctx(256);
    const Real p = pi(ctx);
    const Real nn(n, ctx);
    const Real form = exp(p * sqrt(nn * 2L / 3L)) * (euler_gamma(ctx) * 2L + log(nn * 6L / (p * p))) /
                      (p * 4L * sqrt(nn * 2L));
    tally.check(within(theorem2_main(n, 1, ctx).value, form, Real::from_string("1e-20", ctx)),
                [n] { return cat("N=1 specialization at n=", n); });
  }

  // 1/Gamma(pole) = 0: compare with the value at beta = 1/2 + eps.
  const PrecisionContext ctx(256);
  const auto [log_part, poly_part] = s0_profile(1, 4, ctx);
  for (const auto& [s, r] : std::vector<std::pair<long, long>>{{0, 1}, {0, 2}, {1, 3}}) {
    tally.check(w_coeff(s, r, poly_part, ctx).is_zero(), [&] { return cat("w_{", s, ",", r, "} = 0 at a pole"); });
    MajorArcProfile nearby = poly_part;
    nearby.beta = Real(mpq_class(1, 2), ctx) + two_pow(-120, ctx);
    tally.check(abs(w_coeff(s, r, nearby, ctx)) <= two_pow(-100, ctx),
                [&] { return cat("w_{", s, ",", r, "} limit toward the pole"); });
  }

  const Real root_two_pi = sqrt(pi(ctx) * 2L);
  const Real tolerance = Real::from_string("1e-60", ctx);
  tally.check(within(log_part.alphas[0], -(Real(1, ctx) / root_two_pi), tolerance), [] { return std::string("L1 alpha_0 at N=1"); });
  tally.check(within(poly_part.alphas[0], euler_gamma(ctx) / root_two_pi, tolerance), [] { return std::string("L2 alpha_0 at N=1"); });
  tally.check(s0_bernoulli_term(1, 7) == mpq_class(49, 144), [] { return std::string("Bernoulli term N^2/144"); });
  const MajorArcProfile partitions = partition_profile(2, ctx);
  tally.check(within(p_coeff(0, partitions, ctx), Real(1, ctx) / (sqrt(Real(3, ctx)) * 4L), tolerance),
              [] { return std::string("Hardy-Ramanujan p_0 = 1/(4 sqrt 3)"); });
}

// ---- tables ----

// Printed Q(n) (N=3, r=1) and Q_N(n); cells are truncated to 5 decimals.
const std::vector<long> kTableColumns = {10, 100, 1000, 10000, 100000};
const std::vector<std::string> kTable1 = {"1.00417", "1.00142", "1.00013", "1.00001", "1.00000"};
const std::map<long, std::vector<std::string>> kTable2 = {
    {1, {"1.09403", "1.01393", "1.00260", "1.00050", "1.00029"}},
    {3, {"1.79224", "1.06709", "1.01177", "1.00247", "1.00075"}},
    {6, {"-0.81043", "1.23311", "1.03137", "1.00617", "1.00157"}},
};

bool matches_printed(const Real& q, const std::string& printed) {
  const PrecisionContext ctx(q.precision());
  const Real value = Real::from_string(printed, ctx);
  const Real width = Real::from_string("0.00001", ctx);
  if (printed.front() != '-') return value <= q && q < value + width;
  return value - width < q && q <= value;
}

void check_tables(Tally& tally, long first_column, long last_column) {
  const long max_n = kTableColumns[static_cast<std::size_t>(last_column)];
  const PartitionTable table = PartitionTable::build(max_n);
  const DivisorClassSieve sieve = build_divisor_sieve(3, max_n);
  for (long c = first_column; c <= last_column; ++c) {
    const long n = kTableColumns[static_cast<std::size_t>(c)];
    const PrecisionContext ctx(auto_precision_bits(n));
    const Real q = q_ratio(n, 1, 3, ctx, table, sieve);
    tally.check(matches_printed(q, kTable1[static_cast<std::size_t>(c)]),
                [&] { return cat("Q(", n, ") = ", q.to_fixed(10, false), " vs ", kTable1[static_cast<std::size_t>(c)]); });
    for (const auto& [modulus, row] : kTable2) {
      const Real qn = qn_ratio(n, modulus, ctx, table);
      tally.check(matches_printed(qn, row[static_cast<std::size_t>(c)]),
                  [&] { return cat("Q_", modulus, "(", n, ") = ", qn.to_fixed(10, false), " vs ", row[static_cast<std::size_t>(c)]); });
    }
  }
  // |Q_N(n) - 1| strictly decreasing from n = 100 on.
  for (const auto& entry : kTable2) {
    const long modulus = entry.first;
    std::optional<Real> previous;
    for (long c = 1; c <= last_column; ++c) {
      const long n = kTableColumns[static_cast<std::size_t>(c)];
      const PrecisionContext ctx(auto_precision_bits(n));
      Real gap = abs(qn_ratio(n, modulus, ctx, table) - Real(1, ctx));
      if (previous) {
        tally.check(gap < *previous, [&] { return cat("|Q_", modulus, "(n) - 1| decreasing at n=", n); });
      }
      previous = std::move(gap);
    }
  }
}

void suite_tables(Tally& tally, const VerifyOptions&) { check_tables(tally, 0, 3); }
void suite_tables_extended(Tally& tally, const VerifyOptions&) { check_tables(tally, 4, 4); }

using SuiteFn = void (*)(Tally&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"numerics", suite_numerics},
      {"pentagonal", suite_pentagonal},
      {"oracle", suite_oracle},
      {"coefficient", suite_coefficient},
      {"orthogonality", suite_orthogonality},
      {"multiplicativity", suite_multiplicativity},
      {"eisenstein", suite_eisenstein},
      {"dedekind", suite_dedekind},
      {"kloosterman", suite_kloosterman},
      {"rademacher", suite_rademacher},
      {"antisymmetry", suite_antisymmetry},
      {"cusp-bound", suite_cusp_bound},
      {"t1", suite_t1},
      {"wright", suite_wright},
      {"tables", suite_tables},
      {"tables-extended", suite_tables_extended},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

const std::vector<std::string>& default_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& name : suite_names()) {
      if (name != "t1" && name != "tables-extended") out.push_back(name);
    }
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  const auto& suites = registry();
  const auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& entry) { return entry.first == name; });
  if (it == suites.end()) throw DomainError("unknown suite: " + std::string(name));
  if (options.max_modulus < 3) throw DomainError("verify: max modulus must be >= 3");

  SuiteReport report;
  report.name = it->first;
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(tally, options);
    tally.fill(report);
  } catch (const std::exception& e) {
    report.passed = false;
    report.detail = std::string("exception: ") + e.what();
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace partclass
