// Acceptance run: one PASS/FAIL line per criterion.
//
// Exact reference values come from oracles written here (partition
// enumeration, coin-change and pentagonal p(n), counting parts by repeated
// subtraction), not from the library's convolution engines.

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "partclass/dirichlet.hpp"
#include "partclass/exactparts.hpp"
#include "partclass/numerics.hpp"
#include "partclass/rademacher.hpp"
#include "partclass/wright.hpp"

using namespace partclass;

namespace {

// Runtime ceilings, in seconds.
constexpr double kLimit1 = 1;
constexpr double kLimit2 = 60;
constexpr double kLimit3 = 120;
constexpr double kLimit5 = 300;

// Criteria expected to fail, with the reason.
const std::map<std::string, std::string> kBlocked = {
    {"6", "K = ceil(sqrt n) truncation error exceeds 1e-10 for n <= 91"},
    {"4x", "printed n = 1e5 entries of the second table are not reproducible"},
};

struct Outcome {
  bool passed = true;
  std::string detail;
};

int unexpected_failures = 0;

void report(const std::string& id, const std::string& title, const std::function<Outcome()>& body,
            double limit_seconds = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    outcome.passed = false;
    outcome.detail += " [over time limit " + std::to_string(static_cast<long>(limit_seconds)) + " s]";
  }
  const auto blocked = kBlocked.find(id);
  std::string tag = outcome.passed ? "PASS" : "FAIL";
  if (blocked != kBlocked.end()) {
    tag = outcome.passed ? "XPASS" : "FAIL (known)";
    if (!outcome.passed) outcome.detail += " -- " + blocked->second;
  } else if (!outcome.passed) {
    ++unexpected_failures;
  }
  std::printf("%-12s criterion %-3s %s (%.2f s): %s\n", tag.c_str(), id.c_str(), title.c_str(), seconds,
              outcome.detail.c_str());
  std::fflush(stdout);
}

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

// ---- oracles ----

// counts[n][N][r]: parts = r (mod N) over every partition of n, by walking
// partitions in non-increasing order.
using CountTable = std::vector<std::vector<std::vector<long>>>;

CountTable enumerate_counts(long max_n, long max_modulus) {
  CountTable counts(static_cast<std::size_t>(max_n + 1),
                    std::vector<std::vector<long>>(static_cast<std::size_t>(max_modulus + 1)));
  for (auto& row : counts) {
    for (long m = 1; m <= max_modulus; ++m) row[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(m), 0);
  }
  std::vector<long> parts;
  std::function<void(long, long, long)> walk = [&](long total, long remaining, long largest) {
    if (remaining == 0) {
      auto& row = counts[static_cast<std::size_t>(total)];
      for (long part : parts) {
        for (long m = 1; m <= max_modulus; ++m) ++row[static_cast<std::size_t>(m)][static_cast<std::size_t>(part % m)];
      }
      return;
    }
    for (long part = std::min(largest, remaining); part >= 1; --part) {
      parts.push_back(part);
      walk(total, remaining - part, part);
      parts.pop_back();
    }
  };
  for (long n = 0; n <= max_n; ++n) walk(n, n, n);
  return counts;
}

std::vector<mpz_class> coin_change_p(long max_n) {
  std::vector<mpz_class> p(static_cast<std::size_t>(max_n + 1), 0);
  p[0] = 1;
  for (long part = 1; part <= max_n; ++part) {
    for (long n = part; n <= max_n; ++n) p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - part)];
  }
  return p;
}

std::vector<mpz_class> pentagonal_p(long max_n) {
  std::vector<mpz_class> p(static_cast<std::size_t>(max_n + 1), 0);
  p[0] = 1;
  for (long n = 1; n <= max_n; ++n) {
    mpz_class sum = 0;
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const long g2 = k * (3 * k + 1) / 2;
      mpz_class term = p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<std::size_t>(n - g2)];
      if (k % 2) sum += term; else sum -= term;
    }
    p[static_cast<std::size_t>(n)] = sum;
  }
  return p;
}

// A partition of n holds at least l copies of the part a in p(n - l a) ways,
// so the parts equal to a contribute sum_l p(n - l a).
mpz_class parts_in_class(long n, long r, long modulus, const std::vector<mpz_class>& p) {
  mpz_class total = 0;
  for (long a = r == 0 ? modulus : r; a <= n; a += modulus) {
    for (long rest = n - a; rest >= 0; rest -= a) total += p[static_cast<std::size_t>(rest)];
  }
  return total;
}

mpz_class class_difference(long n, long r, long modulus, const std::vector<mpz_class>& p) {
  return parts_in_class(n, r, modulus, p) - parts_in_class(n, modulus - r, modulus, p);
}

mpq_class frac(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class sawtooth(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (x == mpq_class(fl)) return 0;
  return x - fl - mpq_class(1, 2);
}

mpq_class dedekind_oracle(long h, long k) {
  mpq_class s = 0;
  for (long r = 1; r < k; ++r) s += sawtooth(frac(r, k)) * sawtooth(frac(h * r, k));
  return s;
}

long plain_gcd(long a, long b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a < 0 ? -a : a;
}

// The printed tables cut values toward zero at 5 decimals.
bool matches_printed(const Real& q, const std::string& printed) {
  const PrecisionContext ctx(q.precision());
  const Real value = Real::from_string(printed, ctx);
  const Real width = Real::from_string("0.00001", ctx);
  if (printed.front() != '-') return value <= q && q < value + width;
  return value - width < q && q <= value;
}

struct Cell {
  long n;
  std::string printed;
};

const std::vector<Cell> kTable1 = {
    {10, "1.00417"}, {100, "1.00142"}, {1000, "1.00013"}, {10000, "1.00001"}, {100000, "1.00000"}};

const std::map<long, std::vector<Cell>> kTable2 = {
    {1, {{10, "1.09403"}, {100, "1.01393"}, {1000, "1.00260"}, {10000, "1.00050"}, {100000, "1.00029"}}},
    {3, {{10, "1.79224"}, {100, "1.06709"}, {1000, "1.01177"}, {10000, "1.00247"}, {100000, "1.00075"}}},
    {6, {{10, "-0.81043"}, {100, "1.23311"}, {1000, "1.03137"}, {10000, "1.00617"}, {100000, "1.00157"}}},
};

Real table1_ratio(long n, const std::vector<mpz_class>& p) {
  const PrecisionContext ctx(auto_precision_bits(n));
  return Real(class_difference(n, 1, 3, p), ctx) / theorem1_main(n, 1, 3, ctx).estimate;
}

Real table2_ratio(long n, long modulus, const std::vector<mpz_class>& p) {
  const PrecisionContext ctx(auto_precision_bits(n));
  return Real(parts_in_class(n, 0, modulus, p), ctx) / theorem2_main(n, modulus, ctx).value;
}

Outcome check_table1(const std::vector<mpz_class>& p, long from_n, long to_n) {
  Outcome out;
  for (const auto& cell : kTable1) {
    if (cell.n < from_n || cell.n > to_n) continue;
    const Real q = table1_ratio(cell.n, p);
    const bool ok = matches_printed(q, cell.printed);
    out.passed = out.passed && ok;
    out.detail += cat("Q(", cell.n, ")=", q.to_fixed(9), ok ? " ok " : " MISMATCH ", cell.printed, "; ");
  }
  return out;
}

Outcome check_table2(const std::vector<mpz_class>& p, long to_n) {
  Outcome out;
  long mismatches = 0, total = 0;
  for (const auto& [modulus, cells] : kTable2) {
    for (const auto& cell : cells) {
      if (cell.n > to_n) continue;
      const Real q = table2_ratio(cell.n, modulus, p);
      const bool ok = matches_printed(q, cell.printed);
      ++total;
      if (!ok) {
        ++mismatches;
        out.detail += cat("Q_", modulus, "(", cell.n, ")=", q.to_fixed(10), " vs printed ", cell.printed, "; ");
      }
    }
  }
  out.passed = mismatches == 0;
  out.detail = cat(total - mismatches, "/", total, " entries match. ", out.detail);
  return out;
}

template <typename Fn>
void parallel_range(long first, long last, Fn fn) {
  const long workers = std::max(1L, static_cast<long>(std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (long w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [=] {
      for (long i = first + w; i <= last; i += workers) fn(i);
    }));
  }
  for (auto& job : jobs) job.get();
}

}  // namespace

int main() {
  std::printf("acceptance: exact oracles built locally, tolerances fixed in this file\n");
  const std::vector<mpz_class> p_small = coin_change_p(2000);
  const std::vector<mpz_class> p_big = pentagonal_p(100000);

  report("0", "pentagonal p(n) oracle agrees with coin-change for n <= 2000", [&] {
    for (long n = 0; n <= 2000; ++n) {
      if (p_small[static_cast<std::size_t>(n)] != p_big[static_cast<std::size_t>(n)]) return Outcome{false, cat("n=", n)};
    }
    return Outcome{true, "p(100) = " + p_big[100].get_str()};
  });

  report("1", "exact small values", [&] {
    const PartitionTable table = PartitionTable::build(5);
    const DivisorClassSieve sieve = build_divisor_sieve(3, 5);
    const mpz_class one = part_count_exact(PartCountQuery(5, 3, 1), table, sieve);
    const mpz_class two = part_count_exact(PartCountQuery(5, 3, 2), table, sieve);
    const CountTable brute = enumerate_counts(5, 3);
    const bool ok = one == 13 && two == 5 && brute[5][3][1] == 13 && brute[5][3][2] == 5;
    return Outcome{ok, cat("T_{1,3}(5)=", one.get_str(), " T_{2,3}(5)=", two.get_str())};
  }, kLimit1);

  report("2", "convolution engines equal enumeration, n <= 40, N <= 8", [&] {
    const CountTable brute = enumerate_counts(40, 8);
    const PartitionTable table = PartitionTable::build(40);
    long checked = 0;
    for (int modulus = 1; modulus <= 8; ++modulus) {
      const DivisorClassSieve sieve = build_divisor_sieve(modulus, 40);
      for (long n = 0; n <= 40; ++n) {
        for (int r = 0; r < modulus; ++r) {
          const long expected = brute[static_cast<std::size_t>(n)][static_cast<std::size_t>(modulus)][static_cast<std::size_t>(r)];
          if (part_count_exact(PartCountQuery(n, modulus, r), table, sieve) != expected) {
            return Outcome{false, cat("mismatch at n=", n, " N=", modulus, " r=", r)};
          }
          if (r == 0 && zero_class_exact(n, modulus, table) != expected) {
            return Outcome{false, cat("zero class mismatch at n=", n, " N=", modulus)};
          }
          if (r > 0) {
            const long mirror = brute[static_cast<std::size_t>(n)][static_cast<std::size_t>(modulus)]
                                     [static_cast<std::size_t>(modulus - r)];
            if (part_diff_exact(n, r, modulus, table, sieve) != expected - mirror) {
              return Outcome{false, cat("difference mismatch at n=", n, " N=", modulus, " r=", r)};
            }
          }
          ++checked;
        }
      }
    }
    return Outcome{true, cat(checked, " (n, N, r) triples")};
  }, kLimit2);

  report("3", "first table at n = 10, 100, 1000", [&] { return check_table1(p_big, 10, 1000); }, kLimit3);
  report("3x", "first table at n = 1e4, 1e5", [&] { return check_table1(p_big, 10000, 100000); });
  report("4", "second table at n = 10, 100", [&] { return check_table2(p_big, 100); });
  report("4x", "second table, all fifteen entries", [&] { return check_table2(p_big, 100000); });
  report("4m", "|Q_N(n) - 1| decreases from n = 100 on", [&] {
    for (const auto& [modulus, cells] : kTable2) {
      std::optional<Real> previous;
      for (const auto& cell : cells) {
        if (cell.n < 100) continue;
        Real gap = abs(table2_ratio(cell.n, modulus, p_big) - Real(1, PrecisionContext(auto_precision_bits(cell.n))));
        if (previous && !(gap < *previous)) return Outcome{false, cat("N=", modulus, " n=", cell.n)};
        previous = std::move(gap);
      }
    }
    return Outcome{true, "N = 1, 3, 6"};
  });

  report("5", "truncated Rademacher series rounds to p(n), n <= 2000", [&] {
    std::vector<char> good(2001, 0);
    parallel_range(1, 2000, [&](long n) {
      const PrecisionContext ctx(auto_precision_bits(n));
      good[static_cast<std::size_t>(n)] =
          p_rademacher(n, default_truncation(n), ctx).round_to_integer() == p_big[static_cast<std::size_t>(n)];
    });
    for (long n = 1; n <= 2000; ++n) {
      if (!good[static_cast<std::size_t>(n)]) return Outcome{false, cat("first failure at n=", n)};
    }
    return Outcome{true, "n = 1..2000"};
  }, kLimit5);

  report("6", "T1 equals (c/phi) p(n) to 1e-10, n <= 500, N = 3, 4, 5", [&] {
    std::set<long> failing;
    std::mutex lock;
    for (long modulus : {3L, 4L, 5L}) {
      parallel_range(1, 500, [&](long n) {
        const PrecisionContext ctx(256);
        const Real c = require_real(c_constant(1, modulus, ctx), ctx, "c");
        const Real target = c * Real(p_big[static_cast<std::size_t>(n)], ctx) / euler_phi(modulus);
        const Real t1 = t1_series(n, 1, modulus, default_truncation(n), ctx);
        if (!(relative_difference(t1, target) <= Real::from_string("1e-10", ctx))) {
          std::lock_guard<std::mutex> guard(lock);
          failing.insert(n);
        }
      });
    }
    if (failing.empty()) return Outcome{true, "all n"};
    return Outcome{false, cat(failing.size(), " values of n fail, range [", *failing.begin(), ", ", *failing.rbegin(),
                              "]; holds for n = ", *failing.rbegin() + 1, "..500")};
  });

  report("7", "orthogonality indicator, N <= 30", [&] {
    long checked = 0;
    for (long modulus = 3; modulus <= 30; ++modulus) {
      const CharacterSet odd = odd_characters(modulus);
      for (long r = 1; r < modulus; ++r) {
        if (plain_gcd(r, modulus) != 1) continue;
        for (long n = 0; n <= 3 * modulus; ++n) {
          const long m = n % modulus;
          const int expected = m == r ? 1 : (m == modulus - r ? -1 : 0);
          if (indicator(r, odd, n) != expected) return Outcome{false, cat("N=", modulus, " r=", r, " n=", n)};
          ++checked;
        }
      }
    }
    return Outcome{true, cat(checked, " cases")};
  });

  report("8", "Dedekind reciprocity and oddness, 1 <= h < k <= 100", [&] {
    long checked = 0;
    for (long k = 2; k <= 100; ++k) {
      for (long h = 1; h < k; ++h) {
        if (plain_gcd(h, k) != 1) continue;
        const mpq_class s = dedekind_sum(h, k);
        if (s != dedekind_oracle(h, k)) return Outcome{false, cat("s(", h, ",", k, ") differs from the definition")};
        const mpq_class rhs = mpq_class(-1, 4) + (mpq_class(h, k) + mpq_class(k, h) + mpq_class(1, h * k)) / 12;
        if (s + dedekind_sum(k, h) != rhs) return Outcome{false, cat("reciprocity fails at ", h, ",", k)};
        if (dedekind_sum(k - h, k) != -s) return Outcome{false, cat("oddness fails at ", h, ",", k)};
        ++checked;
      }
    }
    return Outcome{true, cat(checked, " coprime pairs")};
  });

  report("9", "Eisenstein combination reproduces exact differences, n <= 200", [&] {
    const PartitionTable table = PartitionTable::build(200);
    const PrecisionContext ctx(256);
    const Real tolerance = Real::from_string("1e-8", ctx);
    Real worst(0, ctx);
    for (long modulus : {3L, 4L, 5L, 6L, 7L, 8L, 12L}) {
      for (long r = 1; r < modulus; ++r) {
        if (plain_gcd(r, modulus) != 1) continue;
        const auto g = g_series_coeffs(r, modulus, 200, table, ctx);
        for (long n = 0; n <= 200; ++n) {
          const Complex& z = g[static_cast<std::size_t>(n)];
          const Real residual = abs(z.re - Real(class_difference(n, r, modulus, p_small), ctx));
          if (!(residual <= tolerance) || !(abs(z.im) <= tolerance)) {
            return Outcome{false, cat("N=", modulus, " r=", r, " n=", n, " residual ", residual.to_scientific(3))};
          }
          if (residual > worst) worst = residual;
        }
      }
    }
    return Outcome{true, "largest residual " + worst.to_scientific(3)};
  });

  report("10", "cusp coefficient bound for N = 5, k <= 8, m <= 50", [&] {
    const PrecisionContext ctx(128);
    const CharacterSet odd = odd_characters(5);
    long checked = 0;
    for (long k = 1; k <= 8; ++k) {
      for (long h = 0; h < k; ++h) {
        if (plain_gcd(h, k) != 1) continue;
        const CuspData cusp = CuspData::make(h, k);
        for (long r = 1; r < 5; ++r) {
          for (long m = 1; m <= 50; ++m) {
            if (!(an_coeff(m, cusp, r, odd, ctx).abs() <= Real(2 * 4 * 25 * m, ctx))) {
              return Outcome{false, cat("h/k=", h, "/", k, " r=", r, " m=", m)};
            }
            ++checked;
          }
        }
      }
    }
    return Outcome{true, cat(checked, " coefficients")};
  });

  report("11", "zero-class main term equals the generic engine; N = 1 form", [&] {
    Outcome out;
    for (long n : {100L, 1000L, 10000L}) {
      const PrecisionContext ctx(auto_precision_bits(n));
      const Real limit = Real::from_string("1e-20", ctx);
      for (long modulus : {1L, 3L, 6L}) {
        const Real d = relative_difference(theorem2_main(n, modulus, ctx).value, theorem2_engine(n, modulus, ctx));
        if (!(d <= limit)) {
          out.passed = false;
          out.detail += cat("engine n=", n, " N=", modulus, " rel ", d.to_scientific(3), "; ");
        }
      }
      // e^{pi sqrt(2n/3)} (2 gamma + log(6n/pi^2)) / (4 pi sqrt(2n))
      const Real x(n, ctx);
      const Real form = exp(pi(ctx) * sqrt(x * 2L / 3L)) *
                        (euler_gamma(ctx) * 2L + log(x * 6L / (pi(ctx) * pi(ctx)))) / (pi(ctx) * sqrt(x * 2L) * 4L);
      const Real d = relative_difference(theorem2_main(n, 1, ctx).value, form);
      if (!(d <= limit)) {
        out.passed = false;
        out.detail += cat("N=1 form n=", n, " rel ", d.to_scientific(3), "; ");
      }
    }
    if (out.passed) out.detail = "3x3 grid and N = 1 within 1e-20";
    return out;
  });

  std::printf("%s: %d unexpected failure(s), %zu known\n", unexpected_failures ? "FAILED" : "OK",
              unexpected_failures, kBlocked.size());
  return unexpected_failures ? 1 : 0;
}
