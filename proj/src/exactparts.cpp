#include "partclass/exactparts.hpp"

#include <cmath>
#include <string>

#include "partclass/errors.hpp"

namespace partclass {

namespace {

// Generalized pentagonal numbers j(3j-1)/2 and j(3j+1)/2 as a sign-tagged
// sequence: 1, 2, 5, 7, 12, 15, ...
template <typename Visit>
void for_each_pentagonal(long n, Visit&& visit) {
  for (long j = 1;; ++j) {
    const long g1 = j * (3 * j - 1) / 2;
    if (g1 > n) break;
    const bool plus = (j % 2) == 1;
    visit(g1, plus);
    const long g2 = j * (3 * j + 1) / 2;
    if (g2 <= n) visit(g2, plus);
  }
}

}  // namespace

std::size_t PartitionTable::estimated_bytes(long max_n) {
  if (max_n < 1) return sizeof(mpz_class);
  // log2 p(n) ~ pi sqrt(2n/3) / ln 2; the average over 0..max_n is ~2/3 of that.
  const double top_bits = M_PI * std::sqrt(2.0 * static_cast<double>(max_n) / 3.0) / std::log(2.0);
  const double per_entry = sizeof(mpz_class) + 8.0 + top_bits / 8.0 * (2.0 / 3.0);
  return static_cast<std::size_t>(per_entry * static_cast<double>(max_n + 1));
}

PartitionTable PartitionTable::build(long max_n, std::size_t memory_budget) {
  if (max_n < 0) throw DomainError("build_partition_table: max_n must be >= 0");
  if (estimated_bytes(max_n) > memory_budget) {
    throw ResourceError("partition table up to " + std::to_string(max_n) + " needs about " +
                        std::to_string(estimated_bytes(max_n) >> 20) + " MiB, over the configured budget");
  }
  std::vector<mpz_class> p(static_cast<std::size_t>(max_n) + 1);
  p[0] = 1;
  for (long n = 1; n <= max_n; ++n) {
    mpz_ptr acc = p[static_cast<std::size_t>(n)].get_mpz_t();
    for_each_pentagonal(n, [&](long g, bool plus) {
      mpz_srcptr term = p[static_cast<std::size_t>(n - g)].get_mpz_t();
      if (plus) {
        mpz_add(acc, acc, term);
      } else {
        mpz_sub(acc, acc, term);
      }
    });
  }
  return PartitionTable(std::move(p));
}

PartitionTable PartitionTable::from_values(std::vector<mpz_class> values) {
  if (values.empty()) throw FormatError("partition table needs at least p(0)");
  return PartitionTable(std::move(values));
}

const mpz_class& PartitionTable::at(long n) const {
  if (!covers(n)) {
    throw CoverageError("partition table covers 0.." + std::to_string(max_n()) + ", index " + std::to_string(n) +
                        " requested");
  }
  return values_[static_cast<std::size_t>(n)];
}

bool PartitionTable::satisfies_recurrence(long n) const {
  if (n < 1 || n > max_n()) return false;
  mpz_class acc = 0;
  for_each_pentagonal(n, [&](long g, bool plus) {
    if (plus) {
      acc += (*this)[n - g];
    } else {
      acc -= (*this)[n - g];
    }
  });
  return acc == (*this)[n];
}

// ---------------------------------------------------------------------------

DivisorClassSieve build_divisor_sieve(int modulus, long max_m, std::size_t memory_budget) {
  if (modulus < 1) throw DomainError("build_divisor_sieve: modulus must be >= 1");
  if (max_m < 1) throw DomainError("build_divisor_sieve: max_m must be >= 1");
  const auto rows = static_cast<std::size_t>(max_m) + 1;
  const auto width = static_cast<std::size_t>(modulus);
  if (rows > memory_budget / sizeof(std::uint32_t) / width) {
    throw ResourceError("divisor sieve " + std::to_string(modulus) + " x " + std::to_string(max_m) +
                        " exceeds the configured budget");
  }
  std::vector<std::uint32_t> counts(rows * width, 0);
  for (long d = 1; d <= max_m; ++d) {
    const auto r = static_cast<std::size_t>(d % modulus);
    for (long m = d; m <= max_m; m += d) ++counts[static_cast<std::size_t>(m) * width + r];
  }
  return DivisorClassSieve(modulus, max_m, std::move(counts));
}

std::uint32_t DivisorClassSieve::count(long r, long m) const {
  if (m < 1 || m > max_m_) {
    throw CoverageError("divisor sieve covers 1.." + std::to_string(max_m_) + ", index " + std::to_string(m));
  }
  long rr = r % modulus_;
  if (rr < 0) rr += modulus_;
  return counts_[static_cast<std::size_t>(m) * static_cast<std::size_t>(modulus_) + static_cast<std::size_t>(rr)];
}

std::uint32_t DivisorClassSieve::sigma0(long m) const {
  std::uint32_t total = 0;
  for (int r = 0; r < modulus_; ++r) total += count(r, m);
  return total;
}

// ---------------------------------------------------------------------------

PartCountQuery::PartCountQuery(long n_in, int modulus_in, int residue_in)
    : n(n_in), modulus(modulus_in), residue(residue_in) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (modulus < 1) throw DomainError("modulus must be >= 1");
  if (residue < 0 || residue >= modulus) {
    throw DomainError("residue must lie in [0, " + std::to_string(modulus) + ")");
  }
}

namespace {

void require_coverage(long n, int modulus, const PartitionTable& table, const DivisorClassSieve& sieve) {
  if (!table.covers(n)) table.at(n);  // throws CoverageError with context
  if (n >= 1 && !sieve.covers(modulus, n)) {
    throw CoverageError("divisor sieve (N=" + std::to_string(sieve.modulus()) + ", max " +
                        std::to_string(sieve.max_m()) + ") does not cover N=" + std::to_string(modulus) +
                        ", n=" + std::to_string(n));
  }
}

}  // namespace

mpz_class part_count_exact(const PartCountQuery& q, const PartitionTable& table, const DivisorClassSieve& sieve) {
  require_coverage(q.n, q.modulus, table, sieve);
  mpz_class acc = 0;
  for (long m = 1; m <= q.n; ++m) {
    const std::uint32_t d = sieve.count(q.residue, m);
    if (d != 0) mpz_addmul_ui(acc.get_mpz_t(), table[q.n - m].get_mpz_t(), d);
  }
  return acc;
}

mpz_class part_diff_exact(long n, int r, int modulus, const PartitionTable& table, const DivisorClassSieve& sieve) {
  if (modulus < 2 || r < 1 || r >= modulus) {
    throw DomainError("part_diff_exact: need 1 <= r < N, got r=" + std::to_string(r) + ", N=" +
                      std::to_string(modulus));
  }
  if (n < 0) throw DomainError("n must be nonnegative");
  require_coverage(n, modulus, table, sieve);
  mpz_class acc = 0;
  for (long m = 1; m <= n; ++m) {
    const long diff = static_cast<long>(sieve.count(r, m)) - static_cast<long>(sieve.count(modulus - r, m));
    if (diff > 0) {
      mpz_addmul_ui(acc.get_mpz_t(), table[n - m].get_mpz_t(), static_cast<unsigned long>(diff));
    } else if (diff < 0) {
      mpz_submul_ui(acc.get_mpz_t(), table[n - m].get_mpz_t(), static_cast<unsigned long>(-diff));
    }
  }
  return acc;
}

mpz_class zero_class_exact(long n, int modulus, const PartitionTable& table) {
  if (modulus < 1) throw DomainError("modulus must be >= 1");
  if (n < 0) throw DomainError("n must be nonnegative");
  table.at(n);
  const long top = n / modulus;
  if (top == 0) return 0;
  // sigma_0 for 1..top
  std::vector<std::uint32_t> sigma(static_cast<std::size_t>(top) + 1, 0);
  for (long d = 1; d <= top; ++d) {
    for (long m = d; m <= top; m += d) ++sigma[static_cast<std::size_t>(m)];
  }
  mpz_class acc = 0;
  for (long m = 1; m <= top; ++m) {
    mpz_addmul_ui(acc.get_mpz_t(), table[n - modulus * m].get_mpz_t(), sigma[static_cast<std::size_t>(m)]);
  }
  return acc;
}

// ---------------------------------------------------------------------------

namespace {

struct PartitionWalker {
  long residue;
  int modulus;
  std::uint64_t total = 0;

  // Partitions of `remaining` into parts <= `largest`; `matching` counts the
  // parts already placed that fall in the residue class.
  void walk(long remaining, long largest, std::uint64_t matching) {
    if (remaining == 0) {
      total += matching;
      return;
    }
    for (long part = std::min(largest, remaining); part >= 1; --part) {
      walk(remaining - part, part, matching + (part % modulus == residue ? 1 : 0));
    }
  }
};

}  // namespace

std::uint64_t enumerate_oracle(long n, long r, int modulus, long cap) {
  if (n > cap) {
    throw GuardError("enumerate_oracle: n=" + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
  if (modulus < 1) throw DomainError("modulus must be >= 1");
  if (n <= 0) return 0;
  long residue = r % modulus;
  if (residue < 0) residue += modulus;
  PartitionWalker walker{residue, modulus};
  walker.walk(n, n, 0);
  return walker.total;
}

}  // namespace partclass
