#pragma once

// Exact counts of parts in residue classes, built from the partition numbers
// p(n) and divisor counts restricted to a residue class.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace partclass {

/// p(0..max_n), immutable once built.
class PartitionTable {
 public:
  /// Default cap on the estimated footprint of a table (bytes).
  static constexpr std::size_t kDefaultMemoryBudget = std::size_t{2} << 30;

  /// Builds p(0..max_n) with Euler's pentagonal recurrence.
  /// Throws ResourceError when the estimated size exceeds `memory_budget`.
  static PartitionTable build(long max_n, std::size_t memory_budget = kDefaultMemoryBudget);

  /// Adopts precomputed values (e.g. from a cache file). The values are not
  /// re-validated here; see satisfies_recurrence().
  static PartitionTable from_values(std::vector<mpz_class> values);

  long max_n() const noexcept { return static_cast<long>(values_.size()) - 1; }
  bool covers(long n) const noexcept { return n >= 0 && n <= max_n(); }

  const mpz_class& operator[](long n) const { return values_[static_cast<std::size_t>(n)]; }
  /// Bounds-checked access; throws CoverageError.
  const mpz_class& at(long n) const;
  std::span<const mpz_class> values() const noexcept { return values_; }

  /// Checks the pentagonal recurrence at index n (1 <= n <= max_n).
  bool satisfies_recurrence(long n) const;

  /// PTABLE v1 text format: header `PTABLE v1 max=<max_n>` followed by one
  /// decimal value per line, lines separated by '\n', no trailing newline.
  void write(std::ostream& out) const;
  static PartitionTable read(std::istream& in);

  /// Writes atomically (temporary file in the same directory, then rename).
  void save(const std::filesystem::path& path) const;
  static PartitionTable load(const std::filesystem::path& path);

  static std::size_t estimated_bytes(long max_n);

 private:
  explicit PartitionTable(std::vector<mpz_class> values) : values_(std::move(values)) {}
  std::vector<mpz_class> values_;
};

/// d_{r,N}(m) = #{d | m : d = r (mod N)} for 1 <= m <= max_m and all r.
class DivisorClassSieve {
 public:
  static constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

  int modulus() const noexcept { return modulus_; }
  long max_m() const noexcept { return max_m_; }
  bool covers(int modulus, long m) const noexcept { return modulus == modulus_ && m <= max_m_; }

  /// d_{r,N}(m); r is reduced mod N.
  std::uint32_t count(long r, long m) const;
  /// sigma_0(m), the sum of count(r, m) over all residues.
  std::uint32_t sigma0(long m) const;

  friend DivisorClassSieve build_divisor_sieve(int modulus, long max_m, std::size_t memory_budget);

 private:
  DivisorClassSieve(int modulus, long max_m, std::vector<std::uint32_t> counts)
      : modulus_(modulus), max_m_(max_m), counts_(std::move(counts)) {}

  int modulus_;
  long max_m_;
  std::vector<std::uint32_t> counts_;  // row-major [m][r]
};

DivisorClassSieve build_divisor_sieve(int modulus, long max_m,
                                      std::size_t memory_budget = DivisorClassSieve::kDefaultMemoryBudget);

/// A validated (n, N, r) triple with 0 <= r < N.
struct PartCountQuery {
  long n;
  int modulus;
  int residue;

  /// Throws DomainError on n < 0, N < 1, or r outside [0, N).
  PartCountQuery(long n, int modulus, int residue);
};

/// The total number of parts congruent to r mod N over all partitions of n,
/// as sum_{m<=n} d_{r,N}(m) p(n-m). Zero at n = 0.
mpz_class part_count_exact(const PartCountQuery& query, const PartitionTable& table,
                           const DivisorClassSieve& sieve);

/// T_{r,N}(n) - T_{N-r,N}(n) for 1 <= r < N.
mpz_class part_diff_exact(long n, int r, int modulus, const PartitionTable& table,
                          const DivisorClassSieve& sieve);

/// Parts divisible by N over all partitions of n: sum_{Nm<=n} sigma_0(m) p(n-Nm).
mpz_class zero_class_exact(long n, int modulus, const PartitionTable& table);

/// Largest n accepted by enumerate_oracle.
inline constexpr long kEnumerationCap = 60;

/// Brute force: walks every partition of n and counts parts = r (mod N).
/// Throws GuardError above `cap`.
std::uint64_t enumerate_oracle(long n, long r, int modulus, long cap = kEnumerationCap);

}  // namespace partclass
