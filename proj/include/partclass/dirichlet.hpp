#pragma once

// Dirichlet characters modulo N, with values kept as exact roots of unity.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "partclass/exactparts.hpp"
#include "partclass/numerics.hpp"

namespace partclass {

long gcd(long a, long b);
long euler_phi(long n);
/// r' with r r' = 1 (mod N). Throws DomainError when gcd(r, N) != 1.
long mod_inverse(long r, long modulus);
/// Representative of a in [0, N).
long reduce_mod(long a, long modulus);

/// Cyclic decomposition of (Z/NZ)^*: every unit is uniquely
/// prod g_i^{e_i} with 0 <= e_i < order_i.
class UnitGroupStructure {
 public:
  explicit UnitGroupStructure(long modulus);

  long modulus() const noexcept { return modulus_; }
  std::span<const long> generators() const noexcept { return generators_; }
  std::span<const long> orders() const noexcept { return orders_; }
  long totient() const noexcept { return totient_; }
  /// lcm of the orders; every character value is an exponent()-th root of 1.
  long exponent() const noexcept { return exponent_; }

  bool is_unit(long a) const;
  /// Exponent vector of a unit; empty span for N = 1. Throws DomainError for non-units.
  std::span<const long> exponents_of(long a) const;

 private:
  long modulus_;
  long totient_ = 1;
  long exponent_ = 1;
  std::vector<long> generators_;
  std::vector<long> orders_;
  std::vector<long> table_;       // [residue * rank + i] = e_i; valid for units
  std::vector<bool> unit_mask_;
};

UnitGroupStructure unit_group(long modulus);

/// exp(2 pi i t) with t = numerator / denominator in [0, 1), reduced.
struct RootOfUnity {
  long numerator = 0;
  long denominator = 1;

  static RootOfUnity from_fraction(long numerator, long denominator);
  RootOfUnity operator*(const RootOfUnity& rhs) const;
  RootOfUnity conj() const;
  mpq_class turns() const { return mpq_class(numerator, denominator); }
  Complex realize(const PrecisionContext& ctx) const;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// A character mod N fixed by its exponent vector k: psi(g_i) = exp(2 pi i k_i / order_i).
class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<long> exponents);

  long modulus() const noexcept { return group_->modulus(); }
  std::span<const long> exponents() const noexcept { return exponents_; }
  const UnitGroupStructure& group() const noexcept { return *group_; }
  /// psi(-1), either +1 or -1.
  int parity() const noexcept { return parity_; }
  bool is_odd() const noexcept { return parity_ == -1; }

  /// psi(a): nullopt stands for the value 0 (gcd(a, N) > 1).
  std::optional<RootOfUnity> value(long a) const;
  /// psi(a) as a complex number.
  Complex value(long a, const PrecisionContext& ctx) const;
  /// psi(a) as a power of zeta_E with E = group().exponent(), or nullopt for 0.
  std::optional<long> exponent_index(long a) const;

 private:
  std::shared_ptr<const UnitGroupStructure> group_;
  std::vector<long> exponents_;
  int parity_ = 1;
};

struct CharacterSet {
  long modulus = 1;
  std::vector<DirichletCharacter> members;
};

/// Every character mod N.
CharacterSet all_characters(long modulus);
/// The phi(N)/2 odd characters mod N. Throws DomainError for N < 3.
CharacterSet odd_characters(long modulus);

/// chi_value: psi(a) as an exact root of unity (nullopt means 0).
std::optional<RootOfUnity> chi_value(const DirichletCharacter& psi, long a);

/// (2/phi(N)) sum_{psi odd} psi(n r'), accumulated exactly in Z[zeta_E].
/// Equals 1 for n = r, -1 for n = -r and 0 otherwise (mod N).
int indicator(long r, long modulus, long n);
int indicator(long r, const CharacterSet& odd, long n);

/// L(0, psi) = -(1/N) sum_{a=1}^{N-1} psi(a) a for odd psi.
Complex l_zero(const DirichletCharacter& psi, const PrecisionContext& ctx);

/// c_{r,N} = -sum_{psi odd} psi(r') L(0, psi); real, checked against the
/// imaginary residue tolerance.
Complex c_constant(long r, long modulus, const PrecisionContext& ctx);
Complex c_constant(long r, const CharacterSet& odd, const PrecisionContext& ctx);

/// Coefficients 0..M of E_1^psi: L(0, psi), then 2 sum_{d|n} psi(d).
std::vector<Complex> eisenstein_coeffs(const DirichletCharacter& psi, long max_index, const PrecisionContext& ctx);

/// Coefficients 0..M of (1/phi(N)) (q^{1/24}/eta) (c_{r,N} + sum psi(r') E_1^psi).
std::vector<Complex> g_series_coeffs(long r, long modulus, long max_index, const PartitionTable& table,
                                     const PrecisionContext& ctx);

/// Imaginary parts below 2^(-bits+16) (relative to max(1, |z|)) are
/// accepted as rounding residue; larger ones raise ImaginaryResidueError.
Real require_real(const Complex& z, const PrecisionContext& ctx, const char* what);

}  // namespace partclass
