#pragma once

#include <optional>
#include <vector>

namespace partclass::detail {

/// Coefficients (lowest degree first) of the n-th cyclotomic polynomial.
std::vector<long> cyclotomic_polynomial(long n);

/// An element of Z[zeta_E] accumulated as sum c_j zeta_E^j. Equality tests
/// reduce modulo the cyclotomic polynomial, so they are exact.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(long order);

  long order() const noexcept { return order_; }
  void add(long exponent, long coefficient = 1);

  /// The value when it is a rational integer, otherwise nullopt.
  std::optional<long> integer_value() const;

 private:
  long order_;
  std::vector<long> coeffs_;
};

}  // namespace partclass::detail
