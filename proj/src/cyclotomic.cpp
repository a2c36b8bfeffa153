#include "cyclotomic.hpp"

#include <map>
#include <stdexcept>

namespace partclass::detail {

namespace {

// Exact quotient of `num` by the monic polynomial `den`.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("cyclotomic: degree underflow");
  std::vector<long> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const long lead = num[i];
    quot[i - dd] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= lead * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic: inexact division");
  }
  return quot;
}

std::vector<long> cyclotomic_cached(long n, std::map<long, std::vector<long>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_cached(d, memo));
  }
  memo.emplace(n, poly);
  return poly;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  std::map<long, std::vector<long>> memo;
  return cyclotomic_cached(n, memo);
}

CyclotomicSum::CyclotomicSum(long order) : order_(order), coeffs_(static_cast<std::size_t>(order), 0) {
  if (order < 1) throw std::invalid_argument("CyclotomicSum: order must be >= 1");
}

void CyclotomicSum::add(long exponent, long coefficient) {
  long e = exponent % order_;
  if (e < 0) e += order_;
  coeffs_[static_cast<std::size_t>(e)] += coefficient;
}

std::optional<long> CyclotomicSum::integer_value() const {
  const std::vector<long> phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  std::vector<long> rem = coeffs_;
  for (std::size_t i = rem.size(); i-- > deg;) {
    const long lead = rem[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) rem[i - deg + j] -= lead * phi[j];
  }
  for (std::size_t i = 1; i < std::min(deg, rem.size()); ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return rem[0];
}

}  // namespace partclass::detail
