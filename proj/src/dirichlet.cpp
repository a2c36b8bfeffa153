#include "partclass/dirichlet.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "cyclotomic.hpp"
#include "partclass/errors.hpp"

namespace partclass {

long gcd(long a, long b) { return std::gcd(a, b); }

long reduce_mod(long a, long modulus) {
  long r = a % modulus;
  return r < 0 ? r + modulus : r;
}

long euler_phi(long n) {
  if (n < 1) throw DomainError("euler_phi: n must be >= 1");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

long mod_inverse(long r, long modulus) {
  if (modulus < 1) throw DomainError("mod_inverse: modulus must be >= 1");
  if (gcd(reduce_mod(r, modulus), modulus) != 1) {
    throw DomainError("gcd(" + std::to_string(r) + ", " + std::to_string(modulus) + ") != 1");
  }
  if (modulus == 1) return 0;
  long t = 0, new_t = 1;
  long rr = modulus, new_r = reduce_mod(r, modulus);
  while (new_r != 0) {
    const long q = rr / new_r;
    t = std::exchange(new_t, t - q * new_t);
    rr = std::exchange(new_r, rr - q * new_r);
  }
  return reduce_mod(t, modulus);
}

namespace {

long pow_mod(long base, long e, long modulus) {
  __int128 result = 1 % modulus;
  __int128 b = reduce_mod(base, modulus);
  while (e > 0) {
    if (e & 1) result = result * b % modulus;
    b = b * b % modulus;
    e >>= 1;
  }
  return static_cast<long>(result);
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a > 0) out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long primitive_root_mod_prime(long p) {
  if (p == 2) return 1;
  const auto factors = factorize(p - 1);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, a] : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

// x mod q lifted to N with x = 1 on the complementary factor N/q.
long crt_lift(long x, long q, long modulus) {
  const long rest = modulus / q;
  if (rest == 1) return reduce_mod(x, modulus);
  // X = x + q*t with X = 1 (mod rest)
  const long t = reduce_mod((1 - x) % rest * mod_inverse(q % rest, rest), rest);
  return reduce_mod(x + q * t, modulus);
}

}  // namespace

UnitGroupStructure::UnitGroupStructure(long modulus) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("unit_group: modulus must be >= 1");
  for (const auto& [p, a] : factorize(modulus)) {
    long q = 1;
    for (int i = 0; i < a; ++i) q *= p;
    if (p == 2) {
      if (a == 2) {
        generators_.push_back(crt_lift(3, q, modulus));
        orders_.push_back(2);
      } else if (a >= 3) {
        generators_.push_back(crt_lift(q - 1, q, modulus));
        orders_.push_back(2);
        generators_.push_back(crt_lift(5, q, modulus));
        orders_.push_back(q / 4);
      }
      continue;
    }
    long g = primitive_root_mod_prime(p);
    if (a >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
    generators_.push_back(crt_lift(g, q, modulus));
    orders_.push_back(q / p * (p - 1));
  }
  totient_ = 1;
  for (long o : orders_) {
    totient_ *= o;
    exponent_ = std::lcm(exponent_, o);
  }

  const std::size_t rank = orders_.size();
  table_.assign(static_cast<std::size_t>(modulus) * rank, 0);
  unit_mask_.assign(static_cast<std::size_t>(modulus), false);
  std::vector<long> e(rank, 0);
  for (long count = 0; count < totient_; ++count) {
    long x = 1 % modulus;
    for (std::size_t i = 0; i < rank; ++i) {
      x = static_cast<long>(static_cast<__int128>(x) * pow_mod(generators_[i], e[i], modulus) % modulus);
    }
    if (unit_mask_[static_cast<std::size_t>(x)]) throw std::logic_error("unit_group: generators are dependent");
    unit_mask_[static_cast<std::size_t>(x)] = true;
    for (std::size_t i = 0; i < rank; ++i) table_[static_cast<std::size_t>(x) * rank + i] = e[i];
    // odometer increment
    for (std::size_t i = 0; i < rank; ++i) {
      if (++e[i] < orders_[i]) break;
      e[i] = 0;
    }
  }
  if (modulus == 1) unit_mask_[0] = true;
}

bool UnitGroupStructure::is_unit(long a) const { return unit_mask_[static_cast<std::size_t>(reduce_mod(a, modulus_))]; }

std::span<const long> UnitGroupStructure::exponents_of(long a) const {
  const long x = reduce_mod(a, modulus_);
  if (!unit_mask_[static_cast<std::size_t>(x)]) {
    throw DomainError(std::to_string(a) + " is not a unit mod " + std::to_string(modulus_));
  }
  const std::size_t rank = orders_.size();
  return std::span<const long>(table_).subspan(static_cast<std::size_t>(x) * rank, rank);
}

UnitGroupStructure unit_group(long modulus) { return UnitGroupStructure(modulus); }

// ---------------------------------------------------------------------------

RootOfUnity RootOfUnity::from_fraction(long numerator, long denominator) {
  if (denominator < 1) throw DomainError("root of unity needs a positive denominator");
  long num = reduce_mod(numerator, denominator);
  const long g = gcd(num, denominator);
  return RootOfUnity{num / g, denominator / g};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& rhs) const {
  const long den = std::lcm(denominator, rhs.denominator);
  return from_fraction(numerator * (den / denominator) + rhs.numerator * (den / rhs.denominator), den);
}

RootOfUnity RootOfUnity::conj() const { return from_fraction(-numerator, denominator); }

Complex RootOfUnity::realize(const PrecisionContext& ctx) const { return root_of_unity(turns(), ctx); }

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<long> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_->orders().size()) {
    throw DomainError("character exponent vector has the wrong length");
  }
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    exponents_[i] = reduce_mod(exponents_[i], group_->orders()[i]);
  }
  const auto minus_one = exponent_index(modulus() - 1);
  parity_ = (minus_one && *minus_one != 0) ? -1 : 1;
}

std::optional<long> DirichletCharacter::exponent_index(long a) const {
  if (!group_->is_unit(a)) return std::nullopt;
  const long big = group_->exponent();
  const auto e = group_->exponents_of(a);
  const auto orders = group_->orders();
  long acc = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    acc = reduce_mod(acc + exponents_[i] * e[i] % orders[i] * (big / orders[i]), big);
  }
  return acc;
}

std::optional<RootOfUnity> DirichletCharacter::value(long a) const {
  const auto idx = exponent_index(a);
  if (!idx) return std::nullopt;
  return RootOfUnity::from_fraction(*idx, group_->exponent());
}

Complex DirichletCharacter::value(long a, const PrecisionContext& ctx) const {
  const auto v = value(a);
  if (!v) return Complex(ctx);
  return v->realize(ctx);
}

CharacterSet all_characters(long modulus) {
  auto group = std::make_shared<const UnitGroupStructure>(modulus);
  CharacterSet out;
  out.modulus = modulus;
  const auto orders = group->orders();
  std::vector<long> k(orders.size(), 0);
  for (long count = 0; count < group->totient(); ++count) {
    out.members.emplace_back(group, k);
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (++k[i] < orders[i]) break;
      k[i] = 0;
    }
  }
  return out;
}

CharacterSet odd_characters(long modulus) {
  if (modulus < 3) throw DomainError("odd characters need N >= 3, got N=" + std::to_string(modulus));
  CharacterSet all = all_characters(modulus);
  CharacterSet out;
  out.modulus = modulus;
  for (auto& psi : all.members) {
    if (psi.is_odd()) out.members.push_back(std::move(psi));
  }
  return out;
}

std::optional<RootOfUnity> chi_value(const DirichletCharacter& psi, long a) { return psi.value(a); }

int indicator(long r, const CharacterSet& odd, long n) {
  const long modulus = odd.modulus;
  const long r_inv = mod_inverse(r, modulus);
  if (odd.members.empty()) throw DomainError("indicator needs the odd characters mod N");
  detail::CyclotomicSum sum(odd.members.front().group().exponent());
  const long target = reduce_mod(reduce_mod(n, modulus) * r_inv, modulus);
  for (const auto& psi : odd.members) {
    if (auto idx = psi.exponent_index(target)) sum.add(*idx);
  }
  const auto value = sum.integer_value();
  const long phi = euler_phi(modulus);
  if (!value || (2 * *value) % phi != 0) {
    throw std::logic_error("indicator: odd-character sum is not an integer multiple of phi(N)/2");
  }
  return static_cast<int>(2 * *value / phi);
}

int indicator(long r, long modulus, long n) {
  if (gcd(reduce_mod(r, modulus), modulus) != 1) {
    throw DomainError("indicator: gcd(r, N) must be 1");
  }
  return indicator(r, odd_characters(modulus), n);
}

Real require_real(const Complex& z, const PrecisionContext& ctx, const char* what) {
  Real scale = abs(z.re);
  if (scale < Real(1, ctx)) scale = Real(1, ctx);
  Real tolerance(ctx);
  mpfr_mul_2si(tolerance.get(), scale.get(), -(ctx.bits() - 16), MPFR_RNDN);
  if (abs(z.im) > tolerance) {
    throw ImaginaryResidueError(std::string(what) + ": imaginary residue " + z.im.to_scientific(6) +
                                " exceeds tolerance " + tolerance.to_scientific(3));
  }
  Real out = z.re;
  return out.set_precision(ctx.bits());
}

Complex l_zero(const DirichletCharacter& psi, const PrecisionContext& ctx) {
  if (!psi.is_odd()) throw DomainError("l_zero: character must be odd");
  const long modulus = psi.modulus();
  Complex acc(ctx);
  for (long a = 1; a < modulus; ++a) {
    if (psi.value(a)) acc += psi.value(a, ctx) * Real(a, ctx);
  }
  return -(acc / Real(modulus, ctx));
}

Complex c_constant(long r, const CharacterSet& odd, const PrecisionContext& ctx) {
  const long r_inv = mod_inverse(r, odd.modulus);
  Complex acc(ctx);
  for (const auto& psi : odd.members) acc += psi.value(r_inv, ctx) * l_zero(psi, ctx);
  Complex out = -acc;
  require_real(out, ctx, "c_constant");
  return out;
}

Complex c_constant(long r, long modulus, const PrecisionContext& ctx) {
  if (modulus < 3) throw DomainError("c_constant needs N >= 3");
  if (gcd(reduce_mod(r, modulus), modulus) != 1) throw DomainError("c_constant: gcd(r, N) must be 1");
  return c_constant(r, odd_characters(modulus), ctx);
}

std::vector<Complex> eisenstein_coeffs(const DirichletCharacter& psi, long max_index, const PrecisionContext& ctx) {
  if (max_index < 0) throw DomainError("eisenstein_coeffs: M must be >= 0");
  // Exact twisted divisor sums first, realized once per residue class.
  const long modulus = psi.modulus();
  std::vector<Complex> residue_value;
  residue_value.reserve(static_cast<std::size_t>(modulus));
  for (long a = 0; a < modulus; ++a) residue_value.push_back(psi.value(a, ctx));

  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(max_index) + 1);
  out.push_back(l_zero(psi, ctx));
  for (long n = 1; n <= max_index; ++n) out.emplace_back(ctx);
  for (long d = 1; d <= max_index; ++d) {
    const Complex& v = residue_value[static_cast<std::size_t>(d % modulus)];
    if (v.re.is_zero() && v.im.is_zero()) continue;
    for (long n = d; n <= max_index; n += d) out[static_cast<std::size_t>(n)] += v;
  }
  for (long n = 1; n <= max_index; ++n) out[static_cast<std::size_t>(n)] *= Real(2, ctx);
  return out;
}

std::vector<Complex> g_series_coeffs(long r, long modulus, long max_index, const PartitionTable& table,
                                     const PrecisionContext& ctx) {
  if (modulus < 3) throw DomainError("g_series_coeffs needs N >= 3");
  if (gcd(reduce_mod(r, modulus), modulus) != 1) throw DomainError("g_series_coeffs: gcd(r, N) must be 1");
  if (max_index < 0) throw DomainError("g_series_coeffs: M must be >= 0");
  table.at(max_index);

  const CharacterSet odd = odd_characters(modulus);
  const long r_inv = mod_inverse(r, modulus);

  // e(m): coefficients of c_{r,N} + sum psi(r') E_1^psi
  std::vector<Complex> e(static_cast<std::size_t>(max_index) + 1, Complex(ctx));
  e[0] = c_constant(r, odd, ctx);
  for (const auto& psi : odd.members) {
    const Complex weight = psi.value(r_inv, ctx);
    const auto coeffs = eisenstein_coeffs(psi, max_index, ctx);
    for (long m = 0; m <= max_index; ++m) e[static_cast<std::size_t>(m)] += weight * coeffs[static_cast<std::size_t>(m)];
  }

  std::vector<Real> p;
  p.reserve(static_cast<std::size_t>(max_index) + 1);
  for (long j = 0; j <= max_index; ++j) p.emplace_back(table[j], ctx);

  const Real phi(euler_phi(modulus), ctx);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(max_index) + 1);
  for (long n = 0; n <= max_index; ++n) {
    Complex acc(ctx);
    for (long j = 0; j <= n; ++j) acc += e[static_cast<std::size_t>(n - j)] * p[static_cast<std::size_t>(j)];
    out.push_back(acc / phi);
  }
  return out;
}

}  // namespace partclass
