#pragma once

// Circle-method evaluation of T_{r,N}(n) - T_{N-r,N}(n): Dedekind and
// Kloosterman sums, the cusp expansion of the weight-one Eisenstein
// combination, the two Bessel series and the leading two-term asymptotic.

#include <gmpxx.h>

#include <optional>

#include "partclass/dirichlet.hpp"
#include "partclass/exactparts.hpp"
#include "partclass/numerics.hpp"

namespace partclass {

/// A cusp h/k with H in [1, k] and hH = -1 (mod k). For k = 1 the cusp is
/// (0, 1) and H = 1.
struct CuspData {
  long h = 0;
  long k = 1;
  long H = 1;

  /// Validates gcd(h, k) = 1, 0 <= h < k (or (0, 1)) and solves for H.
  static CuspData make(long h, long k);
  /// (hH + 1)/k, the upper right entry of alpha_{h,k}.
  long upper_right() const;
};

/// s(h, k) = sum_{r=1}^{k-1} (r/k)(hr/k - floor(hr/k) - 1/2), exactly.
mpq_class dedekind_sum(long h, long k);

/// A_k(n) = sum_{0<=h<k, (h,k)=1} exp(pi i s(h,k) - 2 pi i n h / k).
Complex kloosterman_A(long k, long n, const PrecisionContext& ctx);

/// Rademacher's series for p(n) truncated at k <= K.
Real p_rademacher(long n, long truncation, const PrecisionContext& ctx);

/// zeta^d(1) = pi i / N + (pi / N) cot(pi d / N). Throws SingularityError for d = 0 (mod N).
Complex zeta_special(long d, long modulus, const PrecisionContext& ctx);

/// Constant term c_psi(h, k) of E_1^psi slashed by alpha_{h,k}.
Complex c_psi_cusp(const DirichletCharacter& psi, const CuspData& cusp, const PrecisionContext& ctx);

/// a_0(h, k) = sum_{psi odd} c_psi(h, k) psi(r').
Complex a0(const CuspData& cusp, long r, long modulus, const PrecisionContext& ctx);
Complex a0(const CuspData& cusp, long r, const CharacterSet& odd, const PrecisionContext& ctx);

/// Coefficient of q^{m/N} (m >= 1) of E_{r,N} slashed by alpha_{h,k}:
/// (1/N) sum_psi psi(r') sum_{c,e} psi(c) sum_{d | m, m/d = -hc-ke} sgn(d) e^{2 pi i d (Ac + He)/N},
/// with d over positive and negative divisors of m and A = (hH+1)/k.
Complex an_coeff(long m, const CuspData& cusp, long r, long modulus, const PrecisionContext& ctx);
Complex an_coeff(long m, const CuspData& cusp, long r, const CharacterSet& odd, const PrecisionContext& ctx);

/// B_k(n) = sum_{1<=h<=k, (h,k)=1} a_0(h, k) exp(pi i s(h,k) - 2 pi i n h / k).
Complex b_k(long k, long n, long r, long modulus, const PrecisionContext& ctx);
Complex b_k(long k, long n, long r, const CharacterSet& odd, const PrecisionContext& ctx);

/// ceil(sqrt(n)), the default truncation of the Bessel series.
long default_truncation(long n);

/// T1: (c_{r,N}/phi(N)) times Rademacher's series truncated at k <= K.
Real t1_series(long n, long r, long modulus, long truncation, const PrecisionContext& ctx);

/// T2: the I_{1/2} series over B_k(n), truncated at k <= K.
Real t2_series(long n, long r, long modulus, long truncation, const PrecisionContext& ctx);

enum class EstimateMode { TwoTerm, Series };

struct AsymptoticDiffResult {
  long n = 0;
  long r = 0;
  long modulus = 0;
  EstimateMode mode = EstimateMode::TwoTerm;
  Real main1;  ///< cotangent term, e^X / sqrt(n - 1/24)
  Real main2;  ///< L(0, psi) term, e^X / (n - 1/24)
  std::optional<Real> t1;
  std::optional<Real> t2;
  Real estimate;  ///< main1 + main2, or t1 + t2 in series mode
  long truncation = 0;
};

/// Two-term asymptotic for 1 <= r < N/2, gcd(r, N) = 1, N >= 3.
AsymptoticDiffResult theorem1_main(long n, long r, long modulus, const PrecisionContext& ctx);

/// Same two terms for any unit 1 <= r < N (no r < N/2 restriction).
AsymptoticDiffResult theorem1_terms(long n, long r, long modulus, const PrecisionContext& ctx);

/// theorem1_terms plus the truncated T1 and T2 series; estimate = t1 + t2.
AsymptoticDiffResult theorem1_series(long n, long r, long modulus, long truncation, const PrecisionContext& ctx);

/// Exact difference divided by the two-term estimate.
Real q_ratio(long n, long r, long modulus, const PrecisionContext& ctx, const PartitionTable& table,
             const DivisorClassSieve& sieve);

}  // namespace partclass
