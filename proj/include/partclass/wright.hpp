#pragma once

// Wright's circle method for coefficients of xi(q) L(q), in the form used for
// the zero-class count T_{0,N}(n).

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "partclass/exactparts.hpp"
#include "partclass/numerics.hpp"

namespace partclass {

enum class ProfileKind { Polynomial, Logarithmic };

/// Major-arc data. L(e^{-s}) = s^{-B} sum alpha_l s^l (polynomial kind) or
/// log(s) s^{-B} sum alpha_l s^l (logarithmic kind); xi(e^{-s}) = s^beta e^{c^2/s}(1 + O(e^{-gamma/s})).
struct MajorArcProfile {
  ProfileKind kind;
  Real B;
  std::vector<Real> alphas;
  Real beta;
  Real c;
  Real gamma_bound;

  /// Throws ShapeError if beta < 0, c <= 0 or gamma_bound <= c^2.
  void validate() const;
};

/// w_{s,r} = c^{s+beta-B+1/2} / ((-4c)^r 2 sqrt(pi)) * Gamma(s+beta-B+r+3/2) / (r! Gamma(s+beta-B-r+3/2)).
/// Zero when only the denominator Gamma sits at a pole; PoleError if the numerator does.
Real w_coeff(long s, long r, const MajorArcProfile& profile, const PrecisionContext& ctx);

/// p_r = sum_{s=0}^{r} alpha_s w_{s, r-s}. IndexError when alphas is too short.
Real p_coeff(long r, const MajorArcProfile& profile, const PrecisionContext& ctx);

/// e^{2c sqrt n} n^{(2B-2beta-3)/4} sum_{r<M} p_r n^{-r/2}.
Real wright_poly_expand(const MajorArcProfile& profile, long n, long terms, const PrecisionContext& ctx);

/// -e^{2c sqrt n} n^{-1/2} alpha_0 / (4 sqrt pi) (log n - 2 log c). Needs B - beta = 1/2.
Real wright_log_leading(const MajorArcProfile& profile, long n, const PrecisionContext& ctx);

/// B_{2m}^2 N^{2m} / ((2m)! 2m), the m-th Bernoulli coefficient of S_0(q^N).
mpq_class s0_bernoulli_term(long m, long modulus);

/// Profiles of L = (2 pi)^{-1/2} q^{1/24} S_0(q^N) split into its logarithmic
/// part (first) and polynomial part (second), each with alphas 0..order.
/// The e^{-s/24} factor is multiplied into both alpha sequences.
std::pair<MajorArcProfile, MajorArcProfile> s0_profile(long modulus, long order, const PrecisionContext& ctx);

/// Profile for L = (2 pi)^{-1/2} q^{1/24}, whose product with xi = (2 pi)^{1/2}/eta
/// generates p(n) (B = 0, Hardy-Ramanujan).
MajorArcProfile partition_profile(long order, const PrecisionContext& ctx);

struct ZeroClassAsymptotic {
  long n;
  long modulus;
  Real log_factor;  ///< log n - log(pi^2/6) + 2 gamma_E - 2 log N
  Real prefactor;   ///< e^{2 pi sqrt(n/6)} n^{-1/2} / (4 pi N sqrt 2)
  Real value;       ///< prefactor * log_factor
};

/// Leading asymptotic of T_{0,N}(n), assembled directly from its closed form.
ZeroClassAsymptotic theorem2_main(long n, long modulus, const PrecisionContext& ctx);

/// The same main term through the generic engine: log part of L1 plus the
/// one-term polynomial expansion of L2.
Real theorem2_engine(long n, long modulus, const PrecisionContext& ctx);

/// T_{0,N}(n) / theorem2_main(n, N).value
Real qn_ratio(long n, long modulus, const PrecisionContext& ctx, const PartitionTable& table);

}  // namespace partclass
