#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "qschubert/cartan.hpp"
#include "qschubert/qhring.hpp"
#include "qschubert/weyl.hpp"

namespace qschubert {

/// Transport data from G/P to G/B for one degree class λ_P + Q_P^∨.
struct PWLift {
  ParabolicSubset parabolic;      // Δ_P
  CorootVector lambda_P;          // representative, Δ_P-coordinates zeroed
  CorootVector lambda_B;
  ParabolicSubset delta_P_prime;  // {β ∈ Δ_P : ⟨β, λ_B⟩ = 0}
  WeylElement omega_factor;       // ω_P ω_{P′}
};

/// True iff ⟨γ, λ⟩ ∈ {0, -1} for every positive root γ of the Levi of P.
bool certify_lambda_b(const RootSystem& rs, const ParabolicSubset& parabolic, const CorootVector& lambda);

/// Positive roots γ whose support lies in Δ_P.
std::vector<const Root*> levi_positive_roots(const RootSystem& rs, const ParabolicSubset& parabolic);

/// The unique lift. Candidates are obtained by solving ⟨α_j, λ_B⟩ = t_j for every
/// t ∈ {0,-1}^{Δ_P} and then certified; anything other than exactly one survivor
/// is an InvariantViolation.
PWLift lambda_b(const RootSystem& rs, const ParabolicSubset& parabolic, const CorootVector& lambda_P);

/// Brute force over 0 ≤ Δ_P-coordinates ≤ 2·max(λ coords)+3. Test support.
std::vector<CorootVector> lambda_b_candidates_in_box(const RootSystem& rs, const ParabolicSubset& parabolic,
                                                     const CorootVector& lambda_P);

/// q_{λ_P} σ^w ↦ q_{λ_B} σ^{w ω_P ω_{P′}}. Requires w ∈ W^P.
std::pair<CorootVector, WeylElement> psi_lift(const RootSystem& rs, const ParabolicSubset& parabolic,
                                              const CorootVector& lambda_P, const WeylElement& w);

/// N_{u,v}^{w,λ_P} on G/P, read off G/B. Requires u, v, w ∈ W^P.
mpz_class gp_coefficient(const QuantumRing& ring, const ParabolicSubset& parabolic, const WeylElement& u,
                         const WeylElement& v, const WeylElement& w, const CorootVector& lambda_P);

}  // namespace qschubert
