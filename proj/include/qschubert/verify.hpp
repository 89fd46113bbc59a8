#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qschubert/qhring.hpp"
#include "qschubert/reduce.hpp"

namespace qschubert {

struct VerificationReport {
  std::string suite;
  std::uint64_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  /// "<suite>: N checks, M violations"
  std::string summary() const;
  /// Appends counts and violations; callers merge in a fixed order.
  void merge(const VerificationReport& other);
};

/// No nonzero N_{u,v}^{w,λ} violates sgn_α(w)+⟨α,λ⟩ ≤ sgn_α(u)+sgn_α(v).
VerificationReport verify_sgn_vanishing(const QuantumRing& ring, int jobs = 1);

/// Every applicable rule instance (both transfers and R1-BOTH, lowering) on
/// degree-consistent quads with effective λ preserves the constant. Strict mode
/// only visits quads with common value 2.
VerificationReport verify_rewrite_rules(const QuantumRing& ring, RuleMode mode, int jobs = 1);

/// Sgn vanishing plus both rule suites in one report: strict rules and
/// generalized transfer.
VerificationReport verify_theorem1(const QuantumRing& ring, int jobs = 1);

/// Filtration, leading-term and graded-component checks (a)–(e) for every simple
/// α. Pairs with ℓ(u)+ℓ(v) > length_cap are skipped (negative: no cap).
VerificationReport verify_filtration(const QuantumRing& ring, int length_cap = -1, int jobs = 1);

/// Grassmannian reduction against the engine for every descent k, both modes,
/// and value independence over all admissible choice sequences.
VerificationReport verify_theorem2(const QuantumRing& ring, int jobs = 1);

/// Gr(k, n+1) for every k: gp_coefficient against the Pieri oracle, closed vs
/// generic λ_B, degree compatibility; box uniqueness of λ_B for every
/// parabolic subset and small λ.
VerificationReport verify_pw(const QuantumRing& ring, int jobs = 1);

/// x invariants, degree bound, the two-step equality, two-step membership and the
/// sorting description, for every k.
VerificationReport verify_grassmann(const QuantumRing& ring, int jobs = 1);

/// Commutativity, associativity (exhaustive when random_triples == 0, else
/// that many triples from a fixed seed), Chevalley consistency, expansion
/// reproduction, homogeneity and non-negativity.
VerificationReport verify_hygiene(const QuantumRing& ring, std::size_t random_triples = 0, std::uint64_t seed = 20240601,
                                  int jobs = 1);

/// All effective λ with |λ| = height in the given rank.
std::vector<CorootVector> effective_of_height(int rank, int height);

}  // namespace qschubert
