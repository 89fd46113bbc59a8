#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "qschubert/cartan.hpp"
#include "qschubert/weyl.hpp"

namespace qschubert {

/// Weakly decreasing, trailing zeros stripped.
using Partition = std::vector<int>;

Partition normalize_partition(Partition p);
int partition_size(const Partition& p);
/// All partitions in the rows × cols box, ordered by size, then reverse-lex.
std::vector<Partition> partitions_in_box(int rows, int cols);
/// "2,1" (and "" or "0" for ∅).
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

/// Type A_n, Gr(k, n+1). p_i = u(k-i+1) - (k-i+1).
Partition partition_of(const RootSystem& rs, const WeylElement& u, int k);
WeylElement permutation_of(const RootSystem& rs, const Partition& p, int k);
/// W^P for Δ_P = Δ∖{α_k}.
ParabolicSubset grassmannian_parabolic(const RootSystem& rs, int k);

/// Σ c q^d σ_p keyed by (p, d).
using PartitionElement = std::map<std::pair<Partition, int>, mpz_class>;

/// Quantum Pieri for Gr(k, n+1): σ_{(r)} ⋆ σ_p. Degrees 0 and 1 only.
PartitionElement pieri_oracle_product(int k, int n, const Partition& p, int r);

/// Products of arbitrary Schubert classes on Gr(k, n+1) from the Pieri rule
/// alone, by writing σ_μ as a q-combination of row products
/// σ_{μ_1}⋆σ_{μ_2}⋆⋯ (triangular in size and dominance). Memoized and
/// thread-safe.
class PieriOracle {
 public:
  PieriOracle(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  PartitionElement product(const Partition& a, const Partition& b) const;
  mpz_class coefficient(const Partition& a, const Partition& b, const Partition& c, int d) const;

 private:
  using Word = std::vector<int>;
  /// σ_μ = Σ c q^d · (row product over the word).
  using WordCombination = std::map<std::pair<Word, int>, mpq_class>;

  const WordCombination& giambelli(const Partition& mu) const;
  PartitionElement apply_word(const Word& word, const PartitionElement& x) const;

  int k_;
  int n_;
  mutable std::mutex mutex_;
  mutable std::map<Partition, WordCombination> giambelli_;
  mutable std::map<std::pair<Partition, Partition>, PartitionElement> products_;
};

/// λ_B and ω_Pω_{P′} for degree d on Gr(k, n+1) from the closed formulas.
struct GrassLift {
  CorootVector lambda_B;
  WeylElement omega_factor;
  int m1 = 0, r1 = 0, m2 = 0, r2 = 0;
};
GrassLift grass_lambda_b(const RootSystem& rs, int k, int d);

/// s_{m-i+1}⋯s_{m-1}s_m and its inverse; i = 0 gives the identity.
WeylElement u_block(const RootSystem& rs, int i, int m);
WeylElement v_block(const RootSystem& rs, int i, int m);

struct XElement {
  int k = 0;
  int d = 0;
  WeylElement element;
};

/// x = v_d^{(k)} u_{d-1}^{(k+d-1)} v_{d-1}^{(k)} ⋯ v_2^{(k)} u_1^{(k+1)} s_k. Checks
/// ℓ(x) = d², x = x^{-1} and the support window; requires 1 ≤ d ≤ k, k+d-1 ≤ n.
XElement x_element(const RootSystem& rs, int k, int d);

enum class Q2CFailure { DegreeTooLarge, UxLength, VxLength, WTildeNotMinimal };
std::string_view to_string(Q2CFailure f);

struct Q2CResult {
  std::optional<Q2CFailure> vanishes;  // first failing condition, in the order above
  WeylElement ux;
  WeylElement vx;
  WeylElement w_tilde;
  ParabolicSubset two_step;  // Δ∖{α_{k-d}, α_{k+d}}
};

/// Degree-d Grassmannian constant as a classical two-step number. d = 0 returns
/// the triple unchanged with the Grassmannian parabolic.
Q2CResult quantum_to_classical(const RootSystem& rs, int k, const WeylElement& u, const WeylElement& v,
                               const WeylElement& w, int d);

/// One-line notation of v with positions k-d+1..k+d sorted increasingly.
std::vector<int> sort_view(const RootSystem& rs, const WeylElement& v, int k, int d);

}  // namespace qschubert
