#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qschubert/cartan.hpp"

namespace qschubert {

/// A Weyl group element, stored canonically as the integer matrix of its
/// action on the coroot lattice in the α^∨-basis. Matrix equality is element
/// equality. The length is cached at construction.
class WeylElement {
 public:
  WeylElement() = default;

  /// Takes a column-major matrix (column j is the image of α_{j+1}^∨) and
  /// computes the length against `rs`.
  static WeylElement from_matrix(const RootSystem& rs, std::vector<int> matrix);

  int rank() const { return rank_; }
  int length() const { return length_; }
  bool is_identity() const;
  /// 0-based row/column.
  int entry(int row, int col) const { return matrix_[static_cast<std::size_t>(col * rank_ + row)]; }
  const std::vector<int>& matrix() const { return matrix_; }
  std::size_t hash() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }
  /// Total order: by length, then by matrix entries.
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.matrix_ <=> b.matrix_;
  }

 private:
  friend WeylElement right_multiply(const RootSystem&, const WeylElement&, int);

  int rank_ = 0;
  int length_ = 0;
  std::vector<int> matrix_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

/// Δ_P ⊆ Δ as a sorted set of 1-based simple-root indices.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;
  explicit ParabolicSubset(std::vector<int> indices);

  static ParabolicSubset all(int rank);
  /// Δ ∖ {α_k}: the maximal parabolic of the Grassmannian Gr(k, n+1) in type A.
  static ParabolicSubset complement_of(int rank, std::initializer_list<int> removed);

  bool contains(int i) const;
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  const std::vector<int>& indices() const { return indices_; }
  void validate(const RootSystem& rs) const;

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;

 private:
  std::vector<int> indices_;
};

WeylElement identity(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
/// w·s_i, the primitive operation.
WeylElement right_multiply(const RootSystem& rs, const WeylElement& w, int i);
/// s_i·w.
WeylElement left_multiply(const RootSystem& rs, int i, const WeylElement& w);
WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

/// Product of the listed simple reflections, left to right; empty word is the identity.
WeylElement from_word(const RootSystem& rs, std::span<const int> word);
inline WeylElement from_word(const RootSystem& rs, std::initializer_list<int> word) {
  return from_word(rs, std::span<const int>(word.begin(), word.size()));
}

/// The lexicographically least among the shortest (reduced) words for w.
std::vector<int> canonical_word(const RootSystem& rs, const WeylElement& w);

/// w(λ) for λ in the coroot lattice.
CorootVector apply(const WeylElement& w, const CorootVector& lambda);

/// 1 iff ℓ(w s_i) < ℓ(w), equivalently w(α_i) ∈ -R⁺.
int sgn(const RootSystem& rs, const WeylElement& w, int i);

/// The unique minimal-length representative of w·W_P.
WeylElement min_rep(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& parabolic);
bool is_min_rep(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& parabolic);

/// Longest element ω_P of W_P, found by greedy ascent.
WeylElement longest_element(const RootSystem& rs, const ParabolicSubset& parabolic);

/// s_γ for a positive root γ given in the α-basis; throws if γ is not a positive root.
WeylElement reflection(const RootSystem& rs, const std::vector<int>& root_coords);
WeylElement reflection(const RootSystem& rs, const Root& root);

inline constexpr std::size_t kDefaultGroupCeiling = 10080;

/// All of W, breadth-first from the identity, sorted by the WeylElement order.
/// Throws ConfigError if |W| exceeds `ceiling`.
std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t ceiling = kDefaultGroupCeiling);

/// Type A only: one-line notation (t(1), …, t(n+1)) of the permutation.
std::vector<int> one_line(const RootSystem& rs, const WeylElement& w);
WeylElement from_one_line(const RootSystem& rs, std::span<const int> perm);
std::size_t inversion_count(std::span<const int> perm);

/// Parses "2 1 2" (word), "[3,1,2,4]" (type-A one-line), or "id"/"" (identity).
WeylElement parse_element(const RootSystem& rs, std::string_view text);
/// Canonical word as space-separated indices; the identity is the empty string.
std::string format_element(const RootSystem& rs, const WeylElement& w);
std::string format_word(std::span<const int> word);

}  // namespace qschubert
