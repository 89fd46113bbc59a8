#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qschubert/cartan.hpp"
#include "qschubert/weyl.hpp"

namespace qschubert {

/// The basis symbol q_λ σ^w.
struct Term {
  WeylElement w;
  CorootVector lambda;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.w <=> b.w; c != 0) return c;
    return a.lambda <=> b.lambda;
  }
};

/// A finite sparse integer combination Σ c q_λ σ^w. Zero coefficients are
/// never stored.
class QHElement {
 public:
  using Map = std::map<Term, mpz_class>;

  QHElement() = default;
  static QHElement basis(const WeylElement& w, const CorootVector& lambda);

  void add(const Term& term, const mpz_class& coeff);
  mpz_class coefficient(const Term& term) const;
  /// The λ = 0 part.
  QHElement classical_part() const;
  /// The λ ≠ 0 part.
  QHElement quantum_part() const;
  /// Multiplies every term by q_μ.
  QHElement shifted(const CorootVector& mu) const;

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  QHElement& operator+=(const QHElement& other);
  QHElement& operator-=(const QHElement& other);
  friend bool operator==(const QHElement&, const QHElement&) = default;

 private:
  Map terms_;
};

/// σ^{s_i} ⋆ σ^w by the quantum Chevalley formula for G/B.
QHElement chevalley(const RootSystem& rs, int i, const WeylElement& w);

struct ExpansionEntry {
  int simple = 0;          // i
  WeylElement factor;      // u′ with ℓ(u′) = ℓ(u) - 1
  mpq_class coeff;
};

/// σ^u = Σ coeff · σ^{s_i} ⋆ σ^{u′} - Σ correction.
struct Expansion {
  std::vector<ExpansionEntry> entries;
  std::vector<std::pair<Term, mpq_class>> correction;
};

/// Divisor expansions of every σ^u with 2 ≤ ℓ(u) ≤ up_to_length.
class ExpansionTable {
 public:
  int up_to_length() const { return up_to_length_; }
  const Expansion* find(const WeylElement& u) const;
  std::size_t size() const { return by_element_.size(); }
  const std::map<WeylElement, Expansion>& entries() const { return by_element_; }

  void set_up_to_length(int length) { up_to_length_ = length; }
  void insert(WeylElement u, Expansion e) { by_element_.insert_or_assign(std::move(u), std::move(e)); }

 private:
  int up_to_length_ = 1;
  std::map<WeylElement, Expansion> by_element_;
};

using ChevalleyFn = std::function<QHElement(int, const WeylElement&)>;

/// Solves the classical Monk system length by length with exact rational
/// elimination. Throws InvariantViolation if a system is singular.
ExpansionTable build_expansion(const RootSystem& rs, int up_to_length);
ExpansionTable build_expansion(const RootSystem& rs, int up_to_length, const ChevalleyFn& chevalley_fn);

/// Re-evaluates the stored combination for u against the Chevalley formula;
/// true iff it reproduces σ^u exactly.
bool expansion_reproduces(const RootSystem& rs, const WeylElement& u, const Expansion& e, const ChevalleyFn& chevalley_fn);

/// Quantum cohomology of G/B with memoized products.
///
/// Thread-safe: products are pure functions of their inputs; the memo tables
/// take a shared lock for reads and a unique lock for inserts.
class QuantumRing {
 public:
  explicit QuantumRing(RootSystem rs, std::size_t group_ceiling = kDefaultGroupCeiling);

  const RootSystem& root_system() const { return rs_; }
  /// W sorted by (length, matrix).
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& longest() const { return elements_.back(); }

  QHElement chevalley(int i, const WeylElement& w) const;
  const ExpansionTable& expansion() const;

  /// σ^u ⋆ σ^v, memoized under the unordered pair.
  QHElement product(const WeylElement& u, const WeylElement& v) const;
  /// σ^u ⋆ σ^v computed by expanding the first factor, whatever its length.
  /// Sub-products still go through product(). Used by consistency checks.
  QHElement product_expanding_left(const WeylElement& u, const WeylElement& v) const;
  /// x ⋆ σ^v for a general element x.
  QHElement multiply(const QHElement& x, const WeylElement& v) const;

  /// N_{u,v}^{w,λ}; zero without computing for non-effective λ or a
  /// degree mismatch.
  mpz_class coefficient(const WeylElement& u, const WeylElement& v, const WeylElement& w,
                        const CorootVector& lambda) const;
  QHElement classical_product(const WeylElement& u, const WeylElement& v) const;

  /// Snapshot of all memoized products, keyed by the normalized pair.
  std::vector<std::pair<std::pair<WeylElement, WeylElement>, QHElement>> memoized_products() const;
  std::size_t memo_size() const;

  bool load_cache(const std::filesystem::path& file);
  void save_cache(const std::filesystem::path& file) const;
  /// "<dir>/qschubert-<type><rank>.json"
  std::filesystem::path cache_file(const std::filesystem::path& dir) const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<WeylElement, WeylElement>& p) const {
      return p.first.hash() * 31 + p.second.hash();
    }
  };
  struct IndexedHash {
    std::size_t operator()(const std::pair<int, WeylElement>& p) const {
      return p.second.hash() * 31 + static_cast<std::size_t>(p.first);
    }
  };

  QHElement compute(const WeylElement& u, const WeylElement& v) const;
  QHElement expand_left(const WeylElement& u, const WeylElement& v) const;
  void validate_product(const WeylElement& u, const WeylElement& v, const QHElement& p) const;
  int simple_index_of(const WeylElement& s) const;

  RootSystem rs_;
  std::vector<WeylElement> elements_;

  mutable std::once_flag expansion_once_;
  mutable std::optional<ExpansionTable> expansion_;

  mutable std::shared_mutex chevalley_mutex_;
  mutable std::unordered_map<std::pair<int, WeylElement>, QHElement, IndexedHash> chevalley_memo_;

  mutable std::shared_mutex product_mutex_;
  mutable std::unordered_map<std::pair<WeylElement, WeylElement>, QHElement, PairHash> product_memo_;
};

}  // namespace qschubert
