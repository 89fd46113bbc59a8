#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qschubert {

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

LieType parse_lie_type(std::string_view text);
inline char to_char(LieType t) { return static_cast<char>(t); }

/// An element λ = Σ a_j α_j^∨ of the coroot lattice, stored by its coordinates
/// (a_1, …, a_n). Coordinates are addressed 1-based through coord().
class CorootVector {
 public:
  CorootVector() = default;
  explicit CorootVector(std::vector<int> coords) : coords_(std::move(coords)) {}

  static CorootVector zero(int rank) { return CorootVector(std::vector<int>(rank, 0)); }
  /// The simple coroot α_i^∨.
  static CorootVector simple(int rank, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  int coord(int i) const { return coords_.at(i - 1); }
  const std::vector<int>& coords() const { return coords_; }

  /// All coordinates non-negative.
  bool is_effective() const;
  bool is_zero() const;
  /// |λ| = Σ a_j.
  int height() const;

  CorootVector& operator+=(const CorootVector& other);
  CorootVector& operator-=(const CorootVector& other);
  friend CorootVector operator+(CorootVector a, const CorootVector& b) { return a += b; }
  friend CorootVector operator-(CorootVector a, const CorootVector& b) { return a -= b; }

  friend bool operator==(const CorootVector&, const CorootVector&) = default;
  friend auto operator<=>(const CorootVector&, const CorootVector&) = default;

 private:
  std::vector<int> coords_;
};

struct Root {
  std::vector<int> root_coords;  // γ in the α-basis
  CorootVector coroot;           // γ^∨ in the α^∨-basis
  int two_rho_pairing = 0;       // ⟨2ρ, γ^∨⟩

  bool is_simple() const { return two_rho_pairing == 2; }
};

/// Root datum of a finite crystallographic root system. Immutable once built.
///
/// The Cartan matrix follows C[i][j] = ⟨α_i, α_j^∨⟩ with Bourbaki numbering of
/// the Dynkin diagram, so G₂ has C = [[2,-1],[-3,2]] (α_1 short).
class RootSystem {
 public:
  /// Builds the root system of the given finite type; throws ConfigError for
  /// combinations such as D3 or E5.
  static RootSystem build(LieType type, int rank);

  LieType lie_type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// C[i][j] = ⟨α_i, α_j^∨⟩, 1-based.
  int cartan(int i, int j) const { return cartan_[(i - 1) * rank_ + (j - 1)]; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }

  /// ⟨α_i, λ⟩ = Σ_j C[i][j] a_j.
  int pairing(int i, const CorootVector& lambda) const;
  /// ⟨γ, λ⟩ for γ given in the α-basis.
  int root_pairing(const std::vector<int>& root_coords, const CorootVector& lambda) const;
  /// ⟨2ρ, λ⟩ = 2 Σ a_j.
  int two_rho(const CorootVector& lambda) const;

  /// Index into positive_roots() of the root with the given α-coordinates.
  std::ptrdiff_t find_positive_root(const std::vector<int>& root_coords) const;
  std::ptrdiff_t simple_root_index(int i) const;

  void check_simple_index(int i) const;
  void check_rank(const CorootVector& lambda) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.type_ == b.type_ && a.rank_ == b.rank_;
  }

 private:
  RootSystem(LieType type, int rank, std::vector<int> cartan);
  void generate_roots();

  LieType type_;
  int rank_;
  std::vector<int> cartan_;
  std::vector<Root> positive_roots_;
};

/// Known |R⁺| for a finite type.
std::size_t expected_positive_root_count(LieType type, int rank);

inline RootSystem build_cartan(LieType type, int rank) { return RootSystem::build(type, rank); }
inline int pairing(const RootSystem& rs, int i, const CorootVector& lambda) { return rs.pairing(i, lambda); }
inline int two_rho(const RootSystem& rs, const CorootVector& lambda) { return rs.two_rho(lambda); }

}  // namespace qschubert
