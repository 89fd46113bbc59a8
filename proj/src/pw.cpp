#include "qschubert/pw.hpp"

#include <algorithm>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

void require_effective_outside(const ParabolicSubset& parabolic, const CorootVector& lambda) {
  for (int j = 1; j <= lambda.rank(); ++j) {
    if (!parabolic.contains(j) && lambda.coord(j) < 0) {
      throw PreconditionError("lambda_P must be effective outside Delta_P (coordinate " + std::to_string(j) + ")");
    }
  }
}

CorootVector zero_parabolic_coords(const ParabolicSubset& parabolic, const CorootVector& lambda) {
  std::vector<int> c = lambda.coords();
  for (int j : parabolic.indices()) c[static_cast<std::size_t>(j - 1)] = 0;
  return CorootVector(std::move(c));
}

void require_min_rep(const RootSystem& rs, const ParabolicSubset& parabolic, const WeylElement& w, const char* name) {
  if (!is_min_rep(rs, w, parabolic)) throw PreconditionError(std::string(name) + " is not in W^P");
}

// Solves A x = b over Q for square A; nullopt if singular.
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  const std::size_t k = a.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0) ++pivot;
    if (pivot == k) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < k; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < k; ++r) b[r] /= a[r][r];
  return b;
}

}  // namespace

std::vector<const Root*> levi_positive_roots(const RootSystem& rs, const ParabolicSubset& parabolic) {
  std::vector<const Root*> out;
  for (const Root& root : rs.positive_roots()) {
    bool inside = true;
    for (int j = 1; j <= rs.rank() && inside; ++j) {
      if (root.root_coords[static_cast<std::size_t>(j - 1)] != 0 && !parabolic.contains(j)) inside = false;
    }
    if (inside) out.push_back(&root);
  }
  return out;
}

bool certify_lambda_b(const RootSystem& rs, const ParabolicSubset& parabolic, const CorootVector& lambda) {
  for (const Root* root : levi_positive_roots(rs, parabolic)) {
    const int p = rs.root_pairing(root->root_coords, lambda);
    if (p != 0 && p != -1) return false;
  }
  return true;
}

PWLift lambda_b(const RootSystem& rs, const ParabolicSubset& parabolic, const CorootVector& lambda_P) {
  rs.check_rank(lambda_P);
  parabolic.validate(rs);
  require_effective_outside(parabolic, lambda_P);
  const CorootVector base = zero_parabolic_coords(parabolic, lambda_P);
  const std::vector<int>& idx = parabolic.indices();
  const std::size_t m = idx.size();

  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = rs.cartan(idx[r], idx[c]);
  }

  std::vector<CorootVector> found;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<mpq_class> b(m);
    for (std::size_t r = 0; r < m; ++r) {
      const int target = (mask >> r) & 1 ? -1 : 0;
      b[r] = target - rs.pairing(idx[r], base);
    }
    auto x = solve(a, b);
    if (!x) throw InvariantViolation("singular Levi Cartan matrix");
    std::vector<int> coords = base.coords();
    bool integral = true;
    for (std::size_t r = 0; r < m; ++r) {
      if ((*x)[r].get_den() != 1) {
        integral = false;
        break;
      }
      coords[static_cast<std::size_t>(idx[r] - 1)] = static_cast<int>((*x)[r].get_num().get_si());
    }
    if (!integral) continue;
    CorootVector candidate(std::move(coords));
    if (certify_lambda_b(rs, parabolic, candidate)) found.push_back(std::move(candidate));
  }
  if (found.size() != 1) {
    throw InvariantViolation("lambda_B search found " + std::to_string(found.size()) + " candidates");
  }

  PWLift lift;
  lift.parabolic = parabolic;
  lift.lambda_P = base;
  lift.lambda_B = std::move(found.front());
  std::vector<int> prime;
  for (int j : idx) {
    if (rs.pairing(j, lift.lambda_B) == 0) prime.push_back(j);
  }
  lift.delta_P_prime = ParabolicSubset(std::move(prime));
  lift.omega_factor =
      multiply(rs, longest_element(rs, parabolic), longest_element(rs, lift.delta_P_prime));
  return lift;
}

std::vector<CorootVector> lambda_b_candidates_in_box(const RootSystem& rs, const ParabolicSubset& parabolic,
                                                     const CorootVector& lambda_P) {
  rs.check_rank(lambda_P);
  require_effective_outside(parabolic, lambda_P);
  const CorootVector base = zero_parabolic_coords(parabolic, lambda_P);
  int top = 0;
  for (int c : base.coords()) top = std::max(top, c);
  const int bound = 2 * top + 3;
  const std::vector<int>& idx = parabolic.indices();

  std::vector<CorootVector> out;
  std::vector<int> coords = base.coords();
  std::vector<int> counter(idx.size(), 0);
  while (true) {
    for (std::size_t r = 0; r < idx.size(); ++r) coords[static_cast<std::size_t>(idx[r] - 1)] = counter[r];
    CorootVector candidate(coords);
    if (certify_lambda_b(rs, parabolic, candidate)) out.push_back(std::move(candidate));
    std::size_t r = 0;
    while (r < counter.size() && counter[r] == bound) counter[r++] = 0;
    if (r == counter.size()) break;
    ++counter[r];
  }
  return out;
}

std::pair<CorootVector, WeylElement> psi_lift(const RootSystem& rs, const ParabolicSubset& parabolic,
                                              const CorootVector& lambda_P, const WeylElement& w) {
  require_min_rep(rs, parabolic, w, "w");
  PWLift lift = lambda_b(rs, parabolic, lambda_P);
  return {std::move(lift.lambda_B), multiply(rs, w, lift.omega_factor)};
}

mpz_class gp_coefficient(const QuantumRing& ring, const ParabolicSubset& parabolic, const WeylElement& u,
                         const WeylElement& v, const WeylElement& w, const CorootVector& lambda_P) {
  const RootSystem& rs = ring.root_system();
  require_min_rep(rs, parabolic, u, "u");
  require_min_rep(rs, parabolic, v, "v");
  auto [lambda_B, w_lift] = psi_lift(rs, parabolic, lambda_P, w);
  return ring.coefficient(u, v, w_lift, lambda_B);
}

}  // namespace qschubert
