#include <doctest.h>

#include "qschubert/error.hpp"
#include "qschubert/grassmann.hpp"
#include "qschubert/pw.hpp"
#include "support/helpers.hpp"

using namespace qschubert;
using testing::el;
using testing::lam;

TEST_CASE("lambda_B on Gr(2,4)") {
  const RootSystem a3 = testing::A(3);
  const PWLift lift = lambda_b(a3, ParabolicSubset({1, 3}), lam({0, 1, 0}));
  CHECK(lift.lambda_B == lam({0, 1, 0}));
  CHECK(lift.delta_P_prime.empty());
  CHECK(lift.omega_factor == el(a3, "1 3"));
  // ⟨α_1, α_2^∨⟩ = ⟨α_3, α_2^∨⟩ = -1
  CHECK(a3.pairing(1, lift.lambda_B) == -1);
  CHECK(a3.pairing(3, lift.lambda_B) == -1);
}

TEST_CASE("rank two lifts by pairing") {
  // Δ_P = {α}, λ_P = β^∨; the lift depends on ⟨α, β^∨⟩.
  SUBCASE("orthogonal: A1 x A1 via D4 is overkill, use A3 with α_1, β = α_3") {
    const RootSystem a3 = testing::A(3);
    const PWLift lift = lambda_b(a3, ParabolicSubset({1}), lam({0, 0, 1}));
    CHECK(lift.lambda_B == lam({0, 0, 1}));
    CHECK(lift.omega_factor.is_identity());
  }
  SUBCASE("pairing -1 on A2") {
    const RootSystem a2 = testing::A(2);
    const PWLift lift = lambda_b(a2, ParabolicSubset({1}), lam({0, 1}));
    CHECK(lift.lambda_B == lam({0, 1}));
    CHECK(lift.omega_factor == el(a2, "1"));
    const auto [lb, w] = psi_lift(a2, ParabolicSubset({1}), lam({0, 1}), el(a2, ""));
    CHECK(lb == lam({0, 1}));
    CHECK(w == el(a2, "1"));
  }
  SUBCASE("pairing -2 on B2") {
    const RootSystem b2 = RootSystem::build(LieType::B, 2);
    // α_2 short in B2: ⟨α_2, α_1^∨⟩ = -1, ⟨α_1, α_2^∨⟩ = -2.
    REQUIRE(b2.cartan(1, 2) == -2);
    const PWLift lift = lambda_b(b2, ParabolicSubset({1}), lam({0, 1}));
    CHECK(lift.lambda_B == lam({1, 1}));
    CHECK(lift.omega_factor.is_identity());
  }
  SUBCASE("pairing -3 on G2") {
    const RootSystem g2 = RootSystem::build(LieType::G, 2);
    REQUIRE(g2.cartan(2, 1) == -3);
    const PWLift lift = lambda_b(g2, ParabolicSubset({2}), lam({1, 0}));
    CHECK(lift.lambda_B == lam({1, 1}));
    const auto [lb, w] = psi_lift(g2, ParabolicSubset({2}), lam({1, 0}), el(g2, ""));
    CHECK(lb == lam({1, 1}));
    CHECK(w == el(g2, "2"));
  }
}

TEST_CASE("psi_lift at λ_P = 0 is the identity on w") {
  const RootSystem a3 = testing::A(3);
  const ParabolicSubset p({1, 3});
  for (const WeylElement& w : enumerate_group(a3)) {
    if (!is_min_rep(a3, w, p)) continue;
    const auto [lb, wl] = psi_lift(a3, p, lam({0, 0, 0}), w);
    CHECK(lb.is_zero());
    CHECK(wl == w);
  }
}

TEST_CASE("box enumeration finds exactly the lift") {
  for (auto [t, n] : std::vector<std::pair<LieType, int>>{{LieType::A, 3}, {LieType::B, 3}, {LieType::G, 2}, {LieType::C, 3}}) {
    const RootSystem rs = RootSystem::build(t, n);
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      std::vector<int> idx;
      for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1))) idx.push_back(i);
      const ParabolicSubset p(idx);
      std::vector<int> c(n, 0);
      for (int i = 1; i <= n; ++i)
        if (!p.contains(i)) c[i - 1] = 1 + (i % 2);
      const PWLift lift = lambda_b(rs, p, lam(c));
      CAPTURE(rs.name());
      CAPTURE(mask);
      CHECK(certify_lambda_b(rs, p, lift.lambda_B));
      CHECK(lambda_b_candidates_in_box(rs, p, lam(c)) == std::vector<CorootVector>{lift.lambda_B});
    }
  }
}

TEST_CASE("G/P coefficients on Gr(2,4)") {
  const RootSystem a3 = testing::A(3);
  const QuantumRing ring(a3);
  const ParabolicSubset p = grassmannian_parabolic(a3, 2);
  const WeylElement s21 = permutation_of(a3, {2, 1}, 2);
  const WeylElement s1 = permutation_of(a3, {1}, 2);
  const WeylElement s0 = permutation_of(a3, {}, 2);
  CHECK(gp_coefficient(ring, p, s21, s1, s0, lam({0, 1, 0})) == 1);
  CHECK(gp_coefficient(ring, p, s0, s1, s1, lam({0, 0, 0})) == 1);
  CHECK(gp_coefficient(ring, p, s0, s1, s21, lam({0, 0, 0})) == 0);
  const PieriOracle oracle(2, 3);
  const auto parts = partitions_in_box(2, 2);
  for (const auto& a : parts)
    for (const auto& b : parts)
      for (const auto& c : parts)
        CHECK(gp_coefficient(ring, p, permutation_of(a3, a, 2), permutation_of(a3, b, 2), permutation_of(a3, c, 2),
                             lam({0, 3, 0})) == 0);
  CHECK_THROWS_AS(gp_coefficient(ring, p, el(a3, "1"), s1, s1, lam({0, 0, 0})), PreconditionError);
}
