#include <doctest.h>

#include <random>

#include "qschubert/grassmann.hpp"
#include "qschubert/pw.hpp"
#include "qschubert/reduce.hpp"
#include "qschubert/verify.hpp"
#include "support/helpers.hpp"

using namespace qschubert;

namespace {

const std::vector<std::pair<LieType, int>> kTypes = {{LieType::A, 1}, {LieType::A, 3}, {LieType::B, 2}, {LieType::B, 3},
                                                     {LieType::C, 3}, {LieType::D, 4}, {LieType::G, 2}, {LieType::F, 4}};

}  // namespace

TEST_CASE("cartan sign pattern and coroot heights") {
  for (auto [t, n] : kTypes) {
    const RootSystem rs = RootSystem::build(t, n);
    CAPTURE(rs.name());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) {
          CHECK(rs.cartan(i, j) == 2);
        } else {
          CHECK(rs.cartan(i, j) <= 0);
          CHECK((rs.cartan(i, j) == 0) == (rs.cartan(j, i) == 0));
        }
      }
    for (const Root& r : rs.positive_roots()) {
      for (int c : r.root_coords) CHECK(c >= 0);
      int height = 0;
      for (int c : r.coroot.coords()) height += c;
      CHECK(r.two_rho_pairing == 2 * height);
      CHECK(r.two_rho_pairing >= 2);
      const bool simple = std::count(r.root_coords.begin(), r.root_coords.end(), 0) == n - 1;
      CHECK(r.is_simple() == simple);
    }
  }
}

TEST_CASE("length counts inverted positive roots and moves by one") {
  for (auto [t, n] : kTypes) {
    const RootSystem rs = RootSystem::build(t, n);
    if (t == LieType::F || t == LieType::D) continue;
    for (const WeylElement& w : enumerate_group(rs)) {
      int inverted = 0;
      for (const Root& r : rs.positive_roots()) {
        const CorootVector img = apply(w, r.coroot);
        inverted += !img.is_effective();
      }
      CHECK(inverted == w.length());
      for (int i = 1; i <= n; ++i) CHECK(std::abs(right_multiply(rs, w, i).length() - w.length()) == 1);
    }
  }
}

TEST_CASE("grading total is the degree") {
  const RootSystem rs = RootSystem::build(LieType::B, 3);
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coord(0, 3);
  const auto group = enumerate_group(rs);
  for (int trial = 0; trial < 300; ++trial) {
    const CorootVector l({coord(gen), coord(gen), coord(gen)});
    const WeylElement& w = group[static_cast<std::size_t>(trial) % group.size()];
    for (int i = 1; i <= 3; ++i) CHECK(gr(rs, i, l, w).total() == w.length() + rs.two_rho(l));
  }
}

TEST_CASE("lift invariants over random degrees") {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> coord(0, 4);
  for (auto [t, n] : kTypes) {
    if (n < 2) continue;
    const RootSystem rs = RootSystem::build(t, n);
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      std::vector<int> idx;
      for (int i = 1; i <= n; ++i)
        if (mask & (1 << (i - 1))) idx.push_back(i);
      const ParabolicSubset p(idx);
      std::vector<int> c(n, 0);
      for (int i = 1; i <= n; ++i)
        if (!p.contains(i)) c[i - 1] = coord(gen);
      const PWLift lift = lambda_b(rs, p, CorootVector(c));
      CAPTURE(rs.name());
      CAPTURE(mask);
      for (int i = 1; i <= n; ++i)
        if (!p.contains(i)) CHECK(lift.lambda_B.coord(i) == c[i - 1]);
      CHECK(certify_lambda_b(rs, p, lift.lambda_B));
      std::vector<int> zero_pairing;
      for (int b : p.indices())
        if (rs.pairing(b, lift.lambda_B) == 0) zero_pairing.push_back(b);
      CHECK(lift.delta_P_prime == ParabolicSubset(zero_pairing));
    }
  }
}

TEST_CASE("partition permutations have one descent") {
  for (int n = 1; n <= 5; ++n) {
    const RootSystem rs = testing::A(n);
    for (int k = 1; k <= n; ++k)
      for (const Partition& p : partitions_in_box(k, n + 1 - k)) {
        const WeylElement w = permutation_of(rs, p, k);
        CHECK(is_grassmannian(rs, w, k));
        for (int j = 1; j <= n; ++j)
          if (j != k) CHECK(sgn(rs, w, j) == 0);
      }
  }
}

TEST_CASE("x element invariants") {
  for (int n = 1; n <= 6; ++n) {
    const RootSystem rs = testing::A(n);
    for (int k = 1; k <= n; ++k)
      for (int d = 1; d <= k && k + d - 1 <= n; ++d) {
        const XElement x = x_element(rs, k, d);
        CHECK(x.element.length() == d * d);
        CHECK(inverse(rs, x.element) == x.element);
        for (int s : canonical_word(rs, x.element)) {
          CHECK(s >= k - d + 1);
          CHECK(s <= k + d - 1);
        }
      }
  }
}

TEST_CASE("verification suites on small groups") {
  for (auto [t, n] : std::vector<std::pair<LieType, int>>{{LieType::A, 1}, {LieType::A, 2}, {LieType::B, 2}, {LieType::G, 2}}) {
    const QuantumRing ring(RootSystem::build(t, n));
    CAPTURE(ring.root_system().name());
    for (const VerificationReport& r : {verify_theorem1(ring), verify_filtration(ring), verify_hygiene(ring)}) {
      CAPTURE(r.summary());
      CHECK(r.ok());
      CHECK(r.checks > 0);
    }
    if (t == LieType::A) {
      for (const VerificationReport& r : {verify_theorem2(ring), verify_pw(ring), verify_grassmann(ring)}) {
        CAPTURE(r.summary());
        CHECK(r.ok());
      }
    }
  }
}

TEST_CASE("reports merge in order") {
  VerificationReport a{"a", 3, {"x"}}, b{"b", 4, {"y", "z"}};
  a.merge(b);
  CHECK(a.checks == 7);
  CHECK(a.violations == std::vector<std::string>{"x", "y", "z"});
  CHECK(a.summary() == "a: 7 checks, 3 violations");
}
