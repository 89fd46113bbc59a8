#include <doctest.h>

#include "qschubert/error.hpp"
#include "qschubert/serialize.hpp"
#include "support/helpers.hpp"

using namespace qschubert;
using testing::el;
using testing::lam;

TEST_CASE("lambda text") {
  const RootSystem a3 = testing::A(3);
  CHECK(format_lambda(lam({1, 1, 0})) == "1,1,0");
  CHECK(parse_lambda(a3, "1,1,0") == lam({1, 1, 0}));
  CHECK(parse_lambda(a3, "0,0,0") == lam({0, 0, 0}));
  CHECK_THROWS_AS(parse_lambda(a3, "0"), UsageError);
  CHECK_THROWS_AS(parse_lambda(a3, "1,1"), UsageError);
  CHECK_THROWS_AS(parse_lambda(a3, "1,x,0"), UsageError);
}

TEST_CASE("quad round trip") {
  const RootSystem a3 = testing::A(3);
  const Quad q{el(a3, "2 1 2"), el(a3, "2 1 2"), el(a3, "2 3"), lam({1, 1, 0})};
  const json j = to_json(a3, q);
  CHECK(j.dump() == R"({"u":"1 2 1","v":"1 2 1","w":"2 3","lambda":[1,1,0]})");
  CHECK(quad_from_json(a3, j) == q);
  CHECK(quad_from_json(a3, json::parse(j.dump())) == q);
}

TEST_CASE("trace round trip") {
  const RootSystem a3 = testing::A(3);
  const QuantumRing ring(a3);
  for (const auto& u : ring.elements()) {
    if (!is_grassmannian(a3, u, 2)) continue;
    for (const auto& v : ring.elements()) {
      const Quad q{u, v, identity(a3), lam({0, 1, 0})};
      const ReductionResult r = reduce_grassmannian(a3, 2, q);
      const json j = to_json(a3, r.trace);
      const ReductionTrace back = trace_from_json(a3, json::parse(j.dump()));
      CHECK(back == r.trace);
      CHECK(to_json(a3, back).dump() == j.dump());
      for (const auto& step : j)
        CHECK(step.contains("direction") == (step["rule"].get<std::string>().rfind("VANISH", 0) != 0));
    }
  }
}

TEST_CASE("product json") {
  const RootSystem a2 = testing::A(2);
  const QuantumRing ring(a2);
  CHECK(to_json(a2, ring.product(el(a2, "1"), el(a2, "2 1"))).dump() ==
        R"({"terms":[{"w":"2","lambda":[1,0],"coeff":1}]})");
  CHECK(to_json(a2, QHElement{}).dump() == R"({"terms":[]})");
}

TEST_CASE("big integers stay exact") {
  const mpz_class big("123456789012345678901234567890");
  CHECK(integer_json(big).dump() == "\"123456789012345678901234567890\"");
  CHECK(integer_json(mpz_class(7)).dump() == "7");
}
