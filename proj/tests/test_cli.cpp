#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "qschubert/cli.hpp"

using qschubert::cli_main;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coeff on the worked example") {
  const Outcome r = run({"coeff", "--type", "A", "--rank", "3", "--u", "2 1 2", "--v", "2 1 2", "--w", "2 3", "--lambda", "1,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"value\":1}\n");
  CHECK(r.err.empty());
}

TEST_CASE("usage errors exit 1") {
  Outcome r = run({"coeff", "--type", "A", "--rank", "3", "--u", "1", "--v", "1", "--w", "1", "--lambda", "1,1"});
  CHECK(r.code == 1);
  CHECK(r.err.find("rank is 3") != std::string::npos);
  CHECK(run({"coeff", "--type", "A", "--rank", "3", "--u", "1", "--v", "1"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"product", "--type", "D", "--rank", "3", "--u", "1", "--v", "1"}).code == 1);
  CHECK(run({"product", "--type", "A", "--rank", "2", "--u", "1", "--v", "1", "--format", "xml"}).code == 1);
  CHECK(run({"verify", "nonsense", "--type", "A", "--rank", "2"}).code == 1);
  r = run({"reduce", "--type", "A", "--rank", "2", "--grassmannian", "1", "--u", "2", "--v", "1", "--w", "1", "--lambda", "1,0"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits 0") {
  const Outcome r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("product") != std::string::npos);
}

TEST_CASE("product and table json") {
  Outcome r = run({"product", "--type", "A", "--rank", "2", "--u", "1", "--v", "2 1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"terms\":[{\"w\":\"2\",\"lambda\":[1,0],\"coeff\":1}]}\n");
  r = run({"table", "--type", "A", "--rank", "1"});
  CHECK(r.out ==
        "{\"u\":\"\",\"v\":\"\",\"w\":\"\",\"lambda\":[0],\"coeff\":1}\n"
        "{\"u\":\"\",\"v\":\"1\",\"w\":\"1\",\"lambda\":[0],\"coeff\":1}\n"
        "{\"u\":\"1\",\"v\":\"\",\"w\":\"1\",\"lambda\":[0],\"coeff\":1}\n"
        "{\"u\":\"1\",\"v\":\"1\",\"w\":\"\",\"lambda\":[1],\"coeff\":1}\n");
}

TEST_CASE("reduce with trace") {
  const Outcome r = run({"reduce", "--type", "A", "--rank", "2", "--grassmannian", "1", "--u", "1", "--v", "2 1 2", "--w",
                         "id", "--lambda", "1,1", "--trace"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 1);
  CHECK(j["trace"].size() == 2);
  const Outcome strict = run({"reduce", "--type", "A", "--rank", "2", "--grassmannian", "1", "--u", "1", "--v", "2 1 2",
                              "--w", "id", "--lambda", "1,1", "--strict-theorem"});
  CHECK(strict.out == "{\"value\":1}\n");
}

TEST_CASE("verify theorem1 on A2") {
  const Outcome r = run({"verify", "theorem1", "--type", "A", "--rank", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 violations") != std::string::npos);
  const Outcome t = run({"verify", "theorem1", "--type", "A", "--rank", "2", "--format", "text"});
  CHECK(t.out.rfind("theorem1:", 0) == 0);
}

TEST_CASE("pw-lift and q2c") {
  Outcome r = run({"pw-lift", "--type", "A", "--rank", "3", "--parabolic", "1,3", "--lambda", "0,1,0"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lambda_B"] == nlohmann::json::array({0, 1, 0}));
  CHECK(j["omega_factor"] == "1 3");
  r = run({"q2c", "--grassmannian", "2,3", "--degree", "1", "--u-partition", "2,1", "--v-partition", "1", "--w-partition", "0"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 1);
  r = run({"q2c", "--grassmannian", "2,3", "--degree", "3", "--u-partition", "1", "--v-partition", "1", "--w-partition", "0"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["vanishes"] == true);
  CHECK(run({"q2c", "--grassmannian", "2,4", "--type", "A", "--rank", "3", "--degree", "1", "--u", "2", "--v", "2", "--w", "id"}).code == 1);
}

TEST_CASE("output does not depend on the worker count or the cache") {
  const auto dir = std::filesystem::temp_directory_path() / "qschubert-cli-cache";
  std::filesystem::remove_all(dir);
  const Outcome one = run({"table", "--type", "A", "--rank", "3", "--jobs", "1"});
  const Outcome four = run({"table", "--type", "A", "--rank", "3", "--jobs", "4"});
  const Outcome cold = run({"table", "--type", "A", "--rank", "3", "--jobs", "3", "--cache-dir", dir.string()});
  const Outcome warm = run({"table", "--type", "A", "--rank", "3", "--jobs", "2", "--cache-dir", dir.string()});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out == cold.out);
  CHECK(one.out == warm.out);
  CHECK(std::filesystem::exists(dir / "qschubert-A3.json"));
  std::filesystem::remove_all(dir);
}
