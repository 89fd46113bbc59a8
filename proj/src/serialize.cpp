#include "qschubert/serialize.hpp"

#include <charconv>

#include "qschubert/error.hpp"

namespace qschubert {

std::string format_lambda(const CorootVector& lambda) {
  std::string s;
  for (int i = 1; i <= lambda.rank(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(lambda.coord(i));
  }
  return s;
}

CorootVector parse_lambda(const RootSystem& rs, std::string_view text) {
  if (!text.empty() && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::vector<int> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw UsageError("malformed coroot vector '" + std::string(text) + "'");
    }
    coords.push_back(value);
    pos = comma + 1;
  }
  if (static_cast<int>(coords.size()) != rs.rank()) {
    throw UsageError("coroot vector '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                     " coordinates, rank is " + std::to_string(rs.rank()));
  }
  return CorootVector(std::move(coords));
}

std::string format_quad(const RootSystem& rs, const Quad& q) {
  auto word = [&](const WeylElement& w) {
    const std::string s = format_element(rs, w);
    return s.empty() ? std::string("id") : s;
  };
  return "(" + word(q.u) + " | " + word(q.v) + " | " + word(q.w) + " | " + format_lambda(q.lambda) + ")";
}

json to_json(const RootSystem& rs, const Quad& q) {
  return {{"u", format_element(rs, q.u)},
          {"v", format_element(rs, q.v)},
          {"w", format_element(rs, q.w)},
          {"lambda", q.lambda.coords()}};
}

Quad quad_from_json(const RootSystem& rs, const json& j) {
  try {
    Quad q{parse_element(rs, j.at("u").get<std::string>()), parse_element(rs, j.at("v").get<std::string>()),
           parse_element(rs, j.at("w").get<std::string>()), CorootVector(j.at("lambda").get<std::vector<int>>())};
    rs.check_rank(q.lambda);
    return q;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed quad: ") + e.what());
  }
}

json to_json(const RootSystem& rs, const ReductionTrace& trace) {
  json out = json::array();
  for (const TraceStep& step : trace) {
    json j;
    j["rule"] = step.tag();
    j["alpha"] = step.alpha;
    if (step.kind == TraceStep::Kind::Rewrite) j["direction"] = std::string(to_string(step.direction));
    j["before"] = to_json(rs, step.before);
    j["after"] = to_json(rs, step.after);
    out.push_back(std::move(j));
  }
  return out;
}

ReductionTrace trace_from_json(const RootSystem& rs, const json& j) {
  ReductionTrace trace;
  try {
    for (const json& js : j) {
      TraceStep step;
      const std::string tag = js.at("rule").get<std::string>();
      if (tag == "VANISH-SGN") {
        step.kind = TraceStep::Kind::VanishSgn;
      } else if (tag == "VANISH-DEG") {
        step.kind = TraceStep::Kind::VanishDeg;
      } else if (tag == "VANISH-EFF") {
        step.kind = TraceStep::Kind::VanishEff;
      } else {
        step.rule = parse_rule(tag);
        step.direction = parse_direction(js.at("direction").get<std::string>());
      }
      step.alpha = js.at("alpha").get<int>();
      step.before = quad_from_json(rs, js.at("before"));
      step.after = quad_from_json(rs, js.at("after"));
      trace.push_back(std::move(step));
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed trace: ") + e.what());
  }
  return trace;
}

json integer_json(const mpz_class& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

json to_json(const RootSystem& rs, const QHElement& x) {
  json terms = json::array();
  for (const auto& [t, c] : x) {
    terms.push_back({{"w", format_element(rs, t.w)}, {"lambda", t.lambda.coords()}, {"coeff", integer_json(c)}});
  }
  return {{"terms", std::move(terms)}};
}

}  // namespace qschubert
