#include "qschubert/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>

#include "qschubert/error.hpp"
#include "qschubert/grassmann.hpp"
#include "qschubert/parallel.hpp"
#include "qschubert/pw.hpp"
#include "qschubert/qhring.hpp"
#include "qschubert/reduce.hpp"
#include "qschubert/serialize.hpp"
#include "qschubert/verify.hpp"

namespace qschubert {

namespace {

const std::set<std::string> kSuites = {"theorem1", "theorem2", "filtration", "pw", "grassmann", "hygiene"};
constexpr std::size_t kShownViolations = 20;

std::vector<int> parse_index_list(std::string_view text, const char* what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string field(text.substr(pos, comma - pos));
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("malformed ") + what + " '" + std::string(text) + "'");
    }
    pos = comma + 1;
  }
  return out;
}

// "k" or "k,n" → (k, n or 0).
std::pair<int, int> parse_grassmannian(const std::string& text) {
  const std::vector<int> v = parse_index_list(text, "--grassmannian");
  if (v.size() == 1) return {v[0], 0};
  if (v.size() == 2) return {v[0], v[1]};
  throw UsageError("--grassmannian expects k or k,n");
}

RootSystem root_system_of(const CommandRequest& r) { return RootSystem::build(parse_lie_type(r.type), r.rank); }

std::optional<WeylElement> element_of(const RootSystem& rs, const CommandRequest& r, const std::optional<std::string>& word,
                                      const std::optional<std::string>& partition, const char* name) {
  if (word && partition) throw UsageError(std::string("give either --") + name + " or --" + name + "-partition");
  if (word) return parse_element(rs, *word);
  if (partition) {
    if (r.grass_k == 0) throw UsageError(std::string("--") + name + "-partition needs --grassmannian");
    return permutation_of(rs, parse_partition(*partition), r.grass_k);
  }
  return std::nullopt;
}

WeylElement required_element(const RootSystem& rs, const CommandRequest& r, char which) {
  const auto& word = which == 'u' ? r.u : which == 'v' ? r.v : r.w;
  const auto& part = which == 'u' ? r.u_partition : which == 'v' ? r.v_partition : r.w_partition;
  const std::string name(1, which);
  auto e = element_of(rs, r, word, part, name.c_str());
  if (!e) throw UsageError("missing --" + name);
  return *e;
}

void validate(CommandRequest& r) {
  if (r.format != "json" && r.format != "text") throw UsageError("--format must be json or text");
  if (r.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (r.grassmannian) {
    auto [k, n] = parse_grassmannian(*r.grassmannian);
    if (r.type.empty() && r.rank == 0 && n > 0) {
      r.type = "A";
      r.rank = n;
    }
    if (n > 0 && n != r.rank) throw UsageError("--grassmannian n must equal --rank");
    r.grass_k = k;
  }
  if (r.type.empty()) throw UsageError("--type is required");
  if (r.rank <= 0) throw UsageError("--rank is required and must be positive");
  const RootSystem rs = root_system_of(r);
  if (r.grass_k != 0) {
    if (rs.lie_type() != LieType::A) throw UsageError("--grassmannian requires type A");
    rs.check_simple_index(r.grass_k);
  }
  if (r.lambda) parse_lambda(rs, *r.lambda);
  if (r.parabolic) ParabolicSubset(parse_index_list(*r.parabolic, "--parabolic")).validate(rs);
  if (r.degree && *r.degree < 0) throw UsageError("--degree must be non-negative");
  element_of(rs, r, r.u, r.u_partition, "u");
  element_of(rs, r, r.v, r.v_partition, "v");
  element_of(rs, r, r.w, r.w_partition, "w");

  auto need = [&](bool present, const char* flag) {
    if (!present) throw UsageError(r.subcommand + " requires " + flag);
  };
  const bool has_u = r.u || r.u_partition, has_v = r.v || r.v_partition, has_w = r.w || r.w_partition;
  if (r.subcommand == "product") {
    need(has_u, "--u");
    need(has_v, "--v");
  } else if (r.subcommand == "coeff" || r.subcommand == "reduce") {
    need(has_u, "--u");
    need(has_v, "--v");
    need(has_w, "--w");
    need(r.lambda.has_value(), "--lambda");
    if (r.subcommand == "reduce") need(r.grass_k != 0, "--grassmannian");
  } else if (r.subcommand == "pw-lift") {
    need(r.parabolic.has_value(), "--parabolic");
    need(r.lambda.has_value(), "--lambda");
  } else if (r.subcommand == "q2c") {
    need(r.grass_k != 0, "--grassmannian");
    need(r.degree.has_value(), "--degree");
    need(has_u, "--u");
    need(has_v, "--v");
    need(has_w, "--w");
  } else if (r.subcommand == "verify") {
    if (!kSuites.count(r.suite)) throw UsageError("unknown verification suite '" + r.suite + "'");
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

std::string word_or_id(const RootSystem& rs, const WeylElement& w) {
  const std::string s = format_element(rs, w);
  return s.empty() ? "id" : s;
}

void print_terms(std::ostream& out, const RootSystem& rs, const QHElement& x) {
  if (x.empty()) out << "0\n";
  for (const auto& [t, c] : x) {
    out << c.get_str() << "  q^(" << format_lambda(t.lambda) << ")  [" << word_or_id(rs, t.w) << "]\n";
  }
}

std::optional<std::filesystem::path> cache_dir(const CommandRequest& r) {
  if (r.cache_dir) return std::filesystem::path(*r.cache_dir);
  if (const char* env = std::getenv("QSCHUBERT_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

int run_verify(const CommandRequest& r, const QuantumRing& ring, std::ostream& out) {
  VerificationReport report;
  if (r.suite == "theorem1") {
    report = verify_theorem1(ring, r.jobs);
  } else if (r.suite == "theorem2") {
    report = verify_theorem2(ring, r.jobs);
  } else if (r.suite == "filtration") {
    report = verify_filtration(ring, -1, r.jobs);
  } else if (r.suite == "pw") {
    report = verify_pw(ring, r.jobs);
  } else if (r.suite == "grassmann") {
    report = verify_grassmann(ring, r.jobs);
  } else {
    report = verify_hygiene(ring, ring.elements().size() <= 24 ? 0 : 100, 20240601, r.jobs);
  }
  report.suite = r.suite;
  const std::size_t shown = std::min(report.violations.size(), kShownViolations);
  if (r.format == "json") {
    json j;
    j["suite"] = report.suite;
    j["root_system"] = ring.root_system().name();
    j["checks"] = report.checks;
    j["violations"] = report.violations.size();
    j["examples"] = std::vector<std::string>(report.violations.begin(), report.violations.begin() + shown);
    j["summary"] = report.summary();
    emit(out, j);
  } else {
    out << report.summary() << '\n';
    for (std::size_t i = 0; i < shown; ++i) out << "  " << report.violations[i] << '\n';
  }
  return report.ok() ? 0 : 2;
}

struct TableRow {
  std::vector<int> key;  // (ℓ(u), word u, sep, ℓ(v), word v, sep, ℓ(w), word w, sep, λ)
  json line;
};

int run_table(const CommandRequest& r, const QuantumRing& ring, std::ostream& out) {
  const RootSystem& rs = ring.root_system();
  const auto& el = ring.elements();
  std::vector<std::vector<TableRow>> rows(el.size());
  parallel_for(el.size(), r.jobs, [&](std::size_t i) {
    for (const WeylElement& v : el) {
      for (const auto& [t, c] : ring.product(el[i], v)) {
        TableRow row;
        for (const WeylElement* e : {&el[i], &v, &t.w}) {
          row.key.push_back(e->length());
          const auto w = canonical_word(rs, *e);
          row.key.insert(row.key.end(), w.begin(), w.end());
          row.key.push_back(-1);
        }
        row.key.insert(row.key.end(), t.lambda.coords().begin(), t.lambda.coords().end());
        row.line = {{"u", format_element(rs, el[i])},
                    {"v", format_element(rs, v)},
                    {"w", format_element(rs, t.w)},
                    {"lambda", t.lambda.coords()},
                    {"coeff", integer_json(c)}};
        rows[i].push_back(std::move(row));
      }
    }
  });
  std::vector<TableRow> all;
  for (auto& chunk : rows) std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), [](const TableRow& a, const TableRow& b) { return a.key < b.key; });
  for (const TableRow& row : all) {
    if (r.format == "json") {
      emit(out, row.line);
    } else {
      out << row.line["coeff"].dump() << "  " << format_quad(rs, Quad{parse_element(rs, row.line["u"].get<std::string>()),
                                                                          parse_element(rs, row.line["v"].get<std::string>()),
                                                                          parse_element(rs, row.line["w"].get<std::string>()),
                                                                          CorootVector(row.line["lambda"].get<std::vector<int>>())})
          << '\n';
    }
  }
  return 0;
}

}  // namespace

std::optional<CommandRequest> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CommandRequest r;
  CLI::App app{"Exact quantum Schubert calculus on flag varieties G/B and G/P", "qschubert"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* s) {
    s->add_option("--type", r.type, "Lie type (A-G)");
    s->add_option("--rank", r.rank, "rank n");
    s->add_option("--format", r.format, "json or text")->capture_default_str();
    s->add_option("--cache-dir", r.cache_dir, "directory for product caches (default: $QSCHUBERT_CACHE)");
  };
  auto add_elements = [&](CLI::App* s, bool with_w) {
    s->add_option("--u", r.u, "element: word \"2 1 2\", one-line \"[3,1,2,4]\" or id");
    s->add_option("--v", r.v, "element");
    if (with_w) s->add_option("--w", r.w, "element");
    s->add_option("--u-partition", r.u_partition, "partition \"2,1\" (needs --grassmannian)");
    s->add_option("--v-partition", r.v_partition, "partition");
    if (with_w) s->add_option("--w-partition", r.w_partition, "partition");
    s->add_option("--grassmannian", r.grassmannian, "descent k, or k,n");
  };

  CLI::App* product = app.add_subcommand("product", "quantum product of two Schubert classes");
  add_common(product);
  add_elements(product, false);

  CLI::App* coeff = app.add_subcommand("coeff", "one structure constant");
  add_common(coeff);
  add_elements(coeff, true);
  coeff->add_option("--lambda", r.lambda, "coroot coordinates, e.g. 1,1,0");

  CLI::App* reduce = app.add_subcommand("reduce", "reduce a Grassmannian constant to a classical one");
  add_common(reduce);
  add_elements(reduce, true);
  reduce->add_option("--lambda", r.lambda, "coroot coordinates");
  reduce->add_flag("--trace", r.trace, "emit the rewrite trace");
  reduce->add_flag("--strict-theorem", r.strict, "only use transfers with common value 2");

  CLI::App* pw = app.add_subcommand("pw-lift", "lift of a G/P degree to G/B");
  add_common(pw);
  add_elements(pw, true);
  pw->add_option("--parabolic", r.parabolic, "simple roots of Delta_P, e.g. 1,3");
  pw->add_option("--lambda", r.lambda, "representative of lambda_P");

  CLI::App* q2c = app.add_subcommand("q2c", "Grassmannian constant as a two-step classical number");
  add_common(q2c);
  add_elements(q2c, true);
  q2c->add_option("--degree", r.degree, "degree d");

  CLI::App* verify = app.add_subcommand("verify", "exhaustive verification suites");
  add_common(verify);
  verify->add_option("suite", r.suite, "theorem1|theorem2|filtration|pw|grassmann|hygiene")->required();
  verify->add_option("--jobs", r.jobs, "worker threads");

  CLI::App* table = app.add_subcommand("table", "all structure constants as JSON lines");
  add_common(table);
  table->add_option("--jobs", r.jobs, "worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (CLI::App* s : app.get_subcommands()) r.subcommand = s->get_name();
  validate(r);
  return r;
}

int run(const CommandRequest& r, std::ostream& out, std::ostream& err) {
  (void)err;
  QuantumRing ring(root_system_of(r));
  const RootSystem& rs = ring.root_system();
  const auto dir = cache_dir(r);
  if (dir) ring.load_cache(ring.cache_file(*dir));
  const bool as_json = r.format == "json";
  int code = 0;

  if (r.subcommand == "product") {
    const QHElement p = ring.product(required_element(rs, r, 'u'), required_element(rs, r, 'v'));
    if (as_json) {
      emit(out, to_json(rs, p));
    } else {
      print_terms(out, rs, p);
    }
  } else if (r.subcommand == "coeff") {
    const mpz_class c = ring.coefficient(required_element(rs, r, 'u'), required_element(rs, r, 'v'),
                                         required_element(rs, r, 'w'), parse_lambda(rs, *r.lambda));
    if (as_json) {
      emit(out, json{{"value", integer_json(c)}});
    } else {
      out << c.get_str() << '\n';
    }
  } else if (r.subcommand == "reduce") {
    const Quad q{required_element(rs, r, 'u'), required_element(rs, r, 'v'), required_element(rs, r, 'w'),
                 parse_lambda(rs, *r.lambda)};
    const ReductionResult res =
        reduce_grassmannian(rs, r.grass_k, q, r.strict ? RuleMode::Strict : RuleMode::Generalized);
    const mpz_class value = res.vanishes ? mpz_class(0)
                                         : ring.coefficient(res.final_quad.u, res.final_quad.v, res.final_quad.w,
                                                            res.final_quad.lambda);
    if (as_json) {
      json j{{"value", integer_json(value)}};
      if (r.trace) j["trace"] = to_json(rs, res.trace);
      emit(out, j);
    } else {
      out << "value " << value.get_str() << '\n';
      if (r.trace) {
        for (const TraceStep& s : res.trace) {
          out << s.tag() << " alpha_" << s.alpha;
          if (s.kind == TraceStep::Kind::Rewrite) out << " " << to_string(s.direction);
          out << ": " << format_quad(rs, s.before);
          if (s.kind == TraceStep::Kind::Rewrite) out << " -> " << format_quad(rs, s.after);
          out << '\n';
        }
      }
    }
  } else if (r.subcommand == "pw-lift") {
    const ParabolicSubset p(parse_index_list(*r.parabolic, "--parabolic"));
    const PWLift lift = lambda_b(rs, p, parse_lambda(rs, *r.lambda));
    json j;
    j["lambda_P"] = lift.lambda_P.coords();
    j["lambda_B"] = lift.lambda_B.coords();
    j["delta_P_prime"] = lift.delta_P_prime.indices();
    j["omega_factor"] = format_element(rs, lift.omega_factor);
    const auto w = element_of(rs, r, r.w, r.w_partition, "w");
    if (w) {
      const auto [lb, wl] = psi_lift(rs, p, lift.lambda_P, *w);
      j["w_lift"] = format_element(rs, wl);
      const auto u = element_of(rs, r, r.u, r.u_partition, "u");
      const auto v = element_of(rs, r, r.v, r.v_partition, "v");
      if (u && v) j["value"] = integer_json(gp_coefficient(ring, p, *u, *v, *w, lift.lambda_P));
    }
    if (as_json) {
      emit(out, j);
    } else {
      for (const auto& [key, val] : j.items()) out << key << ' ' << val.dump() << '\n';
    }
  } else if (r.subcommand == "q2c") {
    const Q2CResult res = quantum_to_classical(rs, r.grass_k, required_element(rs, r, 'u'),
                                               required_element(rs, r, 'v'), required_element(rs, r, 'w'), *r.degree);
    json j;
    j["vanishes"] = res.vanishes.has_value();
    if (res.vanishes) {
      j["reason"] = std::string(to_string(*res.vanishes));
      j["value"] = 0;
    } else {
      j["ux"] = format_element(rs, res.ux);
      j["vx"] = format_element(rs, res.vx);
      j["w_tilde"] = format_element(rs, res.w_tilde);
      j["two_step"] = res.two_step.indices();
      j["value"] = integer_json(
          ring.classical_product(res.ux, res.vx).coefficient(Term{res.w_tilde, CorootVector::zero(rs.rank())}));
    }
    if (as_json) {
      emit(out, j);
    } else {
      for (const auto& [key, val] : j.items()) out << key << ' ' << val.dump() << '\n';
    }
  } else if (r.subcommand == "verify") {
    code = run_verify(r, ring, out);
  } else if (r.subcommand == "table") {
    code = run_table(r, ring, out);
  }

  if (dir) ring.save_cache(ring.cache_file(*dir));
  return code;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto request = parse_args(args, out);
    if (!request) return 0;
    return run(*request, out, err);
  } catch (const InvariantViolation& e) {
    err << "qschubert: invariant violation: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "qschubert: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "qschubert: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qschubert
