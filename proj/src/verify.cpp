#include "qschubert/verify.hpp"

#include <array>
#include <functional>
#include <random>
#include <set>

#include "qschubert/error.hpp"
#include "qschubert/grassmann.hpp"
#include "qschubert/parallel.hpp"
#include "qschubert/pw.hpp"
#include "qschubert/serialize.hpp"

namespace qschubert {

std::string VerificationReport::summary() const {
  return suite + ": " + std::to_string(checks) + " checks, " + std::to_string(violations.size()) + " violations";
}

void VerificationReport::merge(const VerificationReport& other) {
  checks += other.checks;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::vector<CorootVector> effective_of_height(int rank, int height) {
  std::vector<CorootVector> out;
  if (height < 0) return out;
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank - 1) {
      c[static_cast<std::size_t>(i)] = left;
      out.emplace_back(c);
      return;
    }
    for (int a = left; a >= 0; --a) {
      c[static_cast<std::size_t>(i)] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, height);
  return out;
}

namespace {

using Body = std::function<void(std::size_t, VerificationReport&)>;

// Splits [0, count) across workers with one local report per index, merged in
// index order.
VerificationReport run_indexed(const std::string& suite, std::size_t count, int jobs, const Body& body) {
  std::vector<VerificationReport> locals(count);
  parallel_for(count, jobs, [&](std::size_t i) { body(i, locals[i]); });
  VerificationReport report;
  report.suite = suite;
  for (const auto& r : locals) report.merge(r);
  return report;
}

std::string str(const mpz_class& c) { return c.get_str(); }

std::string gr_str(Grading g) { return "(" + std::to_string(g.first) + "," + std::to_string(g.second) + ")"; }

std::string word(const RootSystem& rs, const WeylElement& w) {
  std::string s = format_element(rs, w);
  return s.empty() ? "id" : s;
}

// Degree-consistent quads with effective λ for a fixed u.
template <typename Fn>
void for_each_quad(const QuantumRing& ring, const WeylElement& u, Fn&& fn) {
  const int n = ring.root_system().rank();
  for (const WeylElement& v : ring.elements()) {
    for (const WeylElement& w : ring.elements()) {
      const int excess = u.length() + v.length() - w.length();
      if (excess < 0 || excess % 2 != 0) continue;
      for (CorootVector& lambda : effective_of_height(n, excess / 2)) fn(Quad{u, v, w, std::move(lambda)});
    }
  }
}

mpz_class value(const QuantumRing& ring, const Quad& q) { return ring.coefficient(q.u, q.v, q.w, q.lambda); }

}  // namespace

VerificationReport verify_sgn_vanishing(const QuantumRing& ring, int jobs) {
  const RootSystem& rs = ring.root_system();
  const auto& el = ring.elements();
  return run_indexed("sgn-vanishing", el.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    for (std::size_t j = i; j < el.size(); ++j) {
      for (const auto& [t, c] : ring.product(el[i], el[j])) {
        const Quad q{el[i], el[j], t.w, t.lambda};
        for (int a = 1; a <= rs.rank(); ++a) {
          ++r.checks;
          if (!sgn_inequality_holds(rs, q, a)) {
            r.violations.push_back("nonzero " + format_quad(rs, q) + " = " + str(c) + " violates the sgn bound at alpha_" +
                                   std::to_string(a));
          }
        }
      }
    }
  });
}

VerificationReport verify_rewrite_rules(const QuantumRing& ring, RuleMode mode, int jobs) {
  const RootSystem& rs = ring.root_system();
  const auto& el = ring.elements();
  const std::string suite = mode == RuleMode::Strict ? "rewrite-strict" : "rewrite-generalized";
  return run_indexed(suite, el.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    for_each_quad(ring, el[i], [&](const Quad& q) {
      for (int a = 1; a <= rs.rank(); ++a) {
        for (Rule rule : {Rule::R1Both, Rule::R2TransferV, Rule::R2TransferU}) {
          if (rule_obstruction(rs, q, a, rule, mode)) continue;
          const Quad after = apply_rule(rs, q, a, rule, Direction::Lower, mode);
          ++r.checks;
          const mpz_class before_value = value(ring, q);
          const mpz_class after_value = value(ring, after);
          if (before_value != after_value) {
            r.violations.push_back(std::string(to_string(rule)) + " at alpha_" + std::to_string(a) + ": " +
                                   format_quad(rs, q) + " = " + str(before_value) + " but " + format_quad(rs, after) +
                                   " = " + str(after_value));
          }
        }
      }
    });
  });
}

VerificationReport verify_theorem1(const QuantumRing& ring, int jobs) {
  VerificationReport report;
  report.suite = "theorem1";
  report.merge(verify_sgn_vanishing(ring, jobs));
  report.merge(verify_rewrite_rules(ring, RuleMode::Strict, jobs));
  report.merge(verify_rewrite_rules(ring, RuleMode::Generalized, jobs));
  return report;
}

VerificationReport verify_filtration(const QuantumRing& ring, int length_cap, int jobs) {
  const RootSystem& rs = ring.root_system();
  const auto& el = ring.elements();
  const int n = rs.rank();
  const CorootVector zero = CorootVector::zero(n);

  // (a), (d), (e) over all pairs.
  VerificationReport report = run_indexed("filtration", el.size(), jobs, [&](std::size_t i, VerificationReport& r) {
    const WeylElement& u = el[i];
    for (const WeylElement& v : el) {
      if (length_cap >= 0 && u.length() + v.length() > length_cap) continue;
      const QHElement p = ring.product(u, v);
      for (int a = 1; a <= n; ++a) {
        const Grading bound = gr(rs, a, zero, u) + gr(rs, a, zero, v);
        const bool both_min = sgn(rs, u, a) == 0 && sgn(rs, v, a) == 0;
        for (const auto& [t, c] : p) {
          const Grading g = gr(rs, a, t.lambda, t.w);
          const Quad q{u, v, t.w, t.lambda};
          ++r.checks;
          if (bound < g) {
            r.violations.push_back("(a) alpha_" + std::to_string(a) + ": term " + format_quad(rs, q) + " has gr " +
                                   gr_str(g) + " above " + gr_str(bound));
          }
          ++r.checks;
          const bool on_top = t.w.length() + rs.two_rho(t.lambda) == u.length() + v.length() &&
                             sgn(rs, t.w, a) + rs.pairing(a, t.lambda) == sgn(rs, u, a) + sgn(rs, v, a);
          if ((g == bound) != on_top) {
            r.violations.push_back("(e) alpha_" + std::to_string(a) + ": " + format_quad(rs, q));
          }
          if (both_min && g.first == 0) {
            ++r.checks;
            const int pa = rs.pairing(a, t.lambda);
            bool in_image = pa == -sgn(rs, t.w, a);
            if (in_image) {
              const ParabolicSubset pa_set({a});
              const auto [lb, wl] = psi_lift(rs, pa_set, t.lambda, min_rep(rs, t.w, pa_set));
              in_image = lb == t.lambda && wl == t.w;
            }
            if (!in_image) {
              r.violations.push_back("(d) alpha_" + std::to_string(a) + ": term " + format_quad(rs, q) +
                                     " outside the image of psi");
            }
          }
        }
      }
    }
    // (e) off the support: every w and a box of λ, so the "only if" direction
    // is exercised on zero coefficients too.
    if (n <= 3) {
      for (const WeylElement& v : el) {
        for (const WeylElement& w : el) {
          for (int h = 0; h <= 2 * n; ++h) {
            for (const CorootVector& lambda : effective_of_height(n, h)) {
              for (int a = 1; a <= n; ++a) {
                ++r.checks;
                const Grading bound = gr(rs, a, zero, u) + gr(rs, a, zero, v);
                const bool on_top = w.length() + rs.two_rho(lambda) == u.length() + v.length() &&
                                   sgn(rs, w, a) + rs.pairing(a, lambda) == sgn(rs, u, a) + sgn(rs, v, a);
                if ((gr(rs, a, lambda, w) == bound) != on_top) {
                  r.violations.push_back("(e) alpha_" + std::to_string(a) + ": " + format_quad(rs, Quad{u, v, w, lambda}));
                }
              }
            }
          }
        }
      }
    }
  });

  // (b) and (c).
  for (int a = 1; a <= n; ++a) {
    const WeylElement s = simple_reflection(rs, a);
    for (const WeylElement& u : el) {
      if (sgn(rs, u, a) != 0) continue;
      if (length_cap >= 0 && u.length() + 1 > length_cap) continue;
      ++report.checks;
      const WeylElement lead = right_multiply(rs, u, a);
      const Grading top = gr(rs, a, zero, lead);
      const QHElement p = ring.product(u, s);
      if (p.coefficient(Term{lead, zero}) != 1) {
        report.violations.push_back("(b) alpha_" + std::to_string(a) + ": u = " + word(rs, u) +
                                    " leading coefficient is not 1");
      }
      for (const auto& [t, c] : p) {
        if (t.w == lead && t.lambda.is_zero()) continue;
        if (!(gr(rs, a, t.lambda, t.w) < top)) {
          report.violations.push_back("(b) alpha_" + std::to_string(a) + ": u = " + word(rs, u) + " term " +
                                      word(rs, t.w) + " q^(" + format_lambda(t.lambda) + ") not below the leading term");
        }
      }
    }
    if (length_cap < 0 || length_cap >= 2) {
      ++report.checks;
      const CorootVector alpha = CorootVector::simple(n, a);
      const QHElement p = ring.product(s, s);
      if (p.coefficient(Term{identity(rs), alpha}) != 1) {
        report.violations.push_back("(c) alpha_" + std::to_string(a) + ": q_alpha coefficient is not 1");
      }
      for (const auto& [t, c] : p) {
        if (t.w.is_identity() && t.lambda == alpha) continue;
        if (!(gr(rs, a, t.lambda, t.w) < Grading{2, 0})) {
          report.violations.push_back("(c) alpha_" + std::to_string(a) + ": term " + word(rs, t.w) + " not below (2,0)");
        }
      }
    }
  }
  return report;
}

namespace {

// Every final value reachable through some sequence of admissible choices.
void all_choice_values(const QuantumRing& ring, int k, const Quad& q, std::set<mpz_class>& values) {
  const RootSystem& rs = ring.root_system();
  if (q.lambda.is_zero()) {
    values.insert(value(ring, q));
    return;
  }
  for (int m : admissible_choices(rs, k, q)) {
    ReductionTrace scratch;
    auto next = reduction_step(rs, k, q, m, scratch);
    if (!next) {
      values.insert(0);
    } else {
      all_choice_values(ring, k, *next, values);
    }
  }
}

int degree_defect(const RootSystem& rs, const Quad& q) {
  return q.u.length() + q.v.length() - q.w.length() - rs.two_rho(q.lambda);
}

}  // namespace

VerificationReport verify_theorem2(const QuantumRing& ring, int jobs) {
  const RootSystem& rs = ring.root_system();
  if (rs.lie_type() != LieType::A) throw PreconditionError("theorem2 suite requires type A");
  const auto& el = ring.elements();
  const int n = rs.rank();
  const int top = 2 * ring.longest().length();

  std::vector<std::pair<int, WeylElement>> starts;
  for (int k = 1; k <= n; ++k) {
    for (const WeylElement& u : el) {
      if (is_grassmannian(rs, u, k)) starts.emplace_back(k, u);
    }
  }
  return run_indexed("theorem2", starts.size(), jobs, [&](std::size_t idx, VerificationReport& r) {
    const auto& [k, u] = starts[idx];
    for (const WeylElement& v : el) {
      for (const WeylElement& w : el) {
        for (int h = 0; w.length() + 2 * h <= top; ++h) {
          for (const CorootVector& lambda : effective_of_height(n, h)) {
            const Quad q{u, v, w, lambda};
            const mpz_class truth = value(ring, q);
            for (RuleMode mode : {RuleMode::Generalized, RuleMode::Strict}) {
              ++r.checks;
              const ReductionResult res = reduce_grassmannian(rs, k, q, mode);
              const mpz_class got = res.vanishes ? mpz_class(0) : value(ring, res.final_quad);
              const std::string tag = std::string(mode == RuleMode::Strict ? " [strict]" : "") + " k=" +
                                      std::to_string(k) + " " + format_quad(rs, q);
              if (got != truth) {
                r.violations.push_back("reduce" + tag + ": got " + str(got) + ", engine " + str(truth));
              }
              if (auto why = check_trace(rs, res.trace, mode)) r.violations.push_back("trace" + tag + ": " + *why);
              for (const TraceStep& step : res.trace) {
                if (degree_defect(rs, step.after) != degree_defect(rs, q)) {
                  r.violations.push_back("degree drift" + tag);
                  break;
                }
              }
            }
            ++r.checks;
            std::set<mpz_class> values;
            all_choice_values(ring, k, q, values);
            if (values.size() != 1 || *values.begin() != truth) {
              r.violations.push_back("choice dependence k=" + std::to_string(k) + " " + format_quad(rs, q));
            }
          }
        }
      }
    }
  });
}

namespace {

CorootVector degree_vector(int n, int k, int d) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c[static_cast<std::size_t>(k - 1)] = d;
  return CorootVector(std::move(c));
}

int max_degree(int k, int n) {
  const int big_n = n + 1;
  return 2 * k * (big_n - k) / big_n + 1;
}

}  // namespace

VerificationReport verify_pw(const QuantumRing& ring, int jobs) {
  const RootSystem& rs = ring.root_system();
  if (rs.lie_type() != LieType::A) throw PreconditionError("pw suite requires type A");
  const int n = rs.rank();

  VerificationReport report = run_indexed("pw", static_cast<std::size_t>(n), jobs, [&](std::size_t ki, VerificationReport& r) {
    const int k = static_cast<int>(ki) + 1;
    const ParabolicSubset grass = grassmannian_parabolic(rs, k);
    const PieriOracle oracle(k, n);
    const auto parts = partitions_in_box(k, n + 1 - k);
    const std::string gr_name = "Gr(" + std::to_string(k) + "," + std::to_string(n + 1) + ")";
    for (const Partition& a : parts) {
      const WeylElement u = permutation_of(rs, a, k);
      for (const Partition& b : parts) {
        const WeylElement v = permutation_of(rs, b, k);
        for (const Partition& c : parts) {
          const WeylElement w = permutation_of(rs, c, k);
          for (int d = 0; d <= max_degree(k, n); ++d) {
            ++r.checks;
            const mpz_class lifted = gp_coefficient(ring, grass, u, v, w, degree_vector(n, k, d));
            const mpz_class expected = oracle.coefficient(a, b, c, d);
            if (lifted != expected) {
              r.violations.push_back(gr_name + " (" + format_partition(a) + ")*(" + format_partition(b) + ") at (" +
                                     format_partition(c) + ") q^" + std::to_string(d) + ": lift " + str(lifted) +
                                     ", Pieri " + str(expected));
            }
          }
        }
      }
    }
    for (int d = 1; d <= n; ++d) {
      ++r.checks;
      const PWLift lift = lambda_b(rs, grass, degree_vector(n, k, d));
      const GrassLift closed = grass_lambda_b(rs, k, d);
      if (lift.lambda_B != closed.lambda_B || lift.omega_factor != closed.omega_factor) {
        r.violations.push_back(gr_name + " d=" + std::to_string(d) + ": closed formula differs from generic lift");
      }
      ++r.checks;
      if (lift.omega_factor.length() + rs.two_rho(lift.lambda_B) != d * (n + 1)) {
        r.violations.push_back(gr_name + " d=" + std::to_string(d) + ": lifted q-degree is not d(n+1)");
      }
    }
  });

  // Box uniqueness for every parabolic subset, outside coordinates in 0..2.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int j = 1; j <= n; ++j) {
      if (mask & (1u << (j - 1))) idx.push_back(j);
    }
    const ParabolicSubset p(idx);
    const int free = n - static_cast<int>(idx.size());
    int combos = 1;
    for (int f = 0; f < free; ++f) combos *= 3;
    for (int code = 0; code < combos; ++code) {
      std::vector<int> c(static_cast<std::size_t>(n), 0);
      int rest = code;
      for (int j = 1; j <= n; ++j) {
        if (p.contains(j)) continue;
        c[static_cast<std::size_t>(j - 1)] = rest % 3;
        rest /= 3;
      }
      const CorootVector lp(c);
      ++report.checks;
      const auto box = lambda_b_candidates_in_box(rs, p, lp);
      const PWLift lift = lambda_b(rs, p, lp);
      if (box.size() != 1 || box.front() != lift.lambda_B) {
        report.violations.push_back("box search for parabolic {" + format_lambda(CorootVector(idx)) + "} lambda_P (" +
                                    format_lambda(lp) + ") found " + std::to_string(box.size()) + " candidates");
      }
    }
  }
  return report;
}

VerificationReport verify_grassmann(const QuantumRing& ring, int jobs) {
  const RootSystem& rs = ring.root_system();
  if (rs.lie_type() != LieType::A) throw PreconditionError("grassmann suite requires type A");
  const int n = rs.rank();

  return run_indexed("grassmann", static_cast<std::size_t>(n), jobs, [&](std::size_t ki, VerificationReport& r) {
    const int k = static_cast<int>(ki) + 1;
    const std::string gr_name = "Gr(" + std::to_string(k) + "," + std::to_string(n + 1) + ")";
    for (int d = 1; d <= k && k + d - 1 <= n; ++d) {
      ++r.checks;
      try {
        x_element(rs, k, d);
      } catch (const InvariantViolation& e) {
        r.violations.push_back("x(" + std::to_string(k) + "," + std::to_string(d) + "): " + e.what());
      }
    }
    const PieriOracle oracle(k, n);
    const auto parts = partitions_in_box(k, n + 1 - k);
    const int bound = std::min(k, n + 1 - k);
    for (const Partition& a : parts) {
      const WeylElement u = permutation_of(rs, a, k);
      for (const Partition& b : parts) {
        const WeylElement v = permutation_of(rs, b, k);
        for (const Partition& c : parts) {
          const WeylElement w = permutation_of(rs, c, k);
          for (int d = 0; d <= max_degree(k, n); ++d) {
            ++r.checks;
            const mpz_class truth = oracle.coefficient(a, b, c, d);
            const Q2CResult q2c = quantum_to_classical(rs, k, u, v, w, d);
            const std::string where = gr_name + " (" + format_partition(a) + ")*(" + format_partition(b) + ") at (" +
                                      format_partition(c) + ") q^" + std::to_string(d);
            if (d > bound && (!q2c.vanishes || *q2c.vanishes != Q2CFailure::DegreeTooLarge || truth != 0)) {
              r.violations.push_back(where + ": degree bound");
            }
            const mpz_class classical =
                q2c.vanishes ? mpz_class(0)
                             : ring.classical_product(q2c.ux, q2c.vx).coefficient(Term{q2c.w_tilde, CorootVector::zero(n)});
            if (classical != truth) {
              r.violations.push_back(where + ": two-step " + str(classical) + ", Pieri " + str(truth));
            }
          }
        }
      }
    }
    // Two-step membership and the sorting description.
    for (int d = 1; d <= bound; ++d) {
      const XElement x = x_element(rs, k, d);
      std::vector<int> bar;
      for (int j = 1; j <= n; ++j) {
        if (j != k - d && j != k + d) bar.push_back(j);
      }
      const ParabolicSubset pbar(bar);
      for (const Partition& b : parts) {
        const WeylElement v = permutation_of(rs, b, k);
        const WeylElement vx = multiply(rs, v, x.element);
        if (vx.length() != v.length() - d * d) continue;
        ++r.checks;
        if (min_rep(rs, vx, pbar) != vx) {
          r.violations.push_back(gr_name + " d=" + std::to_string(d) + ": vx not in W^Pbar for v = (" +
                                 format_partition(b) + ")");
        }
        ++r.checks;
        if (sort_view(rs, v, k, d) != one_line(rs, vx)) {
          r.violations.push_back(gr_name + " d=" + std::to_string(d) + ": sorting view differs for v = (" +
                                 format_partition(b) + ")");
        }
      }
    }
  });
}

VerificationReport verify_hygiene(const QuantumRing& ring, std::size_t random_triples, std::uint64_t seed, int jobs) {
  const RootSystem& rs = ring.root_system();
  const auto& el = ring.elements();
  const std::size_t g = el.size();

  VerificationReport report = run_indexed("hygiene", g, jobs, [&](std::size_t i, VerificationReport& r) {
    const WeylElement& u = el[i];
    for (std::size_t j = i + 1; j < g; ++j) {
      ++r.checks;
      if (ring.product_expanding_left(el[j], u) != ring.product(u, el[j])) {
        r.violations.push_back("commutativity: " + word(rs, u) + " * " + word(rs, el[j]));
      }
    }
    for (int a = 1; a <= rs.rank(); ++a) {
      ++r.checks;
      if (ring.product_expanding_left(u, simple_reflection(rs, a)) != ring.chevalley(a, u)) {
        r.violations.push_back("Chevalley consistency: s_" + std::to_string(a) + " * " + word(rs, u));
      }
    }
    if (const Expansion* e = ring.expansion().find(u)) {
      ++r.checks;
      if (!expansion_reproduces(rs, u, *e, [&](int a, const WeylElement& x) { return ring.chevalley(a, x); })) {
        r.violations.push_back("expansion does not reproduce " + word(rs, u));
      }
    }
  });

  std::vector<std::array<std::size_t, 3>> triples;
  if (random_triples == 0) {
    for (std::size_t a = 0; a < g; ++a) {
      for (std::size_t b = 0; b < g; ++b) {
        for (std::size_t c = 0; c < g; ++c) triples.push_back({a, b, c});
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, g - 1);
    for (std::size_t t = 0; t < random_triples; ++t) triples.push_back({pick(rng), pick(rng), pick(rng)});
  }
  report.merge(run_indexed("associativity", triples.size(), jobs, [&](std::size_t t, VerificationReport& r) {
    const auto [a, b, c] = triples[t];
    ++r.checks;
    if (ring.multiply(ring.product(el[a], el[b]), el[c]) != ring.multiply(ring.product(el[b], el[c]), el[a])) {
      r.violations.push_back("associativity: " + word(rs, el[a]) + ", " + word(rs, el[b]) + ", " + word(rs, el[c]));
    }
  }));

  for (const auto& [key, p] : ring.memoized_products()) {
    ++report.checks;
    for (const auto& [t, c] : p) {
      if (c <= 0 || !t.lambda.is_effective() ||
          t.w.length() + rs.two_rho(t.lambda) != key.first.length() + key.second.length()) {
        report.violations.push_back("product " + word(rs, key.first) + " * " + word(rs, key.second) +
                                    " has a bad term at " + word(rs, t.w));
        break;
      }
    }
  }
  return report;
}

}  // namespace qschubert
