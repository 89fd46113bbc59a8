#include "qschubert/reduce.hpp"

#include <algorithm>

#include "qschubert/error.hpp"

namespace qschubert {

Grading gr(const RootSystem& rs, int i, const CorootVector& lambda, const WeylElement& w) {
  const int first = sgn(rs, w, i) + rs.pairing(i, lambda);
  return {first, w.length() + rs.two_rho(lambda) - first};
}

std::string_view to_string(VanishReason r) {
  switch (r) {
    case VanishReason::Eff: return "VANISH-EFF";
    case VanishReason::Deg: return "VANISH-DEG";
    case VanishReason::Sgn: return "VANISH-SGN";
  }
  return "";
}

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::R1Both: return "R1-BOTH";
    case Rule::R2TransferV: return "R2-TRANSFER-V";
    case Rule::R2TransferU: return "R2-TRANSFER-U";
  }
  return "";
}

std::string_view to_string(Direction d) { return d == Direction::Lower ? "lower" : "raise"; }

Rule parse_rule(std::string_view text) {
  if (text == "R1-BOTH") return Rule::R1Both;
  if (text == "R2-TRANSFER-V") return Rule::R2TransferV;
  if (text == "R2-TRANSFER-U") return Rule::R2TransferU;
  throw PreconditionError("unknown rule '" + std::string(text) + "'");
}

Direction parse_direction(std::string_view text) {
  if (text == "lower") return Direction::Lower;
  if (text == "raise") return Direction::Raise;
  throw PreconditionError("unknown direction '" + std::string(text) + "'");
}

bool sgn_inequality_holds(const RootSystem& rs, const Quad& q, int i) {
  return sgn(rs, q.w, i) + rs.pairing(i, q.lambda) <= sgn(rs, q.u, i) + sgn(rs, q.v, i);
}

Verdict vanishing_check(const RootSystem& rs, const Quad& q) {
  rs.check_rank(q.lambda);
  Verdict v;
  if (!q.lambda.is_effective()) v.reasons.push_back(VanishReason::Eff);
  if (q.w.length() + rs.two_rho(q.lambda) != q.u.length() + q.v.length()) v.reasons.push_back(VanishReason::Deg);
  for (int i = 1; i <= rs.rank(); ++i) {
    if (!sgn_inequality_holds(rs, q, i)) {
      v.witness = i;
      v.reasons.push_back(VanishReason::Sgn);
      break;
    }
  }
  v.vanishes = !v.reasons.empty();
  return v;
}

namespace {

std::string idx(int i) { return "alpha_" + std::to_string(i); }

// sgn_α(w)+⟨α,λ⟩ = sgn_α(x)+sgn_α(y), and = 2 in strict mode.
std::optional<std::string> equality_obstruction(const RootSystem& rs, const Quad& q, int i, RuleMode mode) {
  const int lhs = sgn(rs, q.w, i) + rs.pairing(i, q.lambda);
  const int rhs = sgn(rs, q.u, i) + sgn(rs, q.v, i);
  if (lhs != rhs) {
    return "sgn(w)+<" + idx(i) + ",lambda> = " + std::to_string(lhs) + " differs from sgn(u)+sgn(v) = " +
           std::to_string(rhs);
  }
  if (mode == RuleMode::Strict && lhs != 2) {
    return "strict mode requires sgn(w)+<" + idx(i) + ",lambda> = 2, got " + std::to_string(lhs);
  }
  return std::nullopt;
}

Quad lower(const RootSystem& rs, const Quad& q, int i, Rule rule) {
  const CorootVector a = CorootVector::simple(rs.rank(), i);
  switch (rule) {
    case Rule::R1Both:
      return {right_multiply(rs, q.u, i), right_multiply(rs, q.v, i), q.w, q.lambda - a};
    case Rule::R2TransferV:
      return {q.u, right_multiply(rs, q.v, i), right_multiply(rs, q.w, i),
              sgn(rs, q.w, i) == 0 ? q.lambda - a : q.lambda};
    case Rule::R2TransferU:
      return {right_multiply(rs, q.u, i), q.v, right_multiply(rs, q.w, i),
              sgn(rs, q.w, i) == 0 ? q.lambda - a : q.lambda};
  }
  throw InvariantViolation("unhandled rule");
}

// The unique quad lowering to q under `rule` at α_i, without checking hypotheses.
Quad preimage(const RootSystem& rs, const Quad& q, int i, Rule rule) {
  const CorootVector a = CorootVector::simple(rs.rank(), i);
  switch (rule) {
    case Rule::R1Both:
      return {right_multiply(rs, q.u, i), right_multiply(rs, q.v, i), q.w, q.lambda + a};
    case Rule::R2TransferV:
      return {q.u, right_multiply(rs, q.v, i), right_multiply(rs, q.w, i),
              sgn(rs, q.w, i) == 1 ? q.lambda + a : q.lambda};
    case Rule::R2TransferU:
      return {right_multiply(rs, q.u, i), q.v, right_multiply(rs, q.w, i),
              sgn(rs, q.w, i) == 1 ? q.lambda + a : q.lambda};
  }
  throw InvariantViolation("unhandled rule");
}

}  // namespace

std::optional<std::string> rule_obstruction(const RootSystem& rs, const Quad& q, int i, Rule rule, RuleMode mode) {
  rs.check_simple_index(i);
  rs.check_rank(q.lambda);
  const bool need_u = rule != Rule::R2TransferV;
  const bool need_v = rule != Rule::R2TransferU;
  if (need_u && sgn(rs, q.u, i) != 1) return "sgn_" + std::to_string(i) + "(u) = 1";
  if (need_v && sgn(rs, q.v, i) != 1) return "sgn_" + std::to_string(i) + "(v) = 1";
  if (rule == Rule::R1Both) {
    const int lhs = sgn(rs, q.w, i) + rs.pairing(i, q.lambda);
    if (lhs != 2) return "sgn(w)+<" + idx(i) + ",lambda> = 2, got " + std::to_string(lhs);
    return std::nullopt;
  }
  return equality_obstruction(rs, q, i, mode);
}

Quad apply_rule(const RootSystem& rs, const Quad& q, int i, Rule rule, Direction direction, RuleMode mode) {
  if (direction == Direction::Lower) {
    if (auto why = rule_obstruction(rs, q, i, rule, mode)) throw RuleNotApplicable(std::string(to_string(rule)) + ": " + *why);
    return lower(rs, q, i, rule);
  }
  rs.check_simple_index(i);
  rs.check_rank(q.lambda);
  Quad pre = preimage(rs, q, i, rule);
  if (auto why = rule_obstruction(rs, pre, i, rule, mode)) {
    throw RuleNotApplicable(std::string(to_string(rule)) + " raise: preimage fails " + *why);
  }
  if (lower(rs, pre, i, rule) != q) throw InvariantViolation("raise is not inverse to lower");
  return pre;
}

std::string TraceStep::tag() const {
  switch (kind) {
    case Kind::VanishSgn: return "VANISH-SGN";
    case Kind::VanishDeg: return "VANISH-DEG";
    case Kind::VanishEff: return "VANISH-EFF";
    case Kind::Rewrite: return std::string(to_string(rule));
  }
  return "";
}

std::optional<std::string> check_trace(const RootSystem& rs, const ReductionTrace& trace, RuleMode mode) {
  for (std::size_t s = 0; s < trace.size(); ++s) {
    const TraceStep& step = trace[s];
    const std::string at = "step " + std::to_string(s) + ": ";
    if (s > 0 && trace[s - 1].after != step.before) return at + "does not continue the previous quad";
    switch (step.kind) {
      case TraceStep::Kind::Rewrite:
        try {
          if (apply_rule(rs, step.before, step.alpha, step.rule, step.direction, mode) != step.after) {
            return at + "result differs from the rule";
          }
        } catch (const RuleNotApplicable& e) {
          return at + e.what();
        }
        break;
      case TraceStep::Kind::VanishSgn:
        if (step.alpha < 1 || step.alpha > rs.rank() || sgn_inequality_holds(rs, step.before, step.alpha)) {
          return at + "sgn inequality not violated";
        }
        break;
      case TraceStep::Kind::VanishDeg:
        if (step.before.w.length() + rs.two_rho(step.before.lambda) ==
            step.before.u.length() + step.before.v.length()) {
          return at + "degree matches";
        }
        break;
      case TraceStep::Kind::VanishEff:
        if (step.before.lambda.is_effective()) return at + "lambda is effective";
        break;
    }
    if (step.kind != TraceStep::Kind::Rewrite && s + 1 != trace.size()) return at + "vanishing step is not last";
  }
  return std::nullopt;
}

bool is_grassmannian(const RootSystem& rs, const WeylElement& u, int k) {
  rs.check_simple_index(k);
  for (int j = 1; j <= rs.rank(); ++j) {
    if (j != k && sgn(rs, u, j) != 0) return false;
  }
  return true;
}

std::vector<int> admissible_choices(const RootSystem& rs, int k, const Quad& q) {
  std::vector<int> positive;
  for (int m = 1; m <= rs.rank(); ++m) {
    if (rs.pairing(m, q.lambda) > 0) positive.push_back(m);
  }
  if (positive.size() > 1) std::erase(positive, k);
  return positive;
}

namespace {

Quad push_rewrite(const RootSystem& rs, ReductionTrace& trace, const Quad& q, int m, Rule rule, Direction dir,
                  RuleMode mode) {
  TraceStep step;
  step.rule = rule;
  step.direction = dir;
  step.alpha = m;
  step.before = q;
  step.after = apply_rule(rs, q, m, rule, dir, mode);
  trace.push_back(step);
  return trace.back().after;
}

void push_vanish(ReductionTrace& trace, const Quad& q, int m) {
  TraceStep step;
  step.kind = TraceStep::Kind::VanishSgn;
  step.alpha = m;
  step.before = q;
  step.after = q;
  trace.push_back(std::move(step));
}

}  // namespace

std::optional<Quad> reduction_step(const RootSystem& rs, int k, const Quad& q, int m, ReductionTrace& trace,
                                   RuleMode mode) {
  const std::vector<int> choices = admissible_choices(rs, k, q);
  if (std::find(choices.begin(), choices.end(), m) == choices.end()) {
    throw PreconditionError("alpha_" + std::to_string(m) + " is not an admissible reduction index");
  }
  int positive = 0;
  for (int j = 1; j <= rs.rank(); ++j) positive += rs.pairing(j, q.lambda) > 0 ? 1 : 0;
  if (!sgn_inequality_holds(rs, q, m)) {
    push_vanish(trace, q, m);
    return std::nullopt;
  }
  const int lhs = sgn(rs, q.w, m) + rs.pairing(m, q.lambda);
  const int rhs = sgn(rs, q.u, m) + sgn(rs, q.v, m);
  if (positive == 1) {
    // M = {m}: ⟨α_m,λ⟩ ≥ 2, so only m = k with equality survives.
    if (m != k) throw InvariantViolation("unique positive index differs from k yet the sgn inequality holds");
    if (lhs != rhs) {
      push_vanish(trace, q, m);
      return std::nullopt;
    }
    if (sgn(rs, q.v, m) != 1 || sgn(rs, q.w, m) != 0 || rs.pairing(m, q.lambda) != 2) {
      throw InvariantViolation("unique-index reduction without sgn_k(v)=1, sgn_k(w)=0, <alpha_k,lambda>=2");
    }
    return push_rewrite(rs, trace, q, m, Rule::R2TransferV, Direction::Lower, mode);
  }
  // m ≠ k: sgn_m(u) = 0, so the inequality forces sgn_m(v)=1, sgn_m(w)=0, ⟨α_m,λ⟩=1.
  if (sgn(rs, q.v, m) != 1 || sgn(rs, q.w, m) != 0 || rs.pairing(m, q.lambda) != 1 || lhs != rhs) {
    throw InvariantViolation("reduction at alpha_" + std::to_string(m) + " outside the expected case");
  }
  if (mode == RuleMode::Generalized) return push_rewrite(rs, trace, q, m, Rule::R2TransferV, Direction::Lower, mode);
  // The common value is 1 here; pass through a quad where it is 2.
  const Quad up = push_rewrite(rs, trace, q, m, Rule::R2TransferU, Direction::Raise, mode);
  return push_rewrite(rs, trace, up, m, Rule::R1Both, Direction::Lower, mode);
}

ReductionResult reduce_grassmannian(const RootSystem& rs, int k, const Quad& q, RuleMode mode, const Chooser& choose) {
  if (rs.lie_type() != LieType::A) throw PreconditionError("reduce requires type A");
  rs.check_rank(q.lambda);
  if (!is_grassmannian(rs, q.u, k)) throw PreconditionError("u is not Grassmannian with descent " + std::to_string(k));
  if (!q.lambda.is_effective()) throw PreconditionError("lambda is not effective");

  ReductionResult result;
  Quad current = q;
  while (!current.lambda.is_zero()) {
    const std::vector<int> choices = admissible_choices(rs, k, current);
    if (choices.empty()) throw InvariantViolation("no simple root pairs positively with a nonzero effective lambda");
    const int m = choose ? choose(choices) : choices.front();
    const int before = current.lambda.height();
    auto next = reduction_step(rs, k, current, m, result.trace, mode);
    if (!next) {
      result.vanishes = true;
      result.final_quad = current;
      return result;
    }
    if (!next->lambda.is_effective() || next->lambda.height() != before - 1) {
      throw InvariantViolation("reduction step did not lower |lambda| by one within the effective cone");
    }
    current = std::move(*next);
  }
  result.final_quad = std::move(current);
  return result;
}

}  // namespace qschubert
