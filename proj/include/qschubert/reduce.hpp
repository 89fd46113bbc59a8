#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qschubert/cartan.hpp"
#include "qschubert/weyl.hpp"

namespace qschubert {

/// gr_α(q_λσ^w), compared lexicographically.
struct Grading {
  int first = 0;
  int second = 0;

  int total() const { return first + second; }
  friend Grading operator+(Grading a, Grading b) { return {a.first + b.first, a.second + b.second}; }
  friend bool operator==(const Grading&, const Grading&) = default;
  friend auto operator<=>(const Grading&, const Grading&) = default;
};

/// (sgn_α(w)+⟨α,λ⟩, ℓ(w)+⟨2ρ,λ⟩-sgn_α(w)-⟨α,λ⟩) for α = α_i.
Grading gr(const RootSystem& rs, int i, const CorootVector& lambda, const WeylElement& w);

/// Label (u, v, w, λ) of the constant N_{u,v}^{w,λ}.
struct Quad {
  WeylElement u;
  WeylElement v;
  WeylElement w;
  CorootVector lambda;

  friend bool operator==(const Quad&, const Quad&) = default;
  friend std::strong_ordering operator<=>(const Quad& a, const Quad& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    if (auto c = a.w <=> b.w; c != 0) return c;
    return a.lambda <=> b.lambda;
  }
};

enum class VanishReason { Eff, Deg, Sgn };
std::string_view to_string(VanishReason r);

struct Verdict {
  bool vanishes = false;
  /// Every reason that applies, in the order EFF, DEG, SGN. The first is the
  /// reported one.
  std::vector<VanishReason> reasons;
  int witness = 0;  // smallest α violating the sgn inequality, or 0

  std::optional<VanishReason> reason() const {
    return reasons.empty() ? std::nullopt : std::optional(reasons.front());
  }
};

/// Effectivity, degree, and sgn-inequality vanishing. A non-vanishing verdict
/// does not mean the constant is nonzero.
Verdict vanishing_check(const RootSystem& rs, const Quad& q);

/// sgn_α(w)+⟨α,λ⟩ ≤ sgn_α(u)+sgn_α(v) for the single index i.
bool sgn_inequality_holds(const RootSystem& rs, const Quad& q, int i);

enum class Rule { R1Both, R2TransferV, R2TransferU };
enum class Direction { Lower, Raise };
/// Strict admits a transfer only when the common value is 2.
enum class RuleMode { Generalized, Strict };

std::string_view to_string(Rule r);
std::string_view to_string(Direction d);
Rule parse_rule(std::string_view text);
Direction parse_direction(std::string_view text);

/// The failed hypothesis of `rule` on q at α_i, or nullopt if it applies
/// (in the lowering direction).
std::optional<std::string> rule_obstruction(const RootSystem& rs, const Quad& q, int i, Rule rule, RuleMode mode);

/// Rewrites q at α_i. Raise returns the quad that lowers to q. Throws
/// RuleNotApplicable naming the failed condition.
Quad apply_rule(const RootSystem& rs, const Quad& q, int i, Rule rule, Direction direction,
                RuleMode mode = RuleMode::Generalized);

struct TraceStep {
  enum class Kind { VanishSgn, VanishDeg, VanishEff, Rewrite };
  Kind kind = Kind::Rewrite;
  Rule rule = Rule::R1Both;               // Rewrite only
  Direction direction = Direction::Lower;  // Rewrite only
  int alpha = 0;
  Quad before;
  Quad after;

  std::string tag() const;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

using ReductionTrace = std::vector<TraceStep>;

/// Re-checks each step: rewrite hypotheses hold and `after` is what the rule
/// produces, a vanishing step is last and its condition holds. Returns the
/// first problem found.
std::optional<std::string> check_trace(const RootSystem& rs, const ReductionTrace& trace,
                                       RuleMode mode = RuleMode::Generalized);

struct ReductionResult {
  bool vanishes = false;
  Quad final_quad;  // λ = 0 unless vanishes
  ReductionTrace trace;
};

/// Simple indices the reduction may act on next: M∖{k} when |M| > 1, else M.
/// Empty when λ = 0.
std::vector<int> admissible_choices(const RootSystem& rs, int k, const Quad& q);

/// One reduction step at index m (taken from admissible_choices). Appends to
/// `trace`; returns the new quad, or nullopt if the constant vanishes.
std::optional<Quad> reduction_step(const RootSystem& rs, int k, const Quad& q, int m, ReductionTrace& trace,
                                   RuleMode mode = RuleMode::Generalized);

using Chooser = std::function<int(const std::vector<int>&)>;

/// Type A, u Grassmannian with descent k, λ effective. Drives λ to 0 (or to a
/// vanishing verdict) one |λ|-unit at a time. The default chooser takes the
/// smallest admissible m.
ReductionResult reduce_grassmannian(const RootSystem& rs, int k, const Quad& q,
                                    RuleMode mode = RuleMode::Generalized, const Chooser& choose = {});

/// sgn_j(u) = 0 for all j ≠ k.
bool is_grassmannian(const RootSystem& rs, const WeylElement& u, int k);

}  // namespace qschubert
