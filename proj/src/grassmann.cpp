#include "qschubert/grassmann.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "qschubert/error.hpp"

namespace qschubert {

Partition normalize_partition(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int partition_size(const Partition& p) {
  int s = 0;
  for (int part : p) s += part;
  return s;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int)> rec = [&](int max_part) {
    out.push_back(normalize_partition(cur));
    if (static_cast<int>(cur.size()) == rows) return;
    for (int part = 1; part <= max_part; ++part) {
      cur.push_back(part);
      rec(part);
      cur.pop_back();
    }
  };
  rec(cols);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (partition_size(a) != partition_size(b)) return partition_size(a) < partition_size(b);
    return a > b;
  });
  return out;
}

Partition parse_partition(std::string_view text) {
  Partition p;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
      throw UsageError("malformed partition '" + std::string(text) + "'");
    }
    p.push_back(value);
    pos = comma + 1;
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] > p[i - 1]) throw UsageError("partition '" + std::string(text) + "' is not weakly decreasing");
  }
  return normalize_partition(std::move(p));
}

std::string format_partition(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

namespace {

void require_type_a(const RootSystem& rs) {
  if (rs.lie_type() != LieType::A) throw PreconditionError("Grassmannian operations require type A");
}

void require_fits(const Partition& p, int rows, int cols) {
  if (static_cast<int>(p.size()) > rows || (!p.empty() && p.front() > cols)) {
    throw PreconditionError("partition (" + format_partition(p) + ") does not fit the " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " box");
  }
}

int part(const Partition& p, int i) { return i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : 0; }

}  // namespace

ParabolicSubset grassmannian_parabolic(const RootSystem& rs, int k) {
  rs.check_simple_index(k);
  std::vector<int> idx;
  for (int j = 1; j <= rs.rank(); ++j) {
    if (j != k) idx.push_back(j);
  }
  return ParabolicSubset(std::move(idx));
}

Partition partition_of(const RootSystem& rs, const WeylElement& u, int k) {
  require_type_a(rs);
  if (!is_min_rep(rs, u, grassmannian_parabolic(rs, k))) throw PreconditionError("element is not Grassmannian");
  const std::vector<int> perm = one_line(rs, u);
  Partition p;
  for (int i = 1; i <= k; ++i) p.push_back(perm[static_cast<std::size_t>(k - i)] - (k - i + 1));
  return normalize_partition(std::move(p));
}

WeylElement permutation_of(const RootSystem& rs, const Partition& p, int k) {
  require_type_a(rs);
  rs.check_simple_index(k);
  const int big_n = rs.rank() + 1;
  require_fits(p, k, big_n - k);
  std::vector<int> perm(static_cast<std::size_t>(big_n), 0);
  std::vector<bool> used(static_cast<std::size_t>(big_n) + 1, false);
  for (int j = 1; j <= k; ++j) {
    const int value = part(p, k - j) + j;
    perm[static_cast<std::size_t>(j - 1)] = value;
    used[static_cast<std::size_t>(value)] = true;
  }
  int next = 1;
  for (int j = k + 1; j <= big_n; ++j) {
    while (used[static_cast<std::size_t>(next)]) ++next;
    perm[static_cast<std::size_t>(j - 1)] = next++;
  }
  return from_one_line(rs, perm);
}

PartitionElement pieri_oracle_product(int k, int n, const Partition& p0, int r) {
  const int big_n = n + 1;
  const int cols = big_n - k;
  if (k < 1 || k > n) throw PreconditionError("need 1 <= k <= n");
  const Partition p = normalize_partition(p0);
  require_fits(p, k, cols);
  if (r < 0 || r > cols) throw PreconditionError("row length out of range");

  PartitionElement out;
  Partition mu(static_cast<std::size_t>(k), 0);
  // Classical: horizontal strips of size r inside the box.
  std::function<void(int, int)> strip = [&](int i, int left) {
    if (i == k) {
      if (left == 0) out[{normalize_partition(mu), 0}] += 1;
      return;
    }
    const int lo = part(p, i);
    const int hi = i == 0 ? cols : part(p, i - 1);
    for (int m = lo; m <= hi && m - lo <= left; ++m) {
      mu[static_cast<std::size_t>(i)] = m;
      strip(i + 1, left - (m - lo));
    }
  };
  strip(0, r);

  // q-terms: |ν| = |p|+r-N and p_i-1 ≥ ν_i ≥ p_{i+1}-1, ν_k ≥ 0.
  const int target = partition_size(p) + r - big_n;
  if (target >= 0) {
    Partition nu(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> hook = [&](int i, int left) {
      if (i == k) {
        if (left == 0) out[{normalize_partition(nu), 1}] += 1;
        return;
      }
      const int hi = part(p, i) - 1;
      const int lo = std::max(0, part(p, i + 1) - 1);
      for (int m = lo; m <= hi && m <= left; ++m) {
        nu[static_cast<std::size_t>(i)] = m;
        hook(i + 1, left - m);
      }
    };
    hook(0, target);
  }
  return out;
}

PieriOracle::PieriOracle(int k, int n) : k_(k), n_(n) {
  if (k < 1 || k > n) throw PreconditionError("need 1 <= k <= n");
}

PartitionElement PieriOracle::apply_word(const Word& word, const PartitionElement& x) const {
  PartitionElement cur = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    PartitionElement next;
    for (const auto& [key, c] : cur) {
      for (const auto& [key2, c2] : pieri_oracle_product(k_, n_, key.first, *it)) {
        next[{key2.first, key2.second + key.second}] += c * c2;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    cur = std::move(next);
  }
  return cur;
}

// σ_μ = row product over μ minus every other term of that product, each
// already expressed recursively. Other classical terms strictly dominate μ and
// q-terms are smaller, so the recursion is well founded.
const PieriOracle::WordCombination& PieriOracle::giambelli(const Partition& mu) const {
  if (auto it = giambelli_.find(mu); it != giambelli_.end()) return it->second;
  WordCombination e;
  e[{mu, 0}] = 1;
  if (mu.size() > 1) {
    PartitionElement y = apply_word(mu, {{{Partition{}, 0}, 1}});
    if (y[{mu, 0}] != 1) throw InvariantViolation("leading Kostka coefficient is not 1");
    for (const auto& [key, c] : y) {
      if (key == std::make_pair(mu, 0) || c == 0) continue;
      if (key.second == 0 && partition_size(key.first) == partition_size(mu) && key.first < mu) {
        throw InvariantViolation("row product term not dominating the leading partition");
      }
      for (const auto& [wk, wc] : giambelli(key.first)) e[{wk.first, wk.second + key.second}] -= mpq_class(c) * wc;
    }
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
  }
  return giambelli_.emplace(mu, std::move(e)).first->second;
}

PartitionElement PieriOracle::product(const Partition& a0, const Partition& b0) const {
  const Partition a = normalize_partition(a0);
  const Partition b = normalize_partition(b0);
  require_fits(a, k_, n_ + 1 - k_);
  require_fits(b, k_, n_ + 1 - k_);
  std::lock_guard lock(mutex_);
  if (auto it = products_.find({a, b}); it != products_.end()) return it->second;
  std::map<std::pair<Partition, int>, mpq_class> acc;
  for (const auto& [wk, wc] : giambelli(a)) {
    for (const auto& [key, c] : apply_word(wk.first, {{{b, 0}, 1}})) {
      acc[{key.first, key.second + wk.second}] += wc * mpq_class(c);
    }
  }
  PartitionElement out;
  for (const auto& [key, c] : acc) {
    if (c == 0) continue;
    if (c.get_den() != 1 || c < 0) throw InvariantViolation("Pieri oracle produced a non-natural coefficient");
    out[key] = c.get_num();
  }
  return products_.emplace(std::make_pair(a, b), out).first->second;
}

mpz_class PieriOracle::coefficient(const Partition& a, const Partition& b, const Partition& c, int d) const {
  const PartitionElement p = product(a, b);
  auto it = p.find({normalize_partition(c), d});
  return it == p.end() ? mpz_class(0) : it->second;
}

WeylElement u_block(const RootSystem& rs, int i, int m) {
  std::vector<int> word;
  for (int j = m - i + 1; j <= m; ++j) word.push_back(j);
  return from_word(rs, word);
}

WeylElement v_block(const RootSystem& rs, int i, int m) {
  std::vector<int> word;
  for (int j = m; j >= m - i + 1; --j) word.push_back(j);
  return from_word(rs, word);
}

GrassLift grass_lambda_b(const RootSystem& rs, int k, int d) {
  require_type_a(rs);
  rs.check_simple_index(k);
  if (d < 1) throw PreconditionError("degree must be at least 1");
  const int n = rs.rank();
  GrassLift g;
  g.r1 = (d - 1) % k + 1;
  g.m1 = (d - g.r1) / k;
  g.r2 = (d - 1) % (n - k + 1) + 1;
  g.m2 = (d - g.r2) / (n - k + 1);

  std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);  // 1-based
  for (int j = 1; j <= k - 1; ++j) a[j] += g.m1 * j;
  for (int j = 1; j <= g.r1 - 1; ++j) a[k - g.r1 + j] += j;
  a[k] += d;
  // Upper limit n-k, not n-k+1: the last term would land on α_k.
  for (int j = 1; j <= n - k; ++j) a[n + 1 - j] += g.m2 * j;
  for (int j = 1; j <= g.r2 - 1; ++j) a[k + g.r2 - j] += j;
  g.lambda_B = CorootVector(std::vector<int>(a.begin() + 1, a.end()));

  WeylElement omega = identity(rs);
  for (int m = k - 1; m >= k - g.r1; --m) omega = multiply(rs, omega, u_block(rs, k - g.r1, m));
  for (int m = n - g.r2 + 1; m <= n; ++m) omega = multiply(rs, omega, v_block(rs, n + 1 - k - g.r2, m));
  g.omega_factor = std::move(omega);
  return g;
}

XElement x_element(const RootSystem& rs, int k, int d) {
  require_type_a(rs);
  rs.check_simple_index(k);
  if (d < 1 || k - d + 1 < 1 || k + d - 1 > rs.rank()) {
    throw PreconditionError("x element needs 1 <= d <= k and k+d-1 <= n");
  }
  WeylElement x = identity(rs);
  for (int j = d; j >= 2; --j) {
    x = multiply(rs, x, v_block(rs, j, k));
    x = multiply(rs, x, u_block(rs, j - 1, k + j - 1));
  }
  x = right_multiply(rs, x, k);
  if (x.length() != d * d) throw InvariantViolation("l(x) != d^2");
  if (!multiply(rs, x, x).is_identity()) throw InvariantViolation("x != x^-1");
  for (int letter : canonical_word(rs, x)) {
    if (letter < k - d + 1 || letter > k + d - 1) throw InvariantViolation("x outside its support window");
  }
  return XElement{k, d, std::move(x)};
}

std::string_view to_string(Q2CFailure f) {
  switch (f) {
    case Q2CFailure::DegreeTooLarge: return "d > min(k, n+1-k)";
    case Q2CFailure::UxLength: return "l(ux) != l(u) - l(x)";
    case Q2CFailure::VxLength: return "l(vx) != l(v) - l(x)";
    case Q2CFailure::WTildeNotMinimal: return "w~ not in W^Pbar";
  }
  return "";
}

Q2CResult quantum_to_classical(const RootSystem& rs, int k, const WeylElement& u, const WeylElement& v,
                               const WeylElement& w, int d) {
  require_type_a(rs);
  const ParabolicSubset grass = grassmannian_parabolic(rs, k);
  for (const auto* e : {&u, &v, &w}) {
    if (!is_min_rep(rs, *e, grass)) throw PreconditionError("u, v, w must be Grassmannian with descent k");
  }
  if (d < 0) throw PreconditionError("degree must be non-negative");
  const int n = rs.rank();
  Q2CResult r{std::nullopt, u, v, w, grass};
  if (d == 0) return r;
  std::vector<int> bar;
  for (int j = 1; j <= n; ++j) {
    if (j != k - d && j != k + d) bar.push_back(j);
  }
  r.two_step = ParabolicSubset(std::move(bar));
  if (d > std::min(k, n + 1 - k)) {
    r.vanishes = Q2CFailure::DegreeTooLarge;
    return r;
  }
  const XElement x = x_element(rs, k, d);
  r.ux = multiply(rs, u, x.element);
  r.vx = multiply(rs, v, x.element);
  r.w_tilde = multiply(rs, w, grass_lambda_b(rs, k, d).omega_factor);
  if (r.ux.length() != u.length() - d * d) {
    r.vanishes = Q2CFailure::UxLength;
  } else if (r.vx.length() != v.length() - d * d) {
    r.vanishes = Q2CFailure::VxLength;
  } else if (!is_min_rep(rs, r.w_tilde, r.two_step)) {
    r.vanishes = Q2CFailure::WTildeNotMinimal;
  }
  return r;
}

std::vector<int> sort_view(const RootSystem& rs, const WeylElement& v, int k, int d) {
  require_type_a(rs);
  if (!is_min_rep(rs, v, grassmannian_parabolic(rs, k))) throw PreconditionError("v is not Grassmannian");
  if (d < 0 || k - d < 0 || k + d > rs.rank() + 1) throw PreconditionError("sort window out of range");
  std::vector<int> perm = one_line(rs, v);
  std::sort(perm.begin() + (k - d), perm.begin() + (k + d));
  return perm;
}

}  // namespace qschubert
