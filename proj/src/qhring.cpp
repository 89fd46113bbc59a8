#include "qschubert/qhring.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "qschubert/error.hpp"

namespace qschubert {

QHElement QHElement::basis(const WeylElement& w, const CorootVector& lambda) {
  QHElement x;
  x.add(Term{w, lambda}, 1);
  return x;
}

void QHElement::add(const Term& term, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(term, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class QHElement::coefficient(const Term& term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

QHElement QHElement::classical_part() const {
  QHElement out;
  for (const auto& [t, c] : terms_) {
    if (t.lambda.is_zero()) out.terms_.emplace_hint(out.terms_.end(), t, c);
  }
  return out;
}

QHElement QHElement::quantum_part() const {
  QHElement out;
  for (const auto& [t, c] : terms_) {
    if (!t.lambda.is_zero()) out.terms_.emplace_hint(out.terms_.end(), t, c);
  }
  return out;
}

QHElement QHElement::shifted(const CorootVector& mu) const {
  QHElement out;
  for (const auto& [t, c] : terms_) out.terms_.emplace(Term{t.w, t.lambda + mu}, c);
  return out;
}

QHElement& QHElement::operator+=(const QHElement& other) {
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

QHElement& QHElement::operator-=(const QHElement& other) {
  for (const auto& [t, c] : other.terms_) add(t, -c);
  return *this;
}

// σ^{s_i} ⋆ σ^w = Σ_{ℓ(ws_γ)=ℓ(w)+1} ⟨χ_i,γ^∨⟩ σ^{ws_γ}
//              + Σ_{ℓ(ws_γ)=ℓ(w)+1-⟨2ρ,γ^∨⟩} ⟨χ_i,γ^∨⟩ q_{γ^∨} σ^{ws_γ}
QHElement chevalley(const RootSystem& rs, int i, const WeylElement& w) {
  rs.check_simple_index(i);
  QHElement out;
  const CorootVector zero = CorootVector::zero(rs.rank());
  for (const Root& root : rs.positive_roots()) {
    const int weight = root.coroot.coord(i);
    if (weight == 0) continue;
    WeylElement x = multiply(rs, w, reflection(rs, root));
    if (x.length() == w.length() + 1) {
      out.add(Term{std::move(x), zero}, weight);
    } else if (x.length() == w.length() + 1 - root.two_rho_pairing) {
      out.add(Term{std::move(x), root.coroot}, weight);
    }
  }
  return out;
}

const Expansion* ExpansionTable::find(const WeylElement& u) const {
  auto it = by_element_.find(u);
  return it == by_element_.end() ? nullptr : &it->second;
}

namespace {

using RationalRow = std::vector<mpq_class>;

// Inverse of a square rational matrix by Gauss–Jordan; nullopt if singular.
std::optional<std::vector<RationalRow>> invert(std::vector<RationalRow> a) {
  const std::size_t k = a.size();
  std::vector<RationalRow> inv(k, RationalRow(k, 0));
  for (std::size_t r = 0; r < k; ++r) inv[r][r] = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col] == 0) ++pivot;
    if (pivot == k) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const mpq_class scale = 1 / a[col][col];
    for (std::size_t c = 0; c < k; ++c) {
      a[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = 0; c < k; ++c) {
        if (a[col][c] != 0) a[r][c] -= f * a[col][c];
        if (inv[col][c] != 0) inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace

ExpansionTable build_expansion(const RootSystem& rs, int up_to_length) {
  return build_expansion(rs, up_to_length, [&rs](int i, const WeylElement& w) { return chevalley(rs, i, w); });
}

// For each length L, rows are the Monk products σ^{s_i} ⋆ σ^{u′} with
// ℓ(u′) = L-1 restricted to their classical part, columns the elements of
// length L. Choosing |columns| independent rows B, σ^u = Σ_s (B^{-1})[u][s] row_s.
ExpansionTable build_expansion(const RootSystem& rs, int up_to_length, const ChevalleyFn& chevalley_fn) {
  const std::vector<WeylElement> group = enumerate_group(rs);
  const int top = group.back().length();
  if (up_to_length > top) {
    throw PreconditionError("expansion length " + std::to_string(up_to_length) + " exceeds l(w0) = " +
                            std::to_string(top));
  }
  std::vector<std::vector<WeylElement>> by_length(static_cast<std::size_t>(top) + 1);
  for (const WeylElement& w : group) by_length[static_cast<std::size_t>(w.length())].push_back(w);

  ExpansionTable table;
  table.set_up_to_length(std::max(up_to_length, 1));
  for (int len = 2; len <= up_to_length; ++len) {
    const auto& columns = by_length[static_cast<std::size_t>(len)];
    const std::size_t k = columns.size();
    std::map<WeylElement, std::size_t> column_of;
    for (std::size_t c = 0; c < k; ++c) column_of.emplace(columns[c], c);

    struct Row {
      int simple;
      WeylElement factor;
      QHElement full;
      RationalRow classical;
    };
    std::vector<Row> chosen;
    std::vector<RationalRow> echelon;
    std::vector<std::size_t> echelon_pivot;

    for (const WeylElement& factor : by_length[static_cast<std::size_t>(len - 1)]) {
      if (chosen.size() == k) break;
      for (int i = 1; i <= rs.rank() && chosen.size() < k; ++i) {
        QHElement full = chevalley_fn(i, factor);
        RationalRow row(k, 0);
        for (const auto& [t, c] : full) {
          if (!t.lambda.is_zero()) continue;
          auto it = column_of.find(t.w);
          if (it == column_of.end()) throw InvariantViolation("classical Monk term of unexpected length");
          row[it->second] = c;
        }
        RationalRow reduced = row;
        for (std::size_t b = 0; b < echelon.size(); ++b) {
          const std::size_t p = echelon_pivot[b];
          if (reduced[p] == 0) continue;
          const mpq_class f = reduced[p] / echelon[b][p];
          for (std::size_t c = 0; c < k; ++c) reduced[c] -= f * echelon[b][c];
        }
        auto nz = std::find_if(reduced.begin(), reduced.end(), [](const mpq_class& x) { return x != 0; });
        if (nz == reduced.end()) continue;
        echelon_pivot.push_back(static_cast<std::size_t>(nz - reduced.begin()));
        echelon.push_back(std::move(reduced));
        chosen.push_back(Row{i, factor, std::move(full), std::move(row)});
      }
    }
    if (chosen.size() != k) {
      throw InvariantViolation("singular Monk system at length " + std::to_string(len) + " for " + rs.name());
    }

    std::vector<RationalRow> b;
    b.reserve(k);
    for (const Row& r : chosen) b.push_back(r.classical);
    auto inv = invert(std::move(b));
    if (!inv) throw InvariantViolation("singular Monk system at length " + std::to_string(len));

    for (std::size_t target = 0; target < k; ++target) {
      Expansion e;
      std::map<Term, mpq_class> correction;
      for (std::size_t s = 0; s < k; ++s) {
        const mpq_class& c = (*inv)[target][s];
        if (c == 0) continue;
        e.entries.push_back(ExpansionEntry{chosen[s].simple, chosen[s].factor, c});
        for (const auto& [t, coeff] : chosen[s].full) {
          if (t.lambda.is_zero()) continue;
          correction[t] += c * mpq_class(coeff);
        }
      }
      for (auto& [t, c] : correction) {
        if (c != 0) e.correction.emplace_back(t, c);
      }
      table.insert(columns[target], std::move(e));
    }
  }
  return table;
}

bool expansion_reproduces(const RootSystem& rs, const WeylElement& u, const Expansion& e,
                          const ChevalleyFn& chevalley_fn) {
  std::map<Term, mpq_class> acc;
  for (const ExpansionEntry& entry : e.entries) {
    for (const auto& [t, c] : chevalley_fn(entry.simple, entry.factor)) acc[t] += entry.coeff * mpq_class(c);
  }
  for (const auto& [t, c] : e.correction) acc[t] -= c;
  const Term target{u, CorootVector::zero(rs.rank())};
  for (const auto& [t, c] : acc) {
    if (c != (t == target ? 1 : 0)) return false;
  }
  return acc.count(target) == 1;
}

QuantumRing::QuantumRing(RootSystem rs, std::size_t group_ceiling)
    : rs_(std::move(rs)), elements_(enumerate_group(rs_, group_ceiling)) {}

QHElement QuantumRing::chevalley(int i, const WeylElement& w) const {
  rs_.check_simple_index(i);
  auto key = std::make_pair(i, w);
  {
    std::shared_lock lock(chevalley_mutex_);
    auto it = chevalley_memo_.find(key);
    if (it != chevalley_memo_.end()) return it->second;
  }
  QHElement result = qschubert::chevalley(rs_, i, w);
  std::unique_lock lock(chevalley_mutex_);
  return chevalley_memo_.try_emplace(std::move(key), std::move(result)).first->second;
}

const ExpansionTable& QuantumRing::expansion() const {
  std::call_once(expansion_once_, [this] {
    if (!expansion_) {
      expansion_ = build_expansion(rs_, longest().length(),
                                   [this](int i, const WeylElement& w) { return chevalley(i, w); });
    }
  });
  return *expansion_;
}

int QuantumRing::simple_index_of(const WeylElement& s) const {
  for (int i = 1; i <= rs_.rank(); ++i) {
    if (sgn(rs_, s, i) == 1) return i;
  }
  throw InvariantViolation("expected a simple reflection");
}

QHElement QuantumRing::product(const WeylElement& a, const WeylElement& b) const {
  const bool swap = b < a;
  const WeylElement& u = swap ? b : a;
  const WeylElement& v = swap ? a : b;
  auto key = std::make_pair(u, v);
  {
    std::shared_lock lock(product_mutex_);
    auto it = product_memo_.find(key);
    if (it != product_memo_.end()) return it->second;
  }
  QHElement result = compute(u, v);
  validate_product(u, v, result);
  std::unique_lock lock(product_mutex_);
  return product_memo_.try_emplace(std::move(key), std::move(result)).first->second;
}

QHElement QuantumRing::compute(const WeylElement& u, const WeylElement& v) const {
  if (u.length() == 0) return QHElement::basis(v, CorootVector::zero(rs_.rank()));
  if (u.length() == 1) return chevalley(simple_index_of(u), v);
  return expand_left(u, v);
}

QHElement QuantumRing::product_expanding_left(const WeylElement& u, const WeylElement& v) const {
  QHElement result = compute(u, v);
  validate_product(u, v, result);
  return result;
}

// σ^u ⋆ σ^v = Σ c σ^{s_i} ⋆ (σ^{u′} ⋆ σ^v) - Σ c q_λ (σ^w ⋆ σ^v); every
// sub-product has a strictly shorter first factor.
QHElement QuantumRing::expand_left(const WeylElement& u, const WeylElement& v) const {
  const Expansion* e = expansion().find(u);
  if (e == nullptr) throw InvariantViolation("missing divisor expansion");
  std::map<Term, mpq_class> acc;
  for (const ExpansionEntry& entry : e->entries) {
    for (const auto& [t, c] : product(entry.factor, v)) {
      const mpq_class scale = entry.coeff * mpq_class(c);
      for (const auto& [t2, c2] : chevalley(entry.simple, t.w)) {
        acc[Term{t2.w, t2.lambda + t.lambda}] += scale * mpq_class(c2);
      }
    }
  }
  for (const auto& [ct, cc] : e->correction) {
    for (const auto& [t, c] : product(ct.w, v)) acc[Term{t.w, t.lambda + ct.lambda}] -= cc * mpq_class(c);
  }
  QHElement out;
  for (auto& [t, c] : acc) {
    if (c == 0) continue;
    if (c.get_den() != 1) throw InvariantViolation("non-integral structure constant");
    out.add(t, c.get_num());
  }
  return out;
}

void QuantumRing::validate_product(const WeylElement& u, const WeylElement& v, const QHElement& p) const {
  const int degree = u.length() + v.length();
  for (const auto& [t, c] : p) {
    if (c < 0) throw InvariantViolation("negative structure constant");
    if (!t.lambda.is_effective()) throw InvariantViolation("non-effective degree in product");
    if (t.w.length() + rs_.two_rho(t.lambda) != degree) throw InvariantViolation("inhomogeneous product term");
  }
}

QHElement QuantumRing::multiply(const QHElement& x, const WeylElement& v) const {
  QHElement out;
  for (const auto& [t, c] : x) {
    for (const auto& [t2, c2] : product(t.w, v)) out.add(Term{t2.w, t2.lambda + t.lambda}, c * c2);
  }
  return out;
}

mpz_class QuantumRing::coefficient(const WeylElement& u, const WeylElement& v, const WeylElement& w,
                                   const CorootVector& lambda) const {
  rs_.check_rank(lambda);
  if (!lambda.is_effective()) return 0;
  if (w.length() + rs_.two_rho(lambda) != u.length() + v.length()) return 0;
  return product(u, v).coefficient(Term{w, lambda});
}

QHElement QuantumRing::classical_product(const WeylElement& u, const WeylElement& v) const {
  return product(u, v).classical_part();
}

std::vector<std::pair<std::pair<WeylElement, WeylElement>, QHElement>> QuantumRing::memoized_products() const {
  std::shared_lock lock(product_mutex_);
  std::vector<std::pair<std::pair<WeylElement, WeylElement>, QHElement>> out(product_memo_.begin(),
                                                                            product_memo_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::size_t QuantumRing::memo_size() const {
  std::shared_lock lock(product_mutex_);
  return product_memo_.size();
}

std::filesystem::path QuantumRing::cache_file(const std::filesystem::path& dir) const {
  return dir / ("qschubert-" + rs_.name() + ".json");
}

namespace {

using nlohmann::json;

json lambda_json(const CorootVector& lambda) { return lambda.coords(); }

CorootVector lambda_from(const RootSystem& rs, const json& j) {
  CorootVector lambda(j.get<std::vector<int>>());
  rs.check_rank(lambda);
  return lambda;
}

}  // namespace

// Loads expansions and products from `file`. A missing file, a version or
// root-system mismatch, or a malformed document leaves the ring untouched and
// returns false. Call before any concurrent use.
bool QuantumRing::load_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return false;
  std::optional<ExpansionTable> table;
  std::vector<std::pair<std::pair<WeylElement, WeylElement>, QHElement>> products;
  try {
    const json doc = json::parse(in);
    if (doc.at("version") != 1 || doc.at("type") != std::string(1, to_char(rs_.lie_type())) ||
        doc.at("rank") != rs_.rank()) {
      return false;
    }
    if (doc.contains("expansions") && !doc["expansions"].empty()) {
      table.emplace();
      table->set_up_to_length(doc.value("up_to_length", longest().length()));
      for (const json& je : doc["expansions"]) {
        Expansion e;
        for (const json& jt : je.at("entries")) {
          e.entries.push_back(ExpansionEntry{jt.at("i").get<int>(), parse_element(rs_, jt.at("factor").get<std::string>()),
                                             mpq_class(jt.at("coeff").get<std::string>())});
        }
        for (const json& jt : je.at("correction")) {
          e.correction.emplace_back(Term{parse_element(rs_, jt.at("w").get<std::string>()), lambda_from(rs_, jt.at("lambda"))},
                                    mpq_class(jt.at("coeff").get<std::string>()));
        }
        table->insert(parse_element(rs_, je.at("u").get<std::string>()), std::move(e));
      }
    }
    for (const json& jp : doc.value("products", json::array())) {
      WeylElement u = parse_element(rs_, jp.at("u").get<std::string>());
      WeylElement v = parse_element(rs_, jp.at("v").get<std::string>());
      QHElement p;
      for (const json& jt : jp.at("terms")) {
        p.add(Term{parse_element(rs_, jt.at("w").get<std::string>()), lambda_from(rs_, jt.at("lambda"))},
              mpz_class(jt.at("coeff").get<std::string>()));
      }
      validate_product(u, v, p);
      if (v < u) std::swap(u, v);
      products.emplace_back(std::make_pair(std::move(u), std::move(v)), std::move(p));
    }
  } catch (const json::exception&) {
    return false;
  } catch (const std::invalid_argument&) {
    return false;  // bad rational literal
  } catch (const PreconditionError&) {
    return false;
  } catch (const InvariantViolation&) {
    return false;
  }
  if (table && !expansion_) expansion_ = std::move(table);
  std::unique_lock lock(product_mutex_);
  for (auto& [key, p] : products) product_memo_.try_emplace(std::move(key), std::move(p));
  return true;
}

void QuantumRing::save_cache(const std::filesystem::path& file) const {
  json doc;
  doc["version"] = 1;
  doc["type"] = std::string(1, to_char(rs_.lie_type()));
  doc["rank"] = rs_.rank();
  json expansions = json::array();
  const ExpansionTable& table = expansion();
  doc["up_to_length"] = table.up_to_length();
  for (const auto& [u, e] : table.entries()) {
    json je;
    je["u"] = format_element(rs_, u);
    je["entries"] = json::array();
    for (const ExpansionEntry& entry : e.entries) {
      je["entries"].push_back({{"i", entry.simple}, {"factor", format_element(rs_, entry.factor)}, {"coeff", entry.coeff.get_str()}});
    }
    je["correction"] = json::array();
    for (const auto& [t, c] : e.correction) {
      je["correction"].push_back({{"w", format_element(rs_, t.w)}, {"lambda", lambda_json(t.lambda)}, {"coeff", c.get_str()}});
    }
    expansions.push_back(std::move(je));
  }
  doc["expansions"] = std::move(expansions);
  json products = json::array();
  for (const auto& [key, p] : memoized_products()) {
    json jp;
    jp["u"] = format_element(rs_, key.first);
    jp["v"] = format_element(rs_, key.second);
    jp["terms"] = json::array();
    for (const auto& [t, c] : p) {
      jp["terms"].push_back({{"w", format_element(rs_, t.w)}, {"lambda", lambda_json(t.lambda)}, {"coeff", c.get_str()}});
    }
    products.push_back(std::move(jp));
  }
  doc["products"] = std::move(products);

  std::filesystem::create_directories(file.parent_path().empty() ? std::filesystem::path(".") : file.parent_path());
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw PreconditionError("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace qschubert
