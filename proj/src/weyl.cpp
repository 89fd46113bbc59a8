#include "qschubert/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

int compute_length(const RootSystem& rs, const std::vector<int>& matrix) {
  const int n = rs.rank();
  // A root is negative iff its coordinate sum is negative, so only the
  // column sums of the matrix are needed.
  std::vector<int> column_sums(n, 0);
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) column_sums[col] += matrix[col * n + row];
  }
  int length = 0;
  for (const Root& root : rs.positive_roots()) {
    int image_height = 0;
    for (int j = 0; j < n; ++j) image_height += column_sums[j] * root.coroot.coords()[j];
    if (image_height < 0) ++length;
  }
  return length;
}

// Sign of w(α_i^∨): the i-th column of the matrix.
bool column_is_negative(const WeylElement& w, int i) {
  int sum = 0;
  for (int row = 0; row < w.rank(); ++row) sum += w.entry(row, i - 1);
  return sum < 0;
}

}  // namespace

WeylElement WeylElement::from_matrix(const RootSystem& rs, std::vector<int> matrix) {
  const int n = rs.rank();
  if (matrix.size() != static_cast<std::size_t>(n * n)) throw PreconditionError("Weyl matrix has wrong size");
  WeylElement w;
  w.rank_ = n;
  w.length_ = compute_length(rs, matrix);
  w.matrix_ = std::move(matrix);
  return w;
}

bool WeylElement::is_identity() const {
  for (int c = 0; c < rank_; ++c) {
    for (int r = 0; r < rank_; ++r) {
      if (entry(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

std::size_t WeylElement::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : matrix_) {
    h ^= static_cast<std::size_t>(x + 0x9e37);
    h *= 0x100000001b3ULL;
  }
  return h;
}

ParabolicSubset::ParabolicSubset(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

ParabolicSubset ParabolicSubset::all(int rank) {
  std::vector<int> idx(rank);
  for (int i = 0; i < rank; ++i) idx[i] = i + 1;
  return ParabolicSubset(std::move(idx));
}

ParabolicSubset ParabolicSubset::complement_of(int rank, std::initializer_list<int> removed) {
  std::vector<int> idx;
  for (int i = 1; i <= rank; ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) idx.push_back(i);
  }
  return ParabolicSubset(std::move(idx));
}

bool ParabolicSubset::contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

void ParabolicSubset::validate(const RootSystem& rs) const {
  for (int i : indices_) rs.check_simple_index(i);
}

WeylElement identity(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return WeylElement::from_matrix(rs, std::move(m));
}

WeylElement simple_reflection(const RootSystem& rs, int i) { return right_multiply(rs, identity(rs), i); }

// s_i(α_j^∨) = α_j^∨ - C[i][j] α_i^∨, so column j of w·s_i is
// col_j - C[i][j] col_i.
WeylElement right_multiply(const RootSystem& rs, const WeylElement& w, int i) {
  rs.check_simple_index(i);
  const int n = rs.rank();
  WeylElement out = w;
  const int ci = i - 1;
  for (int j = 0; j < n; ++j) {
    const int c = rs.cartan(i, j + 1);
    if (j == ci || c == 0) continue;
    for (int r = 0; r < n; ++r) out.matrix_[j * n + r] -= c * w.matrix_[ci * n + r];
  }
  for (int r = 0; r < n; ++r) out.matrix_[ci * n + r] = -w.matrix_[ci * n + r];
  out.length_ = w.length_ + (column_is_negative(w, i) ? -1 : 1);
  return out;
}

WeylElement left_multiply(const RootSystem& rs, int i, const WeylElement& w) {
  rs.check_simple_index(i);
  const int n = rs.rank();
  std::vector<int> m = w.matrix();
  for (int col = 0; col < n; ++col) {
    int pair = 0;
    for (int r = 0; r < n; ++r) pair += rs.cartan(i, r + 1) * w.entry(r, col);
    m[col * n + (i - 1)] -= pair;
  }
  return WeylElement::from_matrix(rs, std::move(m));
}

WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  const int n = rs.rank();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int col = 0; col < n; ++col) {
    for (int k = 0; k < n; ++k) {
      const int bk = b.entry(k, col);
      if (bk == 0) continue;
      for (int r = 0; r < n; ++r) m[col * n + r] += a.entry(r, k) * bk;
    }
  }
  return WeylElement::from_matrix(rs, std::move(m));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> word = canonical_word(rs, w);
  std::reverse(word.begin(), word.end());
  return from_word(rs, word);
}

WeylElement from_word(const RootSystem& rs, std::span<const int> word) {
  WeylElement w = identity(rs);
  for (int i : word) w = right_multiply(rs, w, i);
  return w;
}

std::vector<int> canonical_word(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> word;
  WeylElement rest = w;
  while (rest.length() > 0) {
    bool found = false;
    for (int i = 1; i <= rs.rank(); ++i) {
      WeylElement shorter = left_multiply(rs, i, rest);
      if (shorter.length() < rest.length()) {
        word.push_back(i);
        rest = std::move(shorter);
        found = true;
        break;
      }
    }
    if (!found) throw InvariantViolation("element of positive length without a left descent");
  }
  return word;
}

CorootVector apply(const WeylElement& w, const CorootVector& lambda) {
  const int n = w.rank();
  if (lambda.rank() != n) throw PreconditionError("coroot rank mismatch");
  std::vector<int> out(n, 0);
  for (int col = 0; col < n; ++col) {
    const int a = lambda.coords()[col];
    if (a == 0) continue;
    for (int r = 0; r < n; ++r) out[r] += w.entry(r, col) * a;
  }
  return CorootVector(std::move(out));
}

int sgn(const RootSystem& rs, const WeylElement& w, int i) {
  rs.check_simple_index(i);
  return column_is_negative(w, i) ? 1 : 0;
}

WeylElement min_rep(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& parabolic) {
  parabolic.validate(rs);
  WeylElement rep = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i : parabolic.indices()) {
      if (sgn(rs, rep, i) == 1) {
        rep = right_multiply(rs, rep, i);
        changed = true;
      }
    }
  }
  return rep;
}

bool is_min_rep(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& parabolic) {
  parabolic.validate(rs);
  return std::none_of(parabolic.indices().begin(), parabolic.indices().end(),
                      [&](int i) { return sgn(rs, w, i) == 1; });
}

WeylElement longest_element(const RootSystem& rs, const ParabolicSubset& parabolic) {
  parabolic.validate(rs);
  WeylElement w = identity(rs);
  for (bool changed = true; changed;) {
    changed = false;
    for (int i : parabolic.indices()) {
      if (sgn(rs, w, i) == 0) {
        w = right_multiply(rs, w, i);
        changed = true;
      }
    }
  }
  return w;
}

// s_γ(λ) = λ - ⟨γ, λ⟩ γ^∨.
WeylElement reflection(const RootSystem& rs, const Root& root) {
  const int n = rs.rank();
  std::vector<int> m(static_cast<std::size_t>(n * n), 0);
  for (int j = 1; j <= n; ++j) {
    const int pair = rs.root_pairing(root.root_coords, CorootVector::simple(n, j));
    for (int r = 0; r < n; ++r) {
      m[(j - 1) * n + r] = (r == j - 1 ? 1 : 0) - pair * root.coroot.coords()[r];
    }
  }
  return WeylElement::from_matrix(rs, std::move(m));
}

WeylElement reflection(const RootSystem& rs, const std::vector<int>& root_coords) {
  const auto k = rs.find_positive_root(root_coords);
  if (k < 0) throw PreconditionError("not a positive root of " + rs.name());
  return reflection(rs, rs.positive_roots()[static_cast<std::size_t>(k)]);
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t ceiling) {
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::vector<WeylElement> out;
  std::deque<WeylElement> queue;
  WeylElement e = identity(rs);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      WeylElement next = right_multiply(rs, w, i);
      if (seen.insert(next).second) {
        if (seen.size() > ceiling) {
          throw ConfigError("Weyl group of " + rs.name() + " exceeds the enumeration ceiling of " +
                            std::to_string(ceiling));
        }
        queue.push_back(std::move(next));
      }
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_type_a(const RootSystem& rs) {
  if (rs.lie_type() != LieType::A) throw PreconditionError("one-line notation requires type A");
}

}  // namespace

// Column j holds w(α_j^∨) = e_{w(j)} - e_{w(j+1)}.
std::vector<int> one_line(const RootSystem& rs, const WeylElement& w) {
  require_type_a(rs);
  const int n = rs.rank();
  auto e_coords = [&](int col) {
    std::vector<int> x(n + 1, 0);
    for (int r = 0; r < n; ++r) {
      x[r] += w.entry(r, col);
      x[r + 1] -= w.entry(r, col);
    }
    return x;
  };
  std::vector<int> perm(n + 1, 0);
  for (int col = 0; col < n; ++col) {
    const std::vector<int> x = e_coords(col);
    for (int p = 0; p <= n; ++p) {
      if (x[p] == 1 && col == 0) perm[0] = p + 1;
      if (x[p] == -1) perm[col + 1] = p + 1;
    }
  }
  return perm;
}

WeylElement from_one_line(const RootSystem& rs, std::span<const int> perm) {
  require_type_a(rs);
  const int n = rs.rank();
  if (static_cast<int>(perm.size()) != n + 1) {
    throw PreconditionError("one-line notation needs " + std::to_string(n + 1) + " entries");
  }
  std::vector<int> t(perm.begin(), perm.end());
  std::vector<int> sorted = t;
  std::sort(sorted.begin(), sorted.end());
  for (int p = 0; p <= n; ++p) {
    if (sorted[p] != p + 1) throw PreconditionError("not a permutation of 1.." + std::to_string(n + 1));
  }
  // Sorting t by adjacent swaps t·s_{i1}·s_{i2}⋯ = id gives w = ⋯s_{i2}s_{i1}.
  std::vector<int> word;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (int p = 0; p < n; ++p) {
      if (t[p] > t[p + 1]) {
        std::swap(t[p], t[p + 1]);
        word.push_back(p + 1);
        swapped = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return from_word(rs, word);
}

std::size_t inversion_count(std::span<const int> perm) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) ++count;
    }
  }
  return count;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, char separator) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw PreconditionError("malformed integer '" + token + "'");
    }
    if (used != token.size()) throw PreconditionError("malformed integer '" + token + "'");
    out.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == separator || ch == ' ' || ch == '\t') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return out;
}

}  // namespace

WeylElement parse_element(const RootSystem& rs, std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return identity(rs);
  auto last = text.find_last_not_of(" \t");
  std::string_view trimmed = text.substr(first, last - first + 1);
  if (trimmed == "id" || trimmed == "e") return identity(rs);
  if (trimmed.front() == '[') {
    if (trimmed.back() != ']') throw PreconditionError("unterminated one-line notation '" + std::string(text) + "'");
    const std::vector<int> perm = parse_int_list(trimmed.substr(1, trimmed.size() - 2), ',');
    return from_one_line(rs, perm);
  }
  if (trimmed.find(',') != std::string_view::npos) {
    throw PreconditionError("element words are space separated: '" + std::string(text) + "'");
  }
  const std::vector<int> word = parse_int_list(trimmed, ' ');
  for (int i : word) rs.check_simple_index(i);
  return from_word(rs, word);
}

std::string format_word(std::span<const int> word) {
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ' ';
    os << word[k];
  }
  return os.str();
}

std::string format_element(const RootSystem& rs, const WeylElement& w) {
  return format_word(canonical_word(rs, w));
}

}  // namespace qschubert
