#include "qschubert/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "qschubert/error.hpp"

namespace qschubert {

LieType parse_lie_type(std::string_view text) {
  if (text.size() == 1) {
    switch (text[0]) {
      case 'A': case 'a': return LieType::A;
      case 'B': case 'b': return LieType::B;
      case 'C': case 'c': return LieType::C;
      case 'D': case 'd': return LieType::D;
      case 'E': case 'e': return LieType::E;
      case 'F': case 'f': return LieType::F;
      case 'G': case 'g': return LieType::G;
      default: break;
    }
  }
  throw ConfigError("unknown Lie type '" + std::string(text) + "'");
}

CorootVector CorootVector::simple(int rank, int i) {
  if (i < 1 || i > rank) throw PreconditionError("simple coroot index " + std::to_string(i) + " out of range");
  CorootVector v = zero(rank);
  v.coords_[i - 1] = 1;
  return v;
}

bool CorootVector::is_effective() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int a) { return a >= 0; });
}

bool CorootVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int a) { return a == 0; });
}

int CorootVector::height() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

CorootVector& CorootVector::operator+=(const CorootVector& other) {
  if (other.rank() != rank()) throw PreconditionError("coroot rank mismatch");
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] += other.coords_[j];
  return *this;
}

CorootVector& CorootVector::operator-=(const CorootVector& other) {
  if (other.rank() != rank()) throw PreconditionError("coroot rank mismatch");
  for (std::size_t j = 0; j < coords_.size(); ++j) coords_[j] -= other.coords_[j];
  return *this;
}

std::size_t expected_positive_root_count(LieType type, int n) {
  const auto un = static_cast<std::size_t>(n);
  switch (type) {
    case LieType::A: return un * (un + 1) / 2;
    case LieType::B:
    case LieType::C: return un * un;
    case LieType::D: return un * (un - 1);
    case LieType::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case LieType::F: return 24;
    case LieType::G: return 6;
  }
  return 0;
}

namespace {

void validate_type_rank(LieType type, int n) {
  bool ok = false;
  switch (type) {
    case LieType::A: ok = n >= 1; break;
    case LieType::B:
    case LieType::C: ok = n >= 2; break;
    case LieType::D: ok = n >= 4; break;
    case LieType::E: ok = n >= 6 && n <= 8; break;
    case LieType::F: ok = n == 4; break;
    case LieType::G: ok = n == 2; break;
  }
  if (!ok) {
    throw ConfigError(std::string("invalid finite type ") + to_char(type) + std::to_string(n));
  }
}

// Entries are (i, j, ⟨α_i, α_j^∨⟩) for i ≠ j, 1-based.
std::vector<int> cartan_matrix(LieType type, int n) {
  std::vector<int> c(static_cast<std::size_t>(n * n), 0);
  auto set = [&](int i, int j, int value) { c[(i - 1) * n + (j - 1)] = value; };
  auto bond = [&](int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  for (int i = 1; i <= n; ++i) set(i, i, 2);

  switch (type) {
    case LieType::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case LieType::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      set(n - 1, n, -2);  // α_n short
      break;
    case LieType::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      set(n, n - 1, -2);  // α_n long
      break;
    case LieType::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case LieType::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case LieType::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      set(2, 3, -2);
      break;
    case LieType::G:
      bond(1, 2);
      set(2, 1, -3);
      break;
  }
  return c;
}

}  // namespace

RootSystem::RootSystem(LieType type, int rank, std::vector<int> cartan)
    : type_(type), rank_(rank), cartan_(std::move(cartan)) {}

RootSystem RootSystem::build(LieType type, int rank) {
  validate_type_rank(type, rank);
  RootSystem rs(type, rank, cartan_matrix(type, rank));
  rs.generate_roots();
  if (rs.positive_roots_.size() != expected_positive_root_count(type, rank)) {
    throw InvariantViolation("positive root count mismatch for " + rs.name());
  }
  return rs;
}

std::string RootSystem::name() const { return std::string(1, to_char(type_)) + std::to_string(rank_); }

// Closure of the simple roots under simple reflections, keeping only the
// positive images; roots and coroots are reflected in parallel.
void RootSystem::generate_roots() {
  const int n = rank_;
  std::set<std::vector<int>> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= n; ++i) {
    Root r;
    r.root_coords.assign(n, 0);
    r.root_coords[i - 1] = 1;
    r.coroot = CorootVector::simple(n, i);
    seen.insert(r.root_coords);
    queue.push_back(std::move(r));
  }
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      int beta_on_coroot = 0;  // ⟨β, α_i^∨⟩
      for (int j = 1; j <= n; ++j) beta_on_coroot += r.root_coords[j - 1] * cartan(j, i);
      const int alpha_on_coroot = pairing(i, r.coroot);  // ⟨α_i, β^∨⟩
      Root image = r;
      image.root_coords[i - 1] -= beta_on_coroot;
      std::vector<int> cc = r.coroot.coords();
      cc[i - 1] -= alpha_on_coroot;
      image.coroot = CorootVector(std::move(cc));
      if (image.root_coords[i - 1] < 0) continue;  // s_i(α_i) = -α_i
      if (seen.insert(image.root_coords).second) queue.push_back(std::move(image));
    }
    r.two_rho_pairing = two_rho(r.coroot);
    positive_roots_.push_back(std::move(r));
  }
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const Root& a, const Root& b) {
    const int ha = std::accumulate(a.root_coords.begin(), a.root_coords.end(), 0);
    const int hb = std::accumulate(b.root_coords.begin(), b.root_coords.end(), 0);
    if (ha != hb) return ha < hb;
    return a.root_coords > b.root_coords;
  });
}

int RootSystem::pairing(int i, const CorootVector& lambda) const {
  check_simple_index(i);
  check_rank(lambda);
  int sum = 0;
  for (int j = 1; j <= rank_; ++j) sum += cartan(i, j) * lambda.coord(j);
  return sum;
}

int RootSystem::root_pairing(const std::vector<int>& root_coords, const CorootVector& lambda) const {
  int sum = 0;
  for (int k = 1; k <= rank_; ++k) {
    if (root_coords[k - 1] != 0) sum += root_coords[k - 1] * pairing(k, lambda);
  }
  return sum;
}

int RootSystem::two_rho(const CorootVector& lambda) const {
  check_rank(lambda);
  return 2 * lambda.height();
}

std::ptrdiff_t RootSystem::find_positive_root(const std::vector<int>& root_coords) const {
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    if (positive_roots_[k].root_coords == root_coords) return static_cast<std::ptrdiff_t>(k);
  }
  return -1;
}

std::ptrdiff_t RootSystem::simple_root_index(int i) const {
  check_simple_index(i);
  std::vector<int> coords(rank_, 0);
  coords[i - 1] = 1;
  return find_positive_root(coords);
}

void RootSystem::check_simple_index(int i) const {
  if (i < 1 || i > rank_) {
    throw PreconditionError("simple root index " + std::to_string(i) + " out of range 1.." + std::to_string(rank_));
  }
}

void RootSystem::check_rank(const CorootVector& lambda) const {
  if (lambda.rank() != rank_) {
    throw PreconditionError("coroot vector has " + std::to_string(lambda.rank()) + " coordinates, rank is " +
                            std::to_string(rank_));
  }
}

}  // namespace qschubert
