#include "rankone/weights.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace rankone {

// ---------------------------------------------------------------- Weight

Weight Weight::unit(std::size_t dim, std::size_t i) {
  Weight w = zero(dim);
  w[i] = 1;
  return w;
}

Weight Weight::parse(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unbalanced weight literal");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<Rational> coords;
  bool all_blank = std::all_of(text.begin(), text.end(), is_space);
  if (all_blank) return Weight(std::move(coords));
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    coords.push_back(Rational::parse(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(coords));
}

bool Weight::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

Weight& Weight::operator+=(const Weight& rhs) {
  if (rhs.size() != size()) throw DomainError("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  if (rhs.size() != size()) throw DomainError("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (auto& x : w.coords_) x = -x;
  return w;
}

std::string Weight::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

Rational inner(const Weight& x, const Weight& y) {
  if (x.size() != y.size()) throw DomainError("inner product of weights from different systems");
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Weight pr(const Weight& v) {
  if (v.size() == 0) return v;
  Rational mean;
  for (const auto& x : v) mean += x;
  mean /= Rational(static_cast<std::int64_t>(v.size()));
  Weight out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= mean;
  return out;
}

std::size_t LatticeVectorHash::operator()(const LatticeVector& v) const noexcept {
  std::size_t h = v.size();
  for (auto x : v) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------- RootSystem

namespace {

std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight eps_combo(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  Weight w = Weight::zero(dim);
  for (const auto& [i, c] : terms) w[i] += c;
  return w;
}

}  // namespace

struct RootSystem::Data {
  std::string name;
  Family family = Family::A;
  int rank = 0;
  Role role = Role::G;
  LatticeKind lattice = LatticeKind::Integer;
  std::size_t dim = 0;
  std::int64_t scale = 2;
  bool has_center = false;
  std::vector<Weight> positive;
  std::vector<Weight> simple;
  Weight rho;
  std::vector<Weight> fundamental;
  std::vector<LatticeVector> positive_lattice;
  std::vector<LatticeVector> simple_lattice;
  std::vector<std::int64_t> simple_norm;
  LatticeVector rho_lattice;
};

namespace {

std::vector<Weight> invert_cartan(const std::vector<Weight>& simple) {
  const std::size_t r = simple.size();
  // cartan[j][k] = 2 <a_j, a_k> / <a_k, a_k>
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(2 * r));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < r; ++k) m[j][k] = Rational(2) * inner(simple[j], simple[k]) / inner(simple[k], simple[k]);
    m[j][r + j] = 1;
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    Rational inv = Rational(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col];
      for (std::size_t c = 0; c < 2 * r; ++c) m[row][c] -= f * m[col][c];
    }
  }
  // omega_i = sum_j (A^{-1})_{ij} alpha_j
  std::vector<Weight> omega;
  for (std::size_t i = 0; i < r; ++i) {
    Weight w = Weight::zero(simple[0].size());
    for (std::size_t j = 0; j < r; ++j) w += m[i][r + j] * simple[j];
    omega.push_back(std::move(w));
  }
  return omega;
}

}  // namespace

namespace {

struct Builder {
  std::size_t dim;
  std::vector<Weight> positive;
  std::vector<Weight> simple;

  void add(std::initializer_list<std::pair<std::size_t, Rational>> terms) { positive.push_back(eps_combo(dim, terms)); }
  void add_simple(std::initializer_list<std::pair<std::size_t, Rational>> terms) { simple.push_back(eps_combo(dim, terms)); }

  // e_i - e_j for i < j < upto
  void type_a(std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      for (std::size_t j = i + 1; j < upto; ++j) add({{i, 1}, {j, -1}});
    for (std::size_t i = 0; i + 1 < upto; ++i) add_simple({{i, 1}, {i + 1, -1}});
  }
  void plus_pairs(std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      for (std::size_t j = i + 1; j < upto; ++j) add({{i, 1}, {j, 1}});
  }
};

}  // namespace

RootSystem RootSystem::classical(Family family, int rank, Role role) {
  auto d = std::make_shared<Data>();
  d->family = family;
  d->rank = rank;
  d->role = role;
  const auto r = static_cast<std::size_t>(rank);
  switch (family) {
    case Family::A: {
      if (rank < 1) throw DomainError("A_n needs n >= 1");
      Builder b{r + 1, {}, {}};
      b.type_a(r + 1);
      d->name = "A" + std::to_string(rank);
      d->dim = r + 1;
      d->lattice = LatticeKind::SumZero;
      d->positive = std::move(b.positive);
      d->simple = std::move(b.simple);
      break;
    }
    case Family::B:
    case Family::C: {
      if (rank < 1) throw DomainError("B_n and C_n need n >= 1");
      Builder b{r, {}, {}};
      b.type_a(r);
      b.plus_pairs(r);
      Rational c = family == Family::B ? 1 : 2;
      for (std::size_t i = 0; i < r; ++i) b.add({{i, c}});
      b.add_simple({{r - 1, c}});
      d->name = std::string(family == Family::B ? "B" : "C") + std::to_string(rank);
      d->dim = r;
      d->positive = std::move(b.positive);
      d->simple = std::move(b.simple);
      break;
    }
    case Family::D: {
      if (rank < 2) throw DomainError("D_n needs n >= 2");
      Builder b{r, {}, {}};
      b.type_a(r);
      b.plus_pairs(r);
      b.add_simple({{r - 2, 1}, {r - 1, 1}});
      d->name = "D" + std::to_string(rank);
      d->dim = r;
      d->positive = std::move(b.positive);
      d->simple = std::move(b.simple);
      break;
    }
    case Family::F4:
      if (rank != 4) throw DomainError("F4 has rank 4");
      return f4();
  }
  return build(std::move(d));
}

RootSystem RootSystem::f4() {
  auto d = std::make_shared<Data>();
  d->name = "F4";
  d->family = Family::F4;
  d->rank = 4;
  d->dim = 4;
  d->lattice = LatticeKind::IntegerOrHalf;
  Builder b{4, {}, {}};
  b.type_a(4);
  b.plus_pairs(4);
  for (std::size_t i = 0; i < 4; ++i) b.add({{i, 1}});
  const Rational h(1, 2);
  for (int mask = 0; mask < 8; ++mask) {
    Weight w{h, (mask & 1) ? -h : h, (mask & 2) ? -h : h, (mask & 4) ? -h : h};
    b.positive.push_back(w);
  }
  b.simple.clear();
  b.add_simple({{1, 1}, {2, -1}});
  b.add_simple({{2, 1}, {3, -1}});
  b.add_simple({{3, 1}});
  b.add_simple({{0, h}, {1, -h}, {2, -h}, {3, -h}});
  d->positive = std::move(b.positive);
  d->simple = std::move(b.simple);
  return build(std::move(d));
}

RootSystem RootSystem::spin9() {
  auto d = std::make_shared<Data>();
  d->name = "Spin9";
  d->family = Family::B;
  d->rank = 4;
  d->role = Role::K;
  d->dim = 4;
  d->lattice = LatticeKind::IntegerOrHalf;
  Builder b{4, {}, {}};
  b.type_a(4);
  b.plus_pairs(4);
  for (std::size_t i = 0; i < 4; ++i) b.add({{i, 1}});
  b.add_simple({{3, 1}});
  d->positive = std::move(b.positive);
  d->simple = std::move(b.simple);
  return build(std::move(d));
}

RootSystem RootSystem::su_isotropy(int n) {
  if (n < 1) throw DomainError("S(U(n) x U(1)) needs n >= 1");
  auto d = std::make_shared<Data>();
  const auto r = static_cast<std::size_t>(n);
  d->name = "S(U" + std::to_string(n) + "xU1)";
  d->family = Family::A;
  d->rank = n;
  d->role = Role::K;
  d->dim = r + 1;
  d->lattice = LatticeKind::SumZero;
  d->has_center = true;
  Builder b{r + 1, {}, {}};
  b.type_a(r);
  d->positive = std::move(b.positive);
  d->simple = std::move(b.simple);
  return build(std::move(d));
}

RootSystem RootSystem::sp_isotropy(int n) {
  if (n < 1) throw DomainError("Sp(n) x Sp(1) needs n >= 1");
  auto d = std::make_shared<Data>();
  const auto r = static_cast<std::size_t>(n);
  d->name = "Sp" + std::to_string(n) + "xSp1";
  d->family = Family::C;
  d->rank = n + 1;
  d->role = Role::K;
  d->dim = r + 1;
  Builder b{r + 1, {}, {}};
  b.type_a(r);
  b.plus_pairs(r);
  for (std::size_t i = 0; i < r; ++i) b.add({{i, 2}});
  b.add({{r, 2}});
  b.add_simple({{r - 1, 2}});
  b.add_simple({{r, 2}});
  d->positive = std::move(b.positive);
  d->simple = std::move(b.simple);
  return build(std::move(d));
}

RootSystem RootSystem::parse(std::string_view name) {
  if (name == "F4") return f4();
  if (name.size() < 2) throw DomainError("unknown root system '" + std::string(name) + "'");
  Family f;
  switch (name[0]) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    default: throw DomainError("unknown root system '" + std::string(name) + "'");
  }
  int rank = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') throw DomainError("unknown root system '" + std::string(name) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 64) throw DomainError("rank too large in '" + std::string(name) + "'");
  }
  return classical(f, rank);
}

RootSystem RootSystem::build(std::shared_ptr<Data> d) {
  d->scale = d->lattice == LatticeKind::SumZero ? 2 * static_cast<std::int64_t>(d->dim) : 2;
  d->rho = Weight::zero(d->dim);
  for (const auto& a : d->positive) d->rho += a;
  d->rho *= Rational(1, 2);
  auto lat = [&](const Weight& w) {
    LatticeVector v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = (w[i] * d->scale).to_integer();
    return v;
  };
  for (const auto& a : d->positive) d->positive_lattice.push_back(lat(a));
  for (const auto& a : d->simple) {
    d->simple_lattice.push_back(lat(a));
    d->simple_norm.push_back(dot(d->simple_lattice.back(), d->simple_lattice.back()));
  }
  d->rho_lattice = lat(d->rho);
  if (!d->has_center && !d->simple.empty()) d->fundamental = invert_cartan(d->simple);
  return RootSystem(std::move(d));
}

const std::string& RootSystem::name() const { return d_->name; }
Family RootSystem::family() const { return d_->family; }
int RootSystem::rank() const { return d_->rank; }
Role RootSystem::role() const { return d_->role; }
LatticeKind RootSystem::lattice() const { return d_->lattice; }
std::size_t RootSystem::dim() const { return d_->dim; }
std::int64_t RootSystem::scale() const { return d_->scale; }
const std::vector<Weight>& RootSystem::positive_roots() const { return d_->positive; }
const std::vector<Weight>& RootSystem::simple_roots() const { return d_->simple; }
const Weight& RootSystem::rho() const { return d_->rho; }
const std::vector<LatticeVector>& RootSystem::positive_lattice() const { return d_->positive_lattice; }
const std::vector<LatticeVector>& RootSystem::simple_lattice() const { return d_->simple_lattice; }
const LatticeVector& RootSystem::rho_lattice() const { return d_->rho_lattice; }

const std::vector<Weight>& RootSystem::fundamental_weights() const {
  if (d_->has_center) throw DomainError(d_->name + " has a center; fundamental weights do not span its weights");
  return d_->fundamental;
}

bool RootSystem::in_lattice(const Weight& w) const {
  if (w.size() != d_->dim) return false;
  switch (d_->lattice) {
    case LatticeKind::Integer:
      return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_integer(); });
    case LatticeKind::IntegerOrHalf:
      for (const auto& x : w) {
        if (!(x * 2).is_integer() || !(x - w[0]).is_integer()) return false;
      }
      return true;
    case LatticeKind::SumZero: {
      Rational s;
      for (const auto& x : w) {
        s += x;
        if (!(x - w[0]).is_integer()) return false;
      }
      return s == 0;
    }
  }
  return false;
}

bool RootSystem::is_dominant(const Weight& w) const {
  if (!in_lattice(w)) return false;
  for (const auto& a : d_->simple) {
    if (inner(w, a) < 0) return false;
  }
  return true;
}

void RootSystem::require_dominant(const Weight& w, std::string_view what) const {
  if (w.size() != d_->dim) {
    throw DomainError(std::string(what) + " " + w.str() + " has " + std::to_string(w.size()) + " coordinates, " +
                      d_->name + " needs " + std::to_string(d_->dim));
  }
  if (!is_dominant(w)) throw DomainError(std::string(what) + " " + w.str() + " is not dominant integral for " + d_->name);
}

Weight RootSystem::canonical(const Weight& w) const {
  if (w.size() != d_->dim) {
    throw DomainError("weight " + w.str() + " has " + std::to_string(w.size()) + " coordinates, " + d_->name +
                      " needs " + std::to_string(d_->dim));
  }
  return d_->lattice == LatticeKind::SumZero ? pr(w) : w;
}

LatticeVector RootSystem::to_lattice(const Weight& w) const {
  if (w.size() != d_->dim) throw DomainError("weight " + w.str() + " does not belong to " + d_->name);
  LatticeVector v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational x = w[i] * d_->scale;
    if (!x.is_integer()) throw DomainError("weight " + w.str() + " is off the lattice of " + d_->name);
    v[i] = x.num();
  }
  return v;
}

Weight RootSystem::from_lattice(const LatticeVector& v) const {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (auto x : v) c.emplace_back(x, d_->scale);
  return Weight(std::move(c));
}

bool RootSystem::lattice_dominant(const LatticeVector& v) const {
  for (const auto& a : d_->simple_lattice) {
    if (dot(v, a) < 0) return false;
  }
  return true;
}

void RootSystem::reflect(LatticeVector& v, std::size_t simple_index) const {
  const auto& a = d_->simple_lattice[simple_index];
  std::int64_t c = 2 * dot(v, a) / d_->simple_norm[simple_index];
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * a[i];
}

LatticeVector RootSystem::dominant_conjugate(LatticeVector v) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < d_->simple_lattice.size(); ++i) {
      if (dot(v, d_->simple_lattice[i]) < 0) {
        reflect(v, i);
        moved = true;
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------- free functions

Weight rho(const RootSystem& system) { return system.rho(); }

Weight dual_weight(const RootSystem& system, const Weight& lambda) {
  system.require_dominant(lambda, "highest weight");
  switch (system.family()) {
    case Family::D:
      if (system.rank() % 2 == 1) {
        Weight w = lambda;
        w[w.size() - 1] = -w[w.size() - 1];
        return w;
      }
      return lambda;
    case Family::A: {
      if (system.role() != Role::G) throw DomainError("dual weights are only provided for simple systems");
      std::vector<Rational> c(lambda.coords().rbegin(), lambda.coords().rend());
      for (auto& x : c) x = -x;
      return pr(Weight(std::move(c)));
    }
    default:
      return lambda;
  }
}

namespace {

Rational casimir_value(const RootSystem& system, const Weight& w) {
  Weight t = w;
  t += system.rho();
  t += system.rho();
  return inner(w, t);
}

void enumerate_rec(const RootSystem& system, const std::vector<Weight>& omega, std::size_t i, const Weight& current,
                   const Rational& bound, std::vector<Weight>& out) {
  if (i == omega.size()) {
    if (system.in_lattice(current)) out.push_back(current);
    return;
  }
  Weight w = current;
  while (casimir_value(system, w) <= bound) {
    enumerate_rec(system, omega, i + 1, w, bound, out);
    w += omega[i];
  }
}

}  // namespace

std::vector<Weight> enumerate_dominant(const RootSystem& system, const Rational& casimir_bound) {
  if (casimir_bound < 0) throw DomainError("negative Casimir bound");
  const auto& omega = system.fundamental_weights();
  std::vector<Weight> out;
  enumerate_rec(system, omega, 0, Weight::zero(system.dim()), casimir_bound, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t weyl_dim(const RootSystem& system, const Weight& lambda) {
  system.require_dominant(lambda, "highest weight");
  using boost::multiprecision::cpp_int;
  LatticeVector l = system.to_lattice(lambda);
  const LatticeVector& r = system.rho_lattice();
  for (std::size_t i = 0; i < l.size(); ++i) l[i] += r[i];
  cpp_int num = 1, den = 1;
  for (const auto& a : system.positive_lattice()) {
    num *= dot(l, a);
    den *= dot(r, a);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
  cpp_int q = num / den;
  if (q > std::numeric_limits<std::uint64_t>::max()) throw ArithmeticOverflow("dimension exceeds 64 bits");
  return static_cast<std::uint64_t>(q);
}

// ---------------------------------------------------------------- Freudenthal

namespace {

std::shared_ptr<const DominantCharacter> freudenthal(const RootSystem& system, const LatticeVector& top) {
  const auto& pos = system.positive_lattice();
  const auto& r = system.rho_lattice();
  auto shifted_norm = [&](const LatticeVector& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += (v[i] + r[i]) * (v[i] + r[i]);
    return s;
  };

  // Dominant weights below top: close under subtracting positive roots.
  std::unordered_set<LatticeVector, LatticeVectorHash> seen{top};
  std::vector<LatticeVector> order{top};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& a : pos) {
      LatticeVector v = order[head];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= a[i];
      if (system.lattice_dominant(v) && seen.insert(v).second) order.push_back(std::move(v));
    }
  }
  std::vector<std::pair<std::int64_t, LatticeVector>> keyed;
  keyed.reserve(order.size());
  for (auto& v : order) keyed.emplace_back(shifted_norm(v), std::move(v));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second > y.second;
  });

  const std::int64_t top_norm = shifted_norm(top);
  std::unordered_map<LatticeVector, std::int64_t, LatticeVectorHash> mult;
  auto out = std::make_shared<DominantCharacter>();
  LatticeVector w(top.size());
  for (const auto& [norm, mu] : keyed) {
    std::int64_t m = 1;
    if (mu != top) {
      std::int64_t num = 0;
      for (const auto& a : pos) {
        w = mu;
        for (int k = 1;; ++k) {
          for (std::size_t i = 0; i < w.size(); ++i) w[i] += a[i];
          auto it = mult.find(system.dominant_conjugate(w));
          if (it == mult.end()) break;
          num += 2 * it->second * dot(w, a);
        }
      }
      std::int64_t den = top_norm - norm;
      if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
      m = num / den;
    }
    mult.emplace(mu, m);
    out->entries.emplace_back(mu, m);
  }
  out->dimension = weyl_dim(system, system.from_lattice(top));
  return out;
}

struct CharacterCache {
  std::shared_mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<const DominantCharacter>> table;
};

CharacterCache& character_cache() {
  static CharacterCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const DominantCharacter> dominant_character(const RootSystem& system, const Weight& lambda) {
  system.require_dominant(lambda, "highest weight");
  LatticeVector top = system.to_lattice(lambda);
  std::string key = system.name();
  for (auto x : top) key += "," + std::to_string(x);
  auto& cache = character_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  auto result = freudenthal(system, top);
  std::unique_lock lock(cache.mutex);
  return cache.table.emplace(std::move(key), std::move(result)).first->second;
}

void clear_character_cache() {
  auto& cache = character_cache();
  std::unique_lock lock(cache.mutex);
  cache.table.clear();
}

std::vector<std::pair<LatticeVector, std::int64_t>> lattice_weights(const RootSystem& system, const Weight& lambda) {
  auto character = dominant_character(system, lambda);
  std::vector<std::pair<LatticeVector, std::int64_t>> out;
  std::unordered_set<LatticeVector, LatticeVectorHash> orbit;
  std::vector<LatticeVector> frontier;
  for (const auto& [mu, m] : character->entries) {
    orbit.clear();
    frontier.assign(1, mu);
    orbit.insert(mu);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      for (std::size_t i = 0; i < system.simple_lattice().size(); ++i) {
        LatticeVector v = frontier[head];
        system.reflect(v, i);
        if (orbit.insert(v).second) frontier.push_back(std::move(v));
      }
    }
    for (auto& v : frontier) out.emplace_back(std::move(v), m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Weight, std::int64_t> weight_multiplicities(const RootSystem& system, const Weight& lambda) {
  std::map<Weight, std::int64_t> out;
  for (const auto& [v, m] : lattice_weights(system, lambda)) out.emplace(system.from_lattice(v), m);
  return out;
}

Weight f4_omega(int i) {
  const Rational h(1, 2);
  switch (i) {
    case 1: return Weight{1, 0, 0, 0};
    case 2: return Weight{Rational(3, 2), h, h, h};
    case 3: return Weight{2, 1, 1, 0};
    case 4: return Weight{1, 1, 0, 0};
    default: throw DomainError("F4 fundamental weights are omega_1..omega_4");
  }
}

Weight spin9_upsilon(int i) {
  const Rational h(1, 2);
  switch (i) {
    case 1: return Weight{1, 0, 0, 0};
    case 2: return Weight{1, 1, 0, 0};
    case 3: return Weight{1, 1, 1, 0};
    case 4: return Weight{h, h, h, h};
    default: throw DomainError("Spin(9) fundamental weights are upsilon_1..upsilon_4");
  }
}

}  // namespace rankone
