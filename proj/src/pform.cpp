#include "rankone/pform.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace rankone {

namespace {

WeightMultiset collect(const std::map<Weight, std::int64_t>& counts) {
  WeightMultiset out;
  for (const auto& [w, m] : counts) {
    if (m < 0) throw std::logic_error("negative constituent multiplicity at " + w.str());
    if (m > 0) out.emplace_back(w, m);
  }
  return out;
}

Weight ones(std::size_t dim, std::size_t count) {
  Weight w = Weight::zero(dim);
  for (std::size_t i = 0; i < count; ++i) w[i] = 1;
  return w;
}

WeightMultiset sphere_table(const SymmetricPair& pair, int p) {
  const int n = pair.n();
  const int dim = pair.manifold_dim();
  const int q = std::min(p, dim - p);
  const std::size_t kdim = pair.k().dim();
  if (pair.kind() == PairKind::EvenSphere && q == n) {
    Weight plus = ones(kdim, kdim);
    Weight minus = plus;
    minus[kdim - 1] = -1;
    return collect({{plus, 1}, {minus, 1}});
  }
  return {{ones(kdim, static_cast<std::size_t>(q)), 1}};
}

// tau_{a,b,c}: first a coordinates 1, the b before the last -1, the last c.
Weight su_constituent(int n, int a, int b, int c) {
  Weight w = Weight::zero(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < a; ++i) w[static_cast<std::size_t>(i)] += 1;
  for (int i = n - b; i < n; ++i) w[static_cast<std::size_t>(i)] -= 1;
  w[static_cast<std::size_t>(n)] += c;
  return pr(w);
}

WeightMultiset su_table(const SymmetricPair& pair, int p) {
  const int n = pair.n();
  std::map<Weight, std::int64_t> counts;
  for (int l = 0; l <= std::min(p, n); ++l) {
    const int m = p - l;
    if (m > n) continue;
    for (int j = 0; j <= std::min(l, m); ++j) {
      if (j < l + m - n) continue;  // Lambda^l V (x) Lambda^m V* for V = C^n
      ++counts[su_constituent(n, l - j, m - j, m - l)];
    }
  }
  return collect(counts);
}

struct SpEntry {
  std::vector<std::int64_t> sp_part;
  std::int64_t sp1;
};

const std::vector<std::vector<SpEntry>>& sp_rows() {
  static const std::vector<std::vector<SpEntry>> rows = {
      {{{}, 0}},
      {{{1}, 1}},
      {{{2}, 0}, {{}, 2}, {{1, 1}, 2}},
      {{{1}, 1}, {{2, 1}, 1}, {{1}, 3}, {{1, 1, 1}, 3}},
      {{{}, 0}, {{1, 1}, 0}, {{2, 2}, 0}, {{1, 1}, 2}, {{2}, 2}, {{2, 1, 1}, 2}, {{}, 4}, {{1, 1}, 4},
       {{1, 1, 1, 1}, 4}},
  };
  return rows;
}

WeightMultiset sp_table(const SymmetricPair& pair, int q) {
  const int n = pair.n();
  std::map<Weight, std::int64_t> counts;
  for (const auto& entry : sp_rows()[static_cast<std::size_t>(q)]) {
    auto [sign, part] = sp_modification(entry.sp_part, n);
    if (sign == 0) continue;
    Weight w = Weight::zero(static_cast<std::size_t>(n + 1));
    for (std::size_t i = 0; i < part.size(); ++i) w[i] = part[i];
    w[static_cast<std::size_t>(n)] = entry.sp1;
    counts[w] += sign;
  }
  return collect(counts);
}

// Coefficients on upsilon_1..upsilon_4.
using Upsilon = std::array<int, 4>;

const std::vector<std::vector<Upsilon>>& f4_rows() {
  static const std::vector<std::vector<Upsilon>> rows = {
      {{0, 0, 0, 0}},
      {{0, 0, 0, 1}},
      {{0, 1, 0, 0}, {0, 0, 1, 0}},
      {{0, 1, 0, 1}, {1, 0, 0, 1}},
      {{0, 0, 0, 2}, {2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 2}, {0, 2, 0, 0}},
      {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 0, 3}, {2, 0, 0, 1}, {1, 1, 0, 1}},
      {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 2}, {0, 1, 0, 2}, {2, 1, 0, 0},
       {2, 0, 1, 0}},
      {{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {2, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1},
       {3, 0, 0, 1}},
      {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}, {2, 0, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 2},
       {0, 2, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 0}, {3, 0, 0, 0}, {2, 0, 1, 0}, {2, 0, 0, 2}, {4, 0, 0, 0}},
  };
  return rows;
}

WeightMultiset f4_table(int q) {
  std::map<Weight, std::int64_t> counts;
  for (const auto& c : f4_rows()[static_cast<std::size_t>(q)]) {
    Weight w = Weight::zero(4);
    for (int i = 0; i < 4; ++i) w += Rational(c[static_cast<std::size_t>(i)]) * spin9_upsilon(i + 1);
    ++counts[w];
  }
  return collect(counts);
}

void require_degree(const SymmetricPair& pair, int p) {
  if (p < 0 || p > pair.manifold_dim()) {
    throw DomainError("p must lie in [0, " + std::to_string(pair.manifold_dim()) + "] for " + pair.name());
  }
}

bool on_string(const Weight& x, const Weight& base, const Weight& direction) {
  // x = base + k direction for some integer k >= 0
  Weight diff = x - base;
  std::optional<Rational> k;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (direction[i] == 0) {
      if (diff[i] != 0) return false;
      continue;
    }
    Rational r = diff[i] / direction[i];
    if (k && *k != r) return false;
    k = r;
  }
  return k && k->is_integer() && *k >= 0;
}

}  // namespace

std::string to_string(PFormSource source) {
  return source == PFormSource::Table ? "table" : "computed";
}

std::uint64_t PFormDecomposition::dimension() const {
  std::uint64_t total = 0;
  for (const auto& [w, m] : constituents) total += static_cast<std::uint64_t>(m) * weyl_dim(pair.k(), w);
  return total;
}

std::vector<Weight> isotropy_weights(const SymmetricPair& pair) {
  std::multiset<Weight> pool;
  for (const Weight& r : pair.g().positive_roots()) {
    pool.insert(pair.restrict_weight(r));
    pool.insert(pair.restrict_weight(-r));
  }
  for (const Weight& r : pair.k().positive_roots()) {
    for (const Weight& x : {r, -r}) {
      auto it = pool.find(x);
      if (it == pool.end()) throw std::logic_error("K root " + x.str() + " missing from restricted G roots");
      pool.erase(it);
    }
  }
  std::vector<Weight> out(pool.begin(), pool.end());
  const auto dim = static_cast<std::size_t>(pair.manifold_dim());
  if (out.size() > dim) throw std::logic_error("isotropy weight count exceeds dim M");
  while (out.size() < dim) out.push_back(Weight::zero(pair.k().dim()));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, std::vector<std::int64_t>> sp_modification(std::vector<std::int64_t> lam, int n) {
  auto trim = [&lam] {
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
  };
  trim();
  int sign = 1;
  while (lam.size() > static_cast<std::size_t>(n)) {
    const auto ell = static_cast<std::int64_t>(lam.size());
    const std::int64_t h = 2 * ell - 2 * n - 2;
    if (h <= 0) return {0, {}};
    // rim walk from the foot of the first column: right along the row, then up
    std::map<std::int64_t, std::int64_t> removed_per_row;
    std::set<std::int64_t> columns;
    std::int64_t i = ell - 1, j = 0;
    for (std::int64_t t = 0; t < h; ++t) {
      if (i < 0) return {0, {}};
      ++removed_per_row[i];
      columns.insert(j);
      if (t + 1 == h) break;
      if (j + 1 < lam[static_cast<std::size_t>(i)]) {
        ++j;
      } else {
        --i;
      }
    }
    // the strip must end at the end of its top row
    const std::int64_t top = removed_per_row.begin()->first;
    if (j + 1 != lam[static_cast<std::size_t>(top)]) return {0, {}};
    for (const auto& [row, count] : removed_per_row) lam[static_cast<std::size_t>(row)] -= count;
    for (std::size_t r = 1; r < lam.size(); ++r) {
      if (lam[r] > lam[r - 1]) return {0, {}};
    }
    if (columns.size() % 2 == 1) sign = -sign;
    trim();
  }
  return {sign, lam};
}

PFormDecomposition tau_p_constituents(const SymmetricPair& pair, int p) {
  require_degree(pair, p);
  const int dim = pair.manifold_dim();
  switch (pair.kind()) {
    case PairKind::OddSphere:
    case PairKind::EvenSphere: return {pair, p, sphere_table(pair, p), PFormSource::Table};
    case PairKind::ComplexProj: return {pair, p, su_table(pair, p), PFormSource::Table};
    case PairKind::QuaternionProj: {
      const int q = p <= 4 ? p : dim - p;
      if (q > 4) return tau_p_generic(pair, p);
      return {pair, p, sp_table(pair, q), PFormSource::Table};
    }
    case PairKind::CayleyPlane: return {pair, p, f4_table(std::min(p, dim - p)), PFormSource::Table};
  }
  throw std::logic_error("unknown pair");
}

PFormDecomposition tau_p_generic(const SymmetricPair& pair, int p) {
  require_degree(pair, p);
  const RootSystem& k = pair.k();
  const auto pp = static_cast<std::size_t>(p);
  std::vector<std::map<LatticeVector, std::int64_t>> power(pp + 1);
  power[0][k.to_lattice(Weight::zero(k.dim()))] = 1;
  std::size_t seen = 0;
  for (const Weight& w : isotropy_weights(pair)) {
    const LatticeVector v = k.to_lattice(w);
    ++seen;
    for (std::size_t j = std::min(pp, seen); j >= 1; --j) {
      for (const auto& [x, c] : power[j - 1]) {
        LatticeVector y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += v[i];
        power[j][y] += c;
      }
    }
  }
  std::map<LatticeVector, std::int64_t> dominant;
  for (const auto& [x, c] : power[pp]) {
    if (k.lattice_dominant(x)) dominant.emplace(x, c);
  }
  return {pair, p, strip_highest_weights(k, std::move(dominant)), PFormSource::Computed};
}

StringSet union_string_set(const SymmetricPair& pair, const std::vector<StringSet>& parts) {
  StringSet out{pair, Weight{}, pair.direction(), {}, true, std::nullopt, {}};
  std::set<Weight> all;
  for (const auto& part : parts) {
    all.insert(part.bases.begin(), part.bases.end());
    out.closed_form = out.closed_form && part.closed_form;
    if (part.certified_bound && (!out.certified_bound || *part.certified_bound < *out.certified_bound)) {
      out.certified_bound = part.certified_bound;
    }
    out.warnings.insert(out.warnings.end(), part.warnings.begin(), part.warnings.end());
  }
  for (const Weight& b : all) {
    const Weight prev = b - out.direction;
    bool covered = std::any_of(all.begin(), all.end(), [&](const Weight& c) {
      return on_string(prev, c, out.direction);
    });
    if (!covered) out.bases.push_back(b);
  }
  return out;
}

PFormConverseReport pform_converse_report(const SymmetricPair& pair, int p, const ConverseOptions& options) {
  PFormDecomposition decomposition = tau_p_constituents(pair, p);
  std::vector<StringSet> parts;
  std::vector<std::pair<Weight, ConverseReport>> per_constituent;
  for (const auto& [mu, mult] : decomposition.constituents) {
    parts.push_back(string_bases(pair, mu, options.search_bound));
    per_constituent.emplace_back(mu, check_converse_hypotheses(parts.back(), options));
  }
  ConverseReport combined = check_converse_hypotheses(union_string_set(pair, parts), options);
  return {std::move(decomposition), std::move(per_constituent), std::move(combined)};
}

}  // namespace rankone
