#include "rankone/branching.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "rankone/laurent.hpp"

namespace rankone {

namespace {

std::int64_t as_int(const Rational& r) { return r.to_integer(); }

bool interlaces_odd_sphere(const Weight& a, const Weight& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (a[i] < b[i] || b[i] < a[i + 1]) return false;
  }
  return b[n - 2] >= a[n - 1].abs();
}

bool interlaces_even_sphere(const Weight& a, const Weight& b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (a[i] < b[i] || b[i] < a[i + 1]) return false;
  }
  return a[n - 1] >= b[n - 1].abs();
}

bool interlaces_su(const Weight& a, const Weight& b) {
  const std::size_t n = a.size() - 1;
  if (!(a[0] - b[0]).is_integer()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i] || b[i] < a[i + 1]) return false;
  }
  return true;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r.to_integer();
}

struct RestrictionCache {
  std::shared_mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<const WeightMultiset>> table;
};

RestrictionCache& restriction_cache() {
  static RestrictionCache cache;
  return cache;
}

struct OrbitCache {
  std::shared_mutex mutex;
  std::unordered_map<std::string, std::shared_ptr<const std::vector<std::pair<Weight, int>>>> table;
};

// {(w rho_K, sign w) : w in W_K}; rho_K is regular, so orbit points and Weyl elements match.
std::shared_ptr<const std::vector<std::pair<Weight, int>>> signed_rho_orbit(const RootSystem& k) {
  static OrbitCache cache;
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(k.name());
    if (it != cache.table.end()) return it->second;
  }
  std::unordered_map<LatticeVector, int, LatticeVectorHash> sign{{k.rho_lattice(), 1}};
  std::vector<LatticeVector> frontier{k.rho_lattice()};
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    for (std::size_t i = 0; i < k.simple_lattice().size(); ++i) {
      LatticeVector v = frontier[head];
      k.reflect(v, i);
      if (sign.emplace(v, -sign[frontier[head]]).second) frontier.push_back(std::move(v));
    }
  }
  auto out = std::make_shared<std::vector<std::pair<Weight, int>>>();
  for (const auto& v : frontier) out->emplace_back(k.from_lattice(v), sign[v]);
  std::unique_lock lock(cache.mutex);
  return cache.table.emplace(k.name(), std::move(out)).first->second;
}

}  // namespace

std::int64_t equal_rank_multiplicity(const SymmetricPair& pair, const Weight& lambda_in, const Weight& mu_in) {
  if (pair.kind() == PairKind::OddSphere) throw DomainError("SO(2n)/SO(2n-1) is not an equal-rank pair");
  const Weight lambda = pair.g_weight(lambda_in);
  const Weight mu = pair.k_weight(mu_in);
  const RootSystem& g = pair.g();
  const RootSystem& k = pair.k();
  auto character = dominant_character(g, lambda);
  std::unordered_map<LatticeVector, std::int64_t, LatticeVectorHash> mult(character->entries.begin(),
                                                                         character->entries.end());
  const Weight shifted = mu + k.rho();
  std::int64_t total = 0;
  for (const auto& [w_rho, sign] : *signed_rho_orbit(k)) {
    Weight nu = shifted - w_rho;
    if (!g.in_lattice(nu)) continue;
    auto it = mult.find(g.dominant_conjugate(g.to_lattice(nu)));
    if (it != mult.end()) total += sign * it->second;
  }
  if (total < 0) throw std::logic_error("negative branching multiplicity");
  return total;
}

std::int64_t tsukamoto_coefficient(const std::vector<std::int64_t>& deltas, std::int64_t b_last, int n) {
  if (static_cast<int>(deltas.size()) != n + 1) throw DomainError("expected n+1 deltas");
  if (b_last < 0) throw DomainError("negative Sp(1) coordinate");
  LaurentPolynomial num = LaurentPolynomial::monomial(1, 0);
  for (auto d : deltas) {
    if (d < 0) throw DomainError("negative delta in the Sp branching series");
    num *= LaurentPolynomial::antisymmetric(d + 1);
  }
  // (x - 1/x)^{-n} = x^{-n} sum_j C(n+j-1, j) x^{-2j}
  const std::int64_t e = b_last + 1;
  std::int64_t total = 0;
  for (std::int64_t j = 0; e + n + 2 * j <= num.max_degree(); ++j) {
    std::int64_t c = n == 0 ? (j == 0 ? 1 : 0) : binomial(n + j - 1, j);
    total += c * num.coefficient(e + n + 2 * j);
  }
  return total;
}

std::optional<std::vector<std::int64_t>> sp_deltas(const Weight& lambda, const Weight& mu) {
  const std::size_t n = lambda.size() - 1;
  std::vector<std::int64_t> a(n + 3, 0), b(n + 2, 0);
  for (std::size_t i = 0; i <= n; ++i) a[i + 1] = as_int(lambda[i]);
  for (std::size_t i = 0; i <= n; ++i) b[i + 1] = as_int(mu[i]);
  for (std::size_t i = 1; i <= n; ++i) {
    if (a[i] < b[i] || b[i] < a[i + 2]) return std::nullopt;
  }
  std::vector<std::int64_t> d(n + 1);
  d[0] = a[1] - std::max(a[2], b[1]);
  for (std::size_t i = 2; i <= n; ++i) d[i - 1] = std::min(a[i], b[i - 1]) - std::max(a[i + 1], b[i]);
  d[n] = std::min(a[n + 1], b[n]);
  for (auto x : d) {
    if (x < 0) return std::nullopt;
  }
  return d;
}

std::int64_t branch_multiplicity(const SymmetricPair& pair, const Weight& lambda_in, const Weight& mu_in) {
  Weight lambda = pair.g_weight(lambda_in);
  Weight mu = pair.k_weight(mu_in);
  switch (pair.kind()) {
    case PairKind::OddSphere: return interlaces_odd_sphere(lambda, mu) ? 1 : 0;
    case PairKind::EvenSphere: return interlaces_even_sphere(lambda, mu) ? 1 : 0;
    case PairKind::ComplexProj: return interlaces_su(lambda, mu) ? 1 : 0;
    case PairKind::QuaternionProj: {
      auto d = sp_deltas(lambda, mu);
      if (!d) return 0;
      return tsukamoto_coefficient(*d, as_int(mu[mu.size() - 1]), pair.n());
    }
    case PairKind::CayleyPlane: return equal_rank_multiplicity(pair, lambda, mu);
  }
  return 0;
}

std::int64_t branch_multiplicity(const BranchingQuery& q) { return branch_multiplicity(q.pair, q.lambda, q.mu); }

WeightMultiset strip_highest_weights(const RootSystem& k, std::map<LatticeVector, std::int64_t> remaining) {
  WeightMultiset out;
  while (!remaining.empty()) {
    auto top = std::prev(remaining.end());
    if (top->second == 0) {
      remaining.erase(top);
      continue;
    }
    if (top->second < 0) throw std::logic_error("negative multiplicity while decomposing into K-types");
    const std::int64_t m = top->second;
    Weight hw = k.from_lattice(top->first);
    auto character = dominant_character(k, hw);
    for (const auto& [v, c] : character->entries) {
      auto it = remaining.find(v);
      if (it == remaining.end() || it->second < m * c) {
        throw std::logic_error("negative multiplicity while decomposing into K-types at " + k.from_lattice(v).str());
      }
      it->second -= m * c;
      if (it->second == 0) remaining.erase(it);
    }
    out.emplace_back(std::move(hw), m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeightMultiset restrict_to_k(const SymmetricPair& pair, const Weight& lambda_in) {
  Weight lambda = pair.g_weight(lambda_in);
  std::string key = pair.key() + std::to_string(pair.n()) + lambda.str();
  auto& cache = restriction_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return *it->second;
  }
  const RootSystem& k = pair.k();
  std::map<LatticeVector, std::int64_t> dominant_part;
  for (const auto& [v, m] : lattice_weights(pair.g(), lambda)) {
    LatticeVector r = pair.restrict_lattice(v);
    if (k.lattice_dominant(r)) dominant_part[r] += m;
  }
  auto result = std::make_shared<const WeightMultiset>(strip_highest_weights(k, std::move(dominant_part)));
  std::unique_lock lock(cache.mutex);
  return *cache.table.emplace(std::move(key), std::move(result)).first->second;
}

WeightMultiset generic_restrict(const Weight& lambda) {
  return restrict_to_k(SymmetricPair::cayley_plane(), lambda);
}

WeightMultiset k_types(const SymmetricPair& pair, const Weight& lambda_in) {
  Weight lambda = pair.g_weight(lambda_in);
  if (pair.kind() == PairKind::CayleyPlane) return restrict_to_k(pair, lambda);

  const std::size_t kdim = pair.k().dim();
  std::vector<std::int64_t> lo(kdim), hi(kdim);
  const std::size_t n = static_cast<std::size_t>(pair.n());
  // Coordinate ranges from the interlacing pattern; SU works in scaled integers.
  const std::int64_t s = pair.kind() == PairKind::ComplexProj ? pair.g().scale() : 1;
  auto a = [&](std::size_t i) -> std::int64_t {
    return i < lambda.size() ? (lambda[i] * s).to_integer() : 0;
  };
  std::size_t free = kdim;
  switch (pair.kind()) {
    case PairKind::OddSphere:
      for (std::size_t i = 0; i + 1 < n; ++i) lo[i] = a(i + 1), hi[i] = a(i);
      lo[n - 2] = std::max(lo[n - 2], std::abs(a(n - 1)));
      break;
    case PairKind::EvenSphere:
      for (std::size_t i = 0; i + 1 < n; ++i) lo[i] = a(i + 1), hi[i] = a(i);
      lo[n - 1] = -a(n - 1), hi[n - 1] = a(n - 1);
      break;
    case PairKind::ComplexProj:
      free = n;
      for (std::size_t i = 0; i < n; ++i) lo[i] = a(i + 1), hi[i] = a(i);
      break;
    case PairKind::QuaternionProj:
      free = n;
      for (std::size_t i = 0; i < n; ++i) lo[i] = a(i + 2), hi[i] = a(i);
      break;
    case PairKind::CayleyPlane:
      break;
  }

  WeightMultiset out;
  std::vector<std::int64_t> b(kdim, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free) {
      if (pair.kind() == PairKind::ComplexProj) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < n; ++j) sum += b[j];
        b[n] = -sum;
        Weight mu(std::vector<Rational>(b.begin(), b.end()));
        mu *= Rational(1, s);
        if (pair.k().is_dominant(mu) && branch_multiplicity(pair, lambda, mu) > 0) out.emplace_back(mu, 1);
        return;
      }
      if (pair.kind() == PairKind::QuaternionProj) {
        for (std::size_t j = 0; j + 1 < n; ++j) {
          if (b[j] < b[j + 1]) return;
        }
        if (n > 0 && b[n - 1] < 0) return;
        for (std::int64_t last = 0;; ++last) {
          b[n] = last;
          Weight mu(std::vector<Rational>(b.begin(), b.end()));
          auto d = sp_deltas(lambda, mu);
          if (!d) return;
          std::int64_t degree = 0;
          for (auto x : *d) degree += x + 1;
          if (last + 1 > degree - static_cast<std::int64_t>(n)) return;
          std::int64_t m = tsukamoto_coefficient(*d, last, pair.n());
          if (m > 0) out.emplace_back(mu, m);
        }
      }
      Weight mu(std::vector<Rational>(b.begin(), b.end()));
      if (pair.k().is_dominant(mu)) out.emplace_back(mu, branch_multiplicity(pair, lambda, mu));
      return;
    }
    // SU coordinates move in steps of the scale so that a_i - b_i stays integral.
    const std::int64_t step = pair.kind() == PairKind::ComplexProj ? s : 1;
    for (std::int64_t v = hi[i]; v >= lo[i]; v -= step) {
      b[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rankone
