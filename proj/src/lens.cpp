#include "rankone/lens.hpp"

#include <algorithm>
#include <map>

#include "rankone/casimir.hpp"

namespace rankone {

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t floor_mod(std::int64_t x, std::int64_t q) {
  std::int64_t r = x % q;
  return r < 0 ? r + q : r;
}

}  // namespace

std::int64_t invariant_dim(const RootSystem& system, const Weight& lambda, const TorusCyclicSubgroup& gamma) {
  if (gamma.q < 1) throw DomainError("cyclic group order must be positive");
  if (gamma.s.size() != system.dim()) {
    throw DomainError("exponent vector has " + std::to_string(gamma.s.size()) + " entries, torus has " +
                      std::to_string(system.dim()));
  }
  system.require_dominant(system.canonical(lambda), "highest weight");
  if (gamma.q == 1) return static_cast<std::int64_t>(weyl_dim(system, system.canonical(lambda)));
  const bool sum_zero = system.lattice() == LatticeKind::SumZero;
  if (sum_zero) {
    std::int64_t total = 0;
    for (auto x : gamma.s) total += x;
    if (floor_mod(total, gamma.q) != 0) throw DomainError("SU torus element needs sum of exponents = 0 mod q");
  }
  std::int64_t out = 0;
  for (const auto& [eta, mult] : weight_multiplicities(system, system.canonical(lambda))) {
    Rational pairing = 0;
    for (std::size_t j = 0; j < eta.size(); ++j) {
      const Rational c = sum_zero ? eta[j] - eta[eta.size() - 1] : eta[j];
      pairing += Rational(gamma.s[j]) * c;
    }
    if (!pairing.is_integer()) throw DomainError("exponents do not define a torus element for " + system.name());
    if (floor_mod(pairing.to_integer(), gamma.q) == 0) out += mult;
  }
  return out;
}

SpectrumTable spectrum(const SymmetricPair& pair, const WeightMultiset& tau, const TorusCyclicSubgroup& gamma,
                       const Rational& bound) {
  const RootSystem& g = pair.g();
  std::map<Weight, std::int64_t> branch;  // pi_lambda -> [tau : pi_lambda]
  for (const auto& [mu, m] : tau) {
    StringSet strings = string_bases(pair, mu, bound);
    for (const Weight& base : strings.bases) {
      for (Weight x = base; casimir_eigenvalue(g, x) <= bound; x += strings.direction) {
        branch[x] += m * branch_multiplicity(pair, x, mu);
      }
    }
  }
  std::map<Rational, SpectrumRow> rows;
  for (const auto& [lambda, b] : branch) {
    const std::int64_t n = invariant_dim(g, lambda, gamma);
    Rational value = casimir_eigenvalue(g, lambda);
    auto& row = rows[value];
    row.eigenvalue = value;
    row.multiplicity += n * b;
    row.contributors.push_back({lambda, n, b});
  }
  SpectrumTable out{bound, {}};
  for (auto& [value, row] : rows) {
    if (row.multiplicity != 0) out.rows.push_back(std::move(row));
  }
  return out;
}

SpectrumTable spectrum(const SymmetricPair& pair, const Weight& mu, const TorusCyclicSubgroup& gamma,
                       const Rational& bound) {
  return spectrum(pair, WeightMultiset{{pair.k_weight(mu), 1}}, gamma, bound);
}

SpectrumDifference isospectral_compare(const SpectrumTable& a, const SpectrumTable& b) {
  std::map<Rational, std::pair<std::int64_t, std::int64_t>> merged;
  for (const auto& r : a.rows) merged[r.eigenvalue].first = r.multiplicity;
  for (const auto& r : b.rows) merged[r.eigenvalue].second = r.multiplicity;
  const Rational limit = std::min(a.bound, b.bound);
  for (const auto& [value, m] : merged) {
    if (value > limit) break;
    if (m.first != m.second) return {false, value, m.first, m.second};
  }
  return {};
}

SpectrumDifference isospectral_compare(const SymmetricPair& pair, const Weight& mu, const TorusCyclicSubgroup& gamma,
                                       const TorusCyclicSubgroup& gamma_prime, const Rational& bound) {
  return isospectral_compare(spectrum(pair, mu, gamma, bound), spectrum(pair, mu, gamma_prime, bound));
}

LensCounterexampleReport verify_lens_counterexample(int n, std::int64_t q, const Rational& bound) {
  if (n < 2 || n % 2 != 0) throw DomainError("the lens counterexample needs n even and >= 2");
  if (q <= n) throw DomainError("the lens counterexample needs q > n");
  const auto nn = static_cast<std::size_t>(n);
  const SymmetricPair pair = SymmetricPair::odd_sphere(n);
  LensCounterexampleReport rep;
  rep.n = n;
  rep.q = q;
  rep.gamma = {q, std::vector<std::int64_t>(nn, 1)};
  rep.gamma_prime = rep.gamma;
  rep.gamma_prime.s.back() = -1;
  rep.plus = Weight(std::vector<Rational>(nn, 1));
  rep.minus = rep.plus;
  rep.minus[nn - 1] = -1;
  const RootSystem& g = pair.g();
  rep.gamma_plus = invariant_dim(g, rep.plus, rep.gamma);
  rep.gamma_prime_plus = invariant_dim(g, rep.plus, rep.gamma_prime);
  rep.gamma_minus = invariant_dim(g, rep.minus, rep.gamma);
  rep.gamma_prime_minus = invariant_dim(g, rep.minus, rep.gamma_prime);
  rep.diff_plus = rep.gamma_plus - rep.gamma_prime_plus;
  rep.diff_minus = rep.gamma_minus - rep.gamma_prime_minus;
  rep.expected_magnitude = binomial(n, n / 2);
  rep.magnitude_ok = std::abs(rep.diff_plus) == rep.expected_magnitude && std::abs(rep.diff_minus) == rep.expected_magnitude;
  rep.opposite_signs = rep.diff_plus == -rep.diff_minus && rep.diff_plus != 0;
  rep.bound = bound;
  Weight tau = Weight(std::vector<Rational>(nn - 1, 1));
  rep.spectra = isospectral_compare(pair, tau, rep.gamma, rep.gamma_prime, bound);
  return rep;
}

}  // namespace rankone
