#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankone/branching.hpp"
#include "rankone/strings.hpp"

namespace rankone {

// The cyclic group generated by the torus element with angles 2 pi s_j / q. It fixes the
// weight space of eta iff sum s_j eta_j = 0 (mod q). For SU the coordinates are lifted to
// integers as eta_j - eta_{n+1}, which requires sum s_j = 0 (mod q).
struct TorusCyclicSubgroup {
  std::int64_t q = 1;
  std::vector<std::int64_t> s;

  static TorusCyclicSubgroup trivial(std::size_t rank) { return {1, std::vector<std::int64_t>(rank, 0)}; }
};

// dim V_lambda^Gamma.
std::int64_t invariant_dim(const RootSystem& system, const Weight& lambda, const TorusCyclicSubgroup& gamma);

struct SpectrumContributor {
  Weight lambda;
  std::int64_t n_gamma = 0;
  std::int64_t branch = 0;  // [tau : pi_lambda|_K]
};

struct SpectrumRow {
  Rational eigenvalue;
  std::int64_t multiplicity = 0;  // sum of n_gamma * branch
  std::vector<SpectrumContributor> contributors;
};

struct SpectrumTable {
  Rational bound;
  std::vector<SpectrumRow> rows;  // ascending eigenvalue, zero multiplicities dropped
};

// tau-spectrum of Gamma\G/K up to `bound`, tau = sum of the K-types listed with multiplicity.
SpectrumTable spectrum(const SymmetricPair& pair, const WeightMultiset& tau, const TorusCyclicSubgroup& gamma,
                       const Rational& bound);
SpectrumTable spectrum(const SymmetricPair& pair, const Weight& mu, const TorusCyclicSubgroup& gamma,
                       const Rational& bound);

struct SpectrumDifference {
  bool equal = true;
  std::optional<Rational> eigenvalue;  // first eigenvalue whose multiplicities differ
  std::int64_t first = 0;
  std::int64_t second = 0;
};

SpectrumDifference isospectral_compare(const SpectrumTable& a, const SpectrumTable& b);
SpectrumDifference isospectral_compare(const SymmetricPair& pair, const Weight& mu, const TorusCyclicSubgroup& gamma,
                                       const TorusCyclicSubgroup& gamma_prime, const Rational& bound);

struct LensCounterexampleReport {
  int n = 0;
  std::int64_t q = 0;
  TorusCyclicSubgroup gamma, gamma_prime;
  Weight plus, minus;  // e_1+..+e_n and its last-sign flip
  std::int64_t gamma_plus = 0, gamma_prime_plus = 0, gamma_minus = 0, gamma_prime_minus = 0;
  std::int64_t diff_plus = 0, diff_minus = 0;
  std::int64_t expected_magnitude = 0;  // binom(n, n/2)
  bool magnitude_ok = false;
  bool opposite_signs = false;
  Rational bound;
  SpectrumDifference spectra;  // on (n-1)-forms
  bool holds() const { return magnitude_ok && opposite_signs && spectra.equal; }
};

// SO(2n)/SO(2n-1), n even, q > n: two lens spaces that are isospectral on (n-1)-forms but
// have different multiplicities n_Gamma on pi_(e_1+..+e_n).
LensCounterexampleReport verify_lens_counterexample(int n, std::int64_t q, const Rational& bound);

}  // namespace rankone
