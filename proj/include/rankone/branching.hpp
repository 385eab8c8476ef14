#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rankone/pair.hpp"

namespace rankone {

// (highest weight, multiplicity), sorted lexicographically by weight.
using WeightMultiset = std::vector<std::pair<Weight, std::int64_t>>;

struct BranchingQuery {
  SymmetricPair pair;
  Weight lambda;
  Weight mu;
};

// dim Hom_K(tau_mu, pi_lambda).
std::int64_t branch_multiplicity(const SymmetricPair& pair, const Weight& lambda, const Weight& mu);
std::int64_t branch_multiplicity(const BranchingQuery& q);

// Multiplicity from the Weyl character formula of K applied to the G-character:
// sum over w in W_K of sign(w) m_lambda(mu + rho_K - w rho_K). Needs rank K = rank G.
std::int64_t equal_rank_multiplicity(const SymmetricPair& pair, const Weight& lambda, const Weight& mu);

// Coefficient of x^{b_last+1} in (x - 1/x)^{-n} prod_i (x^{d_i+1} - x^{-d_i-1}),
// expanding the quotient in descending powers.
std::int64_t tsukamoto_coefficient(const std::vector<std::int64_t>& deltas, std::int64_t b_last, int n);

// Sp(n+1) -> Sp(n) x Sp(1): the delta vector, or nullopt when the doubly interlacing
// condition fails.
std::optional<std::vector<std::int64_t>> sp_deltas(const Weight& lambda, const Weight& mu);

// Peel irreducible K-characters off the K-dominant part of a character, largest
// weight first. Throws std::logic_error if a multiplicity would go negative.
WeightMultiset strip_highest_weights(const RootSystem& k, std::map<LatticeVector, std::int64_t> dominant_part);

// Restriction to K through the shared torus, decomposed by stripping. Works for
// every pair and serves as the oracle for the closed-form rules.
WeightMultiset restrict_to_k(const SymmetricPair& pair, const Weight& lambda);

// F4 -> Spin(9).
WeightMultiset generic_restrict(const Weight& lambda);

// K-types of pi_lambda from the closed-form branching rules.
WeightMultiset k_types(const SymmetricPair& pair, const Weight& lambda);

}  // namespace rankone
