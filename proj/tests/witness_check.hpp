#pragma once

// Confirms a reported failure of the coincidence hypotheses without the library's
// branching or Casimir code: both bases must carry tau_mu (interlacing) and the two
// strings must share eigenvalues along the reported shift (root-sum Casimir).

#include "oracles.hpp"
#include "rankone/converse.hpp"

namespace oracle {

inline std::vector<Weight> roots_of(const rankone::SymmetricPair& pair) {
  using rankone::PairKind;
  switch (pair.kind()) {
    case PairKind::OddSphere: return positive_roots('D', pair.n());
    case PairKind::EvenSphere: return positive_roots('B', pair.n());
    case PairKind::ComplexProj: return positive_roots('A', pair.n());
    case PairKind::QuaternionProj: return positive_roots('C', pair.n() + 1);
    case PairKind::CayleyPlane: return positive_roots('F', 4);
  }
  return {};
}

// Interlacing oracle where one exists; nullopt for the other pairs.
inline std::optional<bool> spherical(const rankone::SymmetricPair& pair, const Weight& lambda, const Weight& mu) {
  using rankone::PairKind;
  switch (pair.kind()) {
    case PairKind::OddSphere: return interlaces_so_even(lambda, mu);
    case PairKind::EvenSphere: return interlaces_so_odd(lambda, mu);
    case PairKind::ComplexProj: return interlaces_su(lambda, mu);
    default: return std::nullopt;
  }
}

inline bool confirmed_witness(const rankone::SymmetricPair& pair, const Weight& mu,
                              const rankone::StringPairWitness& w, std::int64_t terms = 200) {
  for (const Weight* b : {&w.base, &w.other}) {
    auto sph = spherical(pair, *b, mu);
    if (sph && !*sph) return false;
    // the base starts its string
    auto prev = spherical(pair, *b - pair.direction(), mu);
    if (prev && *prev) return false;
  }
  const std::int64_t m = w.coincidence.kind == rankone::CoincidenceKind::Identical ? 0 : w.coincidence.m;
  return strings_shift_coincide(roots_of(pair), pair.direction(), w.base, w.other, m, terms);
}

}  // namespace oracle
