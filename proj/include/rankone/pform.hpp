#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rankone/branching.hpp"
#include "rankone/converse.hpp"

namespace rankone {

enum class PFormSource { Table, Computed };

std::string to_string(PFormSource source);

// tau_p = p-th exterior power of the complexified isotropy representation, split into K-types.
struct PFormDecomposition {
  SymmetricPair pair;
  int p = 0;
  WeightMultiset constituents;  // K highest weights with multiplicity, sorted
  PFormSource source = PFormSource::Computed;

  std::uint64_t dimension() const;
};

// Weight multiset of the complexified tangent space at the base point, as K-lattice vectors
// mapped back to weights. Roots of G not in K, plus rank(G) - rank(K) zero weights.
std::vector<Weight> isotropy_weights(const SymmetricPair& pair);

// The published decomposition where one exists, the exterior-power computation otherwise.
// Tabulated: spheres for all p, SU(n+1) for all p, Sp(n+1) for p <= 4 and by duality,
// F4 for p <= 8 and by duality.
PFormDecomposition tau_p_constituents(const SymmetricPair& pair, int p);

// Exterior power of the isotropy weights by the elementary-symmetric recursion, then
// highest-weight stripping.
PFormDecomposition tau_p_generic(const SymmetricPair& pair, int p);

// Sp(n) modification rule: rewrites a partition with more than n rows as a signed
// Sp(n) character label. Returns {sign, partition}, sign 0 when the character vanishes.
std::pair<int, std::vector<std::int64_t>> sp_modification(std::vector<std::int64_t> partition, int n);

// Union over constituents of their string sets, re-split into disjoint strings.
StringSet union_string_set(const SymmetricPair& pair, const std::vector<StringSet>& parts);

struct PFormConverseReport {
  PFormDecomposition decomposition;
  std::vector<std::pair<Weight, ConverseReport>> per_constituent;
  ConverseReport combined;
};

PFormConverseReport pform_converse_report(const SymmetricPair& pair, int p, const ConverseOptions& options = {});

}  // namespace rankone
