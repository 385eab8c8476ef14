#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankone/casimir.hpp"
#include "rankone/strings.hpp"

namespace rankone {

// Strings in G^_{tau_mu} sharing one Casimir polynomial, one base per dual class.
struct CoincidentFamily {
  SymmetricPair pair;
  Weight mu;
  std::vector<Weight> bases;  // sorted, size >= 2
  QuadraticPolynomial shared_polynomial;
};

// Two strings whose eigenvalue lists agree after a shift m != 0, and which are not dual.
struct ShiftedCoincidence {
  SymmetricPair pair;
  Weight mu;
  Weight base;
  Weight other;
  std::int64_t m = 0;  // P_base(k) = P_other(k + m)
};

struct MinerOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  bool shifted = false;  // also collect ShiftedCoincidence entries
};

struct MinerResult {
  std::vector<CoincidentFamily> families;    // mu lexicographic, then (<w, L>, Casimir)
  std::vector<ShiftedCoincidence> shifted;  // mu lexicographic, then base, other
  std::size_t mu_searched = 0;
  std::size_t mu_skipped = 0;  // no closed-form base set
};

// Representative of the class of lambda under contragredience, and for SO(2n) also under
// the sign flip of the last coordinate.
Weight family_representative(const SymmetricPair& pair, const Weight& lambda);

// Families for one K-type. Empty when mu has no closed-form base set.
std::vector<CoincidentFamily> coincident_families(const SymmetricPair& pair, const Weight& mu);
std::vector<ShiftedCoincidence> shifted_coincidences(const SymmetricPair& pair, const Weight& mu);

// K-dominant integral mu with integer representative coordinates in [-coord_bound, coord_bound].
std::vector<Weight> enumerate_k_types(const SymmetricPair& pair, std::int64_t coord_bound);

MinerResult mine_coincident_families(const SymmetricPair& pair, std::int64_t coord_bound,
                                     const MinerOptions& options = {});

// One line per family: "n [mu] # base base ...".
std::string format_table1(const std::vector<CoincidentFamily>& families);

}  // namespace rankone
