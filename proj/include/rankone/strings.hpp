#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankone/branching.hpp"
#include "rankone/pair.hpp"

namespace rankone {

// Thrown when the K-spectrum is not a union of strings inside the searched window.
class StringDecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// G^_tau as a finite disjoint union of strings base + N0 * direction.
struct StringSet {
  SymmetricPair pair;
  Weight mu;
  Weight direction;
  std::vector<Weight> bases;  // sorted
  bool closed_form = false;
  // Set when the bases come from exhaustive search; completeness holds below this Casimir value.
  std::optional<Rational> certified_bound;
  std::vector<std::string> warnings;
};

// True when a closed-form base set is known for mu.
bool has_closed_form(const SymmetricPair& pair, const Weight& mu);

// Closed-form bases, or nullopt when mu is outside the covered families.
std::optional<std::vector<Weight>> closed_form_bases(const SymmetricPair& pair, const Weight& mu);

// Search bound used when no closed form exists and the caller gives none.
inline constexpr std::int64_t kDefaultStringBound = 150;

// Closed form when available, otherwise exhaustive search up to `fallback_bound`.
StringSet string_bases(const SymmetricPair& pair, const Weight& mu, const Rational& fallback_bound = kDefaultStringBound);

// All G-types containing mu with Casimir <= bound, split into strings. Work is spread over
// `threads` workers (0 = hardware concurrency); the result does not depend on the split.
StringSet string_bases_bruteforce(const SymmetricPair& pair, const Weight& mu, const Rational& casimir_bound,
                                  unsigned threads = 0);

struct StringVerification {
  bool agree = false;
  bool closed_form_available = false;
  Rational bound;
  std::vector<Weight> closed_form;  // restricted to the bound
  std::vector<Weight> searched;
  std::vector<Weight> only_closed_form;
  std::vector<Weight> only_searched;
  std::vector<std::string> notes;
};

// Closed form against exhaustive search below `bound`. Without a closed form only the
// search result is reported and `agree` reflects its internal consistency.
StringVerification verify_string_decomposition(const SymmetricPair& pair, const Weight& mu, const Rational& bound);

}  // namespace rankone
