#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rankone/casimir.hpp"
#include "rankone/strings.hpp"

namespace rankone {

// Status of the coincidence hypotheses that make the strong representation-spectral
// converse hold for (G, K, tau_mu). FailsWithWitness means the hypotheses fail, not the
// converse itself.
enum class ConverseStatus { Holds, FailsWithWitness, Inconclusive };

std::string to_string(ConverseStatus status);

struct StringPairWitness {
  Weight base;
  Weight other;
  CoincidenceResult coincidence;
};

struct TameEntry {
  Rational eigenvalue;
  bool tame = false;
  std::vector<Weight> contributors;  // sorted
};

struct ConverseReport {
  ConverseStatus status = ConverseStatus::Inconclusive;
  StringSet strings;
  std::vector<StringPairWitness> witnesses;  // infinite coincidences without a dual exemption
  std::vector<StringPairWitness> exempt;     // infinite coincidences explained by duality
  std::vector<TameEntry> tame_summary;       // filled when a window is requested
  std::vector<std::string> notes;
};

// Eigenvalues of all strings up to k_max, classified as tame or not. Only values up to the
// smallest P(k_max) over the bases are reported, so every listed verdict is exact.
std::vector<TameEntry> tame_classification(const StringSet& strings, std::int64_t k_max);
std::vector<TameEntry> tame_classification(const SymmetricPair& pair, const Weight& mu, std::int64_t k_max);

struct ConverseOptions {
  Rational search_bound = kDefaultStringBound;  // used when no closed form exists
  std::optional<std::int64_t> tame_window;      // k_max for the tame summary
};

ConverseReport check_converse_hypotheses(const SymmetricPair& pair, const Weight& mu, const ConverseOptions& options = {});
// Same analysis for an explicit string set, e.g. the union over the constituents of a
// reducible tau. options.search_bound is unused here.
ConverseReport check_converse_hypotheses(StringSet strings, const ConverseOptions& options = {});

struct FormInjectivity {
  bool injective = true;
  std::size_t set_size = 0;
  // Two tuples (a_2, ..., a_n) with the same value, when not injective.
  std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> witness;
};

// SO(2n) over SO(2n-1): (a_2..a_n) -> sum a_i (a_i + 2(n-i)) on the interlacing set.
FormInjectivity form_injectivity_so_even(int n, const Weight& mu);
// SO(2n+1) over SO(2n): (a_2..a_n) -> sum a_i (a_i + 1 + 2(n-i)).
FormInjectivity form_injectivity_so_odd(int n, const Weight& mu);

struct SufficientCondition {
  std::string name;
  std::string detail;
};

// Published sufficient conditions on the coefficients of mu that apply to this pair.
std::vector<SufficientCondition> corollary_conditions(const SymmetricPair& pair, const Weight& mu);

// True iff for every base and every residue j mod q at least n_required + 1 indices k with
// k = j (mod q) have their eigenvalue in `values`.
bool finite_window_check(const StringSet& strings, std::int64_t q, const std::set<Rational>& values,
                         std::int64_t n_required);
bool finite_window_check(const SymmetricPair& pair, const Weight& mu, std::int64_t q, const std::set<Rational>& values,
                         std::int64_t n_required);

struct ThreeSphereShift {
  std::int64_t a2 = 0;
  CoincidenceResult coincidence;                                // exhaustive
  std::vector<std::pair<std::int64_t, std::int64_t>> in_window;  // pairs with k, h <= window
};

struct ThreeSphereReport {
  std::int64_t b = 0;
  bool all_finite = true;
  std::vector<ThreeSphereShift> shifts;
};

// SO(4)/SO(3), mu = b eps_1: compares (k+b)(k+b+2) with (h+b)(h+b+2) + a2^2 for 0 < a2 <= b.
ThreeSphereReport three_sphere_coincidences(std::int64_t b, std::int64_t window);

}  // namespace rankone
