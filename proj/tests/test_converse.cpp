#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <map>

#include "oracles.hpp"
#include "rankone/miner.hpp"
#include "witness_check.hpp"
#include "rankone/converse.hpp"

using namespace rankone;

namespace {

bool has_pair(const ConverseReport& r, const Weight& a, const Weight& b) {
  for (const auto& w : r.witnesses) {
    if ((w.base == a && w.other == b) || (w.base == b && w.other == a)) return true;
  }
  return false;
}

// Injectivity of (a_2..a_n) -> sum a_i (a_i + c_i) on the interlacing box, by enumeration.
// even: b = (b_1..b_{n-1}), b_{i-1} >= a_i >= b_i and b_{n-1} >= |a_n|; for odd n the
//       sign of a_n only swaps a string with its dual, so a_n >= 0
// odd:  b = (b_1..b_n),     b_{i-1} >= a_i >= |b_i|
bool injective_by_enumeration(int n, const std::vector<std::int64_t>& b, bool odd) {
  const std::size_t free = static_cast<std::size_t>(n - 1);
  std::map<std::int64_t, int> seen;
  std::vector<std::int64_t> a(free);
  bool ok = true;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == free) {
      std::int64_t v = 0;
      for (std::size_t t = 0; t < free; ++t) {
        const std::int64_t c = 2 * (n - 2 - static_cast<std::int64_t>(t)) + (odd ? 1 : 0);
        v += a[t] * (a[t] + c);
      }
      if (++seen[v] > 1) ok = false;
      return;
    }
    const std::int64_t hi = b[j];
    const std::int64_t lo = odd ? std::abs(b[j + 1]) : (j + 1 < free ? b[j + 1] : n % 2 == 0 ? -b[j] : 0);
    for (std::int64_t x = lo; x <= hi; ++x) {
      a[j] = x;
      rec(j + 1);
    }
  };
  rec(0);
  return ok;
}

}  // namespace

TEST_CASE("published counterexamples fail with the expected witness") {
  auto so6 = SymmetricPair::odd_sphere(3);
  auto r = check_converse_hypotheses(so6, Weight{4, 3});
  CHECK(r.status == ConverseStatus::FailsWithWitness);
  CHECK(has_pair(r, Weight{4, 3, 3}, Weight{4, 4, 0}));
  auto so7 = SymmetricPair::even_sphere(3);
  auto s = check_converse_hypotheses(so7, Weight{4, 3, 0});
  CHECK(s.status == ConverseStatus::FailsWithWitness);
  CHECK(has_pair(s, Weight{4, 3, 3}, Weight{4, 4, 1}));
  auto sp4 = SymmetricPair::quaternion_projective(3);
  auto t = check_converse_hypotheses(sp4, Weight{2, 1, 0, 1});
  CHECK(t.status == ConverseStatus::FailsWithWitness);
  CHECK(has_pair(t, Weight{3, 1, 1, 1}, Weight{2, 2, 2, 0}));
}

TEST_CASE("dual strings are exempt, not witnesses") {
  auto so6 = SymmetricPair::odd_sphere(3);
  auto r = check_converse_hypotheses(so6, Weight{3, 3});
  for (const auto& w : r.witnesses) CHECK_FALSE(w.coincidence.dual_related.has_value());
  CHECK(r.status == ConverseStatus::Holds);
  CHECK_FALSE(r.exempt.empty());
}

TEST_CASE("sufficient conditions: verdicts and confirmed counterexamples") {
  int applied = 0, counterexamples = 0;
  for (int n = 3; n <= 4; ++n) {
    for (const auto& pair : {SymmetricPair::odd_sphere(n), SymmetricPair::even_sphere(n),
                             SymmetricPair::complex_projective(n), SymmetricPair::quaternion_projective(n - 1)}) {
      for (const Weight& mu : enumerate_k_types(pair, 4)) {
        if (corollary_conditions(pair, mu).empty()) continue;
        ++applied;
        CAPTURE(pair.name());
        CAPTURE(mu.str());
        auto r = check_converse_hypotheses(pair, mu);
        if (pair.kind() == PairKind::OddSphere || pair.kind() == PairKind::QuaternionProj) {
          CHECK(r.status == ConverseStatus::Holds);
          continue;
        }
        if (r.status == ConverseStatus::Holds) continue;
        ++counterexamples;
        CHECK(r.status == ConverseStatus::FailsWithWitness);
        for (const auto& w : r.witnesses) CHECK(oracle::confirmed_witness(pair, mu, w));
      }
    }
  }
  CHECK(applied > 100);
  CHECK(counterexamples > 0);
}

TEST_CASE("odd-orthogonal bound b1 - |bn| <= 3 is not sufficient") {
  auto so7 = SymmetricPair::even_sphere(3);
  const Weight mu{4, 3, 1};
  REQUIRE_FALSE(corollary_conditions(so7, mu).empty());
  auto r = check_converse_hypotheses(so7, mu);
  CHECK(r.status == ConverseStatus::FailsWithWitness);
  CHECK(has_pair(r, Weight{4, 3, 3}, Weight{4, 4, 1}));
  CHECK_FALSE(form_injectivity_so_odd(3, mu).injective);
}

TEST_CASE("SU one-jump family with a shifted coincidence") {
  auto su4 = SymmetricPair::complex_projective(3);
  const Weight mu = pr(Weight{5, 0, 0, -1});
  auto r = check_converse_hypotheses(su4, mu);
  REQUIRE(r.status == ConverseStatus::FailsWithWitness);
  CHECK(has_pair(r, Weight{4, -1, -1, -2}, Weight{4, 1, -1, -4}));
  for (const auto& w : r.witnesses) CHECK(oracle::confirmed_witness(su4, mu, w));
}

TEST_CASE("form injectivity against enumeration") {
  for (int n = 3; n <= 4; ++n) {
    for (const Weight& mu : enumerate_dominant(RootSystem::classical(Family::B, n - 1), 40)) {
      std::vector<std::int64_t> b;
      for (const auto& c : mu) b.push_back(c.to_integer());
      if (!mu[0].is_integer()) continue;
      CAPTURE(mu.str());
      CHECK(form_injectivity_so_even(n, mu).injective == injective_by_enumeration(n, b, false));
    }
    for (const Weight& mu : enumerate_dominant(RootSystem::classical(Family::D, n), 40)) {
      if (!mu[0].is_integer()) continue;
      std::vector<std::int64_t> b;
      for (const auto& c : mu) b.push_back(c.to_integer());
      CAPTURE(mu.str());
      CHECK(form_injectivity_so_odd(n, mu).injective == injective_by_enumeration(n, b, true));
    }
  }
}

TEST_CASE("three-sphere coincidences are finite") {
  for (std::int64_t b = 1; b <= 6; ++b) {
    auto r = three_sphere_coincidences(b, 60);
    CHECK(r.all_finite);
    CHECK(r.shifts.size() == static_cast<std::size_t>(b));
    for (const auto& s : r.shifts) {
      for (const auto& [k, h] : s.in_window) {
        CHECK((k + b) * (k + b + 2) == (h + b) * (h + b + 2) + s.a2 * s.a2);
      }
    }
  }
}

TEST_CASE("tame classification and finite window") {
  auto so6 = SymmetricPair::odd_sphere(3);
  auto entries = tame_classification(so6, Weight{4, 3}, 10);
  REQUIRE_FALSE(entries.empty());
  bool some_wild = false;
  for (const auto& e : entries) some_wild |= !e.tame;
  CHECK(some_wild);
  auto s3 = tame_classification(SymmetricPair::odd_sphere(2), Weight{0}, 10);
  for (const auto& e : s3) CHECK(e.tame);
}
