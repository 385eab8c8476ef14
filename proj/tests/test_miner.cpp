#include <doctest.h>

#include <algorithm>

#include "rankone/casimir.hpp"
#include "rankone/miner.hpp"

using namespace rankone;

namespace {

bool contains_family(const std::vector<CoincidentFamily>& fams, const std::vector<Weight>& bases) {
  return std::any_of(fams.begin(), fams.end(), [&](const CoincidentFamily& f) { return f.bases == bases; });
}

}  // namespace

TEST_CASE("small rows of the SO(2n) family table") {
  CHECK(contains_family(coincident_families(SymmetricPair::odd_sphere(3), Weight{4, 3}),
                        {Weight{4, 3, 3}, Weight{4, 4, 0}}));
  CHECK(contains_family(coincident_families(SymmetricPair::odd_sphere(3), Weight{17, 13}),
                        {Weight{17, 14, 10}, Weight{17, 16, 6}, Weight{17, 17, 1}}));
  CHECK(contains_family(coincident_families(SymmetricPair::odd_sphere(4), Weight{8, 6, 2}),
                        {Weight{8, 6, 6, 2}, Weight{8, 7, 5, 0}, Weight{8, 8, 3, 1}}));
  CHECK(contains_family(coincident_families(SymmetricPair::odd_sphere(5), Weight{6, 5, 4, 2}),
                        {Weight{6, 5, 4, 4, 1}, Weight{6, 5, 5, 2, 2}, Weight{6, 6, 4, 2, 0}}));
  // [17,16,10] is not on the Casimir level of the other two
  auto d3 = RootSystem::classical(Family::D, 3);
  CHECK(casimir_eigenvalue(d3, Weight{17, 16, 6}) == casimir_eigenvalue(d3, Weight{17, 14, 10}));
  CHECK(casimir_eigenvalue(d3, Weight{17, 16, 10}) != casimir_eigenvalue(d3, Weight{17, 14, 10}));
}

TEST_CASE("every family shares one polynomial") {
  for (int n = 3; n <= 4; ++n) {
    auto pair = SymmetricPair::odd_sphere(n);
    auto res = mine_coincident_families(pair, 6, {2, true});
    REQUIRE_FALSE(res.families.empty());
    for (const auto& f : res.families) {
      CHECK(f.bases.size() >= 2);
      CHECK(std::is_sorted(f.bases.begin(), f.bases.end()));
      for (const Weight& b : f.bases) {
        CHECK(family_representative(pair, b) == b);
        auto poly = string_polynomial(pair.g(), pair.direction(), b);
        CHECK(poly == f.shared_polynomial);
        for (std::int64_t k = 0; k <= 100; k += 10) {
          CHECK(casimir_eigenvalue(pair.g(), b + Rational(k) * pair.direction()) == f.shared_polynomial(k));
        }
      }
    }
    for (const auto& s : res.shifted) {
      auto p = string_polynomial(pair.g(), pair.direction(), s.base);
      auto q = string_polynomial(pair.g(), pair.direction(), s.other);
      CHECK(s.m != 0);
      for (std::int64_t k = 0; k <= 100; ++k) {
        if (k + s.m >= 0) CHECK(p(k) == q(k + s.m));
      }
    }
  }
}

TEST_CASE("shifting mu and the bases by e1 keeps a family") {
  auto pair = SymmetricPair::odd_sphere(3);
  for (const auto& f : mine_coincident_families(pair, 6, {1, false}).families) {
    for (std::int64_t b = 1; b <= 2; ++b) {
      Weight mu = f.mu;
      mu[0] += b;
      std::vector<Weight> shifted;
      for (Weight w : f.bases) {
        w[0] += b;
        shifted.push_back(w);
      }
      CAPTURE(mu.str());
      CHECK(contains_family(coincident_families(pair, mu), shifted));
    }
  }
}

TEST_CASE("miner output does not depend on the thread count") {
  auto pair = SymmetricPair::odd_sphere(4);
  auto a = mine_coincident_families(pair, 5, {1, true});
  auto b = mine_coincident_families(pair, 5, {4, true});
  CHECK(format_table1(a.families) == format_table1(b.families));
  CHECK(a.shifted.size() == b.shifted.size());
  CHECK(a.mu_searched == b.mu_searched);
}

TEST_CASE("K-type enumeration and representatives") {
  auto pair = SymmetricPair::odd_sphere(3);
  auto types = enumerate_k_types(pair, 2);
  for (const Weight& mu : types) CHECK(pair.k().is_dominant(mu));
  CHECK(std::is_sorted(types.begin(), types.end()));
  CHECK(types.size() == 6);  // b1 >= b2 >= 0 with b1 <= 2
  CHECK(family_representative(pair, Weight{4, 3, -3}) == Weight{4, 3, 3});
  CHECK(format_table1(coincident_families(pair, Weight{4, 3})) == "3 [4,3] 2 [4,3,3] [4,4,0]\n");
}
