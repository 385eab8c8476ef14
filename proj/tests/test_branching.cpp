#include <doctest.h>

#include "oracles.hpp"
#include "rankone/branching.hpp"

using namespace rankone;

namespace {

std::uint64_t total_dim(const RootSystem& k, const WeightMultiset& parts) {
  std::uint64_t d = 0;
  for (const auto& [w, m] : parts) d += static_cast<std::uint64_t>(m) * weyl_dim(k, w);
  return d;
}

}  // namespace

TEST_CASE("SO(2n) to SO(2n-1) is multiplicity free and interlacing") {
  for (int n = 2; n <= 4; ++n) {
    auto pair = SymmetricPair::odd_sphere(n);
    for (const Weight& l : enumerate_dominant(pair.g(), 30)) {
      for (const Weight& m : enumerate_dominant(pair.k(), 30)) {
        CHECK(branch_multiplicity(pair, l, m) == (oracle::interlaces_so_even(l, m) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("SO(2n+1) to SO(2n) is multiplicity free and interlacing") {
  for (int n = 2; n <= 3; ++n) {
    auto pair = SymmetricPair::even_sphere(n);
    for (const Weight& l : enumerate_dominant(pair.g(), 30)) {
      for (const Weight& m : enumerate_dominant(pair.k(), 30)) {
        CHECK(branch_multiplicity(pair, l, m) == (oracle::interlaces_so_odd(l, m) ? 1 : 0));
      }
    }
  }
}

TEST_CASE("closed-form K-types agree with restriction through the torus") {
  std::vector<SymmetricPair> pairs = {SymmetricPair::odd_sphere(3), SymmetricPair::even_sphere(3),
                                      SymmetricPair::complex_projective(2), SymmetricPair::complex_projective(3),
                                      SymmetricPair::quaternion_projective(1), SymmetricPair::quaternion_projective(2)};
  for (const auto& pair : pairs) {
    for (const Weight& l : enumerate_dominant(pair.g(), 40)) {
      auto closed = k_types(pair, l);
      CHECK(closed == restrict_to_k(pair, l));
      CHECK(total_dim(pair.k(), closed) == weyl_dim(pair.g(), l));
    }
  }
}

TEST_CASE("F4 to Spin(9)") {
  auto f4 = SymmetricPair::cayley_plane();
  // 26 = 1 + 9 + 16, 52 = 36 + 16
  auto v26 = generic_restrict(f4_omega(1));
  CHECK(v26 == WeightMultiset{{Weight{0, 0, 0, 0}, 1},
                              {Weight{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}, 1},
                              {Weight{1, 0, 0, 0}, 1}});
  auto v52 = generic_restrict(f4_omega(4));
  CHECK(v52 == WeightMultiset{{Weight{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}, 1},
                              {Weight{1, 1, 0, 0}, 1}});
  for (const Weight& l : enumerate_dominant(f4.g(), 60)) {
    auto parts = restrict_to_k(f4, l);
    CHECK(total_dim(f4.k(), parts) == weyl_dim(f4.g(), l));
    for (const auto& [mu, m] : parts) CHECK(equal_rank_multiplicity(f4, l, mu) == m);
  }
}

TEST_CASE("equal-rank alternating sum on Sp and odd orthogonal pairs") {
  for (const auto& pair : {SymmetricPair::quaternion_projective(2), SymmetricPair::even_sphere(3)}) {
    for (const Weight& l : enumerate_dominant(pair.g(), 30)) {
      for (const auto& [mu, m] : restrict_to_k(pair, l)) CHECK(equal_rank_multiplicity(pair, l, mu) == m);
    }
  }
  CHECK_THROWS_AS(equal_rank_multiplicity(SymmetricPair::odd_sphere(3), Weight{1, 0, 0}, Weight{1, 0}), DomainError);
}

TEST_CASE("Sp spherical representations") {
  auto sp = SymmetricPair::quaternion_projective(2);
  CHECK(branch_multiplicity(sp, Weight{1, 1, 0}, Weight{0, 0, 0}) == 1);
  CHECK(branch_multiplicity(sp, Weight{1, 0, 0}, Weight{0, 0, 0}) == 0);
  CHECK(branch_multiplicity(sp, Weight{2, 2, 0}, Weight{0, 0, 0}) == 1);
  CHECK_FALSE(sp_deltas(Weight{1, 0, 0}, Weight{2, 0, 0}).has_value());
}

