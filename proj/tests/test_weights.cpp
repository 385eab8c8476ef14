#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rankone/weights.hpp"

using namespace rankone;

TEST_CASE("rho of the classical and exceptional systems") {
  CHECK(rho(RootSystem::classical(Family::C, 2)) == Weight{2, 1});
  CHECK(rho(RootSystem::classical(Family::C, 3)) == Weight{3, 2, 1});
  CHECK(rho(RootSystem::classical(Family::D, 3)) == Weight{2, 1, 0});
  CHECK(rho(RootSystem::classical(Family::B, 3)) == Weight{Rational(5, 2), Rational(3, 2), Rational(1, 2)});
  CHECK(rho(RootSystem::f4()) == Weight{Rational(11, 2), Rational(5, 2), Rational(3, 2), Rational(1, 2)});
  for (char t : {'B', 'C', 'D'}) {
    for (int n = 2; n <= 5; ++n) {
      Family f = t == 'B' ? Family::B : t == 'C' ? Family::C : Family::D;
      CHECK(rho(RootSystem::classical(f, n)) == oracle::half_sum(oracle::positive_roots(t, n)));
    }
  }
  CHECK(rho(RootSystem::f4()) == oracle::half_sum(oracle::positive_roots('F', 4)));
}

TEST_CASE("F4 fundamental weights in use") {
  auto f4 = RootSystem::f4();
  CHECK(weyl_dim(f4, f4_omega(1)) == 26);
  CHECK(weyl_dim(f4, f4_omega(4)) == 52);
  CHECK(weyl_dim(f4, f4_omega(2)) == 273);
  CHECK(weyl_dim(f4, f4_omega(3)) == 1274);
  auto roots = oracle::positive_roots('F', 4);
  for (int i = 1; i <= 4; ++i) {
    CHECK(Rational(static_cast<std::int64_t>(weyl_dim(f4, f4_omega(i)))) == oracle::weyl_dimension(roots, f4_omega(i)));
  }
}

TEST_CASE("Weyl dimension against the product formula") {
  for (int n = 2; n <= 4; ++n) {
    auto d = RootSystem::classical(Family::D, n);
    auto roots = oracle::positive_roots('D', n);
    for (const Weight& l : enumerate_dominant(d, 40)) {
      CHECK(Rational(static_cast<std::int64_t>(weyl_dim(d, l))) == oracle::weyl_dimension(roots, l));
    }
  }
}

TEST_CASE("Freudenthal multiplicities of SU(3) match Kostka numbers") {
  auto a2 = RootSystem::classical(Family::A, 2);
  for (const std::vector<int>& shape : {std::vector<int>{2, 1, 0}, std::vector<int>{3, 1, 0}, std::vector<int>{2, 2, 0},
                                        std::vector<int>{4, 2, 0}}) {
    Weight hw = pr(Weight{shape[0], shape[1], shape[2]});
    auto mult = weight_multiplicities(a2, hw);
    const int size = shape[0] + shape[1] + shape[2];
    for (int x = 0; x <= size; ++x) {
      for (int y = 0; x + y <= size; ++y) {
        const std::vector<int> content{x, y, size - x - y};
        Weight w = pr(Weight{x, y, size - x - y});
        auto it = mult.find(w);
        const std::int64_t got = it == mult.end() ? 0 : it->second;
        CHECK(got == oracle::kostka(shape, content));
      }
    }
  }
}

TEST_CASE("exterior powers of the vector representation") {
  // D_n, p < n: Lambda^p C^{2n} is irreducible with highest weight e_1 + ... + e_p
  for (int n = 3; n <= 5; ++n) {
    auto d = RootSystem::classical(Family::D, n);
    std::vector<Weight> vec;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      vec.push_back(oracle::unit(static_cast<std::size_t>(n), i));
      vec.push_back(oracle::unit(static_cast<std::size_t>(n), i, -1));
    }
    for (int p = 1; p < n - 1; ++p) {
      Weight hw = Weight::zero(static_cast<std::size_t>(n));
      for (int i = 0; i < p; ++i) hw[static_cast<std::size_t>(i)] = 1;
      auto expected = oracle::exterior_power(vec, p);
      auto got = weight_multiplicities(d, hw);
      CHECK(std::map<Weight, std::int64_t>(got.begin(), got.end()) == expected);
    }
  }
}

TEST_CASE("dual weight and dominance") {
  auto d3 = RootSystem::classical(Family::D, 3);
  CHECK(dual_weight(d3, Weight{4, 3, 3}) == Weight{4, 3, -3});
  auto d4 = RootSystem::classical(Family::D, 4);
  CHECK(dual_weight(d4, Weight{2, 1, 1, -1}) == Weight{2, 1, 1, -1});
  auto a3 = RootSystem::classical(Family::A, 3);
  CHECK(dual_weight(a3, pr(Weight{1, 0, 0, 0})) == pr(Weight{0, 0, 0, -1}));
  CHECK(d3.is_dominant(Weight{4, 3, -3}));
  CHECK_FALSE(d3.is_dominant(Weight{3, 4, 0}));
  CHECK_THROWS_AS(d3.require_dominant(Weight{1, 2, 0}, "test"), DomainError);
}

TEST_CASE("weight literals") {
  CHECK(Weight::parse("[4,3,3]") == Weight{4, 3, 3});
  CHECK(Weight::parse("[\"11/2\",\"5/2\"]") == Weight{Rational(11, 2), Rational(5, 2)});
  CHECK(Weight::parse(Weight{Rational(3, 2), -1}.str()) == Weight{Rational(3, 2), -1});
  CHECK_THROWS(Weight::parse("[1,2"));
}

TEST_CASE("random dominant weights: Freudenthal total equals Weyl dimension") {
  std::mt19937_64 rng(7);
  const std::vector<RootSystem> systems = {RootSystem::classical(Family::B, 3), RootSystem::classical(Family::C, 3),
                                           RootSystem::classical(Family::D, 4), RootSystem::classical(Family::A, 3),
                                           RootSystem::f4()};
  for (const auto& g : systems) {
    auto candidates = enumerate_dominant(g, 60);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    for (int t = 0; t < 10; ++t) {
      const Weight& l = candidates[pick(rng)];
      std::uint64_t total = 0;
      for (const auto& [w, m] : lattice_weights(g, l)) total += static_cast<std::uint64_t>(m);
      CHECK(total == weyl_dim(g, l));
    }
  }
}
