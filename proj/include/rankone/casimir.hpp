#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankone/weights.hpp"

namespace rankone {

// k -> a k^2 + two_b k + c, the Casimir eigenvalue along a string.
struct QuadraticPolynomial {
  Rational a;
  Rational two_b;
  Rational c;

  Rational b() const { return two_b / 2; }
  Rational operator()(const Rational& k) const { return (a * k + two_b) * k + c; }
  std::string str(char var = 'k') const;
  friend bool operator==(const QuadraticPolynomial&, const QuadraticPolynomial&) = default;
};

enum class CoincidenceKind { Identical, InfiniteShift, Finite };

std::string to_string(CoincidenceKind kind);

// All (k, h) in N0^2 with P(k) = Q(h).
//   Identical      P = Q, so exactly the diagonal.
//   InfiniteShift  P(k) = Q(k + m) identically; m != 0. For m < 0 read it as P(h - m) = Q(h).
//   Finite         `pairs` is the complete list.
struct CoincidenceResult {
  CoincidenceKind kind = CoincidenceKind::Finite;
  std::int64_t m = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  // Set by string_pair_analysis when the two strings are contragredient up to a shift:
  //   dual_orientation = +1:  base' + k w = dual(base + (k+h) w)
  //   dual_orientation = -1:  base' + (k+h) w = dual(base + k w)
  std::optional<std::int64_t> dual_related;
  int dual_orientation = 0;

  bool infinite() const noexcept { return kind != CoincidenceKind::Finite; }
};

// <L, L + 2 rho>. L must be dominant for `system`.
Rational casimir_eigenvalue(const RootSystem& system, const Weight& lambda);

QuadraticPolynomial string_polynomial(const RootSystem& system, const Weight& direction, const Weight& base);

// Throws DomainError when the leading coefficients differ.
CoincidenceResult quadratic_coincidences(const QuadraticPolynomial& p, const QuadraticPolynomial& q);

// Compares the strings base + N0 w and base' + N0 w. Condition (i) of the coincidence
// criterion is kind == Identical, condition (ii) is kind == InfiniteShift.
CoincidenceResult string_pair_analysis(const RootSystem& system, const Weight& direction, const Weight& base,
                                       const Weight& other);

// The h >= 0 and orientation making the two strings contragredient, if any.
std::optional<std::pair<std::int64_t, int>> dual_relation(const RootSystem& system, const Weight& direction,
                                                          const Weight& base, const Weight& other);

}  // namespace rankone
