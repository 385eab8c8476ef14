#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rankone {

// Dense integer Laurent polynomial in one variable.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(std::int64_t coeff, std::int64_t degree);
  // x^d - x^{-d}
  static LaurentPolynomial antisymmetric(std::int64_t d);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t min_degree() const noexcept { return low_; }
  std::int64_t max_degree() const noexcept { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::int64_t coefficient(std::int64_t degree) const noexcept;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  std::string str() const;

 private:
  void trim();
  std::int64_t low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace rankone
