#include "rankone/laurent.hpp"

#include <algorithm>

#include "rankone/rational.hpp"

namespace rankone {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("Laurent coefficient overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("Laurent coefficient overflow");
  return out;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coeff, std::int64_t degree) {
  LaurentPolynomial p;
  if (coeff != 0) {
    p.low_ = degree;
    p.coeffs_.assign(1, coeff);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::antisymmetric(std::int64_t d) {
  return monomial(1, d) + monomial(-1, -d);
}

std::int64_t LaurentPolynomial::coefficient(std::int64_t degree) const noexcept {
  if (coeffs_.empty() || degree < low_ || degree > max_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree - low_)];
}

void LaurentPolynomial::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  std::int64_t lo = std::min(low_, rhs.low_);
  std::int64_t hi = std::max(max_degree(), rhs.max_degree());
  std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    auto& slot = out[static_cast<std::size_t>(rhs.low_ - lo) + i];
    slot = checked_add(slot, rhs.coeffs_[i]);
  }
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = LaurentPolynomial();
  std::vector<std::int64_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  low_ += rhs.low_;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string LaurentPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::int64_t d = max_degree(); d >= low_; --d) {
    std::int64_t c = coefficient(d);
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || d == 0) out += std::to_string(a);
    if (d != 0) out += d == 1 ? "x" : "x^" + std::to_string(d);
  }
  return out;
}

}  // namespace rankone
