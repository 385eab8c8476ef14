#include "rankone/casimir.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace rankone {

namespace {

std::string coefficient_term(const Rational& c, const std::string& var, bool first) {
  if (c == 0) return {};
  std::string out;
  if (c.sign() < 0) out = "-";
  else if (!first) out = "+";
  Rational mag = c.abs();
  if (mag != 1 || var.empty()) out += mag.str();
  return out + var;
}

// Positive divisors of |t|, by trial division.
std::vector<std::int64_t> divisors(std::int64_t t) {
  if (t < 0) t = -t;
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d <= t / d; ++d) {
    if (t % d != 0) continue;
    small.push_back(d);
    if (d != t / d) large.push_back(t / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::string QuadraticPolynomial::str(char var) const {
  const std::string v(1, var);
  std::string out = coefficient_term(a, v + "^2", true);
  out += coefficient_term(two_b, v, out.empty());
  out += coefficient_term(c, "", out.empty());
  return out.empty() ? "0" : out;
}

std::string to_string(CoincidenceKind kind) {
  switch (kind) {
    case CoincidenceKind::Identical: return "identical";
    case CoincidenceKind::InfiniteShift: return "infinite_shift";
    case CoincidenceKind::Finite: return "finite";
  }
  return {};
}

Rational casimir_eigenvalue(const RootSystem& system, const Weight& lambda_in) {
  Weight lambda = system.canonical(lambda_in);
  system.require_dominant(lambda, "Casimir argument");
  return inner(lambda, lambda + Rational(2) * rho(system));
}

QuadraticPolynomial string_polynomial(const RootSystem& system, const Weight& direction_in, const Weight& base_in) {
  Weight w = system.canonical(direction_in);
  Weight base = system.canonical(base_in);
  system.require_dominant(w, "string direction");
  system.require_dominant(base, "string base");
  const Weight r = rho(system);
  return {inner(w, w), Rational(2) * inner(w, base + r), inner(base, base + Rational(2) * r)};
}

CoincidenceResult quadratic_coincidences(const QuadraticPolynomial& p, const QuadraticPolynomial& q) {
  if (p.a != q.a) throw DomainError("coincidence analysis needs equal leading coefficients");
  if (p.a.sign() <= 0) throw DomainError("leading coefficient must be positive");
  CoincidenceResult out;
  const Rational a = p.a, b = p.b(), bp = q.b();
  if (b == bp && p.c == q.c) {
    out.kind = CoincidenceKind::Identical;
    return out;
  }
  const Rational m = (b - bp) / a;
  const Rational beta = (b + bp) / a;
  // a (x - y + m)(x + y + beta) = rhs
  const Rational rhs = q.c - p.c + (b * b - bp * bp) / a;
  if (rhs == 0) {
    if (m.is_integer() && m != 0) {
      out.kind = CoincidenceKind::InfiniteShift;
      out.m = m.to_integer();
    }
    // Otherwise x - y + m can never vanish, so there is nothing to list.
    return out;
  }
  // Scale by a common denominator so that U = N(x-y+m), V = N(x+y+beta) are integers with U V = T.
  const std::int64_t n = std::lcm(m.den(), beta.den());
  const Rational t = Rational(n) * Rational(n) * rhs / a;
  if (!t.is_integer()) return out;
  const std::int64_t nm = (m * n).to_integer();
  const std::int64_t nbeta = (beta * n).to_integer();
  const std::int64_t tt = t.to_integer();
  for (std::int64_t v : divisors(tt)) {
    // V > 0 since x + y + beta > 0.
    if (mod(v - nbeta, n) != 0 || v < nbeta) continue;
    const std::int64_t u = tt / v;
    if (mod(u - nm, n) != 0) continue;
    const std::int64_t s = (v - nbeta) / n;
    const std::int64_t d = (u - nm) / n;
    if (std::abs(d) > s || mod(s - d, 2) != 0) continue;
    const std::int64_t x = (s + d) / 2, y = (s - d) / 2;
    if (p(x) == q(y)) out.pairs.emplace_back(x, y);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::optional<std::pair<std::int64_t, int>> dual_relation(const RootSystem& system, const Weight& direction_in,
                                                          const Weight& base_in, const Weight& other_in) {
  const Weight w = system.canonical(direction_in);
  const Weight base = system.canonical(base_in);
  const Weight other = system.canonical(other_in);
  // The relation has to hold for every k, which forces dual(w) = w.
  if (dual_weight(system, w) != w) return std::nullopt;
  const Rational ww = inner(w, w);
  auto shift_of = [&](const Weight& diff) -> std::optional<std::int64_t> {
    Rational h = inner(w, diff) / ww;
    if (!h.is_integer() || h.sign() < 0) return std::nullopt;
    if (diff != h * w) return std::nullopt;
    return h.to_integer();
  };
  // other = dual(base) + h w
  if (auto h = shift_of(other - dual_weight(system, base))) return std::make_pair(*h, +1);
  // dual(base) = other + h w
  if (auto h = shift_of(dual_weight(system, base) - other)) return std::make_pair(*h, -1);
  return std::nullopt;
}

CoincidenceResult string_pair_analysis(const RootSystem& system, const Weight& direction, const Weight& base,
                                       const Weight& other) {
  if (system.canonical(base) == system.canonical(other)) throw DomainError("string bases must differ");
  CoincidenceResult out = quadratic_coincidences(string_polynomial(system, direction, base),
                                                 string_polynomial(system, direction, other));
  if (auto rel = dual_relation(system, direction, base, other)) {
    out.dual_related = rel->first;
    out.dual_orientation = rel->second;
  }
  return out;
}

}  // namespace rankone
