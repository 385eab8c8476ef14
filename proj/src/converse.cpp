#include "rankone/converse.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rankone {

namespace {

std::int64_t coef(const Weight& w, std::size_t i) { return i < w.size() ? w[i].to_integer() : 0; }

using Tuple = std::vector<std::int64_t>;

// Enumerate (a_2..a_n) with b_{i-1} >= a_i >= b_i and a caller-supplied range for a_n.
FormInjectivity injectivity(int n, const Weight& mu, std::int64_t last_lo, std::int64_t last_hi,
                            const std::function<std::int64_t(std::size_t, std::int64_t)>& term) {
  FormInjectivity out;
  const auto nn = static_cast<std::size_t>(n);
  std::map<std::int64_t, Tuple> seen;
  Tuple a(nn - 1, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t idx, std::int64_t value) {
    // idx indexes a_{idx+2}
    if (idx == nn - 1) {
      ++out.set_size;
      auto [it, fresh] = seen.emplace(value, a);
      if (!fresh && !out.witness) {
        out.injective = false;
        out.witness = std::make_pair(it->second, a);
      }
      return;
    }
    const std::size_t i = idx + 2;  // 1-based coordinate
    std::int64_t hi = coef(mu, i - 2);
    std::int64_t lo = i == nn ? last_lo : coef(mu, i - 1);
    if (i == nn) hi = std::min(hi, last_hi);
    for (std::int64_t v = lo; v <= hi; ++v) {
      a[idx] = v;
      rec(idx + 1, value + term(i, v));
    }
  };
  rec(0, 0);
  return out;
}

bool all_equal_except(const std::vector<std::int64_t>& b, std::size_t skip) {
  // b_i == b_{i+1} for every 1-based i != skip
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (i != skip && b[i - 1] != b[i]) return false;
  }
  return true;
}

struct SuShape {
  Rational beta;
  std::int64_t s;
};

// mu = pr(p + s eps_{n+1}) for the given first-n pattern p.
std::optional<SuShape> su_match(const Weight& mu, const std::vector<std::int64_t>& pattern) {
  const std::size_t n = pattern.size();
  Rational beta = mu[0] - pattern[0];
  for (std::size_t i = 1; i < n; ++i) {
    if (mu[i] - pattern[i] != beta) return std::nullopt;
  }
  Rational s = mu[n] - beta;
  if (!s.is_integer()) return std::nullopt;
  return SuShape{beta, s.to_integer()};
}

}  // namespace

std::string to_string(ConverseStatus status) {
  switch (status) {
    case ConverseStatus::Holds: return "holds";
    case ConverseStatus::FailsWithWitness: return "fails_with_witness";
    case ConverseStatus::Inconclusive: return "inconclusive";
  }
  return {};
}

std::vector<TameEntry> tame_classification(const StringSet& strings, std::int64_t k_max) {
  if (k_max < 0) throw DomainError("k_max must be non-negative");
  const RootSystem& g = strings.pair.g();
  std::map<Rational, std::vector<Weight>> by_value;
  std::optional<Rational> cutoff;
  for (const Weight& base : strings.bases) {
    QuadraticPolynomial p = string_polynomial(g, strings.direction, base);
    Rational top = p(k_max);
    if (!cutoff || top < *cutoff) cutoff = top;
    Weight x = base;
    for (std::int64_t k = 0; k <= k_max; ++k, x += strings.direction) by_value[p(k)].push_back(x);
  }
  std::vector<TameEntry> out;
  for (auto& [value, who] : by_value) {
    if (value > *cutoff) break;
    std::sort(who.begin(), who.end());
    bool tame = who.size() == 1 || (who.size() == 2 && dual_weight(g, who[0]) == who[1]);
    out.push_back({value, tame, std::move(who)});
  }
  return out;
}

std::vector<TameEntry> tame_classification(const SymmetricPair& pair, const Weight& mu, std::int64_t k_max) {
  return tame_classification(string_bases(pair, mu), k_max);
}

ConverseReport check_converse_hypotheses(const SymmetricPair& pair, const Weight& mu, const ConverseOptions& options) {
  return check_converse_hypotheses(string_bases(pair, mu, options.search_bound), options);
}

ConverseReport check_converse_hypotheses(StringSet strings, const ConverseOptions& options) {
  ConverseReport rep{ConverseStatus::Inconclusive, std::move(strings), {}, {}, {}, {}};
  const SymmetricPair& pair = rep.strings.pair;
  const auto& bases = rep.strings.bases;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      CoincidenceResult c = string_pair_analysis(pair.g(), rep.strings.direction, bases[i], bases[j]);
      if (!c.infinite()) continue;
      auto& bucket = c.dual_related ? rep.exempt : rep.witnesses;
      bucket.push_back({bases[i], bases[j], std::move(c)});
    }
  }
  if (!rep.witnesses.empty()) {
    rep.status = ConverseStatus::FailsWithWitness;
  } else if (!rep.strings.closed_form && !rep.strings.warnings.empty()) {
    rep.status = ConverseStatus::Inconclusive;
    rep.notes.push_back("search window too small to see every string twice");
  } else {
    rep.status = ConverseStatus::Holds;
  }
  if (rep.strings.certified_bound) {
    rep.notes.push_back("bases found by exhaustive search up to Casimir " + rep.strings.certified_bound->str());
  }
  if (options.tame_window) rep.tame_summary = tame_classification(rep.strings, *options.tame_window);
  return rep;
}

FormInjectivity form_injectivity_so_even(int n, const Weight& mu) {
  if (n < 2) throw DomainError("SO(2n) needs n >= 2");
  if (mu.size() != static_cast<std::size_t>(n - 1)) throw DomainError("mu must have n-1 coordinates");
  const std::int64_t last = coef(mu, static_cast<std::size_t>(n - 2));
  // n even: |a_n| <= b_{n-1}; n odd: 0 <= a_n <= b_{n-1} (the sign flip is the dual).
  const std::int64_t lo = n % 2 == 0 ? -last : 0;
  return injectivity(n, mu, lo, last, [n](std::size_t i, std::int64_t a) {
    return a * (a + 2 * (n - static_cast<std::int64_t>(i)));
  });
}

FormInjectivity form_injectivity_so_odd(int n, const Weight& mu) {
  if (n < 2) throw DomainError("SO(2n+1) needs n >= 2");
  if (mu.size() != static_cast<std::size_t>(n)) throw DomainError("mu must have n coordinates");
  const std::int64_t bn = std::abs(coef(mu, static_cast<std::size_t>(n - 1)));
  const std::int64_t hi = coef(mu, static_cast<std::size_t>(n - 2));
  return injectivity(n, mu, bn, hi, [n](std::size_t i, std::int64_t a) {
    return a * (a + 1 + 2 * (n - static_cast<std::int64_t>(i)));
  });
}

std::vector<SufficientCondition> corollary_conditions(const SymmetricPair& pair, const Weight& mu_in) {
  Weight mu = pair.k_weight(mu_in);
  std::vector<SufficientCondition> out;
  const int n = pair.n();
  switch (pair.kind()) {
    case PairKind::OddSphere: {
      std::vector<std::int64_t> b;
      for (const auto& x : mu) b.push_back(x.to_integer());
      if (n % 2 == 0 && b.back() != 0) break;
      b.push_back(0);  // b_n
      if (b[0] <= 3) out.push_back({"first-coefficient-at-most-3", "b1 <= 3"});
      for (std::size_t j = 2; j < b.size(); ++j) {
        if (all_equal_except(b, j)) {
          out.push_back({"single-jump", "b is constant except for one drop after position " + std::to_string(j)});
          break;
        }
      }
      if (b.size() < 3 || b[1] <= 2) out.push_back({"second-coefficient-at-most-2", "b2 <= 2"});
      break;
    }
    case PairKind::EvenSphere: {
      std::vector<std::int64_t> b;
      for (const auto& x : mu) b.push_back(x.to_integer());
      const std::int64_t bn = std::abs(b.back());
      if (b[0] - bn <= 3) out.push_back({"first-coefficient-at-most-3", "b1 - |bn| <= 3"});
      for (std::size_t j = 2; j <= b.size(); ++j) {
        if (all_equal_except(b, j)) {
          out.push_back({"single-jump", "b1..bn constant except possibly after position " + std::to_string(j)});
          break;
        }
      }
      if (b[1] - bn <= 2) out.push_back({"second-coefficient-at-most-2", "b2 - |bn| <= 2"});
      break;
    }
    case PairKind::ComplexProj: {
      const auto nn = static_cast<std::size_t>(n);
      for (int l = 0; l <= n && out.empty(); ++l) {
        for (int m = 0; l + m <= n; ++m) {
          std::vector<std::int64_t> p(nn, 0);
          for (int i = 0; i < l; ++i) p[static_cast<std::size_t>(i)] = 1;
          for (int i = n - m; i < n; ++i) p[static_cast<std::size_t>(i)] = -1;
          auto shape = su_match(mu, p);
          if (!shape) continue;
          const std::int64_t s = shape->s;
          bool ok = (l == m || s != 0) && !(l == m && 2 * l < n && s == 2 * (n - 2 * l));
          if (ok) {
            out.push_back({"two-unit-jumps", "mu = pr(e_1+..+e_" + std::to_string(l) + " - (last " + std::to_string(m) +
                                                 " of e_1..e_n) + " + std::to_string(s) + " e_{n+1})"});
            break;
          }
        }
      }
      for (int l = 1; l <= n - 1; ++l) {
        const std::int64_t t = (mu[0] - mu[nn - 1]).is_integer() ? (mu[0] - mu[nn - 1]).to_integer() : -1;
        if (t < 0) break;
        std::vector<std::int64_t> p(nn, 0);
        for (int i = 0; i < l; ++i) p[static_cast<std::size_t>(i)] = t;
        auto shape = su_match(mu, p);
        if (!shape) continue;
        const std::int64_t s = shape->s;
        if (!(s <= 0 || s >= t)) continue;
        const std::int64_t num = t - n + 2 * l - 3 * s;
        const bool bad = num % 3 == 0 && num / 3 >= 1 && num / 3 <= t - 1;
        if (bad) continue;
        out.push_back({"one-arbitrary-jump", "mu = pr(" + std::to_string(t) + "(e_1+..+e_" + std::to_string(l) + ") + " +
                                                 std::to_string(s) + " e_{n+1})"});
        break;
      }
      break;
    }
    case PairKind::QuaternionProj: {
      const auto nn = static_cast<std::size_t>(n);
      std::size_t m = 0;
      while (m < nn && mu[m] == 1) ++m;
      bool ok = static_cast<int>(m) <= n - 1;
      for (std::size_t i = m; i < nn; ++i) ok = ok && mu[i] == 0;
      if (ok) {
        out.push_back({"unit-block-plus-sp1", "mu = e_1+..+e_" + std::to_string(m) + " + " + mu[nn].str() + " e_{n+1}"});
      }
      break;
    }
    case PairKind::CayleyPlane:
      if (mu[1] == 0 && mu[2] == 0 && mu[3] == 0) {
        out.push_back({"multiple-of-upsilon1", "mu = " + mu[0].str() + " upsilon_1"});
      }
      break;
  }
  return out;
}

bool finite_window_check(const StringSet& strings, std::int64_t q, const std::set<Rational>& values,
                         std::int64_t n_required) {
  if (q < 1) throw DomainError("q must be positive");
  if (values.empty()) return false;
  const Rational top = *values.rbegin();
  for (const Weight& base : strings.bases) {
    QuadraticPolynomial p = string_polynomial(strings.pair.g(), strings.direction, base);
    std::vector<std::int64_t> hits(static_cast<std::size_t>(q), 0);
    for (std::int64_t k = 0; p(k) <= top; ++k) {
      if (values.count(p(k))) ++hits[static_cast<std::size_t>(k % q)];
    }
    for (auto h : hits) {
      if (h < n_required + 1) return false;
    }
  }
  return true;
}

bool finite_window_check(const SymmetricPair& pair, const Weight& mu, std::int64_t q, const std::set<Rational>& values,
                         std::int64_t n_required) {
  return finite_window_check(string_bases(pair, mu), q, values, n_required);
}

ThreeSphereReport three_sphere_coincidences(std::int64_t b, std::int64_t window) {
  if (b < 0 || window < 0) throw DomainError("b and window must be non-negative");
  ThreeSphereReport rep;
  rep.b = b;
  const QuadraticPolynomial p{1, 2 * b + 2, b * (b + 2)};
  for (std::int64_t a2 = 1; a2 <= b; ++a2) {
    QuadraticPolynomial q = p;
    q.c += a2 * a2;
    ThreeSphereShift s{a2, quadratic_coincidences(p, q), {}};
    if (s.coincidence.infinite()) rep.all_finite = false;
    for (auto [k, h] : s.coincidence.pairs) {
      if (k <= window && h <= window) s.in_window.emplace_back(k, h);
    }
    rep.shifts.push_back(std::move(s));
  }
  return rep;
}

}  // namespace rankone
