#include "rankone/strings.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

#include "rankone/casimir.hpp"

namespace rankone {

namespace {

std::int64_t int_at(const Weight& w, std::size_t i) { return w[i].to_integer(); }

// SO(2n)/SO(2n-1): a1 = b1, b_i <= a_i <= b_{i-1}, |a_n| <= b_{n-1}.
std::vector<Weight> odd_sphere_bases(int n, const Weight& mu) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Weight> out;
  Weight a = Weight::zero(nn);
  a[0] = mu[0];
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == nn) {
      out.push_back(a);
      return;
    }
    const std::int64_t hi = int_at(mu, i - 1);
    const std::int64_t lo = i + 1 == nn ? -hi : int_at(mu, i);
    for (std::int64_t v = lo; v <= hi; ++v) {
      a[i] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

// SO(2n+1)/SO(2n): a1 = b1, b_i <= a_i <= b_{i-1} (i < n), |b_n| <= a_n <= b_{n-1}.
std::vector<Weight> even_sphere_bases(int n, const Weight& mu) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Weight> out;
  Weight a = Weight::zero(nn);
  a[0] = mu[0];
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == nn) {
      out.push_back(a);
      return;
    }
    const std::int64_t hi = int_at(mu, i - 1);
    const std::int64_t lo = i + 1 == nn ? std::abs(int_at(mu, i)) : int_at(mu, i);
    for (std::int64_t v = lo; v <= hi; ++v) {
      a[i] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

// SU(n+1): b_{j-1} >= a_j >= b_j for 2 <= j <= n with a_j - b_1 integral, then a_1 and
// a_{n+1} fixed by r = b_1 + b_n + sum a_j.
std::vector<Weight> su_bases(int n, const Weight& mu) {
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Weight> out;
  Weight a = Weight::zero(nn + 1);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == nn) {
      Rational r = mu[0] + mu[nn - 1];
      for (std::size_t i = 1; i < nn; ++i) r += a[i];
      a[0] = mu[0] + std::max(Rational(0), -r);
      a[nn] = mu[nn - 1] - std::max(Rational(0), r);
      out.push_back(a);
      return;
    }
    const std::int64_t span = (mu[j - 1] - mu[j]).to_integer();
    for (std::int64_t t = 0; t <= span; ++t) {
      a[j] = mu[j] + t;
      rec(j + 1);
    }
  };
  rec(1);
  return out;
}

// mu = eps_1 + ... + eps_m + s eps_{n+1} with m <= n-1.
std::optional<std::pair<int, std::int64_t>> sp_family(int n, const Weight& mu) {
  const auto nn = static_cast<std::size_t>(n);
  std::size_t m = 0;
  while (m < nn && mu[m] == 1) ++m;
  for (std::size_t i = m; i < nn; ++i) {
    if (mu[i] != 0) return std::nullopt;
  }
  if (static_cast<int>(m) > n - 1) return std::nullopt;
  return std::make_pair(static_cast<int>(m), int_at(mu, nn));
}

std::vector<Weight> sp_bases(int n, int m, std::int64_t s) {
  const auto d = static_cast<std::size_t>(n) + 1;
  auto make = [&](std::int64_t first, int last_one) {
    Weight w = Weight::zero(d);
    w[0] = first;
    for (int i = 2; i <= last_one; ++i) w[static_cast<std::size_t>(i - 1)] = 1;
    return w;
  };
  if (m == 0) return {make(s, 0)};
  std::vector<Weight> out{make(s + 1, m), make(s + 1, m + 2)};
  // For m = 1, (s+2) eps_1 + eps_2 is the second member of the string of (s+1) eps_1.
  if (m >= 2) out.push_back(make(s + 2, m + 1));
  if (s >= 1) out.push_back(make(s, m + 1));
  return out;
}

// mu = b1 upsilon_1 + b2 upsilon_2 = (b1+b2, b2, 0, 0).
std::optional<std::pair<std::int64_t, std::int64_t>> f4_family(const Weight& mu) {
  if (!mu[0].is_integer() || mu[2] != 0 || mu[3] != 0) return std::nullopt;
  return std::make_pair(int_at(mu, 0) - int_at(mu, 1), int_at(mu, 1));
}

std::vector<Weight> f4_bases(std::int64_t b1, std::int64_t b2) {
  std::vector<Weight> out;
  for (std::int64_t a3 = 0; a3 <= b2; ++a3) {
    for (std::int64_t a4 = 0; a3 + a4 <= b2; ++a4) {
      for (std::int64_t a2 = std::max<std::int64_t>(0, b2 - a3 - a4); a2 + a3 + a4 <= b1 + b2; ++a2) {
        const std::int64_t a1 = b1 + b2 - a2 - a3 - a4;
        out.push_back(Rational(a1) * f4_omega(1) + Rational(a2) * f4_omega(2) + Rational(a3) * f4_omega(3) +
                      Rational(a4) * f4_omega(4));
      }
    }
  }
  return out;
}

bool in_spectrum(const SymmetricPair& pair, const Weight& lambda, const Weight& mu) {
  return pair.g().is_dominant(lambda) && branch_multiplicity(pair, lambda, mu) > 0;
}

}  // namespace

std::optional<std::vector<Weight>> closed_form_bases(const SymmetricPair& pair, const Weight& mu_in) {
  Weight mu = pair.k_weight(mu_in);
  std::vector<Weight> out;
  switch (pair.kind()) {
    case PairKind::OddSphere: out = odd_sphere_bases(pair.n(), mu); break;
    case PairKind::EvenSphere: out = even_sphere_bases(pair.n(), mu); break;
    case PairKind::ComplexProj: out = su_bases(pair.n(), mu); break;
    case PairKind::QuaternionProj: {
      auto fam = sp_family(pair.n(), mu);
      if (!fam) return std::nullopt;
      out = sp_bases(pair.n(), fam->first, fam->second);
      break;
    }
    case PairKind::CayleyPlane: {
      auto fam = f4_family(mu);
      if (!fam) return std::nullopt;
      out = f4_bases(fam->first, fam->second);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_closed_form(const SymmetricPair& pair, const Weight& mu) { return closed_form_bases(pair, mu).has_value(); }

StringSet string_bases_bruteforce(const SymmetricPair& pair, const Weight& mu_in, const Rational& bound,
                                  unsigned threads) {
  Weight mu = pair.k_weight(mu_in);
  StringSet out{pair, mu, pair.direction(), {}, false, bound, {}};
  const RootSystem& g = pair.g();
  const std::vector<Weight> candidates = enumerate_dominant(g, bound);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, candidates.size()));
  std::vector<char> member(candidates.size(), 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < candidates.size(); i += threads) {
          member[i] = branch_multiplicity(pair, candidates[i], mu) > 0;
        }
      });
    }
  }
  std::set<Weight> spectrum;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (member[i]) spectrum.insert(candidates[i]);
  }

  const Weight& w = pair.direction();
  for (const Weight& lambda : spectrum) {
    // Anything below lambda on its string has smaller Casimir, so it is in the window if present.
    if (spectrum.count(lambda - w)) continue;
    out.bases.push_back(lambda);
    std::int64_t members = 0;
    for (Weight x = lambda; casimir_eigenvalue(g, x) <= bound; x += w) {
      if (!spectrum.count(x)) {
        throw StringDecompositionError("string through " + lambda.str() + " breaks at " + x.str());
      }
      ++members;
    }
    if (members < 2) {
      out.warnings.push_back("string of " + lambda.str() + " has " + std::to_string(members) +
                             " member below the bound");
    }
  }
  return out;
}

StringSet string_bases(const SymmetricPair& pair, const Weight& mu_in, const Rational& fallback_bound) {
  Weight mu = pair.k_weight(mu_in);
  if (auto bases = closed_form_bases(pair, mu)) return StringSet{pair, mu, pair.direction(), std::move(*bases), true, std::nullopt, {}};
  return string_bases_bruteforce(pair, mu, fallback_bound);
}

StringVerification verify_string_decomposition(const SymmetricPair& pair, const Weight& mu_in, const Rational& bound) {
  Weight mu = pair.k_weight(mu_in);
  StringVerification rep;
  rep.bound = bound;
  const RootSystem& g = pair.g();
  StringSet searched = string_bases_bruteforce(pair, mu, bound);
  rep.searched = searched.bases;
  rep.notes = searched.warnings;
  auto closed = closed_form_bases(pair, mu);
  if (!closed) {
    rep.agree = true;
    rep.notes.push_back("no closed form; search result only");
    return rep;
  }
  rep.closed_form_available = true;
  for (const Weight& b : *closed) {
    if (casimir_eigenvalue(g, b) <= bound) rep.closed_form.push_back(b);
    if (!in_spectrum(pair, b, mu)) rep.notes.push_back("closed-form base " + b.str() + " does not contain mu");
  }
  std::set_difference(rep.closed_form.begin(), rep.closed_form.end(), rep.searched.begin(), rep.searched.end(),
                      std::back_inserter(rep.only_closed_form));
  std::set_difference(rep.searched.begin(), rep.searched.end(), rep.closed_form.begin(), rep.closed_form.end(),
                      std::back_inserter(rep.only_searched));
  rep.agree = rep.only_closed_form.empty() && rep.only_searched.empty();
  return rep;
}

}  // namespace rankone
