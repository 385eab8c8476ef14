#include "rankone/miner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace rankone {

namespace {

struct MuResult {
  std::vector<CoincidentFamily> families;
  std::vector<ShiftedCoincidence> shifted;
  bool skipped = false;
};

std::vector<Weight> representative_bases(const SymmetricPair& pair, const std::vector<Weight>& bases) {
  std::set<Weight> reps;
  for (const Weight& b : bases) reps.insert(family_representative(pair, b));
  return {reps.begin(), reps.end()};
}

}  // namespace

Weight family_representative(const SymmetricPair& pair, const Weight& lambda) {
  if (pair.kind() == PairKind::OddSphere) {
    Weight out = lambda;
    Rational& last = out[out.size() - 1];
    if (last < 0) last = -last;
    return out;
  }
  return std::min(lambda, dual_weight(pair.g(), lambda));
}

std::vector<CoincidentFamily> coincident_families(const SymmetricPair& pair, const Weight& mu_in) {
  const Weight mu = pair.k_weight(mu_in);
  auto bases = closed_form_bases(pair, mu);
  if (!bases) return {};
  const RootSystem& g = pair.g();
  const Weight& w = pair.direction();
  // (<w, L>, Casimir(L)) determines the string polynomial
  std::map<std::pair<Rational, Rational>, std::vector<Weight>> groups;
  for (const Weight& b : representative_bases(pair, *bases)) {
    groups[{inner(w, b), casimir_eigenvalue(g, b)}].push_back(b);
  }
  std::vector<CoincidentFamily> out;
  for (auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    QuadraticPolynomial poly = string_polynomial(g, w, members.front());
    out.push_back({pair, mu, std::move(members), poly});
  }
  return out;
}

std::vector<ShiftedCoincidence> shifted_coincidences(const SymmetricPair& pair, const Weight& mu_in) {
  const Weight mu = pair.k_weight(mu_in);
  auto bases = closed_form_bases(pair, mu);
  if (!bases) return {};
  const RootSystem& g = pair.g();
  const Weight& w = pair.direction();
  std::vector<Weight> reps = representative_bases(pair, *bases);
  std::vector<QuadraticPolynomial> polys;
  for (const Weight& b : reps) polys.push_back(string_polynomial(g, w, b));
  std::vector<ShiftedCoincidence> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i == j) continue;
      // P_i(k) = P_j(k + m) forces m = (b_i - b_j) / a
      Rational m = (polys[i].two_b - polys[j].two_b) / (Rational(2) * polys[i].a);
      if (m <= 0 || !m.is_integer() || polys[j](m) != polys[i].c) continue;
      if (dual_relation(g, w, reps[i], reps[j])) continue;
      out.push_back({pair, mu, reps[i], reps[j], m.to_integer()});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.base, x.other) < std::tie(y.base, y.other);
  });
  return out;
}

std::vector<Weight> enumerate_k_types(const SymmetricPair& pair, std::int64_t coord_bound) {
  if (coord_bound < 0) throw DomainError("coordinate bound must be non-negative");
  const RootSystem& k = pair.k();
  const std::size_t dim = k.dim();
  std::set<Weight> found;
  std::vector<std::int64_t> c(dim, -coord_bound);
  while (true) {
    bool non_increasing = true;
    for (std::size_t i = 1; i < dim; ++i) non_increasing = non_increasing && c[i - 1] >= c[i];
    if (non_increasing || pair.kind() == PairKind::ComplexProj || pair.kind() == PairKind::QuaternionProj) {
      Weight v(std::vector<Rational>(c.begin(), c.end()));
      Weight cv = k.canonical(v);
      if (k.is_dominant(cv)) found.insert(cv);
    }
    std::size_t i = 0;
    while (i < dim && c[i] == coord_bound) c[i++] = -coord_bound;
    if (i == dim) break;
    ++c[i];
  }
  return {found.begin(), found.end()};
}

MinerResult mine_coincident_families(const SymmetricPair& pair, std::int64_t coord_bound, const MinerOptions& options) {
  const std::vector<Weight> mus = enumerate_k_types(pair, coord_bound);
  std::vector<MuResult> results(mus.size());
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, mus.size()));
  const std::size_t chunk = (mus.size() + threads - 1) / threads;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(mus.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) {
          if (!has_closed_form(pair, mus[i])) {
            results[i].skipped = true;
            continue;
          }
          results[i].families = coincident_families(pair, mus[i]);
          if (options.shifted) results[i].shifted = shifted_coincidences(pair, mus[i]);
        }
      });
    }
  }
  MinerResult out;
  for (auto& r : results) {
    ++(r.skipped ? out.mu_skipped : out.mu_searched);
    std::move(r.families.begin(), r.families.end(), std::back_inserter(out.families));
    std::move(r.shifted.begin(), r.shifted.end(), std::back_inserter(out.shifted));
  }
  return out;
}

std::string format_table1(const std::vector<CoincidentFamily>& families) {
  std::ostringstream os;
  for (const auto& f : families) {
    os << f.pair.n() << ' ' << f.mu.str() << ' ' << f.bases.size();
    for (const Weight& b : f.bases) os << ' ' << b.str();
    os << '\n';
  }
  return os.str();
}

}  // namespace rankone
