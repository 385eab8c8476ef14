// Acceptance gate: one line per criterion with timing and limit.
//
// A criterion that cannot be met as stated prints FAIL together with the reason. The
// process exits non-zero only for failures without a documented reason, or overruns.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "witness_check.hpp"
#include "rankone/branching.hpp"
#include "rankone/casimir.hpp"
#include "rankone/converse.hpp"
#include "rankone/lens.hpp"
#include "rankone/miner.hpp"
#include "rankone/pform.hpp"
#include "rankone/strings.hpp"
#include "verify.hpp"

using namespace rankone;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::optional<std::string> documented;  // reason when the criterion cannot hold as stated
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Verdict()> run;
};

Weight padded(std::vector<std::int64_t> head, int dim) {
  std::vector<Rational> c(static_cast<std::size_t>(dim), 0);
  for (std::size_t i = 0; i < head.size(); ++i) c[i] = head[i];
  return Weight(std::move(c));
}

// Runs a verify suite and folds it into one verdict, keeping only ids with `prefix`.
Verdict from_suite(const std::string& suite, const std::vector<std::string>& prefixes) {
  Verdict v;
  std::size_t total = 0, failed = 0;
  for (const auto& o : cli::verify_suite(suite, 4)) {
    bool keep = prefixes.empty() || std::any_of(prefixes.begin(), prefixes.end(), [&](const std::string& p) {
                  return o.check_id.rfind(p, 0) == 0;
                });
    if (!keep) continue;
    ++total;
    if (!o.pass) {
      ++failed;
      v.pass = false;
      v.detail += " [" + o.check_id + ": expected " + o.expected + ", got " + o.actual + "]";
    }
  }
  v.detail = std::to_string(total - failed) + "/" + std::to_string(total) + " checks" + v.detail;
  if (total == 0) v.pass = false;
  return v;
}

Verdict casimir_examples() {
  Verdict v;
  std::size_t ok = 0, total = 0;
  auto expect = [&](const RootSystem& g, const Weight& l, std::int64_t want) {
    ++total;
    if (casimir_eigenvalue(g, l) == want) {
      ++ok;
    } else {
      v.pass = false;
    }
  };
  auto d3 = RootSystem::classical(Family::D, 3);
  auto b3 = RootSystem::classical(Family::B, 3);
  expect(d3, Weight{4, 4, 0}, 56);
  expect(d3, Weight{4, 3, 3}, 56);
  expect(b3, Weight{4, 4, 1}, 66);
  expect(b3, Weight{4, 3, 3}, 66);
  bool b_literal = true, b_corrected = true;
  for (int n = 4; n <= 8; ++n) {
    auto dn = RootSystem::classical(Family::D, n);
    auto bn = RootSystem::classical(Family::B, n);
    for (const auto& head : {std::vector<std::int64_t>{4, 4, 1, 1}, std::vector<std::int64_t>{4, 3, 3}}) {
      expect(dn, padded(head, n), 20 * n - 4);
      const Rational c = casimir_eigenvalue(bn, padded(head, n));
      b_literal = b_literal && c == 20 * n - 6;
      b_corrected = b_corrected && c == 20 * n + 6;
    }
  }
  v.detail = std::to_string(ok) + "/" + std::to_string(total) + " D3/B3/D_n values exact; B_n n=4..8 gives " +
             (b_corrected ? "20n+6" : "other values") + (b_literal ? "" : ", not 20n-6");
  if (!b_literal) {
    v.pass = false;
    if (b_corrected && ok == total) {
      v.documented = "the stated 20n-6 for B_n is off by 12: the B_3 value 66 = 20*3+6 and every n=4..8 gives 20n+6";
    }
  }
  return v;
}

struct Row {
  int n;
  Weight mu;
  std::vector<Weight> bases;
};

Verdict table1_mining() {
  // rows as printed; [17,13] carries [17,16,10]
  const std::vector<Row> rows = {
      {3, Weight{4, 3}, {Weight{4, 3, 3}, Weight{4, 4, 0}}},
      {3, Weight{17, 13}, {Weight{17, 14, 10}, Weight{17, 16, 10}, Weight{17, 17, 1}}},
      {4, Weight{4, 3, 1}, {Weight{4, 3, 3, 0}, Weight{4, 4, 1, 1}}},
      {4, Weight{8, 6, 2}, {Weight{8, 6, 6, 2}, Weight{8, 7, 5, 0}, Weight{8, 8, 3, 1}}},
      {5, Weight{4, 3, 1, 0}, {Weight{4, 3, 3, 0, 0}, Weight{4, 4, 1, 1, 0}}},
      {5, Weight{6, 5, 4, 2}, {Weight{6, 5, 4, 4, 1}, Weight{6, 5, 5, 2, 2}, Weight{6, 6, 4, 2, 0}}},
  };
  const std::vector<std::pair<int, std::int64_t>> searches = {{3, 17}, {4, 8}, {5, 6}};
  std::map<int, std::vector<CoincidentFamily>> mined;
  for (auto [n, bound] : searches) {
    mined[n] = mine_coincident_families(SymmetricPair::odd_sphere(n), bound, {4, false}).families;
  }
  Verdict v;
  std::size_t matched = 0;
  std::string missing;
  bool only_known_misprint = true;
  for (const auto& row : rows) {
    std::vector<Weight> want = row.bases;
    std::sort(want.begin(), want.end());
    const auto& fams = mined[row.n];
    bool hit = std::any_of(fams.begin(), fams.end(),
                           [&](const CoincidentFamily& f) { return f.mu == row.mu && f.bases == want; });
    if (hit) {
      ++matched;
      continue;
    }
    v.pass = false;
    missing += " " + row.mu.str();
    if (row.mu != Weight{17, 13}) only_known_misprint = false;
  }
  // the row as corrected
  std::vector<Weight> fixed = {Weight{17, 14, 10}, Weight{17, 16, 6}, Weight{17, 17, 1}};
  bool fixed_hit = std::any_of(mined[3].begin(), mined[3].end(),
                               [&](const CoincidentFamily& f) { return f.mu == Weight{17, 13} && f.bases == fixed; });
  v.detail = std::to_string(matched) + "/" + std::to_string(rows.size()) + " printed rows mined exactly";
  if (!missing.empty()) v.detail += "; not emitted:" + missing;
  v.detail += fixed_hit ? "; [17,13] emitted as [17,14,10] [17,16,6] [17,17,1]" : "; [17,13] corrected row missing";
  if (!v.pass && only_known_misprint && fixed_hit) {
    auto d3 = RootSystem::classical(Family::D, 3);
    v.documented = "printed base [17,16,10] has Casimir " + casimir_eigenvalue(d3, Weight{17, 16, 10}).str() +
                   ", the other two have " + casimir_eigenvalue(d3, Weight{17, 14, 10}).str() +
                   "; [17,16,6] restores the family";
  }
  return v;
}

Verdict lens_pairs() {
  Verdict v;
  std::ostringstream d;
  for (auto [n, q] : {std::pair{2, std::int64_t{3}}, std::pair{4, std::int64_t{5}}}) {
    auto r = verify_lens_counterexample(n, q, 100);
    const bool ok = std::abs(r.diff_plus) == static_cast<std::int64_t>(oracle::binomial(n, n / 2)) &&
                    r.diff_plus == -r.diff_minus && r.spectra.equal;
    v.pass = v.pass && ok;
    d << "n=" << n << " q=" << q << ": diff+=" << r.diff_plus << " diff-=" << r.diff_minus
      << (r.spectra.equal ? " spectra equal<=100" : " spectra differ") << "; ";
  }
  v.detail = d.str();
  return v;
}

Verdict string_decompositions() {
  struct Job {
    SymmetricPair pair;
    std::vector<Weight> mus;
  };
  std::vector<Job> jobs;
  for (const auto& pair :
       {SymmetricPair::odd_sphere(3), SymmetricPair::even_sphere(3), SymmetricPair::complex_projective(3)}) {
    jobs.push_back({pair, enumerate_k_types(pair, 4)});
  }
  for (int n = 2; n <= 3; ++n) {
    Job sp{SymmetricPair::quaternion_projective(n), {}};
    for (int m = 0; m <= 2; ++m) {
      for (int s = 0; s <= 3; ++s) {
        Weight mu = Weight::zero(static_cast<std::size_t>(n + 1));
        for (int i = 0; i < m; ++i) mu[static_cast<std::size_t>(i)] = 1;
        mu[static_cast<std::size_t>(n)] = s;
        sp.mus.push_back(mu);
      }
    }
    jobs.push_back(sp);
  }
  Job f4{SymmetricPair::cayley_plane(), {}};
  for (int b = 0; b <= 4; ++b) f4.mus.push_back(Rational(b) * spin9_upsilon(1));
  jobs.push_back(f4);

  Verdict v;
  std::size_t compared = 0, agreed = 0, no_closed_form = 0;
  std::string bad;
  for (const auto& job : jobs) {
    for (const Weight& mu : job.mus) {
      auto res = verify_string_decomposition(job.pair, mu, 200);
      if (!res.closed_form_available) {
        // Sp with m = n lies outside the closed-form family; only the search's own consistency
        ++no_closed_form;
        if (!res.agree) {
          v.pass = false;
          bad += " " + job.pair.key() + std::to_string(job.pair.n()) + ":" + mu.str() + "(search)";
        }
        continue;
      }
      ++compared;
      if (res.agree) {
        ++agreed;
      } else {
        v.pass = false;
        bad += " " + job.pair.key() + std::to_string(job.pair.n()) + ":" + mu.str();
      }
    }
  }
  v.detail = std::to_string(agreed) + "/" + std::to_string(compared) + " closed forms equal the search at bound 200";
  if (no_closed_form) {
    v.detail += "; " + std::to_string(no_closed_form) + " Sp mu with m = n have no closed form, search consistent";
  }
  if (!bad.empty()) v.detail += "; disagree:" + bad;
  return v;
}

Verdict converse_verdicts() {
  std::vector<SymmetricPair> pairs = {SymmetricPair::odd_sphere(3),         SymmetricPair::odd_sphere(4),
                                      SymmetricPair::even_sphere(3),        SymmetricPair::even_sphere(4),
                                      SymmetricPair::complex_projective(3), SymmetricPair::complex_projective(4),
                                      SymmetricPair::quaternion_projective(2), SymmetricPair::quaternion_projective(3)};
  Verdict v;
  std::size_t holds = 0, covered = 0, confirmed = 0, unconfirmed = 0;
  std::map<std::string, std::size_t> by_condition;  // condition -> confirmed counterexamples
  std::string bad;
  auto run_grid = [&](const SymmetricPair& pair, const std::vector<Weight>& mus) {
    for (const Weight& mu : mus) {
      auto conds = corollary_conditions(pair, mu);
      if (conds.empty()) continue;
      ++covered;
      auto rep = check_converse_hypotheses(pair, mu);
      if (rep.status == ConverseStatus::Holds) {
        ++holds;
        continue;
      }
      v.pass = false;
      bool ok = rep.status == ConverseStatus::FailsWithWitness && !rep.witnesses.empty();
      for (const auto& w : rep.witnesses) ok = ok && oracle::confirmed_witness(pair, mu, w);
      if (ok) {
        ++confirmed;
        for (const auto& c : conds) ++by_condition[pair.key() + ":" + c.name];
      } else {
        ++unconfirmed;
        bad += " " + pair.key() + std::to_string(pair.n()) + ":" + mu.str();
      }
    }
  };
  for (const auto& pair : pairs) run_grid(pair, enumerate_k_types(pair, 5));
  std::vector<Weight> f4_mus;
  for (int b = 0; b <= 6; ++b) f4_mus.push_back(Rational(b) * spin9_upsilon(1));
  run_grid(SymmetricPair::cayley_plane(), f4_mus);

  Verdict witnesses = from_suite("examples", {"converse.", "pform."});
  v.detail = std::to_string(holds) + "/" + std::to_string(covered) + " sufficient-condition cases hold";
  if (confirmed) {
    v.detail += "; " + std::to_string(confirmed) + " fail with independently confirmed witnesses (";
    bool first = true;
    for (const auto& [name, count] : by_condition) {
      v.detail += (first ? "" : ", ") + name + " x" + std::to_string(count);
      first = false;
    }
    v.detail += ")";
  }
  if (!bad.empty()) v.detail += "; unconfirmed:" + bad;
  v.detail += "; counterexample witnesses " + witnesses.detail;
  if (!witnesses.pass) v.pass = false;
  if (!v.pass && unconfirmed == 0 && witnesses.pass) {
    v.documented =
        "the odd-orthogonal bounds on b1-|bn| and b2-|bn| and the SU two-jump (s = m-l) and one-jump conditions "
        "admit counterexamples; each one is confirmed by interlacing and root-sum Casimir oracles";
  }
  return v;
}

Verdict property_suites() {
  Verdict v;
  std::mt19937_64 rng(20261016);
  std::ostringstream d;

  // Freudenthal totals on 200 random dominant weights
  const std::vector<RootSystem> systems = {
      RootSystem::classical(Family::A, 3), RootSystem::classical(Family::B, 3), RootSystem::classical(Family::C, 3),
      RootSystem::classical(Family::D, 4), RootSystem::f4()};
  std::size_t freud_ok = 0;
  for (int t = 0; t < 200; ++t) {
    const auto& g = systems[static_cast<std::size_t>(t) % systems.size()];
    auto cands = enumerate_dominant(g, g.family() == Family::F4 ? 80 : 120);
    const Weight& l = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    std::uint64_t total = 0;
    for (const auto& [w, m] : lattice_weights(g, l)) total += static_cast<std::uint64_t>(m);
    if (total == weyl_dim(g, l)) ++freud_ok;
  }
  v.pass = v.pass && freud_ok == 200;
  d << "freudenthal " << freud_ok << "/200; ";

  // branching dimension conservation
  std::size_t br_ok = 0, br_total = 0;
  for (const auto& pair : {SymmetricPair::odd_sphere(4), SymmetricPair::even_sphere(3),
                           SymmetricPair::complex_projective(3), SymmetricPair::quaternion_projective(2),
                           SymmetricPair::cayley_plane()}) {
    auto cands = enumerate_dominant(pair.g(), 60);
    for (int t = 0; t < 20; ++t) {
      const Weight& l = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
      std::uint64_t total = 0;
      for (const auto& [mu, m] : restrict_to_k(pair, l)) total += static_cast<std::uint64_t>(m) * weyl_dim(pair.k(), mu);
      ++br_total;
      if (total == weyl_dim(pair.g(), l)) ++br_ok;
    }
  }
  v.pass = v.pass && br_ok == br_total;
  d << "branching dims " << br_ok << "/" << br_total << "; ";

  // dual involution and Casimir invariance
  std::size_t dual_ok = 0, dual_total = 0;
  for (const auto& g : systems) {
    for (const Weight& l : enumerate_dominant(g, 60)) {
      ++dual_total;
      const Weight du = dual_weight(g, l);
      if (dual_weight(g, du) == l && g.is_dominant(du) && casimir_eigenvalue(g, du) == casimir_eigenvalue(g, l) &&
          weyl_dim(g, du) == weyl_dim(g, l)) {
        ++dual_ok;
      }
    }
  }
  v.pass = v.pass && dual_ok == dual_total;
  d << "dual " << dual_ok << "/" << dual_total << "; ";

  // coincidences of 100 random string pairs against 500 evaluated terms
  std::size_t qc_ok = 0;
  const std::vector<SymmetricPair> pairs = {SymmetricPair::odd_sphere(3), SymmetricPair::even_sphere(4),
                                            SymmetricPair::complex_projective(3), SymmetricPair::cayley_plane()};
  for (int t = 0; t < 100; ++t) {
    const auto& pair = pairs[static_cast<std::size_t>(t) % pairs.size()];
    auto cands = enumerate_dominant(pair.g(), 150);
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
    const Weight& a = cands[pick(rng)];
    const Weight& b = cands[pick(rng)];
    auto p = string_polynomial(pair.g(), pair.direction(), a);
    auto q = string_polynomial(pair.g(), pair.direction(), b);
    auto r = quadratic_coincidences(p, q);
    auto brute = oracle::brute_coincidences(p, q, 499);
    bool ok = true;
    if (r.kind == CoincidenceKind::Identical) {
      ok = brute.size() == 500 && std::all_of(brute.begin(), brute.end(), [](auto kh) { return kh.first == kh.second; });
    } else if (r.kind == CoincidenceKind::InfiniteShift) {
      for (const auto& [k, h] : brute) ok = ok && h - k == r.m;
      ok = ok && brute.size() >= 400;
    } else {
      std::set<std::pair<std::int64_t, std::int64_t>> within;
      for (const auto& kh : r.pairs) {
        if (kh.first <= 499 && kh.second <= 499) within.insert(kh);
      }
      ok = within == brute;
    }
    if (ok) ++qc_ok;
  }
  v.pass = v.pass && qc_ok == 100;
  d << "coincidences " << qc_ok << "/100";
  v.detail = d.str();
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "casimir-worked-examples", 1, casimir_examples},
      {2, "family-table-mining", 300, table1_mining},
      {3, "lens-isospectral-pairs", 120, lens_pairs},
      {4, "string-decompositions", 600, string_decompositions},
      {5, "converse-verdicts", 600, converse_verdicts},
      {6, "f4-seven-form-spectra", 900, [] { return from_suite("table2", {}); }},
      {7, "pform-tables", 600, [] { return from_suite("pform", {"pform."}); }},
      {8, "property-suites", 600, property_suites},
  };
  int hard_failures = 0, documented = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = v.pass && in_time;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << " " << c.name << "  [" << timing << "]  " << v.detail;
    if (!in_time) std::cout << "  (time limit exceeded)";
    if (!v.pass && v.documented && in_time) {
      std::cout << "  documented deviation: " << *v.documented;
      ++documented;
    } else if (!pass) {
      ++hard_failures;
    }
    std::cout << '\n';
  }
  std::cout << "summary: " << criteria.size() - static_cast<std::size_t>(hard_failures + documented) << " pass, "
            << documented << " fail with documented deviation, " << hard_failures << " fail\n";
  return hard_failures == 0 ? 0 : 3;
}
