#include "json_io.hpp"

namespace rankone::cli {

namespace {

template <class T>
Json array_of(const std::vector<T>& items) {
  Json out = Json::array();
  for (const auto& x : items) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json to_json(const Rational& r) {
  if (r.is_integer()) return r.to_integer();
  return r.str();
}

Json to_json(const Weight& w) {
  Json out = Json::array();
  for (const auto& c : w) out.push_back(to_json(c));
  return out;
}

Json to_json(const WeightMultiset& m) {
  Json out = Json::array();
  for (const auto& [w, c] : m) out.push_back({{"weight", to_json(w)}, {"multiplicity", c}});
  return out;
}

Json to_json(const CoincidenceResult& c) {
  Json pairs = Json::array();
  for (const auto& [k, h] : c.pairs) pairs.push_back({k, h});
  Json out{{"kind", to_string(c.kind)}, {"m", c.m}, {"pairs", pairs}};
  out["dual_related"] = c.dual_related ? Json(*c.dual_related) : Json(nullptr);
  if (c.dual_related) out["dual_orientation"] = c.dual_orientation;
  return out;
}

Json to_json(const StringSet& s) {
  Json out{{"pair", s.pair.key()}, {"n", s.pair.n()}, {"mu", to_json(s.mu)}, {"direction", to_json(s.direction)},
           {"bases", array_of(s.bases)}, {"closed_form", s.closed_form}};
  if (s.certified_bound) out["certified_bound"] = to_json(*s.certified_bound);
  out["warnings"] = s.warnings;
  return out;
}

Json to_json(const ConverseReport& r) {
  auto witnesses = [](const std::vector<StringPairWitness>& list) {
    Json out = Json::array();
    for (const auto& w : list) {
      out.push_back({{"base", to_json(w.base)}, {"other", to_json(w.other)}, {"coincidence", to_json(w.coincidence)}});
    }
    return out;
  };
  Json out{{"status", to_string(r.status)}, {"strings", to_json(r.strings)}, {"witnesses", witnesses(r.witnesses)},
           {"exempt", witnesses(r.exempt)}};
  if (!r.tame_summary.empty()) {
    Json tame = Json::array();
    for (const auto& e : r.tame_summary) {
      tame.push_back({{"eigenvalue", to_json(e.eigenvalue)}, {"tame", e.tame}, {"contributors", array_of(e.contributors)}});
    }
    out["tame_summary"] = tame;
  }
  out["notes"] = r.notes;
  return out;
}

Json to_json(const SpectrumTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json who = Json::array();
    for (const auto& c : row.contributors) {
      who.push_back({{"lambda", to_json(c.lambda)}, {"n_gamma", c.n_gamma}, {"branch", c.branch}});
    }
    rows.push_back({{"eigenvalue", to_json(row.eigenvalue)}, {"multiplicity", row.multiplicity}, {"contributors", who}});
  }
  return {{"bound", to_json(t.bound)}, {"rows", rows}};
}

Json to_json(const PFormDecomposition& d) {
  return {{"pair", d.pair.key()},
          {"n", d.pair.n()},
          {"p", d.p},
          {"source", to_string(d.source)},
          {"dimension", d.dimension()},
          {"constituents", to_json(d.constituents)}};
}

Json to_json(const PFormConverseReport& r) {
  Json per = Json::array();
  for (const auto& [mu, rep] : r.per_constituent) {
    per.push_back({{"mu", to_json(mu)}, {"status", to_string(rep.status)}, {"bases", array_of(rep.strings.bases)}});
  }
  return {{"decomposition", to_json(r.decomposition)}, {"per_constituent", per}, {"combined", to_json(r.combined)}};
}

Json to_json(const CoincidentFamily& f) {
  return {{"pair", f.pair.key()},
          {"n", f.pair.n()},
          {"mu", to_json(f.mu)},
          {"bases", array_of(f.bases)},
          {"shared_polynomial", f.shared_polynomial.str()}};
}

Json to_json(const ShiftedCoincidence& s) {
  return {{"pair", s.pair.key()}, {"n", s.pair.n()},         {"mu", to_json(s.mu)},
          {"base", to_json(s.base)}, {"other", to_json(s.other)}, {"m", s.m}};
}

Json to_json(const LensCounterexampleReport& r) {
  auto group = [](const TorusCyclicSubgroup& g) { return Json{{"q", g.q}, {"s", g.s}}; };
  Json out{{"n", r.n},
           {"q", r.q},
           {"gamma", group(r.gamma)},
           {"gamma_prime", group(r.gamma_prime)},
           {"plus", to_json(r.plus)},
           {"minus", to_json(r.minus)},
           {"n_gamma_plus", r.gamma_plus},
           {"n_gamma_prime_plus", r.gamma_prime_plus},
           {"n_gamma_minus", r.gamma_minus},
           {"n_gamma_prime_minus", r.gamma_prime_minus},
           {"diff_plus", r.diff_plus},
           {"diff_minus", r.diff_minus},
           {"expected_magnitude", r.expected_magnitude},
           {"bound", to_json(r.bound)},
           {"spectra_equal", r.spectra.equal},
           {"holds", r.holds()}};
  if (r.spectra.eigenvalue) out["first_difference"] = to_json(*r.spectra.eigenvalue);
  return out;
}

}  // namespace rankone::cli
