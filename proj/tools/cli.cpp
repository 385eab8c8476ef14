#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "json_io.hpp"
#include "verify.hpp"

namespace rankone::cli {

namespace {

struct Options {
  std::string format = "json";
  unsigned threads = 0;
  std::string system, pair_key, lambda, mu, direction, other, suite = "all", s;
  int n = 0;
  int p = 0;
  std::int64_t q = 1;
  std::int64_t coord_bound = 5;
  std::string bound;
  std::optional<std::int64_t> tame;
  bool report = false, verify = false, generic = false, shifted = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }
  bool text() const { return o_.format == "text"; }
  SymmetricPair pair() const { return SymmetricPair::parse(o_.pair_key, o_.n); }
  Rational bound(const Rational& fallback) const { return o_.bound.empty() ? fallback : Rational::parse(o_.bound); }

  int rho() {
    auto g = RootSystem::parse(o_.system);
    if (text()) {
      out_ << rankone::rho(g).str() << '\n';
    } else {
      emit({{"system", g.name()}, {"rho", to_json(rankone::rho(g))}});
    }
    return 0;
  }

  int casimir() {
    auto g = RootSystem::parse(o_.system);
    Weight lambda = g.canonical(Weight::parse(o_.lambda));
    Rational value = casimir_eigenvalue(g, lambda);
    Json j{{"system", g.name()}, {"lambda", to_json(lambda)}, {"casimir", to_json(value)}};
    if (!o_.other.empty()) {
      if (o_.direction.empty()) throw DomainError("--other needs --direction");
      Weight w = g.canonical(Weight::parse(o_.direction));
      Weight other = g.canonical(Weight::parse(o_.other));
      j["polynomial"] = string_polynomial(g, w, lambda).str();
      j["other_polynomial"] = string_polynomial(g, w, other).str();
      j["coincidence"] = to_json(string_pair_analysis(g, w, lambda, other));
    }
    if (text()) {
      out_ << value.str() << '\n';
    } else {
      emit(j);
    }
    return 0;
  }

  int branch() {
    auto pr = pair();
    Weight lambda = pr.g_weight(Weight::parse(o_.lambda));
    if (o_.mu.empty()) {
      auto types = k_types(pr, lambda);
      if (text()) {
        for (const auto& [w, m] : types) out_ << w.str() << ' ' << m << '\n';
      } else {
        emit({{"pair", pr.key()}, {"lambda", to_json(lambda)}, {"k_types", to_json(types)}});
      }
      return 0;
    }
    Weight mu = pr.k_weight(Weight::parse(o_.mu));
    auto m = branch_multiplicity(pr, lambda, mu);
    if (text()) {
      out_ << m << '\n';
    } else {
      emit({{"pair", pr.key()}, {"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"multiplicity", m}});
    }
    return 0;
  }

  int restrict_f4() {
    auto parts = generic_restrict(Weight::parse(o_.lambda));
    if (text()) {
      for (const auto& [w, m] : parts) out_ << w.str() << ' ' << m << '\n';
    } else {
      emit(to_json(parts));
    }
    return 0;
  }

  int strings() {
    if (o_.mu.empty()) throw DomainError("strings needs --mu");
    auto pr = pair();
    Weight mu = pr.k_weight(Weight::parse(o_.mu));
    if (o_.verify) {
      auto v = verify_string_decomposition(pr, mu, bound(200));
      Json j{{"agree", v.agree},
             {"closed_form_available", v.closed_form_available},
             {"bound", to_json(v.bound)},
             {"only_closed_form", Json::array()},
             {"only_searched", Json::array()},
             {"notes", v.notes}};
      for (const auto& w : v.only_closed_form) j["only_closed_form"].push_back(to_json(w));
      for (const auto& w : v.only_searched) j["only_searched"].push_back(to_json(w));
      emit(j);
      return v.agree ? 0 : 3;
    }
    auto set = string_bases(pr, mu, bound(kDefaultStringBound));
    if (text()) {
      for (const auto& b : set.bases) out_ << b.str() << '\n';
    } else {
      emit(to_json(set));
    }
    return 0;
  }

  int analyze() {
    auto g = RootSystem::parse(o_.system);
    Weight w = g.canonical(Weight::parse(o_.direction));
    Weight base = g.canonical(Weight::parse(o_.lambda));
    Weight other = g.canonical(Weight::parse(o_.other));
    auto c = string_pair_analysis(g, w, base, other);
    if (text()) {
      out_ << to_string(c.kind) << " m=" << c.m << '\n';
    } else {
      Json j = to_json(c);
      j["polynomial"] = string_polynomial(g, w, base).str();
      j["other_polynomial"] = string_polynomial(g, w, other).str();
      emit(j);
    }
    return 0;
  }

  int converse() {
    auto pr = pair();
    ConverseOptions opts{bound(kDefaultStringBound), o_.tame};
    auto rep = check_converse_hypotheses(pr, Weight::parse(o_.mu), opts);
    if (text()) {
      out_ << to_string(rep.status) << '\n';
      for (const auto& w : rep.witnesses) {
        out_ << w.base.str() << ' ' << w.other.str() << ' ' << to_string(w.coincidence.kind) << '\n';
      }
    } else {
      Json j = to_json(rep);
      Json conditions = Json::array();
      for (const auto& c : corollary_conditions(pr, Weight::parse(o_.mu))) {
        conditions.push_back({{"name", c.name}, {"detail", c.detail}});
      }
      j["sufficient_conditions"] = conditions;
      emit(j);
    }
    return 0;
  }

  int lens_spectrum() {
    auto pr = pair();
    TorusCyclicSubgroup gamma{o_.q, {}};
    if (!o_.s.empty()) {
      // "1,2,3" or "[1,2,3]"
      for (const Rational& c : Weight::parse(o_.s.front() == '[' ? o_.s : "[" + o_.s + "]")) {
        if (!c.is_integer()) throw DomainError("--s entries must be integers");
        gamma.s.push_back(c.to_integer());
      }
    }
    if (gamma.s.size() != pr.g().dim()) {
      throw DomainError("--s needs " + std::to_string(pr.g().dim()) + " entries for " + pr.g().name());
    }
    auto table = spectrum(pr, Weight::parse(o_.mu), gamma, bound(100));
    if (o_.format == "csv") {
      out_ << "eigenvalue,multiplicity\n";
      for (const auto& row : table.rows) out_ << row.eigenvalue.str() << ',' << row.multiplicity << '\n';
    } else if (text()) {
      for (const auto& row : table.rows) out_ << row.eigenvalue.str() << ' ' << row.multiplicity << '\n';
    } else {
      emit(to_json(table));
    }
    return 0;
  }

  int pform() {
    auto pr = pair();
    if (o_.report) {
      auto rep = pform_converse_report(pr, o_.p, {bound(kDefaultStringBound), std::nullopt});
      if (text()) {
        out_ << to_string(rep.combined.status) << '\n';
      } else {
        emit(to_json(rep));
      }
      return 0;
    }
    auto d = o_.generic ? tau_p_generic(pr, o_.p) : tau_p_constituents(pr, o_.p);
    if (text()) {
      for (const auto& [w, m] : d.constituents) out_ << w.str() << ' ' << m << '\n';
    } else {
      emit(to_json(d));
    }
    return 0;
  }

  int mine() {
    auto pr = pair();
    auto result = mine_coincident_families(pr, o_.coord_bound, {o_.threads, o_.shifted});
    if (o_.format == "table1" || text()) {
      out_ << format_table1(result.families);
      return 0;
    }
    Json fams = Json::array();
    for (const auto& f : result.families) fams.push_back(to_json(f));
    if (!o_.shifted) {
      emit(fams);
      return 0;
    }
    Json shifted = Json::array();
    for (const auto& s : result.shifted) shifted.push_back(to_json(s));
    emit({{"families", fams}, {"shifted", shifted}, {"mu_searched", result.mu_searched},
          {"mu_skipped", result.mu_skipped}});
    return 0;
  }

  int verify() {
    auto outcomes = verify_suite(o_.suite, o_.threads);
    bool all = true;
    Json j = Json::array();
    for (const auto& v : outcomes) {
      all = all && v.pass;
      if (text()) {
        out_ << (v.pass ? "PASS " : "FAIL ") << v.check_id << "  expected=" << v.expected << "  actual=" << v.actual
             << "  [" << v.source << "]\n";
      } else {
        j.push_back({{"check_id", v.check_id},
                     {"expected", v.expected},
                     {"actual", v.actual},
                     {"status", v.pass ? "pass" : "fail"},
                     {"source", v.source}});
      }
    }
    if (!text()) emit(j);
    return all ? 0 : 3;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Casimir strings, branching and spectra on compact rank-one symmetric spaces", "rankone"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv", "table1"}))
      ->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  auto add_pair = [&o](CLI::App* sub) {
    sub->add_option("--pair", o.pair_key, "so-odd | so-even | su | sp | f4")->required();
    sub->add_option("--n", o.n, "Rank parameter n");
  };

  auto* rho = app.add_subcommand("rho", "Half-sum of positive roots");
  rho->add_option("--system", o.system, "D3, B2, A3, C3, F4")->required();

  auto* casimir = app.add_subcommand("casimir", "Casimir eigenvalue <L, L + 2 rho>");
  casimir->add_option("--system", o.system)->required();
  casimir->add_option("--lambda", o.lambda, "Highest weight, e.g. [4,4,0]")->required();
  casimir->add_option("--direction", o.direction, "String direction, for --other");
  casimir->add_option("--other", o.other, "Second base: also compare the two strings");

  auto* branch = app.add_subcommand("branch", "Multiplicity of a K-type in a G-irreducible");
  add_pair(branch);
  branch->add_option("--lambda", o.lambda)->required();
  branch->add_option("--mu", o.mu, "K-type; omit to list every K-type");

  auto* restrict = app.add_subcommand("restrict-f4", "Restriction F4 -> Spin(9)");
  restrict->add_option("--lambda", o.lambda)->required();

  auto* strings = app.add_subcommand("strings", "String decomposition of the tau_mu-spherical dual");
  strings->add_option("--pair", o.pair_key, "so-odd | so-even | su | sp | f4");
  strings->add_option("--n", o.n);
  strings->add_option("--mu", o.mu);
  strings->add_option("--bound", o.bound, "Casimir bound for exhaustive search");
  strings->add_flag("--verify", o.verify, "Compare the closed form with exhaustive search");
  auto* analyze = strings->add_subcommand("analyze", "Coincidences between two strings");
  analyze->fallthrough();
  analyze->add_option("--system", o.system)->required();
  analyze->add_option("--direction", o.direction)->required();
  analyze->add_option("--base", o.lambda)->required();
  analyze->add_option("--other", o.other)->required();

  auto* converse = app.add_subcommand("converse", "Coincidence hypotheses of the converse for tau_mu");
  add_pair(converse);
  converse->add_option("--mu", o.mu)->required();
  converse->add_option("--bound", o.bound);
  converse->add_option("--tame", o.tame, "k_max for the tame-eigenvalue summary");

  auto* lens = app.add_subcommand("lens-spectrum", "tau-spectrum of a cyclic quotient");
  add_pair(lens);
  lens->add_option("--mu", o.mu)->required();
  lens->add_option("--q", o.q)->required();
  lens->add_option("--s", o.s, "Comma separated exponents, one per G coordinate")->required();
  lens->add_option("--bound", o.bound, "Casimir bound");

  auto* pform = app.add_subcommand("pform", "Decomposition of the p-form representation");
  add_pair(pform);
  pform->add_option("--p", o.p)->required();
  pform->add_flag("--report", o.report, "Run the converse check over all constituents");
  pform->add_flag("--generic", o.generic, "Exterior-power computation instead of the table");
  pform->add_option("--bound", o.bound);

  auto* mine = app.add_subcommand("mine", "Search for string families with equal eigenvalues");
  add_pair(mine);
  mine->add_option("--bound", o.coord_bound, "Cap on |mu_i|")->capture_default_str();
  mine->add_flag("--shifted", o.shifted, "Also report shifted coincidences");

  auto* verify = app.add_subcommand("verify", "Re-derive published tables and examples");
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"examples", "table1", "table2", "lens", "theorem44", "pform", "all"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Runner run(o, out);
  try {
    if (*rho) return run.rho();
    if (*casimir) return run.casimir();
    if (*branch) return run.branch();
    if (*restrict) return run.restrict_f4();
    if (*analyze) return run.analyze();
    if (*strings) return run.strings();
    if (*converse) return run.converse();
    if (*lens) return run.lens_spectrum();
    if (*pform) return run.pform();
    if (*mine) return run.mine();
    if (*verify) return run.verify();
  } catch (const std::invalid_argument& e) {
    // DomainError and malformed literals
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace rankone::cli
