#include "clifhom/cli.hpp"

#include "clifhom/clifford.hpp"
#include "clifhom/envalg.hpp"
#include "clifhom/gtrep.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace clifhom {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

Json rho_json(const HighestWeight& rho) {
  Json a = Json::array();
  for (long v : rho.entries()) a.push_back(v);
  return a;
}

Json conformal_json(const HighestWeight& rho, Sign sign) {
  const ConformalWeightTable t = conformal_table(rho, sign);
  Json rows = Json::array();
  for (int i = 1; i <= rho.m(); ++i)
    rows.push_back({{"i", i},
                    {"w", t.w[uz(i - 1)]},
                    {"gamma", to_string(t.gamma[uz(i - 1)])},
                    {"valid", static_cast<bool>(t.valid[uz(i - 1)])}});
  return rows;
}

Json terms_json(const std::vector<Term>& terms) {
  Json a = Json::array();
  for (const auto& t : terms) a.push_back({{"token", t.token}, {"coeff", to_string(t.coeff)}});
  return a;
}

Json coeffs_json(const std::vector<Rational>& c, const std::vector<bool>& valid) {
  Json a = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i)
    a.push_back({{"i", i + 1}, {"coeff", to_string(c[i])}, {"valid", static_cast<bool>(valid[i])}});
  return a;
}

// (coefficient, symbol) pairs joined as "a - b + 3 c".
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms,
                       const std::function<std::string(const Rational&)>& number) {
  std::string out;
  for (const auto& [c, sym] : terms) {
    if (sgn(c) == 0) continue;
    const Rational a = abs(c);
    std::string body = a == 1 ? sym : number(a) + " " + sym;
    if (out.empty())
      out = sgn(c) < 0 ? "-" + body : body;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::string latex_number(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string text_number(const Rational& r) { return to_string(r); }

std::string token_text(const std::string& token) { return token; }

std::string token_latex(const std::string& token) {
  if (token == "nabla*nabla") return "\\nabla^{*}\\nabla";
  if (token == "nabla10*nabla10") return "(\\nabla^{1,0})^{*}\\nabla^{1,0}";
  if (token == "nabla01*nabla01") return "(\\nabla^{0,1})^{*}\\nabla^{0,1}";
  if (token == "kappa") return "\\kappa";
  if (token == "2dbar.dbar*") return "2\\bar{\\partial}\\bar{\\partial}^{*}";
  if (token == "2dbar*.dbar") return "2\\bar{\\partial}^{*}\\bar{\\partial}";
  if (token.compare(0, 2, "R^") == 0) return "R^{" + token.substr(2) + "}_{\\rho}";
  return "\\mathrm{" + token + "}";
}

// Left side sorted by sign then index; invalid shifts dropped.
std::vector<std::pair<Rational, std::string>> left_terms(const BochnerIdentity& x, bool latex) {
  std::vector<std::pair<Rational, std::string>> out;
  auto gradient = [&](const char* s, int i) {
    const std::string idx = std::string(s) + std::to_string(i);
    return latex ? "D_{" + idx + "}^{*}D_{" + idx + "}" : "D" + idx + "*D" + idx;
  };
  for (int i = 1; i <= x.m(); ++i)
    if (x.minus_valid[uz(i - 1)]) out.emplace_back(x.minus_coeffs[uz(i - 1)], gradient("-", i));
  for (int i = 1; i <= x.m(); ++i)
    if (x.plus_valid[uz(i - 1)]) out.emplace_back(x.plus_coeffs[uz(i - 1)], gradient("+", i));
  for (const auto& t : x.operator_terms) out.emplace_back(t.coeff, latex ? token_latex(t.token) : token_text(t.token));
  return out;
}

std::vector<std::pair<Rational, std::string>> right_terms(const BochnerIdentity& x, bool latex) {
  std::vector<std::pair<Rational, std::string>> out;
  for (const auto& t : x.curvature_terms) out.emplace_back(t.coeff, latex ? token_latex(t.token) : token_text(t.token));
  return out;
}

Rational parse_rational_arg(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("malformed ") + what + " '" + text + "'");
  }
}

HighestWeight parse_weight_arg(const std::string& text) {
  try {
    return parse_weight(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json weights_json(const HighestWeight& rho) {
  Json casimir = Json::array();
  for (unsigned q = 0; q <= uz(2 * rho.m()); ++q)
    casimir.push_back({{"q", q},
                       {"plain", to_string(casimir_eigenvalue(rho, q, CasimirVariant::Plain))},
                       {"tilde", to_string(casimir_eigenvalue(rho, q, CasimirVariant::Tilde))}});
  return Json{{"schema", "clifhom.weights/1"},
              {"rho", rho_json(rho)},
              {"m", rho.m()},
              {"plus", conformal_json(rho, Sign::Plus)},
              {"minus", conformal_json(rho, Sign::Minus)},
              {"casimir", casimir}};
}

std::string weights_text(const HighestWeight& rho) {
  std::ostringstream os;
  os << "rho = " << rho.to_string() << ", m = " << rho.m() << "\n";
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    const ConformalWeightTable t = conformal_table(rho, s);
    for (int i = 1; i <= rho.m(); ++i)
      os << "  " << sign_symbol(s) << i << "  w = " << t.w[uz(i - 1)] << "  gamma = " << to_string(t.gamma[uz(i - 1)])
         << (t.valid[uz(i - 1)] ? "" : "  (invalid shift)") << "\n";
  }
  for (unsigned q = 0; q <= uz(2 * rho.m()); ++q)
    os << "  c_" << q << " = " << to_string(casimir_eigenvalue(rho, q, CasimirVariant::Plain)) << "  tilde c_" << q
       << " = " << to_string(casimir_eigenvalue(rho, q, CasimirVariant::Tilde)) << "\n";
  return os.str();
}

Json identity_json(const BochnerIdentity& x) {
  return Json{{"label", x.label},
              {"q", x.q},
              {"minus", coeffs_json(x.minus_coeffs, x.minus_valid)},
              {"plus", coeffs_json(x.plus_coeffs, x.plus_valid)},
              {"operators", terms_json(x.operator_terms)},
              {"curvature", terms_json(x.curvature_terms)}};
}

Json identities_json(const HighestWeight& rho, const std::vector<BochnerIdentity>& xs, const std::string& mode,
                     const unsigned* q) {
  Json j{{"schema", "clifhom.identity/1"}, {"rho", rho_json(rho)}, {"m", rho.m()}, {"mode", mode}};
  if (q) j["q"] = *q;
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(identity_json(x));
  j["identities"] = a;
  return j;
}

std::string identity_text(const BochnerIdentity& x) {
  return x.label + ": " + join_terms(left_terms(x, false), text_number) + " = " +
         join_terms(right_terms(x, false), text_number);
}

std::string identities_latex(const HighestWeight& rho, const std::vector<BochnerIdentity>& xs) {
  std::ostringstream os;
  os << "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n";
  os << "\\noindent Identities on $\\rho = " << rho.to_string() << "$.\n\\begin{align*}\n";
  for (std::size_t j = 0; j < xs.size(); ++j) {
    os << "  \\text{" << xs[j].label << ":}\\quad " << join_terms(left_terms(xs[j], true), latex_number) << " &= "
       << join_terms(right_terms(xs[j], true), latex_number) << (j + 1 < xs.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{align*}\n\\end{document}\n";
  return os.str();
}

Json estimate_json(const EigenvalueBound& b) {
  return Json{{"schema", "clifhom.estimate/1"},
              {"m", b.m},
              {"bound_coefficient", to_string(b.bound_coefficient)},
              {"witness_p", b.witness_p}};
}

Json spinor_table_json(int m) {
  Json degrees = Json::array();
  for (int p = 0; p <= m; ++p) {
    Json rows = Json::array();
    for (const auto& r : spinor_table(m, p))
      rows.push_back({{"label", r.label},
                      {"sign", sign_symbol(r.sign)},
                      {"index", r.index},
                      {"w", r.w},
                      {"gamma", to_string(r.gamma)}});
    degrees.push_back({{"p", p}, {"rows", rows}});
  }
  return Json{{"schema", "clifhom.spinor-table/1"}, {"m", m}, {"degrees", degrees}};
}

Json report_json(const VerificationReport& r, const Json& family) {
  Json items = Json::array();
  for (const auto& it : r.items())
    items.push_back({{"tag", it.tag}, {"params", it.params}, {"status", status_name(it.status)}, {"witness", it.witness}});
  return Json{{"schema", "clifhom.report/1"},
              {"family", family},
              {"status", r.passed() ? "pass" : "fail"},
              {"summary",
               {{"pass", r.count(Status::Pass)},
                {"fail", r.count(Status::Fail)},
                {"not_applicable", r.count(Status::NotApplicable)}}},
              {"items", items}};
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& it : r.items())
    if (it.status != Status::Pass)
      os << status_name(it.status) << "  " << it.tag << "  " << it.params
         << (it.witness.empty() ? "" : "  [" + it.witness + "]") << "\n";
  os << (r.passed() ? "PASS" : "FAIL") << ": " << r.count(Status::Pass) << " passed, " << r.count(Status::Fail)
     << " failed, " << r.count(Status::NotApplicable) << " not applicable\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rep", "casimir", "envalg", "clifford", "spinor", "bochner"};
  return names;
}

int exit_code(const VerificationReport& r) { return r.passed() ? kExitPass : kExitFail; }

std::uint64_t default_budget() {
  const char* env = std::getenv(kBudgetEnv);
  if (!env || !*env) return kDefaultTermBudget;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument("budget");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(kBudgetEnv) + " must be a positive integer, got '" + env + "'");
  }
}

Json batch_family_json(const BatchOptions& o) {
  Json suites = Json::array();
  for (const auto& s : o.suites) suites.push_back(s);
  return Json{{"m_max", o.m_max}, {"bound", o.bound}, {"q", o.q}, {"suites", suites}, {"budget", o.budget}};
}

namespace {

using Task = std::function<VerificationReport()>;

VerificationReport weight_item(const HighestWeight& rho, const BatchOptions& o, const std::set<std::string>& on,
                               const std::vector<PBWElement>* plain, const std::vector<PBWElement>* tilde,
                               const std::string& casimir_reason) {
  VerificationReport report;
  const std::string params = "rho=" + rho.to_string();
  std::optional<Representation> rep;
  try {
    rep = build_rep(rho, o.max_dim);
  } catch (const RepresentationError& e) {
    report.add("batch.representation", params, Status::NotApplicable, e.what());
    return report;
  }
  if (on.count("rep")) report.merge(verify_representation(*rep));
  if (on.count("casimir")) {
    if (plain && tilde)
      report.merge(verify_casimir_action(*rep, *plain, *tilde));
    else
      report.add("casimir.plain", params, Status::NotApplicable, casimir_reason);
  }
  if (on.count("clifford") || on.count("bochner")) {
    const CliffordSystem plus = build_system(*rep, Sign::Plus);
    const CliffordSystem minus = build_system(*rep, Sign::Minus);
    if (on.count("clifford")) {
      const unsigned q_trace = std::max<unsigned>(o.q, uz(rho.m()));
      for (const CliffordSystem* sys : {&plus, &minus}) {
        report.merge(verify_relations(*sys, q_trace, o.budget));
        for (int i = 1; i <= rho.m(); ++i) {
          const auto dual = build_dual_system(*sys, i);
          report.merge(verify_dual_pairing(*sys, dual ? &*dual : nullptr, i));
        }
      }
      report.merge(verify_cross_relations(plus, minus, o.q));
    }
    if (on.count("bochner")) report.merge(verify_bochner(plus, minus, o.q, o.budget));
  }
  return report;
}

}  // namespace

VerificationReport run_batch(const BatchOptions& o) {
  std::set<std::string> on;
  for (const auto& s : o.suites) {
    if (s == "all") {
      on.insert(suite_names().begin(), suite_names().end());
      continue;
    }
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw UsageError("unknown suite '" + s + "'");
    on.insert(s);
  }
  if (o.m_max < 1) throw UsageError("--m must be at least 1");
  if (o.bound < 0) throw UsageError("--bound must be nonnegative");

  // Casimir elements are shared read-only by every weight of a rank.
  const unsigned q_casimir = std::max(o.q, 2u);
  std::vector<std::vector<PBWElement>> plain(uz(o.m_max + 1)), tilde(uz(o.m_max + 1));
  std::vector<std::string> casimir_reason(uz(o.m_max + 1));
  std::vector<std::string> labels;
  std::vector<Task> tasks;
  for (int m = 1; m <= o.m_max; ++m) {
    if (on.count("casimir")) {
      try {
        plain[uz(m)] = casimir_elements(m, q_casimir, CasimirVariant::Plain, o.budget);
        tilde[uz(m)] = casimir_elements(m, q_casimir, CasimirVariant::Tilde, o.budget);
      } catch (const BudgetExceeded& e) {
        plain[uz(m)].clear();
        tilde[uz(m)].clear();
        casimir_reason[uz(m)] = e.what();
      }
    }
    if (on.count("envalg")) {
      labels.push_back("envalg m=" + std::to_string(m));
      tasks.push_back([m, &o] { return verify_tilde_expansion(m, o.q, o.budget); });
    }
    if (on.count("spinor") && m >= 2) {
      labels.push_back("spinor m=" + std::to_string(m));
      tasks.push_back([m] { return verify_spinor_model(m); });
    }
    for (const auto& rho : dominant_weights(m, o.bound)) {
      labels.push_back("rho=" + rho.to_string());
      const auto* pl = plain[uz(m)].empty() ? nullptr : &plain[uz(m)];
      const auto* tl = tilde[uz(m)].empty() ? nullptr : &tilde[uz(m)];
      const std::string reason = casimir_reason[uz(m)];
      tasks.push_back([rho, &o, &on, pl, tl, reason] { return weight_item(rho, o, on, pl, tl, reason); });
    }
  }

  std::vector<VerificationReport> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        results[t] = tasks[t]();
      } catch (const BudgetExceeded& e) {
        results[t].add("batch.budget", labels[t], Status::NotApplicable, e.what());
      } catch (const std::exception& e) {
        results[t].add("batch.error", labels[t], Status::Fail, e.what());
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  VerificationReport report;
  for (const auto& r : results) report.merge(r);
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Clifford homomorphism and Bochner identities for U(m)"};
  app.require_subcommand(1);

  std::string rho_text;
  bool json = false, latex = false, weitz = false;
  unsigned q = 0;
  int m_arg = 0, p_arg = 0, i_arg = 0;
  std::string r_text = "1";
  BatchOptions batch;
  std::uint64_t budget = 0;

  auto* weights = app.add_subcommand("weights", "conformal weights, gamma constants and Casimir eigenvalues");
  weights->add_option("rho", rho_text, "highest weight, e.g. 2,1,0")->required();
  weights->add_flag("--json", json, "machine-readable output");

  auto* identity = app.add_subcommand("identity", "Bochner identities of degree q, or the Weitzenboeck formula");
  identity->add_option("rho", rho_text, "highest weight")->required();
  identity->add_option("--q", q, "degree (default 0)");
  identity->add_flag("--weitzenboeck", weitz, "emit the Weitzenboeck formula instead");
  auto* id_json = identity->add_flag("--json", json, "JSON output");
  identity->add_flag("--latex", latex, "standalone LaTeX document")->excludes(id_json);

  auto* dolbeault = app.add_subcommand("dolbeault", "identities on (0,p)-forms and their spin twists");
  dolbeault->add_option("m", m_arg, "complex dimension")->required();
  dolbeault->add_option("p", p_arg, "form degree")->required();
  auto* dol_json = dolbeault->add_flag("--json", json, "JSON output");
  dolbeault->add_flag("--latex", latex, "standalone LaTeX document")->excludes(dol_json);

  auto* verify = app.add_subcommand("verify", "run verification suites over a weight family");
  verify->add_option("--m", batch.m_max, "ranks 1..m (default 2)");
  verify->add_option("--bound", batch.bound, "entries in [-bound, bound] (default 1)");
  verify->add_option("--q", batch.q, "degree bound (default 2)");
  verify->add_option("--suite", batch.suites, "all, rep, casimir, envalg, clifford, spinor, bochner")->delimiter(',');
  verify->add_option("--jobs", batch.jobs, "worker threads (default 1)");
  verify->add_option("--budget", budget, "PBW term budget (default from " + std::string(kBudgetEnv) + ")");
  verify->add_option("--max-dim", batch.max_dim, "largest representation dimension built");
  verify->add_flag("--json", json, "JSON report");

  auto* estimate = app.add_subcommand("estimate", "Dirac eigenvalue bound coefficient on spin Kaehler manifolds");
  estimate->add_option("m", m_arg, "complex dimension")->required();
  estimate->add_flag("--json", json, "JSON output");

  auto* spinor = app.add_subcommand("spinor-table", "conformal weights and gamma on (0,p)-forms for every p");
  spinor->add_option("m", m_arg, "complex dimension")->required();
  spinor->add_flag("--json", json, "JSON output");

  auto* cpm = app.add_subcommand("cpm", "eigenvalue of D_{-i}^*D_{-i} on holomorphic sections over CP^m");
  cpm->add_option("rho", rho_text, "highest weight")->required();
  cpm->add_option("--i", i_arg, "gradient index")->required();
  cpm->add_option("--r", r_text, "holomorphic sectional curvature (default 1)");
  cpm->add_flag("--json", json, "JSON output");

  auto* casimir = app.add_subcommand("casimir", "Casimir eigenvalues, checked against the matrix action");
  casimir->add_option("rho", rho_text, "highest weight")->required();
  casimir->add_option("--q", q, "largest degree (default 2m)");
  casimir->add_flag("--json", json, "JSON output");

  std::vector<std::string> argv_store{"clifhom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (weights->parsed()) {
      const HighestWeight rho = parse_weight_arg(rho_text);
      out << (json ? dump(weights_json(rho)) : weights_text(rho));
      return kExitPass;
    }
    if (identity->parsed()) {
      const HighestWeight rho = parse_weight_arg(rho_text);
      std::vector<BochnerIdentity> xs;
      if (weitz) {
        if (identity->count("--q") > 0) throw UsageError("--q and --weitzenboeck are exclusive");
        try {
          xs.push_back(weitzenboeck(rho));
        } catch (const BochnerError& e) {
          throw UsageError(e.what());
        }
      } else {
        xs = bochner_identities(rho, q);
      }
      if (json)
        out << dump(identities_json(rho, xs, weitz ? "weitzenboeck" : "degree", weitz ? nullptr : &q));
      else if (latex)
        out << identities_latex(rho, xs);
      else
        for (const auto& x : xs) out << identity_text(x) << "\n";
      return kExitPass;
    }
    if (dolbeault->parsed()) {
      std::vector<BochnerIdentity> xs;
      try {
        xs = dolbeault_identities(m_arg, p_arg);
      } catch (const BochnerError& e) {
        throw UsageError(e.what());
      }
      const HighestWeight& rho = xs.front().rho;
      if (json)
        out << dump(identities_json(rho, xs, "dolbeault", nullptr));
      else if (latex)
        out << identities_latex(rho, xs);
      else
        for (const auto& x : xs) out << identity_text(x) << "\n";
      return kExitPass;
    }
    if (verify->parsed()) {
      batch.budget = verify->count("--budget") > 0 ? budget : default_budget();
      if (batch.budget == 0) throw UsageError("--budget must be positive");
      if (batch.jobs == 0) throw UsageError("--jobs must be positive");
      const VerificationReport r = run_batch(batch);
      out << (json ? dump(report_json(r, batch_family_json(batch))) : report_text(r));
      return exit_code(r);
    }
    if (estimate->parsed()) {
      if (m_arg < 2) throw UsageError("estimate needs m >= 2");
      const EigenvalueBound b = kirchberg_bound(m_arg);
      if (json)
        out << dump(estimate_json(b));
      else
        out << "m = " << b.m << ": lambda^2 >= (kappa_0/4) * " << to_string(b.bound_coefficient)
            << ", witness p = " << b.witness_p << "\n";
      return kExitPass;
    }
    if (spinor->parsed()) {
      if (m_arg < 1) throw UsageError("spinor-table needs m >= 1");
      if (json) {
        out << dump(spinor_table_json(m_arg));
      } else {
        for (int p = 0; p <= m_arg; ++p) {
          out << "p = " << p << "\n";
          for (const auto& r : spinor_table(m_arg, p))
            out << "  " << r.label << " (index " << sign_symbol(r.sign) << r.index << ")  w = " << r.w
                << "  gamma = " << to_string(r.gamma) << "\n";
        }
      }
      return kExitPass;
    }
    if (cpm->parsed()) {
      const HighestWeight rho = parse_weight_arg(rho_text);
      const Rational r = parse_rational_arg(r_text, "curvature");
      Rational value;
      try {
        value = cpm_holomorphic_eigenvalue(rho, i_arg, r);
      } catch (const BochnerError& e) {
        throw UsageError(e.what());
      }
      if (json)
        out << dump(Json{{"schema", "clifhom.cpm/1"},
                         {"rho", rho_json(rho)},
                         {"i", i_arg},
                         {"r", to_string(r)},
                         {"eigenvalue", to_string(value)}});
      else
        out << to_string(value) << "\n";
      return kExitPass;
    }
    if (casimir->parsed()) {
      const HighestWeight rho = parse_weight_arg(rho_text);
      const unsigned q_max = casimir->count("--q") > 0 ? q : uz(2 * rho.m());
      const std::uint64_t b = default_budget();
      std::optional<Representation> rep;
      try {
        rep = build_rep(rho);
      } catch (const RepresentationError&) {
      }
      bool ok = true;
      Json rows = Json::array();
      std::ostringstream text;
      for (unsigned k = 0; k <= q_max; ++k) {
        const Rational pl = casimir_eigenvalue(rho, k, CasimirVariant::Plain);
        const Rational ti = casimir_eigenvalue(rho, k, CasimirVariant::Tilde);
        Json row{{"q", k}, {"plain", to_string(pl)}, {"tilde", to_string(ti)}};
        text << "c_" << k << " = " << to_string(pl) << "  tilde c_" << k << " = " << to_string(ti);
        bool matched = false;
        if (rep) {
          try {
            Rational mp, mt;
            const bool sp = evaluate(*rep, casimir_element(rho.m(), k, CasimirVariant::Plain, b)).is_scalar(&mp);
            const bool st = evaluate(*rep, casimir_element(rho.m(), k, CasimirVariant::Tilde, b)).is_scalar(&mt);
            matched = sp && st && mp == pl && mt == ti;
            ok = ok && matched;
            text << (matched ? "  (matrix agrees)" : "  (MATRIX DISAGREES)");
          } catch (const BudgetExceeded&) {
            text << "  (matrix check over budget)";
          }
        }
        row["matrix_checked"] = matched;
        rows.push_back(row);
        text << "\n";
      }
      if (json)
        out << dump(Json{{"schema", "clifhom.casimir/1"}, {"rho", rho_json(rho)}, {"m", rho.m()}, {"casimir", rows}});
      else
        out << "rho = " << rho.to_string() << "\n" << text.str();
      return ok ? kExitPass : kExitFail;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace clifhom
