// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include "clifhom/bochner.hpp"
#include "clifhom/cli.hpp"
#include "clifhom/clifford.hpp"
#include "clifhom/envalg.hpp"
#include "clifhom/gtrep.hpp"
#include "clifhom/weights.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace clifhom;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Shell {
  int code;
  std::string out;
};

Shell shell(const std::string& args) {
  const std::string cmd = std::string("'") + CLIFHOM_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

HighestWeight spinor_weight(int m, int p) {
  std::vector<long> v(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < p; ++i) v[static_cast<std::size_t>(i)] = 1;
  return HighestWeight(v);
}

// Every item with the given tag prefix passed; none failed or was skipped.
void require_all_pass(const VerificationReport& r, const std::string& prefix, Outcome& o, const std::string& where) {
  for (const auto& it : r.items()) {
    if (it.tag.rfind(prefix, 0) != 0) continue;
    if (it.status != Status::Pass)
      o.fail(where + ": " + it.tag + " " + it.params + " is " + status_name(it.status) +
             (it.witness.empty() ? "" : " (" + it.witness + ")"));
  }
}

bool has_tag(const VerificationReport& r, const std::string& tag) {
  for (const auto& it : r.items())
    if (it.tag == tag) return true;
  return false;
}

// Conformal weights and gamma at rho = (1_p, 0_{m-p}), written out directly.
Outcome spinor_table_criterion() {
  Outcome o;
  for (int m = 2; m <= 6; ++m) {
    for (int p = 0; p <= m; ++p) {
      struct Row {
        Sign sign;
        int i;
        long w;
        Rational gamma;
      };
      const std::vector<Row> rows{
          {Sign::Plus, 1, -1, Rational(p * (m + 1), p + 1)},
          {Sign::Plus, p + 1, p, Rational(m - p, p + 1)},
          {Sign::Minus, m, 0, Rational((m + 1) * (m - p), m - p + 1)},
          {Sign::Minus, p, m - p + 1, Rational(p, m - p + 1)},
      };
      const HighestWeight rho = spinor_weight(m, p);
      const std::string at = "m=" + std::to_string(m) + " p=" + std::to_string(p);
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const ConformalWeightTable t = conformal_table(rho, s);
        for (int i = 1; i <= m; ++i) {
          const Rational& g = t.gamma[static_cast<std::size_t>(i - 1)];
          bool matched = false;
          for (Row r : rows) {
            r.gamma.canonicalize();
            if (r.sign != s || r.i != i || r.gamma == 0) continue;
            matched = true;
            if (t.w[static_cast<std::size_t>(i - 1)] != r.w || g != r.gamma)
              o.fail(at + ": " + sign_symbol(s) + std::to_string(i) + " table disagrees with the closed form");
          }
          if (!matched && g != 0)
            o.fail(at + ": " + sign_symbol(s) + std::to_string(i) + " has gamma " + to_string(g) + " but no row");
        }
      }
      if (!verify_spinor_table(m, p).passed()) o.fail(at + ": verify_spinor_table failed");
    }
  }
  return o;
}

Outcome casimir_criterion() {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    const auto plain = casimir_elements(m, 4, CasimirVariant::Plain);
    const auto tilde = casimir_elements(m, 4, CasimirVariant::Tilde);
    for (const auto& rho : dominant_weights(m, 2)) {
      const VerificationReport r = verify_casimir_action(build_rep(rho), plain, tilde);
      require_all_pass(r, "", o, rho.to_string());
      if (!has_tag(r, "casimir.plain") || !has_tag(r, "casimir.tilde")) o.fail(rho.to_string() + ": missing items");
    }
  }
  return o;
}

Outcome tilde_expansion_criterion() {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    const VerificationReport r = verify_tilde_expansion(m, 3);
    require_all_pass(r, "", o, "m=" + std::to_string(m));
    if (r.items().empty()) o.fail("m=" + std::to_string(m) + ": empty report");
  }
  return o;
}

Outcome clifford_criterion() {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    for (const auto& rho : dominant_weights(m, 2)) {
      const std::string at = rho.to_string();
      const Representation rep = build_rep(rho);
      const CliffordSystem plus = build_system(rep, Sign::Plus);
      const CliffordSystem minus = build_system(rep, Sign::Minus);
      for (const CliffordSystem* sys : {&plus, &minus}) {
        const VerificationReport r = verify_relations(*sys, static_cast<unsigned>(m));
        require_all_pass(r, "clifford.", o, at);
        if (!r.passed()) o.fail(at + ": relations failed");
        for (int i = 1; i <= m; ++i) {
          const auto target_weight = shift(rho, sys->sign, i);
          const CliffordTarget* t = sys->target(i);
          if (bool(target_weight) != (t != nullptr)) {
            o.fail(at + ": target presence disagrees with shift validity at " + std::to_string(i));
            continue;
          }
          if (t && rank(t->projector) != weyl_dimension(*target_weight))
            o.fail(at + ": projector rank differs from the Weyl dimension at " + sign_symbol(sys->sign) +
                   std::to_string(i));
          const auto dual = build_dual_system(*sys, i);
          const VerificationReport d = verify_dual_pairing(*sys, dual ? &*dual : nullptr, i);
          if (!d.passed()) o.fail(at + ": dual pairing failed at " + std::to_string(i));
          if (t) require_all_pass(d, "dual-pairing", o, at);
        }
      }
      const VerificationReport x = verify_cross_relations(plus, minus, 2);
      require_all_pass(x, "cross-relation.", o, at);
    }
  }
  return o;
}

Outcome spinor_model_criterion() {
  Outcome o;
  for (int m = 2; m <= 4; ++m) {
    const VerificationReport r = verify_spinor_model(m);
    if (!r.passed()) o.fail("m=" + std::to_string(m) + ": spinor model failed");
    for (const char* tag : {"spinor.clifford-relation", "spinor.creation-annihilation", "spinor.table"}) {
      int seen = 0;
      for (const auto& it : r.items()) {
        if (it.tag != tag) continue;
        ++seen;
        if (it.status != Status::Pass) o.fail("m=" + std::to_string(m) + ": " + tag + " " + it.params);
      }
      if (seen < m + 1) o.fail("m=" + std::to_string(m) + ": " + tag + " covers " + std::to_string(seen) + " degrees");
    }
  }
  return o;
}

Outcome kirchberg_criterion() {
  Outcome o;
  for (int m = 2; m <= 50; ++m) {
    const EigenvalueBound b = kirchberg_bound(m);
    Rational closed = m % 2 == 0 ? Rational(m, m - 1) : Rational(m + 1, m);
    closed.canonicalize();
    Rational best;
    int first = -1;
    for (int p = 0; p < m; ++p) {
      Rational a(2 * p + 2, 2 * p + 1), c(2 * m - 2 * p, 2 * m - 2 * p - 1);
      a.canonicalize();
      c.canonicalize();
      const Rational v = a > c ? a : c;
      if (first < 0 || v < best) {
        best = v;
        first = p;
      }
    }
    if (b.bound_coefficient != closed || best != closed || b.witness_p != first)
      o.fail("m=" + std::to_string(m) + ": got " + to_string(b.bound_coefficient) + " at p=" +
             std::to_string(b.witness_p) + ", expected " + to_string(closed) + " at p=" + std::to_string(first));
  }
  return o;
}

Outcome golden_criterion() {
  Outcome o;
  const std::string dir = CLIFHOM_GOLDEN_DIR;
  const std::vector<std::pair<std::string, std::string>> cases{
      {"identity 1,0 --q 0 --json", "identity_1_0_q0.json"},
      {"identity 1,0 --q 1 --json", "identity_1_0_q1.json"},
      {"identity 1,0 --weitzenboeck --json", "identity_1_0_weitzenboeck.json"},
  };
  for (const auto& [args, file] : cases) {
    const Shell s = shell(args);
    const std::string want = slurp(dir + "/" + file);
    if (want.empty()) o.fail(file + " missing");
    if (s.code != kExitPass || s.out != want) o.fail("`" + args + "` differs from " + file);
  }
  return o;
}

Outcome cli_criterion() {
  Outcome o;
  const Shell s = shell("verify --m 2 --bound 2 --q 2 --suite all --json");
  if (s.code != kExitPass) o.fail("verify exited " + std::to_string(s.code));
  try {
    const Json j = Json::parse(s.out);
    if (dump(j) != s.out) o.fail("verify JSON does not round-trip byte for byte");
    if (j.at("status") != "pass") o.fail("verify status is not pass");
  } catch (const std::exception& e) {
    o.fail(std::string("verify JSON does not parse: ") + e.what());
  }
  for (const char* bad : {"weights 0,1", "verify --suite nope", "identity 1,1 --weitzenboeck", "cpm 1,1 --i 1"}) {
    const Shell u = shell(bad);
    if (u.code != kExitUsage) o.fail("`" + std::string(bad) + "` exited " + std::to_string(u.code));
  }
  VerificationReport failing;
  failing.add("synthetic", "", Status::Fail, "forced");
  if (exit_code(failing) != kExitFail) o.fail("a failing report does not map to exit 1");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double limit_s;  // 0 when untimed
  };
  const std::vector<Criterion> criteria{
      {"spinor conformal table, m 2..6", spinor_table_criterion, 1.0},
      {"Casimir action, m <= 3, entries in [-2,2], q <= 4", casimir_criterion, 120.0},
      {"tilde expansion, m 1..3, q <= 3", tilde_expansion_criterion, 0},
      {"Clifford family, m <= 3, entries in [-2,2]", clifford_criterion, 0},
      {"spinor model, m 2..4", spinor_model_criterion, 0},
      {"eigenvalue bound, m 2..50", kirchberg_criterion, 1.0},
      {"identity output matches golden files", golden_criterion, 0},
      {"verify exit codes and JSON stability", cli_criterion, 0},
  };
  int failed = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.fail("took longer than " + std::to_string(c.limit_s) + " s");
    if (!o.ok) ++failed;
    char line[512];
    std::snprintf(line, sizeof line, "[%s] %d. %s (%.2f s)", o.ok ? "PASS" : "FAIL", n, c.name, secs);
    std::cout << line << (o.ok ? "" : ": " + o.detail) << "\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
