#pragma once

#include "clifhom/bochner.hpp"
#include "clifhom/report.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace clifhom {

using Json = nlohmann::ordered_json;

// Bad input on the command line; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr const char* kBudgetEnv = "CLIFHOM_BUDGET";

// Rationals are strings ("p/q", integers without a denominator).
Json weights_json(const HighestWeight& rho);
Json identity_json(const BochnerIdentity& x);
Json identities_json(const HighestWeight& rho, const std::vector<BochnerIdentity>& xs, const std::string& mode,
                     const unsigned* q);
Json estimate_json(const EigenvalueBound& b);
Json spinor_table_json(int m);
Json report_json(const VerificationReport& r, const Json& family);

std::string weights_text(const HighestWeight& rho);
std::string identity_text(const BochnerIdentity& x);
// Standalone document; terms at invalid shifts are omitted since those operators vanish.
std::string identities_latex(const HighestWeight& rho, const std::vector<BochnerIdentity>& xs);
std::string report_text(const VerificationReport& r);

// Dumped with two-space indent and a trailing newline; parse + dump reproduces it byte for byte.
std::string dump(const Json& j);

struct BatchOptions {
  int m_max = 2;
  long bound = 1;
  unsigned q = 2;
  std::vector<std::string> suites{"all"};
  unsigned jobs = 1;
  std::uint64_t budget = kDefaultTermBudget;
  std::size_t max_dim = kDefaultMaxDim;
};

// Suite names accepted by run_batch.
const std::vector<std::string>& suite_names();

// Every dominant weight with rank 1..m_max and entries in [-bound, bound], fanned out over jobs workers.
// Item order does not depend on the number of workers.
VerificationReport run_batch(const BatchOptions& options);
Json batch_family_json(const BatchOptions& options);

// kExitPass iff no item failed, else kExitFail.
int exit_code(const VerificationReport& r);

// Budget from the environment, or the built-in default.
std::uint64_t default_budget();

// Full command-line entry point; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clifhom
