#pragma once

#include "clifhom/clifford.hpp"
#include "clifhom/linalg.hpp"
#include "clifhom/report.hpp"
#include "clifhom/weights.hpp"

#include <string>
#include <vector>

namespace clifhom {

class BochnerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formal tokens. Right side: "nabla*nabla", "nabla10*nabla10", "nabla01*nabla01", "R^p", "kappa".
// Extra left-side operators: "2dbar.dbar*", "2dbar*.dbar".
struct Term {
  std::string token;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// sum_i minus[i] D_{-i}^*D_{-i} + sum_i plus[i] D_{+i}^*D_{+i} + operators = curvature.
// Coefficients are stored for every i; at invalid shifts they multiply zero operators.
struct BochnerIdentity {
  std::string label;
  HighestWeight rho;
  unsigned q = 0;
  std::vector<Rational> minus_coeffs;  // [i-1]
  std::vector<Rational> plus_coeffs;   // [i-1]
  std::vector<bool> minus_valid;
  std::vector<bool> plus_valid;
  std::vector<Term> operator_terms;   // canonical order, no zero coefficients
  std::vector<Term> curvature_terms;  // canonical order, no zero coefficients

  int m() const { return rho.m(); }
  friend bool operator==(const BochnerIdentity&, const BochnerIdentity&) = default;
};

std::string curvature_token(unsigned p);  // "R^p"
// Merges duplicates, drops zeros, sorts by the fixed token order.
std::vector<Term> normalize_terms(std::vector<Term> terms);

// Degree-q identity with minus coefficients (w_{-i}-m)^q, plus coefficients
// (-1)^{q+1} sum_p K_{q-p}(-c~) w_{+i}^p and right side sum_p C(q,p)(-m)^{q-p} R^p.
BochnerIdentity bochner_identity(const HighestWeight& rho, unsigned q);

// q = 0: "nabla10", "nabla01", "sum", "difference". q = 1: "degree-one" (weights w_{+-i}, right side R^1)
// and "general". q >= 2: "general".
std::vector<BochnerIdentity> bochner_identities(const HighestWeight& rho, unsigned q);

// sum_j c_j X_j over identities on the same weight.
BochnerIdentity combine(const std::string& label, const std::vector<std::pair<Rational, const BochnerIdentity*>>& parts);

// Replaces every occurrence of token by the given terms (scaled by its coefficient).
BochnerIdentity rewrite(const BochnerIdentity& x, const std::string& token, const std::vector<Term>& replacement);

// Needs rho^1 > rho^m. Left-side coefficients are nonnegative.
BochnerIdentity weitzenboeck(const HighestWeight& rho);

// Scalar of R^q_rho at constant holomorphic sectional curvature r: (r/2)(c_q c_1 + c_{q+1}).
Rational constant_curvature_scalar(const HighestWeight& rho, unsigned q, const Rational& r);

// Eigenvalue of D_{-i}^*D_{-i} on holomorphic sections over CP^m: (r/2) gamma_{-i} (w_{-i} + sum rho).
Rational cpm_holomorphic_eigenvalue(const HighestWeight& rho, int i, const Rational& r);

struct EigenvalueBound {
  int m = 0;
  Rational bound_coefficient;  // multiplies kappa_0/4
  int witness_p = 0;           // smallest minimizing degree
};

// min over p in 0..m-1 of max{(2p+2)/(2p+1), (2m-2p)/(2m-2p-1)}.
EigenvalueBound kirchberg_bound(int m);

// On rho = (1_p, 0_{m-p}), with R^1 = R^0 applied: the three form-level lines ("forms.sum", "forms.difference",
// "forms.degree-one"), "forms.weitzenboeck", the spin twists ("spin.sum", "spin.difference", "spin.degree-one",
// "spin.dirac") and the Dirac-square decomposition "spin.dirac-split". Terms at invalid shifts are zeroed.
std::vector<BochnerIdentity> dolbeault_identities(int m, int p);

struct FamilyRank {
  std::size_t relations = 0;
  std::size_t symbols = 0;
  std::size_t rank = 0;
};

// Rank of the left-side coefficient rows of the general identities q = 0..q_max over the valid D^*D symbols.
FamilyRank identity_family_rank(const HighestWeight& rho, unsigned q_max);

// Replaces D_{-i}^*D_{-i} by p_{-i}(eps_k)^*p_{-i}(eps_l), D_{+i}^*D_{+i} by the transposed (l,k) contraction,
// nabla tokens by the matching sums and R^p by pi(e^p_kl); both the symbol and the curvature parts must agree.
// Identities with operator or kappa tokens are not applicable.
VerificationReport verify_symbol_level(const BochnerIdentity& x, const CliffordSystem& plus,
                                       const CliffordSystem& minus, std::uint64_t budget = kDefaultTermBudget);

// Symbol-level checks of every emitted identity with q <= q_max, plus the Weitzenboeck form when defined.
VerificationReport verify_bochner(const CliffordSystem& plus, const CliffordSystem& minus, unsigned q_max,
                                  std::uint64_t budget = kDefaultTermBudget);

}  // namespace clifhom
