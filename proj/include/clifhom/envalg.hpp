#pragma once

#include "clifhom/linalg.hpp"
#include "clifhom/report.hpp"
#include "clifhom/weights.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace clifhom {

inline constexpr std::uint64_t kDefaultTermBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Generator {
  int k;
  int l;
};

// Generator e_kl is encoded as (k-1)*m + (l-1), so code order is lexicographic on (k, l).
using Monomial = std::vector<std::uint16_t>;

class PBWElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit PBWElement(int m);
  static PBWElement scalar(int m, const Rational& value);
  static PBWElement generator(int m, int k, int l);

  int m() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;
  Generator decode(std::uint16_t code) const;

  // Only for monomials already in normal order.
  void add_normal_term(const Monomial& mono, const Rational& coeff);

  PBWElement& operator+=(const PBWElement& other);
  PBWElement& operator-=(const PBWElement& other);
  PBWElement& operator*=(const Rational& s);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(PBWElement a, const Rational& s) { return a *= s; }
  friend PBWElement operator*(const Rational& s, PBWElement a) { return a *= s; }
  friend bool operator==(const PBWElement& a, const PBWElement& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int m_;
  Terms terms_;
};

PBWElement pbw_normalize(int m, const std::vector<Generator>& word, const Rational& coeff = 1,
                         std::uint64_t budget = kDefaultTermBudget);
PBWElement multiply(const PBWElement& a, const PBWElement& b, std::uint64_t budget = kDefaultTermBudget);
PBWElement commutator(const PBWElement& a, const PBWElement& b, std::uint64_t budget = kDefaultTermBudget);

PBWElement e_power(int k, int l, unsigned q, int m, std::uint64_t budget = kDefaultTermBudget);
PBWElement tilde_e_power(int k, int l, unsigned q, int m, std::uint64_t budget = kDefaultTermBudget);
PBWElement involution(const PBWElement& x, std::uint64_t budget = kDefaultTermBudget);
// c_q = sum_k e_kk^q, or its involution image for the tilde variant.
PBWElement casimir_element(int m, unsigned q, CasimirVariant variant,
                           std::uint64_t budget = kDefaultTermBudget);

// ── K_n polynomials: coefficients of 1 / (1 + x_1 z + x_2 z^2 + ...) ──

struct KTerm {
  std::vector<unsigned> exponents;  // i_1..i_n with sum_j j*i_j = n
  Rational coeff;
};

class KPolynomial {
 public:
  explicit KPolynomial(unsigned n);
  unsigned degree() const { return n_; }
  const std::vector<KTerm>& table() const { return table_; }
  // Missing trailing x_p are zero.
  Rational operator()(const std::vector<Rational>& x) const;

 private:
  unsigned n_;
  std::vector<KTerm> table_;
};

// Recursion K_q = -sum_{p<q} K_p x_{q-p}.
Rational k_eval(unsigned n, const std::vector<Rational>& x);
// K_n(-c) at the Casimir eigenvalues of rho, i.e. x_p = -c_{p-1}(rho).
Rational k_of_casimirs(unsigned n, const HighestWeight& rho, CasimirVariant variant = CasimirVariant::Plain);
// K_n(-c) as a central element of the enveloping algebra.
PBWElement k_of_casimir_elements(unsigned n, int m, CasimirVariant variant,
                                 std::uint64_t budget = kDefaultTermBudget);

// Binomial-transform identities between e^p_lk and tilde e^p_kl with central K coefficients,
// their involution images, the traced Casimir relations and the solved forms.
VerificationReport verify_tilde_expansion(int m, unsigned q_max, std::uint64_t budget = kDefaultTermBudget);

}  // namespace clifhom
