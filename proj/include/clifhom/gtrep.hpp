#pragma once

#include "clifhom/envalg.hpp"
#include "clifhom/linalg.hpp"
#include "clifhom/report.hpp"
#include "clifhom/weights.hpp"

#include <vector>

namespace clifhom {

inline constexpr std::size_t kDefaultMaxDim = 4096;

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// rows[r-1] has r entries; rows[m-1] is the highest weight.
struct GTPattern {
  std::vector<std::vector<long>> rows;
  friend auto operator<=>(const GTPattern&, const GTPattern&) = default;
};

// Patterns in lexicographically descending order, so the highest-weight vector comes first.
std::vector<GTPattern> gt_patterns(const HighestWeight& rho);

struct Representation {
  HighestWeight rho;
  std::size_t dim = 0;
  std::vector<GTPattern> basis;  // empty when the space was cut out of a tensor product
  std::vector<std::vector<RationalMatrix>> gen;  // gen[k-1][l-1] = pi(e_kl)
  RationalMatrix gram;                           // diagonal, positive

  int m() const { return rho.m(); }
  const RationalMatrix& e(int k, int l) const {
    return gen[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
  }
};

Representation build_rep(const HighestWeight& rho, std::size_t max_dim = kDefaultMaxDim);

// Diagonal G with pi(e_kl)^T G = G pi(e_lk), normalized to 1 on the first basis vector.
RationalMatrix invariant_gram(const Representation& rep);

RationalMatrix evaluate(const Representation& rep, const PBWElement& x);

// Dimension, commutation relations, weight grading, unitarity and gram positivity.
VerificationReport verify_representation(const Representation& rep);

// c_0..c_{q_max} as enveloping-algebra elements, shared across weights of one rank.
std::vector<PBWElement> casimir_elements(int m, unsigned q_max, CasimirVariant variant,
                                         std::uint64_t budget = kDefaultTermBudget);

// Each c_q and tilde c_q acts as the scalar given by the eigenvalue sums; c_2 also matches
// sum_i rho^i (rho^i + m + 1 - 2i).
VerificationReport verify_casimir_action(const Representation& rep, const std::vector<PBWElement>& plain,
                                         const std::vector<PBWElement>& tilde);

}  // namespace clifhom
