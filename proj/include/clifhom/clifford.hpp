#pragma once

#include "clifhom/gtrep.hpp"
#include "clifhom/linalg.hpp"
#include "clifhom/report.hpp"
#include "clifhom/weights.hpp"

#include <optional>
#include <vector>

namespace clifhom {

class CliffordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One irreducible summand of V_rho (x) C^m (sign +) or V_rho (x) conj(C^m) (sign -).
struct CliffordTarget {
  int index = 0;                      // i, 1-based
  Representation rep;                 // induced action on the summand; rep.gram is the restricted tensor form
  RationalMatrix projector;           // orthogonal projection on the tensor space
  RationalMatrix embedding;           // columns: target basis in tensor coordinates, mutually orthogonal
  std::vector<RationalMatrix> maps;      // maps[k-1] = p(eps_k): V_rho -> target
  std::vector<RationalMatrix> adjoints;  // adjoints[k-1] = p(eps_k)^*
};

// Tensor coordinates are a*m + j for source basis index a and auxiliary index j.
struct CliffordSystem {
  Representation source;
  Sign sign = Sign::Plus;
  ConformalWeightTable weights;
  RationalMatrix chat;         // 2 sum pi(e_kl) (x) aux(e_lk)
  RationalMatrix tensor_gram;  // source gram (x) identity
  std::vector<std::optional<CliffordTarget>> targets;  // targets[i-1], empty at invalid shifts

  int m() const { return source.m(); }
  const CliffordTarget* target(int i) const {
    const auto& t = targets.at(static_cast<std::size_t>(i - 1));
    return t ? &*t : nullptr;
  }
};

// Matrix of e_kl on C^m (sign +) or on conj(C^m) in the dual basis (sign -).
RationalMatrix auxiliary_generator(int m, Sign sign, int k, int l);
// Predicted eigenvalue of chat on the summand i: -2 w_{+-i}.
Rational chat_eigenvalue(const HighestWeight& rho, Sign sign, int i);

CliffordSystem build_system(const Representation& rep, Sign sign);

// Trace identities, intertwining, the Vandermonde-inverted expansions, the trace constants,
// the target normalization, the projection formula, equivariance and the target Casimir.
VerificationReport verify_relations(const CliffordSystem& sys, unsigned q_max,
                                    std::uint64_t budget = kDefaultTermBudget);

// Relations between the sign + and sign - families on the same source, degree <= q_max.
VerificationReport verify_cross_relations(const CliffordSystem& plus, const CliffordSystem& minus, unsigned q_max);

// Opposite-sign system on the target i of sys, sharing its basis; empty if the shift is invalid.
std::optional<CliffordSystem> build_dual_system(const CliffordSystem& sys, int i);

// q(u-bar)^* q(v-bar) = (1/gamma) p(u) p(v)^* for the dual map q from the target back to the source.
VerificationReport verify_dual_pairing(const CliffordSystem& sys, const CliffordSystem* dual, int i);

struct SpinorTableRow {
  Sign sign;
  int index;      // may fall outside 1..m at the boundary degrees
  std::string label;  // "+1", "+(p+1)", "-m", "-p"
  long w;
  Rational gamma;
};

// Closed forms on rho = (1_p, 0_{m-p}).
std::vector<SpinorTableRow> spinor_table(int m, int p);
// Rows with nonzero gamma match the conformal tables; every other index has gamma = 0.
VerificationReport verify_spinor_table(int m, int p);

// For every p: table, the bilinear Clifford relation, -eps_k epsbar_l = pi(e_kl), the degree-0/1
// relations and the two projection formulas, on both sign systems of rho = (1_p, 0_{m-p}).
VerificationReport verify_spinor_model(int m);

}  // namespace clifhom
