#include "clifhom/bochner.hpp"

#include "clifhom/envalg.hpp"

#include <algorithm>
#include <map>

namespace clifhom {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

// Fixed token order: gradients, left-side operators, R^0, R^1, ..., kappa.
long token_rank(const std::string& token) {
  static const std::map<std::string, long> fixed{{"nabla*nabla", 0},      {"nabla10*nabla10", 1},
                                                 {"nabla01*nabla01", 2},  {"2dbar.dbar*", 3},
                                                 {"2dbar*.dbar", 4},      {"kappa", 1L << 40}};
  if (auto it = fixed.find(token); it != fixed.end()) return it->second;
  if (token.size() > 2 && token.compare(0, 2, "R^") == 0 &&
      std::all_of(token.begin() + 2, token.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return 100 + std::stol(token.substr(2));
  throw BochnerError("unknown token '" + token + "'");
}

Rational coefficient_of(const std::vector<Term>& terms, const std::string& token) {
  for (const auto& t : terms)
    if (t.token == token) return t.coeff;
  return 0;
}

BochnerIdentity blank(const std::string& label, const HighestWeight& rho, unsigned q) {
  const int m = rho.m();
  BochnerIdentity x{label, rho, q, std::vector<Rational>(uz(m)), std::vector<Rational>(uz(m)), {}, {}, {}, {}};
  x.minus_valid = conformal_table(rho, Sign::Minus).valid;
  x.plus_valid = conformal_table(rho, Sign::Plus).valid;
  return x;
}

BochnerIdentity relabel(BochnerIdentity x, const std::string& label) {
  x.label = label;
  return x;
}

BochnerIdentity zero_invalid(BochnerIdentity x) {
  for (std::size_t i = 0; i < x.minus_coeffs.size(); ++i) {
    if (!x.minus_valid[i]) x.minus_coeffs[i] = 0;
    if (!x.plus_valid[i]) x.plus_coeffs[i] = 0;
  }
  return x;
}

BochnerIdentity add_terms(BochnerIdentity x, const std::vector<Term>& extra) {
  x.curvature_terms.insert(x.curvature_terms.end(), extra.begin(), extra.end());
  x.curvature_terms = normalize_terms(std::move(x.curvature_terms));
  return x;
}

}  // namespace

std::string curvature_token(unsigned p) { return "R^" + std::to_string(p); }

std::vector<Term> normalize_terms(std::vector<Term> terms) {
  std::map<std::pair<long, std::string>, Rational> merged;
  for (auto& t : terms) merged[{token_rank(t.token), t.token}] += t.coeff;
  std::vector<Term> out;
  for (auto& [key, c] : merged)
    if (sgn(c) != 0) out.push_back({key.second, c});
  return out;
}

BochnerIdentity bochner_identity(const HighestWeight& rho, unsigned q) {
  const int m = rho.m();
  BochnerIdentity x = blank("general", rho, q);
  const ConformalWeightTable minus = conformal_table(rho, Sign::Minus);
  const ConformalWeightTable plus = conformal_table(rho, Sign::Plus);
  std::vector<Rational> k;
  for (unsigned s = 0; s <= q; ++s) k.push_back(k_of_casimirs(s, rho, CasimirVariant::Tilde));
  const Rational sign = q % 2 == 1 ? 1 : -1;  // (-1)^{q+1}
  for (int i = 1; i <= m; ++i) {
    x.minus_coeffs[uz(i - 1)] = rational_pow(Rational(minus.w[uz(i - 1)] - m), q);
    Rational c = 0;
    for (unsigned p = 0; p <= q; ++p) c += k[q - p] * rational_pow(Rational(plus.w[uz(i - 1)]), p);
    x.plus_coeffs[uz(i - 1)] = sign * c;
  }
  std::vector<Term> rhs;
  for (unsigned p = 0; p <= q; ++p)
    rhs.push_back({curvature_token(p), binomial(q, p) * rational_pow(Rational(-m), q - p)});
  x.curvature_terms = normalize_terms(std::move(rhs));
  return x;
}

std::vector<BochnerIdentity> bochner_identities(const HighestWeight& rho, unsigned q) {
  const int m = rho.m();
  std::vector<BochnerIdentity> out;
  if (q == 0) {
    BochnerIdentity a = blank("nabla10", rho, 0);
    BochnerIdentity b = blank("nabla01", rho, 0);
    BochnerIdentity s = blank("sum", rho, 0);
    for (int i = 1; i <= m; ++i) {
      a.minus_coeffs[uz(i - 1)] = 1;
      b.plus_coeffs[uz(i - 1)] = 1;
      s.minus_coeffs[uz(i - 1)] = 1;
      s.plus_coeffs[uz(i - 1)] = 1;
    }
    a.curvature_terms = {{"nabla10*nabla10", 1}};
    b.curvature_terms = {{"nabla01*nabla01", 1}};
    s.curvature_terms = {{"nabla*nabla", 1}};
    out.push_back(a);
    out.push_back(b);
    out.push_back(s);
    out.push_back(relabel(bochner_identity(rho, 0), "difference"));
    return out;
  }
  if (q == 1) {
    BochnerIdentity d = blank("degree-one", rho, 1);
    const ConformalWeightTable minus = conformal_table(rho, Sign::Minus);
    const ConformalWeightTable plus = conformal_table(rho, Sign::Plus);
    for (int i = 1; i <= m; ++i) {
      d.minus_coeffs[uz(i - 1)] = minus.w[uz(i - 1)];
      d.plus_coeffs[uz(i - 1)] = plus.w[uz(i - 1)];
    }
    d.curvature_terms = {{curvature_token(1), 1}};
    out.push_back(d);
  }
  out.push_back(bochner_identity(rho, q));
  return out;
}

BochnerIdentity combine(const std::string& label, const std::vector<std::pair<Rational, const BochnerIdentity*>>& parts) {
  if (parts.empty()) throw BochnerError("empty combination");
  const BochnerIdentity& first = *parts.front().second;
  BochnerIdentity x = blank(label, first.rho, first.q);
  std::vector<Term> ops, rhs;
  for (const auto& [c, y] : parts) {
    if (!(y->rho == first.rho)) throw BochnerError("combination mixes weights");
    x.q = std::max(x.q, y->q);
    for (std::size_t i = 0; i < x.minus_coeffs.size(); ++i) {
      x.minus_coeffs[i] += c * y->minus_coeffs[i];
      x.plus_coeffs[i] += c * y->plus_coeffs[i];
    }
    for (const auto& t : y->operator_terms) ops.push_back({t.token, c * t.coeff});
    for (const auto& t : y->curvature_terms) rhs.push_back({t.token, c * t.coeff});
  }
  x.operator_terms = normalize_terms(std::move(ops));
  x.curvature_terms = normalize_terms(std::move(rhs));
  return x;
}

BochnerIdentity rewrite(const BochnerIdentity& x, const std::string& token, const std::vector<Term>& replacement) {
  BochnerIdentity y = x;
  std::vector<Term> rhs;
  for (const auto& t : x.curvature_terms) {
    if (t.token != token) {
      rhs.push_back(t);
      continue;
    }
    for (const auto& r : replacement) rhs.push_back({r.token, t.coeff * r.coeff});
  }
  y.curvature_terms = normalize_terms(std::move(rhs));
  return y;
}

BochnerIdentity weitzenboeck(const HighestWeight& rho) {
  const int m = rho.m();
  if (m < 2 || rho[1] == rho[m])
    throw BochnerError("the Weitzenboeck formula needs rho^1 > rho^m (associated bundle of rank >= 2); got " +
                       rho.to_string());
  BochnerIdentity x = blank("weitzenboeck", rho, 1);
  const Rational spread = rho[1] - rho[m];
  for (int i = 1; i < m; ++i) x.minus_coeffs[uz(i - 1)] = Rational(2 * (rho[i] - rho[m] + m - i)) / spread;
  for (int i = 2; i <= m; ++i) x.plus_coeffs[uz(i - 1)] = Rational(2 * (rho[1] - rho[i] + i - 1)) / spread;
  for (int i = 0; i < m; ++i)
    if (sgn(x.minus_coeffs[uz(i)]) < 0 || sgn(x.plus_coeffs[uz(i)]) < 0)
      throw BochnerError("negative Weitzenboeck coefficient at " + rho.to_string());
  x.curvature_terms = normalize_terms({{"nabla*nabla", 1},
                                       {curvature_token(1), 2 / spread},
                                       {curvature_token(0), -Rational(rho[1] + rho[m]) / spread}});
  return x;
}

Rational constant_curvature_scalar(const HighestWeight& rho, unsigned q, const Rational& r) {
  const Rational c1 = casimir_eigenvalue(rho, 1, CasimirVariant::Plain);
  const Rational cq = casimir_eigenvalue(rho, q, CasimirVariant::Plain);
  const Rational cq1 = casimir_eigenvalue(rho, q + 1, CasimirVariant::Plain);
  return r / 2 * (cq * c1 + cq1);
}

Rational cpm_holomorphic_eigenvalue(const HighestWeight& rho, int i, const Rational& r) {
  if (i < 1 || i > rho.m()) throw BochnerError("index " + std::to_string(i) + " outside 1.." + std::to_string(rho.m()));
  if (!shift(rho, Sign::Minus, i))
    throw BochnerError("shift " + rho.to_string() + " - mu_" + std::to_string(i) +
                       " is not dominant, so there is no gradient D_-" + std::to_string(i));
  const ConformalWeightTable t = conformal_table(rho, Sign::Minus);
  return r / 2 * t.gamma[uz(i - 1)] * (t.w[uz(i - 1)] + rho.total());
}

EigenvalueBound kirchberg_bound(int m) {
  if (m < 2) throw BochnerError("the eigenvalue bound needs m >= 2");
  EigenvalueBound best{m, 0, -1};
  for (int p = 0; p < m; ++p) {
    const Rational a = Rational(2 * p + 2) / (2 * p + 1);
    const Rational b = Rational(2 * m - 2 * p) / (2 * m - 2 * p - 1);
    const Rational v = std::max(a, b);
    if (best.witness_p < 0 || v < best.bound_coefficient) best = {m, v, p};
  }
  const Rational closed = m % 2 == 0 ? Rational(m) / (m - 1) : Rational(m + 1) / m;
  if (best.bound_coefficient != closed)
    throw BochnerError("min-max value " + to_string(best.bound_coefficient) + " disagrees with the closed form " +
                       to_string(closed));
  return best;
}

std::vector<BochnerIdentity> dolbeault_identities(int m, int p) {
  if (m < 1 || p < 0 || p > m)
    throw BochnerError("degree p=" + std::to_string(p) + " outside 0.." + std::to_string(m));
  std::vector<long> entries(uz(m), 0);
  for (int j = 0; j < p; ++j) entries[uz(j)] = 1;
  const HighestWeight rho(entries);

  const auto q0 = bochner_identities(rho, 0);
  const auto q1 = bochner_identities(rho, 1);
  // R^1 = R^0 on (0,p)-forms.
  const std::vector<Term> r1_to_r0{{curvature_token(0), 1}};
  const BochnerIdentity sum = zero_invalid(relabel(q0[2], "forms.sum"));
  const BochnerIdentity diff = zero_invalid(relabel(q0[3], "forms.difference"));
  const BochnerIdentity deg1 = zero_invalid(relabel(rewrite(q1[0], curvature_token(1), r1_to_r0), "forms.degree-one"));
  const BochnerIdentity weitz = combine("forms.weitzenboeck", {{1, &sum}, {-1, &diff}, {2, &deg1}});

  // Twist by the square root of the canonical bundle: R^0_L = -kappa/4 and R^1_L = -R^1/2.
  const BochnerIdentity spin_sum = relabel(sum, "spin.sum");
  const BochnerIdentity spin_diff = relabel(add_terms(diff, {{"kappa", Rational(-1, 4)}}), "spin.difference");
  const BochnerIdentity spin_deg1 = zero_invalid(relabel(
      rewrite(add_terms(q1[0], {{curvature_token(1), Rational(-1, 2)}}), curvature_token(1), r1_to_r0),
      "spin.degree-one"));
  const BochnerIdentity dirac = combine("spin.dirac", {{1, &spin_sum}, {-1, &spin_diff}, {2, &spin_deg1}});

  // D^2 - nabla^*nabla, with 2 dbar dbar^* = 2(m-p+1) D_{-p}^*D_{-p} and 2 dbar^* dbar = 2(p+1) D_{+(p+1)}^*D_{+(p+1)}.
  BochnerIdentity split = combine("spin.dirac-split", {{1, &dirac}, {-1, &spin_sum}});
  std::vector<Term> ops;
  if (p >= 1) {
    Rational& c = split.minus_coeffs[uz(p - 1)];
    ops.push_back({"2dbar.dbar*", c / (2 * (m - p + 1))});
    c = 0;
  }
  if (p < m) {
    Rational& c = split.plus_coeffs[uz(p)];
    ops.push_back({"2dbar*.dbar", c / (2 * (p + 1))});
    c = 0;
  }
  split.operator_terms = normalize_terms(std::move(ops));

  return {sum, diff, deg1, weitz, spin_sum, spin_diff, spin_deg1, dirac, split};
}

FamilyRank identity_family_rank(const HighestWeight& rho, unsigned q_max) {
  const int m = rho.m();
  const auto minus = conformal_table(rho, Sign::Minus).valid;
  const auto plus = conformal_table(rho, Sign::Plus).valid;
  std::vector<std::size_t> cols_minus, cols_plus;
  for (int i = 0; i < m; ++i) {
    if (minus[uz(i)]) cols_minus.push_back(uz(i));
    if (plus[uz(i)]) cols_plus.push_back(uz(i));
  }
  RationalMatrix rows(q_max + 1, cols_minus.size() + cols_plus.size());
  for (unsigned q = 0; q <= q_max; ++q) {
    const BochnerIdentity x = bochner_identity(rho, q);
    for (std::size_t j = 0; j < cols_minus.size(); ++j) rows(q, j) = x.minus_coeffs[cols_minus[j]];
    for (std::size_t j = 0; j < cols_plus.size(); ++j) rows(q, cols_minus.size() + j) = x.plus_coeffs[cols_plus[j]];
  }
  return {q_max + 1, rows.cols(), rank(rows)};
}

namespace {

// Shared contraction data for one weight.
class SymbolContext {
 public:
  SymbolContext(const CliffordSystem& plus, const CliffordSystem& minus, std::uint64_t budget)
      : plus_(plus), minus_(minus), budget_(budget) {
    if (plus.sign != Sign::Plus || minus.sign != Sign::Minus || !(plus.source.rho == minus.source.rho))
      throw BochnerError("symbol check needs a sign + and a sign - system on the same weight");
    const int m = plus.m();
    for (int i = 1; i <= m; ++i) {
      minus_products_.push_back(products(minus.target(i), m));
      plus_products_.push_back(products(plus.target(i), m));
    }
  }

  VerificationReport check(const BochnerIdentity& x) {
    VerificationReport report;
    const std::string params = "rho=" + x.rho.to_string() + " " + x.label + " q=" + std::to_string(x.q);
    if (!(x.rho == plus_.source.rho)) throw BochnerError("identity and systems disagree on the weight");
    const bool formal = !x.operator_terms.empty() ||
                        std::any_of(x.curvature_terms.begin(), x.curvature_terms.end(),
                                    [](const Term& t) { return t.token == "kappa"; });
    if (formal) {
      report.add("bochner.symbol", params, Status::NotApplicable, "operator or scalar-curvature tokens");
      report.add("bochner.curvature", params, Status::NotApplicable, "operator or scalar-curvature tokens");
      return report;
    }
    const int m = x.m();
    const std::size_t n = plus_.source.dim;
    const Rational full = coefficient_of(x.curvature_terms, "nabla*nabla");
    const Rational half_minus = full + coefficient_of(x.curvature_terms, "nabla10*nabla10");
    const Rational half_plus = full + coefficient_of(x.curvature_terms, "nabla01*nabla01");

    std::vector<std::pair<const std::vector<RationalMatrix>*, Rational>> curvature;
    try {
      for (const auto& t : x.curvature_terms)
        if (t.token.compare(0, 2, "R^") == 0)
          curvature.emplace_back(&power(static_cast<unsigned>(std::stoul(t.token.substr(2)))), t.coeff);
    } catch (const BudgetExceeded& e) {
      report.add("bochner.symbol", params, Status::NotApplicable, e.what());
      report.add("bochner.curvature", params, Status::NotApplicable, e.what());
      return report;
    }

    std::string symbol_witness, curvature_witness;
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l) {
        RationalMatrix lhs_minus(n, n), lhs_plus(n, n);
        for (int i = 1; i <= m; ++i) {
          if (!minus_products_[uz(i - 1)].empty())
            lhs_minus += at(minus_products_[uz(i - 1)], m, k, l) * (x.minus_coeffs[uz(i - 1)] - half_minus);
          if (!plus_products_[uz(i - 1)].empty())
            lhs_plus += at(plus_products_[uz(i - 1)], m, l, k) * (x.plus_coeffs[uz(i - 1)] - half_plus);
        }
        RationalMatrix total = lhs_minus + lhs_plus;
        if (symbol_witness.empty() && !total.is_zero())
          symbol_witness = "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ") " + total.witness();
        RationalMatrix rhs(n, n);
        for (const auto& [pw, c] : curvature) rhs += at(*pw, m, k, l) * c;
        if (curvature_witness.empty() && !(lhs_minus == rhs))
          curvature_witness =
              "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ") " + (lhs_minus - rhs).witness();
      }
    report.check(symbol_witness.empty(), "bochner.symbol", params, symbol_witness);
    report.check(curvature_witness.empty(), "bochner.curvature", params, curvature_witness);
    return report;
  }

 private:
  static std::vector<RationalMatrix> products(const CliffordTarget* t, int m) {
    std::vector<RationalMatrix> a;
    if (!t) return a;
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l) a.push_back(t->adjoints[uz(k - 1)] * t->maps[uz(l - 1)]);
    return a;
  }
  static const RationalMatrix& at(const std::vector<RationalMatrix>& a, int m, int k, int l) {
    return a[uz((k - 1) * m + (l - 1))];
  }
  // pi(e^p_kl) on the common source.
  const std::vector<RationalMatrix>& power(unsigned p) {
    auto it = powers_.find(p);
    if (it != powers_.end()) return it->second;
    const int m = minus_.m();
    std::vector<RationalMatrix> out;
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l) out.push_back(evaluate(minus_.source, e_power(k, l, p, m, budget_)));
    return powers_.emplace(p, std::move(out)).first->second;
  }

  const CliffordSystem& plus_;
  const CliffordSystem& minus_;
  std::uint64_t budget_;
  std::vector<std::vector<RationalMatrix>> minus_products_, plus_products_;
  std::map<unsigned, std::vector<RationalMatrix>> powers_;
};

}  // namespace

VerificationReport verify_symbol_level(const BochnerIdentity& x, const CliffordSystem& plus,
                                       const CliffordSystem& minus, std::uint64_t budget) {
  SymbolContext ctx(plus, minus, budget);
  return ctx.check(x);
}

VerificationReport verify_bochner(const CliffordSystem& plus, const CliffordSystem& minus, unsigned q_max,
                                  std::uint64_t budget) {
  SymbolContext ctx(plus, minus, budget);
  VerificationReport report;
  const HighestWeight& rho = plus.source.rho;
  for (unsigned q = 0; q <= q_max; ++q)
    for (const auto& x : bochner_identities(rho, q)) report.merge(ctx.check(x));
  if (rho.m() >= 2 && rho[1] > rho[rho.m()]) report.merge(ctx.check(weitzenboeck(rho)));
  return report;
}

}  // namespace clifhom
