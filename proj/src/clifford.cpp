#include "clifhom/clifford.hpp"

#include <set>

namespace clifhom {

namespace {

using Vec = std::vector<Rational>;

std::string idx(int k, int l) { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

std::string base_params(const CliffordSystem& sys) {
  return "rho=" + sys.source.rho.to_string() + " sign=" + sign_symbol(sys.sign);
}

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

// Columns a*m + (k-1) of the tensor space, i.e. the image of phi -> phi (x) eps_k.
std::vector<std::size_t> slice_columns(std::size_t dim, int m, int k) {
  std::vector<std::size_t> cols(dim);
  for (std::size_t a = 0; a < dim; ++a) cols[a] = a * uz(m) + uz(k - 1);
  return cols;
}

Rational inner(const Vec& x, const Vec& y, const Vec& g) {
  Rational s = 0;
  for (std::size_t t = 0; t < x.size(); ++t)
    if (sgn(x[t]) != 0 && sgn(y[t]) != 0) s += g[t] * x[t] * y[t];
  return s;
}

// Orthogonal (unnormalized) basis of the column span of the selected columns.
void gram_schmidt(const RationalMatrix& p, const std::vector<std::size_t>& cols, const Vec& g,
                  RationalMatrix& basis, Vec& norms) {
  const std::size_t n = p.rows();
  std::vector<Vec> out;
  norms.clear();
  for (std::size_t c : cols) {
    Vec v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = p(r, c);
    for (std::size_t i = 0; i < out.size(); ++i) {
      Rational coeff = inner(v, out[i], g);
      if (sgn(coeff) == 0) continue;
      coeff /= norms[i];
      for (std::size_t r = 0; r < n; ++r)
        if (sgn(out[i][r]) != 0) v[r] -= coeff * out[i][r];
    }
    Rational norm = inner(v, v, g);
    if (sgn(norm) <= 0) throw CliffordError("degenerate vector in target basis");
    out.push_back(std::move(v));
    norms.push_back(norm);
  }
  basis = RationalMatrix(n, out.size());
  for (std::size_t j = 0; j < out.size(); ++j)
    for (std::size_t r = 0; r < n; ++r) basis(r, j) = out[j][r];
}

// A(k,l) = p(eps_k)^* p(eps_l) for one target.
std::vector<RationalMatrix> pair_products(const CliffordTarget& t, int m) {
  std::vector<RationalMatrix> a;
  a.reserve(uz(m * m));
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= m; ++l) a.push_back(t.adjoints[uz(k - 1)] * t.maps[uz(l - 1)]);
  return a;
}

const RationalMatrix& at(const std::vector<RationalMatrix>& a, int m, int k, int l) {
  return a[uz((k - 1) * m + (l - 1))];
}

// Prop: Pi(b*m + k, a*m + l) = (p_k^* p_l)(b, a).
bool projection_formula_holds(const CliffordTarget& t, const std::vector<RationalMatrix>& a, int m, std::size_t dim,
                              std::string& witness) {
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= m; ++l) {
      const RationalMatrix& pkl = at(a, m, k, l);
      for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t c = 0; c < dim; ++c)
          if (t.projector(b * uz(m) + uz(k - 1), c * uz(m) + uz(l - 1)) != pkl(b, c)) {
            witness = "i=" + std::to_string(t.index) + " (k,l)=" + idx(k, l) + " entry " + idx(int(b), int(c));
            return false;
          }
    }
  return true;
}

}  // namespace

RationalMatrix auxiliary_generator(int m, Sign sign, int k, int l) {
  RationalMatrix a(uz(m), uz(m));
  if (sign == Sign::Plus)
    a(uz(k - 1), uz(l - 1)) = 1;
  else
    a(uz(l - 1), uz(k - 1)) = -1;
  return a;
}

Rational chat_eigenvalue(const HighestWeight& rho, Sign sign, int i) {
  return Rational(-2 * conformal_weight(rho, sign, i));
}

CliffordSystem build_system(const Representation& rep, Sign sign) {
  const int m = rep.m();
  const std::size_t n = rep.dim;
  const std::size_t big = n * uz(m);
  CliffordSystem sys{rep, sign, conformal_table(rep.rho, sign), {}, {}, {}};
  sys.targets.resize(uz(m));

  const RationalMatrix id_m = RationalMatrix::identity(uz(m));
  const RationalMatrix id_n = RationalMatrix::identity(n);
  std::vector<RationalMatrix> tensor_gen(uz(m * m));
  sys.chat = RationalMatrix(big, big);
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= m; ++l) {
      tensor_gen[uz((k - 1) * m + (l - 1))] =
          kron(rep.e(k, l), id_m) + kron(id_n, auxiliary_generator(m, sign, k, l));
      sys.chat += kron(rep.e(k, l), auxiliary_generator(m, sign, l, k));
    }
  sys.chat *= Rational(2);
  sys.tensor_gram = kron(rep.gram, id_m);
  Vec g(big);
  for (std::size_t t = 0; t < big; ++t) g[t] = sys.tensor_gram(t, t);

  std::vector<int> valid;
  std::vector<Rational> spectrum;
  for (int i = 1; i <= m; ++i) {
    auto shifted = shift(rep.rho, sign, i);
    if (!shifted) continue;
    Rational lambda = chat_eigenvalue(rep.rho, sign, i);
    if (sign == Sign::Plus) {
      // Independent route through the second Casimir: c2(rho + mu_i) - c2(rho) - c2(mu_1).
      std::vector<long> mu(uz(m), 0);
      mu[0] = 1;
      Rational via_casimir = casimir_eigenvalue(*shifted, 2, CasimirVariant::Plain) -
                             casimir_eigenvalue(rep.rho, 2, CasimirVariant::Plain) -
                             casimir_eigenvalue(HighestWeight(mu), 2, CasimirVariant::Plain);
      if (via_casimir != lambda) throw CliffordError("chat eigenvalue disagrees with the Casimir difference");
    }
    valid.push_back(i);
    spectrum.push_back(lambda);
  }
  std::vector<RationalMatrix> projectors = spectral_projectors(sys.chat, spectrum);

  for (std::size_t v = 0; v < valid.size(); ++v) {
    const int i = valid[v];
    const HighestWeight shifted = *shift(rep.rho, sign, i);
    std::vector<std::size_t> piv = pivot_columns(projectors[v]);
    if (piv.size() != weyl_dimension(shifted))
      throw CliffordError("projector rank " + std::to_string(piv.size()) + " differs from dim V" +
                          shifted.to_string());
    RationalMatrix embedding;
    Vec norms;
    gram_schmidt(projectors[v], piv, g, embedding, norms);
    const std::size_t d = norms.size();
    CliffordTarget t{i, Representation{shifted, d, {}, {}, RationalMatrix::diagonal(norms)},
                     std::move(projectors[v]), std::move(embedding), {}, {}};

    // Coordinates of a vector x in the image: D^{-1} B^T G x.
    RationalMatrix coords(d, big);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < big; ++c)
        if (sgn(t.embedding(c, r)) != 0) coords(r, c) = t.embedding(c, r) * g[c] / norms[r];

    t.rep.gen.assign(uz(m), std::vector<RationalMatrix>(uz(m)));
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l) {
        RationalMatrix image = tensor_gen[uz((k - 1) * m + (l - 1))] * t.embedding;
        RationalMatrix x = coords * image;
        if (!(t.embedding * x == image)) throw CliffordError("target subspace is not invariant");
        t.rep.gen[uz(k - 1)][uz(l - 1)] = std::move(x);
      }

    for (int k = 1; k <= m; ++k) {
      RationalMatrix slice = t.projector.columns(slice_columns(n, m, k));
      RationalMatrix pk = coords * slice;
      if (!(t.embedding * pk == slice)) throw CliffordError("projected slice leaves the target span");
      t.adjoints.push_back(gram_adjoint(pk, rep.gram, t.rep.gram));
      t.maps.push_back(std::move(pk));
    }
    sys.targets[uz(i - 1)] = std::move(t);
  }
  return sys;
}

VerificationReport verify_relations(const CliffordSystem& sys, unsigned q_max, std::uint64_t budget) {
  VerificationReport report;
  const int m = sys.m();
  const std::size_t n = sys.source.dim;
  const std::size_t big = n * uz(m);
  const std::string base = base_params(sys);
  const RationalMatrix id_n = RationalMatrix::identity(n);
  const auto& w = sys.weights.w;
  const auto& gamma = sys.weights.gamma;

  std::vector<std::vector<RationalMatrix>> products(uz(m));
  for (int i = 1; i <= m; ++i)
    if (const auto* t = sys.target(i)) products[uz(i - 1)] = pair_products(*t, m);

  // Projector family.
  {
    RationalMatrix sum(big, big);
    std::string witness;
    for (int i = 1; i <= m; ++i) {
      const auto* t = sys.target(i);
      if (!t) continue;
      const std::string params = base + " i=" + std::to_string(i);
      report.check(t->embedding.cols() == weyl_dimension(t->rep.rho), "clifford.projector-rank", params,
                   "rank " + std::to_string(t->embedding.cols()));
      bool ok = t->projector * t->projector == t->projector &&
                gram_adjoint(t->projector, sys.tensor_gram, sys.tensor_gram) == t->projector &&
                sys.chat * t->projector == t->projector * chat_eigenvalue(sys.source.rho, sys.sign, i);
      report.check(ok, "clifford.projector", params, "not an orthogonal eigenprojection");
      sum += t->projector;
      for (int j = 1; j < i; ++j)
        if (const auto* u = sys.target(j); u && !(t->projector * u->projector).is_zero())
          witness = "P" + std::to_string(i) + " P" + std::to_string(j) + " != 0";
    }
    if (!(sum == RationalMatrix::identity(big))) witness = "sum " + (sum - RationalMatrix::identity(big)).witness();
    report.check(witness.empty(), "clifford.projector-family", base, witness);
  }

  // Completeness: sum_i p_i(k)^* p_i(l) = delta_kl.
  {
    std::string witness;
    for (int k = 1; k <= m && witness.empty(); ++k)
      for (int l = 1; l <= m && witness.empty(); ++l) {
        RationalMatrix sum(n, n);
        for (int i = 1; i <= m; ++i)
          if (sys.target(i)) sum += at(products[uz(i - 1)], m, k, l);
        RationalMatrix diff = sum - (k == l ? id_n : RationalMatrix(n, n));
        if (!diff.is_zero()) witness = "(k,l)=" + idx(k, l) + " " + diff.witness();
      }
    report.check(witness.empty(), "clifford.completeness", base, witness);
  }

  // Enveloping-algebra elements on V_rho: tilde e for sign +, e for sign -.
  const unsigned q_top = std::max<unsigned>(q_max, uz(m - 1));
  std::vector<std::vector<RationalMatrix>> power(q_top + 1);
  std::vector<RationalMatrix> casimir(q_top + 1);
  unsigned q_avail = 0;
  std::string budget_reason;
  try {
    for (unsigned q = 0; q <= q_top; ++q) {
      for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) {
          PBWElement x = sys.sign == Sign::Plus ? tilde_e_power(k, l, q, m, budget) : e_power(k, l, q, m, budget);
          power[q].push_back(evaluate(sys.source, x));
        }
      casimir[q] = evaluate(sys.source, casimir_element(m, q, sys.sign == Sign::Plus ? CasimirVariant::Tilde
                                                                                    : CasimirVariant::Plain,
                                                        budget));
      q_avail = q + 1;
    }
  } catch (const BudgetExceeded& e) {
    budget_reason = e.what();
  }

  // Degree-q trace expansions.
  for (unsigned q = 0; q <= q_max; ++q) {
    const std::string params = base + " q=" + std::to_string(q);
    if (q >= q_avail) {
      report.add("clifford.trace-expansion", params, Status::NotApplicable, budget_reason);
      report.add("clifford.trace-expansion.traced", params, Status::NotApplicable, budget_reason);
      continue;
    }
    std::string witness;
    RationalMatrix traced(n, n);
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l) {
        RationalMatrix sum(n, n);
        for (int i = 1; i <= m; ++i)
          if (sys.target(i)) sum += at(products[uz(i - 1)], m, k, l) * rational_pow(w[uz(i - 1)], q);
        if (k == l) traced += sum;
        if (witness.empty() && !(sum == at(power[q], m, k, l)))
          witness = "(k,l)=" + idx(k, l) + " " + (sum - at(power[q], m, k, l)).witness();
      }
    report.check(witness.empty(), "clifford.trace-expansion", params, witness);
    report.check(traced == casimir[q], "clifford.trace-expansion.traced", params, (traced - casimir[q]).witness());
  }

  // Vandermonde-inverted expansions, including the zero maps at invalid shifts.
  if (q_avail >= uz(m)) {
    RationalMatrix vinv = vandermonde_inverse(w);
    std::string witness;
    for (int i = 1; i <= m && witness.empty(); ++i)
      for (int k = 1; k <= m && witness.empty(); ++k)
        for (int l = 1; l <= m && witness.empty(); ++l) {
          RationalMatrix rhs(n, n);
          for (int j = 1; j <= m; ++j)
            if (sgn(vinv(uz(i - 1), uz(j - 1))) != 0) rhs += at(power[uz(j - 1)], m, k, l) * vinv(uz(i - 1), uz(j - 1));
          RationalMatrix lhs = sys.target(i) ? at(products[uz(i - 1)], m, k, l) : RationalMatrix(n, n);
          if (!(lhs == rhs)) witness = "i=" + std::to_string(i) + " (k,l)=" + idx(k, l) + " " + (lhs - rhs).witness();
        }
    report.check(witness.empty(), "clifford.vandermonde", base, witness);
  } else {
    report.add("clifford.vandermonde", base, Status::NotApplicable, budget_reason);
  }

  for (int i = 1; i <= m; ++i) {
    const std::string params = base + " i=" + std::to_string(i);
    const auto* t = sys.target(i);
    if (!t) {
      report.check(sgn(gamma[uz(i - 1)]) == 0, "clifford.trace-constant", params,
                   "gamma=" + to_string(gamma[uz(i - 1)]) + " at an invalid shift");
      continue;
    }
    const auto& a = products[uz(i - 1)];

    // Trace constant gamma.
    RationalMatrix trace(n, n);
    for (int k = 1; k <= m; ++k) trace += at(a, m, k, k);
    report.check(trace == RationalMatrix::scalar(n, gamma[uz(i - 1)]), "clifford.trace-constant", params,
                 (trace - RationalMatrix::scalar(n, gamma[uz(i - 1)])).witness());

    // Target normalization: sum_k p p^* = id.
    RationalMatrix norm(t->rep.dim, t->rep.dim);
    for (int k = 1; k <= m; ++k) norm += t->maps[uz(k - 1)] * t->adjoints[uz(k - 1)];
    report.check(norm == RationalMatrix::identity(t->rep.dim), "clifford.target-normalization", params,
                 (norm - RationalMatrix::identity(t->rep.dim)).witness());

    // Intertwining with the conformal weight.
    std::string witness;
    for (int k = 1; k <= m && witness.empty(); ++k) {
      RationalMatrix rhs(t->rep.dim, n);
      for (int l = 1; l <= m; ++l) {
        if (sys.sign == Sign::Plus)
          rhs -= t->maps[uz(l - 1)] * sys.source.e(k, l);
        else
          rhs += t->maps[uz(l - 1)] * sys.source.e(l, k);
      }
      RationalMatrix lhs = t->maps[uz(k - 1)] * Rational(w[uz(i - 1)]);
      if (!(lhs == rhs)) witness = "k=" + std::to_string(k) + " " + (lhs - rhs).witness();
    }
    report.check(witness.empty(), "clifford.intertwining", params, witness);

    witness.clear();
    report.check(projection_formula_holds(*t, a, m, n, witness), "clifford.projection-formula", params, witness);

    // pi_target(e_kl) p(eps_j) - p(eps_j) pi(e_kl) = p(aux(e_kl) eps_j).
    witness.clear();
    for (int k = 1; k <= m && witness.empty(); ++k)
      for (int l = 1; l <= m && witness.empty(); ++l) {
        RationalMatrix aux = auxiliary_generator(m, sys.sign, k, l);
        for (int j = 1; j <= m && witness.empty(); ++j) {
          RationalMatrix lhs = t->rep.e(k, l) * t->maps[uz(j - 1)] - t->maps[uz(j - 1)] * sys.source.e(k, l);
          RationalMatrix rhs(t->rep.dim, n);
          for (int r = 1; r <= m; ++r)
            if (sgn(aux(uz(r - 1), uz(j - 1))) != 0) rhs += t->maps[uz(r - 1)] * aux(uz(r - 1), uz(j - 1));
          if (!(lhs == rhs))
            witness = "e" + std::to_string(k) + std::to_string(l) + " eps" + std::to_string(j) + " " +
                      (lhs - rhs).witness();
        }
      }
    report.check(witness.empty(), "clifford.equivariance", params, witness);

    // The summand carries the expected second Casimir.
    RationalMatrix c2(t->rep.dim, t->rep.dim);
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l) c2 += t->rep.e(k, l) * t->rep.e(l, k);
    Rational expected = casimir_eigenvalue(t->rep.rho, 2, CasimirVariant::Plain);
    report.check(c2 == RationalMatrix::scalar(t->rep.dim, expected), "clifford.target-casimir", params,
                 "expected " + to_string(expected) + " " + (c2 - RationalMatrix::scalar(t->rep.dim, expected)).witness());
  }
  return report;
}

VerificationReport verify_cross_relations(const CliffordSystem& plus, const CliffordSystem& minus, unsigned q_max) {
  VerificationReport report;
  if (plus.sign != Sign::Plus || minus.sign != Sign::Minus || !(plus.source.rho == minus.source.rho))
    throw CliffordError("cross relations need a sign + and a sign - system on the same weight");
  const int m = plus.m();
  const std::size_t n = plus.source.dim;
  const HighestWeight& rho = plus.source.rho;
  const std::string base = "rho=" + rho.to_string();

  std::vector<std::vector<RationalMatrix>> pp(uz(m)), pm(uz(m));
  std::vector<int> valid_plus, valid_minus;
  for (int i = 1; i <= m; ++i) {
    if (const auto* t = plus.target(i)) {
      pp[uz(i - 1)] = pair_products(*t, m);
      valid_plus.push_back(i);
    }
    if (const auto* t = minus.target(i)) {
      pm[uz(i - 1)] = pair_products(*t, m);
      valid_minus.push_back(i);
    }
  }
  report.check(valid_plus.size() == valid_minus.size(), "cross-relation.component-balance", base,
               std::to_string(valid_plus.size()) + " vs " + std::to_string(valid_minus.size()));

  std::vector<Rational> kc, kt;
  for (unsigned s = 0; s <= q_max; ++s) {
    kc.push_back(k_of_casimirs(s, rho, CasimirVariant::Plain));
    kt.push_back(k_of_casimirs(s, rho, CasimirVariant::Tilde));
  }

  // Each relation as a coefficient row over the symbols p_+i(k)^*p_+i(l), then p_-i(l)^*p_-i(k).
  RationalMatrix rows(2 * (q_max + 1), valid_plus.size() + valid_minus.size());
  const auto& wp = plus.weights.w;
  const auto& wm = minus.weights.w;
  for (unsigned q = 0; q <= q_max; ++q) {
    const std::string params = base + " q=" + std::to_string(q);
    const Rational sign = q % 2 == 0 ? 1 : -1;
    // (lhs weight, lhs products, rhs conformal weights, rhs K scalars, rhs products)
    auto run = [&](const std::vector<long>& wl, const std::vector<std::vector<RationalMatrix>>& al,
                   const std::vector<int>& vl, const std::vector<long>& wr, const std::vector<Rational>& kk,
                   const std::vector<std::vector<RationalMatrix>>& ar, const std::vector<int>& vr,
                   std::size_t row, bool lhs_first, const std::string& tag) {
      std::vector<Rational> lc, rc;
      for (int i : vl) lc.push_back(rational_pow(Rational(wl[uz(i - 1)] - m), q));
      for (int i : vr) {
        Rational c = 0;
        for (unsigned p = 0; p <= q; ++p) c += kk[q - p] * rational_pow(Rational(wr[uz(i - 1)]), p);
        rc.push_back(sign * c);
      }
      std::size_t off_l = lhs_first ? 0 : vr.size(), off_r = lhs_first ? vl.size() : 0;
      for (std::size_t j = 0; j < lc.size(); ++j) rows(row, off_l + j) = lc[j];
      for (std::size_t j = 0; j < rc.size(); ++j) rows(row, off_r + j) = -rc[j];

      std::string witness;
      for (int k = 1; k <= m && witness.empty(); ++k)
        for (int l = 1; l <= m && witness.empty(); ++l) {
          RationalMatrix lhs(n, n), rhs(n, n);
          for (std::size_t j = 0; j < vl.size(); ++j) lhs += at(al[uz(vl[j] - 1)], m, k, l) * lc[j];
          for (std::size_t j = 0; j < vr.size(); ++j) rhs += at(ar[uz(vr[j] - 1)], m, l, k) * rc[j];
          if (!(lhs == rhs)) witness = "(k,l)=" + idx(k, l) + " " + (lhs - rhs).witness();
        }
      report.check(witness.empty(), tag, params, witness);
    };
    run(wp, pp, valid_plus, wm, kc, pm, valid_minus, 2 * q, true, "cross-relation.plus");
    run(wm, pm, valid_minus, wp, kt, pp, valid_plus, 2 * q + 1, false, "cross-relation.minus");
  }
  report.add("cross-relation.rank", base + " q<=" + std::to_string(q_max), Status::Pass,
             "rank " + std::to_string(rank(rows)) + " of " + std::to_string(rows.rows()) + " relations over " +
                 std::to_string(rows.cols()) + " symbols");
  return report;
}

std::optional<CliffordSystem> build_dual_system(const CliffordSystem& sys, int i) {
  const auto* t = sys.target(i);
  if (!t) return std::nullopt;
  return build_system(t->rep, opposite(sys.sign));
}

VerificationReport verify_dual_pairing(const CliffordSystem& sys, const CliffordSystem* dual, int i) {
  VerificationReport report;
  const int m = sys.m();
  const std::string params = base_params(sys) + " i=" + std::to_string(i);
  const auto* t = sys.target(i);
  if (!t) {
    report.add("dual-pairing", params, Status::NotApplicable, "invalid shift");
    return report;
  }
  const CliffordTarget* back = dual ? dual->target(i) : nullptr;
  if (!dual || dual->sign != opposite(sys.sign) || dual->source.dim != t->rep.dim || !back) {
    report.check(false, "dual-pairing", params, "dual system missing or not built on this target");
    return report;
  }
  const Rational gamma = sys.weights.gamma[uz(i - 1)];
  const Rational ratio_sq = 1 / gamma;
  std::string witness;
  for (int k = 1; k <= m && witness.empty(); ++k)
    for (int l = 1; l <= m && witness.empty(); ++l) {
      RationalMatrix lhs = back->adjoints[uz(k - 1)] * back->maps[uz(l - 1)];
      RationalMatrix rhs = t->maps[uz(k - 1)] * t->adjoints[uz(l - 1)] * ratio_sq;
      if (!(lhs == rhs)) witness = "(k,l)=" + idx(k, l) + " " + (lhs - rhs).witness();
    }
  report.check(witness.empty(), "dual-pairing", params, witness);
  const Rational back_gamma = dual->weights.gamma[uz(i - 1)];
  report.check(back_gamma * gamma == 1, "dual-pairing.gamma-reciprocal", params,
               to_string(back_gamma) + " * " + to_string(gamma));
  if (witness.empty()) report.add("dual-pairing.ratio-squared", params, Status::Pass, to_string(ratio_sq));
  return report;
}

std::vector<SpinorTableRow> spinor_table(int m, int p) {
  if (m < 1 || p < 0 || p > m) throw CliffordError("spinor degree out of range");
  const long mm = m, pp = p;
  return {
      {Sign::Plus, 1, "+1", -1, make_rational(pp * (mm + 1), pp + 1)},
      {Sign::Plus, p + 1, "+(p+1)", pp, make_rational(mm - pp, pp + 1)},
      {Sign::Minus, m, "-m", 0, make_rational((mm + 1) * (mm - pp), mm - pp + 1)},
      {Sign::Minus, p, "-p", mm - pp + 1, make_rational(pp, mm - pp + 1)},
  };
}

namespace {

HighestWeight spinor_weight(int m, int p) {
  std::vector<long> v(uz(m), 0);
  for (int i = 0; i < p; ++i) v[uz(i)] = 1;
  return HighestWeight(v);
}

}  // namespace

VerificationReport verify_spinor_table(int m, int p) {
  VerificationReport report;
  const HighestWeight rho = spinor_weight(m, p);
  const std::string base = "m=" + std::to_string(m) + " p=" + std::to_string(p);
  std::set<std::pair<int, int>> covered;
  std::string witness;
  for (const auto& row : spinor_table(m, p)) {
    if (sgn(row.gamma) == 0) continue;
    if (row.index < 1 || row.index > m) {
      witness = row.label + " has nonzero gamma outside 1..m";
      break;
    }
    auto table = conformal_table(rho, row.sign);
    const std::size_t j = uz(row.index - 1);
    if (table.w[j] != row.w || table.gamma[j] != row.gamma)
      witness = row.label + ": table (" + std::to_string(table.w[j]) + ", " + to_string(table.gamma[j]) +
                ") closed form (" + std::to_string(row.w) + ", " + to_string(row.gamma) + ")";
    covered.insert({sign_value(row.sign), row.index});
  }
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    auto table = conformal_table(rho, s);
    for (int i = 1; i <= m; ++i)
      if (!covered.count({sign_value(s), i}) && sgn(table.gamma[uz(i - 1)]) != 0)
        witness = std::string(sign_symbol(s)) + std::to_string(i) + " has gamma " + to_string(table.gamma[uz(i - 1)]);
  }
  report.check(witness.empty(), "spinor.table", base, witness);
  return report;
}

VerificationReport verify_spinor_model(int m) {
  if (m < 2) throw CliffordError("the spinor model needs m >= 2");
  VerificationReport report;
  for (int p = 0; p <= m; ++p) {
    const std::string base = "m=" + std::to_string(m) + " p=" + std::to_string(p);
    report.merge(verify_spinor_table(m, p));

    const Representation rep = build_rep(spinor_weight(m, p));
    const std::size_t n = rep.dim;
    const CliffordSystem plus = build_system(rep, Sign::Plus);
    const CliffordSystem minus = build_system(rep, Sign::Minus);

    std::set<int> vp, vm, expect_p{1}, expect_m{m};
    if (p < m) expect_p.insert(p + 1);
    if (p >= 1) expect_m.insert(p);
    for (int i = 1; i <= m; ++i) {
      if (plus.target(i)) vp.insert(i);
      if (minus.target(i)) vm.insert(i);
    }
    report.check(vp == expect_p && vm == expect_m, "spinor.summands", base, "unexpected set of valid shifts");

    auto products = [&](const CliffordSystem& sys, int i) {
      const auto* t = (i >= 1 && i <= m) ? sys.target(i) : nullptr;
      return t ? pair_products(*t, m) : std::vector<RationalMatrix>(uz(m * m), RationalMatrix(n, n));
    };
    const auto create = products(plus, p + 1);   // zero when p = m
    const auto annihilate = products(minus, p);  // zero when p = 0

    std::string clifford, creation;
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l) {
        RationalMatrix lhs = at(create, m, k, l) * Rational(p + 1) + at(annihilate, m, l, k) * Rational(m - p + 1);
        RationalMatrix delta = k == l ? RationalMatrix::identity(n) : RationalMatrix(n, n);
        if (clifford.empty() && !(lhs == delta)) clifford = "(k,l)=" + idx(k, l) + " " + (lhs - delta).witness();
        RationalMatrix ekl = at(annihilate, m, k, l) * Rational(m - p + 1);
        if (creation.empty() && !(ekl == rep.e(k, l)))
          creation = "(k,l)=" + idx(k, l) + " " + (ekl - rep.e(k, l)).witness();
      }
    report.check(clifford.empty(), "spinor.clifford-relation", base, clifford);
    report.check(creation.empty(), "spinor.creation-annihilation", base, creation);

    // Degree zero on each side, and the degree-one sign + relation with the closed-form weights.
    std::string zero, one;
    std::vector<std::vector<RationalMatrix>> pp, pm;
    for (int i : vp) pp.push_back(products(plus, i));
    for (int i : vm) pm.push_back(products(minus, i));
    const auto plus_one = products(plus, 1);
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l) {
        RationalMatrix delta = k == l ? RationalMatrix::identity(n) : RationalMatrix(n, n);
        RationalMatrix sp(n, n), sm(n, n);
        for (const auto& a : pp) sp += at(a, m, k, l);
        for (const auto& a : pm) sm += at(a, m, l, k);
        if (zero.empty() && !(sp == delta && sm == delta)) zero = "(k,l)=" + idx(k, l);
        if (p >= 1) {
          RationalMatrix lhs = at(create, m, k, l) * Rational(p) - at(plus_one, m, k, l);
          RationalMatrix rhs = rep.e(l, k) * Rational(-1);
          if (one.empty() && !(lhs == rhs)) one = "(k,l)=" + idx(k, l) + " " + (lhs - rhs).witness();
        }
      }
    report.check(zero.empty(), "spinor.degree-zero", base, zero);
    if (p >= 1)
      report.check(one.empty(), "spinor.degree-one", base, one);
    else
      report.add("spinor.degree-one", base, Status::NotApplicable, "+1 and +(p+1) coincide at p=0");

    // Projection formulas onto the exterior neighbours.
    std::string proj;
    if (p < m) projection_formula_holds(*plus.target(p + 1), create, m, n, proj);
    if (proj.empty() && p >= 1) projection_formula_holds(*minus.target(p), annihilate, m, n, proj);
    report.check(proj.empty(), "spinor.projection-formula", base, proj);
  }
  return report;
}

}  // namespace clifhom
