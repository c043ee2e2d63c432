#include "clifhom/gtrep.hpp"

#include <deque>
#include <map>

namespace clifhom {

std::vector<GTPattern> gt_patterns(const HighestWeight& rho) {
  const int m = rho.m();
  std::vector<GTPattern> out;
  GTPattern cur;
  cur.rows.resize(static_cast<std::size_t>(m));
  cur.rows[static_cast<std::size_t>(m - 1)] = rho.entries();
  // Fill row r (length r) between the entries of row r+1, then recurse downwards.
  auto fill_row = [&](auto&& self, int r, std::size_t i) -> void {
    if (r == 0) {
      out.push_back(cur);
      return;
    }
    auto& row = cur.rows[static_cast<std::size_t>(r - 1)];
    const auto& above = cur.rows[static_cast<std::size_t>(r)];
    if (i == static_cast<std::size_t>(r)) {
      self(self, r - 1, 0);
      return;
    }
    row.resize(static_cast<std::size_t>(r));
    for (long v = above[i]; v >= above[i + 1]; --v) {
      row[i] = v;
      self(self, r, i + 1);
    }
  };
  fill_row(fill_row, m - 1, 0);
  return out;
}

namespace {

// l_{ki} = lambda_{ki} - i + 1 with 1-based row k and position i.
long shifted_entry(const GTPattern& p, int k, int i) {
  return p.rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] - i + 1;
}

}  // namespace

Representation build_rep(const HighestWeight& rho, std::size_t max_dim) {
  const int m = rho.m();
  const std::uint64_t expected = weyl_dimension(rho);
  if (expected > max_dim)
    throw RepresentationError("dimension " + std::to_string(expected) + " of " + rho.to_string() +
                              " exceeds the limit " + std::to_string(max_dim));
  Representation rep{rho, 0, gt_patterns(rho), {}, {}};
  rep.dim = rep.basis.size();
  if (rep.dim != expected) throw RepresentationError("pattern count disagrees with the Weyl dimension");

  std::map<GTPattern, std::size_t> index;
  for (std::size_t a = 0; a < rep.dim; ++a) index.emplace(rep.basis[a], a);
  auto find = [&](const GTPattern& p) -> long {
    auto it = index.find(p);
    return it == index.end() ? -1 : static_cast<long>(it->second);
  };

  rep.gen.assign(static_cast<std::size_t>(m), std::vector<RationalMatrix>(static_cast<std::size_t>(m),
                                                                          RationalMatrix(rep.dim, rep.dim)));
  auto gen = [&](int k, int l) -> RationalMatrix& {
    return rep.gen[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
  };

  for (std::size_t a = 0; a < rep.dim; ++a) {
    const GTPattern& p = rep.basis[a];
    for (int k = 1; k <= m; ++k) {
      long w = 0;
      for (long v : p.rows[static_cast<std::size_t>(k - 1)]) w += v;
      if (k > 1)
        for (long v : p.rows[static_cast<std::size_t>(k - 2)]) w -= v;
      gen(k, k)(a, a) = w;
    }
    for (int k = 1; k < m; ++k) {
      for (int i = 1; i <= k; ++i) {
        const long lki = shifted_entry(p, k, i);
        Rational denom = 1;
        for (int j = 1; j <= k; ++j)
          if (j != i) denom *= lki - shifted_entry(p, k, j);

        GTPattern up = p;
        up.rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] += 1;
        if (long b = find(up); b >= 0) {
          Rational num = 1;
          for (int j = 1; j <= k + 1; ++j) num *= lki - shifted_entry(p, k + 1, j);
          gen(k, k + 1)(static_cast<std::size_t>(b), a) = -num / denom;
        }
        GTPattern down = p;
        down.rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)] -= 1;
        if (long b = find(down); b >= 0) {
          Rational num = 1;
          for (int j = 1; j <= k - 1; ++j) num *= lki - shifted_entry(p, k - 1, j);
          gen(k + 1, k)(static_cast<std::size_t>(b), a) = num / denom;
        }
      }
    }
  }

  // e_kl = [e_{k,l-1}, e_{l-1,l}] above the diagonal, [e_{k,l+1}, e_{l+1,l}] below.
  for (int d = 2; d < m; ++d) {
    for (int k = 1; k + d <= m; ++k) {
      int l = k + d;
      gen(k, l) = gen(k, l - 1) * gen(l - 1, l) - gen(l - 1, l) * gen(k, l - 1);
      gen(l, k) = gen(l, k + 1) * gen(k + 1, k) - gen(k + 1, k) * gen(l, k + 1);
    }
  }

  rep.gram = invariant_gram(rep);
  return rep;
}

RationalMatrix invariant_gram(const Representation& rep) {
  const int m = rep.m();
  const std::size_t n = rep.dim;
  std::vector<Rational> g(n);
  std::vector<bool> known(n, false);
  if (n == 0) return {};
  g[0] = 1;
  known[0] = true;

  // Edges come from the simple raising/lowering pairs; A(r,c) G(r) = G(c) B(c,r).
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (int k = 1; k < m; ++k) {
      const RationalMatrix& a = rep.e(k, k + 1);
      const RationalMatrix& b = rep.e(k + 1, k);
      for (std::size_t u = 0; u < n; ++u) {
        // raising v -> u
        if (sgn(a(u, v)) != 0 && !known[u]) {
          if (sgn(b(v, u)) == 0) throw RepresentationError("raising and lowering supports disagree");
          g[u] = g[v] * b(v, u) / a(u, v);
          known[u] = true;
          queue.push_back(u);
        }
        // lowering v -> u, i.e. raising u -> v
        if (sgn(a(v, u)) != 0 && !known[u]) {
          if (sgn(b(u, v)) == 0) throw RepresentationError("raising and lowering supports disagree");
          g[u] = g[v] * a(v, u) / b(u, v);
          known[u] = true;
          queue.push_back(u);
        }
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (!known[u]) throw RepresentationError("gram system is disconnected");
    if (sgn(g[u]) <= 0) throw RepresentationError("invariant form is not positive");
  }
  RationalMatrix gram = RationalMatrix::diagonal(g);
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= m; ++l)
      if (!(gram_adjoint(rep.e(k, l), gram, gram) == rep.e(l, k)))
        throw RepresentationError("inconsistent gram system at e" + std::to_string(k) + std::to_string(l));
  return gram;
}

RationalMatrix evaluate(const Representation& rep, const PBWElement& x) {
  if (x.m() != rep.m()) throw RepresentationError("rank mismatch in evaluate");
  RationalMatrix result(rep.dim, rep.dim);
  // Map order keeps shared prefixes adjacent, so prefix products are reused.
  std::vector<RationalMatrix> prefix{RationalMatrix::identity(rep.dim)};
  const Monomial* previous = nullptr;
  for (const auto& [mono, coeff] : x.terms()) {
    std::size_t common = 0;
    if (previous)
      while (common < previous->size() && common < mono.size() && (*previous)[common] == mono[common]) ++common;
    prefix.resize(common + 1);
    for (std::size_t j = common; j < mono.size(); ++j) {
      auto g = x.decode(mono[j]);
      prefix.push_back(prefix.back() * rep.e(g.k, g.l));
    }
    result += prefix[mono.size()] * coeff;
    previous = &mono;
  }
  return result;
}

VerificationReport verify_representation(const Representation& rep) {
  VerificationReport report;
  const int m = rep.m();
  const std::string params = "rho=" + rep.rho.to_string();
  report.check(rep.dim == weyl_dimension(rep.rho), "rep.dimension", params,
               "dim=" + std::to_string(rep.dim));

  std::string witness;
  for (int i = 1; i <= m && witness.empty(); ++i)
    for (int j = 1; j <= m && witness.empty(); ++j)
      for (int k = 1; k <= m && witness.empty(); ++k)
        for (int l = 1; l <= m && witness.empty(); ++l) {
          RationalMatrix lhs = rep.e(i, j) * rep.e(k, l) - rep.e(k, l) * rep.e(i, j);
          RationalMatrix rhs(rep.dim, rep.dim);
          if (j == k) rhs += rep.e(i, l);
          if (l == i) rhs -= rep.e(k, j);
          if (!(lhs == rhs))
            witness = "[e" + std::to_string(i) + std::to_string(j) + ",e" + std::to_string(k) +
                      std::to_string(l) + "] " + (lhs - rhs).witness();
        }
  report.check(witness.empty(), "rep.commutation", params, witness);

  RationalMatrix trace(rep.dim, rep.dim);
  bool diagonal = true;
  for (int k = 1; k <= m; ++k) {
    diagonal = diagonal && rep.e(k, k).is_diagonal();
    trace += rep.e(k, k);
  }
  Rational c1;
  bool graded = diagonal && trace.is_scalar(&c1) && c1 == rep.rho.total();
  report.check(graded, "rep.weight-grading", params, "first Casimir " + trace.witness());

  witness.clear();
  for (int k = 1; k <= m && witness.empty(); ++k)
    for (int l = 1; l <= m && witness.empty(); ++l)
      if (!(gram_adjoint(rep.e(k, l), rep.gram, rep.gram) == rep.e(l, k)))
        witness = "e" + std::to_string(k) + std::to_string(l);
  report.check(witness.empty(), "rep.unitarity", params, witness);

  bool positive = rep.gram.is_diagonal();
  for (std::size_t a = 0; a < rep.dim && positive; ++a) positive = sgn(rep.gram(a, a)) > 0;
  report.check(positive, "rep.gram-positive", params, rep.gram.witness());
  return report;
}

std::vector<PBWElement> casimir_elements(int m, unsigned q_max, CasimirVariant variant, std::uint64_t budget) {
  std::vector<PBWElement> out;
  for (unsigned q = 0; q <= q_max; ++q) out.push_back(casimir_element(m, q, variant, budget));
  return out;
}

VerificationReport verify_casimir_action(const Representation& rep, const std::vector<PBWElement>& plain,
                                         const std::vector<PBWElement>& tilde) {
  VerificationReport report;
  const std::string base = "rho=" + rep.rho.to_string();
  auto run = [&](const std::vector<PBWElement>& elems, CasimirVariant variant, const char* tag) {
    for (std::size_t q = 0; q < elems.size(); ++q) {
      const RationalMatrix a = evaluate(rep, elems[q]);
      const Rational expect = casimir_eigenvalue(rep.rho, static_cast<unsigned>(q), variant);
      Rational value;
      const bool ok = a.is_scalar(&value) && value == expect;
      report.check(ok, tag, base + " q=" + std::to_string(q),
                   ok ? "" : "expected " + to_string(expect) + ", " + a.witness());
      if (variant == CasimirVariant::Plain && q == 2) {
        Rational closed = 0;
        for (int i = 1; i <= rep.m(); ++i) closed += rep.rho[i] * (rep.rho[i] + rep.m() + 1 - 2 * i);
        report.check(ok && value == closed, "casimir.second-closed-form", base,
                     "closed form " + to_string(closed) + ", matrix " + a.witness());
      }
    }
  };
  run(plain, CasimirVariant::Plain, "casimir.plain");
  run(tilde, CasimirVariant::Tilde, "casimir.tilde");
  return report;
}

}  // namespace clifhom
