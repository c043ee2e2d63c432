#include "clifhom/envalg.hpp"

#include <algorithm>
#include <sstream>

namespace clifhom {

namespace {

std::uint16_t encode(int m, int k, int l) {
  if (k < 1 || k > m || l < 1 || l > m) throw std::out_of_range("generator index out of range");
  return static_cast<std::uint16_t>((k - 1) * m + (l - 1));
}

void add_to(PBWElement::Terms& terms, const Monomial& mono, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

// Rewrites words into normal order; memoizes the normal form of every unsorted word it meets.
class Normalizer {
 public:
  Normalizer(int m, std::uint64_t budget) : m_(m), budget_(budget) {}

  void accumulate(const Monomial& w, const Rational& c, PBWElement::Terms& out) {
    if (++work_ > budget_)
      throw BudgetExceeded("normal ordering exceeded the term budget of " + std::to_string(budget_));
    if (std::is_sorted(w.begin(), w.end())) {
      add_to(out, w, c);
      return;
    }
    const auto& expanded = expand(w);
    for (const auto& [mono, coeff] : expanded) add_to(out, mono, coeff * c);
  }

 private:
  const PBWElement::Terms& expand(const Monomial& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    PBWElement::Terms t;
    std::size_t i = 0;
    while (w[i] <= w[i + 1]) ++i;
    Monomial swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    accumulate(swapped, 1, t);
    // Y X = X Y + [Y, X] with [e_ab, e_cd] = d_bc e_ad - d_da e_cb.
    const int a = w[i] / m_ + 1, b = w[i] % m_ + 1;
    const int c = w[i + 1] / m_ + 1, d = w[i + 1] % m_ + 1;
    auto contracted = [&](int k, int l) {
      Monomial r(w.begin(), w.begin() + static_cast<long>(i));
      r.push_back(encode(m_, k, l));
      r.insert(r.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      return r;
    };
    if (b == c) accumulate(contracted(a, d), 1, t);
    if (d == a) accumulate(contracted(c, b), -1, t);
    return memo_.emplace(w, std::move(t)).first->second;
  }

  int m_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  std::map<Monomial, PBWElement::Terms> memo_;
};

void check_word_budget(int m, unsigned q, std::uint64_t budget) {
  std::uint64_t words = 1;
  for (unsigned i = 1; i < q; ++i) {
    words *= static_cast<std::uint64_t>(m);
    if (words > budget)
      throw BudgetExceeded("expansion of degree " + std::to_string(q) + " exceeds the term budget of " +
                           std::to_string(budget));
  }
}

}  // namespace

// ── PBWElement ──

PBWElement::PBWElement(int m) : m_(m) {
  if (m < 1 || m > 255) throw std::out_of_range("rank out of range");
}

PBWElement PBWElement::scalar(int m, const Rational& value) {
  PBWElement x(m);
  add_to(x.terms_, {}, value);
  return x;
}

PBWElement PBWElement::generator(int m, int k, int l) {
  PBWElement x(m);
  x.terms_[{encode(m, k, l)}] = 1;
  return x;
}

std::size_t PBWElement::degree() const {
  std::size_t d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.size());
  return d;
}

Generator PBWElement::decode(std::uint16_t code) const { return {code / m_ + 1, code % m_ + 1}; }

void PBWElement::add_normal_term(const Monomial& mono, const Rational& coeff) {
  if (!std::is_sorted(mono.begin(), mono.end())) throw std::invalid_argument("monomial not in normal order");
  add_to(terms_, mono, coeff);
}

PBWElement& PBWElement::operator+=(const PBWElement& other) {
  if (other.m_ != m_) throw std::invalid_argument("rank mismatch");
  for (const auto& [mono, c] : other.terms_) add_to(terms_, mono, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& other) {
  if (other.m_ != m_) throw std::invalid_argument("rank mismatch");
  for (const auto& [mono, c] : other.terms_) add_to(terms_, mono, -c);
  return *this;
}

PBWElement& PBWElement::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= s;
  return *this;
}

std::string PBWElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && !mono.empty();
    if (!unit) out << mag.get_str();
    for (std::size_t j = 0; j < mono.size(); ++j) {
      auto g = decode(mono[j]);
      if (!unit || j > 0) out << "*";
      if (m_ < 10)
        out << "e" << g.k << g.l;
      else
        out << "e(" << g.k << "," << g.l << ")";
    }
  }
  return out.str();
}

// ── algebra operations ──

PBWElement pbw_normalize(int m, const std::vector<Generator>& word, const Rational& coeff,
                         std::uint64_t budget) {
  PBWElement out(m);
  Monomial w;
  w.reserve(word.size());
  for (const auto& g : word) w.push_back(encode(m, g.k, g.l));
  PBWElement::Terms terms;
  Normalizer(m, budget).accumulate(w, coeff, terms);
  for (const auto& [mono, c] : terms) out.add_normal_term(mono, c);
  return out;
}

PBWElement multiply(const PBWElement& a, const PBWElement& b, std::uint64_t budget) {
  if (a.m() != b.m()) throw std::invalid_argument("rank mismatch");
  if (static_cast<double>(a.terms().size()) * static_cast<double>(b.terms().size()) >
      static_cast<double>(budget))
    throw BudgetExceeded("product exceeds the term budget of " + std::to_string(budget));
  Normalizer norm(a.m(), budget);
  PBWElement::Terms terms;
  Monomial w;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      w = ma;
      w.insert(w.end(), mb.begin(), mb.end());
      norm.accumulate(w, ca * cb, terms);
    }
  }
  PBWElement out(a.m());
  for (const auto& [mono, c] : terms) out.add_normal_term(mono, c);
  return out;
}

PBWElement commutator(const PBWElement& a, const PBWElement& b, std::uint64_t budget) {
  return multiply(a, b, budget) - multiply(b, a, budget);
}

PBWElement e_power(int k, int l, unsigned q, int m, std::uint64_t budget) {
  if (q == 0) return PBWElement::scalar(m, k == l ? 1 : 0);
  check_word_budget(m, q, budget);
  Normalizer norm(m, budget);
  PBWElement::Terms terms;
  std::vector<int> idx(q - 1, 1);
  Monomial w(q);
  while (true) {
    // e_{k i1} e_{i1 i2} ... e_{i_{q-1} l}
    int prev = k;
    for (unsigned j = 0; j + 1 < q; ++j) {
      w[j] = encode(m, prev, idx[j]);
      prev = idx[j];
    }
    w[q - 1] = encode(m, prev, l);
    norm.accumulate(w, 1, terms);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] > m) idx[pos++] = 1;
    if (pos == idx.size()) break;
  }
  PBWElement out(m);
  for (const auto& [mono, c] : terms) out.add_normal_term(mono, c);
  return out;
}

PBWElement tilde_e_power(int k, int l, unsigned q, int m, std::uint64_t budget) {
  if (q == 0) return PBWElement::scalar(m, k == l ? 1 : 0);
  check_word_budget(m, q, budget);
  Normalizer norm(m, budget);
  PBWElement::Terms terms;
  const Rational sign = q % 2 == 0 ? 1 : -1;
  std::vector<int> idx(q - 1, 1);
  Monomial w(q);
  while (true) {
    // e_{i1 k} e_{i2 i1} ... e_{l i_{q-1}}
    int prev = k;
    for (unsigned j = 0; j + 1 < q; ++j) {
      w[j] = encode(m, idx[j], prev);
      prev = idx[j];
    }
    w[q - 1] = encode(m, l, prev);
    norm.accumulate(w, sign, terms);
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] > m) idx[pos++] = 1;
    if (pos == idx.size()) break;
  }
  PBWElement out(m);
  for (const auto& [mono, c] : terms) out.add_normal_term(mono, c);
  return out;
}

PBWElement involution(const PBWElement& x, std::uint64_t budget) {
  const int m = x.m();
  Normalizer norm(m, budget);
  PBWElement::Terms terms;
  Monomial w;
  for (const auto& [mono, c] : x.terms()) {
    w.clear();
    for (auto code : mono) {
      auto g = x.decode(code);
      w.push_back(encode(m, g.l, g.k));
    }
    norm.accumulate(w, mono.size() % 2 == 0 ? Rational(c) : Rational(-c), terms);
  }
  PBWElement out(m);
  for (const auto& [mono, c] : terms) out.add_normal_term(mono, c);
  return out;
}

PBWElement casimir_element(int m, unsigned q, CasimirVariant variant, std::uint64_t budget) {
  PBWElement c(m);
  for (int k = 1; k <= m; ++k)
    c += variant == CasimirVariant::Plain ? e_power(k, k, q, m, budget) : tilde_e_power(k, k, q, m, budget);
  return c;
}

// ── K polynomials ──

KPolynomial::KPolynomial(unsigned n) : n_(n) {
  std::vector<unsigned> exps(n, 0);
  // Partitions of n: exps[j-1] copies of part j.
  auto rec = [&](auto&& self, unsigned part, unsigned remaining) -> void {
    if (remaining == 0) {
      unsigned total = 0;
      BigInt denom = 1;
      for (unsigned e : exps) {
        total += e;
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), e);
        denom *= f;
      }
      BigInt numer;
      mpz_fac_ui(numer.get_mpz_t(), total);
      Rational coeff(numer, denom);
      coeff.canonicalize();
      if (total % 2 == 1) coeff = -coeff;
      table_.push_back({exps, coeff});
      return;
    }
    if (part == 0) return;
    for (unsigned count = remaining / part + 1; count-- > 0;) {
      exps[part - 1] = count;
      self(self, part - 1, remaining - count * part);
    }
    exps[part - 1] = 0;
  };
  rec(rec, n, n);
}

Rational KPolynomial::operator()(const std::vector<Rational>& x) const {
  Rational sum = 0;
  for (const auto& term : table_) {
    Rational prod = term.coeff;
    for (std::size_t j = 0; j < term.exponents.size() && sgn(prod) != 0; ++j) {
      if (term.exponents[j] == 0) continue;
      Rational xj = j < x.size() ? x[j] : Rational(0);
      prod *= rational_pow(xj, term.exponents[j]);
    }
    sum += prod;
  }
  return sum;
}

Rational k_eval(unsigned n, const std::vector<Rational>& x) {
  std::vector<Rational> k(n + 1);
  k[0] = 1;
  for (unsigned q = 1; q <= n; ++q) {
    Rational s = 0;
    for (unsigned p = 0; p < q; ++p) {
      unsigned j = q - p;
      if (j <= x.size()) s += k[p] * x[j - 1];
    }
    k[q] = -s;
  }
  return k[n];
}

Rational k_of_casimirs(unsigned n, const HighestWeight& rho, CasimirVariant variant) {
  std::vector<Rational> x;
  for (unsigned p = 1; p <= n; ++p) x.push_back(-casimir_eigenvalue(rho, p - 1, variant));
  return k_eval(n, x);
}

PBWElement k_of_casimir_elements(unsigned n, int m, CasimirVariant variant, std::uint64_t budget) {
  std::vector<PBWElement> c;
  for (unsigned p = 0; p < n; ++p) c.push_back(casimir_element(m, p, variant, budget));
  PBWElement sum(m);
  const KPolynomial k(n);
  for (const auto& term : k.table()) {
    // x_j = -c_{j-1}, so each factor contributes (-1)^{i_j} and the signs cancel.
    PBWElement prod = PBWElement::scalar(m, abs(term.coeff));
    for (std::size_t j = 0; j < term.exponents.size(); ++j)
      for (unsigned e = 0; e < term.exponents[j]; ++e) prod = multiply(prod, c[j], budget);
    sum += prod;
  }
  return sum;
}

// ── symbolic verification ──

VerificationReport verify_tilde_expansion(int m, unsigned q_max, std::uint64_t budget) {
  VerificationReport report;
  const std::string base = "m=" + std::to_string(m);
  try {
    // e[k][l][p], et[k][l][p]
    std::vector<std::vector<std::vector<PBWElement>>> e(m + 1), et(m + 1);
    for (int k = 1; k <= m; ++k) {
      e[k].resize(m + 1);
      et[k].resize(m + 1);
      for (int l = 1; l <= m; ++l)
        for (unsigned p = 0; p <= q_max; ++p) {
          e[k][l].push_back(e_power(k, l, p, m, budget));
          et[k][l].push_back(tilde_e_power(k, l, p, m, budget));
        }
    }
    std::vector<PBWElement> kc, kct, c, ct;
    for (unsigned n = 0; n <= q_max + 1; ++n) {
      kc.push_back(k_of_casimir_elements(n, m, CasimirVariant::Plain, budget));
      kct.push_back(k_of_casimir_elements(n, m, CasimirVariant::Tilde, budget));
    }
    for (unsigned p = 0; p <= q_max; ++p) {
      c.push_back(casimir_element(m, p, CasimirVariant::Plain, budget));
      ct.push_back(casimir_element(m, p, CasimirVariant::Tilde, budget));
    }

    const Rational mm = -m;
    for (unsigned q = 0; q <= q_max; ++q) {
      const std::string params = base + " q=" + std::to_string(q);
      const Rational sign = q % 2 == 0 ? 1 : -1;
      auto binom = [&](unsigned s) -> Rational { return binomial(q, s) * rational_pow(mm, q - s); };

      // Both directions share the same shape with the roles of e and tilde e exchanged.
      auto expansion = [&](const auto& lhs_src, const auto& rhs_src, const std::vector<PBWElement>& kk,
                           const std::string& tag) {
        std::string witness;
        for (int k = 1; k <= m && witness.empty(); ++k)
          for (int l = 1; l <= m && witness.empty(); ++l) {
            PBWElement lhs(m), rhs(m);
            for (unsigned p = 0; p <= q; ++p) {
              lhs += binom(p) * lhs_src[k][l][p];
              rhs += multiply(kk[q - p], rhs_src[l][k][p], budget);
            }
            PBWElement diff = lhs - sign * rhs;
            if (!diff.is_zero())
              witness = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " diff=" + diff.to_string();
          }
        report.check(witness.empty(), tag, params, witness);
      };
      expansion(et, e, kc, "tilde-expansion");
      expansion(e, et, kct, "tilde-expansion.involuted");

      auto solved = [&](const auto& lhs_src, const auto& rhs_src, const std::vector<PBWElement>& kk,
                        const std::string& tag) {
        std::string witness;
        for (int k = 1; k <= m && witness.empty(); ++k)
          for (int l = 1; l <= m && witness.empty(); ++l) {
            PBWElement rhs(m);
            for (unsigned p = 0; p <= q; ++p) {
              PBWElement coeff(m);
              for (unsigned s = p; s <= q; ++s) coeff += binom(s) * kk[s - p];
              rhs += multiply(coeff, rhs_src[l][k][p], budget);
            }
            PBWElement diff = lhs_src[k][l][q] - sign * rhs;
            if (!diff.is_zero())
              witness = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " diff=" + diff.to_string();
          }
        report.check(witness.empty(), tag, params, witness);
      };
      solved(et, e, kc, "tilde-expansion.solved");
      solved(e, et, kct, "tilde-expansion.solved-involuted");

      auto traced = [&](const std::vector<PBWElement>& lhs_src, const std::vector<PBWElement>& kk,
                        const std::string& tag) {
        PBWElement lhs(m);
        for (unsigned p = 0; p <= q; ++p) lhs += binom(p) * lhs_src[p];
        PBWElement diff = lhs - sign * kk[q + 1];
        report.check(diff.is_zero(), tag, params, "diff=" + diff.to_string());
      };
      traced(ct, kc, "casimir-trace");
      traced(c, kct, "casimir-trace.involuted");

      auto casimir_solved = [&](const std::vector<PBWElement>& lhs_src, const std::vector<PBWElement>& kk,
                                const std::string& tag) {
        PBWElement rhs(m);
        for (unsigned p = 0; p <= q; ++p) rhs += binom(p) * kk[p + 1];
        PBWElement diff = lhs_src[q] - sign * rhs;
        report.check(diff.is_zero(), tag, params, "diff=" + diff.to_string());
      };
      casimir_solved(ct, kc, "casimir-solved");
      casimir_solved(c, kct, "casimir-solved.involuted");
    }
  } catch (const BudgetExceeded& ex) {
    report.add("tilde-expansion", base + " q<=" + std::to_string(q_max), Status::NotApplicable, ex.what());
  }
  return report;
}

}  // namespace clifhom
