#include "doctest.h"

#include "clifhom/envalg.hpp"

#include <random>

using namespace clifhom;

namespace {

PBWElement word(int m, std::vector<Generator> w, const Rational& c = 1) { return pbw_normalize(m, w, c); }
PBWElement gen(int m, int k, int l) { return PBWElement::generator(m, k, l); }
PBWElement one(int m) { return PBWElement::scalar(m, 1); }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("normalization examples") {
  PBWElement expected = word(2, {{1, 2}, {2, 1}}) + gen(2, 2, 2) - gen(2, 1, 1);
  CHECK(word(2, {{2, 1}, {1, 2}}) == expected);
  CHECK(word(2, {{1, 2}, {2, 1}}).terms().size() == 1);
  CHECK(word(2, {{1, 1}, {1, 2}}) - word(2, {{1, 2}, {1, 1}}) == gen(2, 1, 2));
  CHECK(expected.to_string() == "-e11 + e12*e21 + e22");
}

TEST_CASE("normal form is independent of how the word is split") {
  // (e31 e22) (e13 e21) computed as one word and as a product of two normalized halves.
  PBWElement whole = word(3, {{3, 1}, {2, 2}, {1, 3}, {2, 1}});
  PBWElement split = multiply(word(3, {{3, 1}, {2, 2}}), word(3, {{1, 3}, {2, 1}}));
  CHECK(whole == split);
}

TEST_CASE("power element examples") {
  CHECK(e_power(1, 1, 0, 2) == one(2));
  CHECK(e_power(1, 2, 0, 2).is_zero());
  CHECK(e_power(1, 1, 2, 2) == word(2, {{1, 1}, {1, 1}}) + word(2, {{1, 2}, {2, 1}}));
  CHECK(e_power(1, 1, 1, 3) + e_power(2, 2, 1, 3) + e_power(3, 3, 1, 3) == casimir_element(3, 1, CasimirVariant::Plain));
  CHECK(tilde_e_power(1, 2, 1, 2) == gen(2, 2, 1) * Rational(-1));
  CHECK(tilde_e_power(1, 1, 1, 2) + tilde_e_power(2, 2, 1, 2) == casimir_element(2, 1, CasimirVariant::Plain) * Rational(-1));
  // Oracle: normalize the raw word list e11 e11 + e21 e12.
  PBWElement raw = word(2, {{1, 1}, {1, 1}}) + word(2, {{2, 1}, {1, 2}});
  CHECK(tilde_e_power(1, 1, 2, 2) == raw);
  CHECK(raw == word(2, {{1, 1}, {1, 1}}) + word(2, {{1, 2}, {2, 1}}) + gen(2, 2, 2) - gen(2, 1, 1));
}

TEST_CASE("involution") {
  CHECK(involution(gen(3, 1, 2)) == gen(3, 2, 1) * Rational(-1));
  PBWElement c1 = casimir_element(3, 1, CasimirVariant::Plain);
  CHECK(involution(c1) == c1 * Rational(-1));
  PBWElement x = word(2, {{1, 2}, {2, 1}});
  CHECK(involution(involution(x)) == x);
  for (int m = 1; m <= 3; ++m)
    for (unsigned q = 0; q <= 3; ++q)
      for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) CHECK(involution(e_power(k, l, q, m)) == tilde_e_power(k, l, q, m));
}

TEST_CASE("commutators with power elements") {
  for (int m = 1; m <= 3; ++m)
    for (unsigned q = 0; q <= 3; ++q)
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          for (int k = 1; k <= m; ++k)
            for (int l = 1; l <= m; ++l) {
              PBWElement e = e_power(k, l, q, m), et = tilde_e_power(k, l, q, m);
              PBWElement rhs(m), rhs_t(m);
              if (j == k) rhs += e_power(i, l, q, m);
              if (i == l) rhs -= e_power(k, j, q, m);
              if (j == l) rhs_t += tilde_e_power(k, i, q, m);
              if (i == k) rhs_t -= tilde_e_power(j, l, q, m);
              CHECK(commutator(gen(m, i, j), e) == rhs);
              CHECK(commutator(gen(m, i, j), et) == rhs_t);
            }
}

TEST_CASE("composition laws") {
  for (int m = 1; m <= 3; ++m)
    for (unsigned p = 0; p <= 4; ++p)
      for (unsigned q = 0; p + q <= 4; ++q)
        for (int k = 1; k <= m; ++k)
          for (int l = 1; l <= m; ++l) {
            PBWElement lhs(m), lhs_t(m);
            for (int i = 1; i <= m; ++i) {
              lhs += multiply(e_power(k, i, p, m), e_power(i, l, q, m));
              lhs_t += multiply(tilde_e_power(k, i, p, m), tilde_e_power(i, l, q, m));
            }
            CHECK(lhs == e_power(k, l, p + q, m));
            CHECK(lhs_t == tilde_e_power(k, l, p + q, m));
          }
}

TEST_CASE("Casimir elements are central") {
  for (int m = 1; m <= 3; ++m)
    for (unsigned q = 0; q <= 3; ++q)
      for (auto variant : {CasimirVariant::Plain, CasimirVariant::Tilde}) {
        PBWElement c = casimir_element(m, q, variant);
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= m; ++j) CHECK(commutator(gen(m, i, j), c).is_zero());
      }
}

TEST_CASE("K polynomial examples") {
  std::vector<Rational> x{make_rational(2, 3), -5, make_rational(1, 7)};
  Rational x1 = x[0], x2 = x[1], x3 = x[2];
  CHECK(k_eval(0, x) == 1);
  CHECK(k_eval(1, x) == -x1);
  CHECK(k_eval(2, x) == x1 * x1 - x2);
  CHECK(k_eval(3, x) == -x1 * x1 * x1 + 2 * x1 * x2 - x3);
  CHECK(KPolynomial(3)(x) == k_eval(3, x));
  for (unsigned n = 1; n <= 6; ++n) CHECK(k_eval(n, std::vector<Rational>(n, 0)) == 0);
  // Oracle: multi-indices {i1 = 2} and {i2 = 1} at x_p = -c_{p-1}.
  HighestWeight rho({2, 0, -1});
  Rational c0 = casimir_eigenvalue(rho, 0, CasimirVariant::Plain);
  Rational c1 = casimir_eigenvalue(rho, 1, CasimirVariant::Plain);
  CHECK(k_of_casimirs(2, rho) == c0 * c0 + c1);
}

TEST_CASE("K recursion agrees with the multinomial table and its sign symmetry") {
  std::mt19937 rng(20240607);
  for (int trial = 0; trial < 20; ++trial)
    for (unsigned n = 0; n <= 8; ++n) {
      std::vector<Rational> x(n);
      for (auto& v : x) v = random_rational(rng);
      CHECK(KPolynomial(n)(x) == k_eval(n, x));
      std::vector<Rational> alternating(x), negated(x);
      for (std::size_t p = 0; p < n; ++p) {
        if (p % 2 == 1) alternating[p] = -alternating[p];
        negated[p] = -negated[p];
      }
      Rational sign = n % 2 == 0 ? 1 : -1;
      CHECK(k_eval(n, alternating) == sign * k_eval(n, negated));
    }
}

TEST_CASE("binomial coefficient recursion solves to K of minus the Casimirs") {
  // a_{q,p} = -a_{q-1,p-1}, a_{0,0} = 1, a_{q,0} = -sum_p a_{q-1,p} c_p at random central values.
  std::mt19937 rng(7);
  const unsigned qmax = 7;
  std::vector<Rational> c(qmax + 1);
  for (auto& v : c) v = random_rational(rng);
  std::vector<std::vector<Rational>> a(qmax + 1);
  a[0] = {1};
  for (unsigned q = 1; q <= qmax; ++q) {
    a[q].assign(q + 1, 0);
    for (unsigned p = 1; p <= q; ++p) a[q][p] = -a[q - 1][p - 1];
    for (unsigned p = 0; p < q; ++p) a[q][0] -= a[q - 1][p] * c[p];
  }
  std::vector<Rational> minus_c(qmax + 1);
  for (unsigned p = 0; p <= qmax; ++p) minus_c[p] = -c[p];
  for (unsigned q = 0; q <= qmax; ++q)
    for (unsigned p = 0; p <= q; ++p) {
      Rational sign = q % 2 == 0 ? 1 : -1;
      CHECK(a[q][p] == sign * k_eval(q - p, minus_c));
    }
}

TEST_CASE("central K elements evaluate like their scalars") {
  // Leading behaviour on the unit: K_1(-c) = c_0 = m as a PBW scalar.
  CHECK(k_of_casimir_elements(1, 3, CasimirVariant::Plain) == PBWElement::scalar(3, 3));
  CHECK(k_of_casimir_elements(0, 2, CasimirVariant::Tilde) == one(2));
}

TEST_CASE("tilde expansion identities hold symbolically") {
  for (int m = 1; m <= 3; ++m) {
    auto report = verify_tilde_expansion(m, 3);
    CHECK(report.passed());
    CHECK(report.count(Status::Fail) == 0);
    CHECK(report.count(Status::Pass) > 0);
  }
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(e_power(1, 1, 9, 6, 1000), BudgetExceeded);
  auto report = verify_tilde_expansion(3, 3, 10);
  CHECK(report.count(Status::NotApplicable) > 0);
  CHECK(report.passed());
}
