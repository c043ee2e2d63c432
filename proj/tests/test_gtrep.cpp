#include "doctest.h"

#include "clifhom/gtrep.hpp"

using namespace clifhom;

namespace {

RationalMatrix unit(std::size_t n, std::size_t r, std::size_t c) {
  RationalMatrix u(n, n);
  u(r, c) = 1;
  return u;
}

Rational scalar_of(const RationalMatrix& a) {
  Rational s;
  REQUIRE(a.is_scalar(&s));
  return s;
}

}  // namespace

TEST_CASE("patterns interlace and start at the highest weight") {
  HighestWeight rho({2, 0, -1});
  auto ps = gt_patterns(rho);
  CHECK(ps.size() == weyl_dimension(rho));
  for (const auto& p : ps) {
    CHECK(p.rows.back() == rho.entries());
    for (std::size_t r = 0; r + 1 < p.rows.size(); ++r)
      for (std::size_t i = 0; i < p.rows[r].size(); ++i) {
        CHECK(p.rows[r + 1][i] >= p.rows[r][i]);
        CHECK(p.rows[r][i] >= p.rows[r + 1][i + 1]);
      }
  }
  CHECK(ps.front().rows[0][0] == 2);
  CHECK(ps.front().rows[1] == std::vector<long>{2, 0});
}

TEST_CASE("natural representation is the matrix-unit action up to rescaling the basis") {
  for (int m = 2; m <= 4; ++m) {
    std::vector<long> top(static_cast<std::size_t>(m), 0);
    top[0] = 1;
    auto rep = build_rep(HighestWeight(top));
    REQUIRE(rep.dim == static_cast<std::size_t>(m));
    // The pattern whose first nonzero row is k holds a multiple s_k of the standard vector e_k.
    std::vector<std::size_t> slot(rep.dim);
    for (std::size_t a = 0; a < rep.dim; ++a) {
      std::size_t k = 0;
      while (rep.basis[a].rows[k][0] == 0) ++k;
      slot[k] = a;
    }
    std::vector<Rational> s(rep.dim);
    for (std::size_t k = 0; k < rep.dim; ++k) {
      s[k] = rep.e(1, static_cast<int>(k) + 1)(slot[0], slot[k]);
      REQUIRE(sgn(s[k]) != 0);
    }
    // e_kl (s_l e_l) = s_l e_k = (s_l / s_k) (s_k e_k).
    for (int k = 1; k <= m; ++k)
      for (int l = 1; l <= m; ++l) {
        std::size_t a = slot[static_cast<std::size_t>(k - 1)], b = slot[static_cast<std::size_t>(l - 1)];
        RationalMatrix expected = unit(rep.dim, a, b) * (s[static_cast<std::size_t>(l - 1)] / s[static_cast<std::size_t>(k - 1)]);
        CHECK(rep.e(k, l) == expected);
      }
    for (std::size_t k = 0; k < rep.dim; ++k) CHECK(rep.gram(slot[k], slot[k]) == s[k] * s[k]);
  }
  auto rep = build_rep(HighestWeight({1, 0}));
  CHECK(rep.e(1, 1) == RationalMatrix::diagonal({1, 0}));
  CHECK(rep.e(2, 2) == RationalMatrix::diagonal({0, 1}));
  CHECK(rep.e(1, 2) == unit(2, 0, 1));
  CHECK(rep.e(2, 1) == unit(2, 1, 0));
  CHECK(rep.gram == RationalMatrix::identity(2));
}

TEST_CASE("one-dimensional representations") {
  auto rep = build_rep(HighestWeight({3, 3, 3}));
  CHECK(rep.dim == 1);
  CHECK(rep.gram == RationalMatrix::identity(1));
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) CHECK(rep.e(k, l) == RationalMatrix::scalar(1, k == l ? 3 : 0));
}

TEST_CASE("second Casimir of (1,1,0)") {
  auto rep = build_rep(HighestWeight({1, 1, 0}));
  CHECK(rep.dim == 3);
  CHECK(evaluate(rep, casimir_element(3, 2, CasimirVariant::Plain)) == RationalMatrix::scalar(3, 4));
}

TEST_CASE("evaluate examples") {
  auto rep = build_rep(HighestWeight({1, 0}));
  CHECK(evaluate(rep, casimir_element(2, 2, CasimirVariant::Plain)) == RationalMatrix::scalar(2, 2));
  CHECK(evaluate(rep, PBWElement::scalar(2, 1)) == RationalMatrix::identity(2));
  auto rep3 = build_rep(HighestWeight({1, 0, 0}));
  CHECK(evaluate(rep3, casimir_element(3, 1, CasimirVariant::Tilde)) == RationalMatrix::scalar(3, -1));
  CHECK_THROWS_AS(evaluate(rep3, PBWElement::scalar(2, 1)), RepresentationError);
}

TEST_CASE("dimension budget") {
  CHECK_THROWS_AS(build_rep(HighestWeight({4, 2, 0}), 10), RepresentationError);
}

TEST_CASE("representation invariants and Casimir scalars over the small family") {
  for (int m = 1; m <= 3; ++m) {
    std::vector<PBWElement> c, ct;
    for (unsigned q = 0; q <= 3; ++q) {
      c.push_back(casimir_element(m, q, CasimirVariant::Plain));
      ct.push_back(casimir_element(m, q, CasimirVariant::Tilde));
    }
    for (const auto& rho : dominant_weights(m, 1)) {
      CAPTURE(rho.to_string());
      auto rep = build_rep(rho);
      CHECK(verify_representation(rep).passed());
      CHECK(rep.gram(0, 0) == 1);
      CHECK(gram_adjoint(rep.e(1, m), rep.gram, rep.gram) == rep.e(m, 1));
      auto trep = build_rep(transpose_weight(rho));
      for (unsigned q = 0; q <= 3; ++q) {
        Rational plain = scalar_of(evaluate(rep, c[q]));
        CHECK(plain == casimir_eigenvalue(rho, q, CasimirVariant::Plain));
        CHECK(scalar_of(evaluate(rep, ct[q])) == casimir_eigenvalue(rho, q, CasimirVariant::Tilde));
        CHECK(scalar_of(evaluate(trep, ct[q])) == plain);
      }
    }
  }
}

TEST_CASE("power elements compose at matrix level") {
  HighestWeight rho({2, 1, -1});
  auto rep = build_rep(rho);
  const int m = 3;
  for (unsigned q = 1; q <= 3; ++q)
    for (unsigned p = 0; p <= q; ++p)
      for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) {
          RationalMatrix prod(rep.dim, rep.dim);
          for (int i = 1; i <= m; ++i)
            prod += evaluate(rep, e_power(k, i, p, m)) * evaluate(rep, e_power(i, l, q - p, m));
          CHECK(prod == evaluate(rep, e_power(k, l, q, m)));
        }
}

TEST_CASE("Casimir action report") {
  for (int m = 1; m <= 3; ++m) {
    auto plain = casimir_elements(m, 3, CasimirVariant::Plain);
    auto tilde = casimir_elements(m, 3, CasimirVariant::Tilde);
    for (const auto& rho : dominant_weights(m, 1)) {
      auto r = verify_casimir_action(build_rep(rho), plain, tilde);
      CHECK(r.passed());
      CHECK(r.count(Status::Pass) == 9);
    }
  }
  // Swapped element lists must be caught: tilde c_1 = -c_1 differs on (1,0).
  const int m = 2;
  auto r = verify_casimir_action(build_rep(HighestWeight({1, 0})), casimir_elements(m, 1, CasimirVariant::Tilde),
                                 casimir_elements(m, 1, CasimirVariant::Plain));
  CHECK_FALSE(r.passed());
}
