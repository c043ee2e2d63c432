#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clifhom {

using Rational = mpq_class;
using BigInt = mpz_class;

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);
Rational rational_pow(const Rational& base, unsigned exponent);
Rational binomial(unsigned n, unsigned k);

// "p" for integers, "p/q" otherwise; parse accepts both.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix scalar(std::size_t n, const Rational& value);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_diagonal() const;
  // Set when the matrix is square and equals value * identity.
  bool is_scalar(Rational* value = nullptr) const;

  RationalMatrix transpose() const;
  RationalMatrix column(std::size_t c) const;
  RationalMatrix columns(const std::vector<std::size_t>& which) const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  // Largest |entry| as text plus its position; used for failure witnesses.
  std::string witness() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix inverse(const RationalMatrix& a);
std::size_t rank(const RationalMatrix& a);
// Indices of the columns that are linearly independent of all earlier columns.
std::vector<std::size_t> pivot_columns(const RationalMatrix& a);
// Columns form a basis of the null space.
RationalMatrix kernel(const RationalMatrix& a);
// Solves a x = b for square invertible a.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

// G_source^{-1} A^T G_target for positive diagonal grams.
RationalMatrix gram_adjoint(const RationalMatrix& a, const RationalMatrix& gram_source,
                            const RationalMatrix& gram_target);

class SpectralError : public LinalgError {
 public:
  SpectralError(const std::string& what, std::string residual)
      : LinalgError(what), residual_(std::move(residual)) {}
  const std::string& residual() const { return residual_; }

 private:
  std::string residual_;
};

// prod_{j != t} (A - l_j) / (l_t - l_j), after checking prod_j (A - l_j) = 0.
RationalMatrix lagrange_projector(const RationalMatrix& a, const std::vector<Rational>& eigenvalues,
                                  std::size_t target_index);
// All projectors at once; one completeness check.
std::vector<RationalMatrix> spectral_projectors(const RationalMatrix& a,
                                                const std::vector<Rational>& eigenvalues);

}  // namespace clifhom
