#include "clifhom/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace clifhom {

Rational make_rational(long num, long den) {
  if (den == 0) throw LinalgError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw LinalgError("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start == t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(start), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw LinalgError("malformed rational literal: " + s);
  if (num[0] == '+') num.erase(0, 1);
  BigInt n(num), d(den);
  if (d == 0) throw LinalgError("zero denominator in literal: " + s);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// ── RationalMatrix ──

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) { return scalar(n, 1); }

RationalMatrix RationalMatrix::scalar(std::size_t n, const Rational& value) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool RationalMatrix::is_diagonal() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && sgn((*this)(r, c)) != 0) return false;
  return true;
}

bool RationalMatrix::is_scalar(Rational* value) const {
  if (!is_diagonal()) return false;
  for (std::size_t i = 1; i < rows_; ++i)
    if ((*this)(i, i) != (*this)(0, 0)) return false;
  if (value) *value = rows_ == 0 ? Rational(0) : (*this)(0, 0);
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::column(std::size_t c) const { return columns({c}); }

RationalMatrix RationalMatrix::columns(const std::vector<std::size_t>& which) const {
  RationalMatrix out(rows_, which.size());
  for (std::size_t j = 0; j < which.size(); ++j) {
    if (which[j] >= cols_) throw LinalgError("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, which[j]);
  }
  return out;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw LinalgError("dimension mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(other.data_[i]) != 0) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw LinalgError("dimension mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(other.data_[i]) != 0) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    for (auto& x : data_) x = 0;
    return *this;
  }
  for (auto& x : data_)
    if (sgn(x) != 0) x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw LinalgError("dimension mismatch in *");
  RationalMatrix c(a.rows_, b.cols_);
  Rational tmp;
  // Generator matrices are very sparse, so zero entries are skipped on both sides.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        c(i, j) += tmp;
      }
    }
  }
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RationalMatrix::witness() const {
  std::size_t best = data_.size();
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(data_[i]) != 0 && (best == data_.size() || abs(data_[i]) > abs(data_[best]))) best = i;
  std::ostringstream out;
  out << rows_ << "x" << cols_;
  if (best == data_.size()) {
    out << " zero";
  } else {
    out << " entry(" << best / cols_ << "," << best % cols_ << ")=" << data_[best].get_str();
  }
  return out.str();
}

std::string RationalMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? ", " : "") << (*this)(r, c).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (sgn(b(p, q)) != 0) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

// ── elimination ──

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  Rational factor;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && sgn(m(pick, col)) == 0) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (sgn(m(row, c)) != 0) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> pivot_columns(const RationalMatrix& a) {
  RationalMatrix work = a;
  return rref(work);
}

std::size_t rank(const RationalMatrix& a) { return pivot_columns(a).size(); }

RationalMatrix kernel(const RationalMatrix& a) {
  RationalMatrix work = a;
  auto pivots = rref(work);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix basis(a.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    basis(free_cols[j], j) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], j) = -work(r, free_cols[j]);
  }
  return basis;
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.square() || a.rows() != b.rows()) throw LinalgError("dimension mismatch in solve");
  std::size_t n = a.rows();
  RationalMatrix aug(n, n + b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw LinalgError("singular matrix");
  RationalMatrix x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = aug(r, n + c);
  return x;
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (!a.square()) throw LinalgError("inverse of non-square matrix");
  if (a.rows() == 0) return a;
  return solve(a, RationalMatrix::identity(a.rows()));
}

// ── adjoints and projectors ──

RationalMatrix gram_adjoint(const RationalMatrix& a, const RationalMatrix& gram_source,
                            const RationalMatrix& gram_target) {
  if (gram_source.rows() != a.cols() || gram_target.rows() != a.rows())
    throw LinalgError("dimension mismatch in gram_adjoint");
  if (!gram_source.is_diagonal() || !gram_target.is_diagonal())
    throw LinalgError("gram_adjoint requires diagonal grams");
  RationalMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (sgn(gram_target(r, r)) <= 0) throw LinalgError("gram not positive");
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (sgn(a(r, c)) == 0) continue;
      out(c, r) = a(r, c) * gram_target(r, r) / gram_source(c, c);
    }
  }
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (sgn(gram_source(c, c)) <= 0) throw LinalgError("gram not positive");
  return out;
}

namespace {

void check_distinct(const std::vector<Rational>& eigenvalues) {
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
      if (eigenvalues[i] == eigenvalues[j])
        throw LinalgError("repeated eigenvalue " + eigenvalues[i].get_str() + " in spectrum");
}

RationalMatrix shifted(const RationalMatrix& a, const Rational& lambda) {
  RationalMatrix s = a;
  for (std::size_t i = 0; i < a.rows(); ++i) s(i, i) -= lambda;
  return s;
}

// prod_{j != t} (A - l_j), unnormalized.
RationalMatrix partial_product(const RationalMatrix& a, const std::vector<Rational>& eig,
                               std::size_t t) {
  RationalMatrix p = RationalMatrix::identity(a.rows());
  bool first = true;
  for (std::size_t j = 0; j < eig.size(); ++j) {
    if (j == t) continue;
    p = first ? shifted(a, eig[j]) : p * shifted(a, eig[j]);
    first = false;
  }
  return p;
}

Rational denominator_product(const std::vector<Rational>& eig, std::size_t t) {
  Rational d = 1;
  for (std::size_t j = 0; j < eig.size(); ++j)
    if (j != t) d *= eig[t] - eig[j];
  return d;
}

void check_complete(const RationalMatrix& a, const std::vector<Rational>& eig,
                    const RationalMatrix& partial0) {
  RationalMatrix residual = partial0 * shifted(a, eig[0]);
  if (!residual.is_zero())
    throw SpectralError("supplied eigenvalues do not annihilate the matrix", residual.witness());
}

}  // namespace

RationalMatrix lagrange_projector(const RationalMatrix& a, const std::vector<Rational>& eigenvalues,
                                  std::size_t target_index) {
  if (!a.square()) throw LinalgError("lagrange_projector needs a square matrix");
  if (eigenvalues.empty() || target_index >= eigenvalues.size())
    throw LinalgError("target index out of range");
  check_distinct(eigenvalues);
  RationalMatrix p = partial_product(a, eigenvalues, target_index);
  RationalMatrix residual = p * shifted(a, eigenvalues[target_index]);
  if (!residual.is_zero())
    throw SpectralError("supplied eigenvalues do not annihilate the matrix", residual.witness());
  return p * (1 / denominator_product(eigenvalues, target_index));
}

std::vector<RationalMatrix> spectral_projectors(const RationalMatrix& a,
                                                const std::vector<Rational>& eigenvalues) {
  if (!a.square()) throw LinalgError("spectral_projectors needs a square matrix");
  if (eigenvalues.empty()) throw LinalgError("empty spectrum");
  check_distinct(eigenvalues);
  std::vector<RationalMatrix> out;
  out.reserve(eigenvalues.size());
  for (std::size_t t = 0; t < eigenvalues.size(); ++t) {
    RationalMatrix p = partial_product(a, eigenvalues, t);
    if (t == 0) check_complete(a, eigenvalues, p);
    out.push_back(p * (1 / denominator_product(eigenvalues, t)));
  }
  return out;
}

}  // namespace clifhom
