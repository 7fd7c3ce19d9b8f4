#include "sobolev/linalg.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "sobolev/error.hpp"

namespace sobolev {

std::vector<Scalar> Matrix::operator*(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector dimension mismatch");
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(v.empty() ? Mode::Exact : v.front().mode());
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out.push_back(std::move(acc));
  }
  return out;
}

Matrix Matrix::to_mode(Mode mode) const {
  Matrix out(rows_, cols_, mode);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].to_mode(mode);
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

std::vector<Scalar> solve_bareiss(const Matrix& a, const std::vector<Scalar>& b) {
  const std::size_t n = a.rows();
  // Augmented integer matrix [A | b], each row scaled by the lcm of its denominators.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c <= n; ++c) {
      const Rational& q = c < n ? a(r, c).rational() : b[r].rational();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c <= n; ++c) {
      const Rational& q = c < n ? a(r, c).rational() : b[r].rational();
      m[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    std::swap(m[k], m[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  std::vector<Scalar> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x[j].rational();
    x[i] = Scalar(Rational(acc / Rational(m[i][i])));
  }
  return x;
}

std::vector<Scalar> solve_pivoting(const Matrix& a, const std::vector<Scalar>& b) {
  const std::size_t n = a.rows();
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
  double scale = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m[r][c] = a(r, c).to_double();
      scale = std::max(scale, std::abs(m[r][c]));
    }
    m[r][n] = b[r].to_double();
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m[i][k]) > std::abs(m[pivot][k])) pivot = i;
    }
    if (std::abs(m[pivot][k]) <= 1e-300 + 1e-15 * scale) throw SingularMatrix("matrix is numerically singular");
    std::swap(m[k], m[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  std::vector<Scalar> x(n);
  std::vector<double> xd(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * xd[j];
    xd[i] = acc / m[i][i];
    x[i] = Scalar::real(xd[i]);
  }
  return x;
}

}  // namespace

std::vector<Scalar> solve_linear(const Matrix& a, const std::vector<Scalar>& b) {
  if (a.rows() != a.cols() || b.size() != a.rows()) throw DomainError("solve_linear: dimension mismatch");
  if (a.rows() == 0) return {};
  const Mode mode = b.front().mode();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    require_same_mode(a(r, 0), b[r]);
  }
  return mode == Mode::Exact ? solve_bareiss(a, b) : solve_pivoting(a, b);
}

std::vector<Scalar> nested_dual_norms(const Matrix& g, const std::vector<Scalar>& r) {
  const std::size_t n = g.rows();
  if (g.cols() != n || r.size() != n) throw DomainError("nested_dual_norms: dimension mismatch");
  // Row-oriented LDL^T: l(i,j) for j < i, d(i).
  std::vector<std::vector<Rational>> l(n);
  std::vector<Rational> d(n), y(n);
  std::vector<Scalar> out;
  Rational running = 0;
  for (std::size_t i = 0; i < n; ++i) {
    l[i].resize(i);
    for (std::size_t j = 0; j < i; ++j) {
      Rational acc = g(i, j).rational();
      for (std::size_t p = 0; p < j; ++p) acc -= l[i][p] * l[j][p] * d[p];
      l[i][j] = acc / d[j];
    }
    Rational diag = g(i, i).rational();
    for (std::size_t p = 0; p < i; ++p) diag -= l[i][p] * l[i][p] * d[p];
    if (sgn(diag) <= 0) throw SingularMatrix("Gram matrix is not positive definite");
    d[i] = diag;
    Rational yi = r[i].rational();
    for (std::size_t p = 0; p < i; ++p) yi -= l[i][p] * y[p];
    y[i] = yi;
    running += yi * yi / diag;
    out.emplace_back(running);
  }
  return out;
}

}  // namespace sobolev
