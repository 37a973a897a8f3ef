#include "polyhopf/matrix.hpp"

#include <cmath>
#include <string>

#include "polyhopf/rng.hpp"

namespace polyhopf {

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::two_wwt_minus_identity(std::span<const double> w) {
  const int n = static_cast<int>(w.size());
  RealMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = 2.0 * w[i] * w[j] - (i == j ? 1.0 : 0.0);
  return m;
}

RealMatrix RealMatrix::operator*(const RealMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  RealMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

std::vector<double> RealMatrix::apply(std::span<const double> v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("vector dimension mismatch");
  std::vector<double> r(n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

RealMatrix RealMatrix::transposed() const {
  RealMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

double RealMatrix::det() const {
  RealMatrix m = *this;
  double d = 1.0;
  for (int col = 0; col < n_; ++col) {
    int piv = col;
    for (int i = col + 1; i < n_; ++i)
      if (std::abs(m(i, col)) > std::abs(m(piv, col))) piv = i;
    if (m(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n_; ++j) std::swap(m(piv, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    for (int i = col + 1; i < n_; ++i) {
      const double f = m(i, col) / m(col, col);
      for (int j = col; j < n_; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

double RealMatrix::frobenius_distance(const RealMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    const double d = a_[i] - o.a_[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double RealMatrix::max_abs_diff(const RealMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i)
    m = std::max(m, std::abs(a_[i] - o.a_[i]));
  return m;
}

double RealMatrix::orthogonality_defect() const {
  const RealMatrix p = (*this) * transposed();
  return p.max_abs_diff(identity(n_));
}

Rotation::Rotation(RealMatrix m, double tol) : m_(std::move(m)) {
  const int n = m_.n();
  if (n != 2 && n != 3 && n != 5 && n != 9)
    throw std::invalid_argument("Rotation dimension must be 2, 3, 5 or 9, got " +
                                std::to_string(n));
  if (m_.orthogonality_defect() > tol)
    throw std::invalid_argument("Rotation matrix is not orthogonal within tolerance");
  if (std::abs(m_.det() - 1.0) > tol)
    throw std::invalid_argument("Rotation matrix must have det +1");
}

Rotation Rotation::random(int n, RandomStream& rng) {
  for (;;) {
    RealMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.gaussian();
    // Gram-Schmidt on rows.
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int p = 0; p < i; ++p) {
        double dot = 0.0;
        for (int j = 0; j < n; ++j) dot += m(i, j) * m(p, j);
        for (int j = 0; j < n; ++j) m(i, j) -= dot * m(p, j);
      }
      double nn = 0.0;
      for (int j = 0; j < n; ++j) nn += m(i, j) * m(i, j);
      nn = std::sqrt(nn);
      if (nn < 1e-8) {
        ok = false;
        break;
      }
      for (int j = 0; j < n; ++j) m(i, j) /= nn;
    }
    if (!ok) continue;
    if (m.det() < 0.0)
      for (int j = 0; j < n; ++j) m(n - 1, j) = -m(n - 1, j);
    return Rotation(std::move(m));
  }
}

}  // namespace polyhopf
