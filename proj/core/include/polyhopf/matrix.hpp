#ifndef POLYHOPF_MATRIX_HPP
#define POLYHOPF_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace polyhopf {

class RandomStream;

/// Small dense square real matrix (n <= 9 in practice), row-major.
class RealMatrix {
 public:
  RealMatrix() : n_(0) {}
  explicit RealMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  static RealMatrix identity(int n);
  /// Rank-one update form 2ww^t - I for a unit vector w.
  static RealMatrix two_wwt_minus_identity(std::span<const double> w);

  int n() const { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  RealMatrix operator*(const RealMatrix& o) const;
  std::vector<double> apply(std::span<const double> v) const;
  RealMatrix transposed() const;
  double det() const;  // Gaussian elimination with partial pivoting
  double frobenius_distance(const RealMatrix& o) const;
  double max_abs_diff(const RealMatrix& o) const;
  /// max |M M^t - I| entrywise.
  double orthogonality_defect() const;

 private:
  int n_;
  std::vector<double> a_;
};

/// An element of SO(n), n in {2, 3, 5, 9}: orthogonal with det +1,
/// validated on construction.
class Rotation {
 public:
  explicit Rotation(RealMatrix m, double tol = 1e-10);

  static Rotation identity(int n) { return Rotation(RealMatrix::identity(n)); }
  /// Haar-ish random rotation: Gaussian matrix, Gram-Schmidt, det fix.
  static Rotation random(int n, RandomStream& rng);

  int n() const { return m_.n(); }
  const RealMatrix& matrix() const { return m_; }
  Rotation operator*(const Rotation& o) const { return Rotation(m_ * o.m_); }
  std::vector<double> apply(std::span<const double> v) const { return m_.apply(v); }

 private:
  RealMatrix m_;
};

}  // namespace polyhopf

#endif  // POLYHOPF_MATRIX_HPP
