#ifndef POLYHOPF_SPIN_HPP
#define POLYHOPF_SPIN_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "polyhopf/hopf.hpp"
#include "polyhopf/matrix.hpp"
#include "polyhopf/rng.hpp"

namespace polyhopf {

/// 2x2 matrix over an associative F (R, C, H), row-major entries.
struct AlgebraMatrix2 {
  std::array<AlgebraElement, 4> e;

  AlgebraMatrix2(AlgebraElement a, AlgebraElement b, AlgebraElement c,
                 AlgebraElement d);
  static AlgebraMatrix2 identity(Algebra a);

  Algebra algebra() const { return e[0].algebra(); }
  const AlgebraElement& operator()(int i, int j) const { return e[2 * i + j]; }

  AlgebraMatrix2 operator*(const AlgebraMatrix2& o) const;
  AlgebraMatrix2 conjugate_transpose() const;
  Spinor apply(const Spinor& v) const;
  double max_abs_diff(const AlgebraMatrix2& o) const;
};

/// Element of SU(2,F) = SO(2) / SU(2) / Sp(2); validated AA* = I (and det = 1
/// for R, C) on construction. Octonion entries are rejected: Spin(9) acts
/// through generator words instead.
class SpecialUnitary2 {
 public:
  explicit SpecialUnitary2(AlgebraMatrix2 m, double tol = 1e-10);

  static SpecialUnitary2 identity(Algebra a);
  const AlgebraMatrix2& matrix() const { return m_; }
  Algebra algebra() const { return m_.algebra(); }

 private:
  AlgebraMatrix2 m_;
};

/// Pseudo-random element of SU(2,F): Gaussian columns orthonormalized, with a
/// unit-determinant correction for R and C. Deterministic in the seed.
SpecialUnitary2 su2_random(Algebra a, std::uint64_t seed);
SpecialUnitary2 su2_random(Algebra a, RandomStream& rng);

Spinor su2_apply(const SpecialUnitary2& A, const Spinor& v);

/// The (1+d)x(1+d) matrix of X -> pi(A pi^-1(X) A*), evaluated on the
/// standard basis of the traceless Hermitian matrices.
Rotation adjoint_rotation(const SpecialUnitary2& A);

/// 4x4 complex matrices, for the H -> C embedding h.
struct ComplexMatrix4 {
  std::array<std::complex<double>, 16> e{};

  std::complex<double> operator()(int i, int j) const { return e[4 * i + j]; }
  std::complex<double>& operator()(int i, int j) { return e[4 * i + j]; }
  ComplexMatrix4 operator*(const ComplexMatrix4& o) const;
  std::complex<double> trace() const;
  double max_abs_diff(const ComplexMatrix4& o) const;
};

/// h(A) = ((A1, A2), (-conj(A2), conj(A1))) for A = A1 + A2 j, with the
/// identification q = z1 + z2 j (i = e1, j = e2, k = e4). Multiplicative,
/// star-preserving, tr h(A) = 2 Re tr A.
ComplexMatrix4 quaternion_complexify(const AlgebraMatrix2& A);

/// Spin(9) generator g(r,u) = (r, L_conj(u); L_u, -r) with r^2 + |u|^2 = 1.
class SpinGenerator {
 public:
  SpinGenerator(double r, AlgebraElement u);
  /// Builds the generator with (r, conj(u)-coords) equal to the unit 9-vector w.
  static SpinGenerator from_axis(std::span<const double> w);
  static SpinGenerator random(RandomStream& rng);

  double r() const { return r_; }
  const AlgebraElement& u() const { return u_; }

 private:
  double r_;
  AlgebraElement u_;
};

/// Ordered product of generators; empty means the identity. Words act with
/// the last factor applied first, matching operator composition.
using GeneratorWord = std::vector<SpinGenerator>;

GeneratorWord random_word(int length, RandomStream& rng);

/// g(r,u) v = (r x + conj(u) y, u x - r y).
Spinor generator_apply(const SpinGenerator& g, const Spinor& v);

/// rho(r,u) = 2 w w^t - I9, w = (r, conj(u)); symmetric, orthogonal, det +1.
Rotation generator_rotation(const SpinGenerator& g);

Spinor word_apply(const GeneratorWord& w, const Spinor& v);
Rotation word_rotation(const GeneratorWord& w);

/// Constructive Cartan-Dieudonne: decomposes R in SO(9) into an even number
/// of reflections (column fixing), returning the generator word whose
/// rotation reproduces R.
GeneratorWord rotation_to_word(const Rotation& R, double tol = 1e-10);

}  // namespace polyhopf

#endif  // POLYHOPF_SPIN_HPP
