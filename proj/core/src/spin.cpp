#include "polyhopf/spin.hpp"

#include <cmath>

namespace polyhopf {

AlgebraMatrix2::AlgebraMatrix2(AlgebraElement a, AlgebraElement b, AlgebraElement c,
                               AlgebraElement d)
    : e{std::move(a), std::move(b), std::move(c), std::move(d)} {
  require_same_algebra(e[0], e[1], "AlgebraMatrix2");
  require_same_algebra(e[0], e[2], "AlgebraMatrix2");
  require_same_algebra(e[0], e[3], "AlgebraMatrix2");
  if (algebra() == Algebra::octonion)
    throw std::invalid_argument(
        "2x2 octonion matrices are not supported (non-associative); use "
        "generator words");
}

AlgebraMatrix2 AlgebraMatrix2::identity(Algebra a) {
  return {AlgebraElement::unit(a), AlgebraElement::zero(a),
          AlgebraElement::zero(a), AlgebraElement::unit(a)};
}

AlgebraMatrix2 AlgebraMatrix2::operator*(const AlgebraMatrix2& o) const {
  auto ent = [&](int i, int j) {
    return mul((*this)(i, 0), o(0, j)) + mul((*this)(i, 1), o(1, j));
  };
  return {ent(0, 0), ent(0, 1), ent(1, 0), ent(1, 1)};
}

AlgebraMatrix2 AlgebraMatrix2::conjugate_transpose() const {
  return {conj((*this)(0, 0)), conj((*this)(1, 0)), conj((*this)(0, 1)),
          conj((*this)(1, 1))};
}

Spinor AlgebraMatrix2::apply(const Spinor& v) const {
  require_same_algebra(e[0], v.x, "AlgebraMatrix2::apply");
  return Spinor(mul((*this)(0, 0), v.x) + mul((*this)(0, 1), v.y),
                mul((*this)(1, 0), v.x) + mul((*this)(1, 1), v.y));
}

double AlgebraMatrix2::max_abs_diff(const AlgebraMatrix2& o) const {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, max_coeff_diff(e[i], o.e[i]));
  return m;
}

namespace {

// det over R or C (commutative): ad - bc.
AlgebraElement commutative_det(const AlgebraMatrix2& m) {
  return mul(m(0, 0), m(1, 1)) - mul(m(0, 1), m(1, 0));
}

}  // namespace

SpecialUnitary2::SpecialUnitary2(AlgebraMatrix2 m, double tol) : m_(std::move(m)) {
  const AlgebraMatrix2 id = AlgebraMatrix2::identity(algebra());
  if ((m_ * m_.conjugate_transpose()).max_abs_diff(id) > tol ||
      (m_.conjugate_transpose() * m_).max_abs_diff(id) > tol)
    throw std::invalid_argument("SpecialUnitary2: AA* = I = A*A violated");
  if (algebra() != Algebra::quaternion) {
    // For H the determinant condition is implied by unitarity.
    AlgebraElement det = commutative_det(m_);
    if (max_coeff_diff(det, AlgebraElement::unit(algebra())) > tol)
      throw std::invalid_argument("SpecialUnitary2: det A = 1 violated");
  }
}

SpecialUnitary2 SpecialUnitary2::identity(Algebra a) {
  return SpecialUnitary2(AlgebraMatrix2::identity(a));
}

SpecialUnitary2 su2_random(Algebra a, RandomStream& rng) {
  if (a == Algebra::octonion)
    throw std::invalid_argument("su2_random: octonions have no 2x2 matrix group");
  for (;;) {
    // Two Gaussian columns, orthonormalized under <u,v> = sum conj(u_i) v_i.
    AlgebraElement u0 = rng.gaussian_element(a), u1 = rng.gaussian_element(a);
    AlgebraElement v0 = rng.gaussian_element(a), v1 = rng.gaussian_element(a);
    const double nu = std::sqrt(norm_sq(u0) + norm_sq(u1));
    if (nu < 1e-8) continue;
    u0 *= 1.0 / nu;
    u1 *= 1.0 / nu;
    const AlgebraElement c = mul(conj(u0), v0) + mul(conj(u1), v1);
    v0 -= mul(u0, c);
    v1 -= mul(u1, c);
    const double nv = std::sqrt(norm_sq(v0) + norm_sq(v1));
    if (nv < 1e-8) continue;
    v0 *= 1.0 / nv;
    v1 *= 1.0 / nv;
    AlgebraMatrix2 m(u0, v0, u1, v1);
    if (a != Algebra::quaternion) {
      // Unit-determinant correction: scale the second row by conj(det).
      const AlgebraElement det = commutative_det(m);
      m = AlgebraMatrix2(m(0, 0), m(0, 1), mul(conj(det), m(1, 0)),
                         mul(conj(det), m(1, 1)));
    }
    return SpecialUnitary2(std::move(m));
  }
}

SpecialUnitary2 su2_random(Algebra a, std::uint64_t seed) {
  RandomStream rng(seed, 0x52b005ULL);
  return su2_random(a, rng);
}

Spinor su2_apply(const SpecialUnitary2& A, const Spinor& v) {
  return A.matrix().apply(v);
}

Rotation adjoint_rotation(const SpecialUnitary2& A) {
  const Algebra a = A.algebra();
  const int d = dim(a);
  const AlgebraMatrix2& M = A.matrix();
  const AlgebraMatrix2 Mstar = M.conjugate_transpose();
  RealMatrix rot(1 + d);
  for (int m = 0; m <= d; ++m) {
    // Basis element of the traceless Hermitians: (lambda, alpha) with
    // lambda = 1, alpha = 0 for m = 0, else alpha = e_{m-1}.
    const double lambda = (m == 0) ? 1.0 : 0.0;
    const AlgebraElement alpha =
        (m == 0) ? AlgebraElement::zero(a) : AlgebraElement::basis(a, m - 1);
    const AlgebraMatrix2 X(AlgebraElement::scalar(a, lambda), alpha, conj(alpha),
                           AlgebraElement::scalar(a, -lambda));
    const AlgebraMatrix2 C = (M * X) * Mstar;
    rot(0, m) = real_part(C(0, 0));
    for (int i = 0; i < d; ++i) rot(1 + i, m) = C(0, 1)[i];
  }
  return Rotation(std::move(rot));
}

ComplexMatrix4 ComplexMatrix4::operator*(const ComplexMatrix4& o) const {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r(i, j) += (*this)(i, k) * o(k, j);
  return r;
}

std::complex<double> ComplexMatrix4::trace() const {
  return e[0] + e[5] + e[10] + e[15];
}

double ComplexMatrix4::max_abs_diff(const ComplexMatrix4& o) const {
  double m = 0.0;
  for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(e[i] - o.e[i]));
  return m;
}

ComplexMatrix4 quaternion_complexify(const AlgebraMatrix2& A) {
  if (A.algebra() != Algebra::quaternion)
    throw std::invalid_argument("quaternion_complexify requires quaternion entries");
  ComplexMatrix4 h;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const AlgebraElement& q = A(i, j);
      // q = z1 + z2 j with i = e1, j = e2, k = e4 (so e1 e2 = e4).
      const std::complex<double> z1(q[0], q[1]);
      const std::complex<double> z2(q[2], q[3]);
      h(i, j) = z1;
      h(i, j + 2) = z2;
      h(i + 2, j) = -std::conj(z2);
      h(i + 2, j + 2) = std::conj(z1);
    }
  return h;
}

SpinGenerator::SpinGenerator(double r, AlgebraElement u) : r_(r), u_(std::move(u)) {
  if (u_.algebra() != Algebra::octonion)
    throw std::invalid_argument("SpinGenerator: u must be an octonion");
  if (std::abs(r_ * r_ + norm_sq(u_) - 1.0) > 1e-12)
    throw std::invalid_argument("SpinGenerator: r^2 + |u|^2 = 1 violated");
}

SpinGenerator SpinGenerator::from_axis(std::span<const double> w) {
  if (w.size() != 9)
    throw std::invalid_argument("SpinGenerator::from_axis expects a 9-vector");
  // w = (r, coords of conj(u)).
  AlgebraElement ubar(Algebra::octonion, w.subspan(1));
  return SpinGenerator(w[0], conj(ubar));
}

SpinGenerator SpinGenerator::random(RandomStream& rng) {
  for (;;) {
    std::array<double, 9> w;
    double n2 = 0.0;
    for (auto& c : w) {
      c = rng.gaussian();
      n2 += c * c;
    }
    if (n2 < 1e-12) continue;
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : w) c *= inv;
    return from_axis(w);
  }
}

GeneratorWord random_word(int length, RandomStream& rng) {
  GeneratorWord w;
  w.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) w.push_back(SpinGenerator::random(rng));
  return w;
}

Spinor generator_apply(const SpinGenerator& g, const Spinor& v) {
  if (v.algebra() != Algebra::octonion)
    throw std::invalid_argument("generator_apply: spinor must be octonionic");
  return Spinor(v.x * g.r() + mul(conj(g.u()), v.y),
                mul(g.u(), v.x) - v.y * g.r());
}

Rotation generator_rotation(const SpinGenerator& g) {
  std::array<double, 9> w;
  w[0] = g.r();
  const AlgebraElement ubar = conj(g.u());
  for (int i = 0; i < 8; ++i) w[1 + i] = ubar[i];
  return Rotation(RealMatrix::two_wwt_minus_identity(w));
}

Spinor word_apply(const GeneratorWord& w, const Spinor& v) {
  Spinor r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = generator_apply(*it, r);
  return r;
}

Rotation word_rotation(const GeneratorWord& w) {
  RealMatrix m = RealMatrix::identity(9);
  for (const SpinGenerator& g : w) m = m * generator_rotation(g).matrix();
  return Rotation(std::move(m));
}

GeneratorWord rotation_to_word(const Rotation& R, double tol) {
  if (R.n() != 9)
    throw std::invalid_argument("rotation_to_word expects an SO(9) element");
  RealMatrix m = R.matrix();
  std::vector<std::array<double, 9>> normals;
  for (int col = 0; col < 9; ++col) {
    std::array<double, 9> w{};
    double n2 = 0.0;
    for (int i = 0; i < 9; ++i) {
      w[i] = m(i, col) - (i == col ? 1.0 : 0.0);
      n2 += w[i] * w[i];
    }
    if (std::sqrt(n2) <= tol) continue;
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : w) c *= inv;
    // Householder step: (I - 2ww^t) m fixes column `col` to e_col.
    const RealMatrix H = RealMatrix::two_wwt_minus_identity(w);
    RealMatrix Hm(9);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        double s = 0.0;
        for (int k = 0; k < 9; ++k) s -= H(i, k) * m(k, j);
        Hm(i, j) = s;
      }
    m = std::move(Hm);
    normals.push_back(w);
  }
  if (normals.size() % 2 != 0)
    throw std::logic_error("odd reflection count for a det +1 rotation");
  GeneratorWord word;
  word.reserve(normals.size());
  // R = H_1 ... H_m with H_j = -(2 w_j w_j^t - I); even m makes the signs cancel.
  for (const auto& w : normals) word.push_back(SpinGenerator::from_axis(w));
  return word;
}

}  // namespace polyhopf
