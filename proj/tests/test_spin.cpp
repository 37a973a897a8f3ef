#include <doctest.h>

#include "polyhopf/spin.hpp"

using namespace polyhopf;

namespace {
AlgebraElement e(int i) { return AlgebraElement::basis(Algebra::octonion, i); }

Spinor random_spinor(RandomStream& rng, Algebra a) {
  return Spinor(rng.gaussian_element(a), rng.gaussian_element(a));
}
}  // namespace

TEST_CASE("AlgebraMatrix2 basics") {
  const Algebra H = Algebra::quaternion;
  const AlgebraMatrix2 id = AlgebraMatrix2::identity(H);
  CHECK((id * id).max_abs_diff(id) == 0.0);
  CHECK_THROWS_AS(AlgebraMatrix2::identity(Algebra::octonion),
                  std::invalid_argument);
}

TEST_CASE("su2 apply fixed cases") {
  const Algebra R = Algebra::real;
  const Spinor v(AlgebraElement::unit(R), AlgebraElement::zero(R));
  const SpecialUnitary2 id = SpecialUnitary2::identity(R);
  const Spinor same = su2_apply(id, v);
  CHECK(max_coeff_diff(same, v) == 0.0);

  // ((0,-1),(1,0)) over R sends (1,0) to (0,1)
  const SpecialUnitary2 rot(AlgebraMatrix2(
      AlgebraElement::zero(R), -AlgebraElement::unit(R), AlgebraElement::unit(R),
      AlgebraElement::zero(R)));
  const Spinor out = su2_apply(rot, v);
  CHECK(norm(out.x) == 0.0);
  CHECK(max_coeff_diff(out.y, AlgebraElement::unit(R)) == 0.0);
}

TEST_CASE("su2_random is unitary, deterministic, seed-sensitive") {
  for (Algebra a : {Algebra::real, Algebra::complex, Algebra::quaternion}) {
    const SpecialUnitary2 A = su2_random(a, 5);
    const AlgebraMatrix2 prod = A.matrix() * A.matrix().conjugate_transpose();
    CHECK(prod.max_abs_diff(AlgebraMatrix2::identity(a)) <= 1e-10);
    const SpecialUnitary2 B = su2_random(a, 5);
    CHECK(A.matrix().max_abs_diff(B.matrix()) == 0.0);
    const SpecialUnitary2 C = su2_random(a, 6);
    CHECK(A.matrix().max_abs_diff(C.matrix()) > 0.0);
    RandomStream rng(5);
    const Spinor v = random_spinor(rng, a);
    CHECK(std::abs(norm(su2_apply(A, v)) - norm(v)) <= 1e-10 * norm(v));
  }
  CHECK_THROWS_AS(su2_random(Algebra::octonion, 1), std::invalid_argument);
}

TEST_CASE("adjoint_rotation kernel and equivariance") {
  for (Algebra a : {Algebra::real, Algebra::complex, Algebra::quaternion}) {
    const Rotation rid = adjoint_rotation(SpecialUnitary2::identity(a));
    CHECK(rid.matrix().max_abs_diff(RealMatrix::identity(1 + dim(a))) <= 1e-14);
    // -I2 is in the kernel
    const AlgebraMatrix2 mneg(-AlgebraElement::unit(a), AlgebraElement::zero(a),
                              AlgebraElement::zero(a), -AlgebraElement::unit(a));
    const Rotation rneg = adjoint_rotation(SpecialUnitary2(mneg));
    CHECK(rneg.matrix().max_abs_diff(RealMatrix::identity(1 + dim(a))) <= 1e-14);

    RandomStream rng(41);
    for (int t = 0; t < 200; ++t) {
      const SpecialUnitary2 A = su2_random(a, rng);
      const Rotation rot = adjoint_rotation(A);
      CHECK(rot.matrix().orthogonality_defect() <= 1e-10);
      const Spinor v = random_spinor(rng, a);
      const HopfImage lhs = hopf_phi(su2_apply(A, v));
      const std::vector<double> rhs = rot.apply(hopf_phi(v).as_vector());
      CHECK(max_coeff_diff(lhs, HopfImage::from_vector(a, rhs)) <=
            1e-9 * std::max(1.0, norm(lhs)));
    }
  }
}

TEST_CASE("quaternion_complexify") {
  const Algebra H = Algebra::quaternion;
  const ComplexMatrix4 hid = quaternion_complexify(AlgebraMatrix2::identity(H));
  ComplexMatrix4 i4;
  for (int i = 0; i < 4; ++i) i4(i, i) = 1.0;
  CHECK(hid.max_abs_diff(i4) == 0.0);

  // A = j I2 -> ((0, I2), (-I2, 0))
  const AlgebraElement j = AlgebraElement::basis(H, 2);
  const ComplexMatrix4 hj = quaternion_complexify(
      AlgebraMatrix2(j, AlgebraElement::zero(H), AlgebraElement::zero(H), j));
  ComplexMatrix4 expect;
  expect(0, 2) = 1.0;
  expect(1, 3) = 1.0;
  expect(2, 0) = -1.0;
  expect(3, 1) = -1.0;
  CHECK(hj.max_abs_diff(expect) == 0.0);

  RandomStream rng(43);
  for (int t = 0; t < 200; ++t) {
    // multiplicativity and star-compatibility
    auto rand_mat = [&] {
      return AlgebraMatrix2(rng.gaussian_element(H), rng.gaussian_element(H),
                            rng.gaussian_element(H), rng.gaussian_element(H));
    };
    const AlgebraMatrix2 A = rand_mat(), B = rand_mat();
    CHECK(quaternion_complexify(A * B).max_abs_diff(
              quaternion_complexify(A) * quaternion_complexify(B)) <= 1e-12 * 64);
    // trace lemma through a unitary conjugation
    const SpecialUnitary2 U = su2_random(H, rng);
    const AlgebraElement q = rng.gaussian_element(H);
    const AlgebraMatrix2 X(AlgebraElement::scalar(H, rng.gaussian()), q, conj(q),
                           AlgebraElement::scalar(H, rng.gaussian()));
    const AlgebraMatrix2 UXU = (U.matrix() * X) * U.matrix().conjugate_transpose();
    CHECK(std::abs(quaternion_complexify(UXU).trace() -
                   quaternion_complexify(X).trace()) <= 1e-9);
    // tr h(A) = 2 Re tr A
    CHECK(std::abs(quaternion_complexify(A).trace() -
                   std::complex<double>(2.0 * (A(0, 0)[0] + A(1, 1)[0]))) <=
          1e-12 * 8);
  }
}

TEST_CASE("spin generator fixed actions") {
  const Algebra O = Algebra::octonion;
  RandomStream rng(47);
  const Spinor v = random_spinor(rng, O);

  const SpinGenerator g10(1.0, AlgebraElement::zero(O));
  const Spinor a = generator_apply(g10, v);
  CHECK(max_coeff_diff(a.x, v.x) == 0.0);
  CHECK(max_coeff_diff(a.y, -v.y) == 0.0);

  const SpinGenerator g01(0.0, AlgebraElement::unit(O));
  const Spinor b = generator_apply(g01, v);
  CHECK(max_coeff_diff(b.x, v.y) == 0.0);
  CHECK(max_coeff_diff(b.y, v.x) == 0.0);

  // g(0, e1) on (e2, 0) -> (0, e1 e2) = (0, e4)
  const Spinor c = generator_apply(SpinGenerator(0.0, e(1)),
                                   Spinor(e(2), AlgebraElement::zero(O)));
  CHECK(norm(c.x) == 0.0);
  CHECK(max_coeff_diff(c.y, e(4)) == 0.0);

  // involution
  const SpinGenerator g = SpinGenerator::random(rng);
  CHECK(max_coeff_diff(generator_apply(g, generator_apply(g, v)), v) <=
        1e-12 * std::max(1.0, norm(v)));

  CHECK_THROWS_AS(SpinGenerator(1.0, AlgebraElement::unit(O)),
                  std::invalid_argument);
  CHECK_THROWS_AS(SpinGenerator(0.0, AlgebraElement::unit(Algebra::quaternion)),
                  std::invalid_argument);
}

TEST_CASE("generator rotations") {
  const Algebra O = Algebra::octonion;
  const Rotation r10 = generator_rotation(SpinGenerator(1.0, AlgebraElement::zero(O)));
  const Rotation r01 = generator_rotation(SpinGenerator(0.0, AlgebraElement::unit(O)));
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      const double d10 = (i == j) ? (i == 0 ? 1.0 : -1.0) : 0.0;
      const double d01 = (i == j) ? (i == 1 ? 1.0 : -1.0) : 0.0;
      CHECK(r10.matrix()(i, j) == d10);
      CHECK(r01.matrix()(i, j) == d01);
    }

  RandomStream rng(53);
  for (int t = 0; t < 200; ++t) {
    const SpinGenerator g = SpinGenerator::random(rng);
    const RealMatrix rho = generator_rotation(g).matrix();
    CHECK(rho.max_abs_diff(rho.transposed()) == 0.0);
    CHECK(rho.orthogonality_defect() <= 1e-12);
    CHECK((rho * rho).max_abs_diff(RealMatrix::identity(9)) <= 1e-12);
    // equivariance through the Hopf map
    const Spinor v = random_spinor(rng, O);
    const HopfImage lhs = hopf_phi(generator_apply(g, v));
    const std::vector<double> rhs = rho.apply(hopf_phi(v).as_vector());
    CHECK(max_coeff_diff(lhs, HopfImage::from_vector(O, rhs)) <=
          1e-9 * std::max(1.0, norm(lhs)));
  }
}

TEST_CASE("word action and kernel") {
  const Algebra O = Algebra::octonion;
  RandomStream rng(59);
  const Spinor v = random_spinor(rng, O);

  CHECK(max_coeff_diff(word_apply({}, v), v) == 0.0);
  CHECK(word_rotation({}).matrix().max_abs_diff(RealMatrix::identity(9)) == 0.0);

  const SpinGenerator g = SpinGenerator::random(rng);
  CHECK(max_coeff_diff(word_apply({g, g}, v), v) <= 1e-12 * std::max(1.0, norm(v)));
  CHECK(word_rotation({g}).matrix().max_abs_diff(
            generator_rotation(g).matrix()) == 0.0);

  // [g(0,1), g(0,-1)] negates spinors but induces the identity on R + O
  const GeneratorWord kernel = {SpinGenerator(0.0, AlgebraElement::unit(O)),
                                SpinGenerator(0.0, -AlgebraElement::unit(O))};
  const Spinor nv = word_apply(kernel, v);
  CHECK(max_coeff_diff(nv.x, -v.x) == 0.0);
  CHECK(max_coeff_diff(nv.y, -v.y) == 0.0);
  CHECK(word_rotation(kernel).matrix().max_abs_diff(RealMatrix::identity(9)) ==
        0.0);

  // homomorphism and fiberwise action
  for (int t = 0; t < 50; ++t) {
    GeneratorWord w1 = random_word(3, rng);
    const GeneratorWord w2 = random_word(3, rng);
    const RealMatrix prod = word_rotation(w1).matrix() * word_rotation(w2).matrix();
    w1.insert(w1.end(), w2.begin(), w2.end());
    CHECK(word_rotation(w1).matrix().max_abs_diff(prod) <= 1e-12);

    const Spinor u = random_spinor(rng, O);
    const UnitElement c(rng.unit_element(O));
    const Spinor uc = fiber_act(u, c);
    const GeneratorWord W = random_word(1 + static_cast<int>(rng.next_u64() % 6), rng);
    CHECK(max_coeff_diff(hopf_phi(word_apply(W, u)), hopf_phi(word_apply(W, uc))) <=
          1e-9 * std::max(1.0, norm_sq(u)));
  }
}

TEST_CASE("Cartan-Dieudonne reconstruction") {
  RandomStream rng(61);
  for (int t = 0; t < 50; ++t) {
    const Rotation R = Rotation::random(9, rng);
    const GeneratorWord w = rotation_to_word(R);
    CHECK(w.size() <= 10);
    CHECK(w.size() % 2 == 0);
    CHECK(word_rotation(w).matrix().frobenius_distance(R.matrix()) <= 1e-8);
  }
  // identity decomposes into the empty word
  CHECK(rotation_to_word(Rotation::identity(9)).empty());
}
