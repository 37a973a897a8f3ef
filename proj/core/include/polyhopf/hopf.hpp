#ifndef POLYHOPF_HOPF_HPP
#define POLYHOPF_HOPF_HPP

#include <optional>
#include <vector>

#include "polyhopf/algebra.hpp"

namespace polyhopf {

/// Relative threshold below which a spinor coordinate counts as zero.
/// The octonionic fiber action branches on y = 0.
inline constexpr double kZeroCoordinateTol = 1e-12;

/// A pair (x, y) in F^2, the domain of the Hopf map.
struct Spinor {
  AlgebraElement x;
  AlgebraElement y;

  Spinor(AlgebraElement x_, AlgebraElement y_);
  static Spinor zero(Algebra a) {
    return Spinor(AlgebraElement::zero(a), AlgebraElement::zero(a));
  }

  Algebra algebra() const { return x.algebra(); }
};

double norm_sq(const Spinor& v);
double norm(const Spinor& v);
double max_coeff_diff(const Spinor& v, const Spinor& w);

/// A point (lambda, alpha) in R + F, identified with the traceless Hermitian
/// matrix ((lambda, alpha), (conj(alpha), -lambda)) and with R^{1+dim F}.
struct HopfImage {
  double lambda;
  AlgebraElement alpha;

  HopfImage(double l, AlgebraElement a) : lambda(l), alpha(std::move(a)) {}
  static HopfImage zero(Algebra a) { return {0.0, AlgebraElement::zero(a)}; }

  Algebra algebra() const { return alpha.algebra(); }
  /// As a real vector of length 1 + dim F.
  std::vector<double> as_vector() const;
  static HopfImage from_vector(Algebra a, std::span<const double> v);
};

double norm(const HopfImage& h);
double max_coeff_diff(const HopfImage& a, const HopfImage& b);

/// A unit-norm algebra element; for O this ranges over the Moufang loop O(1).
class UnitElement {
 public:
  explicit UnitElement(AlgebraElement v);
  /// Rescales v to unit norm. Throws on (near-)zero input.
  static UnitElement normalized(const AlgebraElement& v);
  static UnitElement one(Algebra a) { return UnitElement(AlgebraElement::unit(a)); }

  const AlgebraElement& value() const { return v_; }
  Algebra algebra() const { return v_.algebra(); }

 private:
  AlgebraElement v_;
};

/// The Hopf map v -> ((|x|^2 - |y|^2)/2, x conj(y)).
HopfImage hopf_phi(const Spinor& v);

/// A spinor in the fiber over `target`, parameterized by theta in F(1).
Spinor hopf_preimage(const HopfImage& target, const UnitElement& theta);

/// Fiber action: (xc, yc) for associative F; for O the modified action
/// ((x y^-1)(y c), y c) when y != 0, else (xc, 0).
Spinor fiber_act(const Spinor& v, const UnitElement& c);

/// When v and w lie in the same nonzero fiber (images equal within tol),
/// returns c in F(1) with fiber_act(v, c) = w; otherwise nullopt.
/// Throws when both spinors are zero (the fiber is the singleton {0}).
std::optional<UnitElement> fiber_witness(const Spinor& v, const Spinor& w,
                                         double tol);

}  // namespace polyhopf

#endif  // POLYHOPF_HOPF_HPP
