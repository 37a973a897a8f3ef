#include "polyhopf/hopf.hpp"

#include <algorithm>
#include <cmath>

namespace polyhopf {

Spinor::Spinor(AlgebraElement x_, AlgebraElement y_)
    : x(std::move(x_)), y(std::move(y_)) {
  require_same_algebra(x, y, "Spinor");
}

double norm_sq(const Spinor& v) { return norm_sq(v.x) + norm_sq(v.y); }
double norm(const Spinor& v) { return std::sqrt(norm_sq(v)); }

double max_coeff_diff(const Spinor& v, const Spinor& w) {
  return std::max(max_coeff_diff(v.x, w.x), max_coeff_diff(v.y, w.y));
}

std::vector<double> HopfImage::as_vector() const {
  std::vector<double> v(1 + static_cast<std::size_t>(alpha.dim()));
  v[0] = lambda;
  for (int i = 0; i < alpha.dim(); ++i) v[1 + i] = alpha[i];
  return v;
}

HopfImage HopfImage::from_vector(Algebra a, std::span<const double> v) {
  if (v.size() != static_cast<std::size_t>(1 + dim(a)))
    throw std::invalid_argument("vector length does not match 1 + dim F");
  AlgebraElement alpha(a, v.subspan(1));
  return {v[0], std::move(alpha)};
}

double norm(const HopfImage& h) {
  return std::sqrt(h.lambda * h.lambda + norm_sq(h.alpha));
}

double max_coeff_diff(const HopfImage& a, const HopfImage& b) {
  return std::max(std::abs(a.lambda - b.lambda), max_coeff_diff(a.alpha, b.alpha));
}

UnitElement::UnitElement(AlgebraElement v) : v_(std::move(v)) {
  if (std::abs(norm_sq(v_) - 1.0) > 1e-12)
    throw std::invalid_argument("UnitElement requires |v| = 1 within 1e-12");
}

UnitElement UnitElement::normalized(const AlgebraElement& v) {
  const double n = norm(v);
  if (n < kZeroCoordinateTol)
    throw std::domain_error("cannot normalize a (near-)zero element");
  return UnitElement(v * (1.0 / n));
}

HopfImage hopf_phi(const Spinor& v) {
  const double lambda = 0.5 * (norm_sq(v.x) - norm_sq(v.y));
  return {lambda, mul(v.x, conj(v.y))};
}

Spinor hopf_preimage(const HopfImage& target, const UnitElement& theta) {
  const Algebra a = target.algebra();
  if (theta.algebra() != a)
    throw std::invalid_argument("hopf_preimage: theta algebra mismatch");
  const double lambda = target.lambda;
  const double alpha_n2 = norm_sq(target.alpha);

  if (alpha_n2 == 0.0) {
    // |x|^2 = 2*lambda (resp. |y|^2 = -2*lambda), so that |Phi(v)| = |v|^2/2.
    if (lambda > 0.0)
      return Spinor(theta.value() * std::sqrt(2.0 * lambda), AlgebraElement::zero(a));
    if (lambda < 0.0)
      return Spinor(AlgebraElement::zero(a), theta.value() * std::sqrt(-2.0 * lambda));
    return Spinor::zero(a);
  }

  const double s = std::sqrt(lambda * lambda + alpha_n2);
  const double rx = std::sqrt(std::max(0.0, lambda + s));
  const double ry = std::sqrt(std::max(0.0, s - lambda));
  const AlgebraElement dir = target.alpha * (1.0 / std::sqrt(alpha_n2));
  // x = rx * (alpha/|alpha|) theta, y = ry * theta, with the algebra product
  // taken in that order.
  return Spinor(mul(dir, theta.value()) * rx, theta.value() * ry);
}

Spinor fiber_act(const Spinor& v, const UnitElement& c) {
  if (c.algebra() != v.algebra())
    throw std::invalid_argument("fiber_act: algebra mismatch");
  if (v.algebra() != Algebra::octonion)
    return Spinor(mul(v.x, c.value()), mul(v.y, c.value()));

  const double scale = norm(v);
  if (norm(v.y) <= kZeroCoordinateTol * scale)
    return Spinor(mul(v.x, c.value()), AlgebraElement::zero(v.algebra()));
  const AlgebraElement yc = mul(v.y, c.value());
  const AlgebraElement xyinv = mul(v.x, inverse(v.y));
  return Spinor(mul(xyinv, yc), yc);
}

std::optional<UnitElement> fiber_witness(const Spinor& v, const Spinor& w,
                                         double tol) {
  if (w.algebra() != v.algebra())
    throw std::invalid_argument("fiber_witness: algebra mismatch");
  const double nv = norm(v);
  const double nw = norm(w);
  if (nv == 0.0 && nw == 0.0)
    throw std::domain_error(
        "fiber_witness: the fiber over 0 is the singleton {0}; no unit witness");

  const HopfImage hv = hopf_phi(v);
  const HopfImage hw = hopf_phi(w);
  const double scale = std::max(1.0, std::max(norm(hv), norm(hw)));
  if (max_coeff_diff(hv, hw) > tol * scale) return std::nullopt;

  // From the fiber lemma: b = yc gives c = y^-1 b; if y = 0 then a = xc.
  AlgebraElement c =
      (norm(v.y) > kZeroCoordinateTol * nv) ? mul(inverse(v.y), w.y)
                                            : mul(inverse(v.x), w.x);
  if (norm(c) < kZeroCoordinateTol) return std::nullopt;
  return UnitElement::normalized(c);
}

}  // namespace polyhopf
