#include "polyhopf/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polyhopf {

namespace {

constexpr double kRankTol = 1e-8;

double vec_norm(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

double vec_dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

StiefelFrame::StiefelFrame(Algebra a, std::vector<Spinor> columns)
    : alg_(a), cols_(std::move(columns)) {
  if (cols_.size() < 3)
    throw std::invalid_argument("StiefelFrame requires k >= 3 columns");
  for (const Spinor& c : cols_)
    if (c.algebra() != alg_)
      throw std::invalid_argument("StiefelFrame: column algebra mismatch");
}

double StiefelFrame::invariant_defect() const {
  double sx = 0.0, sy = 0.0;
  AlgebraElement cross = AlgebraElement::zero(alg_);
  for (const Spinor& c : cols_) {
    sx += norm_sq(c.x);
    sy += norm_sq(c.y);
    cross += mul(c.x, conj(c.y));
  }
  return std::max({std::abs(sx - 1.0), std::abs(sy - 1.0), norm(cross)});
}

void StiefelFrame::validate(double tol) const {
  double sx = 0.0, sy = 0.0;
  AlgebraElement cross = AlgebraElement::zero(alg_);
  for (const Spinor& c : cols_) {
    sx += norm_sq(c.x);
    sy += norm_sq(c.y);
    cross += mul(c.x, conj(c.y));
  }
  if (std::abs(sx - 1.0) > tol)
    throw std::invalid_argument("frame invariant violated: sum |x_i|^2 = " +
                                std::to_string(sx) + " != 1");
  if (std::abs(sy - 1.0) > tol)
    throw std::invalid_argument("frame invariant violated: sum |y_i|^2 = " +
                                std::to_string(sy) + " != 1");
  if (norm(cross) > tol)
    throw std::invalid_argument(
        "frame invariant violated: |sum x_i conj(y_i)| = " +
        std::to_string(norm(cross)) + " != 0");
}

PolygonConfig::PolygonConfig(int n, std::vector<std::vector<double>> edges,
                             double tol)
    : n_(n), edges_(std::move(edges)) {
  if (n != 2 && n != 3 && n != 5 && n != 9)
    throw std::invalid_argument("polygon ambient dimension must be 2, 3, 5 or 9");
  if (edges_.size() < 3) throw std::invalid_argument("polygon requires k >= 3 edges");
  for (const auto& e : edges_)
    if (static_cast<int>(e.size()) != n)
      throw std::invalid_argument("edge dimension mismatch");
  const double res = vec_norm(closure_residual());
  if (res > tol)
    throw std::invalid_argument("polygon is not closed: |sum edges| = " +
                                std::to_string(res));
  const double per = perimeter();
  if (std::abs(per - 1.0) > tol)
    throw std::invalid_argument("polygon perimeter " + std::to_string(per) +
                                " != 1");
}

double PolygonConfig::edge_length(int i) const { return vec_norm(edge(i)); }

double PolygonConfig::perimeter() const {
  double s = 0.0;
  for (int i = 0; i < k(); ++i) s += edge_length(i);
  return s;
}

std::vector<double> PolygonConfig::closure_residual() const {
  std::vector<double> s(static_cast<std::size_t>(n_), 0.0);
  for (const auto& e : edges_)
    for (int j = 0; j < n_; ++j) s[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j)];
  return s;
}

int PolygonConfig::nonzero_edge_count(double tol) const {
  int c = 0;
  for (int i = 0; i < k(); ++i)
    if (edge_length(i) > tol) ++c;
  return c;
}

PolygonConfig normalize(const std::vector<std::vector<double>>& raw_edges,
                        double closure_tol) {
  if (raw_edges.empty()) throw std::invalid_argument("normalize: no edges");
  const std::size_t n = raw_edges.front().size();
  double per = 0.0;
  std::vector<double> sum(n, 0.0);
  for (const auto& e : raw_edges) {
    if (e.size() != n) throw std::invalid_argument("normalize: ragged edge list");
    per += vec_norm(e);
    for (std::size_t j = 0; j < n; ++j) sum[j] += e[j];
  }
  if (per <= 0.0) throw std::invalid_argument("normalize: zero polygon");
  const double res = vec_norm(sum);
  if (res > closure_tol * per)
    throw std::invalid_argument("normalize: input not closed, residual " +
                                std::to_string(res) + " for perimeter " +
                                std::to_string(per));
  std::vector<std::vector<double>> scaled = raw_edges;
  for (auto& e : scaled)
    for (double& c : e) c /= per;
  return PolygonConfig(static_cast<int>(n), std::move(scaled),
                       std::max(1e-10, closure_tol));
}

PolygonConfig phi_k(const StiefelFrame& X) {
  X.validate();
  std::vector<std::vector<double>> edges;
  edges.reserve(static_cast<std::size_t>(X.k()));
  for (int i = 0; i < X.k(); ++i)
    edges.push_back(hopf_phi(X.column(i)).as_vector());
  return PolygonConfig(euclidean_dim(X.algebra()), std::move(edges));
}

StiefelFrame lift(const PolygonConfig& p, const std::vector<UnitElement>& thetas) {
  const Algebra a = algebra_from_dim(p.n() - 1);
  if (static_cast<int>(thetas.size()) != p.k())
    throw std::invalid_argument("lift: need one theta per edge");
  std::vector<Spinor> cols;
  cols.reserve(static_cast<std::size_t>(p.k()));
  for (int i = 0; i < p.k(); ++i) {
    if (thetas[static_cast<std::size_t>(i)].algebra() != a)
      throw std::invalid_argument("lift: theta algebra mismatch");
    const HopfImage target = HopfImage::from_vector(a, p.edge(i));
    cols.push_back(hopf_preimage(target, thetas[static_cast<std::size_t>(i)]));
  }
  return StiefelFrame(a, std::move(cols));
}

StiefelFrame lift(const PolygonConfig& p) {
  const Algebra a = algebra_from_dim(p.n() - 1);
  std::vector<UnitElement> thetas(static_cast<std::size_t>(p.k()),
                                  UnitElement::one(a));
  return lift(p, thetas);
}

StiefelFrame sample_stiefel(Algebra a, int k, RandomStream& rng) {
  if (k < 3) throw std::invalid_argument("sample_stiefel requires k >= 3");
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<AlgebraElement> xs, ys;
    xs.reserve(static_cast<std::size_t>(k));
    ys.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) xs.push_back(rng.gaussian_element(a));
    for (int i = 0; i < k; ++i) ys.push_back(rng.gaussian_element(a));

    double sx = 0.0;
    for (const auto& x : xs) sx += norm_sq(x);
    sx = std::sqrt(sx);
    if (sx < 1e-12) continue;
    for (auto& x : xs) x *= 1.0 / sx;

    // Project out c = sum y_j conj(x_j); columnwise y_i - c x_i cancels the
    // cross sum even over O, by the alternative laws.
    AlgebraElement c = AlgebraElement::zero(a);
    for (int i = 0; i < k; ++i) c += mul(ys[static_cast<std::size_t>(i)],
                                         conj(xs[static_cast<std::size_t>(i)]));
    for (int i = 0; i < k; ++i)
      ys[static_cast<std::size_t>(i)] -= mul(c, xs[static_cast<std::size_t>(i)]);

    double sy = 0.0;
    for (const auto& y : ys) sy += norm_sq(y);
    sy = std::sqrt(sy);
    if (sy < 1e-12) continue;
    for (auto& y : ys) y *= 1.0 / sy;

    std::vector<Spinor> cols;
    cols.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
      cols.emplace_back(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]);
    return StiefelFrame(a, std::move(cols));
  }
  throw std::runtime_error("sample_stiefel: repeated degenerate draws");
}

StiefelFrame sample_stiefel(Algebra a, int k, std::uint64_t seed) {
  RandomStream rng(seed, 0x57f1ULL);
  return sample_stiefel(a, k, rng);
}

namespace {

// Greedy pivot selection: the lexicographically-first n linearly independent
// edges, via modified Gram-Schmidt with an absolute residual threshold.
std::vector<int> independent_pivots(const PolygonConfig& p) {
  const int n = p.n();
  std::vector<std::vector<double>> basis;
  std::vector<int> pivots;
  for (int i = 0; i < p.k() && static_cast<int>(pivots.size()) < n; ++i) {
    std::vector<double> v(p.edge(i).begin(), p.edge(i).end());
    for (const auto& b : basis) {
      const double d = vec_dot(v, b);
      for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] -= d * b[static_cast<std::size_t>(j)];
    }
    const double r = vec_norm(v);
    if (r > kRankTol) {
      for (double& c : v) c /= r;
      basis.push_back(std::move(v));
      pivots.push_back(i);
    }
  }
  return pivots;
}

}  // namespace

QuotientInvariant quotient_invariant(const PolygonConfig& p) {
  const int k = p.k();
  RealMatrix gram(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      const double d = vec_dot(p.edge(i), p.edge(j));
      gram(i, j) = d;
      gram(j, i) = d;
    }
  const std::vector<int> pivots = independent_pivots(p);
  int orientation = 0;
  if (static_cast<int>(pivots.size()) == p.n()) {
    RealMatrix m(p.n());
    for (int c = 0; c < p.n(); ++c)
      for (int r = 0; r < p.n(); ++r) m(r, c) = p.edge(pivots[static_cast<std::size_t>(c)])[static_cast<std::size_t>(r)];
    const double d = m.det();
    orientation = (d > 0.0) ? +1 : (d < 0.0 ? -1 : 0);
  }
  return {std::move(gram), orientation};
}

namespace {

void require_same_shape(const PolygonConfig& p, const PolygonConfig& q) {
  if (p.n() != q.n() || p.k() != q.k())
    throw std::invalid_argument("polygon shape mismatch (n or k differ)");
}

}  // namespace

bool equivalent_mod_SO(const PolygonConfig& p, const PolygonConfig& q, double tol) {
  require_same_shape(p, q);
  const QuotientInvariant ip = quotient_invariant(p);
  const QuotientInvariant iq = quotient_invariant(q);
  return ip.gram.max_abs_diff(iq.gram) <= tol && ip.orientation == iq.orientation;
}

bool equivalent_mod_O(const PolygonConfig& p, const PolygonConfig& q, double tol) {
  require_same_shape(p, q);
  const QuotientInvariant ip = quotient_invariant(p);
  const QuotientInvariant iq = quotient_invariant(q);
  return ip.gram.max_abs_diff(iq.gram) <= tol;
}

PolygonConfig rotate_polygon(const Rotation& R, const PolygonConfig& p) {
  if (R.n() != p.n())
    throw std::invalid_argument("rotate_polygon: dimension mismatch");
  std::vector<std::vector<double>> edges;
  edges.reserve(static_cast<std::size_t>(p.k()));
  for (int i = 0; i < p.k(); ++i) edges.push_back(R.apply(p.edge(i)));
  return PolygonConfig(p.n(), std::move(edges));
}

StiefelFrame su2_apply_frame(const SpecialUnitary2& A, const StiefelFrame& X) {
  if (A.algebra() != X.algebra())
    throw std::invalid_argument("su2_apply_frame: algebra mismatch");
  std::vector<Spinor> cols;
  cols.reserve(static_cast<std::size_t>(X.k()));
  for (int i = 0; i < X.k(); ++i) cols.push_back(su2_apply(A, X.column(i)));
  return StiefelFrame(X.algebra(), std::move(cols));
}

StiefelFrame word_apply_frame(const GeneratorWord& W, const StiefelFrame& X) {
  if (X.algebra() != Algebra::octonion)
    throw std::invalid_argument("word_apply_frame: octonion frames only");
  std::vector<Spinor> cols;
  cols.reserve(static_cast<std::size_t>(X.k()));
  for (int i = 0; i < X.k(); ++i) cols.push_back(word_apply(W, X.column(i)));
  return StiefelFrame(X.algebra(), std::move(cols));
}

StiefelFrame fiber_act_frame(const StiefelFrame& X,
                             const std::vector<UnitElement>& c) {
  if (static_cast<int>(c.size()) != X.k())
    throw std::invalid_argument("fiber_act_frame: need one unit per column");
  std::vector<Spinor> cols;
  cols.reserve(static_cast<std::size_t>(X.k()));
  for (int i = 0; i < X.k(); ++i)
    cols.push_back(fiber_act(X.column(i), c[static_cast<std::size_t>(i)]));
  return StiefelFrame(X.algebra(), std::move(cols));
}

RealMatrix align_edges(const PolygonConfig& p, const PolygonConfig& q) {
  require_same_shape(p, q);
  const int n = p.n();
  const std::vector<int> pivots = independent_pivots(p);
  if (static_cast<int>(pivots.size()) != n)
    throw std::invalid_argument("align_edges: rank-deficient edge set");
  // Gram-Schmidt both edge sets with the identical pivot sequence; equal Gram
  // matrices give identical coefficients, so B_q B_p^t aligns p onto q.
  auto orthonormalize = [&](const PolygonConfig& poly) {
    std::vector<std::vector<double>> basis;
    for (int idx : pivots) {
      std::vector<double> v(poly.edge(idx).begin(), poly.edge(idx).end());
      for (const auto& b : basis) {
        const double d = vec_dot(v, b);
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] -= d * b[static_cast<std::size_t>(j)];
      }
      const double r = vec_norm(v);
      if (r <= kRankTol)
        throw std::invalid_argument("align_edges: pivot degenerate in target");
      for (double& c : v) c /= r;
      basis.push_back(std::move(v));
    }
    return basis;
  };
  const auto bp = orthonormalize(p);
  const auto bq = orthonormalize(q);
  RealMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int m = 0; m < n; ++m) s += bq[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)] * bp[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
      r(i, j) = s;
    }
  return r;
}

}  // namespace polyhopf
