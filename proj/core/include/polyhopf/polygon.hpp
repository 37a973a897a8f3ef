#ifndef POLYHOPF_POLYGON_HPP
#define POLYHOPF_POLYGON_HPP

#include <cstdint>
#include <vector>

#include "polyhopf/hopf.hpp"
#include "polyhopf/matrix.hpp"
#include "polyhopf/spin.hpp"

namespace polyhopf {

/// An edge shorter than this (post-normalization, absolute) counts as zero
/// for fiber bookkeeping.
inline constexpr double kDegenerateEdgeTol = 1e-12;

/// 2xk matrix over F with orthonormal rows, stored as k spinor columns.
class StiefelFrame {
 public:
  StiefelFrame(Algebra a, std::vector<Spinor> columns);

  Algebra algebra() const { return alg_; }
  int k() const { return static_cast<int>(cols_.size()); }
  const Spinor& column(int i) const { return cols_[static_cast<std::size_t>(i)]; }
  const std::vector<Spinor>& columns() const { return cols_; }

  /// Max violation of the row-orthonormality sums
  /// sum |x_i|^2 = 1, sum |y_i|^2 = 1, sum x_i conj(y_i) = 0.
  double invariant_defect() const;
  /// Throws naming the violated sum when the defect exceeds tol.
  void validate(double tol = 1e-10) const;

 private:
  Algebra alg_;
  std::vector<Spinor> cols_;
};

/// k edge vectors in R^n, closed, unit perimeter, not all zero.
class PolygonConfig {
 public:
  /// Validates closure, unit perimeter and non-degeneracy within tol.
  PolygonConfig(int n, std::vector<std::vector<double>> edges, double tol = 1e-10);

  int n() const { return n_; }
  int k() const { return static_cast<int>(edges_.size()); }
  std::span<const double> edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  const std::vector<std::vector<double>>& edges() const { return edges_; }

  double edge_length(int i) const;
  double perimeter() const;
  std::vector<double> closure_residual() const;
  /// Count of edges above the degeneracy threshold.
  int nonzero_edge_count(double tol = kDegenerateEdgeTol) const;

 private:
  int n_;
  std::vector<std::vector<double>> edges_;
};

/// Scales a closed edge list to unit perimeter. Throws on non-closed or zero
/// input.
PolygonConfig normalize(const std::vector<std::vector<double>>& raw_edges,
                        double closure_tol = 1e-10);

/// Canonical data for SO(n)/O(n) classes: the k x k Gram matrix of edges plus
/// an orientation sign (0 = null when rank(gram) < n).
struct QuotientInvariant {
  RealMatrix gram;
  int orientation;  // +1, -1, or 0 for null
};

/// Edge map of the frame: edge i = pi.Phi(column i). Validates the frame
/// first; the output is closed with unit perimeter by construction.
PolygonConfig phi_k(const StiefelFrame& X);

/// Per-edge Hopf preimages; thetas must have length k (identity section when
/// a caller wants the canonical lift).
StiefelFrame lift(const PolygonConfig& p, const std::vector<UnitElement>& thetas);
StiefelFrame lift(const PolygonConfig& p);

/// Two Gaussian rows orthonormalized (valid over O by the alternative laws).
StiefelFrame sample_stiefel(Algebra a, int k, std::uint64_t seed);
StiefelFrame sample_stiefel(Algebra a, int k, RandomStream& rng);

QuotientInvariant quotient_invariant(const PolygonConfig& p);
bool equivalent_mod_SO(const PolygonConfig& p, const PolygonConfig& q, double tol);
bool equivalent_mod_O(const PolygonConfig& p, const PolygonConfig& q, double tol);

PolygonConfig rotate_polygon(const Rotation& R, const PolygonConfig& p);

StiefelFrame su2_apply_frame(const SpecialUnitary2& A, const StiefelFrame& X);
StiefelFrame word_apply_frame(const GeneratorWord& W, const StiefelFrame& X);
StiefelFrame fiber_act_frame(const StiefelFrame& X,
                             const std::vector<UnitElement>& c);

/// Least-squares orthogonal alignment: the R with R p ~ q, meaningful when
/// the polygons share a full-rank Gram matrix. Test/diagnostic helper.
RealMatrix align_edges(const PolygonConfig& p, const PolygonConfig& q);

}  // namespace polyhopf

#endif  // POLYHOPF_POLYGON_HPP
