#ifndef POLYHOPF_ALGEBRA_HPP
#define POLYHOPF_ALGEBRA_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

namespace polyhopf {

/// The four normed division algebras, selected by real dimension.
enum class Algebra : int {
  real = 1,
  complex = 2,
  quaternion = 4,
  octonion = 8,
};

constexpr int dim(Algebra a) { return static_cast<int>(a); }

Algebra algebra_from_dim(int d);
Algebra algebra_from_letter(char c);        // 'R', 'C', 'H', 'O'
char algebra_letter(Algebra a);
int euclidean_dim(Algebra a);               // 1 + dim F, the target of pi.Phi

/// Signed basis index: e_i * e_j = sign * e_idx.
struct SignedIndex {
  std::int8_t sign;
  std::uint8_t idx;
};

/// Multiplication tables for all four algebras. The octonion table is built
/// from the cyclic relation family (e_i e_{i+1} = e_{i+3}, indices mod 7) and
/// checked entry-for-entry against an independently generated Cayley-Dickson
/// table; any mismatch throws at first use. The smaller algebras are
/// restrictions to the sub-bases {e}, {e,e1}, {e,e1,e2,e4}.
class MulTables {
 public:
  static const MulTables& instance();

  SignedIndex oct(int i, int j) const { return oct_[i][j]; }
  SignedIndex product(Algebra a, int i, int j) const {
    return per_dim_[table_slot(a)][static_cast<std::size_t>(i) * dim(a) + j];
  }
  /// True when the relation-family table equals the Cayley-Dickson one.
  bool matches_cayley_dickson() const { return cd_match_; }
  SignedIndex cayley_dickson(int i, int j) const { return cd_[i][j]; }

 private:
  MulTables();
  static int table_slot(Algebra a);

  std::array<std::array<SignedIndex, 8>, 8> oct_;
  std::array<std::array<SignedIndex, 8>, 8> cd_;
  std::array<std::array<SignedIndex, 64>, 4> per_dim_;
  bool cd_match_ = false;
};

/// A value of F in {R, C, H, O}: real coefficients over the orthonormal
/// basis {e, e1, ..., e_{d-1}}. Immutable in spirit; all operations are pure.
class AlgebraElement {
 public:
  AlgebraElement() : alg_(Algebra::real), c_{} {}
  explicit AlgebraElement(Algebra a) : alg_(a), c_{} {}
  AlgebraElement(Algebra a, std::span<const double> coeffs);
  AlgebraElement(Algebra a, std::initializer_list<double> coeffs)
      : AlgebraElement(a, std::span<const double>(coeffs.begin(), coeffs.size())) {}

  static AlgebraElement zero(Algebra a) { return AlgebraElement(a); }
  static AlgebraElement unit(Algebra a);
  /// Basis element e_i (i = 0 is the unit e).
  static AlgebraElement basis(Algebra a, int i);
  static AlgebraElement scalar(Algebra a, double r);

  Algebra algebra() const { return alg_; }
  int dim() const { return polyhopf::dim(alg_); }
  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }
  std::span<const double> coeffs() const { return {c_.data(), static_cast<std::size_t>(dim())}; }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(double s);

 private:
  Algebra alg_;
  std::array<double, 8> c_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a);
AlgebraElement operator*(AlgebraElement a, double s);
AlgebraElement operator*(double s, AlgebraElement a);

/// Algebra product via the structure table. Throws on tag mismatch.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return mul(a, b);
}

AlgebraElement conj(const AlgebraElement& a);
double norm_sq(const AlgebraElement& a);
double norm(const AlgebraElement& a);
double inner(const AlgebraElement& a, const AlgebraElement& b);
/// conj(a)/norm_sq(a). Throws on the zero element.
AlgebraElement inverse(const AlgebraElement& a);
double real_part(const AlgebraElement& a);
AlgebraElement imag_part(const AlgebraElement& a);

bool same_algebra(const AlgebraElement& a, const AlgebraElement& b);
void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b,
                          const char* where);

/// Max absolute coefficient difference; requires equal tags.
double max_coeff_diff(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace polyhopf

#endif  // POLYHOPF_ALGEBRA_HPP
