#include "polyhopf/algebra.hpp"

#include <algorithm>

namespace polyhopf {

Algebra algebra_from_dim(int d) {
  switch (d) {
    case 1: return Algebra::real;
    case 2: return Algebra::complex;
    case 4: return Algebra::quaternion;
    case 8: return Algebra::octonion;
    default:
      throw std::invalid_argument("algebra dimension must be 1, 2, 4 or 8, got " +
                                  std::to_string(d));
  }
}

Algebra algebra_from_letter(char c) {
  switch (c) {
    case 'R': return Algebra::real;
    case 'C': return Algebra::complex;
    case 'H': return Algebra::quaternion;
    case 'O': return Algebra::octonion;
    default:
      throw std::invalid_argument(std::string("unknown algebra letter '") + c + "'");
  }
}

char algebra_letter(Algebra a) {
  switch (a) {
    case Algebra::real: return 'R';
    case Algebra::complex: return 'C';
    case Algebra::quaternion: return 'H';
    case Algebra::octonion: return 'O';
  }
  throw std::logic_error("bad algebra tag");
}

int euclidean_dim(Algebra a) { return 1 + dim(a); }

namespace {

constexpr int kUnset = -1;

int wrap7(int n) { return ((n - 1) % 7) + 1; }

void set_entry(std::array<std::array<SignedIndex, 8>, 8>& t,
               std::array<std::array<bool, 8>, 8>& filled, int i, int j, int sign,
               int idx) {
  if (filled[i][j]) {
    if (t[i][j].sign != sign || t[i][j].idx != idx)
      throw std::logic_error("inconsistent octonion relation family");
    return;
  }
  t[i][j] = {static_cast<std::int8_t>(sign), static_cast<std::uint8_t>(idx)};
  filled[i][j] = true;
}

std::array<std::array<SignedIndex, 8>, 8> build_relation_table() {
  std::array<std::array<SignedIndex, 8>, 8> t{};
  std::array<std::array<bool, 8>, 8> filled{};
  // Unit row/column and squares.
  for (int j = 0; j < 8; ++j) set_entry(t, filled, 0, j, +1, j);
  for (int i = 1; i < 8; ++i) {
    set_entry(t, filled, i, 0, +1, i);
    set_entry(t, filled, i, i, -1, 0);
  }
  // e_i e_{i+1} = e_{i+3} family, indices cyclic mod 7 in {1,...,7}.
  for (int i = 1; i <= 7; ++i) {
    const int a = i, b = wrap7(i + 1), c = wrap7(i + 3);
    set_entry(t, filled, a, b, +1, c);
    set_entry(t, filled, b, a, -1, c);
    set_entry(t, filled, b, c, +1, a);
    set_entry(t, filled, c, b, -1, a);
    set_entry(t, filled, c, a, +1, b);
    set_entry(t, filled, a, c, -1, b);
  }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!filled[i][j]) throw std::logic_error("octonion table has holes");
  return t;
}

// Cayley-Dickson product of basis elements in dimension d (a power of two),
// with the doubling rule (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)).
SignedIndex cd_basis_mul(int d, int i, int j) {
  if (d == 1) return {+1, 0};
  const int h = d / 2;
  if (i < h && j < h) return cd_basis_mul(h, i, j);
  if (i < h && j >= h) {
    // (a,0)(0,q) = (0, qa)
    SignedIndex r = cd_basis_mul(h, j - h, i);
    return {r.sign, static_cast<std::uint8_t>(r.idx + h)};
  }
  if (i >= h && j < h) {
    // (0,b)(c,0) = (0, b conj(c))
    SignedIndex r = cd_basis_mul(h, i - h, j);
    int s = r.sign * (j > 0 ? -1 : +1);
    return {static_cast<std::int8_t>(s), static_cast<std::uint8_t>(r.idx + h)};
  }
  // (0,b)(0,q) = (-conj(q) b, 0)
  SignedIndex r = cd_basis_mul(h, j - h, i - h);
  int s = -r.sign * (j - h > 0 ? -1 : +1);
  return {static_cast<std::int8_t>(s), r.idx};
}

// Signed correspondence between the relation-family basis e_i and the
// Cayley-Dickson basis f_i = {1, i, j, k, l, il, jl, kl}, fixed by the H
// sub-basis e1 -> i, e2 -> j, e4 -> k and the choice e3 -> l.
struct BasisMap {
  int sign;
  int idx;
};
constexpr BasisMap kEtoF[8] = {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 4},
                               {+1, 3}, {+1, 6}, {-1, 7}, {+1, 5}};

std::array<std::array<SignedIndex, 8>, 8> build_cd_table() {
  BasisMap f_to_e[8];
  for (int i = 0; i < 8; ++i) f_to_e[kEtoF[i].idx] = {kEtoF[i].sign, i};
  std::array<std::array<SignedIndex, 8>, 8> t{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      SignedIndex r = cd_basis_mul(8, kEtoF[i].idx, kEtoF[j].idx);
      const BasisMap back = f_to_e[r.idx];
      int s = kEtoF[i].sign * kEtoF[j].sign * r.sign * back.sign;
      t[i][j] = {static_cast<std::int8_t>(s), static_cast<std::uint8_t>(back.idx)};
    }
  return t;
}

constexpr int kSubBasis[4][8] = {
    {0, kUnset, kUnset, kUnset, kUnset, kUnset, kUnset, kUnset},
    {0, 1, kUnset, kUnset, kUnset, kUnset, kUnset, kUnset},
    {0, 1, 2, 4, kUnset, kUnset, kUnset, kUnset},
    {0, 1, 2, 3, 4, 5, 6, 7},
};
constexpr int kSubDim[4] = {1, 2, 4, 8};

}  // namespace

int MulTables::table_slot(Algebra a) {
  switch (a) {
    case Algebra::real: return 0;
    case Algebra::complex: return 1;
    case Algebra::quaternion: return 2;
    case Algebra::octonion: return 3;
  }
  throw std::logic_error("bad algebra tag");
}

MulTables::MulTables() : oct_(build_relation_table()), cd_(build_cd_table()) {
  cd_match_ = true;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (oct_[i][j].sign != cd_[i][j].sign || oct_[i][j].idx != cd_[i][j].idx)
        cd_match_ = false;
  if (!cd_match_)
    throw std::logic_error(
        "octonion structure table disagrees with Cayley-Dickson construction");

  for (int slot = 0; slot < 4; ++slot) {
    const int d = kSubDim[slot];
    // Inverse of the sub-basis map, for folding products back to coefficients.
    int inv[8];
    std::fill(std::begin(inv), std::end(inv), kUnset);
    for (int i = 0; i < d; ++i) inv[kSubBasis[slot][i]] = i;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        SignedIndex r = oct_[kSubBasis[slot][i]][kSubBasis[slot][j]];
        if (inv[r.idx] == kUnset)
          throw std::logic_error("sub-basis is not multiplicatively closed");
        per_dim_[slot][static_cast<std::size_t>(i) * d + j] = {
            r.sign, static_cast<std::uint8_t>(inv[r.idx])};
      }
  }
}

const MulTables& MulTables::instance() {
  static const MulTables tables;
  return tables;
}

AlgebraElement::AlgebraElement(Algebra a, std::span<const double> coeffs)
    : alg_(a), c_{} {
  if (coeffs.size() != static_cast<std::size_t>(polyhopf::dim(a)))
    throw std::invalid_argument("coefficient count does not match algebra dimension");
  std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

AlgebraElement AlgebraElement::unit(Algebra a) {
  AlgebraElement e(a);
  e.c_[0] = 1.0;
  return e;
}

AlgebraElement AlgebraElement::basis(Algebra a, int i) {
  if (i < 0 || i >= polyhopf::dim(a))
    throw std::invalid_argument("basis index out of range for algebra");
  AlgebraElement e(a);
  e.c_[i] = 1.0;
  return e;
}

AlgebraElement AlgebraElement::scalar(Algebra a, double r) {
  AlgebraElement e(a);
  e.c_[0] = r;
  return e;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_algebra(*this, o, "operator+");
  for (int i = 0; i < dim(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_algebra(*this, o, "operator-");
  for (int i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(double s) {
  for (int i = 0; i < dim(); ++i) c_[i] *= s;
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator-(AlgebraElement a) { return a *= -1.0; }
AlgebraElement operator*(AlgebraElement a, double s) { return a *= s; }
AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b, "mul");
  const int d = a.dim();
  const MulTables& t = MulTables::instance();
  AlgebraElement c(a.algebra());
  for (int i = 0; i < d; ++i) {
    const double ai = a[i];
    for (int j = 0; j < d; ++j) {
      const SignedIndex r = t.product(a.algebra(), i, j);
      c[r.idx] += r.sign * ai * b[j];
    }
  }
  return c;
}

AlgebraElement conj(const AlgebraElement& a) {
  AlgebraElement c = a;
  for (int i = 1; i < a.dim(); ++i) c[i] = -c[i];
  return c;
}

double norm_sq(const AlgebraElement& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * a[i];
  return s;
}

double norm(const AlgebraElement& a) { return std::sqrt(norm_sq(a)); }

double inner(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b, "inner");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

AlgebraElement inverse(const AlgebraElement& a) {
  const double n2 = norm_sq(a);
  if (n2 <= 0.0)
    throw std::domain_error("inverse of non-invertible (zero) algebra element");
  return conj(a) * (1.0 / n2);
}

double real_part(const AlgebraElement& a) { return a[0]; }

AlgebraElement imag_part(const AlgebraElement& a) {
  AlgebraElement c = a;
  c[0] = 0.0;
  return c;
}

bool same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  return a.algebra() == b.algebra();
}

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b,
                          const char* where) {
  if (!same_algebra(a, b))
    throw std::invalid_argument(std::string(where) +
                                ": incompatible algebras (dim " +
                                std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
}

double max_coeff_diff(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b, "max_coeff_diff");
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace polyhopf
