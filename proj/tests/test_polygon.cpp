#include <doctest.h>

#include <cmath>

#include "polyhopf/polygon.hpp"

using namespace polyhopf;

namespace {
constexpr std::array<Algebra, 4> kAll = {Algebra::real, Algebra::complex,
                                         Algebra::quaternion, Algebra::octonion};

double max_edge_diff(const PolygonConfig& p, const PolygonConfig& q) {
  double worst = 0.0;
  for (int i = 0; i < p.k(); ++i)
    for (int j = 0; j < p.n(); ++j)
      worst = std::max(worst, std::abs(p.edge(i)[static_cast<std::size_t>(j)] -
                                       q.edge(i)[static_cast<std::size_t>(j)]));
  return worst;
}
}  // namespace

TEST_CASE("frame validation") {
  const Algebra R = Algebra::real;
  const AlgebraElement one = AlgebraElement::unit(R);
  const AlgebraElement zero = AlgebraElement::zero(R);
  const StiefelFrame X(R, {Spinor(one, zero), Spinor(zero, one), Spinor(zero, zero)});
  CHECK(X.invariant_defect() == 0.0);
  CHECK_NOTHROW(X.validate());

  const StiefelFrame bad(R, {Spinor(one, zero), Spinor(one, one), Spinor(zero, zero)});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(StiefelFrame(R, {Spinor(one, zero), Spinor(zero, one)}),
                  std::invalid_argument);
}

TEST_CASE("phi_k on the degenerate real frame") {
  const Algebra R = Algebra::real;
  const AlgebraElement one = AlgebraElement::unit(R);
  const AlgebraElement zero = AlgebraElement::zero(R);
  const StiefelFrame X(R, {Spinor(one, zero), Spinor(zero, one), Spinor(zero, zero)});
  const PolygonConfig p = phi_k(X);
  CHECK(p.n() == 2);
  CHECK(p.k() == 3);
  CHECK(p.edge(0)[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p.edge(1)[0] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(p.edge(2)[0] == 0.0);
  CHECK(p.edge(2)[1] == 0.0);
  CHECK(p.nonzero_edge_count() == 2);
  CHECK(p.perimeter() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("polygon validation") {
  std::vector<std::vector<double>> open_edges = {{0.5, 0.0}, {-0.25, 0.0}, {0.0, 0.25}};
  CHECK_THROWS_AS(PolygonConfig(2, open_edges), std::invalid_argument);
  std::vector<std::vector<double>> wrong_per = {{0.2, 0.0}, {-0.2, 0.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(PolygonConfig(2, wrong_per), std::invalid_argument);
  CHECK_THROWS_AS(PolygonConfig(4, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("normalize") {
  const std::vector<std::vector<double>> square = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const PolygonConfig p = normalize(square);
  for (int i = 0; i < 4; ++i)
    CHECK(p.edge_length(i) == doctest::Approx(0.25).epsilon(1e-15));
  // idempotence and scale invariance
  const PolygonConfig again = normalize(p.edges());
  CHECK(max_edge_diff(p, again) == 0.0);
  std::vector<std::vector<double>> scaled = square;
  for (auto& e : scaled)
    for (double& c : e) c *= 3.7;
  CHECK(max_edge_diff(p, normalize(scaled)) <= 1e-15);

  CHECK_THROWS_AS(normalize({{1, 0}, {1, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(normalize({{0, 0}, {0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("sample_stiefel determinism and invariants") {
  for (Algebra a : kAll) {
    const StiefelFrame X = sample_stiefel(a, 8, 42);
    CHECK(X.invariant_defect() <= 1e-10);
    const StiefelFrame Y = sample_stiefel(a, 8, 42);
    double diff = 0.0;
    for (int i = 0; i < 8; ++i)
      diff = std::max(diff, max_coeff_diff(X.column(i), Y.column(i)));
    CHECK(diff == 0.0);
  }
  CHECK_THROWS_AS(sample_stiefel(Algebra::real, 2, 1), std::invalid_argument);
  // the octonion orthogonalization argument, many seeds
  for (std::uint64_t s = 0; s < 200; ++s)
    CHECK(sample_stiefel(Algebra::octonion, 8, s).invariant_defect() <= 1e-10);
}

TEST_CASE("lift round trip and thetas") {
  RandomStream rng(67);
  for (Algebra a : kAll) {
    const StiefelFrame X = sample_stiefel(a, 6, rng);
    const PolygonConfig p = phi_k(X);
    const StiefelFrame L = lift(p);
    CHECK(L.invariant_defect() <= 1e-9);
    CHECK(max_edge_diff(phi_k(L), p) <= 1e-9);

    // a different theta per column differs by a per-column fiber action
    std::vector<UnitElement> thetas;
    for (int i = 0; i < p.k(); ++i) thetas.emplace_back(rng.unit_element(a));
    const StiefelFrame L2 = lift(p, thetas);
    CHECK(max_edge_diff(phi_k(L2), p) <= 1e-9);
    for (int i = 0; i < p.k(); ++i) {
      if (p.edge_length(i) < 1e-12) continue;
      const auto c = fiber_witness(L.column(i), L2.column(i), 1e-9);
      REQUIRE(c.has_value());
      CHECK(max_coeff_diff(fiber_act(L.column(i), *c), L2.column(i)) <= 1e-9);
    }
  }
  // degenerate edge lifts to the zero column
  const Algebra R = Algebra::real;
  const AlgebraElement one = AlgebraElement::unit(R);
  const AlgebraElement zero = AlgebraElement::zero(R);
  const StiefelFrame X(R, {Spinor(one, zero), Spinor(zero, one), Spinor(zero, zero)});
  const StiefelFrame L = lift(phi_k(X));
  CHECK(norm(L.column(2)) == 0.0);
}

TEST_CASE("planar square via complex lift has equal edges") {
  // the square sits in the plane of R^3, so the lift lands in C
  const std::vector<std::vector<double>> square = {
      {1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
  const PolygonConfig p = normalize(square);
  const StiefelFrame X = lift(p);
  CHECK(X.algebra() == Algebra::complex);
  const PolygonConfig back = phi_k(X);
  for (int i = 0; i < 4; ++i)
    CHECK(back.edge_length(i) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("quotient invariant of the equilateral triangle") {
  const double h = std::sqrt(3.0) / 4.0;
  const PolygonConfig p =
      normalize({{0.5, 0.0}, {-0.25, h}, {-0.25, -h}});
  const QuotientInvariant inv = quotient_invariant(p);
  for (int i = 0; i < 3; ++i)
    CHECK(inv.gram(i, i) == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(inv.orientation != 0);
}

TEST_CASE("rotation invariance and reflections") {
  RandomStream rng(71);
  for (Algebra a : kAll) {
    const PolygonConfig p = phi_k(sample_stiefel(a, 5, rng));
    const Rotation R = Rotation::random(p.n(), rng);
    const PolygonConfig q = rotate_polygon(R, p);
    CHECK(equivalent_mod_SO(p, q, 1e-9));
    CHECK(equivalent_mod_O(p, q, 1e-9));

    // mirror: flip the first coordinate
    std::vector<std::vector<double>> mirrored;
    for (int i = 0; i < p.k(); ++i) {
      std::vector<double> edge(p.edge(i).begin(), p.edge(i).end());
      edge[0] = -edge[0];
      mirrored.push_back(std::move(edge));
    }
    const PolygonConfig pm(p.n(), std::move(mirrored));
    if (quotient_invariant(p).orientation != 0) {
      CHECK(!equivalent_mod_SO(p, pm, 1e-9));
      CHECK(equivalent_mod_O(p, pm, 1e-9));
    }

    // generically inequivalent to an independent sample
    const PolygonConfig other = phi_k(sample_stiefel(a, 5, rng));
    CHECK(!equivalent_mod_O(p, other, 1e-6));
  }
  const PolygonConfig tri = normalize({{1, 0}, {-0.5, 1}, {-0.5, -1}});
  CHECK(max_edge_diff(rotate_polygon(Rotation::identity(2), tri), tri) == 0.0);
  CHECK_THROWS_AS(rotate_polygon(Rotation::identity(3), tri),
                  std::invalid_argument);
}

TEST_CASE("equivalence soundness: invariant match implies explicit rotation") {
  RandomStream rng(73);
  for (Algebra a : kAll) {
    const PolygonConfig p = phi_k(sample_stiefel(a, 6, rng));
    if (quotient_invariant(p).orientation == 0) continue;
    const Rotation R = Rotation::random(p.n(), rng);
    const PolygonConfig q = rotate_polygon(R, p);
    REQUIRE(equivalent_mod_SO(p, q, 1e-9));
    const RealMatrix A = align_edges(p, q);
    CHECK(A.orthogonality_defect() <= 1e-8);
    double worst = 0.0;
    for (int i = 0; i < p.k(); ++i) {
      const std::vector<double> mapped = A.apply(p.edge(i));
      for (int j = 0; j < p.n(); ++j)
        worst = std::max(worst, std::abs(mapped[static_cast<std::size_t>(j)] -
                                         q.edge(i)[static_cast<std::size_t>(j)]));
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("group actions on frames") {
  RandomStream rng(79);
  for (Algebra a : kAll) {
    const int k = 5;
    const StiefelFrame X = sample_stiefel(a, k, rng);
    std::vector<UnitElement> cs;
    for (int i = 0; i < k; ++i) cs.emplace_back(rng.unit_element(a));
    StiefelFrame acted = fiber_act_frame(X, cs);
    CHECK(acted.invariant_defect() <= 1e-9);
    if (a == Algebra::octonion) {
      acted = word_apply_frame(random_word(4, rng), acted);
    } else {
      acted = su2_apply_frame(su2_random(a, rng), acted);
    }
    CHECK(acted.invariant_defect() <= 1e-9);
    CHECK(equivalent_mod_SO(phi_k(X), phi_k(acted), 1e-9));
  }

  // -I2 and c = (-1, ..., -1) act identically
  const Algebra H = Algebra::quaternion;
  const StiefelFrame X = sample_stiefel(H, 4, 3);
  const AlgebraMatrix2 mneg(-AlgebraElement::unit(H), AlgebraElement::zero(H),
                            AlgebraElement::zero(H), -AlgebraElement::unit(H));
  const StiefelFrame a1 = su2_apply_frame(SpecialUnitary2(mneg), X);
  const std::vector<UnitElement> negs(4, UnitElement(-AlgebraElement::unit(H)));
  const StiefelFrame a2 = fiber_act_frame(X, negs);
  double diff = 0.0;
  for (int i = 0; i < 4; ++i)
    diff = std::max(diff, max_coeff_diff(a1.column(i), a2.column(i)));
  CHECK(diff <= 1e-12);
}

TEST_CASE("octonion rotation/word equivariance on polygons") {
  RandomStream rng(83);
  for (int t = 0; t < 20; ++t) {
    const StiefelFrame X = sample_stiefel(Algebra::octonion, 6, rng);
    const GeneratorWord W = random_word(3, rng);
    const PolygonConfig lhs = rotate_polygon(word_rotation(W), phi_k(X));
    const PolygonConfig rhs = phi_k(word_apply_frame(W, X));
    CHECK(max_edge_diff(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("degenerate fiber count") {
  // l = 2 nonzero edges: independent unit parameters only on nonzero columns
  const Algebra C = Algebra::complex;
  const AlgebraElement one = AlgebraElement::unit(C);
  const AlgebraElement zero = AlgebraElement::zero(C);
  const StiefelFrame X(C, {Spinor(one, zero), Spinor(zero, one),
                           Spinor(zero, zero)});
  const PolygonConfig p = phi_k(X);
  CHECK(p.nonzero_edge_count() == 2);
  // zero edges lift to zero columns regardless of theta
  const UnitElement i(AlgebraElement::basis(C, 1));
  const StiefelFrame L = lift(p, {UnitElement::one(C), i, i});
  CHECK(norm(L.column(2)) == 0.0);
  CHECK(norm(L.column(1)) > 0.5);
}
