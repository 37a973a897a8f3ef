#include "polyhopf/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>

#include "polyhopf/rng.hpp"
#include "polyhopf/spin.hpp"

namespace polyhopf {

namespace {

constexpr std::array<Algebra, 4> kAlgebras = {
    Algebra::real, Algebra::complex, Algebra::quaternion, Algebra::octonion};
constexpr std::array<Algebra, 3> kAssociative = {
    Algebra::real, Algebra::complex, Algebra::quaternion};

// Tolerance for single products / exact-structure identities, independent of
// the caller's composite-expression tolerance.
constexpr double kTightTol = 1e-12;

PropertyResult run(std::string name, int trials, double tol, std::uint64_t seed,
                   std::uint64_t stream,
                   const std::function<double(RandomStream&)>& trial) {
  RandomStream rng(seed, stream);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) worst = std::max(worst, trial(rng));
  const bool pass = worst <= tol;
  return {std::move(name), worst, tol, pass, trials, seed};
}

double rel(double abs_residual, double scale) {
  return abs_residual / std::max(1.0, scale);
}

Spinor random_spinor(RandomStream& rng, Algebra a) {
  return Spinor(rng.gaussian_element(a), rng.gaussian_element(a));
}

}  // namespace

std::vector<PropertyResult> verify_algebra(int trials, double tol,
                                           std::uint64_t seed) {
  std::vector<PropertyResult> out;

  out.push_back(run("composition_law", trials, kTightTol, seed, 100,
                    [](RandomStream& rng) {
                      double worst = 0.0;
                      for (Algebra a : kAlgebras) {
                        const AlgebraElement x = rng.gaussian_element(a);
                        const AlgebraElement y = rng.gaussian_element(a);
                        const double scale = norm(x) * norm(y);
                        worst = std::max(
                            worst, rel(std::abs(norm(mul(x, y)) - scale), scale));
                      }
                      return worst;
                    }));

  out.push_back(run("rank_equation", trials, kTightTol, seed, 101,
                    [](RandomStream& rng) {
                      const Algebra a = Algebra::octonion;
                      const AlgebraElement x = rng.gaussian_element(a);
                      const AlgebraElement lhs = mul(x, x);
                      const AlgebraElement rhs =
                          2.0 * x[0] * x - AlgebraElement::scalar(a, norm_sq(x));
                      return rel(max_coeff_diff(lhs, rhs), norm_sq(x));
                    }));

  out.push_back(run("inner_product_scaling", trials, kTightTol, seed, 102,
                    [](RandomStream& rng) {
                      const Algebra alg = Algebra::octonion;
                      const AlgebraElement a = rng.gaussian_element(alg);
                      const AlgebraElement b = rng.gaussian_element(alg);
                      const AlgebraElement x = rng.gaussian_element(alg);
                      const double lhs = inner(mul(a, x), mul(b, x));
                      const double rhs = inner(a, b) * norm_sq(x);
                      return rel(std::abs(lhs - rhs),
                                 norm(a) * norm(b) * norm_sq(x));
                    }));

  out.push_back(run(
      "conjugation_lemma", trials, kTightTol, seed, 103, [](RandomStream& rng) {
        const Algebra alg = Algebra::octonion;
        const AlgebraElement x = rng.gaussian_element(alg);
        const AlgebraElement y = rng.gaussian_element(alg);
        const AlgebraElement z = rng.gaussian_element(alg);
        const double scale = norm(x) * norm(y) * std::max(1.0, norm(z));
        double worst = rel(
            max_coeff_diff(mul(x, mul(conj(x), y)), norm_sq(x) * y), scale);
        worst = std::max(worst,
                         rel(max_coeff_diff(mul(mul(x, conj(y)), y),
                                            x * norm_sq(y)),
                             scale));
        const AlgebraElement lhs =
            mul(x, mul(conj(y), z)) + mul(y, mul(conj(x), z));
        worst = std::max(
            worst, rel(max_coeff_diff(lhs, 2.0 * inner(x, y) * z), scale));
        return worst;
      }));

  out.push_back(run(
      "alternative_laws", trials, kTightTol, seed, 104, [](RandomStream& rng) {
        const Algebra alg = Algebra::octonion;
        const AlgebraElement x = rng.gaussian_element(alg);
        const AlgebraElement y = rng.gaussian_element(alg);
        const double scale = norm_sq(x) * norm(y);
        double worst =
            rel(max_coeff_diff(mul(mul(x, y), x), mul(x, mul(y, x))), scale);
        worst = std::max(
            worst,
            rel(max_coeff_diff(mul(x, mul(x, y)), mul(mul(x, x), y)), scale));
        worst = std::max(
            worst,
            rel(max_coeff_diff(mul(mul(x, y), y), mul(x, mul(y, y))),
                norm(x) * norm_sq(y)));
        return worst;
      }));

  out.push_back(run(
      "moufang_identities", trials, kTightTol, seed, 105, [](RandomStream& rng) {
        const Algebra alg = Algebra::octonion;
        const AlgebraElement a = rng.gaussian_element(alg);
        const AlgebraElement x = rng.gaussian_element(alg);
        const AlgebraElement y = rng.gaussian_element(alg);
        const double scale = norm_sq(a) * norm(x) * norm(y);
        double worst = rel(max_coeff_diff(mul(mul(a, x), mul(y, a)),
                                          mul(a, mul(mul(x, y), a))),
                           scale);
        worst = std::max(worst, rel(max_coeff_diff(mul(a, mul(x, mul(a, y))),
                                                   mul(mul(a, mul(x, a)), y)),
                                    scale));
        worst = std::max(worst, rel(max_coeff_diff(mul(x, mul(a, mul(y, a))),
                                                   mul(mul(mul(x, a), y), a)),
                                    scale));
        return worst;
      }));

  out.push_back(run("nonassociativity_witness", 1, 0.0, seed, 106,
                    [](RandomStream&) {
                      const Algebra a = Algebra::octonion;
                      auto e = [&](int i) { return AlgebraElement::basis(a, i); };
                      const AlgebraElement lhs = mul(mul(e(1), e(2)), mul(e(2), e(3)));
                      const AlgebraElement rhs = mul(e(1), mul(mul(e(2), e(2)), e(3)));
                      return std::max(max_coeff_diff(lhs, e(7)),
                                      max_coeff_diff(rhs, -e(7)));
                    }));

  out.push_back(run("subalgebra_consistency", 1, 0.0, seed, 107,
                    [](RandomStream&) {
                      constexpr std::array<std::array<int, 8>, 2> sub = {
                          {{0, 1, 0, 0, 0, 0, 0, 0}, {0, 1, 2, 4, 0, 0, 0, 0}}};
                      constexpr std::array<Algebra, 2> algs = {Algebra::complex,
                                                               Algebra::quaternion};
                      double worst = 0.0;
                      for (int s = 0; s < 2; ++s) {
                        const Algebra a = algs[static_cast<std::size_t>(s)];
                        const int d = dim(a);
                        for (int i = 0; i < d; ++i)
                          for (int j = 0; j < d; ++j) {
                            const AlgebraElement small =
                                mul(AlgebraElement::basis(a, i),
                                    AlgebraElement::basis(a, j));
                            // Embed the product back into O coordinates.
                            AlgebraElement emb(Algebra::octonion);
                            for (int m = 0; m < d; ++m)
                              emb[sub[static_cast<std::size_t>(s)]
                                     [static_cast<std::size_t>(m)]] = small[m];
                            const AlgebraElement big =
                                mul(AlgebraElement::basis(
                                        Algebra::octonion,
                                        sub[static_cast<std::size_t>(s)]
                                           [static_cast<std::size_t>(i)]),
                                    AlgebraElement::basis(
                                        Algebra::octonion,
                                        sub[static_cast<std::size_t>(s)]
                                           [static_cast<std::size_t>(j)]));
                            worst = std::max(worst, max_coeff_diff(emb, big));
                          }
                      }
                      return worst;
                    }));

  return out;
}

std::vector<PropertyResult> verify_hopf(int trials, double tol,
                                        std::uint64_t seed) {
  std::vector<PropertyResult> out;

  out.push_back(run("preimage_round_trip", trials, 1e-10, seed, 200,
                    [](RandomStream& rng) {
                      double worst = 0.0;
                      for (Algebra a : kAlgebras) {
                        const HopfImage target(rng.gaussian(),
                                               rng.gaussian_element(a));
                        const UnitElement theta(rng.unit_element(a));
                        const HopfImage back =
                            hopf_phi(hopf_preimage(target, theta));
                        worst = std::max(worst, rel(max_coeff_diff(back, target),
                                                    norm(target)));
                      }
                      return worst;
                    }));

  out.push_back(run("norm_lemma", trials, kTightTol, seed, 201,
                    [](RandomStream& rng) {
                      double worst = 0.0;
                      for (Algebra a : kAlgebras) {
                        const Spinor v = random_spinor(rng, a);
                        const double lhs = norm(hopf_phi(v));
                        const double rhs = norm_sq(v) / 2.0;
                        worst = std::max(worst, rel(std::abs(lhs - rhs), rhs));
                      }
                      return worst;
                    }));

  out.push_back(run("fiber_invariance", trials, tol, seed, 202,
                    [](RandomStream& rng) {
                      double worst = 0.0;
                      for (Algebra a : kAlgebras) {
                        const Spinor v = random_spinor(rng, a);
                        const UnitElement c(rng.unit_element(a));
                        const HopfImage before = hopf_phi(v);
                        const HopfImage after = hopf_phi(fiber_act(v, c));
                        worst = std::max(worst, rel(max_coeff_diff(after, before),
                                                    norm(before)));
                      }
                      return worst;
                    }));

  out.push_back(run(
      "witness_soundness", trials, tol, seed, 203, [tol](RandomStream& rng) {
        double worst = 0.0;
        for (Algebra a : kAlgebras) {
          const Spinor v = random_spinor(rng, a);
          if (norm(v) < 1e-3) continue;
          const UnitElement c(rng.unit_element(a));
          const Spinor w = fiber_act(v, c);
          const auto witness = fiber_witness(v, w, tol);
          if (!witness) return 1.0;  // a same-fiber pair must yield a witness
          const Spinor back = fiber_act(v, *witness);
          worst = std::max(worst, rel(max_coeff_diff(back, w), norm(w)));
        }
        return worst;
      }));

  out.push_back(run("fiber_distinctness", trials, 0.0, seed, 204,
                    [](RandomStream& rng) {
                      double worst = 0.0;
                      for (Algebra a : kAlgebras) {
                        Spinor v = random_spinor(rng, a);
                        if (norm(v.x) < 1e-2 || norm(v.y) < 1e-2) continue;
                        const UnitElement c(rng.unit_element(a));
                        const UnitElement cp(rng.unit_element(a));
                        const double sep = max_coeff_diff(c.value(), cp.value());
                        if (sep < 1e-3) continue;
                        const double moved = max_coeff_diff(fiber_act(v, c),
                                                            fiber_act(v, cp));
                        if (moved < 1e-9 * sep) worst = 1.0;
                      }
                      return worst;
                    }));

  return out;
}

std::vector<PropertyResult> verify_spin(int trials, double tol,
                                        std::uint64_t seed) {
  std::vector<PropertyResult> out;

  out.push_back(run("su2_equivariance", trials, tol, seed, 300,
                    [](RandomStream& rng) {
                      double worst = 0.0;
                      for (Algebra a : kAssociative) {
                        const SpecialUnitary2 A = su2_random(a, rng);
                        const Spinor v = random_spinor(rng, a);
                        const HopfImage lhs = hopf_phi(su2_apply(A, v));
                        const Rotation rot = adjoint_rotation(A);
                        const std::vector<double> rhs =
                            rot.apply(hopf_phi(v).as_vector());
                        const HopfImage rhs_img = HopfImage::from_vector(a, rhs);
                        worst = std::max(worst, rel(max_coeff_diff(lhs, rhs_img),
                                                    norm(lhs)));
                      }
                      return worst;
                    }));

  out.push_back(run(
      "key_identity_lambda", trials, 1e-10, seed, 301, [](RandomStream& rng) {
        const SpinGenerator g = SpinGenerator::random(rng);
        const Algebra a = Algebra::octonion;
        const AlgebraElement x = rng.gaussian_element(a);
        const AlgebraElement y = rng.gaussian_element(a);
        const AlgebraElement ubar = conj(g.u());
        const AlgebraElement top = x * g.r() + mul(ubar, y);
        const AlgebraElement bot = mul(g.u(), x) - y * g.r();
        const double lhs = 0.5 * (norm_sq(top) - norm_sq(bot));
        const double lambda = 0.5 * (norm_sq(x) - norm_sq(y));
        const double rhs = (g.r() * g.r() - norm_sq(g.u())) * lambda +
                           2.0 * g.r() * inner(ubar, mul(x, conj(y)));
        return rel(std::abs(lhs - rhs), norm_sq(x) + norm_sq(y));
      }));

  out.push_back(run(
      "key_identity_alpha", trials, 1e-10, seed, 302, [](RandomStream& rng) {
        const SpinGenerator g = SpinGenerator::random(rng);
        const Algebra a = Algebra::octonion;
        const AlgebraElement x = rng.gaussian_element(a);
        const AlgebraElement y = rng.gaussian_element(a);
        const AlgebraElement ubar = conj(g.u());
        const AlgebraElement top = x * g.r() + mul(ubar, y);
        const AlgebraElement bot = mul(g.u(), x) - y * g.r();
        const AlgebraElement lhs = mul(top, conj(bot));
        const AlgebraElement alpha = mul(x, conj(y));
        const double lambda = 0.5 * (norm_sq(x) - norm_sq(y));
        const AlgebraElement rhs = (2.0 * g.r() * lambda) * ubar - alpha +
                                   (2.0 * inner(ubar, alpha)) * ubar;
        return rel(max_coeff_diff(lhs, rhs), norm_sq(x) + norm_sq(y));
      }));

  out.push_back(run("word_fiberwise", trials, tol, seed, 303,
                    [](RandomStream& rng) {
                      const Algebra a = Algebra::octonion;
                      const Spinor v = random_spinor(rng, a);
                      const UnitElement c(rng.unit_element(a));
                      const Spinor w = fiber_act(v, c);
                      const int len = 1 + static_cast<int>(rng.next_u64() % 6);
                      const GeneratorWord W = random_word(len, rng);
                      const HopfImage gv = hopf_phi(word_apply(W, v));
                      const HopfImage gw = hopf_phi(word_apply(W, w));
                      return rel(max_coeff_diff(gv, gw), norm(gv));
                    }));

  out.push_back(run("reflection_property", trials, tol, seed, 304,
                    [](RandomStream& rng) {
                      const SpinGenerator g = SpinGenerator::random(rng);
                      const RealMatrix rho = generator_rotation(g).matrix();
                      std::array<double, 9> w;
                      w[0] = g.r();
                      const AlgebraElement ubar = conj(g.u());
                      for (int i = 0; i < 8; ++i) w[1 + i] = ubar[i];
                      // -rho negates w ...
                      const std::vector<double> neg = rho.apply(w);
                      double worst = 0.0;
                      for (int i = 0; i < 9; ++i)
                        worst = std::max(worst, std::abs(-neg[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(i)]));
                      // ... and fixes the hyperplane perpendicular to w.
                      std::array<double, 9> p;
                      double dot = 0.0;
                      for (auto& c : p) c = rng.gaussian();
                      for (int i = 0; i < 9; ++i) dot += p[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
                      for (int i = 0; i < 9; ++i) p[static_cast<std::size_t>(i)] -= dot * w[static_cast<std::size_t>(i)];
                      const std::vector<double> fixed = rho.apply(p);
                      for (int i = 0; i < 9; ++i)
                        worst = std::max(worst, std::abs(-fixed[static_cast<std::size_t>(i)] - p[static_cast<std::size_t>(i)]));
                      return worst;
                    }));

  out.push_back(run("generator_involution", trials, kTightTol, seed, 305,
                    [](RandomStream& rng) {
                      const SpinGenerator g = SpinGenerator::random(rng);
                      const RealMatrix rho = generator_rotation(g).matrix();
                      return (rho * rho).max_abs_diff(RealMatrix::identity(9));
                    }));

  out.push_back(run("word_homomorphism", trials, tol, seed, 306,
                    [](RandomStream& rng) {
                      GeneratorWord w1 = random_word(3, rng);
                      const GeneratorWord w2 = random_word(3, rng);
                      const RealMatrix rhs =
                          word_rotation(w1).matrix() * word_rotation(w2).matrix();
                      w1.insert(w1.end(), w2.begin(), w2.end());
                      return word_rotation(w1).matrix().max_abs_diff(rhs);
                    }));

  out.push_back(run("cartan_dieudonne", std::min(trials, 200), 1e-8, seed, 307,
                    [](RandomStream& rng) {
                      const Rotation R = Rotation::random(9, rng);
                      const GeneratorWord w = rotation_to_word(R);
                      return word_rotation(w).matrix().frobenius_distance(
                          R.matrix());
                    }));

  out.push_back(run(
      "trace_invariance", trials, tol, seed, 308, [](RandomStream& rng) {
        const Algebra a = Algebra::quaternion;
        const SpecialUnitary2 A = su2_random(a, rng);
        // Random Hermitian X: real diagonal, conjugate off-diagonal pair.
        const AlgebraElement q = rng.gaussian_element(a);
        const AlgebraMatrix2 X(AlgebraElement::scalar(a, rng.gaussian()), q,
                               conj(q), AlgebraElement::scalar(a, rng.gaussian()));
        const AlgebraMatrix2 AXAstar =
            (A.matrix() * X) * A.matrix().conjugate_transpose();
        const std::complex<double> lhs = quaternion_complexify(AXAstar).trace();
        const std::complex<double> rhs = quaternion_complexify(X).trace();
        return std::abs(lhs - rhs);
      }));

  out.push_back(run("kernel_word", 1, kTightTol, seed, 309,
                    [](RandomStream& rng) {
                      const Algebra a = Algebra::octonion;
                      const GeneratorWord w = {
                          SpinGenerator(0.0, AlgebraElement::unit(a)),
                          SpinGenerator(0.0, -AlgebraElement::unit(a))};
                      double worst = word_rotation(w).matrix().max_abs_diff(
                          RealMatrix::identity(9));
                      const Spinor v = random_spinor(rng, a);
                      const Spinor gv = word_apply(w, v);
                      worst = std::max(worst, max_coeff_diff(gv.x, -v.x));
                      worst = std::max(worst, max_coeff_diff(gv.y, -v.y));
                      return worst;
                    }));

  return out;
}

std::vector<PropertyResult> verify_polygon(int trials, double tol,
                                           std::uint64_t seed) {
  std::vector<PropertyResult> out;
  constexpr std::array<int, 4> ks = {3, 4, 8, 16};

  out.push_back(run("phi_closure_perimeter", trials, 1e-10, seed, 400,
                    [&](RandomStream& rng) {
                      double worst = 0.0;
                      for (Algebra a : kAlgebras) {
                        const int k = ks[static_cast<std::size_t>(rng.next_u64() % ks.size())];
                        StiefelFrame X = sample_stiefel(a, k, rng);
                        const PolygonConfig p = phi_k(X);
                        double cl = 0.0;
                        for (double c : p.closure_residual()) cl = std::max(cl, std::abs(c));
                        worst = std::max({worst, cl, std::abs(p.perimeter() - 1.0)});
                      }
                      return worst;
                    }));

  out.push_back(run("lift_round_trip", trials, tol, seed, 401,
                    [&](RandomStream& rng) {
                      double worst = 0.0;
                      for (Algebra a : kAlgebras) {
                        const int k = ks[static_cast<std::size_t>(rng.next_u64() % ks.size())];
                        const PolygonConfig p = phi_k(sample_stiefel(a, k, rng));
                        const PolygonConfig q = phi_k(lift(p));
                        for (int i = 0; i < k; ++i)
                          for (int j = 0; j < p.n(); ++j)
                            worst = std::max(worst,
                                             std::abs(p.edge(i)[static_cast<std::size_t>(j)] -
                                                      q.edge(i)[static_cast<std::size_t>(j)]));
                      }
                      return worst;
                    }));

  out.push_back(run(
      "theorem_invariance", trials, tol, seed, 402, [&](RandomStream& rng) {
        double worst = 0.0;
        for (Algebra a : kAlgebras) {
          const int k = ks[static_cast<std::size_t>(rng.next_u64() % ks.size())];
          const StiefelFrame X = sample_stiefel(a, k, rng);
          std::vector<UnitElement> cs;
          for (int i = 0; i < k; ++i) cs.emplace_back(rng.unit_element(a));
          StiefelFrame acted = fiber_act_frame(X, cs);
          if (a == Algebra::octonion) {
            const int len = 1 + static_cast<int>(rng.next_u64() % 6);
            acted = word_apply_frame(random_word(len, rng), acted);
          } else {
            acted = su2_apply_frame(su2_random(a, rng), acted);
          }
          const QuotientInvariant ip = quotient_invariant(phi_k(X));
          const QuotientInvariant iq = quotient_invariant(phi_k(acted));
          worst = std::max(worst, ip.gram.max_abs_diff(iq.gram));
          if (ip.orientation != iq.orientation) worst = std::max(worst, 1.0);
        }
        return worst;
      }));

  out.push_back(run("action_preserves_frame", trials, tol, seed, 403,
                    [&](RandomStream& rng) {
                      double worst = 0.0;
                      for (Algebra a : kAlgebras) {
                        const int k = ks[static_cast<std::size_t>(rng.next_u64() % ks.size())];
                        const StiefelFrame X = sample_stiefel(a, k, rng);
                        StiefelFrame acted =
                            (a == Algebra::octonion)
                                ? word_apply_frame(random_word(4, rng), X)
                                : su2_apply_frame(su2_random(a, rng), X);
                        std::vector<UnitElement> cs;
                        for (int i = 0; i < k; ++i)
                          cs.emplace_back(rng.unit_element(a));
                        acted = fiber_act_frame(acted, cs);
                        worst = std::max(worst, acted.invariant_defect());
                      }
                      return worst;
                    }));

  out.push_back(run("sampler_orthogonality", trials, 1e-10, seed, 404,
                    [](RandomStream& rng) {
                      return sample_stiefel(Algebra::octonion, 8, rng)
                          .invariant_defect();
                    }));

  return out;
}

std::vector<PropertyResult> verify_all(int trials, double tol,
                                       std::uint64_t seed) {
  std::vector<PropertyResult> out = verify_algebra(trials, tol, seed);
  for (auto&& suite : {verify_hopf(trials, tol, seed),
                       verify_spin(trials, tol, seed),
                       verify_polygon(trials, tol, seed)})
    out.insert(out.end(), suite.begin(), suite.end());
  return out;
}

bool all_pass(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.pass; });
}

std::string report_json(const std::vector<PropertyResult>& results) {
  std::string out = "{\"pass\":";
  out += all_pass(results) ? "true" : "false";
  out += ",\"properties\":[";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const PropertyResult& r = results[i];
    if (i) out += ',';
    char buf[64];
    out += "{\"name\":\"" + r.name + "\",\"max_residual\":";
    std::snprintf(buf, sizeof(buf), "%.17g", r.max_residual);
    out += buf;
    out += ",\"tol\":";
    std::snprintf(buf, sizeof(buf), "%.17g", r.tol);
    out += buf;
    out += ",\"pass\":";
    out += r.pass ? "true" : "false";
    out += ",\"trials\":" + std::to_string(r.trials);
    out += ",\"seed\":" + std::to_string(r.seed) + "}";
  }
  out += "]}\n";
  return out;
}

}  // namespace polyhopf
