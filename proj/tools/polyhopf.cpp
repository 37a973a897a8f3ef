#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyhopf/ensemble_io.hpp"
#include "polyhopf/verify.hpp"

namespace {

using namespace polyhopf;

double default_tol() {
  if (const char* env = std::getenv("POLYHOPF_DEFAULT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
  }
  return 1e-9;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

Algebra parse_algebra_flag(const std::string& s) {
  if (s.size() != 1)
    throw std::invalid_argument("--algebra expects one of R, C, H, O");
  return algebra_from_letter(s[0]);
}

int cmd_sample(const std::string& algebra, int k, int count, std::uint64_t seed,
               const std::string& out) {
  const Algebra a = parse_algebra_flag(algebra);
  PolygonEnsemble e{a, k, seed, {}};
  double edge_sum = 0.0;
  std::size_t edge_count = 0;
  double max_closure = 0.0;
  for (int i = 0; i < count; ++i) {
    // Polygon i depends only on (seed, i), independent of batching.
    RandomStream rng(seed, static_cast<std::uint64_t>(i));
    const PolygonConfig p = phi_k(sample_stiefel(a, k, rng));
    for (int j = 0; j < k; ++j) edge_sum += p.edge_length(j);
    edge_count += static_cast<std::size_t>(k);
    for (double c : p.closure_residual())
      max_closure = std::max(max_closure, std::abs(c));
    e.polygons.push_back(p);
  }
  emit(out, to_json(e));
  std::fprintf(stderr,
               "sampled %d %c-polygons (k=%d, n=%d): mean edge length %.6g, "
               "max closure residual %.3g\n",
               count, algebra_letter(a), k, e.n(), edge_sum / static_cast<double>(edge_count),
               max_closure);
  return 0;
}

int cmd_verify(const std::string& suite, int trials, double tol,
               std::uint64_t seed, const std::string& out) {
  std::vector<PropertyResult> results;
  if (suite == "algebra")
    results = verify_algebra(trials, tol, seed);
  else if (suite == "hopf")
    results = verify_hopf(trials, tol, seed);
  else if (suite == "spin")
    results = verify_spin(trials, tol, seed);
  else if (suite == "polygon")
    results = verify_polygon(trials, tol, seed);
  else
    results = verify_all(trials, tol, seed);
  emit(out, report_json(results));
  if (!all_pass(results)) {
    for (const PropertyResult& r : results)
      if (!r.pass)
        std::fprintf(stderr,
                     "FAIL %s: max residual %.3g > tol %.3g (reproduce with "
                     "--seed %llu --trials %d)\n",
                     r.name.c_str(), r.max_residual, r.tol,
                     static_cast<unsigned long long>(r.seed), r.trials);
    return 1;
  }
  return 0;
}

int cmd_lift(const std::string& in, const std::string& out, double tol) {
  const PolygonEnsemble pe = polygon_ensemble_from_json(read_text_file(in));
  FrameEnsemble fe{pe.algebra, pe.k, pe.seed, {}};
  double worst = 0.0;
  for (const PolygonConfig& p : pe.polygons) {
    const StiefelFrame X = lift(p);
    const PolygonConfig back = phi_k(X);
    for (int i = 0; i < p.k(); ++i)
      for (int j = 0; j < p.n(); ++j)
        worst = std::max(worst, std::abs(p.edge(i)[static_cast<std::size_t>(j)] -
                                         back.edge(i)[static_cast<std::size_t>(j)]));
    fe.frames.push_back(X);
  }
  emit(out, to_json(fe));
  std::fprintf(stderr, "lifted %zu polygons: max round-trip residual %.3g\n",
               pe.polygons.size(), worst);
  if (worst > tol) {
    std::fprintf(stderr, "round-trip residual exceeds tol %.3g\n", tol);
    return 1;
  }
  return 0;
}

int cmd_act(const std::string& in, const std::string& out, std::uint64_t seed,
            int word_length, bool identity, double tol) {
  const PolygonEnsemble pe = polygon_ensemble_from_json(read_text_file(in));
  const int n = pe.n();
  if (word_length > 0 && pe.algebra != Algebra::octonion)
    throw std::invalid_argument("--word-length requires an octonion ensemble (n = 9)");
  RandomStream rng(seed, 0xac7ULL);
  Rotation R = Rotation::identity(n);
  if (!identity)
    R = (word_length > 0) ? word_rotation(random_word(word_length, rng))
                          : Rotation::random(n, rng);
  PolygonEnsemble acted{pe.algebra, pe.k, pe.seed, {}};
  double worst = 0.0;
  for (const PolygonConfig& p : pe.polygons) {
    const PolygonConfig q = identity ? p : rotate_polygon(R, p);
    worst = std::max(worst, quotient_invariant(p).gram.max_abs_diff(
                                quotient_invariant(q).gram));
    acted.polygons.push_back(q);
  }
  emit(out, to_json(acted));
  std::fprintf(stderr, "acted on %zu polygons: max gram deviation %.3g\n",
               acted.polygons.size(), worst);
  if (worst > tol) {
    std::fprintf(stderr, "gram deviation exceeds tol %.3g\n", tol);
    return 1;
  }
  return 0;
}

int cmd_stats(const std::string& in, const std::string& out, int bins) {
  const PolygonEnsemble pe = polygon_ensemble_from_json(read_text_file(in));
  std::vector<double> lengths;
  for (const PolygonConfig& p : pe.polygons)
    for (int i = 0; i < p.k(); ++i) lengths.push_back(p.edge_length(i));
  double lo = 0.0, hi = 0.0;
  for (double l : lengths) hi = std::max(hi, l);
  if (hi <= 0.0) hi = 1.0;
  std::vector<std::size_t> hist(static_cast<std::size_t>(bins), 0);
  for (double l : lengths) {
    int b = static_cast<int>(static_cast<double>(bins) * (l - lo) / (hi - lo));
    b = std::min(std::max(b, 0), bins - 1);
    ++hist[static_cast<std::size_t>(b)];
  }
  std::string csv = "bin_low,bin_high,count\n";
  char buf[80];
  for (int b = 0; b < bins; ++b) {
    const double w = (hi - lo) / static_cast<double>(bins);
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%zu\n", lo + w * b,
                  lo + w * (b + 1), hist[static_cast<std::size_t>(b)]);
    csv += buf;
  }
  emit(out, csv);
  std::fprintf(stderr, "stats over %zu edges from %zu polygons\n",
               lengths.size(), pe.polygons.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhopf: division-algebra Hopf maps and random closed polygons"};
  app.require_subcommand(1);

  std::string algebra = "O", suite = "all", in, out;
  int k = 8, count = 1, trials = 1000, word_length = 0, bins = 20;
  std::uint64_t seed = 0;
  double tol = default_tol();
  bool identity = false;

  CLI::App* sample = app.add_subcommand("sample", "sample a polygon ensemble");
  sample->add_option("--algebra", algebra, "algebra tag: R, C, H, O")->required();
  sample->add_option("--k", k, "number of edges (>= 3)")
      ->check(CLI::Range(3, 1 << 20))
      ->required();
  sample->add_option("--count", count, "number of polygons")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_option("--out", out, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suite, "algebra|hopf|spin|polygon|all")
      ->check(CLI::IsMember({"algebra", "hopf", "spin", "polygon", "all"}));
  verify->add_option("--trials", trials, "trials per property")->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "tolerance for composite expressions");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--out", out, "report path (default stdout)");

  CLI::App* liftc = app.add_subcommand("lift", "lift a polygon ensemble to Stiefel frames");
  liftc->add_option("--in", in, "polygon ensemble path")->required()->check(CLI::ExistingFile);
  liftc->add_option("--out", out, "frame ensemble path (default stdout)");
  liftc->add_option("--tol", tol, "round-trip tolerance");

  CLI::App* act = app.add_subcommand("act", "apply a seeded rotation to an ensemble");
  act->add_option("--in", in, "polygon ensemble path")->required()->check(CLI::ExistingFile);
  act->add_option("--out", out, "output path (default stdout)");
  act->add_option("--seed", seed, "RNG seed for the group element");
  act->add_option("--word-length", word_length,
                  "use a Spin(9) generator word of this length (octonion only)");
  act->add_flag("--identity", identity, "apply the identity action");
  act->add_option("--tol", tol, "gram-deviation tolerance");

  CLI::App* stats = app.add_subcommand("stats", "edge-length histogram as CSV");
  stats->add_option("--in", in, "polygon ensemble path")->required()->check(CLI::ExistingFile);
  stats->add_option("--out", out, "CSV path (default stdout)");
  stats->add_option("--bins", bins, "histogram bins")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sample) return cmd_sample(algebra, k, count, seed, out);
    if (*verify) return cmd_verify(suite, trials, tol, seed, out);
    if (*liftc) return cmd_lift(in, out, tol);
    if (*act) return cmd_act(in, out, seed, word_length, identity, tol);
    if (*stats) return cmd_stats(in, out, bins);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
