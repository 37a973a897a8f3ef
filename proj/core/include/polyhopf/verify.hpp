#ifndef POLYHOPF_VERIFY_HPP
#define POLYHOPF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyhopf/polygon.hpp"

namespace polyhopf {

/// Outcome of one randomized property check: the worst residual seen over all
/// trials, the tolerance it was judged against, and the seed that reproduces
/// the run.
struct PropertyResult {
  std::string name;
  double max_residual;
  double tol;
  bool pass;
  int trials;
  std::uint64_t seed;
};

std::vector<PropertyResult> verify_algebra(int trials, double tol, std::uint64_t seed);
std::vector<PropertyResult> verify_hopf(int trials, double tol, std::uint64_t seed);
std::vector<PropertyResult> verify_spin(int trials, double tol, std::uint64_t seed);
std::vector<PropertyResult> verify_polygon(int trials, double tol, std::uint64_t seed);
/// Concatenation of all four suites.
std::vector<PropertyResult> verify_all(int trials, double tol, std::uint64_t seed);

bool all_pass(const std::vector<PropertyResult>& results);
/// Machine-readable report: {"pass": bool, "properties": [...]}.
std::string report_json(const std::vector<PropertyResult>& results);

}  // namespace polyhopf

#endif  // POLYHOPF_VERIFY_HPP
