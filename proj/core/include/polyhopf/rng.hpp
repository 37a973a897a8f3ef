#ifndef POLYHOPF_RNG_HPP
#define POLYHOPF_RNG_HPP

#include <cstdint>

#include "polyhopf/algebra.hpp"

namespace polyhopf {

/// Deterministic random stream. All randomness in the library flows from an
/// explicit (seed, stream) pair; sub-streams are derived by fixed index
/// splitting so that sample i of a run is a pure function of (seed, i),
/// independent of scheduling. The generator is self-contained (xoshiro256++
/// over a splitmix64-expanded state) so output bytes do not depend on the
/// standard library implementation.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  /// Derived stream: same seed, sub-index mixed into the stream id.
  RandomStream split(std::uint64_t index) const;

  std::uint64_t next_u64();
  /// Uniform in (0, 1).
  double uniform();
  /// Standard Gaussian (Box-Muller).
  double gaussian();

  AlgebraElement gaussian_element(Algebra a);
  /// Uniform point on the unit sphere of the algebra.
  AlgebraElement unit_element(Algebra a);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace polyhopf

#endif  // POLYHOPF_RNG_HPP
