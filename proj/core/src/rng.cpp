#include "polyhopf/rng.hpp"

#include <cmath>

namespace polyhopf {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  std::uint64_t x = seed ^ (0x632be59bd9b4e019ULL * (stream + 1));
  for (auto& w : s_) w = splitmix64(x);
}

RandomStream RandomStream::split(std::uint64_t index) const {
  std::uint64_t x = stream_;
  std::uint64_t mixed = splitmix64(x) ^ (index + 0x9e3779b97f4a7c15ULL);
  return RandomStream(seed_, mixed);
}

std::uint64_t RandomStream::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RandomStream::uniform() {
  // 53-bit mantissa, nudged away from zero.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u = uniform();
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double a = 6.283185307179586476925286766559 * v;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

AlgebraElement RandomStream::gaussian_element(Algebra a) {
  AlgebraElement e(a);
  for (int i = 0; i < dim(a); ++i) e[i] = gaussian();
  return e;
}

AlgebraElement RandomStream::unit_element(Algebra a) {
  for (;;) {
    AlgebraElement e = gaussian_element(a);
    const double n = norm(e);
    if (n > 1e-6) return e * (1.0 / n);
  }
}

}  // namespace polyhopf
