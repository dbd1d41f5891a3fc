#include "acute/rng.hpp"

#include <cmath>
#include <numbers>

namespace acute {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

NormalRng::NormalRng(const RngSpec& spec) {
  std::uint64_t state = spec.seed;
  state ^= splitmix64(state) + spec.stream;
  engine_.seed(splitmix64(state));
}

double NormalRng::uniform01() {
  // top 53 bits, shifted into (0,1) so log() below is always finite
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double NormalRng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(a);
  has_cached_ = true;
  return r * std::cos(a);
}

}  // namespace acute
