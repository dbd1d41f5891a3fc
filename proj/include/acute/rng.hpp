#pragma once

#include <cstdint>
#include <random>

#include "acute/types.hpp"

namespace acute {

// Deterministic normal/uniform generator. The engine is the bit-exact
// standardized mt19937_64, seeded from splitmix64(seed ^ mix(stream)), so
// different streams of one master seed are decorrelated. Uniform doubles
// take the top 53 bits; normals come from the classic Box-Muller pair
// (second value cached). The whole pipeline avoids std distributions,
// whose output is not pinned by the standard.
class NormalRng {
 public:
  explicit NormalRng(const RngSpec& spec);

  // Uniform on (0,1), never exactly 0 or 1.
  double uniform01();
  double normal();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace acute
