#pragma once

// Shared test utilities. naive_* are the independent reference
// implementations (plain double loops, no packing, no kernels) that the
// production pair sums are checked against.

#include <cmath>
#include <numbers>
#include <vector>

#include "acute/rng.hpp"
#include "acute/types.hpp"

namespace acute::testing {

inline double naive_pair_value(std::span<const double> x, std::span<const double> y,
                               const Potential& pot) {
  double t = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) t += x[k] * y[k];
  t = std::min(1.0, std::max(-1.0, t));
  return pot.value(t);
}

// (1/N^2) sum over ordered pairs, diagonal entered as F(1).
inline double naive_discrete_energy(const PointConfiguration& config, const Potential& pot) {
  const std::size_t n = config.n();
  double sum = n * pot.value_at_one();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += naive_pair_value(config.point(i), config.point(j), pot);
  return sum / (static_cast<double>(n) * static_cast<double>(n));
}

inline double naive_measure_energy(const DiscreteMeasure& mu, const Potential& pot) {
  double sum = 0.0;
  for (std::size_t i = 0; i < mu.n(); ++i) {
    sum += mu.weight(i) * mu.weight(i) * pot.value_at_one();
    for (std::size_t j = 0; j < mu.n(); ++j)
      if (i != j)
        sum += mu.weight(i) * mu.weight(j) * naive_pair_value(mu.point(i), mu.point(j), pot);
  }
  return sum;
}

inline DiscreteMeasure random_measure(int dim, std::size_t n, std::uint64_t seed,
                                      std::uint64_t stream = 0) {
  const PointConfiguration config = random_configuration(dim, n, {seed, stream});
  NormalRng gen({seed, stream + 1000000});
  std::vector<double> weights(n);
  double sum = 0.0;
  for (double& w : weights) {
    w = gen.uniform01();
    sum += w;
  }
  for (double& w : weights) w /= sum;
  return DiscreteMeasure(dim, config.coords(), std::move(weights));
}

}  // namespace acute::testing
