#pragma once

#include <cstddef>
#include <vector>

#include "acute/types.hpp"

namespace acute {

// Projected-ascent settings. The acute-angle potential is non-smooth at
// t = 0 -- exactly where the conjectured optima put every off-diagonal
// inner product -- so ascent runs on the smoothed potential F_eps and
// finishes with a continuation phase halving eps three times.
struct AscentParams {
  std::size_t max_iters = 100000;
  double initial_step = 0.1;
  double backtracking_factor = 0.5;
  int max_backtracks = 30;
  double rel_tol = 1e-10;  // relative change over a 5-accepted-step window
  double smoothing_eps = 1e-3;
  int restarts = 32;
  RngSpec rng;

  void validate() const;  // throws InvalidParams
};

struct RestartStat {
  double energy = 0.0;  // exact potential energy of the final configuration
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> trace;  // accepted-step smoothed energies, nondecreasing per phase
};

struct OptimizationResult {
  PointConfiguration best_config;
  double best_energy = 0.0;  // exact (unsmoothed) energy of best_config
  std::vector<RestartStat> per_restart;
  AscentParams params;
  int best_restart = -1;
};

// Tangent gradient of the (smoothed) energy: Euclidean gradient
// (2/N^2) sum_{j != i} F'(z_i . z_j) z_j with the radial component
// removed. smoothing_eps = 0 uses the symmetric subgradient sign(0) = 0,
// under which the orthonormal-basis configurations are stationary.
std::vector<double> energy_gradient(const PointConfiguration& config,
                                    const Potential& potential, double smoothing_eps);

// Normalizes each row of width `width` in place; throws ZeroVector.
void project_to_sphere(std::vector<double>& points, int width);

// Multi-restart projected gradient ascent over (S^dim)^n. Restarts draw
// from streams (rng.seed, rng.stream + r) and may run concurrently; the
// result is deterministic and ties resolve to the lowest restart index.
OptimizationResult ascend(int dim, std::size_t n, const Potential& potential,
                          const AscentParams& params);

// Single ascent from a given configuration. The reported energy never
// drops below the input's (the input is returned if smoothing drift beats
// it).
OptimizationResult polish(const PointConfiguration& config, const Potential& potential,
                          const AscentParams& params);

}  // namespace acute
