#pragma once

#include <cstddef>
#include <vector>

#include "acute/types.hpp"

namespace acute {

// Arc decomposition of the direction circle for the quadrant counting
// function n(psi) = #{i : z_i in Q(psi)}: sorted breakpoint angles (each
// point contributes 4, at +-pi/4 around its angle and its antipode's) and
// the constant inside-count on each half-open arc [angle_k, angle_{k+1}).
struct SweepBreakpoints {
  std::vector<double> angles;
  std::vector<int> counts;  // counts[k] on [angles[k], angles[k+1])
};

// sigma(Q(y) ^ Q(z)) = 1/2 - arccos|y.z| / pi for unit y, z on S^1.
double quadrant_intersection(std::span<const double> y, std::span<const double> z);

// Stolarsky closed form: D^2 = 1/4 - I(mu)/pi.
double discrepancy_closed_form(const DiscreteMeasure& mu);

SweepBreakpoints quadrant_sweep(const PointConfiguration& config);

// Exact value of int |n(psi)/N - 1/2|^2 dsigma(psi): the count is
// piecewise constant between breakpoints, so the integral is a finite sum
// of arc-length-weighted squares. Membership uses the strict convention
// |x.y| > sqrt(2)/2.
double discrepancy_exact_sweep(const PointConfiguration& config);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

// Averages |n(psi)/N - 1/2|^2 over uniform directions. Samples are drawn
// in fixed-size batches with per-batch RNG streams and reduced in batch
// order, so the estimate is independent of worker count.
MonteCarloEstimate discrepancy_monte_carlo(const PointConfiguration& config,
                                           std::size_t samples, const RngSpec& rng);

// pi/4 for even N, (pi/4)(N^2-1)/N^2 for odd N.
double max_energy_bound_s1(std::size_t n);

}  // namespace acute
