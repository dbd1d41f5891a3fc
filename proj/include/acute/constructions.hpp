#pragma once

#include <cstddef>

#include "acute/types.hpp"

namespace acute {

// N = m(d+1) + k with 0 <= k <= d.
struct OnbSplit {
  int d = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  static OnbSplit of(int d, std::size_t n);
};

// N points cycling through the standard basis e_1..e_{d+1}: k basis
// vectors appear m+1 times, the rest m times.
PointConfiguration onb_configuration(int d, std::size_t n);

// Closed-form acute-angle energy of onb_configuration(d, N):
// (pi / 2N^2) (k(k-1)(m+1)^2 + 2km(d+1-k)(m+1) + (d-k)(d+1-k)m^2),
// equal to (pi/2) d/(d+1) when k = 0.
double conjectured_value(int d, std::size_t n);

// Mass 1/(d+1) on each standard basis vector.
DiscreteMeasure onb_measure(int d);

// N equal point masses at angles 2 pi k / N on the circle.
DiscreteMeasure equispaced_measure(std::size_t n);

// Embeds nu (on S^k) into the leading k+1 coordinates and lambda (on S^l)
// into the trailing l+1 coordinates of R^(k+l+2), with masses alpha and
// 1-alpha. The result lives on S^(k+l+1) and satisfies
// I_F = alpha^2 I_F(nu) + (1-alpha)^2 I_F(lambda) + 2 alpha (1-alpha) F(0).
DiscreteMeasure compose_measures(const DiscreteMeasure& nu, const DiscreteMeasure& lambda,
                                 double alpha);

}  // namespace acute
