#pragma once

#include <vector>

#include "acute/types.hpp"

namespace acute {

// Second moment matrix M[i][j] = sum_k w_k (z_k)_i (z_k)_j. Symmetric,
// positive semidefinite, trace 1.
struct SecondMomentMatrix {
  int dim = 0;
  std::vector<double> entries;  // (dim+1) x (dim+1), row-major

  int width() const { return dim + 1; }
  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * width() + j]; }
  double frobenius_squared() const;
  // max-norm distance from (1/(d+1)) I
  double max_deviation_from_scaled_identity() const;
};

// E_F(Z) = (1/N^2) sum_{i,j} F(z_i . z_j), diagonal included. Diagonal
// terms are added as F(1) analytically: a normalized point's self-dot can
// round to 1 - ulp, and arccos amplifies that to ~1e-8 of spurious energy.
double discrete_energy(const PointConfiguration& config, const Potential& potential);

// I_F(mu) = sum_{i,j} w_i w_j F(z_i . z_j); reduces to discrete_energy for
// uniform weights.
double measure_energy(const DiscreteMeasure& mu, const Potential& potential);

SecondMomentMatrix second_moment(const DiscreteMeasure& mu);

// I_{t^2}(mu) - 1/(d+1); nonnegative, zero exactly on tight frames.
double frame_defect(const DiscreteMeasure& mu);

// Tight-frame certificate: fires when the second moment matrix equals
// (1/(d+1)) I within tol in max-norm.
bool tight_frame_certificate(const DiscreteMeasure& mu, double tol = 1e-8);

// Quadrature rule family for the projected sphere weight
// (1-t^2)^((d-2)/2): Chebyshev-type for d=1 (endpoint-singular weight),
// Legendre-type for d=2, Jacobi-type for d>=3. Auto picks the match;
// requesting a mismatched family throws QuadratureUnstable.
enum class SphereRule { Auto, ChebyshevGauss, GaussLegendre, GaussJacobi };

// I_F(sigma) on S^dim via the 1-D projection
// c_d * int_{-1}^{1} F(t) (1-t^2)^((d-2)/2) dt with c_d normalizing the
// weight to a probability density.
double uniform_energy(int dim, const Potential& potential, int nodes = 2048,
                      SphereRule rule = SphereRule::Auto);

}  // namespace acute
