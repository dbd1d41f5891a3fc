#pragma once

#include <vector>

#include "acute/types.hpp"

namespace acute {

enum class Basis { Chebyshev, FourierCosine, Gegenbauer };

const char* to_string(Basis basis);

// Coefficients of a potential against an orthogonal family, indexed
// 0..nmax.
//
// Chebyshev and FourierCosine use the (1/pi) integral convention for every
// index, so values[0] is the mean of G(theta) = F(cos theta) and values[n]
// for n >= 1 is HALF the classical cosine coefficient; reconstruction and
// energy evaluation therefore carry a factor 2 on the n >= 1 terms.
// Gegenbauer(d) stores orthogonal-projection coefficients against the
// positive-leading-coefficient family for weight (1-t^2)^((d-2)/2) (d = 1
// keeps the Chebyshev convention above). Only signs feed the
// definiteness conclusions.
struct ExpansionCoefficients {
  Basis basis = Basis::Chebyshev;
  int gegenbauer_dim = 0;  // only meaningful for Basis::Gegenbauer
  int nodes = 0;
  std::vector<double> values;

  int nmax() const { return static_cast<int>(values.size()) - 1; }
};

// F_n = (1/pi) int_{-1}^{1} F(t) T_n(t) (1-t^2)^(-1/2) dt for n <= nmax.
// Evaluated in angle space, where the Chebyshev weight is flat, with
// Gauss-Legendre panels split at theta = pi/2 (the image of the
// acute-angle kink at t = 0); a single equispaced-type rule aliases the
// slowly decaying harmonics and cannot reach 1e-8 at 4096 nodes.
ExpansionCoefficients chebyshev_coefficients(const Potential& potential, int nmax,
                                             int nodes = 4096);

// Cosine coefficients of G(theta) = F(cos theta) on the circle, same
// normalization as above (so the two lists agree index-by-index).
ExpansionCoefficients fourier_cosine_coefficients(const Potential& potential, int nmax,
                                                  int nodes = 4096);

// Coefficients against the Gegenbauer family orthogonal for the weight
// (1-t^2)^((d-2)/2); these govern (negative) definiteness on S^d.
ExpansionCoefficients gegenbauer_coefficients(const Potential& potential, int d, int nmax,
                                              int nodes = 4096);

// True iff values[n] <= tol for all n >= 1. Chebyshev or FourierCosine
// basis only.
bool is_negative_definite_s1(const ExpansionCoefficients& coeffs, double tol = 1e-9);

// Sign pattern that makes sigma_N (N equally spaced points) a maximizer:
// values[n] >= -tol when N | n and values[n] <= tol otherwise, for
// 1 <= n <= nmax. FourierCosine basis only.
bool check_equispaced_maximizer(const ExpansionCoefficients& coeffs, int n_points,
                                double tol = 1e-9);

// Truncated-series energy of a measure on S^1:
//   I = v_0 + 2 sum_{n>=1} v_n (c_n^2 + s_n^2),
// with c_n, s_n the cosine/sine moments of the atom angles. The sine
// moments make the value agree with measure_energy for unsymmetrized
// measures (for the angle-symmetrized measure they vanish and the series
// reduces to the cosine form). Error is bounded by the neglected tail
// 2 sum_{n>nmax} |v_n|.
double energy_via_fourier(const DiscreteMeasure& mu, const ExpansionCoefficients& coeffs);

}  // namespace acute
