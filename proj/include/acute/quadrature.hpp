#pragma once

// Gauss rules used by the expansion and uniform-energy integrals.
//
// gauss_jacobi_sym builds the rule for weight (1-t^2)^alpha on [-1,1] by
// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
// Jacobi matrix, weights come from the Christoffel function evaluated by
// the orthonormal three-term recurrence (mu0 / sum_j p_j(x)^2), which
// avoids needing eigenvectors. alpha = 0 is Gauss-Legendre.

#include <vector>

namespace acute {

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

// Chebyshev weight (1-t^2)^(-1/2): closed-form nodes cos((2k-1)pi/2n),
// uniform weights pi/n.
Quadrature gauss_chebyshev(int n);

Quadrature gauss_legendre(int n);

// Weight (1-t^2)^alpha, alpha > -1.
Quadrature gauss_jacobi_sym(double alpha, int n);

// Affine image of a rule on [a, b] (weights scaled by (b-a)/2).
Quadrature mapped_to(const Quadrature& rule, double a, double b);

// Compensated (Kahan) sum of weights[i] * integrand(nodes[i]).
template <class F>
double quad_sum(const Quadrature& rule, F&& integrand) {
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    double term = rule.weights[i] * integrand(rule.nodes[i]);
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace acute
