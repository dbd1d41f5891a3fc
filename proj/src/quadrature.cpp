#include "acute/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "acute/types.hpp"

namespace acute {

namespace {

// Monic three-term recurrence p_{n+1} = t p_n - b_n p_{n-1} for the
// symmetric Jacobi weight (1-t)^a (1+t)^a; a_n = 0 by symmetry.
double jacobi_b(double a, int n) {
  const double ab = 2.0 * a;  // alpha + beta
  if (n == 1) return 4.0 * (1.0 + a) * (1.0 + a) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
  const double num = 4.0 * n * (n + a) * (n + a) * (n + ab);
  const double den = (2.0 * n + ab) * (2.0 * n + ab) * (2.0 * n + ab + 1.0) * (2.0 * n + ab - 1.0);
  return num / den;
}

double jacobi_mu0(double a) {
  // int_{-1}^{1} (1-t^2)^a dt = 2^{2a+1} B(a+1, a+1)
  return std::exp((2.0 * a + 1.0) * std::numbers::ln2 + 2.0 * std::lgamma(a + 1.0) -
                  std::lgamma(2.0 * a + 2.0));
}

Quadrature golub_welsch(double alpha, int n) {
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int i = 1; i < n; ++i) sub[i - 1] = std::sqrt(jacobi_b(alpha, i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::QuadratureUnstable, "tridiagonal eigenvalue iteration failed");

  const double mu0 = jacobi_mu0(alpha);
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = solver.eigenvalues()[i];
    // Christoffel function: w = mu0 / sum_j p_j(x)^2 over the orthonormal
    // polynomials, evaluated by the normalized recurrence.
    double pm1 = 0.0;
    double p = 1.0;
    double sum = 1.0;
    double bprev = 0.0;
    for (int m = 1; m < n; ++m) {
      const double bm = std::sqrt(jacobi_b(alpha, m));
      const double pnext = (x * p - bprev * pm1) / bm;
      pm1 = p;
      p = pnext;
      bprev = bm;
      sum += p * p;
    }
    q.nodes[i] = x;
    q.weights[i] = mu0 / sum;
  }
  return q;
}

}  // namespace

Quadrature gauss_chebyshev(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "quadrature size must be >= 1");
  Quadrature q;
  q.nodes.resize(n);
  q.weights.assign(n, std::numbers::pi / n);
  for (int k = 0; k < n; ++k)
    q.nodes[k] = std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * n));
  return q;
}

Quadrature gauss_legendre(int n) { return gauss_jacobi_sym(0.0, n); }

Quadrature gauss_jacobi_sym(double alpha, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "quadrature size must be >= 1");
  if (alpha <= -1.0) throw Error(ErrorKind::InvalidParams, "Jacobi exponent must be > -1");
  static std::mutex mutex;
  static std::map<std::pair<double, int>, Quadrature> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(alpha, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, golub_welsch(alpha, n)).first;
  return it->second;
}

Quadrature mapped_to(const Quadrature& rule, double a, double b) {
  Quadrature q;
  q.nodes.resize(rule.size());
  q.weights.resize(rule.size());
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    q.nodes[i] = half * rule.nodes[i] + mid;
    q.weights[i] = half * rule.weights[i];
  }
  return q;
}

}  // namespace acute
