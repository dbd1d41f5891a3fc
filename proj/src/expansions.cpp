#include "acute/expansions.hpp"

#include <cmath>
#include <numbers>

#include "acute/quadrature.hpp"

namespace acute {

namespace {

// Angle-space nodes for int_0^pi h(theta) dtheta, Gauss-Legendre panels
// split at pi/2. Every implemented potential is analytic in theta away
// from t = 0 (theta = pi/2), so the panels converge spectrally; the
// (1-t^2)^(-1/2) Chebyshev weight is exactly absorbed by t = cos(theta).
struct AngleGrid {
  std::vector<double> theta;
  std::vector<double> weight;
};

AngleGrid angle_grid(int nodes) {
  const Quadrature base = gauss_legendre(nodes / 2);
  AngleGrid grid;
  grid.theta.reserve(nodes);
  grid.weight.reserve(nodes);
  const double half_pi = std::numbers::pi / 2.0;
  for (int panel = 0; panel < 2; ++panel) {
    const Quadrature q = mapped_to(base, panel * half_pi, (panel + 1) * half_pi);
    grid.theta.insert(grid.theta.end(), q.nodes.begin(), q.nodes.end());
    grid.weight.insert(grid.weight.end(), q.weights.begin(), q.weights.end());
  }
  return grid;
}

void check_expansion_args(int nmax, int nodes) {
  if (nmax < 0) throw Error(ErrorKind::InvalidParams, "nmax must be >= 0");
  if (nodes < 64 || (nodes & (nodes - 1)) != 0)
    throw Error(ErrorKind::InsufficientNodes, "nodes must be a power of two >= 64");
  if (nodes < 4 * nmax)
    throw Error(ErrorKind::InsufficientNodes,
                "need nodes >= 4*nmax (got " + std::to_string(nodes) + ")");
}

double kahan_dot3(const std::vector<double>& w, const std::vector<double>& a,
                  const std::vector<double>& b) {
  double sum = 0.0, comp = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double term = w[i] * a[i] * b[i];
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

const char* to_string(Basis basis) {
  switch (basis) {
    case Basis::Chebyshev: return "chebyshev";
    case Basis::FourierCosine: return "fourier_cosine";
    case Basis::Gegenbauer: return "gegenbauer";
  }
  return "?";
}

ExpansionCoefficients chebyshev_coefficients(const Potential& potential, int nmax, int nodes) {
  check_expansion_args(nmax, nodes);
  const AngleGrid grid = angle_grid(nodes);
  const std::size_t m = grid.theta.size();

  std::vector<double> fv(m), t(m);
  for (std::size_t j = 0; j < m; ++j) {
    t[j] = std::cos(grid.theta[j]);
    fv[j] = potential.value(std::min(1.0, std::max(-1.0, t[j])));
  }

  ExpansionCoefficients out;
  out.basis = Basis::Chebyshev;
  out.nodes = nodes;
  out.values.resize(nmax + 1);
  // T_n by recurrence, one degree at a time
  std::vector<double> t_prev(m, 1.0), t_cur(t);
  for (int n = 0; n <= nmax; ++n) {
    const std::vector<double>& tn = (n == 0) ? t_prev : t_cur;
    out.values[n] = kahan_dot3(grid.weight, fv, tn) / std::numbers::pi;
    if (n >= 1) {
      for (std::size_t j = 0; j < m; ++j) {
        const double next = 2.0 * t[j] * t_cur[j] - t_prev[j];
        t_prev[j] = t_cur[j];
        t_cur[j] = next;
      }
    }
  }
  return out;
}

ExpansionCoefficients fourier_cosine_coefficients(const Potential& potential, int nmax,
                                                  int nodes) {
  check_expansion_args(nmax, nodes);
  const AngleGrid grid = angle_grid(nodes);
  const std::size_t m = grid.theta.size();

  std::vector<double> gv(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double c = std::cos(grid.theta[j]);
    gv[j] = potential.value(std::min(1.0, std::max(-1.0, c)));
  }

  ExpansionCoefficients out;
  out.basis = Basis::FourierCosine;
  out.nodes = nodes;
  out.values.resize(nmax + 1);
  std::vector<double> cn(m);
  for (int n = 0; n <= nmax; ++n) {
    for (std::size_t j = 0; j < m; ++j) cn[j] = std::cos(n * grid.theta[j]);
    out.values[n] = kahan_dot3(grid.weight, gv, cn) / std::numbers::pi;
  }
  return out;
}

ExpansionCoefficients gegenbauer_coefficients(const Potential& potential, int d, int nmax,
                                              int nodes) {
  if (d < 1) throw Error(ErrorKind::InvalidParams, "gegenbauer needs d >= 1");
  if (d == 1) {
    // lambda = 0 is the degenerate Chebyshev case; keep that list (and its
    // normalization) verbatim.
    ExpansionCoefficients out = chebyshev_coefficients(potential, nmax, nodes);
    out.basis = Basis::Gegenbauer;
    out.gegenbauer_dim = 1;
    return out;
  }
  check_expansion_args(nmax, nodes);
  const AngleGrid grid = angle_grid(nodes);
  const std::size_t m = grid.theta.size();
  const double lambda = 0.5 * (d - 1);

  std::vector<double> fv(m), t(m), surf(m);
  for (std::size_t j = 0; j < m; ++j) {
    t[j] = std::cos(grid.theta[j]);
    fv[j] = potential.value(std::min(1.0, std::max(-1.0, t[j])));
    surf[j] = std::pow(std::sin(grid.theta[j]), d - 1);  // (1-t^2)^((d-2)/2) dt
  }

  ExpansionCoefficients out;
  out.basis = Basis::Gegenbauer;
  out.gegenbauer_dim = d;
  out.nodes = nodes;
  out.values.resize(nmax + 1);

  std::vector<double> c_prev(m, 1.0), c_cur(m), fw(m), cw(m);
  for (std::size_t j = 0; j < m; ++j) c_cur[j] = 2.0 * lambda * t[j];
  for (int n = 0; n <= nmax; ++n) {
    const std::vector<double>& cn = (n == 0) ? c_prev : c_cur;
    for (std::size_t j = 0; j < m; ++j) {
      fw[j] = fv[j] * surf[j];
      cw[j] = cn[j] * surf[j];
    }
    const double num = kahan_dot3(grid.weight, fw, cn);
    const double den = kahan_dot3(grid.weight, cw, cn);
    out.values[n] = num / den;
    if (n >= 1) {
      for (std::size_t j = 0; j < m; ++j) {
        const double next =
            (2.0 * (n + lambda) * t[j] * c_cur[j] - (n + 2.0 * lambda - 1.0) * c_prev[j]) /
            (n + 1.0);
        c_prev[j] = c_cur[j];
        c_cur[j] = next;
      }
    }
  }
  return out;
}

bool is_negative_definite_s1(const ExpansionCoefficients& coeffs, double tol) {
  if (coeffs.basis == Basis::Gegenbauer)
    throw Error(ErrorKind::WrongBasis, "negative-definiteness test needs a circle basis");
  for (int n = 1; n <= coeffs.nmax(); ++n)
    if (coeffs.values[n] > tol) return false;
  return true;
}

bool check_equispaced_maximizer(const ExpansionCoefficients& coeffs, int n_points, double tol) {
  if (coeffs.basis != Basis::FourierCosine)
    throw Error(ErrorKind::WrongBasis, "equispaced-maximizer test needs Fourier coefficients");
  if (n_points < 1) throw Error(ErrorKind::InvalidParams, "need N >= 1");
  for (int n = 1; n <= coeffs.nmax(); ++n) {
    if (n % n_points == 0) {
      if (coeffs.values[n] < -tol) return false;
    } else {
      if (coeffs.values[n] > tol) return false;
    }
  }
  return true;
}

double energy_via_fourier(const DiscreteMeasure& mu, const ExpansionCoefficients& coeffs) {
  if (coeffs.basis != Basis::FourierCosine)
    throw Error(ErrorKind::WrongBasis, "energy series needs Fourier coefficients");
  if (mu.dim() != 1)
    throw Error(ErrorKind::WrongDimension, "Fourier energy is defined on S^1");

  std::vector<double> angle(mu.n());
  for (std::size_t i = 0; i < mu.n(); ++i) {
    const auto z = mu.point(i);
    angle[i] = std::atan2(z[1], z[0]);
  }
  // I = v_0 + 2 sum v_n (c_n^2 + s_n^2); the sine moments vanish for the
  // angle-symmetrized measure and keep the unsymmetrized value exact.
  double energy = coeffs.values[0];
  for (int n = 1; n <= coeffs.nmax(); ++n) {
    double c = 0.0, s = 0.0;
    for (std::size_t i = 0; i < mu.n(); ++i) {
      c += mu.weight(i) * std::cos(n * angle[i]);
      s += mu.weight(i) * std::sin(n * angle[i]);
    }
    energy += 2.0 * coeffs.values[n] * (c * c + s * s);
  }
  return energy;
}

}  // namespace acute
