#include "acute/energy.hpp"

#include <cmath>
#include <numbers>

#include "acute/kernels.hpp"
#include "acute/parallel.hpp"
#include "acute/quadrature.hpp"

namespace acute {

namespace {

constexpr std::size_t kRowBlock = 64;

double pair_sum(const kernels::PackedPoints& pack, const std::vector<double>& coords, int width,
                const Potential& potential, const double* weights) {
  const auto& ops = kernels::dispatched_kernels();
  return parallel_block_sum(pack.n, kRowBlock, [&](std::size_t begin, std::size_t end) {
    double partial = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double row = ops.row_sum(pack, coords.data() + i * width, potential, 0.0, weights,
                                     static_cast<std::ptrdiff_t>(i));
      partial += weights ? weights[i] * row : row;
    }
    return partial;
  });
}

}  // namespace

double SecondMomentMatrix::frobenius_squared() const {
  double s = 0.0;
  for (double v : entries) s += v * v;
  return s;
}

double SecondMomentMatrix::max_deviation_from_scaled_identity() const {
  const double c = 1.0 / width();
  double dev = 0.0;
  for (int i = 0; i < width(); ++i)
    for (int j = 0; j < width(); ++j)
      dev = std::max(dev, std::abs(at(i, j) - (i == j ? c : 0.0)));
  return dev;
}

double discrete_energy(const PointConfiguration& config, const Potential& potential) {
  const auto pack = kernels::PackedPoints::pack(config.coords().data(), config.n(), config.width());
  const double off_diag = pair_sum(pack, config.coords(), config.width(), potential, nullptr);
  const double nd = static_cast<double>(config.n());
  return (off_diag + nd * potential.value_at_one()) / (nd * nd);
}

double measure_energy(const DiscreteMeasure& mu, const Potential& potential) {
  const auto pack = kernels::PackedPoints::pack(mu.coords().data(), mu.n(), mu.width());
  const double off_diag = pair_sum(pack, mu.coords(), mu.width(), potential, mu.weights().data());
  double diag = 0.0;
  for (double w : mu.weights()) diag += w * w;
  return off_diag + diag * potential.value_at_one();
}

SecondMomentMatrix second_moment(const DiscreteMeasure& mu) {
  SecondMomentMatrix m;
  m.dim = mu.dim();
  const int width = mu.width();
  m.entries.assign(static_cast<std::size_t>(width) * width, 0.0);
  for (std::size_t k = 0; k < mu.n(); ++k) {
    const auto z = mu.point(k);
    const double w = mu.weight(k);
    for (int i = 0; i < width; ++i)
      for (int j = 0; j < width; ++j)
        m.entries[static_cast<std::size_t>(i) * width + j] += w * z[i] * z[j];
  }
  return m;
}

double frame_defect(const DiscreteMeasure& mu) {
  return measure_energy(mu, Potential::frame()) - 1.0 / mu.width();
}

bool tight_frame_certificate(const DiscreteMeasure& mu, double tol) {
  return second_moment(mu).max_deviation_from_scaled_identity() <= tol;
}

double uniform_energy(int dim, const Potential& potential, int nodes, SphereRule rule) {
  if (dim < 1) throw Error(ErrorKind::InvalidParams, "uniform_energy needs dim >= 1");
  if (nodes < 16) throw Error(ErrorKind::InvalidParams, "uniform_energy needs nodes >= 16");

  const SphereRule matched = dim == 1   ? SphereRule::ChebyshevGauss
                             : dim == 2 ? SphereRule::GaussLegendre
                                        : SphereRule::GaussJacobi;
  if (rule != SphereRule::Auto && rule != matched) {
    if (dim == 1)
      throw Error(ErrorKind::QuadratureUnstable,
                  "the d=1 weight (1-t^2)^(-1/2) is endpoint-singular; use the Chebyshev rule");
    throw Error(ErrorKind::QuadratureUnstable,
                "requested rule does not match the weight (1-t^2)^((d-2)/2) for this dim");
  }

  auto f = [&](double t) { return potential.value(std::min(1.0, std::max(-1.0, t))); };
  switch (matched) {
    case SphereRule::ChebyshevGauss: {
      const Quadrature q = gauss_chebyshev(nodes);
      double mass = 0.0;
      for (double w : q.weights) mass += w;
      return quad_sum(q, f) / mass;
    }
    case SphereRule::GaussLegendre: {
      // Evaluated through t = cos(theta): the substitution removes the
      // sqrt branch of arccos|t| at the endpoints, and splitting the
      // panels at theta = pi/2 removes its kink, so the rule converges
      // spectrally. In t-space the same rule stalls near 1e-10.
      const Quadrature base = gauss_legendre(nodes / 2);
      auto g = [&](double theta) { return f(std::cos(theta)) * std::sin(theta); };
      const double half_pi = std::numbers::pi / 2.0;
      const Quadrature left = mapped_to(base, 0.0, half_pi);
      const Quadrature right = mapped_to(base, half_pi, std::numbers::pi);
      return (quad_sum(left, g) + quad_sum(right, g)) / 2.0;
    }
    default: {
      const double alpha = 0.5 * (dim - 2);
      const Quadrature q = gauss_jacobi_sym(alpha, nodes);
      double mass = 0.0;
      for (double w : q.weights) mass += w;
      return quad_sum(q, f) / mass;
    }
  }
}

}  // namespace acute
