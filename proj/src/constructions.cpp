#include "acute/constructions.hpp"

#include <cmath>
#include <numbers>

namespace acute {

OnbSplit OnbSplit::of(int d, std::size_t n) {
  if (d < 1) throw Error(ErrorKind::InvalidInput, "onb split needs d >= 1");
  if (n < 1) throw Error(ErrorKind::InvalidCount, "onb split needs N >= 1");
  OnbSplit s;
  s.d = d;
  s.n = n;
  s.m = n / static_cast<std::size_t>(d + 1);
  s.k = n % static_cast<std::size_t>(d + 1);
  return s;
}

PointConfiguration onb_configuration(int d, std::size_t n) {
  OnbSplit::of(d, n);  // validates
  const int width = d + 1;
  std::vector<double> coords(n * width, 0.0);
  for (std::size_t j = 0; j < n; ++j) coords[j * width + j % width] = 1.0;
  return PointConfiguration(d, std::move(coords));
}

double conjectured_value(int d, std::size_t n) {
  const OnbSplit s = OnbSplit::of(d, n);
  const double m = static_cast<double>(s.m);
  const double k = static_cast<double>(s.k);
  const double dd = static_cast<double>(d);
  const double pairs = k * (k - 1.0) * (m + 1.0) * (m + 1.0) +
                       2.0 * k * m * (dd + 1.0 - k) * (m + 1.0) +
                       (dd - k) * (dd + 1.0 - k) * m * m;
  const double nd = static_cast<double>(n);
  return std::numbers::pi / 2.0 * pairs / (nd * nd);
}

DiscreteMeasure onb_measure(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidInput, "onb measure needs d >= 1");
  const int width = d + 1;
  std::vector<double> coords(static_cast<std::size_t>(width) * width, 0.0);
  for (int i = 0; i < width; ++i) coords[static_cast<std::size_t>(i) * width + i] = 1.0;
  return DiscreteMeasure(d, std::move(coords), std::vector<double>(width, 1.0 / width));
}

DiscreteMeasure equispaced_measure(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidCount, "equispaced measure needs N >= 1");
  std::vector<double> coords(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    coords[2 * k] = std::cos(a);
    coords[2 * k + 1] = std::sin(a);
  }
  return DiscreteMeasure(1, std::move(coords), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DiscreteMeasure compose_measures(const DiscreteMeasure& nu, const DiscreteMeasure& lambda,
                                 double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw Error(ErrorKind::InvalidParams, "composition weight must lie in [0,1]");
  const int k = nu.dim();
  const int l = lambda.dim();
  const int dim = k + l + 1;
  const int width = dim + 1;
  const std::size_t total = nu.n() + lambda.n();
  std::vector<double> coords(total * width, 0.0);
  std::vector<double> weights(total, 0.0);
  // nu occupies the leading k+1 coordinates, lambda the trailing l+1
  for (std::size_t i = 0; i < nu.n(); ++i) {
    const auto z = nu.point(i);
    for (int c = 0; c <= k; ++c) coords[i * width + c] = z[c];
    weights[i] = alpha * nu.weight(i);
  }
  for (std::size_t i = 0; i < lambda.n(); ++i) {
    const auto z = lambda.point(i);
    for (int c = 0; c <= l; ++c) coords[(nu.n() + i) * width + (k + 1 + c)] = z[c];
    weights[nu.n() + i] = (1.0 - alpha) * lambda.weight(i);
  }
  // guard the weight-sum invariant against rounding in alpha * w
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (sum > 0.0)
    for (double& w : weights) w /= sum;
  return DiscreteMeasure(dim, std::move(coords), std::move(weights));
}

}  // namespace acute
