#include <algorithm>
#include <cstring>

#include "acute/kernels.hpp"

namespace acute::kernels {

PackedPoints PackedPoints::pack(const double* row_major, std::size_t n, int width) {
  PackedPoints p;
  p.n = n;
  p.width = width;
  p.stride = (n + 3) & ~std::size_t{3};
  p.lanes.assign(p.stride * width, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (int k = 0; k < width; ++k)
      p.lanes[static_cast<std::size_t>(k) * p.stride + j] = row_major[j * width + k];
  return p;
}

namespace {

double row_sum_scalar(const PackedPoints& pts, const double* x, const Potential& potential,
                      double smoothing_eps, const double* weights, std::ptrdiff_t skip) {
  double acc = 0.0;
  for (std::size_t j = 0; j < pts.n; ++j) {
    if (static_cast<std::ptrdiff_t>(j) == skip) continue;
    double t = 0.0;
    for (int k = 0; k < pts.width; ++k) t += x[k] * pts.lane(k)[j];
    const double tc = std::min(1.0, std::max(-1.0, t));
    const double v = potential.smoothed_value(tc, smoothing_eps);
    acc += weights ? weights[j] * v : v;
  }
  return acc;
}

void grad_row_scalar(const PackedPoints& pts, const double* x, const Potential& potential,
                     double smoothing_eps, const double* weights, std::ptrdiff_t skip,
                     double* g) {
  for (std::size_t j = 0; j < pts.n; ++j) {
    if (static_cast<std::ptrdiff_t>(j) == skip) continue;
    double t = 0.0;
    for (int k = 0; k < pts.width; ++k) t += x[k] * pts.lane(k)[j];
    double w = potential.derivative(t, smoothing_eps);
    if (weights) w *= weights[j];
    for (int k = 0; k < pts.width; ++k) g[k] += w * pts.lane(k)[j];
  }
}

}  // namespace

const RowKernels& scalar_kernels() {
  static const RowKernels k{"scalar", &row_sum_scalar, &grad_row_scalar};
  return k;
}

}  // namespace acute::kernels
