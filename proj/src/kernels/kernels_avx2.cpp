// AVX2 variants of the pair kernels. The dot products run 4 points wide
// with mul+add in coordinate order (no FMA: the scalar reference compiles
// to mul+add, and contraction would change the rounding); transcendental
// potential values stay on scalar libm per lane; accumulation walks lanes
// in index order. Every per-pair operation therefore rounds exactly like
// the scalar kernel and the two paths agree bitwise.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>

#include "acute/kernels.hpp"

namespace acute::kernels {

namespace {

constexpr double kDerivClamp = 1.0 - 1e-12;

inline __m256d dot4(const PackedPoints& pts, const double* x, std::size_t j) {
  __m256d acc = _mm256_mul_pd(_mm256_set1_pd(x[0]), _mm256_loadu_pd(pts.lane(0) + j));
  for (int k = 1; k < pts.width; ++k) {
    const __m256d prod = _mm256_mul_pd(_mm256_set1_pd(x[k]), _mm256_loadu_pd(pts.lane(k) + j));
    acc = _mm256_add_pd(acc, prod);
  }
  return acc;
}

double row_sum_avx2(const PackedPoints& pts, const double* x, const Potential& potential,
                    double smoothing_eps, const double* weights, std::ptrdiff_t skip) {
  double acc = 0.0;
  const std::size_t full = pts.n & ~std::size_t{3};
  alignas(32) double t4[4];
  for (std::size_t j = 0; j < full; j += 4) {
    _mm256_store_pd(t4, dot4(pts, x, j));
    for (int l = 0; l < 4; ++l) {
      const std::size_t jj = j + l;
      if (static_cast<std::ptrdiff_t>(jj) == skip) continue;
      const double tc = std::min(1.0, std::max(-1.0, t4[l]));
      const double v = potential.smoothed_value(tc, smoothing_eps);
      acc += weights ? weights[jj] * v : v;
    }
  }
  for (std::size_t j = full; j < pts.n; ++j) {
    if (static_cast<std::ptrdiff_t>(j) == skip) continue;
    double t = 0.0;
    for (int k = 0; k < pts.width; ++k) t += x[k] * pts.lane(k)[j];
    const double tc = std::min(1.0, std::max(-1.0, t));
    const double v = potential.smoothed_value(tc, smoothing_eps);
    acc += weights ? weights[j] * v : v;
  }
  return acc;
}

// F'(t) for a vector of inner products; mirrors Potential::derivative
// operation for operation. PFrame falls back to scalar pow.
inline __m256d deriv4(const Potential& potential, double smoothing_eps, __m256d t) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d tc =
      _mm256_min_pd(_mm256_set1_pd(kDerivClamp), _mm256_max_pd(_mm256_set1_pd(-kDerivClamp), t));
  switch (potential.kind) {
    case Potential::Kind::AcuteAngle: {
      const __m256d tt = _mm256_mul_pd(tc, tc);
      const __m256d omt2 = _mm256_sub_pd(one, tt);
      if (smoothing_eps > 0.0) {
        const __m256d e2 = _mm256_set1_pd(smoothing_eps * smoothing_eps);
        const __m256d den = _mm256_sqrt_pd(_mm256_mul_pd(_mm256_add_pd(tt, e2), omt2));
        return _mm256_div_pd(_mm256_sub_pd(_mm256_setzero_pd(), tc), den);
      }
      const __m256d den = _mm256_sqrt_pd(omt2);
      const __m256d neg = _mm256_cmp_pd(tc, _mm256_setzero_pd(), _CMP_LT_OQ);
      const __m256d pos = _mm256_cmp_pd(tc, _mm256_setzero_pd(), _CMP_GT_OQ);
      const __m256d sgn = _mm256_or_pd(_mm256_and_pd(pos, _mm256_set1_pd(-1.0)),
                                       _mm256_and_pd(neg, one));
      return _mm256_div_pd(sgn, den);
    }
    case Potential::Kind::Frame:
      return _mm256_mul_pd(_mm256_set1_pd(2.0), t);
    case Potential::Kind::Geodesic: {
      const __m256d omt2 = _mm256_sub_pd(one, _mm256_mul_pd(tc, tc));
      return _mm256_div_pd(_mm256_set1_pd(-1.0), _mm256_sqrt_pd(omt2));
    }
    case Potential::Kind::QuadraticMajorant:
      return _mm256_mul_pd(_mm256_set1_pd(-2.0 * potential.param), t);
    case Potential::Kind::PFrame: {
      alignas(32) double tv[4], dv[4];
      _mm256_store_pd(tv, t);
      for (int l = 0; l < 4; ++l) dv[l] = potential.derivative(tv[l], smoothing_eps);
      return _mm256_load_pd(dv);
    }
  }
  return _mm256_setzero_pd();
}

void grad_row_avx2(const PackedPoints& pts, const double* x, const Potential& potential,
                   double smoothing_eps, const double* weights, std::ptrdiff_t skip, double* g) {
  const std::size_t full = pts.n & ~std::size_t{3};
  alignas(32) double w4[4];
  for (std::size_t j = 0; j < full; j += 4) {
    const __m256d t = dot4(pts, x, j);
    _mm256_store_pd(w4, deriv4(potential, smoothing_eps, t));
    for (int l = 0; l < 4; ++l) {
      const std::size_t jj = j + l;
      if (static_cast<std::ptrdiff_t>(jj) == skip) continue;
      const double w = weights ? w4[l] * weights[jj] : w4[l];
      for (int k = 0; k < pts.width; ++k) g[k] += w * pts.lane(k)[jj];
    }
  }
  for (std::size_t j = full; j < pts.n; ++j) {
    if (static_cast<std::ptrdiff_t>(j) == skip) continue;
    double t = 0.0;
    for (int k = 0; k < pts.width; ++k) t += x[k] * pts.lane(k)[j];
    double w = potential.derivative(t, smoothing_eps);
    if (weights) w *= weights[j];
    for (int k = 0; k < pts.width; ++k) g[k] += w * pts.lane(k)[j];
  }
}

}  // namespace

const RowKernels* avx2_kernels_impl() {
  static const RowKernels k{"avx2", &row_sum_avx2, &grad_row_avx2};
  return &k;
}

}  // namespace acute::kernels

#else

#include "acute/kernels.hpp"

namespace acute::kernels {
const RowKernels* avx2_kernels_impl() { return nullptr; }
}  // namespace acute::kernels

#endif
