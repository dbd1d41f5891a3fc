#pragma once

// Inner-loop kernels for the O(N^2) pair sums. Points are repacked
// coordinate-major so the dot products vectorize over 4 neighbors at a
// time; the transcendental part stays on scalar libm. Both ISA variants
// perform the identical operation sequence per pair (mul/add dots in
// coordinate order, IEEE sqrt/div, serial accumulation in j order), so
// the scalar and AVX2 paths produce bitwise-equal sums; the equivalence
// suite asserts that.

#include <cstddef>
#include <vector>

#include "acute/types.hpp"

namespace acute::kernels {

// Structure-of-arrays view: lane(k)[j] is coordinate k of point j.
// Lanes are zero-padded to a multiple of 4 entries.
struct PackedPoints {
  std::size_t n = 0;
  int width = 0;
  std::size_t stride = 0;
  std::vector<double> lanes;

  const double* lane(int k) const { return lanes.data() + static_cast<std::size_t>(k) * stride; }
  static PackedPoints pack(const double* row_major, std::size_t n, int width);
};

struct RowKernels {
  const char* isa;
  // sum over j != skip of w_j * F_eps(clamp(x . z_j)); weights may be null
  // (unweighted), smoothing_eps = 0 gives the exact potential. Pass
  // skip = -1 to include every index.
  double (*row_sum)(const PackedPoints& pts, const double* x, const Potential& potential,
                    double smoothing_eps, const double* weights, std::ptrdiff_t skip);
  // g[k] += sum over j != skip of w_j * F'(x . z_j) * (z_j)_k, with the
  // derivative conventions of Potential::derivative. weights may be null.
  void (*grad_row)(const PackedPoints& pts, const double* x, const Potential& potential,
                   double smoothing_eps, const double* weights, std::ptrdiff_t skip, double* g);
};

const RowKernels& scalar_kernels();
bool avx2_supported();
// Null when the CPU lacks AVX2 (or the build does).
const RowKernels* avx2_kernels();
// AVX2 when available, scalar otherwise.
const RowKernels& dispatched_kernels();

}  // namespace acute::kernels
