#include "acute/kernels.hpp"

namespace acute::kernels {

const RowKernels* avx2_kernels_impl();  // defined in the -mavx2 TU

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const RowKernels* avx2_kernels() {
  if (!avx2_supported()) return nullptr;
  return avx2_kernels_impl();
}

const RowKernels& dispatched_kernels() {
  static const RowKernels* selected = [] {
    if (const RowKernels* k = avx2_kernels()) return k;
    return &scalar_kernels();
  }();
  return *selected;
}

}  // namespace acute::kernels
