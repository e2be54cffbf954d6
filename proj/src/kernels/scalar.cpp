#include "unimig/kernels.hpp"

namespace unimig::kernels {

namespace {

int first_lut_mismatch_scalar(const std::uint8_t* lhs, const std::uint8_t* lut,
                              const std::uint8_t* idx, int len) {
  for (int i = 0; i < len; ++i)
    if (lhs[i] != lut[idx[i]]) return i;
  return -1;
}

int first_greater_scalar(const std::uint8_t* a, const std::uint8_t* b, int len) {
  for (int i = 0; i < len; ++i)
    if (a[i] > b[i]) return i;
  return -1;
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet k{"scalar", first_lut_mismatch_scalar, first_greater_scalar};
  return k;
}

}  // namespace unimig::kernels
