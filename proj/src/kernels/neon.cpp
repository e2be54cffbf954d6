// NEON variants. vqtbl4q covers byte lookups into tables of up to 64 entries,
// which is every grid this artifact sweeps; longer rows fall back to the
// scalar loop inside the same entry point so the dispatch table stays total.

#include <arm_neon.h>

#include "unimig/kernels.hpp"

namespace unimig::kernels {

namespace {

int first_nonzero_lane(uint8x16_t v) {
  std::uint8_t lanes[16];
  vst1q_u8(lanes, v);
  for (int k = 0; k < 16; ++k)
    if (lanes[k]) return k;
  return -1;
}

int first_lut_mismatch_neon(const std::uint8_t* lhs, const std::uint8_t* lut,
                            const std::uint8_t* idx, int len) {
  int i = 0;
  if (len <= 64) {
    // A direct 64-byte load from a short row would overrun kPad, so the
    // lookup registers are built from a bounded copy.
    std::uint8_t padded[64] = {0};
    for (int k = 0; k < len; ++k) padded[k] = lut[k];
    const uint8x16x4_t table = vld1q_u8_x4(padded);
    for (; i + 16 <= len; i += 16) {
      const uint8x16_t vidx = vld1q_u8(idx + i);
      const uint8x16_t looked = vqtbl4q_u8(table, vidx);
      const uint8x16_t vlhs = vld1q_u8(lhs + i);
      const uint8x16_t ne = veorq_u8(looked, vlhs);
      if (vmaxvq_u8(ne) != 0) return i + first_nonzero_lane(ne);
    }
  }
  for (; i < len; ++i)
    if (lhs[i] != lut[idx[i]]) return i;
  return -1;
}

int first_greater_neon(const std::uint8_t* a, const std::uint8_t* b, int len) {
  int i = 0;
  for (; i + 16 <= len; i += 16) {
    const uint8x16_t va = vld1q_u8(a + i);
    const uint8x16_t vb = vld1q_u8(b + i);
    const uint8x16_t gt = vcgtq_u8(va, vb);
    if (vmaxvq_u8(gt) != 0) return i + first_nonzero_lane(gt);
  }
  for (; i < len; ++i)
    if (a[i] > b[i]) return i;
  return -1;
}

}  // namespace

const KernelSet& neon_kernels() {
  static const KernelSet k{"neon", first_lut_mismatch_neon, first_greater_neon};
  return k;
}

}  // namespace unimig::kernels
