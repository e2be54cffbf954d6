// AVX2 variants of the table kernels. Compiled with -mavx2 and selected at
// runtime only when the CPU reports AVX2, so nothing here may run in static
// initializers. Results must match the scalar kernels bit for bit, including
// first-hit indices: blocks are scanned in order and the first failing block
// is resolved to its lowest lane.

#include <immintrin.h>

#include <bit>

#include "unimig/kernels.hpp"

namespace unimig::kernels {

namespace {

// Gathers 4 bytes per lane, hence the kPad tail requirement on lut.
int first_lut_mismatch_avx2(const std::uint8_t* lhs, const std::uint8_t* lut,
                            const std::uint8_t* idx, int len) {
  const __m256i byte_mask = _mm256_set1_epi32(0xFF);
  int i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m128i idx8 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(idx + i));
    const __m256i idx32 = _mm256_cvtepu8_epi32(idx8);
    __m256i gathered =
        _mm256_i32gather_epi32(reinterpret_cast<const int*>(lut), idx32, 1);
    gathered = _mm256_and_si256(gathered, byte_mask);
    const __m128i lhs8 = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(lhs + i));
    const __m256i lhs32 = _mm256_cvtepu8_epi32(lhs8);
    const __m256i eq = _mm256_cmpeq_epi32(gathered, lhs32);
    const unsigned mask =
        static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
    if (mask != 0xFFu) return i + std::countr_one(mask);
  }
  for (; i < len; ++i)
    if (lhs[i] != lut[idx[i]]) return i;
  return -1;
}

int first_greater_avx2(const std::uint8_t* a, const std::uint8_t* b, int len) {
  int i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // a[i] <= b[i]  iff  max(a,b) == b
    const __m256i le = _mm256_cmpeq_epi8(_mm256_max_epu8(va, vb), vb);
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(le));
    if (mask != 0xFFFFFFFFu) return i + std::countr_one(mask);
  }
  for (; i < len; ++i)
    if (a[i] > b[i]) return i;
  return -1;
}

}  // namespace

const KernelSet& avx2_kernels() {
  static const KernelSet k{"avx2", first_lut_mismatch_avx2, first_greater_avx2};
  return k;
}

}  // namespace unimig::kernels
