#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace unimig::kernels {

/// Tail padding (bytes) required past the end of any buffer handed to
/// first_lut_mismatch as `lut`: the AVX2 path gathers 4 bytes per lane, so
/// lut[idx] + 3 must stay inside the allocation. OperatorTable storage
/// provides this.
inline constexpr int kPad = 4;

/// A set of inner-loop kernels over byte tables. Scalar versions define the
/// semantics; SIMD versions must return bit-identical results, including the
/// index of the *first* hit.
struct KernelSet {
  const char* name;

  /// First z in [0, len) with lhs[z] != lut[idx[z]], or -1 when none.
  /// idx entries must be valid offsets into lut's row.
  int (*first_lut_mismatch)(const std::uint8_t* lhs, const std::uint8_t* lut,
                            const std::uint8_t* idx, int len);

  /// First i in [0, len) with a[i] > b[i], or -1 when none.
  int (*first_greater)(const std::uint8_t* a, const std::uint8_t* b, int len);
};

const KernelSet& scalar_kernels();

/// Currently selected set. Defaults to the widest set this CPU supports;
/// the UNIMIG_KERNEL environment variable ("scalar", "avx2", ...) overrides.
const KernelSet& active_kernels();

/// Select by name. Returns false (and leaves the selection unchanged) when
/// the name is unknown or unsupported on this CPU.
bool set_active_kernels(std::string_view name);

/// All sets usable on this CPU, scalar first.
std::vector<const KernelSet*> available_kernels();

}  // namespace unimig::kernels
