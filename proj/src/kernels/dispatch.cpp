#include <atomic>
#include <cstdlib>

#include "unimig/kernels.hpp"

namespace unimig::kernels {

#if defined(UNIMIG_HAVE_AVX2)
const KernelSet& avx2_kernels();
#endif
#if defined(UNIMIG_HAVE_NEON)
const KernelSet& neon_kernels();
#endif

namespace {

bool cpu_supports(std::string_view name) {
  if (name == "scalar") return true;
#if defined(UNIMIG_HAVE_AVX2)
  if (name == "avx2") return __builtin_cpu_supports("avx2");
#endif
#if defined(UNIMIG_HAVE_NEON)
  if (name == "neon") return true;
#endif
  return false;
}

const KernelSet* lookup(std::string_view name) {
  if (name == "scalar") return &scalar_kernels();
#if defined(UNIMIG_HAVE_AVX2)
  if (name == "avx2") return &avx2_kernels();
#endif
#if defined(UNIMIG_HAVE_NEON)
  if (name == "neon") return &neon_kernels();
#endif
  return nullptr;
}

const KernelSet* pick_default() {
  if (const char* env = std::getenv("UNIMIG_KERNEL"))
    if (const KernelSet* k = lookup(env); k && cpu_supports(env)) return k;
#if defined(UNIMIG_HAVE_AVX2)
  if (cpu_supports("avx2")) return &avx2_kernels();
#endif
#if defined(UNIMIG_HAVE_NEON)
  return &neon_kernels();
#endif
  return &scalar_kernels();
}

std::atomic<const KernelSet*>& active_slot() {
  static std::atomic<const KernelSet*> slot{pick_default()};
  return slot;
}

}  // namespace

const KernelSet& active_kernels() { return *active_slot().load(std::memory_order_relaxed); }

bool set_active_kernels(std::string_view name) {
  const KernelSet* k = lookup(name);
  if (!k || !cpu_supports(name)) return false;
  active_slot().store(k, std::memory_order_relaxed);
  return true;
}

std::vector<const KernelSet*> available_kernels() {
  std::vector<const KernelSet*> out{&scalar_kernels()};
#if defined(UNIMIG_HAVE_AVX2)
  if (cpu_supports("avx2")) out.push_back(&avx2_kernels());
#endif
#if defined(UNIMIG_HAVE_NEON)
  out.push_back(&neon_kernels());
#endif
  return out;
}

}  // namespace unimig::kernels
