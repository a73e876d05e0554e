#include "minrank/fp_kernels.hpp"

#include <cstdlib>

#include "minrank/common.hpp"

namespace minrank::kernels {

#if defined(MINRANK_HAVE_AVX2)
namespace detail {
const FpKernels* avx2_impl();
}
#endif

const FpKernels* avx2_kernels() {
#if defined(MINRANK_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return detail::avx2_impl();
#endif
  return nullptr;
}

namespace {

const FpKernels* resolve_auto() {
  if (const FpKernels* k = avx2_kernels()) return k;
  return &scalar_kernels();
}

const FpKernels* resolve_initial() {
  if (const char* env = std::getenv("MINRANK_KERNELS")) {
    const std::string_view name(env);
    if (name == "scalar") return &scalar_kernels();
    if (name == "avx2" && avx2_kernels() != nullptr) return avx2_kernels();
    // unknown or unavailable request in the environment: fall back to auto
  }
  return resolve_auto();
}

const FpKernels*& active_slot() {
  static const FpKernels* slot = resolve_initial();
  return slot;
}

}  // namespace

const FpKernels& active_kernels() { return *active_slot(); }

void select_kernels(std::string_view name) {
  if (name == "auto") {
    active_slot() = resolve_auto();
  } else if (name == "scalar") {
    active_slot() = &scalar_kernels();
  } else if (name == "avx2") {
    const FpKernels* k = avx2_kernels();
    if (k == nullptr)
      throw usage_error("avx2 kernels are not available on this machine");
    active_slot() = k;
  } else {
    throw usage_error("unknown kernel variant: " + std::string(name));
  }
}

}  // namespace minrank::kernels
