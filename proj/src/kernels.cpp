#include "atomlat/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace atomlat::kern {

namespace {
const Kernels* g_override = nullptr;

const Kernels* from_env() {
  const char* e = std::getenv("ATOMLAT_KERNEL");
  if (!e) return nullptr;
  if (std::strcmp(e, "scalar") == 0) return &scalar();
  if (std::strcmp(e, "avx2") == 0) return avx2();
  if (std::strcmp(e, "neon") == 0) return neon();
  return nullptr;
}
}  // namespace

const Kernels* simd() {
  if (const Kernels* k = avx2()) return k;
  if (const Kernels* k = neon()) return k;
  return nullptr;
}

const Kernels& active() {
  if (g_override) return *g_override;
  static const Kernels* chosen = [] {
    if (const Kernels* k = from_env()) return k;
    if (const Kernels* k = simd()) return k;
    return &scalar();
  }();
  return *chosen;
}

void set_active(const Kernels* k) { g_override = k; }

}  // namespace atomlat::kern
