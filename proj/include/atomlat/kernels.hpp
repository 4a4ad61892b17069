#pragma once

#include <cstddef>
#include <cstdint>

namespace atomlat::kern {

using word = std::uint64_t;
inline constexpr std::size_t word_bits = 64;

// Primitives over dense bit vectors stored as word arrays of equal length n.
// The scalar implementations are the reference; wider variants must agree
// with them bit for bit on every input (checked by test_kernels).
struct Kernels {
  const char* name;
  bool (*equals)(const word* a, const word* b, std::size_t n);
  // a subset of b, i.e. a & ~b == 0
  bool (*subset)(const word* a, const word* b, std::size_t n);
  bool (*intersects)(const word* a, const word* b, std::size_t n);
  std::size_t (*popcount)(const word* a, std::size_t n);
  void (*or_to)(word* out, const word* a, const word* b, std::size_t n);
  void (*or_into)(word* acc, const word* a, std::size_t n);
  void (*and_to)(word* out, const word* a, const word* b, std::size_t n);
  // acc |= a, then reports acc == target.  Fused loop used when accumulating
  // subset unions against a fixed segment.
  bool (*or_accum_equals)(word* acc, const word* a, const word* target,
                          std::size_t n);
};

const Kernels& scalar();

// Widest variant this CPU supports, or nullptr when only scalar is available.
const Kernels* simd();

// simd() when present unless overridden; ATOMLAT_KERNEL=scalar|avx2|neon
// forces a choice at startup.
const Kernels& active();
void set_active(const Kernels* k);  // nullptr restores the default

const Kernels* avx2();  // nullptr off x86 or when the CPU lacks AVX2
const Kernels* neon();  // nullptr off aarch64

}  // namespace atomlat::kern
