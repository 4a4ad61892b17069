#include "atomlat/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace atomlat::kern {
namespace {

inline bool any_bit(uint64x2_t v) {
  return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0;
}

bool eq(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t va = vld1q_u64(a + i);
    uint64x2_t vb = vld1q_u64(b + i);
    if (any_bit(veorq_u64(va, vb))) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool sub(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t va = vld1q_u64(a + i);
    uint64x2_t vb = vld1q_u64(b + i);
    if (any_bit(vbicq_u64(va, vb))) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool inter(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t va = vld1q_u64(a + i);
    uint64x2_t vb = vld1q_u64(b + i);
    if (any_bit(vandq_u64(va, vb))) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

std::size_t pop(const word* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += __builtin_popcountll(a[i]);
  return c;
}

void or_to(word* out, const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_u64(out + i, vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) out[i] = a[i] | b[i];
}

void or_into(word* acc, const word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_u64(acc + i, vorrq_u64(vld1q_u64(acc + i), vld1q_u64(a + i)));
  for (; i < n; ++i) acc[i] |= a[i];
}

void and_to(word* out, const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_u64(out + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) out[i] = a[i] & b[i];
}

bool or_accum_eq(word* acc, const word* a, const word* target, std::size_t n) {
  bool same = true;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t vo = vorrq_u64(vld1q_u64(acc + i), vld1q_u64(a + i));
    vst1q_u64(acc + i, vo);
    if (any_bit(veorq_u64(vo, vld1q_u64(target + i)))) same = false;
  }
  for (; i < n; ++i) {
    acc[i] |= a[i];
    same &= acc[i] == target[i];
  }
  return same;
}

}  // namespace

const Kernels* neon() {
  static const Kernels k{"neon", eq, sub, inter, pop, or_to, or_into, and_to,
                         or_accum_eq};
  return &k;
}

}  // namespace atomlat::kern

#else

namespace atomlat::kern {
const Kernels* neon() { return nullptr; }
}  // namespace atomlat::kern

#endif
