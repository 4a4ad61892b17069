#include "atomlat/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace atomlat::kern {
namespace {

bool eq(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(_mm256_xor_si256(va, vb),
                            _mm256_xor_si256(va, vb)))
      return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool sub(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // testc(b, a) checks ~b & a == 0
    if (!_mm256_testc_si256(vb, va)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool inter(const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

std::size_t pop(const word* a, std::size_t n) {
  std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c0 += __builtin_popcountll(a[i]);
    c1 += __builtin_popcountll(a[i + 1]);
    c2 += __builtin_popcountll(a[i + 2]);
    c3 += __builtin_popcountll(a[i + 3]);
  }
  for (; i < n; ++i) c0 += __builtin_popcountll(a[i]);
  return c0 + c1 + c2 + c3;
}

void or_to(word* out, const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_or_si256(va, vb));
  }
  for (; i < n; ++i) out[i] = a[i] | b[i];
}

void or_into(word* acc, const word* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i),
                        _mm256_or_si256(va, vb));
  }
  for (; i < n; ++i) acc[i] |= a[i];
}

void and_to(word* out, const word* a, const word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_and_si256(va, vb));
  }
  for (; i < n; ++i) out[i] = a[i] & b[i];
}

bool or_accum_eq(word* acc, const word* a, const word* target, std::size_t n) {
  std::size_t i = 0;
  __m256i alleq = _mm256_set1_epi64x(-1);
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vt =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(target + i));
    __m256i vo = _mm256_or_si256(va, vb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), vo);
    alleq = _mm256_and_si256(alleq, _mm256_cmpeq_epi64(vo, vt));
  }
  bool same = _mm256_movemask_epi8(alleq) == -1;
  for (; i < n; ++i) {
    acc[i] |= a[i];
    same &= acc[i] == target[i];
  }
  return same;
}

}  // namespace

const Kernels* avx2() {
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Kernels k{"avx2", eq, sub, inter, pop, or_to, or_into, and_to,
                         or_accum_eq};
  return &k;
}

}  // namespace atomlat::kern

#else

namespace atomlat::kern {
const Kernels* avx2() { return nullptr; }
}  // namespace atomlat::kern

#endif
