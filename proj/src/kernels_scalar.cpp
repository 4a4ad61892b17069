#include "atomlat/kernels.hpp"

namespace atomlat::kern {
namespace {

bool eq(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool sub(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool inter(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

std::size_t pop(const word* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += __builtin_popcountll(a[i]);
  return c;
}

void or_to(word* out, const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] | b[i];
}

void or_into(word* acc, const word* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] |= a[i];
}

void and_to(word* out, const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] & b[i];
}

bool or_accum_eq(word* acc, const word* a, const word* target, std::size_t n) {
  bool same = true;
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] |= a[i];
    same &= acc[i] == target[i];
  }
  return same;
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k{"scalar", eq, sub, inter, pop, or_to, or_into, and_to,
                         or_accum_eq};
  return k;
}

}  // namespace atomlat::kern
