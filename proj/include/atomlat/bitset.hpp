#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "atomlat/kernels.hpp"

namespace atomlat {

using kern::word;

// Fixed-capacity dense bit set.  Used for terms, atom segments and constant
// subsets; all heavy loops go through the kernel table.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t nbits)
      : nbits_(nbits), w_((nbits + kern::word_bits - 1) / kern::word_bits, 0) {}
  Bits(std::size_t nbits, std::span<const word> words)
      : nbits_(nbits), w_(words.begin(), words.end()) {}

  std::size_t size_bits() const { return nbits_; }
  std::size_t nwords() const { return w_.size(); }
  const word* data() const { return w_.data(); }
  word* data() { return w_.data(); }
  std::span<const word> words() const { return {w_.data(), w_.size()}; }

  void set(std::size_t i) { w_[i / 64] |= word(1) << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(word(1) << (i % 64)); }
  bool test(std::size_t i) const {
    return (w_[i / 64] >> (i % 64)) & word(1);
  }

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  void clear();
  void set_all();  // sets bits [0, nbits)

  Bits& operator|=(const Bits& o);
  Bits& operator&=(const Bits& o);
  Bits& subtract(const Bits& o);  // this &= ~o
  Bits complement() const;        // within [0, nbits)

  bool is_subset_of(const Bits& o) const;
  bool intersects(const Bits& o) const;

  friend bool operator==(const Bits& a, const Bits& b) {
    return a.nbits_ == b.nbits_ && a.w_ == b.w_;
  }

  // Iterates set bit positions in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      word m = w_[i];
      while (m) {
        f(i * 64 + static_cast<std::size_t>(__builtin_ctzll(m)));
        m &= m - 1;
      }
    }
  }
  std::vector<std::size_t> to_indices() const;

  std::size_t hash() const;

 private:
  std::size_t nbits_ = 0;
  std::vector<word> w_;
};

Bits bits_or(const Bits& a, const Bits& b);
Bits bits_and(const Bits& a, const Bits& b);

// Canonical segment order: by popcount, then by the lexicographic order of
// the increasing index sequence (ties broken at the lowest differing bit;
// the set holding that bit comes first).
int segment_compare(std::span<const word> a, std::span<const word> b);
int segment_compare(const Bits& a, const Bits& b);

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

std::size_t hash_words(std::span<const word> w);

}  // namespace atomlat
