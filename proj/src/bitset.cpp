#include "atomlat/bitset.hpp"

#include <algorithm>
#include <cstring>

namespace atomlat {

std::size_t Bits::count() const {
  return kern::active().popcount(w_.data(), w_.size());
}

bool Bits::any() const {
  for (word x : w_)
    if (x) return true;
  return false;
}

void Bits::clear() { std::fill(w_.begin(), w_.end(), word(0)); }

void Bits::set_all() {
  if (!nbits_) return;
  std::fill(w_.begin(), w_.end(), ~word(0));
  std::size_t rem = nbits_ % 64;
  if (rem) w_.back() = (word(1) << rem) - 1;
}

Bits& Bits::operator|=(const Bits& o) {
  kern::active().or_into(w_.data(), o.w_.data(), w_.size());
  return *this;
}

Bits& Bits::operator&=(const Bits& o) {
  kern::active().and_to(w_.data(), w_.data(), o.w_.data(), w_.size());
  return *this;
}

Bits& Bits::subtract(const Bits& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

Bits Bits::complement() const {
  Bits r(nbits_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
  std::size_t rem = nbits_ % 64;
  if (rem && !r.w_.empty()) r.w_.back() &= (word(1) << rem) - 1;
  return r;
}

bool Bits::is_subset_of(const Bits& o) const {
  return kern::active().subset(w_.data(), o.w_.data(), w_.size());
}

bool Bits::intersects(const Bits& o) const {
  return kern::active().intersects(w_.data(), o.w_.data(), w_.size());
}

std::vector<std::size_t> Bits::to_indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Bits::hash() const { return hash_words(words()); }

Bits bits_or(const Bits& a, const Bits& b) {
  Bits r(a.size_bits());
  kern::active().or_to(r.data(), a.data(), b.data(), r.nwords());
  return r;
}

Bits bits_and(const Bits& a, const Bits& b) {
  Bits r(a.size_bits());
  kern::active().and_to(r.data(), a.data(), b.data(), r.nwords());
  return r;
}

int segment_compare(std::span<const word> a, std::span<const word> b) {
  std::size_t ca = kern::active().popcount(a.data(), a.size());
  std::size_t cb = kern::active().popcount(b.data(), b.size());
  if (ca != cb) return ca < cb ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    word d = a[i] ^ b[i];
    if (d) {
      word low = d & (~d + 1);
      return (a[i] & low) ? -1 : 1;
    }
  }
  return 0;
}

int segment_compare(const Bits& a, const Bits& b) {
  return segment_compare(a.words(), b.words());
}

std::size_t hash_words(std::span<const word> w) {
  std::size_t h = 1469598103934665603ull;
  for (word x : w) {
    h ^= static_cast<std::size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace atomlat
