#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "atomlat/bitset.hpp"

namespace atomlat {

// Immutable universe of constants.  Ids are dense and assigned in
// lexicographic name order, which fixes the canonical order everywhere else.
class ConstantTable {
 public:
  static std::shared_ptr<const ConstantTable> make(
      std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t id) const { return names_[id]; }
  const std::vector<std::string>& names() const { return names_; }

  bool has(const std::string& n) const { return ids_.count(n) != 0; }
  std::uint32_t id(const std::string& n) const;  // UsageError when missing

  Bits empty_set() const { return Bits(size()); }
  Bits full_set() const;
  Bits set_of(std::initializer_list<const char*> ns) const;
  Bits set_of(const std::vector<std::string>& ns) const;

  friend bool operator==(const ConstantTable& a, const ConstantTable& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

using TableRef = std::shared_ptr<const ConstantTable>;

inline bool same_table(const TableRef& a, const TableRef& b) {
  return a == b || *a == *b;
}

}  // namespace atomlat
