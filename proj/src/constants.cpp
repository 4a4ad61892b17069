#include "atomlat/constants.hpp"

#include <algorithm>

#include "atomlat/errors.hpp"

namespace atomlat {

std::shared_ptr<const ConstantTable> ConstantTable::make(
    std::vector<std::string> names) {
  auto t = std::make_shared<ConstantTable>();
  std::sort(names.begin(), names.end());
  for (std::size_t i = 0; i + 1 < names.size(); ++i)
    if (names[i] == names[i + 1])
      throw UsageError("duplicate constant name: " + names[i]);
  for (const auto& n : names)
    if (n.empty()) throw UsageError("empty constant name");
  t->names_ = std::move(names);
  t->ids_.reserve(t->names_.size());
  for (std::uint32_t i = 0; i < t->names_.size(); ++i)
    t->ids_.emplace(t->names_[i], i);
  return t;
}

std::uint32_t ConstantTable::id(const std::string& n) const {
  auto it = ids_.find(n);
  if (it == ids_.end()) throw UsageError("unknown constant: " + n);
  return it->second;
}

Bits ConstantTable::full_set() const {
  Bits b(size());
  b.set_all();
  return b;
}

Bits ConstantTable::set_of(std::initializer_list<const char*> ns) const {
  Bits b(size());
  for (const char* n : ns) b.set(id(n));
  return b;
}

Bits ConstantTable::set_of(const std::vector<std::string>& ns) const {
  Bits b(size());
  for (const auto& n : ns) b.set(id(n));
  return b;
}

}  // namespace atomlat
