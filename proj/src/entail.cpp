#include "atomlat/entail.hpp"

namespace atomlat {

namespace {

std::uint32_t term_mask(const ConstantTable& t, const Term& term,
                        const char* what) {
  if (term.size_bits() != t.size())
    throw UsageError(std::string(what) + ": term built for a different table");
  if (term.none()) throw UsageError(std::string(what) + ": empty term");
  std::uint32_t m = 0;
  term.for_each([&](std::size_t i) { m |= std::uint32_t(1) << i; });
  return m;
}

}  // namespace

bool entails_oracle(const ConstantTable& t, const std::vector<Duple>& rpos,
                    const Duple& q) {
  if (t.size() > 12)
    throw ResourceLimit("entails_oracle supports at most 12 constants");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rel;
  rel.reserve(rpos.size());
  for (const auto& d : rpos) {
    if (!d.positive)
      throw UsageError("entails_oracle: negative duple in positive relation");
    rel.emplace_back(term_mask(t, d.lhs, "entails_oracle"),
                     term_mask(t, d.rhs, "entails_oracle"));
  }
  std::uint32_t lq = term_mask(t, q.lhs, "entails_oracle");
  std::uint32_t rq = term_mask(t, q.rhs, "entails_oracle");

  // Grow the family of terms derivably below rq.  A member x stands for
  // every subset of x, so a duple (l, r) fires once r fits inside some
  // member, and joins of members are members.
  std::vector<char> seen(std::size_t(1) << t.size(), 0);
  std::vector<std::uint32_t> members;
  auto add = [&](std::uint32_t m) {
    if (!seen[m]) {
      seen[m] = 1;
      members.push_back(m);
    }
  };
  add(rq);
  for (std::size_t head = 0; head < members.size(); ++head) {
    std::uint32_t m = members[head];
    for (const auto& [l, r] : rel)
      if ((r & ~m) == 0) add(l);
    for (std::size_t j = 0; j < members.size(); ++j) add(m | members[j]);
  }
  bool below = false;
  for (std::uint32_t m : members)
    if ((lq & ~m) == 0) {
      below = true;
      break;
    }
  return q.positive == below;
}

}  // namespace atomlat
