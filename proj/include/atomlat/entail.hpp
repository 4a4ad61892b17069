#pragma once

#include <vector>

#include "atomlat/model.hpp"

namespace atomlat {

// For a positive duple, decides derivability from rpos by closing the set of
// terms known to sit below q's right side under the semilattice rules:
// constant-set inclusion, the given duples, transitivity, and the join rule
// (a <= b and c <= b imply a c <= b).  A negative duple reports the
// complement, i.e. whether the negation is consistent with rpos.  Independent
// of the atomized-model machinery; capped at 12 constants.
bool entails_oracle(const ConstantTable& t, const std::vector<Duple>& rpos,
                    const Duple& q);

}  // namespace atomlat
