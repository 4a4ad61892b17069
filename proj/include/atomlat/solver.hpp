#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "atomlat/embedding.hpp"

namespace atomlat {

// How select_for_negatives picks a discriminant atom per negative duple.
// grounding_priority prefers atoms whose context-constant footprint does not
// pair up conflicting constants (conflict pairs come from the problem
// encoder); conflicting candidates are deprioritized, not forbidden.
struct SelectionStrategy {
  enum class Mode { first_found, grounding_priority };

  Mode mode = Mode::first_found;
  std::optional<std::uint64_t> seed;  // shuffles the scan order when set
  std::vector<std::pair<std::uint32_t, std::uint32_t>> conflicts;  // ids in C
};

// Greedy single-pass atom removal: drops every canonical atom whose removal
// keeps all negative duples satisfied; constant coverage is restored by the
// zero atom if needed.  The result is irreducible and has at most |R-| + 1
// atoms.  Requires M to satisfy the relation.
AtomizedModel minimize_irreducible(const AtomizedModel& m,
                                   const std::vector<Duple>& relation);
AtomizedModel minimize_irreducible(const AtomizedModel& m, const Embedding& e);

// One discriminant atom per negative duple out of F, skipping duples an
// earlier pick already satisfies; adds the zero atom when coverage needs it.
AtomizedModel select_for_negatives(const AtomizedModel& f, const Embedding& e,
                                   const SelectionStrategy& strat = {});

// Seeded selection loop: freest model, select_for_negatives per seed, scope
// filter, induced solution, validation, dedup.  When no attempt survives
// validation and the scope is a conjunction of disjunctions, falls back to a
// deterministic completion search: one disjunct per clause is crossed into
// the freest model, branches that satisfy a negative duple are pruned
// (crossing only adds true duples, so a violated negative never recovers),
// and the first completed branch yields its induced solution.  Deterministic
// for a fixed strategy.  Returns an empty sequence when the relation is
// infeasible or no branch completes.
std::vector<std::pair<Solution, AtomizedModel>> solve(
    const Embedding& e, const SelectionStrategy& strat = {},
    std::size_t attempts = 16, const CrossOptions& opt = {});

// One Solution per canonical atom of the given segment size; atoms the
// decoder rejects (or whose solution fails validation) are reported through
// `rejected`.
std::vector<Solution> atoms_as_solutions(
    const Embedding& e, const AtomizedModel& f, std::size_t size,
    const std::function<std::optional<Solution>(const Bits&)>& decoder,
    std::vector<std::string>* rejected = nullptr);

}  // namespace atomlat
