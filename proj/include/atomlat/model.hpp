#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atomlat/bitset.hpp"
#include "atomlat/constants.hpp"
#include "atomlat/errors.hpp"

namespace atomlat {

// Idempotent-summation term, stored as its set of constants (nonempty).
using Term = Bits;

struct Duple {
  Term lhs, rhs;
  bool positive = true;

  friend bool operator==(const Duple& a, const Duple& b) {
    return a.positive == b.positive && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

Duple make_duple(const ConstantTable& t, const std::vector<std::string>& lhs,
                 const std::vector<std::string>& rhs, bool positive = true);

std::string format_term(const ConstantTable& t, const Term& term);
std::string format_duple(const ConstantTable& t, const Duple& d);

enum class AtomKind { nonredundant, redundant, external };

struct CrossOptions {
  // Cap on atoms materialized while crossing; exceeding it raises
  // ResourceLimit.  Raw product streams are not counted, only kept atoms.
  std::uint64_t atom_budget = 50'000'000;
};

// Atomized semilattice model: a constant table plus a canonical set of atoms
// (each atom = nonempty upper constant segment).  Canonical means deduped,
// free of redundant atoms, sorted by (size, lexicographic id sequence).
// Every constant is below at least one atom; the zero atom (full segment) is
// inserted during canonicalization when the input does not cover a constant.
class AtomizedModel {
 public:
  AtomizedModel() = default;

  static AtomizedModel canonical(TableRef t, const std::vector<Bits>& atoms);
  // Freest unconstrained model: one atom {c} per constant.
  static AtomizedModel discrete(TableRef t);

  const TableRef& table() const { return table_; }
  std::size_t atom_count() const { return natoms_; }
  std::size_t stride() const { return stride_; }
  std::span<const word> atom(std::size_t i) const {
    return {data_.data() + i * stride_, stride_};
  }
  Bits atom_bits(std::size_t i) const {
    return Bits(table_->size(), atom(i));
  }
  std::size_t atom_size(std::size_t i) const;
  std::vector<Bits> atoms() const;

  // Index of the canonical atom with this exact segment, if present.
  std::optional<std::size_t> find(const Bits& segment) const;

  friend bool operator==(const AtomizedModel& a, const AtomizedModel& b);

  // Internal: adopts pre-canonicalized flat data.
  static AtomizedModel from_canonical_data(TableRef t, std::size_t stride,
                                           std::vector<word> data,
                                           std::size_t natoms);

 private:
  TableRef table_;
  std::size_t stride_ = 0;
  std::size_t natoms_ = 0;
  std::vector<word> data_;
};

bool atom_below(std::span<const word> atom, const Term& term);
Bits atom_union(const Bits& a, const Bits& b);

std::vector<std::size_t> lower_segment(const AtomizedModel& m, const Term& t);
std::vector<std::size_t> discriminant(const AtomizedModel& m, const Duple& d);
bool holds(const AtomizedModel& m, const Duple& d);
bool models_all(const AtomizedModel& m, const std::vector<Duple>& r);

AtomizedModel full_crossing(const AtomizedModel& m, const Duple& d,
                            const CrossOptions& opt = {});
AtomizedModel freest_model(TableRef t, const std::vector<Duple>& rpos,
                           const CrossOptions& opt = {});

TableRef subtable(const ConstantTable& t, const Bits& q);
// Rewrites a constant set between tables by name; every named constant must
// exist in the target.
Bits map_constants(const ConstantTable& from, const Bits& b,
                   const ConstantTable& to);
Duple map_duple(const ConstantTable& from, const Duple& d,
                const ConstantTable& to);

AtomizedModel restriction(const AtomizedModel& m, const Bits& q);

struct RestrictedAtoms {
  TableRef table;
  std::vector<Bits> atoms;  // deduped, sorted; redundant atoms kept
};
RestrictedAtoms restrict_atom_set(const AtomizedModel& m, const Bits& q);

AtomizedModel grounding(const AtomizedModel& m, const Bits& k);

AtomizedModel model_sum(const AtomizedModel& a, const AtomizedModel& b);
AtomizedModel direct_sum(const AtomizedModel& a, const AtomizedModel& b);

AtomKind is_atom_of(const AtomizedModel& m, const Bits& atom);
// Every atom of a is an atom of b (tables must match).
bool subset_model(const AtomizedModel& a, const AtomizedModel& b);
// Each canonical atom of a is a canonical atom of b or a's zero atom; a may
// live on a name-subset of b's table.
bool tight_subset_model(const AtomizedModel& a, const AtomizedModel& b);

// Atom-size histogram.
std::map<std::size_t, std::size_t> spectrum(const AtomizedModel& m);

}  // namespace atomlat
