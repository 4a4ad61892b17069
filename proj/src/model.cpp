#include "atomlat/model.hpp"

#include <algorithm>
#include <numeric>

namespace atomlat {

namespace {

// Inline word-loop variants of the kernel ops for the two crossing hot loops.
// Strides here are tiny (one to four words for every worked example), so the
// indirect kernel call costs more than the operation itself.
inline bool w_subset(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline bool w_equals(const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline void w_or(word* out, const word* a, const word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] | b[i];
}

// Deduplicating flat segment store (open addressing, linear probing).
struct FlatSet {
  std::size_t stride;
  std::vector<word> data;
  std::vector<std::uint32_t> slots;  // atom index + 1; 0 marks empty
  std::size_t count = 0;

  explicit FlatSet(std::size_t s, std::size_t expect = 64) : stride(s) {
    std::size_t cap = 64;
    while (cap * 7 < expect * 10) cap *= 2;
    slots.assign(cap, 0);
  }

  const word* at(std::size_t i) const { return data.data() + i * stride; }

  void rehash(std::size_t cap) {
    std::vector<std::uint32_t> ns(cap, 0);
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t p = hash_words({at(i), stride}) & (cap - 1);
      while (ns[p]) p = (p + 1) & (cap - 1);
      ns[p] = static_cast<std::uint32_t>(i) + 1;
    }
    slots = std::move(ns);
  }

  bool insert(const word* seg) {
    if ((count + 1) * 10 >= slots.size() * 7) rehash(slots.size() * 2);
    std::size_t m = slots.size();
    std::size_t p = hash_words({seg, stride}) & (m - 1);
    while (slots[p]) {
      std::uint32_t idx = slots[p] - 1;
      if (w_equals(at(idx), seg, stride)) return false;
      p = (p + 1) & (m - 1);
    }
    data.insert(data.end(), seg, seg + stride);
    slots[p] = static_cast<std::uint32_t>(count) + 1;
    ++count;
    return true;
  }
};

bool seg_any(const word* s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (s[i]) return true;
  return false;
}

// Orders, prunes redundant segments, and emits canonical flat data.  A
// segment is redundant when it equals the union of the strictly smaller
// segments contained in it; pruning against the full set or against the
// surviving set is equivalent, so a single ordered pass suffices.
AtomizedModel canonical_core(TableRef t, FlatSet& set, bool prune) {
  const auto& k = kern::active();
  const std::size_t n = set.count;
  const std::size_t stride = set.stride;

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint32_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i)
    sizes[i] = static_cast<std::uint32_t>(k.popcount(set.at(i), stride));
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return segment_compare({set.at(a), stride}, {set.at(b), stride}) < 0;
  });

  std::vector<char> drop(n, 0);
  if (prune) {
    // A segment is a union of strictly smaller ones only if each of its
    // constants appears in some strictly smaller segment; the per-constant
    // minimum size lets most non-redundant segments skip the scan.
    std::vector<std::uint32_t> minsz(stride * 64, UINT32_MAX);
    for (std::size_t i = 0; i < n; ++i) {
      const word* s = set.at(i);
      for (std::size_t w = 0; w < stride; ++w)
        for (word m = s[w]; m; m &= m - 1) {
          std::size_t c = w * 64 + static_cast<std::size_t>(__builtin_ctzll(m));
          if (sizes[i] < minsz[c]) minsz[c] = sizes[i];
        }
    }
    std::vector<word> acc(stride);
    std::size_t size_start = 0;  // first position of the current size class
    for (std::size_t p = 0; p < n; ++p) {
      std::uint32_t i = order[p];
      if (p > 0 && sizes[i] != sizes[order[p - 1]]) size_start = p;
      if (size_start == 0) continue;  // nothing strictly smaller
      const word* si = set.at(i);
      bool coverable = true;
      for (std::size_t w = 0; w < stride && coverable; ++w)
        for (word m = si[w]; m; m &= m - 1) {
          std::size_t c = w * 64 + static_cast<std::size_t>(__builtin_ctzll(m));
          if (minsz[c] >= sizes[i]) {
            coverable = false;
            break;
          }
        }
      if (!coverable) continue;
      std::fill(acc.begin(), acc.end(), word(0));
      for (std::size_t q = 0; q < size_start; ++q) {
        const word* sj = set.at(order[q]);
        if (!w_subset(sj, si, stride)) continue;
        bool full = true;
        for (std::size_t w = 0; w < stride; ++w)
          if ((acc[w] |= sj[w]) != si[w]) full = false;
        if (full) {
          drop[i] = 1;
          break;
        }
      }
    }
  }

  std::vector<word> out;
  std::size_t kept = 0;
  for (std::size_t p = 0; p < n; ++p) {
    std::uint32_t i = order[p];
    if (drop[i]) continue;
    out.insert(out.end(), set.at(i), set.at(i) + stride);
    ++kept;
  }
  return AtomizedModel::from_canonical_data(std::move(t), stride,
                                            std::move(out), kept);
}

void check_term(const ConstantTable& t, const Term& term, const char* what) {
  if (term.size_bits() != t.size())
    throw UsageError(std::string(what) + ": term built for a different table");
  if (term.none()) throw UsageError(std::string(what) + ": empty term");
}

}  // namespace

Duple make_duple(const ConstantTable& t, const std::vector<std::string>& lhs,
                 const std::vector<std::string>& rhs, bool positive) {
  return Duple{t.set_of(lhs), t.set_of(rhs), positive};
}

std::string format_term(const ConstantTable& t, const Term& term) {
  std::string out;
  term.for_each([&](std::size_t i) {
    if (!out.empty()) out += ' ';
    out += t.name(i);
  });
  return out;
}

std::string format_duple(const ConstantTable& t, const Duple& d) {
  return format_term(t, d.lhs) + (d.positive ? " <= " : " !<= ") +
         format_term(t, d.rhs);
}

AtomizedModel AtomizedModel::from_canonical_data(TableRef t, std::size_t stride,
                                                 std::vector<word> data,
                                                 std::size_t natoms) {
  AtomizedModel m;
  m.table_ = std::move(t);
  m.stride_ = stride;
  m.data_ = std::move(data);
  m.natoms_ = natoms;
  return m;
}

AtomizedModel AtomizedModel::canonical(TableRef t,
                                       const std::vector<Bits>& atoms) {
  if (t->size() == 0) throw UsageError("canonicalize: empty universe");
  const std::size_t nbits = t->size();
  const std::size_t stride = Bits(nbits).nwords();
  FlatSet set(stride, atoms.size());
  Bits cover(nbits);
  for (const Bits& a : atoms) {
    if (a.size_bits() != nbits)
      throw UsageError("atom built for a different table");
    if (a.none()) continue;
    set.insert(a.data());
    cover |= a;
  }
  if (nbits && !(cover == t->full_set())) {
    Bits zero(nbits);
    zero.set_all();
    set.insert(zero.data());
  }
  return canonical_core(std::move(t), set, true);
}

AtomizedModel AtomizedModel::discrete(TableRef t) {
  if (t->size() == 0) throw UsageError("discrete model: empty universe");
  const std::size_t n = t->size();
  const std::size_t stride = Bits(n).nwords();
  std::vector<word> data(n * stride, 0);
  for (std::size_t i = 0; i < n; ++i)
    data[i * stride + i / 64] = word(1) << (i % 64);
  return from_canonical_data(std::move(t), stride, std::move(data), n);
}

std::size_t AtomizedModel::atom_size(std::size_t i) const {
  auto a = atom(i);
  return kern::active().popcount(a.data(), a.size());
}

std::vector<Bits> AtomizedModel::atoms() const {
  std::vector<Bits> out;
  out.reserve(natoms_);
  for (std::size_t i = 0; i < natoms_; ++i) out.push_back(atom_bits(i));
  return out;
}

std::optional<std::size_t> AtomizedModel::find(const Bits& segment) const {
  std::size_t lo = 0, hi = natoms_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = segment_compare(atom(mid), segment.words());
    if (c == 0) return mid;
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

bool operator==(const AtomizedModel& a, const AtomizedModel& b) {
  if (!same_table(a.table_, b.table_)) return false;
  return a.natoms_ == b.natoms_ && a.data_ == b.data_;
}

bool atom_below(std::span<const word> atom, const Term& term) {
  return kern::active().intersects(atom.data(), term.data(), atom.size());
}

Bits atom_union(const Bits& a, const Bits& b) { return bits_or(a, b); }

std::vector<std::size_t> lower_segment(const AtomizedModel& m, const Term& t) {
  check_term(*m.table(), t, "lower_segment");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.atom_count(); ++i)
    if (atom_below(m.atom(i), t)) out.push_back(i);
  return out;
}

std::vector<std::size_t> discriminant(const AtomizedModel& m, const Duple& d) {
  check_term(*m.table(), d.lhs, "discriminant");
  check_term(*m.table(), d.rhs, "discriminant");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.atom_count(); ++i) {
    auto a = m.atom(i);
    if (atom_below(a, d.lhs) && !atom_below(a, d.rhs)) out.push_back(i);
  }
  return out;
}

bool holds(const AtomizedModel& m, const Duple& d) {
  check_term(*m.table(), d.lhs, "holds");
  check_term(*m.table(), d.rhs, "holds");
  for (std::size_t i = 0; i < m.atom_count(); ++i) {
    auto a = m.atom(i);
    if (atom_below(a, d.lhs) && !atom_below(a, d.rhs)) return !d.positive;
  }
  return d.positive;
}

bool models_all(const AtomizedModel& m, const std::vector<Duple>& r) {
  for (const auto& d : r)
    if (!holds(m, d)) return false;
  return true;
}

AtomizedModel full_crossing(const AtomizedModel& m, const Duple& d,
                            const CrossOptions& opt) {
  const auto& k = kern::active();
  check_term(*m.table(), d.lhs, "full_crossing");
  check_term(*m.table(), d.rhs, "full_crossing");
  const std::size_t stride = m.stride();

  std::vector<std::uint32_t> dis, low;
  std::vector<char> in_dis(m.atom_count(), 0);
  for (std::size_t i = 0; i < m.atom_count(); ++i) {
    auto a = m.atom(i);
    bool br = atom_below(a, d.rhs);
    if (br)
      low.push_back(static_cast<std::uint32_t>(i));
    else if (atom_below(a, d.lhs)) {
      dis.push_back(static_cast<std::uint32_t>(i));
      in_dis[i] = 1;
    }
  }
  if (dis.empty()) return m;

  FlatSet out(stride, m.atom_count());
  for (std::size_t i = 0; i < m.atom_count(); ++i)
    if (!in_dis[i]) out.insert(m.atom(i).data());

  // Products x v y for x in the discriminant and y below the right side.
  // A product is skipped when an already kept y' fits inside it: the product
  // then equals (x v y') v y, a union of kept atoms, hence redundant.  The
  // final canonical pass removes whatever this misses.  y' <= x v y is
  // equivalent to y' \ x <= y, so keeping the residuals avoids building the
  // union for pruned pairs.
  std::vector<word> u(stride);
  std::vector<word> kept_r;  // residuals y' \ x of the kept products
  for (std::uint32_t x : dis) {
    const word* xs = m.atom(x).data();
    kept_r.clear();
    for (std::uint32_t yi : low) {
      const word* ys = m.atom(yi).data();
      bool pruned = false;
      for (std::size_t r = 0; r < kept_r.size(); r += stride)
        if (w_subset(kept_r.data() + r, ys, stride)) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      w_or(u.data(), xs, ys, stride);
      if (out.insert(u.data())) {
        if (out.count > opt.atom_budget)
          throw ResourceLimit("atom budget exceeded while crossing (" +
                              std::to_string(out.count) + " atoms)");
        for (std::size_t w = 0; w < stride; ++w)
          kept_r.push_back(ys[w] & ~xs[w]);
      }
    }
  }
  return canonical_core(m.table(), out, true);
}

AtomizedModel freest_model(TableRef t, const std::vector<Duple>& rpos,
                           const CrossOptions& opt) {
  AtomizedModel m = AtomizedModel::discrete(std::move(t));
  for (const auto& d : rpos) {
    if (!d.positive)
      throw UsageError("freest_model: negative duple in positive relation");
    m = full_crossing(m, d, opt);
  }
  return m;
}

TableRef subtable(const ConstantTable& t, const Bits& q) {
  std::vector<std::string> names;
  q.for_each([&](std::size_t i) { names.push_back(t.name(i)); });
  return ConstantTable::make(std::move(names));
}

Bits map_constants(const ConstantTable& from, const Bits& b,
                   const ConstantTable& to) {
  Bits out(to.size());
  b.for_each([&](std::size_t i) { out.set(to.id(from.name(i))); });
  return out;
}

Duple map_duple(const ConstantTable& from, const Duple& d,
                const ConstantTable& to) {
  return Duple{map_constants(from, d.lhs, to), map_constants(from, d.rhs, to),
               d.positive};
}

namespace {

// Shared by restriction and restrict_atom_set: segments intersected with q
// and rewritten to the subtable, empties dropped, deduplicated.
FlatSet project_atoms(const AtomizedModel& m, const Bits& q,
                      const ConstantTable& sub) {
  const ConstantTable& t = *m.table();
  std::vector<std::int32_t> idmap(t.size(), -1);
  q.for_each([&](std::size_t i) {
    idmap[i] = static_cast<std::int32_t>(sub.id(t.name(i)));
  });
  const std::size_t sub_stride = Bits(sub.size()).nwords();
  FlatSet set(sub_stride, m.atom_count());
  std::vector<word> seg(sub_stride);
  Bits masked(t.size());
  for (std::size_t i = 0; i < m.atom_count(); ++i) {
    kern::active().and_to(masked.data(), m.atom(i).data(), q.data(),
                          m.stride());
    if (!seg_any(masked.data(), m.stride())) continue;
    std::fill(seg.begin(), seg.end(), word(0));
    masked.for_each([&](std::size_t c) {
      std::size_t nid = static_cast<std::size_t>(idmap[c]);
      seg[nid / 64] |= word(1) << (nid % 64);
    });
    set.insert(seg.data());
  }
  return set;
}

}  // namespace

AtomizedModel restriction(const AtomizedModel& m, const Bits& q) {
  if (q.size_bits() != m.table()->size())
    throw UsageError("restriction: set built for a different table");
  if (q.none()) throw UsageError("restriction: empty constant set");
  TableRef sub = subtable(*m.table(), q);
  FlatSet set = project_atoms(m, q, *sub);
  return canonical_core(std::move(sub), set, true);
}

RestrictedAtoms restrict_atom_set(const AtomizedModel& m, const Bits& q) {
  if (q.size_bits() != m.table()->size())
    throw UsageError("restrict_atom_set: set built for a different table");
  if (q.none()) throw UsageError("restrict_atom_set: empty constant set");
  TableRef sub = subtable(*m.table(), q);
  FlatSet set = project_atoms(m, q, *sub);
  AtomizedModel ordered = canonical_core(sub, set, false);
  return RestrictedAtoms{std::move(sub), ordered.atoms()};
}

AtomizedModel grounding(const AtomizedModel& m, const Bits& kset) {
  if (kset.size_bits() != m.table()->size())
    throw UsageError("grounding: set built for a different table");
  if (kset.none()) throw UsageError("grounding: empty constant set");
  TableRef sub = subtable(*m.table(), kset);
  std::vector<Bits> kept;
  for (std::size_t i = 0; i < m.atom_count(); ++i) {
    Bits a = m.atom_bits(i);
    if (a.is_subset_of(kset))
      kept.push_back(map_constants(*m.table(), a, *sub));
  }
  // canonical() adds the zero atom over the subtable exactly when some
  // constant of k lost its whole lower segment.
  return AtomizedModel::canonical(std::move(sub), kept);
}

AtomizedModel model_sum(const AtomizedModel& a, const AtomizedModel& b) {
  if (!same_table(a.table(), b.table()))
    throw UsageError("model_sum: different constant tables");
  std::vector<Bits> all = a.atoms();
  for (auto& x : b.atoms()) all.push_back(std::move(x));
  return AtomizedModel::canonical(a.table(), all);
}

AtomizedModel direct_sum(const AtomizedModel& a, const AtomizedModel& b) {
  for (const auto& n : a.table()->names())
    if (b.table()->has(n))
      throw UsageError("direct_sum: tables share constant " + n);
  std::vector<std::string> names = a.table()->names();
  for (const auto& n : b.table()->names()) names.push_back(n);
  TableRef t = ConstantTable::make(std::move(names));
  std::vector<Bits> all;
  for (const auto& x : a.atoms())
    all.push_back(map_constants(*a.table(), x, *t));
  for (const auto& x : b.atoms())
    all.push_back(map_constants(*b.table(), x, *t));
  return AtomizedModel::canonical(std::move(t), all);
}

AtomKind is_atom_of(const AtomizedModel& m, const Bits& atom) {
  if (atom.size_bits() != m.table()->size())
    throw UsageError("is_atom_of: atom built for a different table");
  if (atom.none()) throw UsageError("is_atom_of: empty atom");
  if (m.find(atom)) return AtomKind::nonredundant;
  const auto& k = kern::active();
  Bits acc(atom.size_bits());
  for (std::size_t i = 0; i < m.atom_count(); ++i) {
    auto a = m.atom(i);
    if (k.subset(a.data(), atom.data(), m.stride()) &&
        k.or_accum_equals(acc.data(), a.data(), atom.data(), m.stride()))
      return AtomKind::redundant;
  }
  return AtomKind::external;
}

bool subset_model(const AtomizedModel& a, const AtomizedModel& b) {
  if (!same_table(a.table(), b.table()))
    throw UsageError("subset_model: different constant tables");
  for (std::size_t i = 0; i < a.atom_count(); ++i)
    if (is_atom_of(b, a.atom_bits(i)) == AtomKind::external) return false;
  return true;
}

bool tight_subset_model(const AtomizedModel& a, const AtomizedModel& b) {
  const ConstantTable& ta = *a.table();
  const ConstantTable& tb = *b.table();
  for (const auto& n : ta.names())
    if (!tb.has(n))
      throw UsageError("tight_subset_model: constant " + n +
                       " missing from the larger table");
  Bits zero = ta.full_set();
  for (std::size_t i = 0; i < a.atom_count(); ++i) {
    Bits seg = a.atom_bits(i);
    if (seg == zero) continue;  // the zero atom is exempt
    if (!b.find(map_constants(ta, seg, tb))) return false;
  }
  return true;
}

std::map<std::size_t, std::size_t> spectrum(const AtomizedModel& m) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t i = 0; i < m.atom_count(); ++i) ++out[m.atom_size(i)];
  return out;
}

}  // namespace atomlat
