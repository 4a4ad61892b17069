#include "atomlat/solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace atomlat {

namespace {

std::string atom_text(const ConstantTable& t, const Bits& seg) {
  std::string out = "{";
  bool first = true;
  seg.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    first = false;
    out += t.name(i);
  });
  return out + "}";
}

// Scope flattened to clauses (conjuncts), each a list of options
// (disjuncts), each a list of gamma indices that must hold together.
using ScopeOption = std::vector<std::size_t>;
using ScopeClause = std::vector<ScopeOption>;

bool flatten_option(const ScopeFormula& f, ScopeOption& out) {
  if (f.kind == ScopeFormula::Kind::leaf) {
    out.push_back(f.leaf);
    return true;
  }
  if (f.kind != ScopeFormula::Kind::conj) return false;
  for (const auto& k : f.kids)
    if (!flatten_option(k, out)) return false;
  return true;
}

bool flatten_scope(const ScopeFormula& s, std::vector<ScopeClause>& out) {
  switch (s.kind) {
    case ScopeFormula::Kind::neg:
      return false;
    case ScopeFormula::Kind::leaf:
      out.push_back({{s.leaf}});
      return true;
    case ScopeFormula::Kind::disj: {
      ScopeClause clause;
      for (const auto& k : s.kids) {
        ScopeOption opt;
        if (!flatten_option(k, opt)) return false;
        clause.push_back(std::move(opt));
      }
      out.push_back(std::move(clause));
      return true;
    }
    case ScopeFormula::Kind::conj:
      for (const auto& k : s.kids)
        if (!flatten_scope(k, out)) return false;
      return true;
  }
  return false;
}

// Exact test for "enforcing positive duple d makes duple (L <= R) true",
// evaluated on the crossed model without materializing it.  Crossing
// replaces the atoms below lhs and not below rhs (set A) with unions a | b,
// b ranging over the atoms below rhs (set B); all other atoms survive.  The
// crossed model keeps a discriminant atom for (L, R) iff a survivor
// discriminates or some union a | b does, and (a | b) < L decomposes as
// a < L or b < L, so five flags over one pass suffice.
bool crossing_settles(const AtomizedModel& m, const Duple& d, const Term& L,
                      const Term& R) {
  bool a_any = false, a_no_r = false, a_disc = false;
  bool b_no_r = false, b_disc = false;
  for (std::size_t i = 0; i < m.atom_count(); ++i) {
    auto a = m.atom(i);
    const bool below_l = atom_below(a, L);
    const bool below_r = atom_below(a, R);
    const bool in_b = atom_below(a, d.rhs);
    if (!in_b && atom_below(a, d.lhs)) {
      a_any = true;
      if (!below_r) {
        a_no_r = true;
        if (below_l) a_disc = true;
      }
    } else if (below_l && !below_r) {
      return false;  // a surviving discriminant keeps (L, R) false
    }
    if (in_b && !below_r) {
      b_no_r = true;
      if (below_l) b_disc = true;
    }
  }
  if (!a_any) return true;  // d already holds and (L, R) has no witness
  return !(a_disc && b_no_r) && !(b_disc && a_no_r);
}

// Depth-first completion over the scope clauses.  Crossing a chosen option
// into the model only adds true duples, so a negative satisfied along a
// branch can never become unsatisfied again: such branches are pruned.  A
// completed branch is a genuine freest model of R+ plus the choices, and its
// induced solution validates by construction.
//
// When the freest model of R+ alone is too expensive, the search can run on
// an under-crossed base instead: positive duples whose crossing overflows a
// per-node atom cap are deferred.  A deferred model is freer than the real
// one, so negatives fail there only if they fail in the real model too, and
// pruning stays sound; it is merely weaker.  Chosen options usually collapse
// the model (identifications), so deferred duples are retried once the model
// shrinks, and a completed branch crosses everything under the full budget,
// restoring exactness before the solution is read off.
struct ScopeSearch {
  const Embedding& e;
  const CrossOptions& opt;
  std::vector<ScopeClause> clauses;
  std::uint64_t nodes = 0;
  std::uint64_t node_cap = 1u << 20;
  bool resource_hit = false;

  static constexpr std::size_t kApproxAtoms = 4096;

  struct Deferred {
    Duple d;
    std::size_t at;  // model size when last attempted
  };

  bool option_holds(const AtomizedModel& m, const ScopeOption& o) const {
    for (std::size_t gi : o)
      if (!holds(m, e.gamma[gi])) return false;
    return true;
  }

  // An option is dead when enforcing either of its duples alone already
  // makes some negative duple true; enforcing more keeps it true.
  bool option_dead(const AtomizedModel& m, const ScopeOption& o) const {
    for (std::size_t gi : o) {
      const Duple& d = e.gamma[gi];
      if (holds(m, d)) continue;
      for (const Duple& n : e.rneg)
        if (crossing_settles(m, d, n.lhs, n.rhs)) return true;
    }
    return false;
  }

  bool cross_capped(AtomizedModel& m, const Duple& d) const {
    CrossOptions capped = opt;
    capped.atom_budget =
        std::min(opt.atom_budget, std::max(kApproxAtoms, m.atom_count() + 1024));
    try {
      m = full_crossing(m, d, capped);
      return true;
    } catch (const ResourceLimit&) {
      return false;
    }
  }

  // Base model for a search without a precomputed freest model: cross what
  // fits under the cap, defer the rest.
  AtomizedModel approx_base(std::vector<Deferred>& deferred) const {
    AtomizedModel m = AtomizedModel::discrete(e.constants);
    for (const Duple& d : e.rpos)
      if (!cross_capped(m, d)) deferred.push_back({d, m.atom_count()});
    return m;
  }

  std::optional<std::pair<Solution, AtomizedModel>> found;

  bool run(const AtomizedModel& cur, const std::vector<Deferred>& deferred) {
    if (++nodes > node_cap) {
      resource_hit = true;
      return false;
    }
    std::size_t best = clauses.size();
    std::size_t best_count = 0;
    std::vector<ScopeOption const*> best_viable;
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      bool satisfied = false;
      std::vector<ScopeOption const*> viable;
      for (const ScopeOption& o : clauses[c]) {
        if (option_holds(cur, o)) {
          satisfied = true;
          break;
        }
        if (!option_dead(cur, o)) viable.push_back(&o);
      }
      if (satisfied) continue;
      if (viable.empty()) return false;
      if (best == clauses.size() || viable.size() < best_count) {
        best = c;
        best_count = viable.size();
        best_viable = std::move(viable);
        if (best_count == 1) break;
      }
    }
    if (best == clauses.size()) return complete(cur, deferred);
    for (const ScopeOption* o : best_viable) {
      AtomizedModel next = cur;
      bool overflow = false;
      for (std::size_t gi : *o)
        if (!holds(next, e.gamma[gi])) {
          try {
            next = full_crossing(next, e.gamma[gi], opt);
          } catch (const ResourceLimit&) {
            resource_hit = true;
            overflow = true;
            break;
          }
        }
      if (overflow) continue;
      std::vector<Deferred> rest;
      rest.reserve(deferred.size());
      for (const Deferred& df : deferred) {
        if (next.atom_count() < df.at) {
          AtomizedModel trial = next;
          if (cross_capped(trial, df.d)) {
            next = std::move(trial);
            continue;
          }
        }
        rest.push_back({df.d, next.atom_count()});
      }
      bool pruned = false;
      for (const Duple& n : e.rneg)
        if (!holds(next, n)) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      if (run(next, rest)) return true;
    }
    return false;
  }

  // All clauses hold; cross any remaining deferred duples under the full
  // budget so the branch model is the exact freest model of R+ plus the
  // choices, then recheck the negatives on it.
  bool complete(const AtomizedModel& cur, const std::vector<Deferred>& deferred) {
    AtomizedModel m = cur;
    if (!deferred.empty()) {
      try {
        for (const Deferred& df : deferred) m = full_crossing(m, df.d, opt);
      } catch (const ResourceLimit&) {
        resource_hit = true;
        return false;
      }
      for (const Duple& n : e.rneg)
        if (!holds(m, n)) return false;
    }
    found = {induced_solution(e, m), m};
    return true;
  }
};

}  // namespace

AtomizedModel minimize_irreducible(const AtomizedModel& m,
                                   const std::vector<Duple>& relation) {
  if (!m.table()) throw UsageError("minimize_irreducible: empty model");
  if (!models_all(m, relation))
    throw UsageError("minimize_irreducible: model does not satisfy the relation");
  std::vector<const Duple*> negs;
  for (const Duple& d : relation)
    if (!d.positive) negs.push_back(&d);

  const std::size_t n = m.atom_count();
  // witnesses[j] = atoms discriminating negative j; alive counts shrink as
  // atoms are removed
  std::vector<std::vector<std::size_t>> by_atom(n);
  std::vector<std::size_t> alive(negs.size());
  for (std::size_t j = 0; j < negs.size(); ++j) {
    std::vector<std::size_t> wit = discriminant(m, *negs[j]);
    alive[j] = wit.size();
    for (std::size_t i : wit) by_atom[i].push_back(j);
  }

  std::vector<bool> present(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    bool removable = true;
    for (std::size_t j : by_atom[i])
      if (alive[j] <= 1) {
        removable = false;
        break;
      }
    if (!removable) continue;
    present[i] = false;
    for (std::size_t j : by_atom[i]) --alive[j];
  }

  std::vector<Bits> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (present[i]) kept.push_back(m.atom_bits(i));
  return AtomizedModel::canonical(m.table(), kept);
}

AtomizedModel minimize_irreducible(const AtomizedModel& m, const Embedding& e) {
  std::vector<Duple> rel = e.rpos;
  rel.insert(rel.end(), e.rneg.begin(), e.rneg.end());
  return minimize_irreducible(m, rel);
}

AtomizedModel select_for_negatives(const AtomizedModel& f, const Embedding& e,
                                   const SelectionStrategy& strat) {
  validate_embedding(e);
  if (!same_table(f.table(), e.constants))
    throw UsageError("select_for_negatives: model over a different table");
  if (!models_all(f, e.rpos))
    throw UsageError("select_for_negatives: model violates the positive relation");

  // context footprint mask: constants named by the context map or by the
  // strategy's conflict pairs
  Bits gmask = e.constants->empty_set();
  for (const auto& [gi, cid] : e.context_map) gmask.set(cid);
  for (const auto& [u, v] : strat.conflicts) {
    gmask.set(u);
    gmask.set(v);
  }

  std::mt19937_64 rng(strat.seed.value_or(0));
  std::vector<std::size_t> order(e.rneg.size());
  std::iota(order.begin(), order.end(), 0);
  if (strat.seed) std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::size_t> picked;
  std::vector<bool> is_picked(f.atom_count(), false);
  Bits footprint = e.constants->empty_set();

  for (std::size_t j : order) {
    const Duple& d = e.rneg[j];
    bool covered = false;
    for (std::size_t i : picked)
      if (atom_below(f.atom(i), d.lhs) && !atom_below(f.atom(i), d.rhs)) {
        covered = true;
        break;
      }
    if (covered) continue;
    std::vector<std::size_t> cands = discriminant(f, d);
    if (cands.empty())
      throw Infeasible("select_for_negatives: no atom witnesses " +
                       format_duple(*e.constants, d));
    if (strat.seed) std::shuffle(cands.begin(), cands.end(), rng);
    if (strat.mode == SelectionStrategy::Mode::grounding_priority &&
        !strat.conflicts.empty()) {
      auto conflicting = [&](std::size_t i) {
        Bits combined = footprint;
        combined |= bits_and(f.atom_bits(i), gmask);
        for (const auto& [u, v] : strat.conflicts)
          if (combined.test(u) && combined.test(v)) return true;
        return false;
      };
      std::stable_partition(cands.begin(), cands.end(),
                            [&](std::size_t i) { return !conflicting(i); });
    }
    const std::size_t pick = cands.front();
    if (!is_picked[pick]) {
      is_picked[pick] = true;
      picked.push_back(pick);
      footprint |= bits_and(f.atom_bits(pick), gmask);
    }
  }

  std::vector<Bits> segs;
  segs.reserve(picked.size());
  for (std::size_t i : picked) segs.push_back(f.atom_bits(i));
  return AtomizedModel::canonical(f.table(), segs);
}

std::vector<std::pair<Solution, AtomizedModel>> solve(
    const Embedding& e, const SelectionStrategy& strat, std::size_t attempts,
    const CrossOptions& opt) {
  validate_embedding(e);
  std::optional<AtomizedModel> f;
  std::exception_ptr limit;
  try {
    f = freest_model(e.constants, e.rpos, opt);
  } catch (const ResourceLimit&) {
    limit = std::current_exception();
  }

  std::vector<std::pair<Solution, AtomizedModel>> out;
  if (f) {
    for (const Duple& d : e.rneg)
      if (!holds(*f, d)) return {};  // no model of the relation exists
    for (std::size_t k = 0; k < attempts; ++k) {
      SelectionStrategy s = strat;
      if (k > 0 || strat.seed) s.seed = strat.seed.value_or(0) + k;
      AtomizedModel m = select_for_negatives(*f, e, s);
      if (!evaluate_scope(e, m)) continue;
      Solution sol = induced_solution(e, m);
      if (!validate_solution(e, sol, opt)) continue;
      bool seen = false;
      for (const auto& [prev, pm] : out)
        if (prev == sol) {
          seen = true;
          break;
        }
      if (!seen) out.emplace_back(std::move(sol), std::move(m));
    }
  }
  if (out.empty()) {
    ScopeSearch search{e, opt};
    if (flatten_scope(e.scope, search.clauses)) {
      bool hit;
      if (f) {
        hit = search.run(*f, {});
      } else {
        std::vector<ScopeSearch::Deferred> deferred;
        AtomizedModel base = search.approx_base(deferred);
        hit = search.run(base, deferred);
      }
      if (hit && search.found) out.push_back(std::move(*search.found));
      // Exhausting the search proves infeasibility even without the freest
      // model; a capped search proves nothing, so the budget error stands.
      if (out.empty() && !f && search.resource_hit)
        std::rethrow_exception(limit);
    } else if (!f) {
      std::rethrow_exception(limit);
    }
  }
  return out;
}

std::vector<Solution> atoms_as_solutions(
    const Embedding& e, const AtomizedModel& f, std::size_t size,
    const std::function<std::optional<Solution>(const Bits&)>& decoder,
    std::vector<std::string>* rejected) {
  std::vector<Solution> out;
  for (std::size_t i = 0; i < f.atom_count(); ++i) {
    if (f.atom_size(i) != size) continue;
    Bits seg = f.atom_bits(i);
    std::optional<Solution> s = decoder(seg);
    if (!s) {
      if (rejected)
        rejected->push_back("atom " + atom_text(*f.table(), seg) +
                            " rejected by the decoder");
      continue;
    }
    if (!validate_solution(e, *s)) {
      if (rejected)
        rejected->push_back("atom " + atom_text(*f.table(), seg) +
                            " decodes to an invalid solution");
      continue;
    }
    out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace atomlat
