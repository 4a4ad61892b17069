#include "atomlat/embedding.hpp"

#include <algorithm>
#include <string>

namespace atomlat {

ScopeFormula ScopeFormula::leaf_of(std::size_t i) {
  ScopeFormula f;
  f.kind = Kind::leaf;
  f.leaf = i;
  return f;
}

ScopeFormula ScopeFormula::conj_of(std::vector<ScopeFormula> ks) {
  if (ks.size() == 1) return std::move(ks[0]);
  ScopeFormula f;
  f.kind = Kind::conj;
  f.kids = std::move(ks);
  return f;
}

ScopeFormula ScopeFormula::disj_of(std::vector<ScopeFormula> ks) {
  if (ks.size() == 1) return std::move(ks[0]);
  ScopeFormula f;
  f.kind = Kind::disj;
  f.kids = std::move(ks);
  return f;
}

ScopeFormula ScopeFormula::neg_of(ScopeFormula k) {
  ScopeFormula f;
  f.kind = Kind::neg;
  f.kids.push_back(std::move(k));
  return f;
}

bool operator==(const Embedding& a, const Embedding& b) {
  return same_table(a.constants, b.constants) && a.interp == b.interp &&
         a.rpos == b.rpos && a.rneg == b.rneg && a.gamma == b.gamma &&
         a.scope == b.scope && a.context_map == b.context_map;
}

void validate_embedding(const Embedding& e) {
  if (!e.constants || e.constants->size() == 0)
    throw UsageError("embedding: empty constant table");
  const std::size_t n = e.constants->size();
  if (e.interp.size_bits() != n)
    throw UsageError("embedding: interpretation over a different table");
  if (e.interp.none()) throw UsageError("embedding: empty interpretation");
  auto term_ok = [&](const Term& t) { return t.size_bits() == n && t.any(); };
  for (const Duple& d : e.rpos)
    if (!d.positive || !term_ok(d.lhs) || !term_ok(d.rhs))
      throw UsageError("embedding: bad duple in the positive relation");
  for (const Duple& d : e.rneg)
    if (d.positive || !term_ok(d.lhs) || !term_ok(d.rhs))
      throw UsageError("embedding: bad duple in the negative relation");
  for (const Duple& d : e.gamma)
    if (!d.positive || !term_ok(d.lhs) || !term_ok(d.rhs) ||
        !d.lhs.is_subset_of(e.interp) || !d.rhs.is_subset_of(e.interp))
      throw UsageError(
          "embedding: gamma needs positive duples over the interpretation");
  bool bad_leaf = false;
  e.scope.for_each_leaf([&](std::size_t i) {
    if (i >= e.gamma.size()) bad_leaf = true;
  });
  if (bad_leaf) throw UsageError("embedding: scope leaf outside gamma");
  for (const auto& [i, id] : e.context_map)
    if (i >= e.gamma.size() || id >= n)
      throw UsageError("embedding: context map entry out of range");
}

Solution make_solution(const Embedding& e,
                       std::initializer_list<std::size_t> idx) {
  return make_solution(e, std::vector<std::size_t>(idx));
}

Solution make_solution(const Embedding& e, const std::vector<std::size_t>& idx) {
  Solution s{Bits(e.gamma.size())};
  for (std::size_t i : idx) {
    if (i >= e.gamma.size())
      throw UsageError("make_solution: index outside gamma");
    s.members.set(i);
  }
  return s;
}

static void check_solution(const Embedding& e, const Solution& s) {
  if (s.members.size_bits() != e.gamma.size())
    throw UsageError("solution does not match the embedding's gamma");
}

std::vector<Duple> solution_duples(const Embedding& e, const Solution& s) {
  check_solution(e, s);
  std::vector<Duple> out;
  s.members.for_each([&](std::size_t i) { out.push_back(e.gamma[i]); });
  return out;
}

std::string format_solution(const Embedding& e, const Solution& s) {
  check_solution(e, s);
  std::string out = "{";
  bool first = true;
  s.members.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    first = false;
    out += format_duple(*e.constants, e.gamma[i]);
  });
  return out + "}";
}

bool evaluate_scope(const ScopeFormula& xi, const std::vector<Duple>& gamma,
                    const Solution& s) {
  return xi.eval([&](std::size_t i) {
    if (i >= gamma.size()) throw UsageError("scope leaf outside gamma");
    return s.members.test(i);
  });
}

bool evaluate_scope(const ScopeFormula& xi, const std::vector<Duple>& gamma,
                    const AtomizedModel& m) {
  const std::size_t n = m.table()->size();
  return xi.eval([&](std::size_t i) {
    if (i >= gamma.size()) throw UsageError("scope leaf outside gamma");
    if (gamma[i].lhs.size_bits() != n)
      throw UsageError("scope: gamma duple over a different table");
    return holds(m, gamma[i]);
  });
}

bool evaluate_scope(const Embedding& e, const Solution& s) {
  check_solution(e, s);
  return evaluate_scope(e.scope, e.gamma, s);
}

bool evaluate_scope(const Embedding& e, const AtomizedModel& m) {
  if (same_table(e.constants, m.table()))
    return evaluate_scope(e.scope, e.gamma, m);
  return e.scope.eval([&](std::size_t i) {
    if (i >= e.gamma.size()) throw UsageError("scope leaf outside gamma");
    return holds(m, map_duple(*e.constants, e.gamma[i], *m.table()));
  });
}

AtomizedModel freest_solution(const Embedding& e, const Solution& s,
                              const CrossOptions& opt) {
  check_solution(e, s);
  // Selected separator duples first: identifications collapse the model
  // before the wide relation sentences are crossed.  The result is the same
  // by crossing-order invariance; the intermediate models are much smaller.
  std::vector<Duple> r;
  s.members.for_each([&](std::size_t i) { r.push_back(e.gamma[i]); });
  r.insert(r.end(), e.rpos.begin(), e.rpos.end());
  return freest_model(e.constants, r, opt);
}

ValidationResult validate_solution(const Embedding& e, const Solution& s,
                                   const CrossOptions& opt) {
  check_solution(e, s);
  if (!evaluate_scope(e.scope, e.gamma, s))
    return {Verdict::scope_fail, std::nullopt};
  AtomizedModel fs = freest_solution(e, s, opt);
  for (const Duple& d : e.rneg)
    if (!holds(fs, d)) return {Verdict::negative_fail, d};
  for (std::size_t i = 0; i < e.gamma.size(); ++i) {
    if (s.members.test(i)) continue;
    if (holds(fs, e.gamma[i])) {
      Duple d = e.gamma[i];
      d.positive = false;  // the complement negation that fails
      return {Verdict::negative_fail, d};
    }
  }
  return {};
}

Solution induced_solution(const Embedding& e, const AtomizedModel& m) {
  Solution s{Bits(e.gamma.size())};
  const bool direct = same_table(e.constants, m.table());
  for (std::size_t i = 0; i < e.gamma.size(); ++i) {
    Duple d = direct ? e.gamma[i] : map_duple(*e.constants, e.gamma[i], *m.table());
    if (holds(m, d)) s.members.set(i);
  }
  return s;
}

std::vector<Solution> enumerate_solutions(const Embedding& e,
                                          std::size_t gamma_cap,
                                          const CrossOptions& opt) {
  validate_embedding(e);
  const std::size_t n = e.gamma.size();
  if (n > gamma_cap || n >= 64)
    throw ResourceLimit("enumerate_solutions: 2^" + std::to_string(n) +
                        " candidates; supply solutions from a problem oracle");
  std::vector<Solution> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    Solution s{Bits(n)};
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.members.set(i);
    if (validate_solution(e, s, opt)) out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<AtomizedModel> solution_models(const Embedding& e,
                                           const std::vector<Solution>& sols,
                                           const CrossOptions& opt) {
  std::vector<AtomizedModel> out;
  out.reserve(sols.size());
  for (const Solution& s : sols) out.push_back(freest_solution(e, s, opt));
  return out;
}

bool tight_impl(const AtomizedModel& big,
                const std::vector<AtomizedModel>& fs) {
  for (const auto& m : fs)
    if (!tight_subset_model(m, big)) return false;
  return true;
}

// fsq are the solution models already restricted to Q.
bool concise_impl(const Embedding& e, const std::vector<Solution>& sols,
                  const std::vector<AtomizedModel>& fsq,
                  const CrossOptions& opt) {
  TableRef q = subtable(*e.constants, e.interp);
  for (std::size_t i = 0; i < sols.size(); ++i) {
    std::vector<Duple> sd;
    sols[i].members.for_each([&](std::size_t j) {
      sd.push_back(map_duple(*e.constants, e.gamma[j], *q));
    });
    if (!(fsq[i] == freest_model(q, sd, opt))) return false;
  }
  return true;
}

RestrictedAtoms residual_impl(const AtomizedModel& bigq,
                              const std::vector<AtomizedModel>& fsq) {
  RestrictedAtoms out{bigq.table(), {}};
  Bits full = bigq.table()->full_set();
  for (std::size_t i = 0; i < bigq.atom_count(); ++i) {
    Bits seg = bigq.atom_bits(i);
    if (seg == full) continue;  // the zero atom never counts
    bool external_everywhere = true;
    for (const auto& m : fsq)
      if (is_atom_of(m, seg) != AtomKind::external) {
        external_everywhere = false;
        break;
      }
    if (external_everywhere) out.atoms.push_back(std::move(seg));
  }
  return out;
}

bool brute_complete_impl(const Embedding& e, const std::vector<Solution>& sols,
                         const AtomizedModel& big, const CrossOptions& opt) {
  const std::size_t q = e.interp.count();
  if (q > 12)
    throw ResourceLimit("is_complete: brute force needs |Q| <= 12");
  TableRef qt = subtable(*e.constants, e.interp);
  std::vector<AtomizedModel> fq;
  for (const Solution& s : sols) {
    std::vector<Duple> sd;
    s.members.for_each([&](std::size_t j) {
      sd.push_back(map_duple(*e.constants, e.gamma[j], *qt));
    });
    fq.push_back(freest_model(qt, sd, opt));
  }
  for (std::size_t c = 0; c < q; ++c) {
    for (std::uint64_t t = 1; t < (std::uint64_t(1) << q); ++t) {
      Duple r;
      r.positive = true;
      r.lhs = Bits(q);
      r.lhs.set(c);
      r.rhs = Bits(q);
      for (std::size_t j = 0; j < q; ++j)
        if ((t >> j) & 1) r.rhs.set(j);
      bool forced = true;
      for (const auto& m : fq)
        if (!holds(m, r)) {
          forced = false;
          break;
        }
      if (forced && !holds(big, map_duple(*qt, r, *e.constants))) return false;
    }
  }
  return true;
}

bool strong_impl(const AtomizedModel& big,
                 const std::vector<AtomizedModel>& fs) {
  if (fs.empty()) return false;
  AtomizedModel u = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) u = model_sum(u, fs[i]);
  return u == big;
}

AtomizedModel explicit_reconstruct(const Embedding& e, const AtomizedModel& big,
                                   const Bits& k) {
  Bits full = e.constants->full_set();
  if (k == full) return big;
  if (k.none()) return AtomizedModel::discrete(e.constants);
  return direct_sum(grounding(big, k),
                    AtomizedModel::discrete(subtable(*e.constants, k.complement())));
}

std::optional<std::vector<Bits>> explicit_impl(
    const Embedding& e, const std::vector<Solution>& sols,
    const AtomizedModel& big, const std::vector<AtomizedModel>& fs) {
  const std::size_t n = e.constants->size();
  Bits full = e.constants->full_set();
  std::vector<Bits> out;
  for (std::size_t si = 0; si < sols.size(); ++si) {
    std::optional<Bits> found;
    if (!e.context_map.empty()) {
      // drop the context constants of the selected gamma duples
      Bits k = full;
      for (const auto& [gi, cid] : e.context_map)
        if (sols[si].members.test(gi)) k.reset(cid);
      if (explicit_reconstruct(e, big, k) == fs[si]) found = std::move(k);
    }
    if (!found) {
      if (n > 16)
        throw ResourceLimit("is_explicit: exhaustive search needs |C| <= 16");
      // a constant outside K must appear as a singleton atom of F_S, so it
      // is enough to search removal sets among those constants
      std::vector<std::size_t> singles;
      for (std::size_t c = 0; c < n; ++c) {
        Bits s1(n);
        s1.set(c);
        if (fs[si].find(s1)) singles.push_back(c);
      }
      const std::uint64_t lim = std::uint64_t(1) << singles.size();
      for (std::uint64_t mask = 0; mask < lim && !found; ++mask) {
        Bits k = full;
        for (std::size_t j = 0; j < singles.size(); ++j)
          if ((mask >> j) & 1) k.reset(singles[j]);
        if (explicit_reconstruct(e, big, k) == fs[si]) found = std::move(k);
      }
    }
    if (!found) return std::nullopt;
    out.push_back(std::move(*found));
  }
  return out;
}

std::string set_to_text(const ConstantTable& t, const Bits& b) {
  std::string out = "{";
  bool first = true;
  b.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    first = false;
    out += t.name(i);
  });
  return out + "}";
}

}  // namespace

bool is_tight(const Embedding& e, const std::vector<Solution>& sols,
              const CrossOptions& opt) {
  validate_embedding(e);
  return tight_impl(freest_model(e.constants, e.rpos, opt),
                    solution_models(e, sols, opt));
}

bool is_concise(const Embedding& e, const std::vector<Solution>& sols,
                const CrossOptions& opt) {
  validate_embedding(e);
  std::vector<AtomizedModel> fsq;
  for (const auto& m : solution_models(e, sols, opt))
    fsq.push_back(restriction(m, e.interp));
  return concise_impl(e, sols, fsq, opt);
}

RestrictedAtoms residual_atoms(const Embedding& e,
                               const std::vector<Solution>& sols,
                               const CrossOptions& opt) {
  validate_embedding(e);
  AtomizedModel big = freest_model(e.constants, e.rpos, opt);
  std::vector<AtomizedModel> fsq;
  for (const auto& m : solution_models(e, sols, opt))
    fsq.push_back(restriction(m, e.interp));
  return residual_impl(restriction(big, e.interp), fsq);
}

bool is_complete(const Embedding& e, const std::vector<Solution>& sols,
                 CompleteMethod method, const CrossOptions& opt) {
  if (method == CompleteMethod::residual)
    return residual_atoms(e, sols, opt).atoms.empty();
  validate_embedding(e);
  return brute_complete_impl(e, sols, freest_model(e.constants, e.rpos, opt),
                             opt);
}

bool is_strongly_complete(const Embedding& e,
                          const std::vector<Solution>& sols,
                          const CrossOptions& opt) {
  validate_embedding(e);
  return strong_impl(freest_model(e.constants, e.rpos, opt),
                     solution_models(e, sols, opt));
}

std::optional<std::vector<Bits>> is_explicit(const Embedding& e,
                                             const std::vector<Solution>& sols,
                                             const CrossOptions& opt) {
  validate_embedding(e);
  return explicit_impl(e, sols, freest_model(e.constants, e.rpos, opt),
                       solution_models(e, sols, opt));
}

Embedding make_explicit(const Embedding& e,
                        const std::map<std::size_t, std::string>& reuse) {
  validate_embedding(e);
  for (const auto& [i, nm] : reuse) {
    if (i >= e.gamma.size())
      throw UsageError("make_explicit: reuse entry outside gamma");
    if (nm.empty()) throw UsageError("make_explicit: empty context name");
  }
  if (e.gamma.empty()) return e;
  const ConstantTable& c = *e.constants;
  std::vector<std::string> gname(e.gamma.size());
  for (std::size_t i = 0; i < e.gamma.size(); ++i) {
    auto it = reuse.find(i);
    gname[i] = it != reuse.end() ? it->second : "g" + std::to_string(i + 1);
  }
  std::vector<std::string> names = c.names();
  for (const std::string& nm : gname) {
    if (c.has(nm))
      throw UsageError("make_explicit: context name " + nm +
                       " already names a constant");
    if (std::find(names.begin() + c.size(), names.end(), nm) == names.end())
      names.push_back(nm);
  }
  TableRef nt = ConstantTable::make(std::move(names));
  Embedding out;
  out.constants = nt;
  out.interp = map_constants(c, e.interp, *nt);
  for (const Duple& d : e.rpos) out.rpos.push_back(map_duple(c, d, *nt));
  for (std::size_t i = 0; i < e.gamma.size(); ++i) {
    Duple d = map_duple(c, e.gamma[i], *nt);
    d.rhs.set(nt->id(gname[i]));
    out.rpos.push_back(d);
    out.context_map[i] = nt->id(gname[i]);
  }
  for (const Duple& d : e.rneg) out.rneg.push_back(map_duple(c, d, *nt));
  for (const Duple& d : e.gamma) out.gamma.push_back(map_duple(c, d, *nt));
  out.scope = e.scope;
  return out;
}

std::string ClassificationReport::to_text(
    const Embedding& e, const std::vector<Solution>& sols) const {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string out;
  out += std::string("concise: ") + yn(concise) + "\n";
  out += std::string("complete: ") + yn(complete) + " (";
  out += complete_method == CompleteMethod::residual ? "residual" : "bruteforce";
  out += complete_exact ? ", exact" : ", one-sided";
  out += ")\n";
  out += std::string("strongly_complete: ") + yn(strongly_complete) +
         " (model-equality)\n";
  out += "tight: ";
  out += yn(tight);
  out += "\n";
  out += "explicit: ";
  switch (explicitness) {
    case ExplicitState::no:
      out += "no";
      break;
    case ExplicitState::yes:
      out += "yes";
      break;
    case ExplicitState::unknown:
      out += "unknown";
      break;
  }
  out += "\n";
  out += "residual_atoms: " + std::to_string(residual.atoms.size()) + "\n";
  out += "solutions: " + std::to_string(sols.size()) + "\n";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    out += "S" + std::to_string(i + 1) + ": " + format_solution(e, sols[i]);
    if (explicitness == ExplicitState::yes && i < solution_k.size())
      out += "  K: " + set_to_text(*e.constants, solution_k[i]);
    out += "\n";
  }
  return out;
}

ClassificationReport classify(const Embedding& e,
                              const std::vector<Solution>& sols,
                              CompleteMethod method, const CrossOptions& opt) {
  validate_embedding(e);
  ClassificationReport rep;
  rep.complete_method = method;
  AtomizedModel big = freest_model(e.constants, e.rpos, opt);
  std::vector<AtomizedModel> fs = solution_models(e, sols, opt);
  std::vector<AtomizedModel> fsq;
  fsq.reserve(fs.size());
  for (const auto& m : fs) fsq.push_back(restriction(m, e.interp));
  rep.concise = concise_impl(e, sols, fsq, opt);
  rep.residual = residual_impl(restriction(big, e.interp), fsq);
  if (method == CompleteMethod::residual) {
    rep.complete = rep.residual.atoms.empty();
    rep.complete_exact = rep.concise;
  } else {
    rep.complete = brute_complete_impl(e, sols, big, opt);
    rep.complete_exact = true;
  }
  rep.strongly_complete = strong_impl(big, fs);
  rep.tight = tight_impl(big, fs);
  try {
    auto k = explicit_impl(e, sols, big, fs);
    if (k) {
      rep.explicitness = ExplicitState::yes;
      rep.solution_k = std::move(*k);
    } else {
      rep.explicitness = ExplicitState::no;
    }
  } catch (const ResourceLimit&) {
    rep.explicitness = ExplicitState::unknown;
  }
  return rep;
}

}  // namespace atomlat
