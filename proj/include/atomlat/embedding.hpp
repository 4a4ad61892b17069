#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atomlat/model.hpp"

namespace atomlat {

// Quantifier-free scope sentence.  Leaves are indices into the embedding's
// gamma sequence; equality sugar is expanded before storage, so only positive
// duples appear at the leaves.
struct ScopeFormula {
  enum class Kind { conj, disj, neg, leaf };

  Kind kind = Kind::conj;
  std::vector<ScopeFormula> kids;  // conj/disj: any arity; neg: exactly one
  std::size_t leaf = 0;            // gamma index (leaf nodes)

  static ScopeFormula always() { return {}; }  // empty conjunction
  static ScopeFormula leaf_of(std::size_t i);
  static ScopeFormula conj_of(std::vector<ScopeFormula> ks);
  static ScopeFormula disj_of(std::vector<ScopeFormula> ks);
  static ScopeFormula neg_of(ScopeFormula k);

  friend bool operator==(const ScopeFormula& a, const ScopeFormula& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::leaf) return a.leaf == b.leaf;
    return a.kids == b.kids;
  }

  // Truth under a leaf valuation (gamma index -> bool).
  template <typename F>
  bool eval(F&& truth) const {
    switch (kind) {
      case Kind::leaf:
        return truth(leaf);
      case Kind::neg:
        return !kids[0].eval(truth);
      case Kind::conj:
        for (const auto& k : kids)
          if (!k.eval(truth)) return false;
        return true;
      case Kind::disj:
        for (const auto& k : kids)
          if (k.eval(truth)) return true;
        return false;
    }
    return false;
  }

  template <typename F>
  void for_each_leaf(F&& f) const {
    if (kind == Kind::leaf) {
      f(leaf);
      return;
    }
    for (const auto& k : kids) k.for_each_leaf(f);
  }
};

// Problem statement bundle: constants C, interpretation subset Q, relation
// R+ / R-, separator duples gamma (ordered, positive, over Q) and the scope
// sentence.  context_map records which constant was introduced for which
// gamma duple when the embedding was built explicitly.
struct Embedding {
  TableRef constants;
  Bits interp;  // Q, as ids of `constants`
  std::vector<Duple> rpos;
  std::vector<Duple> rneg;
  std::vector<Duple> gamma;
  ScopeFormula scope = ScopeFormula::always();
  std::map<std::size_t, std::uint32_t> context_map;  // gamma index -> id

  friend bool operator==(const Embedding& a, const Embedding& b);
};

// Structural invariants: Q subset of C, gamma positive and over Q, signs of
// rpos/rneg, scope leaves in range.  Throws UsageError.
void validate_embedding(const Embedding& e);

// A candidate solution: subset of gamma indices.
struct Solution {
  Bits members;  // |gamma| bits

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.members == b.members;
  }
};

Solution make_solution(const Embedding& e, std::initializer_list<std::size_t> idx);
Solution make_solution(const Embedding& e, const std::vector<std::size_t>& idx);
std::vector<Duple> solution_duples(const Embedding& e, const Solution& s);
std::string format_solution(const Embedding& e, const Solution& s);

enum class Verdict { ok, scope_fail, negative_fail };

struct ValidationResult {
  Verdict verdict = Verdict::ok;
  std::optional<Duple> failed;  // negative_fail: the unsatisfied duple
  explicit operator bool() const { return verdict == Verdict::ok; }
};

bool evaluate_scope(const ScopeFormula& xi, const std::vector<Duple>& gamma,
                    const Solution& s);
bool evaluate_scope(const ScopeFormula& xi, const std::vector<Duple>& gamma,
                    const AtomizedModel& m);
bool evaluate_scope(const Embedding& e, const Solution& s);
bool evaluate_scope(const Embedding& e, const AtomizedModel& m);

// F_S: freest model of R+ together with the selected gamma duples.
AtomizedModel freest_solution(const Embedding& e, const Solution& s,
                              const CrossOptions& opt = {});

// ok iff the S truth assignment satisfies the scope and F_S satisfies every
// negative duple and the negation of every unselected gamma duple.
ValidationResult validate_solution(const Embedding& e, const Solution& s,
                                   const CrossOptions& opt = {});

Solution induced_solution(const Embedding& e, const AtomizedModel& m);

// All valid solutions by exhaustive scan; refuses |gamma| > cap.
std::vector<Solution> enumerate_solutions(const Embedding& e,
                                          std::size_t gamma_cap = 20,
                                          const CrossOptions& opt = {});

enum class CompleteMethod { residual, bruteforce };
enum class ExplicitState { no, yes, unknown };

bool is_tight(const Embedding& e, const std::vector<Solution>& sols,
              const CrossOptions& opt = {});
bool is_concise(const Embedding& e, const std::vector<Solution>& sols,
                const CrossOptions& opt = {});

// Canonical atoms of F_C(R+)^|Q, other than the zero atom, that are external
// to every solution's restricted model.
RestrictedAtoms residual_atoms(const Embedding& e,
                               const std::vector<Solution>& sols,
                               const CrossOptions& opt = {});

bool is_complete(const Embedding& e, const std::vector<Solution>& sols,
                 CompleteMethod method = CompleteMethod::residual,
                 const CrossOptions& opt = {});
bool is_strongly_complete(const Embedding& e,
                          const std::vector<Solution>& sols,
                          const CrossOptions& opt = {});

// Per-solution witness sets K_S (aligned with sols) such that F_S is the
// grounding of F_C(R+) to K_S plus a discrete model on C - K_S.  Tries the
// context_map-derived candidate first, then searches; throws ResourceLimit
// when the search space is out of reach.
std::optional<std::vector<Bits>> is_explicit(const Embedding& e,
                                             const std::vector<Solution>& sols,
                                             const CrossOptions& opt = {});

// Adds one context constant per gamma duple (a <= b becomes a <= b g) and
// records the mapping.  `reuse` names the constant for chosen gamma indices;
// identical names share one constant.
Embedding make_explicit(const Embedding& e,
                        const std::map<std::size_t, std::string>& reuse = {});

struct ClassificationReport {
  bool concise = false;
  bool complete = false;
  CompleteMethod complete_method = CompleteMethod::residual;
  bool complete_exact = false;  // residual answer is exact only when concise
  bool strongly_complete = false;
  bool tight = false;
  ExplicitState explicitness = ExplicitState::no;
  RestrictedAtoms residual;      // over the Q subtable
  std::vector<Bits> solution_k;  // K_S per solution when explicit

  std::string to_text(const Embedding& e,
                      const std::vector<Solution>& sols) const;
};

ClassificationReport classify(const Embedding& e,
                              const std::vector<Solution>& sols,
                              CompleteMethod method = CompleteMethod::residual,
                              const CrossOptions& opt = {});

}  // namespace atomlat
