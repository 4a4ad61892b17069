#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "atomlat/dsl.hpp"
#include "atomlat/embedding.hpp"

using namespace atomlat;

namespace {

using Names = std::vector<std::string>;

AtomizedModel model(const TableRef& t, const std::vector<Names>& atoms) {
  std::vector<Bits> segs;
  for (const auto& a : atoms) segs.push_back(t->set_of(a));
  return AtomizedModel::canonical(t, segs);
}

// Trivial-example embeddings: three elements a, b, c, either a or b mapped
// to c; scope (a<=c)|(b<=c), gamma {a<=c, b<=c}, interp {a,b,c}.
Embedding triv(int which) {
  Embedding e;
  switch (which) {
    case 1:
      e.constants = ConstantTable::make({"a", "b", "c"});
      break;
    case 2:
    case 4:
      e.constants = ConstantTable::make({"a", "b", "c", "d", "e"});
      break;
    case 3:
      e.constants = ConstantTable::make({"a", "b", "c", "d", "e", "m"});
      break;
    case 5:
      e.constants = ConstantTable::make({"a", "b", "c", "g", "h"});
      break;
  }
  const ConstantTable& t = *e.constants;
  e.interp = t.set_of({"a", "b", "c"});
  if (which == 2 || which == 3 || which == 4)
    e.rpos = {make_duple(t, {"d"}, {"a"}), make_duple(t, {"d"}, {"c"}),
              make_duple(t, {"e"}, {"b"}), make_duple(t, {"e"}, {"c"})};
  if (which == 3) e.rpos.push_back(make_duple(t, {"c"}, {"a", "b", "m"}));
  if (which == 4) e.rpos.push_back(make_duple(t, {"c"}, {"a", "b"}));
  if (which == 5)
    e.rpos = {make_duple(t, {"a"}, {"c", "g"}), make_duple(t, {"b"}, {"c", "h"})};
  e.gamma = {make_duple(t, {"a"}, {"c"}), make_duple(t, {"b"}, {"c"})};
  e.scope = ScopeFormula::disj_of(
      {ScopeFormula::leaf_of(0), ScopeFormula::leaf_of(1)});
  if (which == 5) e.context_map = {{0, t.id("g")}, {1, t.id("h")}};
  return e;
}

std::vector<Solution> three(const Embedding& e) {
  return {make_solution(e, {0}), make_solution(e, {1}),
          make_solution(e, {0, 1})};
}

}  // namespace

TEST_CASE("scope evaluation over solutions and models") {
  Embedding e = triv(2);
  CHECK(evaluate_scope(e, make_solution(e, {0})));
  CHECK(evaluate_scope(e, make_solution(e, {1})));
  CHECK_FALSE(evaluate_scope(e, make_solution(e, {})));

  AtomizedModel f1 = freest_solution(e, make_solution(e, {0}));
  CHECK(evaluate_scope(e, f1));

  Embedding e1 = triv(1);
  CHECK_FALSE(evaluate_scope(e1, AtomizedModel::discrete(e1.constants)));
}

TEST_CASE("freest solution models match the published atomizations") {
  Embedding e2 = triv(2);
  auto t = e2.constants;
  CHECK(freest_solution(e2, make_solution(e2, {0})) ==
        model(t, {{"a", "c"}, {"b"}, {"c"}, {"a", "c", "d"}, {"b", "c", "e"}}));
  CHECK(freest_solution(e2, make_solution(e2, {})) ==
        freest_model(t, e2.rpos));

  Embedding e5 = triv(5);
  CHECK(freest_solution(e5, make_solution(e5, {0, 1})) ==
        model(e5.constants, {{"c"}, {"g"}, {"h"}, {"a", "c"}, {"b", "c"}}));
}

TEST_CASE("validate_solution verdicts") {
  Embedding e = triv(2);
  CHECK(validate_solution(e, make_solution(e, {0})).verdict == Verdict::ok);
  CHECK(validate_solution(e, make_solution(e, {})).verdict ==
        Verdict::scope_fail);

  // A negative relation duple contradicted by the selection.
  Embedding bad;
  bad.constants = ConstantTable::make({"a", "b"});
  bad.interp = bad.constants->full_set();
  bad.rneg = {make_duple(*bad.constants, {"a"}, {"b"}, false)};
  bad.gamma = {make_duple(*bad.constants, {"a"}, {"b"})};
  auto res = bad.rneg[0];
  auto v = validate_solution(bad, make_solution(bad, {0}));
  CHECK(v.verdict == Verdict::negative_fail);
  CHECK(*v.failed == res);

  // A gamma duple outside S that the freest model still satisfies.
  Embedding forced;
  forced.constants = ConstantTable::make({"a", "b"});
  forced.interp = forced.constants->full_set();
  forced.rpos = {make_duple(*forced.constants, {"a"}, {"b"})};
  forced.gamma = {make_duple(*forced.constants, {"a"}, {"b"})};
  auto v2 = validate_solution(forced, make_solution(forced, {}));
  CHECK(v2.verdict == Verdict::negative_fail);
  CHECK(v2.failed->positive == false);
}

TEST_CASE("induced solutions") {
  Embedding e = triv(2);
  AtomizedModel f1 = freest_solution(e, make_solution(e, {0}));
  CHECK(induced_solution(e, f1) == make_solution(e, {0}));

  Embedding e1 = triv(1);
  CHECK(induced_solution(e1, AtomizedModel::discrete(e1.constants)) ==
        make_solution(e1, {}));

  // Restriction to Q still induces the same solution (name-based mapping).
  CHECK(induced_solution(e, restriction(f1, e.interp)) ==
        make_solution(e, {0}));
}

TEST_CASE("every trivial embedding has exactly the three solutions") {
  for (int i = 1; i <= 5; ++i) {
    Embedding e = triv(i);
    auto sols = enumerate_solutions(e);
    CHECK(sols == three(e));
  }
}

TEST_CASE("enumerate_solutions refuses oversized gamma") {
  Embedding e;
  e.constants = ConstantTable::make({"a", "b", "c"});
  e.interp = e.constants->full_set();
  const char* ns[] = {"a", "b", "c"};
  for (int l = 0; l < 3 && e.gamma.size() < 21; ++l)
    for (int r = 0; r < 3 && e.gamma.size() < 21; ++r) {
      if (l == r) continue;
      e.gamma.push_back(make_duple(*e.constants, {ns[l]}, {ns[r]}));
      e.gamma.push_back(
          make_duple(*e.constants, {ns[l]}, {ns[r], ns[3 - l - r]}));
      e.gamma.push_back(
          make_duple(*e.constants, {ns[l], ns[r]}, {ns[3 - l - r]}));
      e.gamma.push_back(
          make_duple(*e.constants, {ns[l], ns[r]}, {ns[r], ns[3 - l - r]}));
    }
  REQUIRE(e.gamma.size() >= 21);
  e.gamma.resize(21);
  CHECK_THROWS_AS(enumerate_solutions(e), ResourceLimit);
}

TEST_CASE("classification of the five trivial embeddings") {
  struct Want {
    bool concise, tight;
    ExplicitState ex;
  };
  const Want want[6] = {{},
                        {true, false, ExplicitState::no},
                        {true, false, ExplicitState::no},
                        {true, true, ExplicitState::no},
                        {false, true, ExplicitState::no},
                        {true, true, ExplicitState::yes}};
  for (int i = 1; i <= 5; ++i) {
    CAPTURE(i);
    Embedding e = triv(i);
    auto sols = three(e);
    ClassificationReport rep = classify(e, sols);
    CHECK(rep.concise == want[i].concise);
    CHECK(rep.complete);
    CHECK(rep.tight == want[i].tight);
    CHECK(rep.explicitness == want[i].ex);
    CHECK(rep.residual.atoms.empty());
    // The union of the three solution models reproduces the freest model.
    CHECK(rep.strongly_complete);
    // Residual and brute-force completeness agree here.
    CHECK(is_complete(e, sols, CompleteMethod::bruteforce));
  }
}

TEST_CASE("explicit witnesses of the fifth embedding") {
  Embedding e = triv(5);
  auto sols = three(e);
  auto k = is_explicit(e, sols);
  REQUIRE(k.has_value());
  const ConstantTable& t = *e.constants;
  CHECK((*k)[0] == t.set_of({"a", "b", "c", "h"}));
  CHECK((*k)[1] == t.set_of({"a", "b", "c", "g"}));
  CHECK((*k)[2] == t.set_of({"a", "b", "c"}));

  CHECK_FALSE(is_explicit(triv(1), three(triv(1))).has_value());
}

TEST_CASE("explicit search works without a context map") {
  Embedding e = triv(5);
  e.context_map.clear();
  auto k = is_explicit(e, three(e));
  REQUIRE(k.has_value());
  CHECK((*k)[2] == e.constants->set_of({"a", "b", "c"}));
}

TEST_CASE("make_explicit over the empty embedding gives the fifth") {
  Embedding e1 = triv(1);
  Embedding built = make_explicit(e1, {{0, "g"}, {1, "h"}});
  CHECK(built == triv(5));

  Embedding none = triv(1);
  none.gamma.clear();
  none.scope = ScopeFormula::always();
  CHECK(make_explicit(none) == none);

  CHECK_THROWS_AS(make_explicit(e1, {{7, "g"}}), UsageError);
  CHECK_THROWS_AS(make_explicit(e1, {{0, "a"}}), UsageError);
}

TEST_CASE("make_explicit preserves restrictions of solution models") {
  Embedding e1 = triv(1);
  Embedding e5 = make_explicit(e1, {{0, "g"}, {1, "h"}});
  for (const auto& s1 : three(e1)) {
    Solution s5{s1.members};
    AtomizedModel big = freest_solution(e5, s5);
    AtomizedModel down = restriction(big, map_constants(*e1.constants,
                                                        e1.constants->full_set(),
                                                        *e5.constants));
    CHECK(down == freest_solution(e1, s1));
  }
}

TEST_CASE("concise pairs share restricted solution models") {
  Embedding e1 = triv(1), e2 = triv(2), e3 = triv(3), e5 = triv(5);
  for (std::size_t i = 0; i < 3; ++i) {
    AtomizedModel a = restriction(freest_solution(e1, three(e1)[i]), e1.interp);
    for (Embedding* e : {&e2, &e3, &e5}) {
      AtomizedModel b =
          restriction(freest_solution(*e, three(*e)[i]), e->interp);
      CHECK(a == b);
    }
  }
  // Equal freest models restricted to Q across concise complete embeddings.
  CHECK(restriction(freest_model(e1.constants, e1.rpos), e1.interp) ==
        restriction(freest_model(e2.constants, e2.rpos), e2.interp));
}

TEST_CASE("restricted atom sets of the third and fifth embeddings agree") {
  Embedding e3 = triv(3), e5 = triv(5);
  auto r3 = restrict_atom_set(freest_model(e3.constants, e3.rpos), e3.interp);
  auto r5 = restrict_atom_set(freest_model(e5.constants, e5.rpos), e5.interp);
  REQUIRE(r3.atoms.size() == r5.atoms.size());
  for (std::size_t i = 0; i < r3.atoms.size(); ++i)
    CHECK(r3.atoms[i] == r5.atoms[i]);
}

TEST_CASE("classification report text") {
  Embedding e = triv(5);
  auto sols = three(e);
  std::string text = classify(e, sols).to_text(e, sols);
  CHECK(text.find("concise: yes\n") != std::string::npos);
  CHECK(text.find("complete: yes (residual, exact)\n") != std::string::npos);
  CHECK(text.find("tight: yes\n") != std::string::npos);
  CHECK(text.find("explicit: yes\n") != std::string::npos);
  CHECK(text.find("S3: {a <= c, b <= c}  K: {a, b, c}\n") !=
        std::string::npos);
}

TEST_CASE("embedding text format round trips through make_explicit") {
  Embedding e5 = triv(5);
  Embedding back = parse_embedding(serialize_embedding(e5));
  CHECK(back == e5);
  auto k = is_explicit(back, three(back));
  REQUIRE(k.has_value());
  CHECK((*k)[2] == back.constants->set_of({"a", "b", "c"}));
}
