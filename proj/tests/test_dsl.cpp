#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "atomlat/dsl.hpp"

using namespace atomlat;

namespace {

using Names = std::vector<std::string>;

// The five trivial-example embeddings, built by hand.
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

std::string code_of(const std::string& text) {
  try {
    parse_embedding(text);
  } catch (const ParseError& p) {
    return p.code;
  }
  return "";
}

}  // namespace

TEST_CASE("parse the first trivial embedding") {
  Embedding e = parse_embedding(
      "constants: a b c\n"
      "interp: a b c\n"
      "scope: (a<=c)|(b<=c)\n"
      "gamma: a<=c; b<=c\n");
  CHECK(e == triv(1));
}

TEST_CASE("parse the second embedding relation") {
  Embedding e = parse_embedding(
      "constants: a b c d e\n"
      "interp: a b c\n"
      "pos: d<=a; d<=c; e<=b; e<=c\n"
      "gamma: a<=c; b<=c\n"
      "scope: a<=c | b<=c\n");
  CHECK(e == triv(2));
}

TEST_CASE("negative duples parse whole right-hand terms") {
  Embedding e = parse_embedding(
      "constants: a b c\n"
      "neg: a !<= b c\n");
  REQUIRE(e.rneg.size() == 1);
  CHECK(e.rneg[0] ==
        make_duple(*e.constants, {"a"}, {"b", "c"}, false));
  CHECK(e.interp == e.constants->full_set());  // interp defaults to C
}

TEST_CASE("equality sugar expands in gamma, pos and scope") {
  Embedding e = parse_embedding(
      "constants: a b\n"
      "pos: a = b\n"
      "gamma: a = b\n"
      "scope: a = b\n");
  const ConstantTable& t = *e.constants;
  CHECK(e.rpos == std::vector<Duple>{make_duple(t, {"a"}, {"b"}),
                                     make_duple(t, {"b"}, {"a"})});
  CHECK(e.gamma == e.rpos);
  CHECK(e.scope == ScopeFormula::conj_of({ScopeFormula::leaf_of(0),
                                          ScopeFormula::leaf_of(1)}));
}

TEST_CASE("scope accepts !<= and ! with precedence") {
  Embedding e = parse_embedding(
      "constants: a b c\n"
      "gamma: a<=c; b<=c\n"
      "scope: a !<= c | !b<=c & a<=c\n");
  auto l0 = ScopeFormula::leaf_of(0);
  auto l1 = ScopeFormula::leaf_of(1);
  CHECK(e.scope ==
        ScopeFormula::disj_of(
            {ScopeFormula::neg_of(l0),
             ScopeFormula::conj_of({ScopeFormula::neg_of(l1), l0})}));
}

TEST_CASE("comments, blank lines and multi-line sections") {
  Embedding e = parse_embedding(
      "# header comment\n"
      "constants: a b c d e   # inline\n"
      "\n"
      "pos:\n"
      "  d <= a;\n"
      "  d <= c;\n"
      "  e <= b;\n"
      "  e <= c\n"
      "interp: a b c\n"
      "gamma: a<=c; b<=c\n"
      "scope: a<=c|b<=c\n");
  CHECK(e == triv(2));
}

TEST_CASE("round trip is the identity on the trivial embeddings") {
  for (int i = 1; i <= 5; ++i) {
    Embedding e = triv(i);
    std::string text = serialize_embedding(e);
    Embedding back = parse_embedding(text);
    CHECK(back == e);
    CHECK(serialize_embedding(back) == text);  // byte-stable
  }
}

TEST_CASE("context section round trips") {
  Embedding e = triv(5);
  std::string text = serialize_embedding(e);
  CHECK(text.find("context: 1 g; 2 h") != std::string::npos);
  CHECK(parse_embedding(text).context_map == e.context_map);
}

TEST_CASE("diagnostic codes and positions") {
  CHECK(code_of("constants: a b\npos: x <= a\n") == "unknown_constant");
  CHECK(code_of("constants: a b\npos: <= a\n") == "malformed_term");
  CHECK(code_of("constants: a b\ngamma: a<=b\nscope: b<=a\n") ==
        "scope_leaf_not_in_gamma");
  CHECK(code_of("constants: a b\npos: a<=b\npos: b<=a\n") ==
        "duplicate_section");
  CHECK(code_of("stuff: a\n") == "unknown_section");
  CHECK(code_of("pos: a<=b\n") == "missing_constants");
  CHECK(code_of("constants: a a\n") == "duplicate_constant");
  CHECK(code_of("constants: a b\nneg: a <= b\n") == "wrong_sign");
  CHECK(code_of("constants: a b\npos: a !<= b\n") == "wrong_sign");
  CHECK(code_of("constants: a b\nneg: a = b\n") == "wrong_sign");
  CHECK(code_of("constants: a b\ngamma: a<=b\ncontext: 7 a\n") ==
        "bad_context_index");
  CHECK(code_of("constants: a b\npos: a @ b\n") == "bad_char");
  CHECK(code_of("constants: a b\ninterp: b\ngamma: a<=b\n") ==
        "gamma_outside_interp");

  try {
    parse_embedding("constants: a b\npos: x <= a\n");
    CHECK(false);
  } catch (const ParseError& p) {
    CHECK(p.line == 2);
    CHECK(p.col == 6);
    CHECK(std::string(p.what()).find("unknown constant x") !=
          std::string::npos);
  }
}

TEST_CASE("model dump round trip") {
  Embedding e2 = triv(2);
  AtomizedModel f = freest_model(e2.constants, e2.rpos);
  std::string dump = serialize_model(f);
  CHECK(dump ==
        "constants: a b c d e\n"
        "{a}\n"
        "{b}\n"
        "{c}\n"
        "{a, c, d}\n"
        "{b, c, e}\n");
  CHECK(parse_model(dump) == f);
  CHECK_THROWS_AS(parse_model("{a}\n"), ParseError);
  CHECK_THROWS_AS(parse_model("constants: a\n{b}\n"), ParseError);
}

TEST_CASE("spectrum tsv") {
  Embedding e3 = triv(3);
  AtomizedModel f = freest_model(e3.constants, e3.rpos);
  CHECK(spectrum_tsv(spectrum(f)) == "1\t3\n2\t3\n3\t2\n");
  CHECK(spectrum_tsv({}) == "");
}

TEST_CASE("solutions file round trip") {
  Embedding e = triv(5);
  std::vector<Solution> sols = {make_solution(e, {0}), make_solution(e, {1}),
                                make_solution(e, {0, 1}), make_solution(e, {})};
  std::string text = serialize_solutions(e, sols);
  CHECK(text ==
        "a <= c\n"
        "b <= c\n"
        "a <= c; b <= c\n"
        "-\n");
  CHECK(parse_solutions(text, e) == sols);
  CHECK_THROWS_AS(parse_solutions("c <= a\n", e), ParseError);
}

TEST_CASE("empty sections parse as defaults") {
  Embedding e = parse_embedding("constants: a b\npos:\ngamma:\n");
  CHECK(e.rpos.empty());
  CHECK(e.gamma.empty());
  CHECK(e.scope == ScopeFormula::always());
}
