#pragma once

#include <map>
#include <string>
#include <vector>

#include "atomlat/embedding.hpp"

namespace atomlat {

// Parse failure carrying a stable machine-readable code and the source
// position (1-based line and column).
struct ParseError : UsageError {
  ParseError(std::string code, int line, int col, const std::string& detail);

  std::string code;
  int line = 0;
  int col = 0;
};

// Embedding text format.  Sections (any order, `constants` required):
//   constants: a b c          interp: a b       pos: d <= a; d <= c
//   neg: a !<= b              gamma: a <= c; b <= c
//   scope: a <= c | b <= c    context: 1 g; 2 h
// Terms are whitespace-joined names; `x = y` expands to both directions;
// `#` starts a comment.  Scope operators: ! & | and parentheses.
Embedding parse_embedding(const std::string& text);
std::string serialize_embedding(const Embedding& e);

// Model dump: a `constants:` header plus one `{a, c}` line per atom in
// canonical order.
std::string serialize_model(const AtomizedModel& m);
AtomizedModel parse_model(const std::string& text);

// One solution per non-comment line: `-` for the empty solution, otherwise
// gamma duples separated by `;`.
std::vector<Solution> parse_solutions(const std::string& text,
                                      const Embedding& e);
std::string serialize_solutions(const Embedding& e,
                                const std::vector<Solution>& sols);

// size<TAB>count lines, sizes ascending.
std::string spectrum_tsv(const std::map<std::size_t, std::size_t>& spec);

}  // namespace atomlat
