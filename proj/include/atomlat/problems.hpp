#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "atomlat/embedding.hpp"

namespace atomlat {

// Worked problem encoders.  Each build() emits the documented duple blocks in
// a fixed order with deterministic constant naming, so freest models and
// serialized embeddings are stable across runs.

struct TrivialSpec {
  int which = 1;  // 1..5, the five three-element example embeddings
};

struct BarsSpec {
  int n = 2;        // grid side
  int variant = 1;  // 1: formal rules with column constants; 2: by examples
};

struct QueensSpec {
  int m = 4;
  int variant = 1;  // 1: attacks as negatives; 2: positive encoding; 3: +U
  std::vector<std::pair<int, int>> fixed;  // 1-based (row, col) queens
};

struct SudokuSpec {
  int n = 4;                                // 4 or 9
  std::vector<std::array<int, 3>> hints;    // {number, row, col}, 1-based
};

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;   // 1-based, u < v after validation
};

struct HamiltonianSpec {
  Graph graph;
  int variant = 1;  // 1: covering path set; 2: +sequence constants; 3: full
};

struct ProblemInstance {
  std::variant<TrivialSpec, BarsSpec, QueensSpec, SudokuSpec, HamiltonianSpec>
      spec;
};

// `N` on the first line, one `u v` edge per following line.
Graph parse_graph(const std::string& text);

Embedding build(const ProblemInstance& inst);

// Independent ground truth: backtracking (queens, sudoku, paths) or
// exhaustive scan (grids, edge subsets), expressed as gamma selections of the
// built embedding.  Deterministic order.
std::vector<Solution> oracle_solve(const ProblemInstance& inst);

// ASCII rendering of a solution; cells a failed scope leaves undecided render
// as '?' and the text gains a trailing "incomplete" line.
std::string decode(const ProblemInstance& inst, const Embedding& e,
                   const Solution& s);

// Reads a solution out of one atom segment (queens variant 2/3 full-board
// atoms, sudoku full-grid atoms).  nullopt when the segment does not encode a
// board.
std::optional<Solution> decode_atom(const ProblemInstance& inst,
                                    const Embedding& e, const Bits& segment);

// Hamiltonian variant 3: vertex sequence along the path positions; empty when
// the solution leaves a position unassigned.
std::vector<int> path_vertices(const ProblemInstance& inst, const Embedding& e,
                               const Solution& s);

// Documented strengthening recipes: queens variant 1 (join of shared empty
// squares), vertical bars variant 2 (the q -> b substitution family), sudoku
// (sentences derived from the oversized atoms of the freest model).  The
// number of added duples is rpos size difference.
Embedding strengthen(const ProblemInstance& inst, const Embedding& e,
                     const CrossOptions& opt = {});

// Context constant pairs that cannot be grounded together; feeds the solver's
// grounding-priority selection.
std::vector<std::pair<std::uint32_t, std::uint32_t>> conflict_pairs(
    const ProblemInstance& inst, const Embedding& e);

}  // namespace atomlat
