// Command line front end: generate problem embeddings, build freest models,
// print spectra, classify embeddings and search for solutions.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "atomlat/dsl.hpp"
#include "atomlat/problems.hpp"
#include "atomlat/solver.hpp"

using namespace atomlat;

namespace {

const char* kUsage = R"(usage: atomlat <command> [args]

commands:
  gen <kind> [params]           emit an embedding document
      kinds and params:
        trivial     --which 1..5
        bars        --n SIDE --variant 1|2
        nqueens     --m SIDE --variant 1|2|3 [--fixed FILE]
        sudoku      --n 4|9 [--hints FILE]
        hamiltonian --graph FILE --variant 1|2|3
      FILE may be '-' for stdin.  --fixed lines: 'i j'.  --hints lines:
      'n i j'.  --graph: first line N, then one 'u v' edge per line.
  build [file]                  freest model of the positive relation
  spectrum [file]               atom-size histogram of the freest model (TSV)
  classify [file] [--solutions FILE | --oracle]
                                classification report; --oracle enumerates
                                solutions exhaustively (small gamma only)
  solve [file] [--seeds K] [--seed S] [--grounding-priority]
                                seeded solution search; prints solutions in
                                the document solution format

common flags:
  --budget N                    atom budget (default 50000000, or the
                                ATOMLAT_BUDGET environment variable)

exit codes: 0 ok, 1 infeasible, 2 usage or parse error, 3 resource limit
)";

std::string read_stream(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return read_stream(f);
}

struct Args {
  std::vector<std::string> pos;
  std::vector<std::pair<std::string, std::string>> flags;  // in order
  bool grounding_priority = false;
  bool oracle = false;

  std::optional<std::string> flag(const std::string& name) const {
    for (const auto& [k, v] : flags)
      if (k == name) return v;
    return std::nullopt;
  }
};

long to_long(const std::string& v, const std::string& what) {
  try {
    std::size_t at = 0;
    long out = std::stol(v, &at);
    if (at != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw UsageError(what + ": not a number: " + v);
  }
}

Args parse_args(int argc, char** argv, int from) {
  Args a;
  for (int i = from; i < argc; ++i) {
    std::string s = argv[i];
    if (s == "--grounding-priority") {
      a.grounding_priority = true;
    } else if (s == "--oracle") {
      a.oracle = true;
    } else if (s.rfind("--", 0) == 0) {
      if (i + 1 >= argc) throw UsageError(s + " needs a value");
      a.flags.emplace_back(s.substr(2), argv[++i]);
    } else {
      a.pos.push_back(s);
    }
  }
  return a;
}

CrossOptions budget_options(const Args& a) {
  CrossOptions opt;
  if (const char* env = std::getenv("ATOMLAT_BUDGET"))
    opt.atom_budget = std::uint64_t(to_long(env, "ATOMLAT_BUDGET"));
  if (auto b = a.flag("budget"))
    opt.atom_budget = std::uint64_t(to_long(*b, "--budget"));
  if (opt.atom_budget == 0) throw UsageError("--budget: must be positive");
  return opt;
}

Embedding load_embedding(const Args& a) {
  std::string path = a.pos.size() > 1 ? a.pos[1] : "-";
  Embedding e = parse_embedding(read_input(path));
  validate_embedding(e);
  return e;
}

ProblemInstance gen_instance(const Args& a) {
  if (a.pos.size() < 2) throw UsageError("gen: missing kind");
  const std::string& kind = a.pos[1];
  auto intflag = [&](const char* name, long def) {
    auto v = a.flag(name);
    return v ? to_long(*v, std::string("--") + name) : def;
  };
  if (kind == "trivial")
    return ProblemInstance{TrivialSpec{int(intflag("which", 1))}};
  if (kind == "bars")
    return ProblemInstance{
        BarsSpec{int(intflag("n", 2)), int(intflag("variant", 1))}};
  if (kind == "nqueens") {
    QueensSpec q{int(intflag("m", 4)), int(intflag("variant", 1)), {}};
    if (auto f = a.flag("fixed")) {
      std::istringstream in(read_input(*f));
      int i, j;
      while (in >> i >> j) q.fixed.emplace_back(i, j);
      if (!in.eof()) throw UsageError("--fixed: expects 'i j' pairs");
    }
    return ProblemInstance{q};
  }
  if (kind == "sudoku") {
    SudokuSpec s{int(intflag("n", 4)), {}};
    if (auto f = a.flag("hints")) {
      std::istringstream in(read_input(*f));
      int n, i, j;
      while (in >> n >> i >> j) s.hints.push_back({n, i, j});
      if (!in.eof()) throw UsageError("--hints: expects 'n i j' triples");
    }
    return ProblemInstance{s};
  }
  if (kind == "hamiltonian") {
    auto f = a.flag("graph");
    if (!f) throw UsageError("gen hamiltonian: --graph FILE required");
    return ProblemInstance{
        HamiltonianSpec{parse_graph(read_input(*f)), int(intflag("variant", 1))}};
  }
  throw UsageError("gen: unknown kind " + kind);
}

int run(int argc, char** argv) {
  if (argc < 2) {
    std::cout << kUsage;
    return 2;
  }
  std::string cmd = argv[1];
  if (cmd == "--help" || cmd == "-h" || cmd == "help") {
    std::cout << kUsage;
    return 0;
  }
  Args a = parse_args(argc, argv, 1);
  CrossOptions opt = budget_options(a);

  if (cmd == "gen") {
    std::cout << serialize_embedding(build(gen_instance(a)));
    return 0;
  }
  if (cmd == "build") {
    Embedding e = load_embedding(a);
    std::cout << serialize_model(freest_model(e.constants, e.rpos, opt));
    return 0;
  }
  if (cmd == "spectrum") {
    Embedding e = load_embedding(a);
    std::cout << spectrum_tsv(spectrum(freest_model(e.constants, e.rpos, opt)));
    return 0;
  }
  if (cmd == "classify") {
    Embedding e = load_embedding(a);
    std::vector<Solution> sols;
    if (auto f = a.flag("solutions")) {
      if (a.oracle) throw UsageError("classify: --solutions or --oracle, not both");
      sols = parse_solutions(read_input(*f), e);
    } else if (a.oracle) {
      sols = enumerate_solutions(e, 20, opt);
    } else {
      throw UsageError("classify: need --solutions FILE or --oracle");
    }
    auto report = classify(e, sols, CompleteMethod::residual, opt);
    std::cout << report.to_text(e, sols);
    return 0;
  }
  if (cmd == "solve") {
    Embedding e = load_embedding(a);
    SelectionStrategy strat;
    if (a.grounding_priority)
      strat.mode = SelectionStrategy::Mode::grounding_priority;
    if (auto s = a.flag("seed"))
      strat.seed = std::uint64_t(to_long(*s, "--seed"));
    std::size_t attempts = std::size_t(to_long(
        a.flag("seeds").value_or("16"), "--seeds"));
    auto found = solve(e, strat, attempts, opt);
    if (found.empty()) throw Infeasible("no solution found");
    std::vector<Solution> sols;
    for (auto& [s, m] : found) sols.push_back(s);
    std::cout << serialize_solutions(e, sols);
    return 0;
  }
  throw UsageError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Infeasible& ex) {
    std::cerr << "infeasible: " << ex.what() << "\n";
    return 1;
  } catch (const ResourceLimit& ex) {
    std::cerr << "resource limit: " << ex.what() << "\n";
    return 3;
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return 2;
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
