#include "atomlat/problems.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "atomlat/errors.hpp"

namespace atomlat {
namespace {

std::string num(int v) { return std::to_string(v); }

Duple dup(Bits lhs, Bits rhs, bool positive = true) {
  return Duple{std::move(lhs), std::move(rhs), positive};
}

void check_solution_width(const Solution& s, std::size_t gamma_size,
                          const char* what) {
  if (s.members.size_bits() != gamma_size)
    throw UsageError(std::string(what) + ": solution width does not match");
}

// ------------------------------------------------------------------
// trivial: the five three-element example embeddings

Embedding build_trivial(const TrivialSpec& ps) {
  if (ps.which < 1 || ps.which > 5)
    throw UsageError("trivial: which must be 1..5");
  Embedding e;
  switch (ps.which) {
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
  if (ps.which >= 2 && ps.which <= 4)
    e.rpos = {make_duple(t, {"d"}, {"a"}), make_duple(t, {"d"}, {"c"}),
              make_duple(t, {"e"}, {"b"}), make_duple(t, {"e"}, {"c"})};
  if (ps.which == 3) e.rpos.push_back(make_duple(t, {"c"}, {"a", "b", "m"}));
  if (ps.which == 4) e.rpos.push_back(make_duple(t, {"c"}, {"a", "b"}));
  if (ps.which == 5)
    e.rpos = {make_duple(t, {"a"}, {"c", "g"}),
              make_duple(t, {"b"}, {"c", "h"})};
  e.gamma = {make_duple(t, {"a"}, {"c"}), make_duple(t, {"b"}, {"c"})};
  e.scope = ScopeFormula::disj_of(
      {ScopeFormula::leaf_of(0), ScopeFormula::leaf_of(1)});
  if (ps.which == 5) e.context_map = {{0, t.id("g")}, {1, t.id("h")}};
  return e;
}

// ------------------------------------------------------------------
// vertical bars: n*n pixel grid, solutions are colorings with at least one
// all-black column.  Cells are numbered 1..n*n in reading order.

struct Bars {
  BarsSpec ps;
  int cells;
  TableRef table;

  explicit Bars(const BarsSpec& s) : ps(s), cells(s.n * s.n) {
    if (ps.n < 1) throw UsageError("bars: grid side must be at least 1");
    if (ps.variant != 1 && ps.variant != 2)
      throw UsageError("bars: variant must be 1 or 2");
    if (ps.variant == 2 && ps.n > 4)
      throw ResourceLimit("bars: variant 2 enumerates 2^(n*n) example grids");
    std::vector<std::string> names;
    for (int p = 1; p <= cells; ++p)
      for (const char* k : {"q_", "w_", "b_", "g_", "h_"})
        names.push_back(k + num(p));
    if (ps.variant == 1)
      for (int j = 1; j <= ps.n; ++j) names.push_back("n_" + num(j));
    else
      names.push_back("v");
    table = ConstantTable::make(std::move(names));
  }

  std::uint32_t q(int p) const { return table->id("q_" + num(p)); }
  std::uint32_t w(int p) const { return table->id("w_" + num(p)); }
  std::uint32_t b(int p) const { return table->id("b_" + num(p)); }
  std::uint32_t g(int p) const { return table->id("g_" + num(p)); }
  std::uint32_t h(int p) const { return table->id("h_" + num(p)); }
  std::uint32_t nj(int j) const { return table->id("n_" + num(j)); }
  std::uint32_t v() const { return table->id("v"); }

  Bits one(std::uint32_t id) const {
    Bits t = table->empty_set();
    t.set(id);
    return t;
  }
  Bits pair(std::uint32_t a, std::uint32_t b2) const {
    Bits t = table->empty_set();
    t.set(a);
    t.set(b2);
    return t;
  }
  Bits all_q() const {
    Bits t = table->empty_set();
    for (int p = 1; p <= cells; ++p) t.set(q(p));
    return t;
  }

  std::size_t gamma_size() const { return 4u * cells; }
  // gamma order per cell: q<=w, w<=q, q<=b, b<=q
  std::size_t gbase(int p) const { return 4u * (p - 1); }

  bool black(unsigned mask, int p) const { return mask >> (p - 1) & 1u; }
  bool bar(unsigned mask) const {
    for (int j = 1; j <= ps.n; ++j) {
      bool all = true;
      for (int i = 1; i <= ps.n && all; ++i)
        all = black(mask, (i - 1) * ps.n + j);
      if (all) return true;
    }
    return false;
  }
  Bits pixels(unsigned mask) const {
    Bits t = table->empty_set();
    for (int p = 1; p <= cells; ++p) t.set(black(mask, p) ? b(p) : w(p));
    return t;
  }

  Embedding embedding() const {
    Embedding e;
    e.constants = table;
    e.interp = table->empty_set();
    for (int p = 1; p <= cells; ++p) {
      e.interp.set(q(p));
      e.interp.set(w(p));
      e.interp.set(b(p));
    }
    for (int p = 1; p <= cells; ++p) {
      e.gamma.push_back(dup(one(q(p)), one(w(p))));
      e.gamma.push_back(dup(one(w(p)), one(q(p))));
      e.gamma.push_back(dup(one(q(p)), one(b(p))));
      e.gamma.push_back(dup(one(b(p)), one(q(p))));
      e.context_map[gbase(p)] = g(p);
      e.context_map[gbase(p) + 1] = g(p);
      e.context_map[gbase(p) + 2] = h(p);
      e.context_map[gbase(p) + 3] = h(p);
    }
    std::vector<ScopeFormula> cells_f;
    for (int p = 1; p <= cells; ++p) {
      auto L = [&](std::size_t k) {
        return ScopeFormula::leaf_of(gbase(p) + k);
      };
      cells_f.push_back(ScopeFormula::disj_of(
          {ScopeFormula::conj_of({L(0), L(1)}),
           ScopeFormula::conj_of({L(2), L(3)})}));
    }
    e.scope = ScopeFormula::conj_of(std::move(cells_f));

    if (ps.variant == 1) {
      for (int j = 1; j <= ps.n; ++j)
        for (int i = 1; i <= ps.n; ++i)
          e.rpos.push_back(dup(one(nj(j)), one(w((i - 1) * ps.n + j))));
    } else {
      unsigned total = 1u << cells;
      for (unsigned m = 0; m < total; ++m)
        if (bar(m)) e.rpos.push_back(dup(one(v()), pixels(m)));
      for (unsigned m = 0; m < total; ++m)
        if (!bar(m)) e.rneg.push_back(dup(one(v()), pixels(m), false));
      e.rpos.push_back(dup(one(v()), all_q()));
    }
    for (int p = 1; p <= cells; ++p)
      e.rpos.push_back(dup(one(q(p)), pair(w(p), b(p))));
    for (int p = 1; p <= cells; ++p) {
      Bits gq = pair(g(p), q(p)), wg = pair(w(p), g(p));
      Bits hq = pair(h(p), q(p)), bh = pair(b(p), h(p));
      e.rpos.push_back(dup(gq, wg));
      e.rpos.push_back(dup(wg, gq));
      e.rpos.push_back(dup(hq, bh));
      e.rpos.push_back(dup(bh, hq));
    }
    if (ps.variant == 1) {
      Bits alln = table->empty_set();
      for (int j = 1; j <= ps.n; ++j) alln.set(nj(j));
      e.rneg.push_back(dup(std::move(alln), all_q(), false));
    }
    for (int p = 1; p <= cells; ++p)
      e.rneg.push_back(dup(pair(w(p), b(p)), all_q(), false));
    return e;
  }

  Solution solution(unsigned mask) const {
    Solution s{Bits(gamma_size())};
    for (int p = 1; p <= cells; ++p) {
      std::size_t base = gbase(p);
      if (black(mask, p)) {
        s.members.set(base + 2);
        s.members.set(base + 3);
      } else {
        s.members.set(base);
        s.members.set(base + 1);
      }
    }
    return s;
  }

  std::vector<Solution> oracle() const {
    if (cells > 25) throw ResourceLimit("bars: oracle enumerates 2^(n*n) grids");
    std::vector<Solution> out;
    for (unsigned m = 0; m < 1u << cells; ++m)
      if (bar(m)) out.push_back(solution(m));
    return out;
  }

  std::string decode(const Solution& s) const {
    check_solution_width(s, gamma_size(), "bars decode");
    std::string out;
    bool incomplete = false;
    for (int i = 1; i <= ps.n; ++i) {
      for (int j = 1; j <= ps.n; ++j) {
        std::size_t base = gbase((i - 1) * ps.n + j);
        bool white = s.members.test(base) && s.members.test(base + 1);
        bool blackc = s.members.test(base + 2) && s.members.test(base + 3);
        char c = '?';
        if (white && !blackc) c = 'w';
        if (blackc && !white) c = 'b';
        if (c == '?') incomplete = true;
        out += c;
      }
      out += '\n';
    }
    if (incomplete) out += "incomplete\n";
    return out;
  }

  // Sentences v <= t_1 ... t_cells with t_p one of q_p, b_p, w_p that hold in
  // every solution model; substituting q by b (and, next to a black column,
  // one q by w) keeps the sentence true.
  Embedding strengthen(const Embedding& e, const CrossOptions& opt) const {
    if (ps.variant != 2)
      throw UsageError("strengthen: bars recipe applies to variant 2");
    std::vector<AtomizedModel> fs;
    for (const Solution& s : oracle()) fs.push_back(freest_solution(e, s, opt));
    Embedding out = e;
    long total = 1;
    for (int p = 0; p < cells; ++p) total *= 3;
    for (long c = 1; c < total; ++c) {
      Bits term = table->empty_set();
      long rest = c;
      bool some_q = false, some_sub = false;
      for (int p = 1; p <= cells; ++p) {
        int digit = rest % 3;
        rest /= 3;
        if (digit == 0) term.set(q(p));
        if (digit == 1) term.set(b(p));
        if (digit == 2) term.set(w(p));
        (digit == 0 ? some_q : some_sub) = true;
      }
      // proper substitutions only: all-pixel terms restate the example grids
      if (!some_q || !some_sub) continue;
      Duple d = dup(one(v()), std::move(term));
      bool everywhere = true;
      for (const auto& f : fs)
        if (!holds(f, d)) {
          everywhere = false;
          break;
        }
      if (everywhere) out.rpos.push_back(std::move(d));
    }
    return out;
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> conflicts() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (int p = 1; p <= cells; ++p) out.emplace_back(g(p), h(p));
    return out;
  }
};

// ------------------------------------------------------------------
// n-queens completion: m*m board, fixed queens, non-attacking placement.

struct Queens {
  QueensSpec ps;
  TableRef table;

  explicit Queens(const QueensSpec& s) : ps(s) {
    if (ps.m < 1) throw UsageError("queens: board side must be at least 1");
    if (ps.variant < 1 || ps.variant > 3)
      throw UsageError("queens: variant must be 1..3");
    if (ps.variant != 1 && ps.m < 2)
      throw UsageError("queens: variants 2 and 3 need a board side of 2+");
    for (auto [i, j] : ps.fixed)
      if (i < 1 || i > ps.m || j < 1 || j > ps.m)
        throw UsageError("queens: fixed queen outside the board");
    for (std::size_t a = 0; a < ps.fixed.size(); ++a)
      for (std::size_t b2 = a + 1; b2 < ps.fixed.size(); ++b2) {
        auto [i, j] = ps.fixed[a];
        auto [r, c] = ps.fixed[b2];
        if ((i == r && j == c) || attacks(i, j, r, c))
          throw UsageError("queens: fixed queens attack each other");
      }
    std::vector<std::string> names = {"B"};
    if (ps.variant == 3) names.push_back("U");
    for (int i = 1; i <= ps.m; ++i) {
      names.push_back("R_" + num(i));
      names.push_back("C_" + num(i));
    }
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j)
        for (const char* k : {"Q_", "E_", "g_", "h_"})
          names.push_back(k + num(i) + "_" + num(j));
    table = ConstantTable::make(std::move(names));
  }

  static bool attacks(int i, int j, int r, int c) {
    if (i == r && j == c) return false;
    return i == r || j == c || i - r == j - c || i - r == c - j;
  }

  std::string cell(const char* k, int i, int j) const {
    return k + num(i) + "_" + num(j);
  }
  std::uint32_t Q(int i, int j) const { return table->id(cell("Q_", i, j)); }
  std::uint32_t E(int i, int j) const { return table->id(cell("E_", i, j)); }
  std::uint32_t g(int i, int j) const { return table->id(cell("g_", i, j)); }
  std::uint32_t h(int i, int j) const { return table->id(cell("h_", i, j)); }
  std::uint32_t B() const { return table->id("B"); }
  std::uint32_t R(int i) const { return table->id("R_" + num(i)); }
  std::uint32_t C(int j) const { return table->id("C_" + num(j)); }

  Bits term(std::vector<std::uint32_t> ids) const {
    Bits t = table->empty_set();
    for (auto i : ids) t.set(i);
    return t;
  }
  Bits rhs_b(std::vector<std::uint32_t> ids) const {
    ids.push_back(B());
    if (ps.variant == 3) ids.push_back(table->id("U"));
    return term(std::move(ids));
  }

  std::size_t gidx(int i, int j) const {
    return std::size_t(i - 1) * ps.m + (j - 1);
  }
  std::size_t gamma_size() const { return 2u * ps.m * ps.m; }

  Embedding embedding() const {
    Embedding e;
    e.constants = table;
    e.interp = table->empty_set();
    e.interp.set(B());
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j) {
        e.interp.set(Q(i, j));
        e.interp.set(E(i, j));
      }
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j) {
        e.gamma.push_back(dup(term({Q(i, j)}), term({B()})));
        e.context_map[gidx(i, j)] = g(i, j);
      }
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j) {
        e.gamma.push_back(dup(term({E(i, j)}), term({B()})));
        e.context_map[ps.m * ps.m + gidx(i, j)] = h(i, j);
      }
    std::vector<ScopeFormula> cf;
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j)
        cf.push_back(ScopeFormula::disj_of(
            {ScopeFormula::leaf_of(gidx(i, j)),
             ScopeFormula::leaf_of(ps.m * ps.m + gidx(i, j))}));
    e.scope = ScopeFormula::conj_of(std::move(cf));

    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j)
        e.rpos.push_back(dup(term({g(i, j), Q(i, j)}), term({B(), g(i, j)})));
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j)
        e.rpos.push_back(dup(term({h(i, j), E(i, j)}), term({B(), h(i, j)})));
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j)
        e.rpos.push_back(dup(term({R(i), C(j)}), term({Q(i, j)})));
    for (auto [i, j] : ps.fixed)
      e.rpos.push_back(dup(term({Q(i, j)}), term({B()})));
    if (ps.variant >= 2) {
      for (int i = 1; i <= ps.m; ++i)
        for (int j = 1; j <= ps.m; ++j) {
          std::vector<std::uint32_t> att;
          for (int r = 1; r <= ps.m; ++r)
            for (int c = 1; c <= ps.m; ++c)
              if (attacks(i, j, r, c)) att.push_back(E(r, c));
          e.rpos.push_back(dup(term(std::move(att)), rhs_b({Q(i, j)})));
        }
      for (int i = 1; i <= ps.m; ++i)
        for (int j = 1; j <= ps.m; ++j) {
          std::vector<std::uint32_t> row;
          for (int s = 1; s <= ps.m; ++s)
            if (s != j) row.push_back(E(i, s));
          e.rpos.push_back(dup(term({Q(i, j)}), rhs_b(std::move(row))));
        }
      for (int i = 1; i <= ps.m; ++i)
        for (int j = 1; j <= ps.m; ++j) {
          std::vector<std::uint32_t> col;
          for (int r = 1; r <= ps.m; ++r)
            if (r != i) col.push_back(E(r, j));
          e.rpos.push_back(dup(term({Q(i, j)}), rhs_b(std::move(col))));
        }
    }
    {
      std::vector<std::uint32_t> rc;
      for (int i = 1; i <= ps.m; ++i) rc.push_back(R(i));
      for (int j = 1; j <= ps.m; ++j) rc.push_back(C(j));
      e.rpos.push_back(dup(term(std::move(rc)), term({B()})));
    }

    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j) {
        Bits rhs = ps.variant == 3 ? rhs_b({}) : term({B()});
        e.rneg.push_back(
            dup(term({Q(i, j), E(i, j)}), std::move(rhs), false));
      }
    if (ps.variant == 1) {
      for (int a = 0; a < ps.m * ps.m; ++a)
        for (int b2 = a + 1; b2 < ps.m * ps.m; ++b2) {
          int i = a / ps.m + 1, j = a % ps.m + 1;
          int r = b2 / ps.m + 1, c = b2 % ps.m + 1;
          if (attacks(i, j, r, c))
            e.rneg.push_back(
                dup(term({Q(i, j), Q(r, c)}), term({B()}), false));
        }
    }
    std::vector<std::uint32_t> alle;
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j) alle.push_back(E(i, j));
    for (int x = 1; x <= ps.m; ++x) {
      std::vector<std::uint32_t> ids = alle;
      for (int i = 1; i <= ps.m; ++i)
        for (int j = 1; j <= ps.m; ++j)
          if (i != x) ids.push_back(Q(i, j));
      e.rneg.push_back(dup(term({R(x)}), term(std::move(ids)), false));
    }
    for (int y = 1; y <= ps.m; ++y) {
      std::vector<std::uint32_t> ids = alle;
      for (int i = 1; i <= ps.m; ++i)
        for (int j = 1; j <= ps.m; ++j)
          if (j != y) ids.push_back(Q(i, j));
      e.rneg.push_back(dup(term({C(y)}), term(std::move(ids)), false));
    }
    return e;
  }

  void backtrack(int row, std::vector<int>& cols, unsigned usedc, unsigned d1,
                 unsigned d2, const std::vector<int>& forced,
                 std::vector<std::vector<int>>& out) const {
    if (row > ps.m) {
      out.push_back(cols);
      return;
    }
    for (int j = 1; j <= ps.m; ++j) {
      if (forced[row] && forced[row] != j) continue;
      unsigned cb = 1u << j, b1 = 1u << (row + j), b2 = 1u << (row - j + ps.m);
      if ((usedc & cb) || (d1 & b1) || (d2 & b2)) continue;
      cols[row] = j;
      backtrack(row + 1, cols, usedc | cb, d1 | b1, d2 | b2, forced, out);
      cols[row] = 0;
    }
  }

  std::vector<std::vector<int>> boards() const {
    std::vector<int> forced(ps.m + 1, 0);
    for (auto [i, j] : ps.fixed) forced[i] = j;
    std::vector<int> cols(ps.m + 1, 0);
    std::vector<std::vector<int>> out;
    backtrack(1, cols, 0, 0, 0, forced, out);
    return out;
  }

  Solution solution(const std::vector<int>& cols) const {
    Solution s{Bits(gamma_size())};
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j) {
        if (cols[i] == j)
          s.members.set(gidx(i, j));
        else
          s.members.set(ps.m * ps.m + gidx(i, j));
      }
    return s;
  }

  std::vector<Solution> oracle() const {
    std::vector<Solution> out;
    for (const auto& b2 : boards()) out.push_back(solution(b2));
    return out;
  }

  std::string decode(const Solution& s) const {
    check_solution_width(s, gamma_size(), "queens decode");
    std::string out;
    bool incomplete = false;
    for (int i = 1; i <= ps.m; ++i) {
      for (int j = 1; j <= ps.m; ++j) {
        bool qq = s.members.test(gidx(i, j));
        bool ee = s.members.test(ps.m * ps.m + gidx(i, j));
        char c = qq && !ee ? 'Q' : (ee && !qq ? '.' : '?');
        if (c == '?') incomplete = true;
        out += c;
      }
      out += '\n';
    }
    if (incomplete) out += "incomplete\n";
    return out;
  }

  std::optional<Solution> decode_atom(const Bits& seg) const {
    Solution s{Bits(gamma_size())};
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j) {
        bool qq = seg.test(Q(i, j)), ee = seg.test(E(i, j));
        if (qq == ee) return std::nullopt;
        if (qq)
          s.members.set(ps.m * ps.m + gidx(i, j));  // queen missing here
        else
          s.members.set(gidx(i, j));
      }
    return s;
  }

  // Join of the squares that stay empty in every completion.
  Embedding strengthen(const Embedding& e) const {
    auto bs = boards();
    if (bs.empty()) return e;
    std::vector<std::uint32_t> shared;
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j) {
        bool queen_somewhere = false;
        for (const auto& cols : bs)
          if (cols[i] == j) {
            queen_somewhere = true;
            break;
          }
        if (!queen_somewhere) shared.push_back(E(i, j));
      }
    if (shared.empty() || shared.size() == std::size_t(ps.m) * ps.m) return e;
    Embedding out = e;
    out.rpos.push_back(dup(term(std::move(shared)), rhs_b({})));
    return out;
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> conflicts() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (int i = 1; i <= ps.m; ++i)
      for (int j = 1; j <= ps.m; ++j) out.emplace_back(g(i, j), h(i, j));
    return out;
  }
};

// ------------------------------------------------------------------
// sudoku completion on a 4x4 or 9x9 grid.

struct Sudoku {
  SudokuSpec ps;
  int sub;
  TableRef table;

  explicit Sudoku(const SudokuSpec& s) : ps(s) {
    if (ps.n != 4 && ps.n != 9)
      throw UsageError("sudoku: grid side must be 4 or 9");
    sub = ps.n == 4 ? 2 : 3;
    std::set<std::pair<int, int>> seen;
    for (auto [n, i, j] : ps.hints) {
      if (n < 1 || n > ps.n || i < 1 || i > ps.n || j < 1 || j > ps.n)
        throw UsageError("sudoku: hint outside the grid");
      if (!seen.insert({i, j}).second)
        throw UsageError("sudoku: two hints on one cell");
    }
    for (std::size_t a = 0; a < ps.hints.size(); ++a)
      for (std::size_t b2 = a + 1; b2 < ps.hints.size(); ++b2) {
        auto [n1, i1, j1] = ps.hints[a];
        auto [n2, i2, j2] = ps.hints[b2];
        if (n1 == n2 && (i1 == i2 || j1 == j2 || z(i1, j1) == z(i2, j2)))
          throw UsageError("sudoku: conflicting hints");
      }
    std::vector<std::string> names = {"G"};
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i) {
        names.push_back("R_" + num(n) + "_" + num(i));
        names.push_back("C_" + num(n) + "_" + num(i));
        names.push_back("Z_" + num(n) + "_" + num(i));
        for (int j = 1; j <= ps.n; ++j)
          for (const char* k : {"N_", "W_", "g_"})
            names.push_back(k + num(n) + "_" + num(i) + "_" + num(j));
      }
    table = ConstantTable::make(std::move(names));
  }

  int z(int i, int j) const {
    return sub * ((i - 1) / sub) + (j - 1) / sub + 1;
  }
  std::string c3(const char* k, int n, int i, int j) const {
    return k + num(n) + "_" + num(i) + "_" + num(j);
  }
  std::uint32_t N(int n, int i, int j) const { return table->id(c3("N_", n, i, j)); }
  std::uint32_t W(int n, int i, int j) const { return table->id(c3("W_", n, i, j)); }
  std::uint32_t g(int n, int i, int j) const { return table->id(c3("g_", n, i, j)); }
  std::uint32_t R(int n, int i) const { return table->id("R_" + num(n) + "_" + num(i)); }
  std::uint32_t C(int n, int j) const { return table->id("C_" + num(n) + "_" + num(j)); }
  std::uint32_t Z(int n, int k) const { return table->id("Z_" + num(n) + "_" + num(k)); }
  std::uint32_t G() const { return table->id("G"); }

  Bits term(std::vector<std::uint32_t> ids) const {
    Bits t = table->empty_set();
    for (auto i : ids) t.set(i);
    return t;
  }

  bool attack_cells(int i, int j, int r, int c) const {
    if (i == r && j == c) return false;
    return i == r || j == c || z(i, j) == z(r, c);
  }

  std::size_t gidx(int n, int i, int j) const {
    return (std::size_t(n - 1) * ps.n + (i - 1)) * ps.n + (j - 1);
  }
  std::size_t gamma_size() const {
    return std::size_t(ps.n) * ps.n * ps.n;
  }

  Embedding embedding() const {
    Embedding e;
    e.constants = table;
    e.interp = table->empty_set();
    e.interp.set(G());
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j) e.interp.set(N(n, i, j));
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j) {
          e.gamma.push_back(dup(term({N(n, i, j)}), term({G()})));
          e.context_map[gidx(n, i, j)] = g(n, i, j);
        }
    std::vector<ScopeFormula> cf;
    for (int i = 1; i <= ps.n; ++i)
      for (int j = 1; j <= ps.n; ++j) {
        std::vector<ScopeFormula> alt;
        for (int n = 1; n <= ps.n; ++n)
          alt.push_back(ScopeFormula::leaf_of(gidx(n, i, j)));
        cf.push_back(ScopeFormula::disj_of(std::move(alt)));
      }
    e.scope = ScopeFormula::conj_of(std::move(cf));

    auto others = [&](int n, int i, int j) {
      std::vector<std::uint32_t> ids;
      for (int m = 1; m <= ps.n; ++m)
        if (m != n) ids.push_back(W(m, i, j));
      return ids;
    };
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j)
          e.rpos.push_back(
              dup(term(others(n, i, j)), term({N(n, i, j), G()})));
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j) {
          auto ids = others(n, i, j);
          ids.push_back(G());
          e.rpos.push_back(dup(term({N(n, i, j)}), term(std::move(ids))));
        }
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j)
          e.rpos.push_back(dup(term({R(n, i), C(n, j), Z(n, z(i, j))}),
                               term({N(n, i, j)})));
    for (auto [n, i, j] : ps.hints)
      e.rpos.push_back(dup(term({N(n, i, j)}), term({G()})));
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j) {
          std::vector<std::uint32_t> att;
          for (int r = 1; r <= ps.n; ++r)
            for (int c = 1; c <= ps.n; ++c)
              if (attack_cells(i, j, r, c)) att.push_back(W(n, r, c));
          e.rpos.push_back(
              dup(term(std::move(att)), term({N(n, i, j), G()})));
        }
    auto line_form = [&](int n, int i, int j, bool row) {
      std::vector<std::uint32_t> ids;
      for (int k = 1; k <= ps.n; ++k) {
        if (row && k != j) ids.push_back(W(n, i, k));
        if (!row && k != i) ids.push_back(W(n, k, j));
      }
      ids.push_back(G());
      e.rpos.push_back(dup(term({N(n, i, j)}), term(std::move(ids))));
    };
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j) line_form(n, i, j, true);
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j) line_form(n, i, j, false);
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j) {
          std::vector<std::uint32_t> ids;
          for (int r = 1; r <= ps.n; ++r)
            for (int c = 1; c <= ps.n; ++c)
              if (z(r, c) == z(i, j) && !(r == i && c == j))
                ids.push_back(W(n, r, c));
          ids.push_back(G());
          e.rpos.push_back(dup(term({N(n, i, j)}), term(std::move(ids))));
        }
    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j)
          e.rpos.push_back(
              dup(term({N(n, i, j)}), term({G(), g(n, i, j)})));
    {
      std::vector<std::uint32_t> ids;
      for (int n = 1; n <= ps.n; ++n)
        for (int i = 1; i <= ps.n; ++i) {
          ids.push_back(R(n, i));
          ids.push_back(C(n, i));
          ids.push_back(Z(n, i));
        }
      e.rpos.push_back(dup(term(std::move(ids)), term({G()})));
    }

    for (int n = 1; n <= ps.n; ++n)
      for (int i = 1; i <= ps.n; ++i)
        for (int j = 1; j <= ps.n; ++j)
          e.rneg.push_back(
              dup(term({N(n, i, j), W(n, i, j)}), term({G()}), false));
    auto all_n_except = [&](auto&& keep) {
      std::vector<std::uint32_t> ids;
      for (int n = 1; n <= ps.n; ++n)
        for (int i = 1; i <= ps.n; ++i)
          for (int j = 1; j <= ps.n; ++j)
            if (!keep(n, i, j)) ids.push_back(N(n, i, j));
      return ids;
    };
    for (int m = 1; m <= ps.n; ++m)
      for (int x = 1; x <= ps.n; ++x)
        e.rneg.push_back(dup(
            term({R(m, x)}),
            term(all_n_except([&](int n, int i, int) { return n == m && i == x; })),
            false));
    for (int m = 1; m <= ps.n; ++m)
      for (int y = 1; y <= ps.n; ++y)
        e.rneg.push_back(dup(
            term({C(m, y)}),
            term(all_n_except([&](int n, int, int j) { return n == m && j == y; })),
            false));
    for (int m = 1; m <= ps.n; ++m)
      for (int k = 1; k <= ps.n; ++k)
        e.rneg.push_back(dup(
            term({Z(m, k)}),
            term(all_n_except(
                [&](int n, int i, int j) { return n == m && z(i, j) == k; })),
            false));
    for (int i = 1; i <= ps.n; ++i)
      for (int j = 1; j <= ps.n; ++j) {
        std::vector<std::uint32_t> ids;
        for (int n = 1; n <= ps.n; ++n) ids.push_back(W(n, i, j));
        e.rneg.push_back(dup(term(std::move(ids)), term({G()}), false));
      }
    return e;
  }

  void backtrack(int cellpos, std::vector<int>& grid,
                 std::vector<std::vector<int>>& out) const {
    if (cellpos == ps.n * ps.n) {
      out.push_back(grid);
      return;
    }
    int i = cellpos / ps.n + 1, j = cellpos % ps.n + 1;
    if (grid[cellpos]) {
      backtrack(cellpos + 1, grid, out);
      return;
    }
    for (int n = 1; n <= ps.n; ++n) {
      bool ok = true;
      for (int p = 0; p < ps.n * ps.n && ok; ++p) {
        if (grid[p] != n) continue;
        int r = p / ps.n + 1, c = p % ps.n + 1;
        ok = !(r == i || c == j || z(r, c) == z(i, j));
      }
      if (!ok) continue;
      grid[cellpos] = n;
      backtrack(cellpos + 1, grid, out);
      grid[cellpos] = 0;
    }
  }

  std::vector<std::vector<int>> grids() const {
    std::vector<int> grid(ps.n * ps.n, 0);
    for (auto [n, i, j] : ps.hints) grid[(i - 1) * ps.n + (j - 1)] = n;
    std::vector<std::vector<int>> out;
    backtrack(0, grid, out);
    return out;
  }

  Solution solution(const std::vector<int>& grid) const {
    Solution s{Bits(gamma_size())};
    for (int i = 1; i <= ps.n; ++i)
      for (int j = 1; j <= ps.n; ++j)
        s.members.set(gidx(grid[(i - 1) * ps.n + (j - 1)], i, j));
    return s;
  }

  std::vector<Solution> oracle() const {
    std::vector<Solution> out;
    for (const auto& g2 : grids()) out.push_back(solution(g2));
    return out;
  }

  std::string decode(const Solution& s) const {
    check_solution_width(s, gamma_size(), "sudoku decode");
    std::string out;
    bool incomplete = false;
    for (int i = 1; i <= ps.n; ++i) {
      for (int j = 1; j <= ps.n; ++j) {
        int found = 0, which = 0;
        for (int n = 1; n <= ps.n; ++n)
          if (s.members.test(gidx(n, i, j))) {
            ++found;
            which = n;
          }
        if (found == 1) {
          out += char('0' + which);
        } else {
          out += '?';
          incomplete = true;
        }
      }
      out += '\n';
    }
    if (incomplete) out += "incomplete\n";
    return out;
  }

  std::optional<Solution> decode_atom(const Bits& seg) const {
    Solution s{Bits(gamma_size())};
    for (int i = 1; i <= ps.n; ++i)
      for (int j = 1; j <= ps.n; ++j) {
        int found = 0, which = 0;
        for (int n = 1; n <= ps.n; ++n)
          if (seg.test(W(n, i, j))) {
            ++found;
            which = n;
          }
        if (found != 1) return std::nullopt;
        s.members.set(gidx(which, i, j));
      }
    return s;
  }

  // Kills the oversized atoms of the freest relation model with sentences of
  // the shapes W <= N W G and W <= W W G over a single cell, keeping only
  // sentences that hold in every solution model.
  Embedding strengthen(const Embedding& e, const CrossOptions& opt) const {
    auto sols = oracle();
    if (sols.empty())
      throw Infeasible("strengthen: sudoku instance has no solutions");
    AtomizedModel uni = freest_solution(e, sols[0], opt);
    for (std::size_t s = 1; s < sols.size(); ++s)
      uni = model_sum(uni, freest_solution(e, sols[s], opt));
    std::size_t umax = 0;
    for (std::size_t a = 0; a < uni.atom_count(); ++a)
      umax = std::max(umax, uni.atom_size(a));
    AtomizedModel f = freest_model(e.constants, e.rpos, opt);

    std::vector<Duple> cands;
    for (int i = 1; i <= ps.n; ++i)
      for (int j = 1; j <= ps.n; ++j) {
        for (int n = 1; n <= ps.n; ++n)
          for (int m = 1; m <= ps.n; ++m)
            if (m != n)
              cands.push_back(dup(term({W(n, i, j)}),
                                  term({N(m, i, j), W(m, i, j), G()})));
        for (int n = 1; n <= ps.n; ++n)
          for (int m = 1; m <= ps.n; ++m)
            for (int m2 = m + 1; m2 <= ps.n; ++m2)
              if (m != n && m2 != n)
                cands.push_back(dup(term({W(n, i, j)}),
                                    term({W(m, i, j), W(m2, i, j), G()})));
      }

    Embedding out = e;
    std::vector<const Duple*> chosen;
    for (std::size_t a = 0; a < f.atom_count(); ++a) {
      if (f.atom_size(a) <= umax) continue;
      auto killed = [&](const Duple& d) {
        return atom_below(f.atom(a), d.lhs) && !atom_below(f.atom(a), d.rhs);
      };
      bool done = false;
      for (const Duple* d : chosen)
        if (killed(*d)) {
          done = true;
          break;
        }
      if (done) continue;
      for (const Duple& d : cands)
        if (killed(d) && holds(uni, d)) {
          chosen.push_back(&d);
          out.rpos.push_back(d);
          done = true;
          break;
        }
      if (!done)
        throw UsageError(
            "strengthen: no single-cell sentence separates an oversized atom");
    }
    return out;
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> conflicts() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (int i = 1; i <= ps.n; ++i)
      for (int j = 1; j <= ps.n; ++j)
        for (int n = 1; n <= ps.n; ++n)
          for (int m = n + 1; m <= ps.n; ++m)
            out.emplace_back(g(n, i, j), g(m, i, j));
    return out;
  }
};

// ------------------------------------------------------------------
// hamiltonian path on an undirected graph.

struct Ham {
  HamiltonianSpec ps;
  int N, E;
  std::vector<std::pair<int, int>> edges;        // 1-based, u < v
  std::vector<std::vector<int>> incident;        // vertex -> edge ids
  std::map<std::pair<int, int>, int> edge_id;
  TableRef table;

  explicit Ham(const HamiltonianSpec& s) : ps(s), N(s.graph.n) {
    if (ps.variant < 1 || ps.variant > 3)
      throw UsageError("hamiltonian: variant must be 1..3");
    if (N < 2) throw UsageError("hamiltonian: need at least two vertices");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : ps.graph.edges) {
      if (u < 1 || u > N || v < 1 || v > N)
        throw UsageError("hamiltonian: edge endpoint outside the graph");
      if (u == v) throw UsageError("hamiltonian: self loops are not allowed");
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second)
        throw UsageError("hamiltonian: duplicate edge");
      edges.emplace_back(u, v);
    }
    E = int(edges.size());
    if (E < 1) throw UsageError("hamiltonian: need at least one edge");
    incident.assign(N + 1, {});
    for (int k = 1; k <= E; ++k) {
      incident[edges[k - 1].first].push_back(k);
      incident[edges[k - 1].second].push_back(k);
      edge_id[edges[k - 1]] = k;
    }
    std::vector<std::string> names = {"P", "U", "x"};
    for (int i = 1; i <= N; ++i) names.push_back("v_" + num(i));
    for (int k = 1; k <= E; ++k) names.push_back("e_" + num(k));
    if (ps.variant == 1 || ps.variant == 2)
      for (int k = 1; k <= E; ++k) names.push_back("g_" + num(k));
    if (ps.variant >= 2) {
      for (int i = 1; i <= N; ++i) names.push_back("w_" + num(i));
      for (int l = 1; l <= N - 1; ++l) names.push_back("p_" + num(l));
    }
    if (ps.variant == 3)
      for (int k = 1; k <= E; ++k)
        for (int l = 1; l <= N - 1; ++l) {
          names.push_back("h_" + num(k) + "_" + num(l) + "_0");
          names.push_back("h_" + num(k) + "_" + num(l) + "_1");
        }
    table = ConstantTable::make(std::move(names));
  }

  std::uint32_t e_(int k) const { return table->id("e_" + num(k)); }
  std::uint32_t v_(int i) const { return table->id("v_" + num(i)); }
  std::uint32_t g_(int k) const { return table->id("g_" + num(k)); }
  std::uint32_t w_(int i) const { return table->id("w_" + num(i)); }
  std::uint32_t p_(int l) const { return table->id("p_" + num(l)); }
  std::uint32_t h_(int k, int l, int o) const {
    return table->id("h_" + num(k) + "_" + num(l) + "_" + num(o));
  }
  std::uint32_t P() const { return table->id("P"); }
  std::uint32_t U() const { return table->id("U"); }
  std::uint32_t x() const { return table->id("x"); }

  Bits term(std::vector<std::uint32_t> ids) const {
    Bits t = table->empty_set();
    for (auto i : ids) t.set(i);
    return t;
  }

  // gamma layout
  std::size_t vw(int i, int j) const {
    return 2u * (std::size_t(i - 1) * N + (j - 1));
  }
  std::size_t ep(int l, int k) const {
    return 2u * std::size_t(N) * N + 2u * (std::size_t(l - 1) * E + (k - 1));
  }
  std::size_t gamma_size() const {
    if (ps.variant == 3)
      return 2u * std::size_t(N) * N + 2u * std::size_t(N - 1) * E;
    return E;
  }

  Embedding embedding() const {
    Embedding e;
    e.constants = table;
    e.interp = table->empty_set();
    if (ps.variant == 3) {
      for (int i = 1; i <= N; ++i) {
        e.interp.set(v_(i));
        e.interp.set(w_(i));
      }
      for (int k = 1; k <= E; ++k) e.interp.set(e_(k));
      for (int l = 1; l <= N - 1; ++l) e.interp.set(p_(l));
    } else {
      for (int k = 1; k <= E; ++k) e.interp.set(e_(k));
      e.interp.set(P());
    }

    if (ps.variant == 3) {
      for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
          e.gamma.push_back(dup(term({v_(i)}), term({w_(j)})));
          e.gamma.push_back(dup(term({w_(j)}), term({v_(i)})));
        }
      for (int l = 1; l <= N - 1; ++l)
        for (int k = 1; k <= E; ++k) {
          e.gamma.push_back(dup(term({e_(k)}), term({p_(l)})));
          e.gamma.push_back(dup(term({p_(l)}), term({e_(k)})));
        }
      std::vector<ScopeFormula> parts;
      for (int i = 1; i <= N; ++i) {
        std::vector<ScopeFormula> alt;
        for (int j = 1; j <= N; ++j)
          alt.push_back(ScopeFormula::conj_of(
              {ScopeFormula::leaf_of(vw(i, j)),
               ScopeFormula::leaf_of(vw(i, j) + 1)}));
        parts.push_back(ScopeFormula::disj_of(std::move(alt)));
      }
      for (int l = 1; l <= N - 1; ++l) {
        std::vector<ScopeFormula> alt;
        for (int k = 1; k <= E; ++k)
          alt.push_back(ScopeFormula::conj_of(
              {ScopeFormula::leaf_of(ep(l, k)),
               ScopeFormula::leaf_of(ep(l, k) + 1)}));
        parts.push_back(ScopeFormula::disj_of(std::move(alt)));
      }
      e.scope = ScopeFormula::conj_of(std::move(parts));
    } else {
      for (int k = 1; k <= E; ++k) {
        e.gamma.push_back(dup(term({e_(k)}), term({P()})));
        e.context_map[k - 1] = g_(k);
      }
      std::vector<ScopeFormula> parts;
      for (int i = 1; i <= N; ++i) {
        std::vector<ScopeFormula> alt;
        for (int k : incident[i])
          alt.push_back(ScopeFormula::leaf_of(k - 1));
        parts.push_back(ScopeFormula::disj_of(std::move(alt)));
      }
      e.scope = ScopeFormula::conj_of(std::move(parts));
    }

    for (int k = 1; k <= E; ++k)
      e.rpos.push_back(dup(term({v_(edges[k - 1].first), v_(edges[k - 1].second)}),
                           term({e_(k), U()})));
    for (int i = 1; i <= N; ++i) {
      const auto& inc = incident[i];
      for (std::size_t a = 0; a < inc.size(); ++a)
        for (std::size_t b2 = a + 1; b2 < inc.size(); ++b2)
          for (std::size_t c = b2 + 1; c < inc.size(); ++c)
            e.rpos.push_back(dup(
                term({x()}), term({e_(inc[a]), e_(inc[b2]), e_(inc[c])})));
    }
    if (ps.variant >= 2) {
      for (int i = 1; i <= N - 1; ++i)
        e.rpos.push_back(
            dup(term({w_(i), w_(i + 1)}), term({p_(i), U()})));
      std::vector<std::uint32_t> allp;
      for (int l = 1; l <= N - 1; ++l) allp.push_back(p_(l));
      e.rpos.push_back(dup(term({P()}), term(allp)));
      e.rpos.push_back(dup(term(allp), term({P()})));
      std::vector<std::uint32_t> allv, allw;
      for (int i = 1; i <= N; ++i) {
        allv.push_back(v_(i));
        allw.push_back(w_(i));
      }
      e.rpos.push_back(dup(term(allv), term(allw)));
      e.rpos.push_back(dup(term(allw), term(allv)));
    }
    if (ps.variant <= 2) {
      for (int k = 1; k <= E; ++k)
        e.rpos.push_back(dup(term({e_(k)}), term({P(), g_(k)})));
    } else {
      for (int k = 1; k <= E; ++k)
        for (int l = 1; l <= N - 1; ++l)
          for (int o = 0; o <= 1; ++o) {
            std::uint32_t h = h_(k, l, o);
            int left = o == 0 ? edges[k - 1].first : edges[k - 1].second;
            int right = o == 0 ? edges[k - 1].second : edges[k - 1].first;
            auto both = [&](std::uint32_t a, std::uint32_t b2) {
              e.rpos.push_back(dup(term({h, a}), term({b2, h})));
              e.rpos.push_back(dup(term({b2, h}), term({h, a})));
            };
            both(e_(k), p_(l));
            both(v_(left), w_(l));
            both(v_(right), w_(l + 1));
          }
    }
    {
      std::vector<std::uint32_t> allv;
      for (int i = 1; i <= N; ++i) allv.push_back(v_(i));
      e.rpos.push_back(dup(term(std::move(allv)), term({P(), U()})));
    }

    for (int i = 1; i <= N; ++i) {
      std::vector<std::uint32_t> ids;
      for (int k = 1; k <= E; ++k)
        if (edges[k - 1].first != i && edges[k - 1].second != i)
          ids.push_back(e_(k));
      for (int j = 1; j <= N; ++j)
        if (j != i) ids.push_back(v_(j));
      ids.push_back(U());
      e.rneg.push_back(dup(term({v_(i)}), term(std::move(ids)), false));
    }
    e.rneg.push_back(dup(term({x()}), term({P(), U()}), false));
    if (ps.variant >= 2) {
      // w_i sits in the chain sentences for p_(i-1) and p_i; every other
      // position stays on the right side of its separating negative.  Once
      // the separator identifies w_i with a path vertex (variant 3) the
      // right side has to list the other position constants, not the
      // vertexes, or no labeling of the path could ever satisfy it.
      for (int i = 1; i <= N; ++i) {
        std::vector<std::uint32_t> ids;
        for (int k = 1; k <= N - 1; ++k)
          if (k != i - 1 && k != i) ids.push_back(p_(k));
        for (int j = 1; j <= N; ++j)
          if (j != i) ids.push_back(ps.variant == 3 ? w_(j) : v_(j));
        ids.push_back(U());
        e.rneg.push_back(dup(term({w_(i)}), term(std::move(ids)), false));
      }
    }
    return e;
  }

  // Degree-bounded edge covers: every vertex on one or two selected edges.
  std::vector<Solution> oracle_cover() const {
    if (E > 25) throw ResourceLimit("hamiltonian: cover oracle enumerates 2^E");
    std::vector<Solution> out;
    for (unsigned m = 0; m < 1u << E; ++m) {
      std::vector<int> deg(N + 1, 0);
      for (int k = 1; k <= E; ++k)
        if (m >> (k - 1) & 1u) {
          ++deg[edges[k - 1].first];
          ++deg[edges[k - 1].second];
        }
      bool ok = true;
      for (int i = 1; i <= N && ok; ++i) ok = deg[i] >= 1 && deg[i] <= 2;
      if (!ok) continue;
      Solution s{Bits(gamma_size())};
      for (int k = 1; k <= E; ++k)
        if (m >> (k - 1) & 1u) s.members.set(k - 1);
      out.push_back(s);
    }
    return out;
  }

  void paths(int at, std::vector<int>& seq, std::vector<char>& used,
             std::vector<std::vector<int>>& out) const {
    if (int(seq.size()) == N) {
      out.push_back(seq);
      return;
    }
    for (int k : incident[at]) {
      int other = edges[k - 1].first == at ? edges[k - 1].second
                                           : edges[k - 1].first;
      if (used[other]) continue;
      used[other] = 1;
      seq.push_back(other);
      paths(other, seq, used, out);
      seq.pop_back();
      used[other] = 0;
    }
  }

  std::vector<std::vector<int>> all_paths() const {
    std::vector<std::vector<int>> out;
    std::vector<char> used(N + 1, 0);
    std::vector<int> seq;
    for (int s = 1; s <= N; ++s) {
      used[s] = 1;
      seq.push_back(s);
      paths(s, seq, used, out);
      seq.pop_back();
      used[s] = 0;
    }
    return out;
  }

  Solution solution_path(const std::vector<int>& seq) const {
    Solution s{Bits(gamma_size())};
    for (int j = 1; j <= N; ++j) {
      s.members.set(vw(seq[j - 1], j));
      s.members.set(vw(seq[j - 1], j) + 1);
    }
    for (int l = 1; l <= N - 1; ++l) {
      int u = seq[l - 1], v = seq[l];
      if (u > v) std::swap(u, v);
      int k = edge_id.at({u, v});
      s.members.set(ep(l, k));
      s.members.set(ep(l, k) + 1);
    }
    return s;
  }

  std::vector<Solution> oracle() const {
    if (ps.variant != 3) return oracle_cover();
    std::vector<Solution> out;
    for (const auto& seq : all_paths()) out.push_back(solution_path(seq));
    return out;
  }

  std::vector<int> vertices_of(const Solution& s) const {
    std::vector<int> seq(N + 1, 0);
    for (int j = 1; j <= N; ++j) {
      int found = 0;
      for (int i = 1; i <= N; ++i)
        if (s.members.test(vw(i, j)) && s.members.test(vw(i, j) + 1)) {
          ++found;
          seq[j] = i;
        }
      if (found != 1) return {};
    }
    return {seq.begin() + 1, seq.end()};
  }

  std::string decode(const Solution& s) const {
    check_solution_width(s, gamma_size(), "hamiltonian decode");
    std::string out;
    if (ps.variant != 3) {
      out = "edges:";
      for (int k = 1; k <= E; ++k)
        if (s.members.test(k - 1))
          out += " " + num(edges[k - 1].first) + "-" + num(edges[k - 1].second);
      out += '\n';
      return out;
    }
    bool incomplete = false;
    out = "path:";
    auto seq = vertices_of(s);
    for (int j = 1; j <= N; ++j) {
      if (!seq.empty()) {
        out += " " + num(seq[j - 1]);
        continue;
      }
      int found = 0, which = 0;
      for (int i = 1; i <= N; ++i)
        if (s.members.test(vw(i, j)) && s.members.test(vw(i, j) + 1)) {
          ++found;
          which = i;
        }
      if (found == 1) {
        out += " " + num(which);
      } else {
        out += " ?";
        incomplete = true;
      }
    }
    out += "\nedges:";
    for (int l = 1; l <= N - 1; ++l) {
      int found = 0, which = 0;
      for (int k = 1; k <= E; ++k)
        if (s.members.test(ep(l, k)) && s.members.test(ep(l, k) + 1)) {
          ++found;
          which = k;
        }
      if (found == 1) {
        out += " " + num(edges[which - 1].first) + "-" +
               num(edges[which - 1].second);
      } else {
        out += " ?";
        incomplete = true;
      }
    }
    out += '\n';
    if (incomplete) out += "incomplete\n";
    return out;
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> conflicts() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    if (ps.variant != 3) return out;
    for (int k = 1; k <= E; ++k)
      for (int l = 1; l <= N - 1; ++l) out.emplace_back(h_(k, l, 0), h_(k, l, 1));
    for (int k = 1; k <= E; ++k)
      for (int l = 1; l <= N - 1; ++l)
        for (int l2 = l + 1; l2 <= N - 1; ++l2)
          for (int o = 0; o <= 1; ++o)
            for (int o2 = 0; o2 <= 1; ++o2)
              out.emplace_back(h_(k, l, o), h_(k, l2, o2));
    for (int l = 1; l <= N - 1; ++l)
      for (int k = 1; k <= E; ++k)
        for (int k2 = k + 1; k2 <= E; ++k2)
          for (int o = 0; o <= 1; ++o)
            for (int o2 = 0; o2 <= 1; ++o2)
              out.emplace_back(h_(k, l, o), h_(k2, l, o2));
    return out;
  }
};

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  Graph g;
  if (!(in >> g.n)) throw UsageError("graph: missing vertex count");
  int u, v;
  while (in >> u) {
    if (!(in >> v)) throw UsageError("graph: dangling edge endpoint");
    g.edges.emplace_back(u, v);
  }
  if (!in.eof()) throw UsageError("graph: trailing junk");
  return g;
}

Embedding build(const ProblemInstance& inst) {
  if (auto* p = std::get_if<TrivialSpec>(&inst.spec)) return build_trivial(*p);
  if (auto* p = std::get_if<BarsSpec>(&inst.spec)) return Bars(*p).embedding();
  if (auto* p = std::get_if<QueensSpec>(&inst.spec))
    return Queens(*p).embedding();
  if (auto* p = std::get_if<SudokuSpec>(&inst.spec))
    return Sudoku(*p).embedding();
  return Ham(std::get<HamiltonianSpec>(inst.spec)).embedding();
}

std::vector<Solution> oracle_solve(const ProblemInstance& inst) {
  if (std::get_if<TrivialSpec>(&inst.spec)) {
    Embedding e = build(inst);
    return {make_solution(e, {0}), make_solution(e, {1}),
            make_solution(e, {0, 1})};
  }
  if (auto* p = std::get_if<BarsSpec>(&inst.spec)) return Bars(*p).oracle();
  if (auto* p = std::get_if<QueensSpec>(&inst.spec)) return Queens(*p).oracle();
  if (auto* p = std::get_if<SudokuSpec>(&inst.spec)) return Sudoku(*p).oracle();
  return Ham(std::get<HamiltonianSpec>(inst.spec)).oracle();
}

std::string decode(const ProblemInstance& inst, const Embedding& e,
                   const Solution& s) {
  if (std::get_if<TrivialSpec>(&inst.spec)) return format_solution(e, s);
  if (auto* p = std::get_if<BarsSpec>(&inst.spec)) return Bars(*p).decode(s);
  if (auto* p = std::get_if<QueensSpec>(&inst.spec))
    return Queens(*p).decode(s);
  if (auto* p = std::get_if<SudokuSpec>(&inst.spec))
    return Sudoku(*p).decode(s);
  return Ham(std::get<HamiltonianSpec>(inst.spec)).decode(s);
}

std::optional<Solution> decode_atom(const ProblemInstance& inst,
                                    const Embedding& e, const Bits& segment) {
  if (segment.size_bits() != e.constants->size())
    throw UsageError("decode_atom: segment width does not match the table");
  if (auto* p = std::get_if<QueensSpec>(&inst.spec))
    return Queens(*p).decode_atom(segment);
  if (auto* p = std::get_if<SudokuSpec>(&inst.spec))
    return Sudoku(*p).decode_atom(segment);
  throw UsageError("decode_atom: no atom reading for this problem");
}

std::vector<int> path_vertices(const ProblemInstance& inst, const Embedding& e,
                               const Solution& s) {
  auto* p = std::get_if<HamiltonianSpec>(&inst.spec);
  if (!p || p->variant != 3)
    throw UsageError("path_vertices: hamiltonian variant 3 only");
  Ham L(*p);
  check_solution_width(s, L.gamma_size(), "path_vertices");
  (void)e;
  return L.vertices_of(s);
}

Embedding strengthen(const ProblemInstance& inst, const Embedding& e,
                     const CrossOptions& opt) {
  if (auto* p = std::get_if<BarsSpec>(&inst.spec))
    return Bars(*p).strengthen(e, opt);
  if (auto* p = std::get_if<QueensSpec>(&inst.spec))
    return Queens(*p).strengthen(e);
  if (auto* p = std::get_if<SudokuSpec>(&inst.spec))
    return Sudoku(*p).strengthen(e, opt);
  throw UsageError("strengthen: no recipe for this problem");
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> conflict_pairs(
    const ProblemInstance& inst, const Embedding& e) {
  (void)e;
  if (auto* p = std::get_if<BarsSpec>(&inst.spec)) return Bars(*p).conflicts();
  if (auto* p = std::get_if<QueensSpec>(&inst.spec))
    return Queens(*p).conflicts();
  if (auto* p = std::get_if<SudokuSpec>(&inst.spec))
    return Sudoku(*p).conflicts();
  if (auto* p = std::get_if<HamiltonianSpec>(&inst.spec))
    return Ham(*p).conflicts();
  return {};
}

}  // namespace atomlat
