#include "atomlat/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <span>
#include <string>

namespace atomlat {

ParseError::ParseError(std::string code_, int line_, int col_,
                       const std::string& detail)
    : UsageError(std::to_string(line_) + ":" + std::to_string(col_) + ": [" +
                 code_ + "] " + detail),
      code(std::move(code_)),
      line(line_),
      col(col_) {}

namespace {

struct Tok {
  enum Type { name, le, nle, eq, semi, amp, pipe, bang, lp, rp, colon, end };
  Type type = end;
  std::string text;
  int line = 1, col = 1;
};

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Tok> tokenize(const std::string& text) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok::Type t, std::string s, int l, int c) {
    out.push_back({t, std::move(s), l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const int l = line, k = col;
    if (name_char(c)) {
      std::size_t j = i;
      while (j < text.size() && name_char(text[j])) ++j;
      push(Tok::name, text.substr(i, j - i), l, k);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
      push(Tok::le, "<=", l, k);
      i += 2;
      col += 2;
      continue;
    }
    if (c == '!' && i + 2 < text.size() && text[i + 1] == '<' &&
        text[i + 2] == '=') {
      push(Tok::nle, "!<=", l, k);
      i += 3;
      col += 3;
      continue;
    }
    Tok::Type t;
    switch (c) {
      case '=': t = Tok::eq; break;
      case ';': t = Tok::semi; break;
      case '&': t = Tok::amp; break;
      case '|': t = Tok::pipe; break;
      case '!': t = Tok::bang; break;
      case '(': t = Tok::lp; break;
      case ')': t = Tok::rp; break;
      case ':': t = Tok::colon; break;
      default:
        throw ParseError("bad_char", l, k,
                         std::string("unexpected character '") + c + "'");
    }
    push(t, std::string(1, c), l, k);
    ++i;
    ++col;
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

struct Cursor {
  std::span<const Tok> toks;
  std::size_t i = 0;

  const Tok& peek() const { return toks[i]; }
  const Tok& next() { return toks[i == toks.size() - 1 ? i : i++]; }
  bool at_end() const { return toks[i].type == Tok::end; }
};

[[noreturn]] void fail(const Tok& t, const std::string& code,
                       const std::string& detail) {
  throw ParseError(code, t.line, t.col, detail);
}

Term parse_term(Cursor& c, const ConstantTable& t) {
  if (c.peek().type != Tok::name)
    fail(c.peek(), "malformed_term", "expected a constant name");
  Term out = t.empty_set();
  while (c.peek().type == Tok::name) {
    const Tok& tk = c.next();
    if (!t.has(tk.text))
      fail(tk, "unknown_constant", "unknown constant " + tk.text);
    out.set(t.id(tk.text));
  }
  return out;
}

enum class Sign { positive, negative };

// One duple statement; `=` (when allowed) contributes both directions.
void parse_duple_into(Cursor& c, const ConstantTable& t, Sign want,
                      bool allow_eq, std::vector<Duple>& out) {
  Term lhs = parse_term(c, t);
  const Tok& op = c.next();
  if (op.type != Tok::le && op.type != Tok::nle && op.type != Tok::eq)
    fail(op, "malformed_term", "expected <=, !<= or = after a term");
  Term rhs = parse_term(c, t);
  if (op.type == Tok::eq) {
    if (want != Sign::positive || !allow_eq)
      fail(op, "wrong_sign", "= is not allowed in this section");
    out.push_back({lhs, rhs, true});
    out.push_back({rhs, lhs, true});
    return;
  }
  const bool pos = op.type == Tok::le;
  if (pos != (want == Sign::positive))
    fail(op, "wrong_sign",
         pos ? "expected a negative duple" : "expected a positive duple");
  out.push_back({std::move(lhs), std::move(rhs), pos});
}

std::vector<Duple> parse_duples(Cursor c, const ConstantTable& t, Sign want,
                                bool allow_eq) {
  std::vector<Duple> out;
  while (!c.at_end()) {
    parse_duple_into(c, t, want, allow_eq, out);
    if (c.peek().type == Tok::semi) {
      c.next();
      continue;
    }
    if (!c.at_end()) fail(c.peek(), "unexpected_token", "expected ; or end");
  }
  return out;
}

std::size_t leaf_index(const std::vector<Duple>& gamma, const Duple& d,
                       const Tok& at) {
  auto it = std::find(gamma.begin(), gamma.end(), d);
  if (it == gamma.end())
    fail(at, "scope_leaf_not_in_gamma", "scope leaf is not a gamma duple");
  return static_cast<std::size_t>(it - gamma.begin());
}

// expr := and ('|' and)* ; and := unary ('&' unary)* ;
// unary := '!' unary | '(' expr ')' | term (<=|!<=|=) term
ScopeFormula parse_scope_expr(Cursor& c, const ConstantTable& t,
                              const std::vector<Duple>& gamma);

ScopeFormula parse_scope_unary(Cursor& c, const ConstantTable& t,
                               const std::vector<Duple>& gamma) {
  const Tok& tk = c.peek();
  if (tk.type == Tok::bang) {
    c.next();
    return ScopeFormula::neg_of(parse_scope_unary(c, t, gamma));
  }
  if (tk.type == Tok::lp) {
    c.next();
    ScopeFormula f = parse_scope_expr(c, t, gamma);
    if (c.peek().type != Tok::rp)
      fail(c.peek(), "unexpected_token", "expected )");
    c.next();
    return f;
  }
  Term lhs = parse_term(c, t);
  const Tok& op = c.next();
  if (op.type != Tok::le && op.type != Tok::nle && op.type != Tok::eq)
    fail(op, "malformed_term", "expected <=, !<= or = after a term");
  Term rhs = parse_term(c, t);
  if (op.type == Tok::eq) {
    std::size_t a = leaf_index(gamma, {lhs, rhs, true}, op);
    std::size_t b = leaf_index(gamma, {rhs, lhs, true}, op);
    return ScopeFormula::conj_of(
        {ScopeFormula::leaf_of(a), ScopeFormula::leaf_of(b)});
  }
  ScopeFormula leaf =
      ScopeFormula::leaf_of(leaf_index(gamma, {lhs, rhs, true}, op));
  if (op.type == Tok::nle) return ScopeFormula::neg_of(std::move(leaf));
  return leaf;
}

ScopeFormula parse_scope_expr(Cursor& c, const ConstantTable& t,
                              const std::vector<Duple>& gamma) {
  auto parse_and = [&]() {
    std::vector<ScopeFormula> ks;
    ks.push_back(parse_scope_unary(c, t, gamma));
    while (c.peek().type == Tok::amp) {
      c.next();
      ks.push_back(parse_scope_unary(c, t, gamma));
    }
    return ScopeFormula::conj_of(std::move(ks));
  };
  std::vector<ScopeFormula> ks;
  ks.push_back(parse_and());
  while (c.peek().type == Tok::pipe) {
    c.next();
    ks.push_back(parse_and());
  }
  return ScopeFormula::disj_of(std::move(ks));
}

const char* const kSections[] = {"constants", "interp", "pos", "neg",
                                 "gamma",     "scope",  "context"};

bool known_section(const std::string& s) {
  for (const char* k : kSections)
    if (s == k) return true;
  return false;
}

// Splits the token stream into sections keyed by header keyword.  A header
// is a keyword name directly followed by ':'; content may not contain ':'.
std::map<std::string, std::vector<Tok>> split_sections(
    const std::vector<Tok>& toks) {
  std::map<std::string, std::vector<Tok>> out;
  std::size_t i = 0;
  if (toks[0].type != Tok::end &&
      (toks[0].type != Tok::name || toks[1].type != Tok::colon))
    fail(toks[0], "unexpected_token", "expected a section header");
  while (toks[i].type != Tok::end) {
    const Tok& head = toks[i];
    if (!known_section(head.text))
      fail(head, "unknown_section", "unknown section " + head.text);
    if (out.count(head.text))
      fail(head, "duplicate_section", "duplicate section " + head.text);
    i += 2;
    const std::size_t start = i;
    while (toks[i].type != Tok::end &&
           !(toks[i].type == Tok::name && toks[i + 1].type == Tok::colon)) {
      if (toks[i].type == Tok::colon)
        fail(toks[i], "unexpected_token", "stray ':'");
      ++i;
    }
    std::vector<Tok> content(toks.begin() + start, toks.begin() + i);
    Tok sentinel;
    sentinel.type = Tok::end;
    sentinel.line = toks[i].line;
    sentinel.col = toks[i].col;
    content.push_back(sentinel);
    out[head.text] = std::move(content);
  }
  return out;
}

}  // namespace

Embedding parse_embedding(const std::string& text) {
  std::vector<Tok> toks = tokenize(text);
  auto sections = split_sections(toks);

  auto section = [&](const char* k) -> const std::vector<Tok>* {
    auto it = sections.find(k);
    return it == sections.end() ? nullptr : &it->second;
  };

  const std::vector<Tok>* cs = section("constants");
  if (!cs) fail(toks.back(), "missing_constants", "no constants section");
  std::vector<std::string> names;
  {
    Cursor c{*cs, 0};
    while (!c.at_end()) {
      const Tok& tk = c.next();
      if (tk.type != Tok::name)
        fail(tk, "unexpected_token", "expected a constant name");
      if (std::find(names.begin(), names.end(), tk.text) != names.end())
        fail(tk, "duplicate_constant", "duplicate constant " + tk.text);
      names.push_back(tk.text);
    }
    if (names.empty())
      fail(cs->back(), "malformed_term", "constants section is empty");
  }
  TableRef table = ConstantTable::make(names);

  Embedding e;
  e.constants = table;
  e.interp = table->full_set();
  if (const auto* s = section("interp")) {
    Cursor c{*s, 0};
    Bits q = table->empty_set();
    while (!c.at_end()) {
      const Tok& tk = c.next();
      if (tk.type != Tok::name)
        fail(tk, "unexpected_token", "expected a constant name");
      if (!table->has(tk.text))
        fail(tk, "unknown_constant", "unknown constant " + tk.text);
      q.set(table->id(tk.text));
    }
    if (q.none()) fail(s->back(), "malformed_term", "interp section is empty");
    e.interp = std::move(q);
  }

  if (const auto* s = section("pos"))
    e.rpos = parse_duples(Cursor{*s, 0}, *table, Sign::positive, true);
  if (const auto* s = section("neg"))
    e.rneg = parse_duples(Cursor{*s, 0}, *table, Sign::negative, false);
  if (const auto* s = section("gamma")) {
    e.gamma = parse_duples(Cursor{*s, 0}, *table, Sign::positive, true);
    for (const Duple& d : e.gamma)
      if (!d.lhs.is_subset_of(e.interp) || !d.rhs.is_subset_of(e.interp))
        fail(s->front(), "gamma_outside_interp",
             "gamma duple " + format_duple(*table, d) +
                 " uses constants outside interp");
  }
  if (const auto* s = section("scope"); s && s->size() > 1) {
    Cursor c{*s, 0};
    e.scope = parse_scope_expr(c, *table, e.gamma);
    if (!c.at_end())
      fail(c.peek(), "unexpected_token", "trailing tokens after scope");
  }
  if (const auto* s = section("context")) {
    Cursor c{*s, 0};
    while (!c.at_end()) {
      const Tok& itk = c.next();
      if (itk.type != Tok::name ||
          !std::all_of(itk.text.begin(), itk.text.end(), [](char ch) {
            return std::isdigit(static_cast<unsigned char>(ch));
          }))
        fail(itk, "bad_context_index", "expected a 1-based gamma index");
      const std::size_t idx = std::stoul(itk.text);
      if (idx < 1 || idx > e.gamma.size())
        fail(itk, "bad_context_index", "gamma index out of range");
      if (e.context_map.count(idx - 1))
        fail(itk, "duplicate_context_index",
             "context already set for index " + itk.text);
      const Tok& ntk = c.next();
      if (ntk.type != Tok::name)
        fail(ntk, "unexpected_token", "expected a constant name");
      if (!table->has(ntk.text))
        fail(ntk, "unknown_constant", "unknown constant " + ntk.text);
      e.context_map[idx - 1] = table->id(ntk.text);
      if (c.peek().type == Tok::semi) c.next();
    }
  }
  validate_embedding(e);
  return e;
}

namespace {

// Precedence levels for minimal-parenthesis printing.
int scope_level(const ScopeFormula& f) {
  switch (f.kind) {
    case ScopeFormula::Kind::disj: return 0;
    case ScopeFormula::Kind::conj: return 1;
    case ScopeFormula::Kind::neg: return 2;
    case ScopeFormula::Kind::leaf: return 3;
  }
  return 3;
}

void scope_text(const ScopeFormula& f, const ConstantTable& t,
                const std::vector<Duple>& gamma, int parent,
                std::string& out) {
  const int lvl = scope_level(f);
  const bool wrap = lvl < parent;
  if (wrap) out += "(";
  switch (f.kind) {
    case ScopeFormula::Kind::leaf:
      out += format_duple(t, gamma[f.leaf]);
      break;
    case ScopeFormula::Kind::neg:
      out += "!";
      scope_text(f.kids[0], t, gamma, 2, out);
      break;
    case ScopeFormula::Kind::conj:
    case ScopeFormula::Kind::disj: {
      const char* op = f.kind == ScopeFormula::Kind::conj ? " & " : " | ";
      const int kidlvl = lvl + 1;
      for (std::size_t i = 0; i < f.kids.size(); ++i) {
        if (i) out += op;
        scope_text(f.kids[i], t, gamma, kidlvl, out);
      }
      break;
    }
  }
  if (wrap) out += ")";
}

void duple_section(const char* name, const ConstantTable& t,
                   const std::vector<Duple>& ds, std::string& out) {
  if (ds.empty()) return;
  out += name;
  out += ":\n";
  for (const Duple& d : ds) {
    out += "  ";
    out += format_duple(t, d);
    out += ";\n";
  }
}

}  // namespace

std::string serialize_embedding(const Embedding& e) {
  validate_embedding(e);
  const ConstantTable& t = *e.constants;
  std::string out = "constants:";
  for (const auto& n : t.names()) {
    out += " ";
    out += n;
  }
  out += "\n";
  if (!(e.interp == t.full_set())) {
    out += "interp:";
    e.interp.for_each([&](std::size_t i) {
      out += " ";
      out += t.name(i);
    });
    out += "\n";
  }
  duple_section("pos", t, e.rpos, out);
  duple_section("neg", t, e.rneg, out);
  duple_section("gamma", t, e.gamma, out);
  if (!(e.scope == ScopeFormula::always())) {
    out += "scope: ";
    scope_text(e.scope, t, e.gamma, 0, out);
    out += "\n";
  }
  if (!e.context_map.empty()) {
    out += "context:";
    bool first = true;
    for (const auto& [i, id] : e.context_map) {
      out += first ? " " : "; ";
      first = false;
      out += std::to_string(i + 1);
      out += " ";
      out += t.name(id);
    }
    out += "\n";
  }
  return out;
}

std::string serialize_model(const AtomizedModel& m) {
  if (!m.table()) throw UsageError("serialize_model: empty model");
  const ConstantTable& t = *m.table();
  std::string out = "constants:";
  for (const auto& n : t.names()) {
    out += " ";
    out += n;
  }
  out += "\n";
  for (std::size_t i = 0; i < m.atom_count(); ++i) {
    Bits seg = m.atom_bits(i);
    out += "{";
    bool first = true;
    seg.for_each([&](std::size_t c) {
      if (!first) out += ", ";
      first = false;
      out += t.name(c);
    });
    out += "}\n";
  }
  return out;
}

AtomizedModel parse_model(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      if (nl == std::string::npos) nl = text.size();
      lines.push_back(text.substr(start, nl - start));
      start = nl + 1;
    }
  }
  TableRef table;
  std::vector<Bits> atoms;
  int lineno = 0;
  for (const std::string& raw : lines) {
    ++lineno;
    std::string s = raw;
    if (auto h = s.find('#'); h != std::string::npos) s.resize(h);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
      s.pop_back();
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    s = s.substr(b);
    if (!table) {
      if (s.rfind("constants:", 0) != 0)
        throw ParseError("malformed_model", lineno, 1,
                         "expected a constants: header");
      std::vector<std::string> names;
      std::string cur;
      for (char ch : s.substr(10)) {
        if (name_char(ch)) {
          cur += ch;
        } else if (!cur.empty()) {
          names.push_back(cur);
          cur.clear();
        }
      }
      if (!cur.empty()) names.push_back(cur);
      if (names.empty())
        throw ParseError("malformed_model", lineno, 1, "no constants listed");
      table = ConstantTable::make(std::move(names));
      continue;
    }
    if (s.front() != '{' || s.back() != '}')
      throw ParseError("malformed_model", lineno, 1,
                       "expected an atom line {a, b}");
    Bits seg = table->empty_set();
    std::string cur;
    bool saw = false;
    for (char ch : s.substr(1, s.size() - 2)) {
      if (name_char(ch)) {
        cur += ch;
      } else if (!cur.empty()) {
        if (!table->has(cur))
          throw ParseError("unknown_constant", lineno, 1,
                           "unknown constant " + cur);
        seg.set(table->id(cur));
        cur.clear();
        saw = true;
      }
    }
    if (!cur.empty()) {
      if (!table->has(cur))
        throw ParseError("unknown_constant", lineno, 1,
                         "unknown constant " + cur);
      seg.set(table->id(cur));
      saw = true;
    }
    if (!saw)
      throw ParseError("malformed_model", lineno, 1, "empty atom segment");
    atoms.push_back(std::move(seg));
  }
  if (!table)
    throw ParseError("malformed_model", lineno, 1, "empty model text");
  return AtomizedModel::canonical(table, atoms);
}

std::vector<Solution> parse_solutions(const std::string& text,
                                      const Embedding& e) {
  std::vector<Solution> out;
  std::size_t start = 0;
  int lineno = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(start, nl - start);
    start = nl + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    Solution s{Bits(e.gamma.size())};
    if (line.find_first_not_of(" \t\r-") == std::string::npos) {
      out.push_back(std::move(s));  // `-` marks the empty solution
      continue;
    }
    std::vector<Tok> toks = tokenize(line);
    for (auto& t : toks) t.line = lineno;
    Cursor c{toks, 0};
    std::vector<Duple> ds;
    while (!c.at_end()) {
      parse_duple_into(c, *e.constants, Sign::positive, true, ds);
      if (c.peek().type == Tok::semi) c.next();
    }
    for (const Duple& d : ds) {
      auto it = std::find(e.gamma.begin(), e.gamma.end(), d);
      if (it == e.gamma.end())
        throw ParseError("solution_duple_not_in_gamma", lineno, 1,
                         format_duple(*e.constants, d) + " is not in gamma");
      s.members.set(static_cast<std::size_t>(it - e.gamma.begin()));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string serialize_solutions(const Embedding& e,
                                const std::vector<Solution>& sols) {
  std::string out;
  for (const Solution& s : sols) {
    if (s.members.none()) {
      out += "-\n";
      continue;
    }
    bool first = true;
    s.members.for_each([&](std::size_t i) {
      if (!first) out += "; ";
      first = false;
      out += format_duple(*e.constants, e.gamma[i]);
    });
    out += "\n";
  }
  return out;
}

std::string spectrum_tsv(const std::map<std::size_t, std::size_t>& spec) {
  std::string out;
  for (const auto& [size, count] : spec) {
    out += std::to_string(size);
    out += "\t";
    out += std::to_string(count);
    out += "\n";
  }
  return out;
}

}  // namespace atomlat
