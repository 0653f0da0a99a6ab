#include "pact/dsl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pact::dsl {

namespace {

enum class Tok { atom, punct, newline, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r'))
      bump();
    if (pos_ < s_.size() && s_[pos_] == '#')
      while (pos_ < s_.size() && s_[pos_] != '\n') bump();
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= s_.size()) {
      cur_ = Token{Tok::end, "", line_, col_};
      return;
    }
    char c = s_[pos_];
    if (c == '\n') {
      bump();
      cur_ = Token{Tok::newline, "\\n", cur_.line, cur_.col};
      return;
    }
    if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
      bump();
      bump();
      cur_ = Token{Tok::punct, "->", cur_.line, cur_.col};
      return;
    }
    static const std::string punct = "={}();:,*+-";
    if (punct.find(c) != std::string::npos) {
      bump();
      cur_ = Token{Tok::punct, std::string(1, c), cur_.line, cur_.col};
      return;
    }
    std::string atom;
    while (pos_ < s_.size()) {
      char d = s_[pos_];
      if ((d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z') || (d >= '0' && d <= '9') ||
          d == '_' || d == '.' || d == '/') {
        atom += d;
        bump();
      } else {
        break;
      }
    }
    if (atom.empty())
      throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    cur_ = Token{Tok::atom, atom, cur_.line, cur_.col};
  }

  void bump() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  SpecDocument parse() {
    SpecDocument doc;
    bool have_field = false;
    for (;;) {
      skip_newlines();
      if (lex_.peek().kind == Tok::end) break;
      Token head = expect_atom("statement keyword");
      if (head.text == "field") {
        if (have_field) throw ParseError(head.line, head.col, "duplicate field declaration");
        parse_field(doc);
        have_field = true;
      } else if (head.text == "group") {
        require_field(have_field, head);
        doc.groups.push_back(parse_group());
      } else if (head.text == "algebra") {
        require_field(have_field, head);
        doc.algebras.push_back(parse_algebra());
      } else if (head.text == "ideal") {
        require_field(have_field, head);
        doc.ideals.push_back(parse_ideal());
      } else if (head.text == "action") {
        require_field(have_field, head);
        doc.actions.push_back(parse_action());
      } else if (head.text == "cmd") {
        require_field(have_field, head);
        doc.cmds.push_back(parse_cmd(head.line));
      } else {
        throw ParseError(head.line, head.col, "unknown statement '" + head.text + "'");
      }
      end_statement();
    }
    if (!have_field) throw ParseError(1, 1, "missing field declaration");
    return doc;
  }

private:
  void require_field(bool have, const Token& t) {
    if (!have) throw ParseError(t.line, t.col, "field must be declared first");
  }

  Token declare(std::set<std::string>& names, const std::string& what) {
    Token t = expect_atom(what + " name");
    if (groups_.count(t.text) || algebras_.count(t.text) || ideals_.count(t.text) ||
        actions_.count(t.text))
      throw ParseError(t.line, t.col, "duplicate name '" + t.text + "'");
    names.insert(t.text);
    return t;
  }

  Token reference(const std::set<std::string>& names, const std::string& what) {
    Token t = expect_atom(what + " name");
    if (!names.count(t.text))
      throw ParseError(t.line, t.col, "undefined " + what + " '" + t.text + "'");
    return t;
  }

  std::set<std::string> groups_, algebras_, ideals_, actions_;

  void skip_newlines() {
    while (lex_.peek().kind == Tok::newline) lex_.take();
  }

  void end_statement() {
    if (lex_.peek().kind == Tok::end) return;
    Token t = lex_.take();
    if (t.kind != Tok::newline)
      throw ParseError(t.line, t.col, "expected end of line, found '" + t.text + "'");
  }

  Token expect_atom(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Tok::atom)
      throw ParseError(t.line, t.col, "expected " + what + ", found '" + t.text + "'");
    return t;
  }

  void expect_punct(const std::string& p) {
    Token t = lex_.take();
    if (t.kind != Tok::punct || t.text != p)
      throw ParseError(t.line, t.col, "expected '" + p + "', found '" + t.text + "'");
  }

  bool accept_punct(const std::string& p) {
    if (lex_.peek().kind == Tok::punct && lex_.peek().text == p) {
      lex_.take();
      return true;
    }
    return false;
  }

  std::size_t expect_number(const std::string& what) {
    Token t = expect_atom(what);
    for (char c : t.text)
      if (c < '0' || c > '9') throw ParseError(t.line, t.col, what + " must be a number");
    return static_cast<std::size_t>(std::stoul(t.text));
  }

  void parse_field(SpecDocument& doc) {
    Token t = expect_atom("field kind");
    if (t.text == "rationals") {
      doc.field_kind = "rationals";
    } else if (t.text == "gf") {
      doc.field_kind = "gf";
      doc.field_p = static_cast<std::uint32_t>(expect_number("prime"));
    } else {
      throw ParseError(t.line, t.col, "field must be 'rationals' or 'gf <p>'");
    }
  }

  GroupDecl parse_group() {
    GroupDecl g;
    g.name = declare(groups_, "group").text;
    expect_punct("=");
    Token kind = expect_atom("group constructor");
    g.kind = kind.text;
    if (g.kind == "cyclic" || g.kind == "sym") {
      g.n = expect_number("order");
    } else if (g.kind == "klein") {
    } else if (g.kind == "product") {
      g.args.push_back(reference(groups_, "group").text);
      g.args.push_back(reference(groups_, "group").text);
    } else if (g.kind == "table") {
      g.n = expect_number("order");
      expect_punct("{");
      skip_newlines();
      for (;;) {
        std::vector<int> row;
        for (std::size_t j = 0; j < g.n; ++j)
          row.push_back(static_cast<int>(expect_number("table entry")));
        g.table.push_back(std::move(row));
        skip_newlines();
        if (accept_punct(";")) {
          skip_newlines();
          continue;
        }
        expect_punct("}");
        break;
      }
      if (g.table.size() != g.n) {
        throw ParseError(kind.line, kind.col, "table must have " + std::to_string(g.n) + " rows");
      }
    } else {
      throw ParseError(kind.line, kind.col, "unknown group constructor '" + g.kind + "'");
    }
    return g;
  }

  // a sum of terms: [coef *] e<k>, with optional leading '-'
  ElementExpr parse_element() {
    ElementExpr e;
    bool negative = accept_punct("-");
    for (;;) {
      Token t = expect_atom("element term");
      ElementExpr::Term term;
      if (lex_.peek().kind == Tok::punct && lex_.peek().text == "*") {
        lex_.take();
        term.coef = (negative ? "-" : "") + t.text;
        t = expect_atom("basis vector");
      } else {
        term.coef = negative ? "-" : "";
      }
      if (t.text.size() < 2 || t.text[0] != 'e')
        throw ParseError(t.line, t.col, "expected basis vector e<k>, found '" + t.text + "'");
      for (std::size_t k = 1; k < t.text.size(); ++k)
        if (t.text[k] < '0' || t.text[k] > '9')
          throw ParseError(t.line, t.col, "expected basis vector e<k>, found '" + t.text + "'");
      term.index = static_cast<std::size_t>(std::stoul(t.text.substr(1))) - 1;
      e.terms.push_back(std::move(term));
      if (accept_punct("+")) {
        negative = false;
        continue;
      }
      if (lex_.peek().kind == Tok::punct && lex_.peek().text == "-") {
        lex_.take();
        negative = true;
        continue;
      }
      break;
    }
    return e;
  }

  AlgebraDecl parse_algebra() {
    AlgebraDecl a;
    a.name = declare(algebras_, "algebra").text;
    expect_punct("=");
    Token kind = expect_atom("algebra constructor");
    a.kind = kind.text;
    if (a.kind == "matrix") {
      a.n = expect_number("size");
      if (lex_.peek().kind == Tok::atom && lex_.peek().text == "over") {
        lex_.take();
        a.over = reference(groups_, "group").text;
      }
    } else if (a.kind == "upper" || a.kind == "product") {
      a.n = expect_number("size");
    } else if (a.kind == "group_algebra") {
      a.over = reference(groups_, "group").text;
    } else if (a.kind == "constants") {
      a.n = expect_number("dimension");
      expect_punct("{");
      skip_newlines();
      if (!accept_punct("}")) {
        for (;;) {
          ConstantsEntry entry;
          std::size_t i = expect_number("row index");
          std::size_t j = expect_number("column index");
          if (i == 0 || j == 0 || i > a.n || j > a.n)
            throw ParseError(kind.line, kind.col, "basis index out of range");
          entry.i = i - 1;
          entry.j = j - 1;
          expect_punct("->");
          for (;;) {
            std::size_t k = expect_number("basis index");
            if (k == 0 || k > a.n)
              throw ParseError(kind.line, kind.col, "basis index out of range");
            expect_punct(":");
            Token c = lex_.take();
            std::string coef = c.text;
            if (c.kind == Tok::punct && c.text == "-") coef = "-" + expect_atom("coefficient").text;
            else if (c.kind != Tok::atom)
              throw ParseError(c.line, c.col, "expected coefficient");
            entry.value.terms.push_back({coef, k - 1});
            if (!accept_punct(",")) break;
          }
          a.entries.push_back(std::move(entry));
          skip_newlines();
          if (accept_punct(";")) {
            skip_newlines();
            if (accept_punct("}")) break;
            continue;
          }
          expect_punct("}");
          break;
        }
      }
      if (lex_.peek().kind == Tok::atom && lex_.peek().text == "unit") {
        lex_.take();
        a.unit = parse_element();
      }
    } else {
      throw ParseError(kind.line, kind.col, "unknown algebra constructor '" + a.kind + "'");
    }
    return a;
  }

  IdealDecl parse_ideal() {
    IdealDecl d;
    d.name = declare(ideals_, "ideal").text;
    expect_punct("=");
    Token kw = expect_atom("span");
    if (kw.text != "span") throw ParseError(kw.line, kw.col, "expected 'span'");
    expect_punct("(");
    d.algebra = reference(algebras_, "algebra").text;
    expect_punct(";");
    for (;;) {
      d.gens.push_back(parse_element());
      if (!accept_punct(",")) break;
    }
    expect_punct(")");
    return d;
  }

  ActionDecl parse_action() {
    ActionDecl act;
    act.name = declare(actions_, "action").text;
    Token on = expect_atom("on");
    if (on.text != "on") throw ParseError(on.line, on.col, "expected 'on'");
    act.algebra = reference(algebras_, "algebra").text;
    Token by = expect_atom("by");
    if (by.text != "by") throw ParseError(by.line, by.col, "expected 'by'");
    act.group = reference(groups_, "group").text;
    expect_punct("{");
    skip_newlines();
    while (!accept_punct("}")) {
      ActionEntry entry;
      entry.glabel = expect_atom("group element label").text;
      expect_punct(":");
      Token kw = expect_atom("ideal");
      if (kw.text != "ideal") throw ParseError(kw.line, kw.col, "expected 'ideal'");
      expect_punct("=");
      if (lex_.peek().kind == Tok::atom && lex_.peek().text == "span") {
        lex_.take();
        entry.inline_span = true;
        expect_punct("(");
        Token alg = reference(algebras_, "algebra");
        if (alg.text != act.algebra)
          throw ParseError(alg.line, alg.col, "span must use the action's algebra");
        expect_punct(";");
        for (;;) {
          entry.ideal_gens.push_back(parse_element());
          if (!accept_punct(",")) break;
        }
        expect_punct(")");
      } else {
        Token t = expect_atom("ideal name or 'full'");
        if (t.text == "full") entry.ideal_full = true;
        else if (!ideals_.count(t.text))
          throw ParseError(t.line, t.col, "undefined ideal '" + t.text + "'");
        else entry.ideal_name = t.text;
      }
      expect_punct(",");
      Token mk = expect_atom("map");
      if (mk.text != "map") throw ParseError(mk.line, mk.col, "expected 'map'");
      expect_punct("=");
      if (lex_.peek().kind == Tok::atom && lex_.peek().text == "id") {
        lex_.take();
        entry.map_id = true;
      } else {
        for (;;) {
          ElementExpr from = parse_element();
          expect_punct("->");
          ElementExpr to = parse_element();
          entry.map_pairs.emplace_back(std::move(from), std::move(to));
          if (!accept_punct(",")) break;
        }
      }
      act.entries.push_back(std::move(entry));
      skip_newlines();
      if (accept_punct(";")) skip_newlines();
    }
    return act;
  }

  CmdDecl parse_cmd(std::size_t line) {
    CmdDecl c;
    c.line = line;
    c.verb = expect_atom("command verb").text;
    static const std::vector<std::string> verbs = {
        "verify", "crossed", "assoc", "multipliers", "lr_assoc", "semiprime",
        "envelope", "morita", "kpar", "elementary", "grading", "condition_x"};
    if (std::find(verbs.begin(), verbs.end(), c.verb) == verbs.end())
      throw ParseError(line, 1, "unknown command verb '" + c.verb + "'");
    if (c.verb == "kpar" || c.verb == "elementary" || c.verb == "grading") {
      c.target = reference(groups_, "group").text;
    } else if (c.verb == "multipliers" || c.verb == "lr_assoc" || c.verb == "semiprime") {
      Token t = expect_atom("algebra or ideal name");
      if (!algebras_.count(t.text) && !ideals_.count(t.text))
        throw ParseError(t.line, t.col, "undefined algebra or ideal '" + t.text + "'");
      c.target = t.text;
    } else {
      c.target = reference(actions_, "action").text;
    }
    if (c.verb == "elementary" || c.verb == "grading") {
      expect_punct("{");
      for (;;) {
        Token t = lex_.take();
        if (t.kind != Tok::atom)
          throw ParseError(t.line, t.col, "expected group element label");
        c.subset.push_back(t.text);
        if (accept_punct(",")) continue;
        expect_punct("}");
        break;
      }
    }
    if (lex_.peek().kind == Tok::atom && lex_.peek().text == "expect") {
      lex_.take();
      c.expect = expect_atom("expected value").text;
    }
    return c;
  }

  Lexer lex_;
};

std::string element_str(const ElementExpr& e) {
  std::string out;
  for (std::size_t t = 0; t < e.terms.size(); ++t) {
    const auto& term = e.terms[t];
    std::string coef = term.coef;
    bool neg = !coef.empty() && coef[0] == '-';
    if (neg) coef = coef.substr(1);
    if (t == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (!coef.empty()) out += coef + "*";
    out += "e" + std::to_string(term.index + 1);
  }
  return out;
}

}  // namespace

SpecDocument parse_spec(const std::string& text) { return Parser(text).parse(); }

std::string print_spec(const SpecDocument& doc) {
  std::ostringstream os;
  if (doc.field_kind == "rationals") os << "field rationals\n";
  else os << "field gf " << doc.field_p << "\n";
  for (const auto& g : doc.groups) {
    os << "group " << g.name << " = " << g.kind;
    if (g.kind == "cyclic" || g.kind == "sym") os << " " << g.n;
    if (g.kind == "product") os << " " << g.args[0] << " " << g.args[1];
    if (g.kind == "table") {
      os << " " << g.n << " {";
      for (std::size_t r = 0; r < g.table.size(); ++r) {
        if (r) os << " ;";
        for (int x : g.table[r]) os << " " << x;
      }
      os << " }";
    }
    os << "\n";
  }
  for (const auto& a : doc.algebras) {
    os << "algebra " << a.name << " = " << a.kind;
    if (a.kind == "matrix" || a.kind == "upper" || a.kind == "product") os << " " << a.n;
    if (a.kind == "matrix" && !a.over.empty()) os << " over " << a.over;
    if (a.kind == "group_algebra") os << " " << a.over;
    if (a.kind == "constants") {
      os << " " << a.n << " {";
      for (std::size_t k = 0; k < a.entries.size(); ++k) {
        const auto& e = a.entries[k];
        if (k) os << " ;";
        os << " " << (e.i + 1) << " " << (e.j + 1) << " ->";
        for (std::size_t t = 0; t < e.value.terms.size(); ++t) {
          os << (t ? ", " : " ") << (e.value.terms[t].index + 1) << ":"
             << (e.value.terms[t].coef.empty() ? "1" :
                 e.value.terms[t].coef == "-" ? "-1" : e.value.terms[t].coef);
        }
      }
      os << " }";
      if (a.unit) os << " unit " << element_str(*a.unit);
    }
    os << "\n";
  }
  for (const auto& d : doc.ideals) {
    os << "ideal " << d.name << " = span(" << d.algebra << ";";
    for (std::size_t k = 0; k < d.gens.size(); ++k)
      os << (k ? ", " : " ") << element_str(d.gens[k]);
    os << ")\n";
  }
  for (const auto& act : doc.actions) {
    os << "action " << act.name << " on " << act.algebra << " by " << act.group << " {";
    for (std::size_t k = 0; k < act.entries.size(); ++k) {
      const auto& e = act.entries[k];
      if (k) os << " ;";
      os << " " << e.glabel << ": ideal = ";
      if (e.ideal_full) os << "full";
      else if (e.inline_span) {
        os << "span(" << act.algebra << ";";
        for (std::size_t t = 0; t < e.ideal_gens.size(); ++t)
          os << (t ? ", " : " ") << element_str(e.ideal_gens[t]);
        os << ")";
      } else os << e.ideal_name;
      os << ", map = ";
      if (e.map_id) os << "id";
      else
        for (std::size_t t = 0; t < e.map_pairs.size(); ++t) {
          if (t) os << ", ";
          os << element_str(e.map_pairs[t].first) << " -> "
             << element_str(e.map_pairs[t].second);
        }
    }
    os << " }\n";
  }
  for (const auto& c : doc.cmds) {
    os << "cmd " << c.verb << " " << c.target;
    if (!c.subset.empty()) {
      os << " {";
      for (std::size_t k = 0; k < c.subset.size(); ++k) os << (k ? "," : "") << c.subset[k];
      os << "}";
    }
    if (c.expect) os << " expect " << *c.expect;
    os << "\n";
  }
  return os.str();
}

namespace {

struct Env {
  Field field = Field::rationals();
  std::map<std::string, Group> groups;
  std::map<std::string, Algebra> algebras;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, PartialActionData> actions;
};

Vec resolve_element(const Field& f, std::size_t dim, const ElementExpr& e) {
  Vec v = zero_vec(f, dim);
  for (const auto& term : e.terms) {
    if (term.index >= dim) throw Error("basis index e" + std::to_string(term.index + 1) +
                                       " out of range (dim " + std::to_string(dim) + ")");
    Scalar c = term.coef.empty()      ? Scalar::one(f)
               : term.coef == "-"     ? -Scalar::one(f)
                                      : Scalar::parse(f, term.coef);
    v[term.index] = v[term.index] + c;
  }
  return v;
}

Env elaborate(const SpecDocument& doc) {
  Env env;
  env.field = doc.field_kind == "rationals" ? Field::rationals() : Field::prime(doc.field_p);
  for (const auto& g : doc.groups) {
    if (env.groups.count(g.name)) throw Error("duplicate group '" + g.name + "'");
    if (g.kind == "cyclic") env.groups.emplace(g.name, Group::cyclic(g.n));
    else if (g.kind == "klein") env.groups.emplace(g.name, Group::klein_four());
    else if (g.kind == "sym") env.groups.emplace(g.name, Group::symmetric(g.n));
    else if (g.kind == "product") {
      auto a = env.groups.find(g.args[0]);
      auto b = env.groups.find(g.args[1]);
      if (a == env.groups.end() || b == env.groups.end())
        throw Error("undefined group in product for '" + g.name + "'");
      env.groups.emplace(g.name, Group::direct_product(a->second, b->second));
    } else if (g.kind == "table") {
      env.groups.emplace(g.name, Group::from_table(g.table));
    }
  }
  for (const auto& a : doc.algebras) {
    if (env.algebras.count(a.name)) throw Error("duplicate algebra '" + a.name + "'");
    auto group_of = [&](const std::string& n) -> const Group& {
      auto it = env.groups.find(n);
      if (it == env.groups.end()) throw Error("undefined group '" + n + "'");
      return it->second;
    };
    if (a.kind == "matrix" && a.over.empty())
      env.algebras.emplace(a.name, Algebra::matrix(env.field, a.n));
    else if (a.kind == "matrix")
      env.algebras.emplace(a.name, Algebra::matrix_over_group(env.field, a.n, group_of(a.over)));
    else if (a.kind == "upper")
      env.algebras.emplace(a.name, Algebra::upper_triangular(env.field, a.n));
    else if (a.kind == "product")
      env.algebras.emplace(a.name, Algebra::product_field(env.field, a.n));
    else if (a.kind == "group_algebra")
      env.algebras.emplace(a.name, Algebra::group_algebra(env.field, group_of(a.over)));
    else {
      // constants, with unit-law defaults for the declared unit basis vector
      MulTable t(env.field, a.n);
      std::vector<std::vector<bool>> given(a.n, std::vector<bool>(a.n, false));
      for (const auto& e : a.entries) {
        t.set_basis_product(e.i, e.j, resolve_element(env.field, a.n, e.value));
        given[e.i][e.j] = true;
      }
      std::optional<Vec> unit;
      if (a.unit) {
        unit = resolve_element(env.field, a.n, *a.unit);
        // a pure basis-vector unit fills its unspecified products
        std::size_t idx = a.n, nonzero = 0;
        for (std::size_t k = 0; k < a.n; ++k)
          if (!(*unit)[k].is_zero()) {
            ++nonzero;
            idx = k;
          }
        if (nonzero == 1 && (*unit)[idx].is_one()) {
          for (std::size_t k = 0; k < a.n; ++k) {
            if (!given[idx][k]) t.set_basis_product(idx, k, unit_vec(env.field, a.n, k));
            if (!given[k][idx]) t.set_basis_product(k, idx, unit_vec(env.field, a.n, k));
          }
        }
      }
      env.algebras.emplace(a.name, Algebra(env.field, a.n, std::move(t), std::move(unit)));
    }
  }
  for (const auto& d : doc.ideals) {
    if (env.ideals.count(d.name)) throw Error("duplicate ideal '" + d.name + "'");
    auto it = env.algebras.find(d.algebra);
    if (it == env.algebras.end()) throw Error("undefined algebra '" + d.algebra + "'");
    const Algebra& alg = it->second;
    std::vector<Vec> gens;
    for (const auto& e : d.gens) gens.push_back(resolve_element(env.field, alg.dim(), e));
    env.ideals.emplace(d.name, Ideal(alg, Subspace::span(env.field, alg.dim(), gens)));
  }
  for (const auto& act : doc.actions) {
    if (env.actions.count(act.name)) throw Error("duplicate action '" + act.name + "'");
    auto ait = env.algebras.find(act.algebra);
    if (ait == env.algebras.end()) throw Error("undefined algebra '" + act.algebra + "'");
    auto git = env.groups.find(act.group);
    if (git == env.groups.end()) throw Error("undefined group '" + act.group + "'");
    const Algebra& alg = ait->second;
    const Group& grp = git->second;
    PartialActionData data;
    data.group = grp;
    data.base = alg;
    Subspace full = Subspace::full(env.field, alg.dim());
    data.domains.assign(grp.order(), full);
    data.maps.assign(grp.order(), LinearMap::identity(env.field, alg.dim()));
    std::vector<bool> seen(grp.order(), false);
    seen[grp.identity()] = true;
    for (const auto& entry : act.entries) {
      int ge = grp.index_of(entry.glabel);
      if (ge < 0) throw Error("unknown group element '" + entry.glabel + "'");
      if (ge == grp.identity())
        throw Error("the identity entry is fixed: D_1 = A and alpha_1 = id");
      if (seen[ge]) throw Error("duplicate action entry for '" + entry.glabel + "'");
      seen[ge] = true;
      Subspace space = full;
      if (entry.inline_span) {
        std::vector<Vec> gens;
        for (const auto& e : entry.ideal_gens)
          gens.push_back(resolve_element(env.field, alg.dim(), e));
        space = Subspace::span(env.field, alg.dim(), gens);
      } else if (!entry.ideal_full) {
        auto iit = env.ideals.find(entry.ideal_name);
        if (iit == env.ideals.end()) throw Error("undefined ideal '" + entry.ideal_name + "'");
        if (!(iit->second.parent() == alg))
          throw Error("ideal '" + entry.ideal_name + "' belongs to another algebra");
        space = iit->second.space();
      }
      data.domains[ge] = space;
    }
    // domains fixed, now the maps (all domains are needed first)
    for (const auto& entry : act.entries) {
      int ge = grp.index_of(entry.glabel);
      const Subspace& dom = data.domains[grp.inv(ge)];
      const Subspace& cod = data.domains[ge];
      if (entry.map_id) {
        if (!(dom == cod)) throw Error("map = id requires D_{g^-1} = D_g for '" +
                                       entry.glabel + "'");
        data.maps[ge] = LinearMap::identity(env.field, dom.dim());
      } else {
        std::vector<Vec> from, to;
        for (const auto& [fe, te] : entry.map_pairs) {
          from.push_back(resolve_element(env.field, alg.dim(), fe));
          to.push_back(resolve_element(env.field, alg.dim(), te));
        }
        data.maps[ge] = map_from_pairs(dom, cod, from, to);
      }
    }
    for (std::size_t e = 0; e < grp.order(); ++e)
      if (!seen[e])
        throw Error("action '" + act.name + "' missing entry for '" +
                    grp.label(static_cast<int>(e)) + "'");
    env.actions.emplace(act.name, std::move(data));
  }
  return env;
}

std::string scalar_str(const Scalar& s) { return s.str(); }

Json vec_json(const Algebra& a, const Vec& v) {
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) s += " + ";
    if (!v[i].is_one()) s += scalar_str(v[i]) + "*";
    s += a.basis_name(i);
    first = false;
  }
  if (first) s = "0";
  return Json(s);
}

bool check_expect(Json& r, const std::optional<std::string>& expect,
                  const std::string& actual) {
  if (!expect) return true;
  r["expect"] = *expect;
  return *expect == actual;
}

const PartialActionData& need_action(const Env& env, const std::string& name) {
  auto it = env.actions.find(name);
  if (it == env.actions.end()) throw Error("undefined action '" + name + "'");
  return it->second;
}

const Group& need_group(const Env& env, const std::string& name) {
  auto it = env.groups.find(name);
  if (it == env.groups.end()) throw Error("undefined group '" + name + "'");
  return it->second;
}

Algebra target_algebra(const Env& env, const std::string& name) {
  auto ait = env.algebras.find(name);
  if (ait != env.algebras.end()) return ait->second;
  auto iit = env.ideals.find(name);
  if (iit != env.ideals.end()) return iit->second.as_algebra();
  throw Error("undefined algebra or ideal '" + name + "'");
}

Json run_cmd(const Env& env, const CmdDecl& c) {
  Json r;
  r["cmd"] = c.verb;
  r["target"] = c.target;
  bool ok = true;

  if (c.verb == "verify") {
    PactionReport rep = verify_partial_action(need_action(env, c.target));
    r["valid"] = rep.valid();
    r["weak_agrees"] = rep.weak_agrees;
    if (!rep.violations.empty()) r["violations"] = rep.violations;
    ok = check_expect(r, c.expect ? c.expect : std::optional<std::string>("valid"),
                      rep.valid() ? "valid" : "invalid") &&
         rep.weak_agrees;
  } else if (c.verb == "crossed") {
    PartialAction pa = PartialAction::make(need_action(env, c.target));
    CrossedProduct cp = CrossedProduct::build(pa);
    r["dim"] = cp.dim();
    ok = check_expect(r, c.expect, std::to_string(cp.dim()));
  } else if (c.verb == "assoc") {
    PartialAction pa = PartialAction::make(need_action(env, c.target));
    CrossedProduct cp = CrossedProduct::build(pa);
    auto w = cp.nonassoc_witness();
    bool assoc = !w.has_value();
    r["associative"] = assoc;
    if (w) r["witness"] = Json::array({cp.label_str((*w)[0]), cp.label_str((*w)[1]),
                                       cp.label_str((*w)[2])});
    bool via_x = associativity_via_condition_x(pa);
    r["condition_x"] = via_x;
    bool agrees = via_x == assoc;
    r["agrees"] = agrees;
    ok = agrees && check_expect(r, c.expect, assoc ? "true" : "false");
  } else if (c.verb == "multipliers") {
    Algebra ia = target_algebra(env, c.target);
    PhiEmbedding phi = phi_embedding(ia);
    r["dim"] = phi.m.dim();
    r["phi_kernel_dim"] = phi.kernel.dim();
    r["phi_image_ideal"] = phi.image_is_ideal;
    r["kernel_matches_annihilators"] = phi.kernel_matches_annihilators;
    ok = phi.image_is_ideal && phi.kernel_matches_annihilators &&
         check_expect(r, c.expect, std::to_string(phi.m.dim()));
  } else if (c.verb == "lr_assoc") {
    Algebra ia = target_algebra(env, c.target);
    LrAssociativity lr = is_lr_associative(ia);
    r["lr_associative"] = lr.holds;
    if (!lr.holds) r["witness"] = lr.witness;
    ok = check_expect(r, c.expect, lr.holds ? "true" : "false");
  } else if (c.verb == "semiprime") {
    Algebra a = target_algebra(env, c.target);
    bool sp = is_semiprime(a);
    r["semiprime"] = sp;
    ok = check_expect(r, c.expect, sp ? "true" : "false");
  } else if (c.verb == "envelope") {
    PartialAction pa = PartialAction::make(need_action(env, c.target));
    bool has = has_enveloping(pa);
    r["has_enveloping"] = has;
    if (has) {
      EnvelopingAction e = build_enveloping(pa);
      r["ambient_dim"] = e.ambient.algebra().dim();
      EnvelopeReport rep = verify_enveloping(pa, e.ambient, e.embed);
      r["verified"] = rep.ok();
      CrossedEmbedding emb = embed_crossed(pa, e);
      r["crossed_dim"] = emb.source.dim();
      r["ambient_crossed_dim"] = emb.target.dim();
      r["embedding_injective"] = emb.injective && emb.multiplicative;
      ok = rep.ok() && emb.injective && emb.multiplicative;
    }
    ok = ok && check_expect(r, c.expect, has ? "true" : "false");
  } else if (c.verb == "morita") {
    PartialAction pa = PartialAction::make(need_action(env, c.target));
    EnvelopingAction e = build_enveloping(pa);
    MoritaContext mc = morita_context(pa, e);
    r["m_dim"] = mc.m.dim();
    r["n_dim"] = mc.n.dim();
    r["mn_equals_crossed"] = mc.mn_equals_r;
    r["nm_equals_ambient_crossed"] = mc.nm_equals_rp;
    r["context_ok"] = mc.ok();
    ok = mc.ok() && check_expect(r, c.expect, mc.ok() ? "ok" : "fail");
  } else if (c.verb == "kpar") {
    const Group& g = need_group(env, c.target);
    ExelSemigroup s(g);
    r["semigroup_size"] = s.size();
    r["dim_kpar"] = s.size();
    if (g.order() <= 4) {
      ExelOracle oracle = exel_oracle(g, s);
      r["oracle_classes"] = oracle.classes;
      r["oracle_matches"] = oracle.matches_pair_model;
      ok = ok && oracle.matches_pair_model;
    }
    KparIso iso = kpar_iso(env.field, g);
    r["iso"] = iso.mutually_inverse && iso.psi_matches_generators;
    ok = ok && iso.mutually_inverse && iso.psi_matches_generators &&
         check_expect(r, c.expect, std::to_string(s.size()));
  } else if (c.verb == "elementary" || c.verb == "grading") {
    const Group& g = need_group(env, c.target);
    std::vector<int> elems;
    for (const auto& lab : c.subset) {
      int e = g.index_of(lab);
      if (e < 0) throw Error("unknown group element '" + lab + "'");
      elems.push_back(e);
    }
    ElementaryRepData erd = elementary_rep(env.field, GroupSubset(g, elems));
    std::size_t n = erd.n(), hord = erd.h.group.order();
    r["group"] = c.target;
    r["subset"] = erd.a_set.str();
    r["n"] = n;
    r["h_order"] = hord;
    r["target"] = hord == 1 ? "M_" + std::to_string(n) + "(K)"
                            : "M_" + std::to_string(n) + "(KH)";
    IsoBis iso = iso_bis(erd);
    r["iso"] = iso.isomorphism;
    ok = iso.isomorphism;
    if (c.verb == "elementary") {
      bool trans = true;
      for (std::size_t i = 0; i < n && trans; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (transitivity_witness(erd, iso.induced, i, j) < 0) trans = false;
      r["transitive"] = trans;
      ok = ok && trans && check_expect(r, c.expect, iso.isomorphism ? "iso" : "fail");
    } else {
      ElementaryGrading gr = elementary_grading(erd, iso);
      Json table = Json::array();
      for (std::size_t k = 0; k < erd.target.dim(); ++k)
        table.push_back(Json::array({erd.target.basis_name(k), g.label(gr.degree[k])}));
      r["degrees"] = table;
      r["graded_iso"] = gr.phi_graded && gr.multiplicative;
      ok = ok && gr.phi_graded && gr.multiplicative &&
           check_expect(r, c.expect, gr.phi_graded && gr.multiplicative ? "graded" : "fail");
    }
  } else if (c.verb == "condition_x") {
    PartialAction pa = PartialAction::make(need_action(env, c.target));
    Json per_g = Json::array();
    bool all = true;
    for (std::size_t e = 0; e < pa.group().order(); ++e) {
      ConditionX cx = condition_x_for(pa, static_cast<int>(e));
      Json entry;
      entry["g"] = pa.group().label(static_cast<int>(e));
      entry["holds"] = cx.holds;
      if (!cx.holds) {
        entry["witness"] = cx.witness;
        entry["rhs"] = vec_json(pa.base(), cx.rhs);
        entry["lhs"] = vec_json(pa.base(), cx.lhs);
      }
      per_g.push_back(entry);
      all = all && cx.holds;
    }
    r["per_g"] = per_g;
    r["all_hold"] = all;
    ok = check_expect(r, c.expect, all ? "true" : "false");
  }

  r["ok"] = ok;
  return r;
}

}  // namespace

bool Report::all_ok() const {
  for (const auto& r : results)
    if (!r.value("ok", false)) return false;
  return true;
}

Report run(const SpecDocument& doc) {
  Report report;
  Env env = elaborate(doc);
  for (const auto& c : doc.cmds) {
    try {
      report.results.push_back(run_cmd(env, c));
    } catch (const Error& e) {
      Json r;
      r["cmd"] = c.verb;
      r["target"] = c.target;
      r["error"] = e.what();
      r["ok"] = false;
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

std::string emit(const Report& report, Format format) {
  if (format == Format::json) {
    Json out;
    out["schema_version"] = 1;
    out["results"] = report.results;
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << (r.value("ok", false) ? "ok   " : "FAIL ") << r.value("cmd", "?") << " "
       << r.value("target", "?");
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it.key() == "cmd" || it.key() == "target" || it.key() == "ok") continue;
      os << " " << it.key() << "=" << it.value().dump();
    }
    os << "\n";
  }
  os << (report.all_ok() ? "ALL OK\n" : "FAILURES\n");
  return os.str();
}

}  // namespace pact::dsl
