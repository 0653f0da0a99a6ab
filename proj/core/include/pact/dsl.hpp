#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pact/envelope.hpp"
#include "pact/multiplier.hpp"
#include "pact/preps.hpp"

namespace pact::dsl {

using Json = nlohmann::ordered_json;

/// Parse failure with source position (1-based).
struct ParseError : Error {
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  std::size_t line, col;
};

/// A linear combination of basis vectors, kept as written for reprinting.
struct ElementExpr {
  struct Term {
    std::string coef;   // literal, may carry a sign; empty = 1, "-" = -1
    std::size_t index;  // 0-based basis index
  };
  std::vector<Term> terms;
};

struct GroupDecl {
  std::string name;
  std::string kind;  // cyclic | klein | sym | product | table
  std::size_t n = 0;
  std::vector<std::string> args;          // product operand names
  std::vector<std::vector<int>> table;    // table rows
};

struct ConstantsEntry {
  std::size_t i = 0, j = 0;  // 0-based
  ElementExpr value;
};

struct AlgebraDecl {
  std::string name;
  std::string kind;  // matrix | upper | product | group_algebra | constants
  std::size_t n = 0;
  std::string over;  // group name for matrix-over / group_algebra
  std::vector<ConstantsEntry> entries;
  std::optional<ElementExpr> unit;
};

struct IdealDecl {
  std::string name;
  std::string algebra;
  std::vector<ElementExpr> gens;
};

struct ActionEntry {
  std::string glabel;
  bool ideal_full = false;
  std::string ideal_name;              // when referring to a declared ideal
  std::vector<ElementExpr> ideal_gens; // when inline span(...)
  bool inline_span = false;
  bool map_id = false;
  std::vector<std::pair<ElementExpr, ElementExpr>> map_pairs;
};

struct ActionDecl {
  std::string name;
  std::string algebra;
  std::string group;
  std::vector<ActionEntry> entries;
};

struct CmdDecl {
  std::string verb;
  std::string target;
  std::vector<std::string> subset;  // for elementary/grading
  std::optional<std::string> expect;
  std::size_t line = 1;
};

struct SpecDocument {
  std::string field_kind;  // "rationals" or "gf"
  std::uint32_t field_p = 0;
  std::vector<GroupDecl> groups;
  std::vector<AlgebraDecl> algebras;
  std::vector<IdealDecl> ideals;
  std::vector<ActionDecl> actions;
  std::vector<CmdDecl> cmds;
};

SpecDocument parse_spec(const std::string& text);

/// Canonical re-serialization; parse(print(doc)) prints identically.
std::string print_spec(const SpecDocument& doc);

/// One entry per command, in order; `ok` false on a violated expectation,
/// failed mandatory cross-check, or propagated core error.
struct Report {
  std::vector<Json> results;
  bool all_ok() const;
};

Report run(const SpecDocument& doc);

enum class Format { text, json };

std::string emit(const Report& report, Format format);

}  // namespace pact::dsl
