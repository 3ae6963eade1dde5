#pragma once

#include "dedekind/recfn/term.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dedekind::dsl {

using recfn::SourceSpan;

struct Definition {
  std::string name;
  recfn::Term term;
  SourceSpan span;  // position of the "def" keyword
  std::size_t arity = 0;
};

// An ordered list of definitions; each refers only to earlier ones.
struct Program {
  std::vector<Definition> defs;

  recfn::Definitions definitions() const;
  const Definition* find(std::string_view name) const;

  // Structural: names and terms, ignoring spans.
  friend bool operator==(const Program& a, const Program& b);
};

struct ParseDiagnostic {
  enum class Kind { syntax, arity, name };

  Kind kind = Kind::syntax;
  std::string message;
  std::size_t line = 1;
  std::size_t column = 1;
  std::vector<std::string> expected;  // token classes acceptable at the error
  std::string path;                   // subterm path for arity errors

  // "line:column: message (expected ...)"
  std::string render() const;
};

using ParseResult = std::variant<Program, ParseDiagnostic>;

// program := { def } ;  def := "def" ident "=" term ";" ;
// term := "Z" "[" nat "]" | "S" | "P" "[" nat "," nat "]"
//       | "C" "(" term ";" term { "," term } ")" | "R" "(" term "," term ")"
//       | "M" "(" term ")" | ident ;
// '#' starts a comment to end of line; ident is [a-z][a-z0-9_]*.
// Stops at the first syntax error; every definition is arity-checked.
ParseResult parse(std::string_view source);

// Canonical rendering, one definition per line.
std::string pretty(const Program& program);
std::string pretty(const recfn::Term& term);

// Source text of the standard definitions.
std::string_view prelude_source();

}  // namespace dedekind::dsl
