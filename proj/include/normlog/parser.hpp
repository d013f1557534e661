#pragma once

#include <string_view>

#include "normlog/formula.hpp"
#include "normlog/schema.hpp"

namespace normlog {

struct ParseOptions {
  // Accept "?name" metavariables (schema formulas).
  bool allow_meta = false;
  // Accept free variables (rule and default slots).
  bool allow_free = false;
};

// Grammar (ASCII, whitespace-insensitive, "#" comments to end of line):
//
//   formula := impl
//   impl    := disj ("->" disj)?
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := "~" unary | "exists" VAR "." unary | atom
//   atom    := pred ("(" term ("," term)* ")")? | term "=" term
//            | "(" formula ")"
//   pred    := LOWER_IDENT | "?" IDENT
//   term    := LOWER_IDENT | "?" IDENT | UPPER_IDENT
//   schema  := formula ("," formula)* "/" formula
//
// "exists" is a reserved word.  A bare lowercase identifier is a
// propositional (0-ary) atom.
Formula parse_formula(std::string_view text, ParseOptions options = {});

// Premises and conclusion separated by "/"; metavariables permitted.
Schema parse_schema(std::string_view text);

// Same surface syntax as a schema, but concrete throughout.
Inference parse_inference(std::string_view text);

}  // namespace normlog
