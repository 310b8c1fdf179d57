#pragma once

#include "sol/ast.hpp"

#include <string>

namespace sol {

// Parses the surface syntax. Errors carry the code "parse_error" with a
// character position, or "arity_mismatch" naming the offending variable.
//
// Grammar sketch:
//   formula  := ("rel" NAME ":" ARITY ".")* iff
//   iff      := implies ("<->" implies)*
//   implies  := or ("->" implies)?
//   or       := and ("or" and)*
//   and      := unary ("and" unary)*
//   unary    := "not" unary | QUANT binder "." formula | atom
//   QUANT    := forall | exists | forall2 | exists2
//   atom     := "(" formula ")" | REL "(" term {"," term} ")" | term "in" set
//             | term "=" term | term "<=" term
//             | "card" "(" set "," term ")" | "infinite" "(" set ")"
//             | "bijection" "(" REL "," set "," set ")"
//   term     := mul ("+" mul)* ; mul := prim ("*" prim)*
//   prim     := "0" | "Zero" | "s" "(" term ")" | "#" set | "ext" "(" set ")"
//             | OBJVAR | "(" term ")"
//   set      := "{}" | RELVAR
// Lowercase names are object variables, uppercase names relation variables;
// forall2/exists2 binds a relation variable of either case with an optional
// ":arity" annotation (otherwise the arity is inferred from occurrences,
// defaulting to 1).
FormulaPtr parse_formula(const std::string &text);

} // namespace sol
