#pragma once

#include "sol/ast.hpp"

#include "json.hpp"

#include <string>

namespace sol {

// Canonical text: binary connectives fully parenthesized, quantifier bodies
// extending maximally right, deterministic fresh names for binder hints that
// clash. parse_formula(print_formula(f)) reproduces f.
std::string print_formula(const FormulaPtr &f);

// Canonical text for a term without bound-variable references.
std::string print_term(const TermPtr &t);

// Tagged-union JSON export in named surface form; fields "kind", "name",
// "arity", "body", "args".
nlohmann::json formula_to_json(const FormulaPtr &f);

} // namespace sol
