#pragma once

#include "sol/ast.hpp"

#include <string>
#include <vector>

namespace sol {

// Comprehension instance  exists R forall n1..nk (R(n1..nk) <-> phi).
// `tuple` names the distinguished free object variables of phi, in binding
// order. Errors with "relation_not_fresh" when rel is free in phi.
FormulaPtr instantiate_comprehension(const FormulaPtr &phi, const std::string &rel,
                                     const std::vector<std::string> &tuple);

// Hyperarithmetic comprehension instance
//   [forall n (phi <-> psi)] -> [exists R forall n (R(n) <-> phi)].
// phi must classify at or below Sigma(1) and psi at or below Pi(1); a
// violation errors with "classification_violation" naming the side.
FormulaPtr instantiate_delta11(const FormulaPtr &phi, const FormulaPtr &psi,
                               const std::string &rel, const std::vector<std::string> &tuple);

// Choice instance
//   [forall n exists P phi] ->
//   [exists R forall n forall P ((forall m (m in P <-> R(n, m))) -> phi)]
// for phi at or below Sigma(1) with free set variable set_var. The witness
// relation R is picked fresh.
FormulaPtr instantiate_choice(const FormulaPtr &phi, const std::vector<std::string> &tuple,
                              const std::string &set_var);

} // namespace sol
