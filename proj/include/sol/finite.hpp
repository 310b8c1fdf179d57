#pragma once

#include "sol/ast.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sol {

// Relations over a finite universe of integer atoms, stored as tuple sets.
// A unary relation holds singleton tuples.
using Tuple = std::vector<int>;
using RelationValue = std::set<Tuple>;

// Partial map from the arity-1 family to the universe, keyed by the set's
// index in the family list. The kind tags which abstraction operator the
// structure interprets; injectivity is NOT a construction invariant (the
// interesting structures violate it), it is a precondition of russell_set.
struct AbstractionMap {
    AbsOp kind = AbsOp::Ext;
    std::vector<std::pair<size_t, int>> pairs;
};

// Explicit finite second-order structure: relation quantifiers of arity n
// range over families[n] only. A missing arity key is an empty family.
struct FiniteStructure {
    std::vector<int> universe;
    std::map<int, std::vector<RelationValue>> families;
    std::optional<AbstractionMap> abstraction;
};

// Checks tuple arities and membership in the universe, family duplicates,
// and abstraction indices. Errors with "invalid_structure".
void validate_structure(const FiniteStructure &s);

// Values for the free variables of a formula. Relation values need not be
// members of the structure's families; quantifiers still range over the
// families alone.
struct Env {
    std::map<std::string, int> objects;
    std::map<std::string, RelationValue> relations;
};

// Truth under full substitutional semantics over the finite families.
// Errors: "unassigned_variable" for a free variable missing from env;
// "abstraction_undefined" when #/ext is applied with no abstraction map, a
// mismatched operator kind, or a set outside the map's domain;
// "unsupported_term" for arithmetic vocabulary (0, s, +, *, <=, card);
// infinite(X) is false outright since every relation here is finite.
bool eval(const FiniteStructure &s, const FormulaPtr &f, const Env &env = {});

// Outcome of the generalized Russell construction on input A:
//   B = {x in A : some X in dom(ext) has ext(X) = x and x not in X}.
// WitnessFound carries ext(B), which lands in rng(ext) - A; ClosureFailure
// means B escaped the structure (not in S1, or outside the map's domain),
// exhibiting exactly where the finite family fails closure.
struct RussellReport {
    std::set<int> input;
    std::set<int> computed;
    enum class Verdict { WitnessFound, ClosureFailure } verdict = Verdict::ClosureFailure;
    std::optional<int> witness;
    std::string detail;
};

// Preconditions, errored with "precondition_violation" naming the failure:
// the abstraction map is extension-tagged and injective where defined, A is
// a member of S1, and A is contained in rng(ext).
RussellReport russell_set(const FiniteStructure &s, const std::set<int> &a);

// Search for an injective choice of atoms for the listed sets (equal sets
// share their atom). If more distinct sets than atoms exist, returns the
// pigeonhole certificate instead. universe_size above 6 errors with
// "size_limit".
struct InjectionSearchResult {
    // assignment[i] = atom for family[i]; present iff an injection exists.
    std::optional<std::vector<int>> assignment;
    // (distinct set count, universe size) with count > size.
    std::optional<std::pair<size_t, size_t>> certificate;
};
InjectionSearchResult blv_injection_search(int universe_size,
                                           const std::vector<std::set<int>> &family);

// Universe {0..m-1}, S1 = all subsets, S2 = all binary relations, and a
// total abstraction map sending the i-th subset in binary counting order
// (bit j set iff atom j present) to image[i]. Requires image.size() == 2^m
// and m <= 3.
FiniteStructure full_powerset_structure(int m, AbsOp kind, const std::vector<int> &image);

// JSON form:
//   {"universe": [0, 1],
//    "relations": {"1": [[0], []], "2": [[[0, 1], [1, 0]]]},
//    "abstraction": {"kind": "ext", "pairs": [[0, 0]]}}
// Arity-1 relations are flat atom lists; higher arities are tuple lists.
FiniteStructure structure_from_json(const nlohmann::json &j);
nlohmann::json structure_to_json(const FiniteStructure &s);

} // namespace sol
