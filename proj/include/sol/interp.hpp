#pragma once

#include "sol/ast.hpp"
#include "sol/pairing.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace sol {

// Counting-based elimination of # terms. Every atom mentioning a # term is
// rewritten so the result speaks the arithmetic language: the equation
// #X = t becomes
//
//   [exists n (card(X, n) and t = s(n))]  or  [infinite(X) and t = 0]
//
// and a # term nested anywhere else is pulled out through a fresh
// existential first. card and infinite stay atoms here; the classifier
// counts them as arithmetical, and boolos_translate_finite expands them for
// finite evaluation. Formulas without # come back unchanged. An ext term
// anywhere raises "unsupported_abstraction".
FormulaPtr boolos_translate(const FormulaPtr &f);

// Same elimination, with the counting rule expanded into the pure
// membership language so the output evaluates on a finite structure whose
// universe has the given size m >= 1: #X = t becomes the disjunction over
// k = 0..m of (X has exactly k members, and t = numeral_name(k + 1)). The
// numerals are free object variables; bind numeral_name(j) to the integer j
// in the evaluation environment. The infinite branch is dropped: no finite
// set satisfies it. The size check on k members is the plain
// distinct-witnesses-and-no-more encoding, so every emitted atom is a
// membership or an equation.
FormulaPtr boolos_translate_finite(const FormulaPtr &f, int universe_size);

// Name of the j-th numeral variable ("num1", "num2", ...).
std::string numeral_name(int j);

// Arithmetic-to-abstraction compilation. The translated formula speaks the
// abstraction language extended with one defined term (Zero) and four
// reserved relation variables (SuccRel, N, PlusGraph, TimesGraph); the
// definitions carry their meaning, with parameters named "a", "b", "c" in
// argument order.
struct FregeTranslation {
    FormulaPtr translated;
    std::vector<std::pair<std::string, FormulaPtr>> definitions;
};

// Rewrites a formula in the arithmetic language: object quantifiers are
// relativized to N, 0 becomes the Zero term, and s / + / * / <= atoms become
// graph memberships (s(x) = y turns into SuccRel(x, y) directly; composite
// terms get fresh N-relativized witnesses; x <= y becomes
// exists z in N. PlusGraph(x, z, y)). A free relation variable in the input
// that collides with a reserved definition name raises
// "precondition_violation".
FregeTranslation frege_translate(const FormulaPtr &f);

// Expands every defined symbol away, leaving a formula in the plain
// abstraction language: Zero becomes #{}, and the reserved relation atoms
// are replaced by their definitions (N introduces a universal set
// quantifier, the graphs introduce existential ones).
FormulaPtr flatten(const FregeTranslation &t);

// One parametric set descriptor in an enumerated family: the display form
// of the set it defines, the display form of its parameters, and a selector
// producing the base value of the set's canonical representative. The
// selector runs only on the first member of each extensional class.
struct DeltaFamilyItem {
    std::string set_display;
    std::string parameters;
    std::function<Int()> representative_value;
};

struct PartialDelta {
    struct Entry {
        std::string representative; // set display of the class head
        std::size_t head = 0;       // least family index defining the set
        Int value;                  // tagger output iota_head(base value)
    };
    // One record per family item: its index, the least earlier index
    // defining the same set (itself when it opens a new class), and its own
    // parameter display.
    struct Provenance {
        std::size_t item = 0;
        std::size_t routed_to = 0;
        std::string parameters;
    };
    std::vector<Entry> entries;
    std::vector<Provenance> provenance;
};

// Routes each family member to the least earlier member defining the same
// set and assigns each class the value iota_m(base) where m is the class
// head and base its representative value. same_set must be an equivalence
// test on family indices; distinct classes land in disjoint iota ranges, so
// the assignment is injective even when base values repeat. A null or
// throwing representative selector raises "representative_failure".
PartialDelta build_partial_abstraction(
    const std::vector<DeltaFamilyItem> &family,
    const std::function<bool(std::size_t, std::size_t)> &same_set,
    const IotaChain &tagger);

} // namespace sol
