#pragma once

#include "sol/ast.hpp"
#include "sol/classify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sol {

// The three base theories and the comprehension regimes that cut them down.
// CA is the arithmetic family (full second-order arithmetic at Full), HP and
// BL replace the arithmetic core by the abstraction sentence.
enum class BaseTheory { CA, HP, BL };
enum class SchemaLevel { Full, Arithmetical, Delta11, Sigma11Choice, Pi1n };

struct TheoryId {
    BaseTheory base = BaseTheory::CA;
    SchemaLevel level = SchemaLevel::Full;
    int n = 0; // Pi1n only

    static TheoryId pa2() { return {BaseTheory::CA, SchemaLevel::Full, 0}; }
    static TheoryId hp2() { return {BaseTheory::HP, SchemaLevel::Full, 0}; }
    static TheoryId bl2() { return {BaseTheory::BL, SchemaLevel::Full, 0}; }
};

inline bool operator==(const TheoryId &a, const TheoryId &b) {
    return a.base == b.base && a.level == b.level && a.n == b.n;
}
inline bool operator!=(const TheoryId &a, const TheoryId &b) { return !(a == b); }

// Names: PA2, HP2, BL2; ACA0, AHP0, ABL0; Delta11-CA0, Delta11-HP0,
// Delta11-BL0; Sigma11AC-CA0, ...; Pi11-CA0, Pi12-HP0, ... Errors with
// "unknown_theory".
TheoryId parse_theory_id(const std::string &name);
std::string to_string(const TheoryId &id);

struct NamedSentence {
    std::string name;
    FormulaPtr sentence;
};

enum class SchemaKind { Comprehension, Delta11, Sigma11Choice };

// A schema generator slot: the kind plus, for comprehension, the largest
// admissible class of the instantiating formula (absent = unrestricted).
struct SchemaSlot {
    SchemaKind kind;
    std::optional<Classification> bound;
};

struct TheoryAxioms {
    std::vector<NamedSentence> core;
    std::vector<SchemaSlot> schemas;
};

// Finite axiom core plus schema generator descriptors. The instantiators in
// schema.hpp realize the generators.
TheoryAxioms theory_axioms(const TheoryId &id);

// Named sentences: Q1..Q8, Induction, HP, BLV, Inf, SA. Errors with
// "unknown_sentence".
FormulaPtr named_sentence(const std::string &name);
std::vector<std::string> sentence_names();

} // namespace sol
