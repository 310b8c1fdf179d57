#pragma once

#include "sol/ast.hpp"

#include <string>

namespace sol {

// Position in the analytical hierarchy as counted over relation-quantifier
// blocks: Arithmetical when no bound relation variable contributes, otherwise
// Sigma(n) / Pi(n) with n >= 1.
struct Classification {
    enum class Level { Arithmetical, Sigma, Pi };
    Level level = Level::Arithmetical;
    int n = 0;

    static Classification arithmetical() { return {Level::Arithmetical, 0}; }
    static Classification sigma(int n) { return {Level::Sigma, n}; }
    static Classification pi(int n) { return {Level::Pi, n}; }
};

bool operator==(const Classification &a, const Classification &b);
inline bool operator!=(const Classification &a, const Classification &b) { return !(a == b); }

// Inclusion order of the hierarchy: Arithmetical is below everything,
// Sigma(n) and Pi(n) are below both classes at every higher level, and each
// class is below itself.
bool subclass_of(const Classification &a, const Classification &b);

// Dual class: Sigma <-> Pi at the same level; Arithmetical is self-dual.
Classification dual(const Classification &c);

std::string to_string(const Classification &c);

// Classifies by the closure rules: atoms are arithmetical; connectives take
// the worst of their parts; an existential relation quantifier keeps Sigma(n)
// and lifts Pi(n) to Sigma(n+1), dually for universal; an object quantifier
// strictly between relation quantifiers is promoted to a relation quantifier
// of the same polarity, while object quantifiers outside all relation
// quantifiers or inside all of them are transparent.
Classification classify(const FormulaPtr &f);

} // namespace sol
