#pragma once

#include "sol/ast.hpp"
#include "sol/poly.hpp"

#include "json.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sol {

// Definable subsets of an algebraically closed field of characteristic zero,
// one variable, rational parameters. Strong minimality makes every such set
// finite or cofinite, so a set is represented by a monic squarefree base
// polynomial together with a mode: the set is roots(base) or its complement.
// The empty set is (1, Finite) and the full field is (1, Cofinite).

enum class AcfMode { Finite, Cofinite };

class AcfSet {
  public:
    AcfSet(); // the empty set

    // Both constructors take any nonzero polynomial and canonicalize the base
    // to its monic squarefree part; a constant base means no roots. The zero
    // polynomial has no canonical base and is rejected (zero_polynomial);
    // write the full field as co_roots of a constant.
    static AcfSet roots(const Poly &p);
    static AcfSet co_roots(const Poly &p);
    static AcfSet empty();
    static AcfSet full();

    const Poly &base() const { return base_; }
    AcfMode mode() const { return mode_; }

    bool member(const Rat &q) const;
    bool is_empty() const;
    bool is_full() const;

    bool operator==(const AcfSet &o) const { return mode_ == o.mode_ && base_ == o.base_; }
    bool operator!=(const AcfSet &o) const { return !(*this == o); }

  private:
    Poly base_;
    AcfMode mode_;
};

enum class SetOp { Union, Intersect, Complement, Difference };

// Boolean algebra on canonical forms. Complement ignores y; the binary
// operations require it (missing_operand).
AcfSet acf_algebra(SetOp op, const AcfSet &x, const std::optional<AcfSet> &y = std::nullopt);

inline AcfSet acf_union(const AcfSet &x, const AcfSet &y) {
    return acf_algebra(SetOp::Union, x, y);
}
inline AcfSet acf_intersect(const AcfSet &x, const AcfSet &y) {
    return acf_algebra(SetOp::Intersect, x, y);
}
inline AcfSet acf_complement(const AcfSet &x) { return acf_algebra(SetOp::Complement, x); }
inline AcfSet acf_difference(const AcfSet &x, const AcfSet &y) {
    return acf_algebra(SetOp::Difference, x, y);
}

// Cardinality class: the size of the set if finite, of its complement if
// cofinite. Two sets admit a definable bijection exactly when their classes
// are equal.
struct CardClass {
    AcfMode mode = AcfMode::Finite;
    int n = 0;
    bool operator==(const CardClass &o) const { return mode == o.mode && n == o.n; }
    bool operator!=(const CardClass &o) const { return !(*this == o); }
};

CardClass acf_card(const AcfSet &x);

// The counting map: a finite set of n elements has value n, a cofinite set
// with n elements in its complement has value -(n+1). Values are understood
// as integers embedded in the field via its prime field.
int acf_number(const AcfSet &x);

// True iff the two sets have the same cardinality class, which coincides
// with the existence of a definable bijection between them.
bool acf_hume_equiv(const AcfSet &x, const AcfSet &y);

// Canonical set with the given counting value: {1, ..., n} for n >= 0, the
// complement of {1, ..., -n-1} for n < 0.
AcfSet acf_canonical_set(int n);

// Successor relation: true iff there are sets X, Y with values n, m where Y
// extends X by exactly one point. Computed by constructing a witness X and
// searching for the extra point, not by a closed form: the value determines
// the cardinality class and adjoining one outside point moves the class
// uniformly, so the canonical witness decides the existential. For a
// cofinite X the extra point must come from X's complement; the full field
// has an empty complement, which is why its value -1 has no successor.
bool acf_successor_P(int n, int m);

// One candidate for the successor-axiom scan: whether the set is hereditary
// and closed under the successor relation within the scanned window, whether
// it contains every nonzero integer of absolute value <= bound, and the
// first escaping pair (n in the set, successor m outside it) if any.
struct SaSetCheck {
    AcfSet candidate;
    bool hereditary = false;
    bool closed = false;
    bool contains_window = false;
    std::optional<std::pair<int, int>> escape;
};

struct SaReport {
    int bound = 0;
    int witness_number = 0; // value of the full field
    bool successor_found = false;
    std::vector<SaSetCheck> checks;
};

// Scans |n|, |m| <= bound (precondition_violation for bound < 1). The report
// shows that the full field's value has no successor in the window and
// exercises a fixed family of candidate sets: the full field and the field
// minus {0} pass every check, a finite set and a punctured field fail with
// an escaping pair. The scan is a bounded check, not a proof: it covers the
// representable candidates and the stated window only.
SaReport acf_sa_report(int bound);

// Parametric descriptor theta(x, y): a Boolean combination of polynomial
// equations and disequations p(x, y) = 0 / p(x, y) != 0, with p given by its
// x-power coefficients, each a rational polynomial in the single parameter y.
struct Theta;
using ThetaPtr = std::shared_ptr<const Theta>;

struct Theta {
    enum class Kind { Eq, Neq, Not, And, Or };
    Kind kind;
    std::vector<Poly> x_coeffs; // Eq/Neq: coefficient of x^i, a Poly in y
    std::vector<ThetaPtr> sub;
};

ThetaPtr theta_eq(std::vector<Poly> x_coeffs);
ThetaPtr theta_neq(std::vector<Poly> x_coeffs);
ThetaPtr theta_not(const ThetaPtr &a);
ThetaPtr theta_and(const ThetaPtr &a, const ThetaPtr &b);
ThetaPtr theta_or(const ThetaPtr &a, const ThetaPtr &b);

// Text form: comparisons of polynomial expressions in x and y joined by
// not/and/or with parentheses, e.g. "x*y = 1 or not (x^2 = y and x != y)".
// Comparisons other than = and != are rejected with unsupported_shape.
ThetaPtr parse_theta(const std::string &text);
std::string theta_to_string(const ThetaPtr &t);

// Sum of the atoms' x-degrees: an upper bound for the size of whichever of
// theta(., a) and its complement is finite, uniform in the parameter.
int theta_degree_bound(const ThetaPtr &t);

// The set theta(., a): substitute the parameter and apply the set algebra.
AcfSet theta_set(const ThetaPtr &t, const Rat &a);

// The atom-level translation used by acf_theta_prime: the formula p(v, y)=0
// with the descriptor's x replaced by the given term and the parameter left
// as the free object variable y. Denominators are cleared and negative
// monomials moved across the equation, so the result uses only 0, s, +, *.
// Exposed so tests can decode emitted formulas against it.
FormulaPtr theta_matrix(const ThetaPtr &t, const TermPtr &var);

// First-order defining formula for the value of the counting map on
// theta(., y), free variables x (the value) and y (the parameter): a
// disjunction over i = 0..N of clauses "theta(., y) has exactly i elements
// and x = i" and "the complement has exactly i elements and x = -(i+1)",
// where N = theta_degree_bound and each exact-count clause is the standard
// encoding by i existential witnesses, their pairwise distinctness, and a
// universal cover. Negative values appear as x + (i+1) = 0.
FormulaPtr acf_theta_prime(const ThetaPtr &t);

// Text form "roots(x^2+1)" / "co-roots(x^2+1)"; JSON form
// {"base": "x^2+1", "mode": "finite"|"cofinite"}.
std::string acf_set_to_string(const AcfSet &x);
AcfSet acf_set_from_string(const std::string &text);
nlohmann::json acf_set_to_json(const AcfSet &x);
AcfSet acf_set_from_json(const nlohmann::json &j);

} // namespace sol
