#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sol {

// Two-sorted second-order terms and formulas, locally nameless: bound
// variables are de Bruijn indices (separate counters for the object sort and
// the relation sorts), free variables are named. Binders carry a surface-name
// hint that printing uses and equality ignores.

enum class AbsOp { Hash, Ext };

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Term {
    enum class Kind {
        BoundObj,    // index: distance to the enclosing object binder
        FreeObj,     // name
        BoundRel,    // index: distance to the enclosing relation binder
        FreeRel,     // name, arity
        EmptySet,    // {}
        Abstraction, // op applied to args[0], a unary relation term
        Zero,        // numeral 0
        DefZero,     // the defined constant "Zero" used by interpretations
        Succ,        // s(args[0])
        Plus,        // (args[0] + args[1])
        Times,       // (args[0] * args[1])
    };

    Kind kind;
    int index = 0;
    std::string name;
    int arity = 1;
    AbsOp op = AbsOp::Hash;
    std::vector<TermPtr> args;
};

struct Formula {
    enum class Kind {
        Member,   // terms = object arguments, then the relation term last
        Equal,    // terms = two object terms
        Leq,      // terms = two object terms
        Card,     // terms = set term, object term
        Infinite, // terms = set term
        Not,      // sub = one formula
        And,
        Or,
        Implies,
        Iff,       // sub = two formulas
        ForallObj, // hint, sub = body
        ExistsObj,
        ForallRel, // hint, arity, sub = body
        ExistsRel,
    };

    Kind kind;
    std::vector<TermPtr> terms;
    std::vector<FormulaPtr> sub;
    std::string hint;
    int arity = 1;
};

// Term builders.
TermPtr t_bound_obj(int index);
TermPtr t_free_obj(const std::string &name);
TermPtr t_bound_rel(int index);
TermPtr t_free_rel(const std::string &name, int arity);
TermPtr t_empty_set();
TermPtr t_abs(AbsOp op, const TermPtr &set);
TermPtr t_zero();
TermPtr t_def_zero();
TermPtr t_succ(const TermPtr &t);
TermPtr t_plus(const TermPtr &a, const TermPtr &b);
TermPtr t_times(const TermPtr &a, const TermPtr &b);

// Formula builders.
FormulaPtr f_member(std::vector<TermPtr> objects, const TermPtr &rel);
FormulaPtr f_equal(const TermPtr &a, const TermPtr &b);
FormulaPtr f_leq(const TermPtr &a, const TermPtr &b);
FormulaPtr f_card(const TermPtr &set, const TermPtr &obj);
FormulaPtr f_infinite(const TermPtr &set);
FormulaPtr f_not(const FormulaPtr &a);
FormulaPtr f_and(const FormulaPtr &a, const FormulaPtr &b);
FormulaPtr f_or(const FormulaPtr &a, const FormulaPtr &b);
FormulaPtr f_implies(const FormulaPtr &a, const FormulaPtr &b);
FormulaPtr f_iff(const FormulaPtr &a, const FormulaPtr &b);
FormulaPtr f_and_all(const std::vector<FormulaPtr> &parts); // empty -> "0 = 0"
FormulaPtr f_forall_obj(const std::string &hint, const FormulaPtr &body);
FormulaPtr f_exists_obj(const std::string &hint, const FormulaPtr &body);
FormulaPtr f_forall_rel(const std::string &hint, int arity, const FormulaPtr &body);
FormulaPtr f_exists_rel(const std::string &hint, int arity, const FormulaPtr &body);

// Structural equality; binder hints are ignored, so this is alpha-equivalence.
bool equal(const TermPtr &a, const TermPtr &b);
bool equal(const FormulaPtr &a, const FormulaPtr &b);

// Free variables. Relation arities are checked for consistency across
// occurrences; a clash raises an arity-mismatch error naming the variable.
std::set<std::string> free_object_vars(const FormulaPtr &f);
std::map<std::string, int> free_relation_vars(const FormulaPtr &f);
bool has_free_relation_var(const FormulaPtr &f, const std::string &name);

// Adds (dobj, drel) to every bound index in the term. Terms contain no
// binders, so every bound index refers to the host formula.
TermPtr shift_term(const TermPtr &t, int dobj, int drel);

// Capture-avoiding substitution of a term for a free object variable;
// inserted bound indices are shifted past the binders they cross.
FormulaPtr subst_free_obj(const FormulaPtr &f, const std::string &name, const TermPtr &t);

// Turns free-variable occurrences into references to a binder about to be
// wrapped around the whole formula.
FormulaPtr close_obj(const FormulaPtr &f, const std::string &name);
FormulaPtr close_rel(const FormulaPtr &f, const std::string &name);

// Rewrites atoms bottom-up. The callback sees each atom with the number of
// object / relation binders above it and may return a replacement.
using AtomRewriter =
    std::function<std::optional<FormulaPtr>(const Formula &atom, int obj_depth, int rel_depth)>;
FormulaPtr rewrite_atoms(const FormulaPtr &f, const AtomRewriter &rewrite);

// Negation normal form: negations pushed to atoms, -> and <-> expanded.
FormulaPtr negation_normal_form(const FormulaPtr &f);

// The graph-of-a-bijection conjunction between set terms x and y over the
// binary relation term f: contained in x cross y, total on x, onto y,
// functional, injective.
FormulaPtr bijection_formula(const TermPtr &f, const TermPtr &x, const TermPtr &y);

} // namespace sol
