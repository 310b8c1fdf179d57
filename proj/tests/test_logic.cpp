#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sol/ast.hpp"
#include "sol/classify.hpp"
#include "sol/error.hpp"
#include "sol/parse.hpp"
#include "sol/print.hpp"
#include "sol/schema.hpp"
#include "sol/theories.hpp"

#include <random>
#include <string>
#include <vector>

using namespace sol;

namespace {

FormulaPtr P(const std::string &text) { return parse_formula(text); }

template <typename Fn> std::string error_code_of(Fn &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    return "";
}

// Random well-formed formulas. Bound relation arities are tracked in `rels`,
// innermost binder last, so a de Bruijn index i refers to
// rels[rels.size() - 1 - i]. Free names are fixed: objects u, w; relations
// P:1, Q:2, R:3.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(uint64_t seed) : rng(seed) {}
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    TermPtr set_term(const std::vector<int> &rels) {
        std::vector<int> unary;
        for (int i = 0; i < static_cast<int>(rels.size()); ++i)
            if (rels[rels.size() - 1 - static_cast<size_t>(i)] == 1)
                unary.push_back(i);
        const int c = pick(3);
        if (c == 0 && !unary.empty())
            return t_bound_rel(unary[static_cast<size_t>(pick(static_cast<int>(unary.size())))]);
        if (c == 1)
            return t_empty_set();
        return t_free_rel("P", 1);
    }

    TermPtr rel_term(const std::vector<int> &rels, int arity) {
        std::vector<int> match;
        for (int i = 0; i < static_cast<int>(rels.size()); ++i)
            if (rels[rels.size() - 1 - static_cast<size_t>(i)] == arity)
                match.push_back(i);
        if (!match.empty() && pick(2))
            return t_bound_rel(match[static_cast<size_t>(pick(static_cast<int>(match.size())))]);
        if (arity == 1)
            return t_free_rel("P", 1);
        if (arity == 2)
            return t_free_rel("Q", 2);
        return t_free_rel("R", 3);
    }

    TermPtr obj_term(const std::vector<int> &rels, int objs, int depth) {
        switch (pick(depth > 0 ? 8 : 4)) {
        case 0:
            return objs > 0 ? t_bound_obj(pick(objs)) : t_free_obj("u");
        case 1:
            return t_free_obj(pick(2) ? "u" : "w");
        case 2:
            return t_zero();
        case 3:
            return t_def_zero();
        case 4:
            return t_succ(obj_term(rels, objs, depth - 1));
        case 5:
            return t_plus(obj_term(rels, objs, depth - 1), obj_term(rels, objs, depth - 1));
        case 6:
            return t_times(obj_term(rels, objs, depth - 1), obj_term(rels, objs, depth - 1));
        default:
            return t_abs(pick(2) ? AbsOp::Hash : AbsOp::Ext, set_term(rels));
        }
    }

    FormulaPtr atom(const std::vector<int> &rels, int objs) {
        switch (pick(6)) {
        case 0: {
            const int arity = 1 + pick(3);
            std::vector<TermPtr> args;
            for (int i = 0; i < arity; ++i)
                args.push_back(obj_term(rels, objs, 1));
            return f_member(std::move(args), rel_term(rels, arity));
        }
        case 1:
            if (pick(4) == 0)
                return f_member({obj_term(rels, objs, 1)}, t_empty_set());
            return f_member({obj_term(rels, objs, 1)}, set_term(rels));
        case 2:
            return f_equal(obj_term(rels, objs, 2), obj_term(rels, objs, 2));
        case 3:
            return f_leq(obj_term(rels, objs, 2), obj_term(rels, objs, 2));
        case 4:
            return f_card(set_term(rels), obj_term(rels, objs, 1));
        default:
            return f_infinite(set_term(rels));
        }
    }

    FormulaPtr formula(std::vector<int> rels, int objs, int depth) {
        if (depth == 0)
            return atom(rels, objs);
        switch (pick(10)) {
        case 0:
        case 1:
            return atom(rels, objs);
        case 2:
            return f_not(formula(rels, objs, depth - 1));
        case 3:
            return f_and(formula(rels, objs, depth - 1), formula(rels, objs, depth - 1));
        case 4:
            return f_or(formula(rels, objs, depth - 1), formula(rels, objs, depth - 1));
        case 5:
            return f_implies(formula(rels, objs, depth - 1), formula(rels, objs, depth - 1));
        case 6:
            return f_iff(formula(rels, objs, depth - 1), formula(rels, objs, depth - 1));
        case 7: {
            const std::string hint = pick(2) ? "x" : "y";
            const FormulaPtr body = formula(rels, objs + 1, depth - 1);
            return pick(2) ? f_forall_obj(hint, body) : f_exists_obj(hint, body);
        }
        default: {
            const int arity = 1 + pick(3);
            rels.push_back(arity);
            const FormulaPtr body = formula(rels, objs, depth - 1);
            const std::string hint = pick(2) ? "X" : "f";
            return pick(2) ? f_forall_rel(hint, arity, body) : f_exists_rel(hint, arity, body);
        }
        }
    }

    // Quantifier-free matrix over the bound relations in scope.
    FormulaPtr matrix(const std::vector<int> &rels, int depth) {
        if (depth == 0)
            return atom(rels, 0);
        switch (pick(6)) {
        case 0:
        case 1:
            return atom(rels, 0);
        case 2:
            return f_not(matrix(rels, depth - 1));
        case 3:
            return f_and(matrix(rels, depth - 1), matrix(rels, depth - 1));
        case 4:
            return f_or(matrix(rels, depth - 1), matrix(rels, depth - 1));
        default:
            return f_implies(matrix(rels, depth - 1), matrix(rels, depth - 1));
        }
    }

    // Relation-quantifier prefix over a quantifier-free matrix.
    FormulaPtr prefixed(int blocks, int matrix_depth) {
        std::vector<int> rels;
        std::vector<std::pair<bool, int>> prefix;
        for (int i = 0; i < blocks; ++i) {
            const int arity = 1 + pick(2);
            prefix.emplace_back(pick(2) == 0, arity);
            rels.push_back(arity);
        }
        FormulaPtr f = matrix(rels, matrix_depth);
        for (int i = blocks - 1; i >= 0; --i)
            f = prefix[static_cast<size_t>(i)].first
                    ? f_forall_rel("X", prefix[static_cast<size_t>(i)].second, f)
                    : f_exists_rel("X", prefix[static_cast<size_t>(i)].second, f);
        return f;
    }
};

} // namespace

TEST_CASE("parse recognizes the core surface forms") {
    const FormulaPtr f = P("exists X. forall x. R(x, #X)");
    REQUIRE(f->kind == Formula::Kind::ExistsRel);
    CHECK(f->arity == 1);
    const FormulaPtr inner = f->sub[0];
    REQUIRE(inner->kind == Formula::Kind::ForallObj);
    const FormulaPtr atom = inner->sub[0];
    REQUIRE(atom->kind == Formula::Kind::Member);
    REQUIRE(atom->terms.size() == 3);
    CHECK(atom->terms[0]->kind == Term::Kind::BoundObj);
    CHECK(atom->terms[1]->kind == Term::Kind::Abstraction);
    CHECK(atom->terms[2]->kind == Term::Kind::FreeRel);
    CHECK(atom->terms[2]->arity == 2);

    const FormulaPtr g = P("forall x. x = x");
    REQUIRE(g->kind == Formula::Kind::ForallObj);
    CHECK(g->sub[0]->kind == Formula::Kind::Equal);

    CHECK(free_object_vars(P("x = y and u <= w")) ==
          std::set<std::string>{"u", "w", "x", "y"});
    const auto rels = free_relation_vars(P("Q(x, y) or x in P"));
    REQUIRE(rels.size() == 2);
    CHECK(rels.at("P") == 1);
    CHECK(rels.at("Q") == 2);
}

TEST_CASE("bijection macro expands to the first-order conjunction") {
    const FormulaPtr hp_text = P("#X = #Y <-> exists2 f. bijection(f, X, Y)");
    // The same sentence with the macro spelled out by hand.
    const TermPtr x = t_free_rel("X", 1);
    const TermPtr y = t_free_rel("Y", 1);
    const FormulaPtr expanded = f_iff(
        f_equal(t_abs(AbsOp::Hash, x), t_abs(AbsOp::Hash, y)),
        f_exists_rel("f", 2, bijection_formula(t_bound_rel(0), x, y)));
    CHECK(equal(hp_text, expanded));

    // Arity of an unannotated binder is fixed by the macro position.
    const FormulaPtr g = P("exists2 g. bijection(g, P, P)");
    CHECK(g->arity == 2);

    CHECK(error_code_of([] { P("bijection(x, X, Y)"); }) == "parse_error");
}

TEST_CASE("print emits canonical text that reparses") {
    CHECK(print_formula(P("forall x. x = x")) == "forall x. x = x");
    CHECK(print_formula(P("x in X and (y in Y or not x = y)")) ==
          "(x in X and (y in Y or not x = y))");
    const std::string ext_text = print_formula(P("forall X. ext(X) = ext(X)"));
    CHECK(ext_text.find("ext(X)") != std::string::npos);

    // Free relation variables outside the plain uppercase form need a
    // declaration prefix to survive the round trip.
    const FormulaPtr f =
        f_member({t_free_obj("x"), t_free_obj("y")}, t_free_rel("f", 2));
    const std::string text = print_formula(f);
    CHECK(text.find("rel f:2.") != std::string::npos);
    CHECK(equal(P(text), f));
}

TEST_CASE("parse of print is identity on random formulas") {
    Gen g(20260817);
    for (int round = 0; round < 300; ++round) {
        const FormulaPtr f = g.formula({}, 0, 1 + g.pick(6));
        const std::string text = print_formula(f);
        CAPTURE(text);
        const FormulaPtr back = P(text);
        CHECK(equal(back, f));
        // The JSON export names variables the same way the printer does.
        CHECK(formula_to_json(back) == formula_to_json(f));
    }
}

TEST_CASE("parse errors carry a position and a stable code") {
    for (const char *bad : {"forall x.", "x = ", "R(x", "forall 3. x = x",
                            "x in y", "(x = x", "x = x extra", "s(X) = 0",
                            "exists2 R:0. R(x)", "1 = 1"}) {
        CAPTURE(bad);
        CHECK(error_code_of([&] { P(bad); }) == "parse_error");
    }
    try {
        P("forall x. (x = x and )");
        FAIL("expected a parse error");
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("relation arity is inferred and checked across occurrences") {
    const FormulaPtr f = P("exists R. (R(x, y) and R(u, w))");
    CHECK(f->arity == 2);
    CHECK(print_formula(f).find("exists2 R:2.") != std::string::npos);

    // Unused unannotated binders default to sets.
    CHECK(P("exists R. x = x")->arity == 1);

    CHECK(error_code_of([] { P("exists R. (R(x) and R(x, y))"); }) == "arity_mismatch");
    CHECK(error_code_of([] { P("P(x) and P(x, y)"); }) == "arity_mismatch");
    CHECK(error_code_of([] { P("rel R:2. R(x)"); }) == "arity_mismatch");
    CHECK(error_code_of([] { P("rel R:2. rel R:1. R(x, y)"); }) == "parse_error");
    CHECK(error_code_of([] { P("forall2 X:2. ext(X) = x"); }) == "arity_mismatch");
}

TEST_CASE("classification of the one-block and three-block forms") {
    CHECK(classify(P("exists X. forall x. R(x, #X)")) == Classification::sigma(1));
    CHECK(classify(P("forall R. forall X. exists y. (forall x. R(x,y)) -> y = ext(X)")) ==
          Classification::pi(1));
    CHECK(classify(P("forall X. exists y. forall Z. (R(#X,#Z) -> R(y,#Z))")) ==
          Classification::pi(3));

    CHECK(classify(P("forall x. exists y. x <= y")) == Classification::arithmetical());
    CHECK(classify(P("x in P")) == Classification::arithmetical());

    CHECK(classify(P("exists X. forall Y. R(#X, #Y)")) == Classification::sigma(2));
    CHECK(classify(P("forall X. exists Y. R(#X, #Y)")) == Classification::pi(2));

    // Object quantifiers outside every relation quantifier are transparent;
    // between two relation blocks they count as a block of their polarity.
    CHECK(classify(P("forall y. exists X. y in X")) == Classification::sigma(1));
    CHECK(classify(P("exists X. forall y. exists Z. (y in X or y in Z)")) ==
          Classification::sigma(3));
}

TEST_CASE("classification of mixed boolean combinations") {
    // A conjunction straddling the two one-block classes needs both; the
    // universal side is reported.
    CHECK(classify(P("(exists X. x in X) and (forall Y. x in Y)")) ==
          Classification::pi(2));
    // Negation swaps the classes.
    CHECK(classify(P("not exists X. x in X")) == Classification::pi(1));
    CHECK(classify(P("not forall X. x in X")) == Classification::sigma(1));
    // An implication from a universal block is existential content.
    CHECK(classify(P("(forall X. x in X) -> x = x")) == Classification::sigma(1));
}

TEST_CASE("classification order and duals") {
    const auto arith = Classification::arithmetical();
    CHECK(subclass_of(arith, arith));
    CHECK(subclass_of(arith, Classification::sigma(1)));
    CHECK(subclass_of(arith, Classification::pi(1)));
    CHECK(subclass_of(Classification::sigma(1), Classification::sigma(1)));
    CHECK(subclass_of(Classification::sigma(1), Classification::sigma(2)));
    CHECK(subclass_of(Classification::sigma(1), Classification::pi(2)));
    CHECK(subclass_of(Classification::pi(1), Classification::sigma(2)));
    CHECK_FALSE(subclass_of(Classification::sigma(1), Classification::pi(1)));
    CHECK_FALSE(subclass_of(Classification::pi(1), Classification::sigma(1)));
    CHECK_FALSE(subclass_of(Classification::sigma(2), Classification::sigma(1)));
    CHECK_FALSE(subclass_of(Classification::sigma(2), Classification::pi(2)));
    CHECK_FALSE(subclass_of(Classification::sigma(1), arith));

    CHECK(dual(arith) == arith);
    CHECK(dual(Classification::sigma(3)) == Classification::pi(3));
    CHECK(dual(Classification::pi(1)) == Classification::sigma(1));

    CHECK(to_string(arith) == "Arithmetical");
    CHECK(to_string(Classification::sigma(2)) == "Sigma(2)");
    CHECK(to_string(Classification::pi(1)) == "Pi(1)");
}

TEST_CASE("negating a prefixed formula lands in the dual class") {
    Gen g(7041776);
    for (int round = 0; round < 300; ++round) {
        const FormulaPtr f = g.prefixed(g.pick(5), 2);
        const Classification c = classify(f);
        CAPTURE(print_formula(f));
        CHECK(classify(negation_normal_form(f_not(f))) == dual(c));
        CHECK(classify(negation_normal_form(f)) == c);
    }
}

TEST_CASE("relation quantifiers extend prefixes monotonically") {
    Gen g(1879);
    for (int round = 0; round < 300; ++round) {
        const FormulaPtr f = g.prefixed(g.pick(5), 2);
        const Classification c = classify(f);
        const FormulaPtr ex = f_exists_rel("W", 1, f);
        const FormulaPtr all = f_forall_rel("W", 1, f);
        CAPTURE(print_formula(f));
        if (c == Classification::arithmetical()) {
            CHECK(classify(ex) == Classification::sigma(1));
            CHECK(classify(all) == Classification::pi(1));
        } else if (c.level == Classification::Level::Sigma) {
            CHECK(classify(ex) == c);
            CHECK(classify(all) == Classification::pi(c.n + 1));
        } else {
            CHECK(classify(all) == c);
            CHECK(classify(ex) == Classification::sigma(c.n + 1));
        }
    }
}

TEST_CASE("comprehension instances have the displayed shape") {
    const FormulaPtr russell = P("exists Y. (ext(Y) = x and not x in Y)");
    const FormulaPtr inst = instantiate_comprehension(russell, "R", {"x"});
    CHECK(equal(inst, P("exists R. forall x. (x in R <-> exists Y. (ext(Y) = x and not x in Y))")));
    // The equivalence embeds the defining block in both polarities and the
    // object quantifier between the blocks counts as one of its own, so the
    // displayed shape costs three alternations.
    CHECK(classify(inst) == Classification::sigma(3));

    CHECK(equal(instantiate_comprehension(P("x = x"), "F", {"x"}),
                P("exists F. forall x. (x in F <-> x = x)")));
    CHECK(equal(instantiate_comprehension(P("x = y"), "R", {"x", "y"}),
                P("exists2 R:2. forall x. forall y. (R(x, y) <-> x = y)")));

    CHECK(error_code_of([&] { instantiate_comprehension(P("x in R"), "R", {"x"}); }) ==
          "relation_not_fresh");
    CHECK(error_code_of([&] { instantiate_comprehension(P("x = x"), "R", {"x", "x"}); }) ==
          "arity_mismatch");
    CHECK(error_code_of([&] { instantiate_comprehension(P("x = x"), "R", {}); }) ==
          "arity_mismatch");
}

TEST_CASE("hyperarithmetic comprehension checks both sides") {
    const FormulaPtr inst = instantiate_delta11(P("x in A"), P("x in A"), "R", {"x"});
    CHECK(equal(inst, P("(forall x. (x in A <-> x in A)) -> "
                        "exists R. forall x. (x in R <-> x in A)")));
    CHECK(classify(inst) == Classification::sigma(1));
    CHECK(subclass_of(classify(inst), Classification::pi(2)));

    // A proper existential/universal defining pair. The equivalence
    // antecedent contributes a universal block and the comprehension
    // consequent an existential one over the embedded blocks.
    const FormulaPtr phi = P("exists Y. Q(x, #Y)");
    const FormulaPtr psi = P("forall Y. Q(x, #Y)");
    REQUIRE(classify(phi) == Classification::sigma(1));
    REQUIRE(classify(psi) == Classification::pi(1));
    const FormulaPtr inst2 = instantiate_delta11(phi, psi, "R", {"x"});
    CHECK(equal(inst2, P("(forall x. ((exists Y. Q(x, #Y)) <-> forall Y. Q(x, #Y))) -> "
                         "exists R. forall x. (x in R <-> exists Y. Q(x, #Y))")));
    CHECK(classify(inst2) == Classification::sigma(3));

    CHECK(error_code_of([&] { instantiate_delta11(psi, psi, "R", {"x"}); }) ==
          "classification_violation");
    CHECK(error_code_of([&] { instantiate_delta11(phi, phi, "R", {"x"}); }) ==
          "classification_violation");
    try {
        instantiate_delta11(psi, psi, "R", {"x"});
        FAIL("expected a classification violation");
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("phi") != std::string::npos);
    }
    CHECK(error_code_of([&] { instantiate_delta11(P("x in R"), P("x in A"), "R", {"x"}); }) ==
          "relation_not_fresh");
}

TEST_CASE("choice instances assert a uniformizing relation") {
    const FormulaPtr inst = instantiate_choice(P("n in P"), {"n"}, "P");
    CHECK(equal(inst, P("(forall n. exists P. n in P) -> "
                        "exists2 R:2. forall n. forall2 P:1. "
                        "((forall m. (m in P <-> R(n, m))) -> n in P)")));
    CHECK(classify(inst) == Classification::sigma(2));

    // The witness relation name avoids capture with a free R in phi.
    const FormulaPtr inst2 = instantiate_choice(P("R(n, m) and n in P"), {"n", "m"}, "P");
    CHECK(classify(inst2) == Classification::sigma(2));
    const auto free_rels = free_relation_vars(inst2);
    REQUIRE(free_rels.count("R") == 1);
    CHECK(free_rels.at("R") == 2);

    CHECK(error_code_of([] { instantiate_choice(P("n = n"), {"n"}, "P"); }) ==
          "missing_variable");
    CHECK(error_code_of([] { instantiate_choice(P("P(n, m)"), {"n", "m"}, "P"); }) ==
          "arity_mismatch");
    CHECK(error_code_of([] { instantiate_choice(P("forall Y. (n in Y or n in P)"), {"n"}, "P"); }) ==
          "classification_violation");
}

TEST_CASE("named sentences parse, round-trip, and are closed") {
    const auto names = sentence_names();
    REQUIRE(names.size() == 13);
    CHECK(names.front() == "Q1");
    CHECK(names.back() == "SA");
    for (const auto &name : names) {
        CAPTURE(name);
        const FormulaPtr s = named_sentence(name);
        CHECK(free_object_vars(s).empty());
        CHECK(free_relation_vars(s).empty());
        CHECK(equal(P(print_formula(s)), s));
    }
    CHECK(error_code_of([] { named_sentence("Q9"); }) == "unknown_sentence");
}

TEST_CASE("named sentences classify at their block depth") {
    for (const auto &name : {"Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7", "Q8"}) {
        CAPTURE(name);
        CHECK(classify(named_sentence(name)) == Classification::arithmetical());
    }
    CHECK(classify(named_sentence("Induction")) == Classification::pi(1));
    CHECK(classify(named_sentence("BLV")) == Classification::pi(1));
    // Both abstraction principles hide an embedded existential in an
    // equivalence, so the universal closure sits one level higher.
    CHECK(classify(named_sentence("HP")) == Classification::pi(2));
    CHECK(classify(named_sentence("Inf")) == Classification::sigma(3));
    CHECK(classify(named_sentence("SA")) == Classification::sigma(2));
}

TEST_CASE("theory names round-trip") {
    for (const char *name :
         {"PA2", "HP2", "BL2", "ACA0", "AHP0", "ABL0", "Delta11-CA0", "Delta11-HP0",
          "Delta11-BL0", "Sigma11AC-CA0", "Sigma11AC-HP0", "Sigma11AC-BL0", "Pi11-CA0",
          "Pi12-HP0", "Pi13-BL0"}) {
        CAPTURE(name);
        CHECK(to_string(parse_theory_id(name)) == name);
    }
    for (const char *bad : {"PA3", "Pi10-CA0", "Delta11-XX0", "Sigma11AC", "pa2", ""}) {
        CAPTURE(bad);
        CHECK(error_code_of([&] { parse_theory_id(bad); }) == "unknown_theory");
    }
    CHECK(parse_theory_id("Pi12-HP0").n == 2);
    CHECK(parse_theory_id("PA2") == TheoryId::pa2());
}

TEST_CASE("theory axiom cores and schema slots") {
    const TheoryAxioms pa2 = theory_axioms(TheoryId::pa2());
    REQUIRE(pa2.core.size() == 9);
    CHECK(pa2.core[0].name == "Q1");
    CHECK(pa2.core[8].name == "Induction");
    REQUIRE(pa2.schemas.size() == 1);
    CHECK(pa2.schemas[0].kind == SchemaKind::Comprehension);
    CHECK_FALSE(pa2.schemas[0].bound.has_value());

    const TheoryAxioms hp2 = theory_axioms(TheoryId::hp2());
    REQUIRE(hp2.core.size() == 1);
    CHECK(hp2.core[0].name == "HP");
    CHECK(equal(hp2.core[0].sentence, named_sentence("HP")));

    const TheoryAxioms bl2 = theory_axioms(TheoryId::bl2());
    REQUIRE(bl2.core.size() == 1);
    CHECK(bl2.core[0].name == "BLV");

    const TheoryAxioms aca = theory_axioms(parse_theory_id("ACA0"));
    REQUIRE(aca.schemas.size() == 1);
    REQUIRE(aca.schemas[0].bound.has_value());
    CHECK(*aca.schemas[0].bound == Classification::arithmetical());

    const TheoryAxioms d11 = theory_axioms(parse_theory_id("Delta11-HP0"));
    REQUIRE(d11.core.size() == 1);
    CHECK(d11.core[0].name == "HP");
    REQUIRE(d11.schemas.size() == 1);
    CHECK(d11.schemas[0].kind == SchemaKind::Delta11);

    const TheoryAxioms ac = theory_axioms(parse_theory_id("Sigma11AC-CA0"));
    REQUIRE(ac.schemas.size() == 2);
    CHECK(ac.schemas[0].kind == SchemaKind::Comprehension);
    REQUIRE(ac.schemas[0].bound.has_value());
    CHECK(*ac.schemas[0].bound == Classification::arithmetical());
    CHECK(ac.schemas[1].kind == SchemaKind::Sigma11Choice);

    const TheoryAxioms pi2 = theory_axioms(parse_theory_id("Pi12-BL0"));
    REQUIRE(pi2.schemas.size() == 1);
    REQUIRE(pi2.schemas[0].bound.has_value());
    CHECK(*pi2.schemas[0].bound == Classification::pi(2));
}

TEST_CASE("json export uses the tagged-union field names") {
    const nlohmann::json j = formula_to_json(P("forall x. x in X"));
    CHECK(j["kind"] == "forall_obj");
    CHECK(j["name"] == "x");
    const nlohmann::json &body = j["body"];
    CHECK(body["kind"] == "in");
    REQUIRE(body["args"].size() == 2);
    CHECK(body["args"][0]["kind"] == "obj_var");
    CHECK(body["args"][1]["kind"] == "rel_var");
    CHECK(body["args"][1]["name"] == "X");

    const nlohmann::json q = formula_to_json(P("exists2 R:2. R(x, #X)"));
    CHECK(q["kind"] == "exists_rel");
    CHECK(q["arity"] == 2);
    CHECK(q["body"]["args"][1]["kind"] == "hash");
}
