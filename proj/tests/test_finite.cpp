#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sol/ast.hpp"
#include "sol/error.hpp"
#include "sol/finite.hpp"
#include "sol/parse.hpp"
#include "sol/theories.hpp"

#include "support/naive_eval.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
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

template <typename Fn> std::string error_message_of(Fn &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.what();
    }
    return "";
}

RelationValue unary(const std::set<int> &atoms) {
    RelationValue out;
    for (int a : atoms)
        out.insert(Tuple{a});
    return out;
}

// Universe {0, ..., n-1} with the listed arity-1 family; arity-2 and
// abstraction slots are added by the callers that need them.
FiniteStructure small_structure(int n, const std::vector<std::set<int>> &sets) {
    FiniteStructure s;
    for (int i = 0; i < n; ++i)
        s.universe.push_back(i);
    std::vector<RelationValue> family;
    for (const auto &a : sets)
        family.push_back(unary(a));
    s.families[1] = std::move(family);
    return s;
}

std::vector<RelationValue> all_binary_relations(int n) {
    std::vector<Tuple> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            pairs.push_back(Tuple{i, j});
    std::vector<RelationValue> out;
    for (size_t mask = 0; mask < (static_cast<size_t>(1) << pairs.size()); ++mask) {
        RelationValue r;
        for (size_t k = 0; k < pairs.size(); ++k)
            if (mask & (static_cast<size_t>(1) << k))
                r.insert(pairs[k]);
        out.push_back(std::move(r));
    }
    return out;
}

FiniteStructure relabel(const FiniteStructure &s, const std::map<int, int> &pi) {
    FiniteStructure out;
    for (int a : s.universe)
        out.universe.push_back(pi.at(a));
    for (const auto &[arity, family] : s.families) {
        std::vector<RelationValue> mapped;
        for (const RelationValue &r : family) {
            RelationValue nr;
            for (const Tuple &t : r) {
                Tuple nt;
                for (int a : t)
                    nt.push_back(pi.at(a));
                nr.insert(std::move(nt));
            }
            mapped.push_back(std::move(nr));
        }
        out.families[arity] = std::move(mapped);
    }
    if (s.abstraction) {
        AbstractionMap m;
        m.kind = s.abstraction->kind;
        for (const auto &[index, atom] : s.abstraction->pairs)
            m.pairs.emplace_back(index, pi.at(atom));
        out.abstraction = std::move(m);
    }
    return out;
}

// Random total instances for the agreement property: every free variable is
// assigned, the abstraction map (when present) covers all of S1, and the
// generated formulas apply the structure's own operator to bound arity-1
// variables or {} only, so both evaluators are total on them.
struct InstanceGen {
    std::mt19937_64 rng;
    explicit InstanceGen(uint64_t seed) : rng(seed) {}
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    FiniteStructure structure() {
        const int n = 1 + pick(3);
        std::vector<int> labels{0, 1, 2, 3, 4, 5};
        std::shuffle(labels.begin(), labels.end(), rng);
        FiniteStructure s;
        for (int i = 0; i < n; ++i)
            s.universe.push_back(labels[static_cast<size_t>(i)]);

        std::vector<RelationValue> subsets;
        for (size_t mask = 0; mask < (static_cast<size_t>(1) << n); ++mask) {
            RelationValue r;
            for (int i = 0; i < n; ++i)
                if (mask & (static_cast<size_t>(1) << i))
                    r.insert(Tuple{s.universe[static_cast<size_t>(i)]});
            subsets.push_back(std::move(r));
        }
        std::shuffle(subsets.begin() + 1, subsets.end(), rng);
        const int k1 = 1 + pick(static_cast<int>(subsets.size()));
        s.families[1] =
            std::vector<RelationValue>(subsets.begin(), subsets.begin() + k1);

        std::set<RelationValue> binary;
        const int k2 = pick(5);
        for (int i = 0; i < k2; ++i) {
            RelationValue r;
            for (int a : s.universe)
                for (int b : s.universe)
                    if (pick(2))
                        r.insert(Tuple{a, b});
            binary.insert(std::move(r));
        }
        s.families[2] = std::vector<RelationValue>(binary.begin(), binary.end());

        if (pick(3)) {
            AbstractionMap m;
            m.kind = pick(2) ? AbsOp::Hash : AbsOp::Ext;
            for (size_t i = 0; i < s.families[1].size(); ++i)
                m.pairs.emplace_back(i, s.universe[static_cast<size_t>(pick(n))]);
            s.abstraction = std::move(m);
        }
        return s;
    }

    Env environment(const FiniteStructure &s) {
        Env env;
        const int n = static_cast<int>(s.universe.size());
        env.objects["u"] = s.universe[static_cast<size_t>(pick(n))];
        env.objects["w"] = s.universe[static_cast<size_t>(pick(n))];
        RelationValue p;
        for (int a : s.universe)
            if (pick(2))
                p.insert(Tuple{a});
        env.relations["P"] = std::move(p);
        RelationValue q;
        for (int a : s.universe)
            for (int b : s.universe)
                if (pick(2))
                    q.insert(Tuple{a, b});
        env.relations["Q"] = std::move(q);
        return env;
    }

    // Bound relation arities, innermost binder last; index i refers to
    // rels[rels.size() - 1 - i]. Abstraction operands pass free_ok = false:
    // the free relation P may take a value outside the abstraction domain,
    // while bound variables and {} always stay inside it because the map is
    // total on S1 and {} is forced into S1 by structure().
    TermPtr set_term(const std::vector<int> &rels, bool free_ok) {
        std::vector<int> unary;
        for (int i = 0; i < static_cast<int>(rels.size()); ++i)
            if (rels[rels.size() - 1 - static_cast<size_t>(i)] == 1)
                unary.push_back(i);
        const int c = pick(3);
        if (c == 0 && !unary.empty())
            return t_bound_rel(unary[static_cast<size_t>(pick(static_cast<int>(unary.size())))]);
        if (c == 1 && free_ok)
            return t_free_rel("P", 1);
        return t_empty_set();
    }

    TermPtr obj_term(const FiniteStructure &s, const std::vector<int> &rels, int objs) {
        const bool abs_ok = s.abstraction.has_value();
        switch (pick(abs_ok ? 4 : 3)) {
        case 0:
            return objs > 0 ? t_bound_obj(pick(objs)) : t_free_obj("u");
        case 1:
            return t_free_obj("u");
        case 2:
            return t_free_obj("w");
        default:
            return t_abs(s.abstraction->kind, set_term(rels, false));
        }
    }

    FormulaPtr atom(const FiniteStructure &s, const std::vector<int> &rels, int objs) {
        std::vector<int> binary;
        for (int i = 0; i < static_cast<int>(rels.size()); ++i)
            if (rels[rels.size() - 1 - static_cast<size_t>(i)] == 2)
                binary.push_back(i);
        switch (pick(4)) {
        case 0:
            return f_equal(obj_term(s, rels, objs), obj_term(s, rels, objs));
        case 1:
            return f_member({obj_term(s, rels, objs)}, set_term(rels, true));
        case 2: {
            TermPtr rel = binary.empty() || pick(2)
                              ? t_free_rel("Q", 2)
                              : t_bound_rel(binary[static_cast<size_t>(
                                    pick(static_cast<int>(binary.size())))]);
            return f_member({obj_term(s, rels, objs), obj_term(s, rels, objs)}, rel);
        }
        default:
            return f_infinite(set_term(rels, true));
        }
    }

    FormulaPtr formula(const FiniteStructure &s, std::vector<int> &rels, int objs, int depth) {
        if (depth == 0)
            return atom(s, rels, objs);
        switch (pick(8)) {
        case 0:
            return atom(s, rels, objs);
        case 1:
            return f_not(formula(s, rels, objs, depth - 1));
        case 2:
            return f_and(formula(s, rels, objs, depth - 1), formula(s, rels, objs, depth - 1));
        case 3:
            return f_or(formula(s, rels, objs, depth - 1), formula(s, rels, objs, depth - 1));
        case 4:
            return f_implies(formula(s, rels, objs, depth - 1),
                             formula(s, rels, objs, depth - 1));
        case 5:
            return f_iff(formula(s, rels, objs, depth - 1), formula(s, rels, objs, depth - 1));
        case 6: {
            const FormulaPtr body = formula(s, rels, objs + 1, depth - 1);
            return pick(2) ? f_forall_obj("x", body) : f_exists_obj("x", body);
        }
        default: {
            const int arity = 1 + pick(2);
            rels.push_back(arity);
            const FormulaPtr body = formula(s, rels, objs, depth - 1);
            rels.pop_back();
            return pick(2) ? f_forall_rel("X", arity, body) : f_exists_rel("X", arity, body);
        }
        }
    }
};

} // namespace

TEST_CASE("structure validation accepts well-formed structures and names each defect") {
    FiniteStructure s = small_structure(2, {{}, {0}});
    s.families[2] = {unary({}), RelationValue{{0, 1}}};
    AbstractionMap m;
    m.kind = AbsOp::Ext;
    m.pairs = {{0, 0}, {1, 1}};
    s.abstraction = m;
    CHECK_NOTHROW(validate_structure(s));

    FiniteStructure bad = s;
    bad.universe = {0, 1, 1};
    CHECK(error_code_of([&] { validate_structure(bad); }) == "invalid_structure");

    bad = s;
    bad.families[0] = {unary({})};
    CHECK(error_code_of([&] { validate_structure(bad); }) == "invalid_structure");

    bad = s;
    bad.families[1].push_back(RelationValue{{0, 1}});
    CHECK(error_code_of([&] { validate_structure(bad); }) == "invalid_structure");

    bad = s;
    bad.families[1].push_back(unary({5}));
    CHECK(error_code_of([&] { validate_structure(bad); }) == "invalid_structure");

    bad = s;
    bad.families[1].push_back(unary({}));
    CHECK(error_code_of([&] { validate_structure(bad); }) == "invalid_structure");

    bad = s;
    bad.abstraction->pairs.push_back({7, 0});
    CHECK(error_code_of([&] { validate_structure(bad); }) == "invalid_structure");

    bad = s;
    bad.abstraction->pairs.push_back({1, 9});
    CHECK(error_code_of([&] { validate_structure(bad); }) == "invalid_structure");

    bad = s;
    bad.abstraction->pairs = {{0, 0}, {0, 1}};
    CHECK(error_code_of([&] { validate_structure(bad); }) == "invalid_structure");
}

TEST_CASE("relation quantifiers range over the listed families only") {
    // The same comprehension instance separates a full powerset from a
    // structure whose arity-1 family omits the witness.
    const FormulaPtr inst = P("exists R. forall x. (x in R <-> x = x)");
    const FiniteStructure full = full_powerset_structure(2, AbsOp::Ext, {0, 0, 0, 0});
    CHECK(eval(full, inst));

    const FiniteStructure sparse = small_structure(1, {{}});
    CHECK_FALSE(eval(sparse, inst));

    // A missing arity key is an empty family.
    Env env;
    env.objects["u"] = 0;
    CHECK_FALSE(eval(sparse, P("exists2 T:3. T(u, u, u)"), env));
    CHECK(eval(sparse, P("forall2 T:3. T(u, u, u)"), env));
}

TEST_CASE("extensionality and cardinality principles on hand-built structures") {
    const FormulaPtr blv = named_sentence("BLV");
    const FormulaPtr hp = named_sentence("HP");

    // A non-injective extension map refutes extensionality.
    FiniteStructure clash = small_structure(2, {{}, {0}});
    clash.abstraction = AbstractionMap{AbsOp::Ext, {{0, 0}, {1, 0}}};
    CHECK_FALSE(eval(clash, blv));

    // An injective one satisfies it on this family.
    FiniteStructure ok = clash;
    ok.abstraction = AbstractionMap{AbsOp::Ext, {{0, 0}, {1, 1}}};
    CHECK(eval(ok, blv));

    // A constant cardinality map equates sets of different size, and no
    // bijection between them exists.
    const FiniteStructure constant = full_powerset_structure(2, AbsOp::Hash, {0, 0, 0, 0});
    CHECK_FALSE(eval(constant, hp));

    // On a small family whose members have distinct sizes, a size-respecting
    // map satisfies the principle when the witnessing bijections are present.
    FiniteStructure sized = small_structure(2, {{}, {0}});
    sized.families[2] = all_binary_relations(2);
    sized.abstraction = AbstractionMap{AbsOp::Hash, {{0, 0}, {1, 1}}};
    CHECK(eval(sized, hp));
}

TEST_CASE("free variables come from the environment") {
    const FiniteStructure s = small_structure(2, {{}, {0}});
    Env env;
    env.objects["u"] = 0;
    env.objects["w"] = 1;
    env.relations["P"] = unary({1});
    CHECK_FALSE(eval(s, P("u = w"), env));
    CHECK(eval(s, P("w in P"), env));

    // An environment value need not belong to any family; quantifiers are
    // unaffected by it.
    env.relations["P"] = unary({0, 1});
    CHECK(eval(s, P("u in P and w in P"), env));
    CHECK_FALSE(eval(s, P("exists X. (u in X and w in X)"), env));

    CHECK(error_code_of([&] { eval(s, P("u = v"), env); }) == "unassigned_variable");
    CHECK(error_code_of([&] { eval(s, P("u in F"), env); }) == "unassigned_variable");
    CHECK(error_code_of([&] { eval(s, P("u = u")); }) == "unassigned_variable");

    Env bad;
    bad.objects["u"] = 0;
    bad.relations["P"] = RelationValue{{0, 1}};
    CHECK(error_code_of([&] { eval(s, P("u in P"), bad); }) == "arity_mismatch");
}

TEST_CASE("abstraction and arithmetic vocabulary errors") {
    FiniteStructure s = small_structure(2, {{}, {0}});
    Env env;
    env.objects["u"] = 0;

    CHECK(error_code_of([&] { eval(s, P("ext({}) = u"), env); }) == "abstraction_undefined");

    s.abstraction = AbstractionMap{AbsOp::Hash, {{0, 0}, {1, 1}}};
    CHECK(error_code_of([&] { eval(s, P("ext({}) = u"), env); }) == "abstraction_undefined");
    CHECK(eval(s, P("#{} = u"), env));

    // Partial maps leave sets outside the domain undefined.
    s.abstraction = AbstractionMap{AbsOp::Hash, {{1, 1}}};
    CHECK(error_code_of([&] { eval(s, P("#{} = u"), env); }) == "abstraction_undefined");

    // The evaluated operand decides, not its syntax: a variable whose value
    // lies in the domain is fine even though {} is not.
    Env in_domain;
    in_domain.objects["u"] = 1;
    in_domain.relations["F"] = unary({0});
    CHECK(eval(s, P("#F = u"), in_domain));

    CHECK(error_code_of([&] { eval(s, P("s(u) = u"), env); }) == "unsupported_term");
    CHECK(error_code_of([&] { eval(s, P("u + u = u"), env); }) == "unsupported_term");
    CHECK(error_code_of([&] { eval(s, P("u * u = u"), env); }) == "unsupported_term");
    CHECK(error_code_of([&] { eval(s, P("u <= u"), env); }) == "unsupported_term");
    CHECK(error_code_of([&] { eval(s, P("0 = u"), env); }) == "unsupported_term");
    CHECK(error_code_of([&] { eval(s, P("card(P, u)"), env); }) == "unsupported_term");

    // Finite structures have no infinite members.
    CHECK_FALSE(eval(s, P("infinite({})"), env));
    CHECK(eval(s, P("forall2 X:1. not infinite(X)"), env));
}

TEST_CASE("diagonal set construction finds witnesses outside closed inputs") {
    FiniteStructure s = small_structure(3, {{}, {0}, {1}});
    s.abstraction = AbstractionMap{AbsOp::Ext, {{0, 0}, {1, 1}, {2, 2}}};

    RussellReport r = russell_set(s, {0});
    CHECK(r.verdict == RussellReport::Verdict::WitnessFound);
    CHECK(r.computed == std::set<int>{0});
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == 1);

    r = russell_set(s, {});
    CHECK(r.verdict == RussellReport::Verdict::WitnessFound);
    CHECK(r.computed.empty());
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == 0);

    r = russell_set(s, {1});
    CHECK(r.verdict == RussellReport::Verdict::WitnessFound);
    CHECK(r.computed == std::set<int>{1});
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == 2);

    // Diagonal lands in the family but outside the map's domain.
    FiniteStructure partial = small_structure(3, {{}, {0}, {1}, {0, 1}});
    partial.abstraction = AbstractionMap{AbsOp::Ext, {{0, 0}, {1, 1}, {2, 2}}};
    r = russell_set(partial, {0, 1});
    CHECK(r.verdict == RussellReport::Verdict::ClosureFailure);
    CHECK(r.computed == std::set<int>{0, 1});
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.detail.find("domain") != std::string::npos);

    // Diagonal falls outside the family itself.
    FiniteStructure open = small_structure(3, {{}, {1}, {0, 1}});
    open.abstraction = AbstractionMap{AbsOp::Ext, {{0, 0}, {1, 1}, {2, 2}}};
    r = russell_set(open, {0, 1});
    CHECK(r.verdict == RussellReport::Verdict::ClosureFailure);
    CHECK(r.computed == std::set<int>{0});
    CHECK(r.detail.find("S1") != std::string::npos);
}

TEST_CASE("diagonal set preconditions are checked and named") {
    FiniteStructure s = small_structure(3, {{}, {0}, {1}});

    CHECK(error_code_of([&] { russell_set(s, {}); }) == "precondition_violation");
    CHECK(error_message_of([&] { russell_set(s, {}); }).find("no abstraction") !=
          std::string::npos);

    s.abstraction = AbstractionMap{AbsOp::Hash, {{0, 0}, {1, 1}, {2, 2}}};
    CHECK(error_message_of([&] { russell_set(s, {}); }).find("extension") !=
          std::string::npos);

    s.abstraction = AbstractionMap{AbsOp::Ext, {{0, 0}, {1, 0}, {2, 2}}};
    CHECK(error_message_of([&] { russell_set(s, {}); }).find("injective") !=
          std::string::npos);

    s.abstraction = AbstractionMap{AbsOp::Ext, {{0, 0}, {1, 1}, {2, 2}}};
    CHECK(error_message_of([&] { russell_set(s, {2}); }).find("member of S1") !=
          std::string::npos);

    FiniteStructure narrow = small_structure(3, {{}, {2}});
    narrow.abstraction = AbstractionMap{AbsOp::Ext, {{0, 0}, {1, 1}}};
    CHECK(error_message_of([&] { russell_set(narrow, {2}); }).find("range") !=
          std::string::npos);
}

TEST_CASE("diagonal reports are deterministic and equivariant under relabeling") {
    std::mt19937_64 rng(20260817);
    auto pick = [&rng](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    int rounds = 0;
    for (int iter = 0; iter < 200 && rounds < 100; ++iter) {
        const int n = 1 + pick(4);
        std::set<std::set<int>> family_sets{{}};
        const int extra = pick(5);
        for (int i = 0; i < extra; ++i) {
            std::set<int> a;
            for (int x = 0; x < n; ++x)
                if (pick(2))
                    a.insert(x);
            family_sets.insert(a);
        }
        FiniteStructure s =
            small_structure(n, std::vector<std::set<int>>(family_sets.begin(), family_sets.end()));

        std::vector<int> atoms(static_cast<size_t>(n));
        std::iota(atoms.begin(), atoms.end(), 0);
        std::shuffle(atoms.begin(), atoms.end(), rng);
        AbstractionMap m;
        m.kind = AbsOp::Ext;
        const size_t dom = 1 + static_cast<size_t>(pick(
                                   static_cast<int>(std::min(s.families[1].size(),
                                                             static_cast<size_t>(n)))));
        std::set<int> range;
        for (size_t i = 0; i < dom; ++i) {
            m.pairs.emplace_back(i, atoms[i]);
            range.insert(atoms[i]);
        }
        s.abstraction = m;

        std::vector<std::set<int>> candidates;
        for (const RelationValue &r : s.families[1]) {
            std::set<int> a;
            for (const Tuple &t : r)
                a.insert(t[0]);
            if (std::includes(range.begin(), range.end(), a.begin(), a.end()))
                candidates.push_back(a);
        }
        if (candidates.empty())
            continue;
        ++rounds;
        const std::set<int> a = candidates[static_cast<size_t>(
            pick(static_cast<int>(candidates.size())))];

        const RussellReport first = russell_set(s, a);
        const RussellReport again = russell_set(s, a);
        CHECK(first.verdict == again.verdict);
        CHECK(first.computed == again.computed);
        CHECK(first.witness == again.witness);

        std::vector<int> fresh(static_cast<size_t>(n));
        std::iota(fresh.begin(), fresh.end(), 10);
        std::shuffle(fresh.begin(), fresh.end(), rng);
        std::map<int, int> pi;
        for (int i = 0; i < n; ++i)
            pi[i] = fresh[static_cast<size_t>(i)];

        std::set<int> a_mapped;
        for (int x : a)
            a_mapped.insert(pi.at(x));
        const RussellReport mapped = russell_set(relabel(s, pi), a_mapped);
        CHECK(mapped.verdict == first.verdict);
        std::set<int> computed_mapped;
        for (int x : first.computed)
            computed_mapped.insert(pi.at(x));
        CHECK(mapped.computed == computed_mapped);
        if (first.witness.has_value()) {
            REQUIRE(mapped.witness.has_value());
            CHECK(*mapped.witness == pi.at(*first.witness));
        } else {
            CHECK_FALSE(mapped.witness.has_value());
        }
    }
    CHECK(rounds >= 100);
}

TEST_CASE("evaluator agrees with the reference evaluator on random instances") {
    InstanceGen gen(471108);
    for (int iter = 0; iter < 200; ++iter) {
        const FiniteStructure s = gen.structure();
        const Env env = gen.environment(s);
        std::vector<int> rels;
        const FormulaPtr f = gen.formula(s, rels, 0, 2 + gen.pick(4));
        CHECK(eval(s, f, env) == naive::eval(s, f, env));
    }
}

TEST_CASE("no abstraction map on a full powerset satisfies its principle") {
    const FormulaPtr blv = named_sentence("BLV");
    const FormulaPtr hp = named_sentence("HP");

    // One atom: a single map exists for each operator.
    CHECK_FALSE(eval(full_powerset_structure(1, AbsOp::Ext, {0, 0}), blv));
    CHECK_FALSE(eval(full_powerset_structure(1, AbsOp::Hash, {0, 0}), hp));

    // Two atoms: exhaust all sixteen maps.
    for (int code = 0; code < 16; ++code) {
        std::vector<int> image;
        for (int i = 0; i < 4; ++i)
            image.push_back((code >> i) & 1);
        CHECK_FALSE(eval(full_powerset_structure(2, AbsOp::Ext, image), blv));
        CHECK_FALSE(eval(full_powerset_structure(2, AbsOp::Hash, image), hp));
    }

    // Three atoms: sampled maps.
    std::mt19937_64 rng(9021);
    std::uniform_int_distribution<int> atom(0, 2);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<int> image;
        for (int i = 0; i < 8; ++i)
            image.push_back(atom(rng));
        CHECK_FALSE(eval(full_powerset_structure(3, AbsOp::Ext, image), blv));
        CHECK_FALSE(eval(full_powerset_structure(3, AbsOp::Hash, image), hp));
    }
}

TEST_CASE("injection search returns assignments below the bound, certificates at it") {
    std::vector<std::set<int>> family{{}, {0}, {1}, {0, 1}};
    InjectionSearchResult r = blv_injection_search(2, family);
    CHECK_FALSE(r.assignment.has_value());
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->first == 4);
    CHECK(r.certificate->second == 2);

    r = blv_injection_search(3, {{}, {0}, {1}});
    REQUIRE(r.assignment.has_value());
    CHECK(r.assignment->size() == 3);
    std::set<int> atoms(r.assignment->begin(), r.assignment->end());
    CHECK(atoms.size() == 3);
    for (int a : *r.assignment) {
        CHECK(a >= 0);
        CHECK(a < 3);
    }

    // Equal inputs share an atom; distinct inputs never do.
    r = blv_injection_search(2, {{}, {0}, {}, {0}});
    REQUIRE(r.assignment.has_value());
    CHECK((*r.assignment)[0] == (*r.assignment)[2]);
    CHECK((*r.assignment)[1] == (*r.assignment)[3]);
    CHECK((*r.assignment)[0] != (*r.assignment)[1]);

    r = blv_injection_search(3, []() {
        std::vector<std::set<int>> all;
        for (int mask = 0; mask < 8; ++mask) {
            std::set<int> a;
            for (int i = 0; i < 3; ++i)
                if (mask & (1 << i))
                    a.insert(i);
            all.push_back(a);
        }
        return all;
    }());
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->first == 8);
    CHECK(r.certificate->second == 3);

    r = blv_injection_search(6, {{}});
    CHECK(r.assignment.has_value());
    CHECK(error_code_of([] { blv_injection_search(7, {}); }) == "size_limit");
}

TEST_CASE("structure JSON round-trips and rejects malformed input") {
    const nlohmann::json golden = nlohmann::json::parse(R"({
        "universe": [0, 1, 2],
        "relations": {"1": [[], [0], [1]], "2": [[[0, 1], [1, 0]]]},
        "abstraction": {"kind": "ext", "pairs": [[0, 0], [1, 1], [2, 2]]}
    })");
    const FiniteStructure s = structure_from_json(golden);
    CHECK(s.universe == std::vector<int>{0, 1, 2});
    REQUIRE(s.families.count(1));
    CHECK(s.families.at(1).size() == 3);
    CHECK(s.families.at(1)[1] == unary({0}));
    REQUIRE(s.families.count(2));
    CHECK(s.families.at(2)[0].count(Tuple{0, 1}) == 1);
    REQUIRE(s.abstraction.has_value());
    CHECK(s.abstraction->kind == AbsOp::Ext);
    CHECK(structure_to_json(s) == golden);

    FiniteStructure built = small_structure(2, {{}, {0, 1}});
    built.abstraction = AbstractionMap{AbsOp::Hash, {{1, 0}}};
    const FiniteStructure back = structure_from_json(structure_to_json(built));
    CHECK(structure_to_json(back) == structure_to_json(built));

    const std::vector<std::string> malformed{
        R"({"relations": {}})",
        R"({"universe": [0], "relations": {"x": []}})",
        R"({"universe": [0], "relations": {"0": [[]]}})",
        R"({"universe": [0], "relations": {"2": [[[0]]]}})",
        R"({"universe": [0], "relations": {"1": [[3]]}})",
        R"({"universe": [0], "relations": {"1": [[], []]}})",
        R"({"universe": [0, 0], "relations": {}})",
        R"({"universe": [0], "relations": {}, "abstraction": {"kind": "card", "pairs": []}})",
        R"({"universe": [0], "relations": {"1": [[]]}, "abstraction": {"kind": "ext", "pairs": [[4, 0]]}})",
        R"({"universe": [0], "relations": {"1": [[]]}, "abstraction": {"kind": "ext", "pairs": [[0, 0], [0, 0]]}})",
        R"({"universe": [0], "relations": {"1": "oops"}})",
    };
    for (const std::string &text : malformed) {
        CAPTURE(text);
        CHECK(error_code_of([&] { structure_from_json(nlohmann::json::parse(text)); }) ==
              "invalid_structure");
    }
}

TEST_CASE("full powerset builder lists subsets in binary counting order") {
    const FiniteStructure s = full_powerset_structure(2, AbsOp::Ext, {0, 0, 1, 1});
    CHECK(s.universe == std::vector<int>{0, 1});
    REQUIRE(s.families.count(1));
    const auto &s1 = s.families.at(1);
    REQUIRE(s1.size() == 4);
    CHECK(s1[0] == unary({}));
    CHECK(s1[1] == unary({0}));
    CHECK(s1[2] == unary({1}));
    CHECK(s1[3] == unary({0, 1}));
    REQUIRE(s.families.count(2));
    CHECK(s.families.at(2).size() == 16);
    REQUIRE(s.abstraction.has_value());
    CHECK(s.abstraction->pairs.size() == 4);

    CHECK(error_code_of([] { full_powerset_structure(4, AbsOp::Ext, {}); }) == "size_limit");
    CHECK(error_code_of([] { full_powerset_structure(2, AbsOp::Ext, {0}); }) ==
          "invalid_structure");
}
