#include "sol/finite.hpp"

#include "sol/error.hpp"

#include <algorithm>
#include <numeric>

namespace sol {

namespace {

using FK = Formula::Kind;
using TK = Term::Kind;

RelationValue from_atom_set(const std::set<int> &a) {
    RelationValue out;
    for (int x : a)
        out.insert(Tuple{x});
    return out;
}

// Evaluation context: values for binders are stacked innermost-last, so a
// de Bruijn index counts from the back.
struct EvalCtx {
    const FiniteStructure &s;
    const Env &env;
    std::vector<int> objs;
    std::vector<const RelationValue *> rels;
};

const RelationValue &eval_set(EvalCtx &ctx, const TermPtr &t) {
    static const RelationValue empty;
    switch (t->kind) {
    case TK::BoundRel: {
        const int i = t->index;
        if (i < 0 || i >= static_cast<int>(ctx.rels.size()))
            throw Error("internal_error", "dangling relation variable index");
        return *ctx.rels[ctx.rels.size() - 1 - static_cast<size_t>(i)];
    }
    case TK::FreeRel: {
        const auto it = ctx.env.relations.find(t->name);
        if (it == ctx.env.relations.end())
            throw Error("unassigned_variable",
                        "relation variable '" + t->name + "' has no assigned value");
        for (const Tuple &tuple : it->second)
            if (static_cast<int>(tuple.size()) != t->arity)
                throw Error("arity_mismatch", "value assigned to '" + t->name +
                                                  "' does not have arity " +
                                                  std::to_string(t->arity));
        return it->second;
    }
    case TK::EmptySet:
        return empty;
    default:
        throw Error("internal_error", "expected a relation term");
    }
}

int eval_abstraction(EvalCtx &ctx, const TermPtr &t) {
    const RelationValue &operand = eval_set(ctx, t->args[0]);
    const char *opname = t->op == AbsOp::Hash ? "#" : "ext";
    if (!ctx.s.abstraction)
        throw Error("abstraction_undefined",
                    std::string("structure interprets no abstraction operator, formula uses ") +
                        opname);
    if (ctx.s.abstraction->kind != t->op)
        throw Error("abstraction_undefined",
                    std::string("structure interprets the other abstraction operator, "
                                "formula uses ") +
                        opname);
    const auto fam = ctx.s.families.find(1);
    if (fam != ctx.s.families.end()) {
        for (size_t i = 0; i < fam->second.size(); ++i) {
            if (fam->second[i] != operand)
                continue;
            for (const auto &[index, atom] : ctx.s.abstraction->pairs)
                if (index == i)
                    return atom;
            break;
        }
    }
    throw Error("abstraction_undefined",
                std::string(opname) + " applied to a set outside the abstraction domain");
}

int eval_object(EvalCtx &ctx, const TermPtr &t) {
    switch (t->kind) {
    case TK::BoundObj: {
        const int i = t->index;
        if (i < 0 || i >= static_cast<int>(ctx.objs.size()))
            throw Error("internal_error", "dangling object variable index");
        return ctx.objs[ctx.objs.size() - 1 - static_cast<size_t>(i)];
    }
    case TK::FreeObj: {
        const auto it = ctx.env.objects.find(t->name);
        if (it == ctx.env.objects.end())
            throw Error("unassigned_variable",
                        "object variable '" + t->name + "' has no assigned value");
        return it->second;
    }
    case TK::Abstraction:
        return eval_abstraction(ctx, t);
    case TK::Zero:
    case TK::DefZero:
    case TK::Succ:
    case TK::Plus:
    case TK::Times:
        throw Error("unsupported_term",
                    "finite structures interpret no arithmetic vocabulary");
    default:
        throw Error("internal_error", "expected an object term");
    }
}

bool eval_formula(EvalCtx &ctx, const FormulaPtr &f) {
    switch (f->kind) {
    case FK::Member: {
        Tuple args;
        for (size_t i = 0; i + 1 < f->terms.size(); ++i)
            args.push_back(eval_object(ctx, f->terms[i]));
        const RelationValue &rel = eval_set(ctx, f->terms.back());
        return rel.count(args) > 0;
    }
    case FK::Equal:
        return eval_object(ctx, f->terms[0]) == eval_object(ctx, f->terms[1]);
    case FK::Leq:
    case FK::Card:
        throw Error("unsupported_term",
                    "finite structures interpret no arithmetic vocabulary");
    case FK::Infinite:
        eval_set(ctx, f->terms[0]);
        return false;
    case FK::Not:
        return !eval_formula(ctx, f->sub[0]);
    case FK::And:
        return eval_formula(ctx, f->sub[0]) && eval_formula(ctx, f->sub[1]);
    case FK::Or:
        return eval_formula(ctx, f->sub[0]) || eval_formula(ctx, f->sub[1]);
    case FK::Implies:
        return !eval_formula(ctx, f->sub[0]) || eval_formula(ctx, f->sub[1]);
    case FK::Iff:
        return eval_formula(ctx, f->sub[0]) == eval_formula(ctx, f->sub[1]);
    case FK::ForallObj:
    case FK::ExistsObj: {
        const bool forall = f->kind == FK::ForallObj;
        for (int atom : ctx.s.universe) {
            ctx.objs.push_back(atom);
            const bool v = eval_formula(ctx, f->sub[0]);
            ctx.objs.pop_back();
            if (v != forall)
                return !forall;
        }
        return forall;
    }
    case FK::ForallRel:
    case FK::ExistsRel: {
        const bool forall = f->kind == FK::ForallRel;
        const auto fam = ctx.s.families.find(f->arity);
        if (fam == ctx.s.families.end())
            return forall;
        for (const RelationValue &r : fam->second) {
            ctx.rels.push_back(&r);
            const bool v = eval_formula(ctx, f->sub[0]);
            ctx.rels.pop_back();
            if (v != forall)
                return !forall;
        }
        return forall;
    }
    }
    throw Error("internal_error", "unhandled formula kind");
}

} // namespace

void validate_structure(const FiniteStructure &s) {
    std::set<int> atoms(s.universe.begin(), s.universe.end());
    if (atoms.size() != s.universe.size())
        throw Error("invalid_structure", "universe lists a duplicate atom");
    for (const auto &[arity, family] : s.families) {
        if (arity < 1)
            throw Error("invalid_structure", "relation arity below 1");
        for (const RelationValue &r : family) {
            for (const Tuple &t : r) {
                if (static_cast<int>(t.size()) != arity)
                    throw Error("invalid_structure",
                                "tuple arity does not match its family");
                for (int atom : t)
                    if (!atoms.count(atom))
                        throw Error("invalid_structure",
                                    "tuple mentions an atom outside the universe");
            }
        }
        std::vector<size_t> order(family.size());
        std::iota(order.begin(), order.end(), static_cast<size_t>(0));
        std::sort(order.begin(), order.end(),
                  [&family](size_t x, size_t y) { return family[x] < family[y]; });
        for (size_t i = 0; i + 1 < order.size(); ++i)
            if (family[order[i]] == family[order[i + 1]])
                throw Error("invalid_structure", "family contains a duplicate relation");
    }
    if (s.abstraction) {
        const size_t s1 =
            s.families.count(1) ? s.families.at(1).size() : static_cast<size_t>(0);
        std::set<size_t> seen;
        for (const auto &[index, atom] : s.abstraction->pairs) {
            if (index >= s1)
                throw Error("invalid_structure",
                            "abstraction pair indexes outside the arity-1 family");
            if (!atoms.count(atom))
                throw Error("invalid_structure",
                            "abstraction pair maps to an atom outside the universe");
            if (!seen.insert(index).second)
                throw Error("invalid_structure",
                            "abstraction map lists a set index twice");
        }
    }
}

bool eval(const FiniteStructure &s, const FormulaPtr &f, const Env &env) {
    validate_structure(s);
    EvalCtx ctx{s, env, {}, {}};
    return eval_formula(ctx, f);
}

RussellReport russell_set(const FiniteStructure &s, const std::set<int> &a) {
    validate_structure(s);
    if (!s.abstraction)
        throw Error("precondition_violation", "structure has no abstraction map");
    if (s.abstraction->kind != AbsOp::Ext)
        throw Error("precondition_violation", "abstraction map is not extension-tagged");
    std::set<int> range;
    for (const auto &[index, atom] : s.abstraction->pairs)
        if (!range.insert(atom).second)
            throw Error("precondition_violation", "abstraction map is not injective");
    static const std::vector<RelationValue> no_family;
    const std::vector<RelationValue> &s1 = s.families.count(1) ? s.families.at(1) : no_family;
    const RelationValue a_rel = from_atom_set(a);
    if (std::find(s1.begin(), s1.end(), a_rel) == s1.end())
        throw Error("precondition_violation", "input set is not a member of S1");
    for (int x : a)
        if (!range.count(x))
            throw Error("precondition_violation",
                        "input set is not contained in the abstraction range");

    RussellReport report;
    report.input = a;
    for (int x : a) {
        for (const auto &[index, atom] : s.abstraction->pairs) {
            if (atom != x)
                continue;
            if (!s1[index].count(Tuple{x}))
                report.computed.insert(x);
            break;
        }
    }
    const RelationValue b_rel = from_atom_set(report.computed);
    const auto b_pos = std::find(s1.begin(), s1.end(), b_rel);
    if (b_pos == s1.end()) {
        report.verdict = RussellReport::Verdict::ClosureFailure;
        report.detail = "computed set is not a member of S1";
        return report;
    }
    const size_t b_index = static_cast<size_t>(b_pos - s1.begin());
    for (const auto &[index, atom] : s.abstraction->pairs) {
        if (index != b_index)
            continue;
        if (a.count(atom))
            throw Error("internal_error",
                        "extension of the computed set landed inside the input set");
        report.verdict = RussellReport::Verdict::WitnessFound;
        report.witness = atom;
        return report;
    }
    report.verdict = RussellReport::Verdict::ClosureFailure;
    report.detail = "computed set is outside the abstraction domain";
    return report;
}

InjectionSearchResult blv_injection_search(int universe_size,
                                           const std::vector<std::set<int>> &family) {
    if (universe_size < 0 || universe_size > 6)
        throw Error("size_limit", "exhaustive search is limited to universes of size 6");
    std::vector<std::set<int>> distinct;
    std::vector<size_t> slot(family.size());
    for (size_t i = 0; i < family.size(); ++i) {
        const auto pos = std::find(distinct.begin(), distinct.end(), family[i]);
        slot[i] = static_cast<size_t>(pos - distinct.begin());
        if (pos == distinct.end())
            distinct.push_back(family[i]);
    }
    InjectionSearchResult result;
    if (distinct.size() > static_cast<size_t>(universe_size)) {
        result.certificate = {distinct.size(), static_cast<size_t>(universe_size)};
        return result;
    }
    // Injectivity is the only constraint, so distinct sets take the first
    // atoms in order; the pigeonhole check above guarantees enough.
    std::vector<int> chosen;
    for (size_t i = 0; i < distinct.size(); ++i)
        chosen.push_back(static_cast<int>(i));
    std::vector<int> assignment;
    for (size_t i = 0; i < family.size(); ++i)
        assignment.push_back(chosen[slot[i]]);
    result.assignment = std::move(assignment);
    return result;
}

FiniteStructure full_powerset_structure(int m, AbsOp kind, const std::vector<int> &image) {
    if (m < 0 || m > 3)
        throw Error("size_limit", "full powerset structures are limited to 3 atoms");
    const size_t n_sets = static_cast<size_t>(1) << m;
    if (image.size() != n_sets)
        throw Error("invalid_structure", "abstraction image must cover the full powerset");
    FiniteStructure s;
    for (int i = 0; i < m; ++i)
        s.universe.push_back(i);
    std::vector<RelationValue> s1;
    for (size_t mask = 0; mask < n_sets; ++mask) {
        RelationValue r;
        for (int i = 0; i < m; ++i)
            if (mask & (static_cast<size_t>(1) << i))
                r.insert(Tuple{i});
        s1.push_back(std::move(r));
    }
    s.families[1] = std::move(s1);
    std::vector<RelationValue> s2;
    std::vector<Tuple> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            pairs.push_back(Tuple{i, j});
    for (size_t mask = 0; mask < (static_cast<size_t>(1) << pairs.size()); ++mask) {
        RelationValue r;
        for (size_t k = 0; k < pairs.size(); ++k)
            if (mask & (static_cast<size_t>(1) << k))
                r.insert(pairs[k]);
        s2.push_back(std::move(r));
    }
    s.families[2] = std::move(s2);
    AbstractionMap abs;
    abs.kind = kind;
    for (size_t i = 0; i < n_sets; ++i)
        abs.pairs.emplace_back(i, image[i]);
    s.abstraction = std::move(abs);
    validate_structure(s);
    return s;
}

FiniteStructure structure_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("universe") || !j.contains("relations"))
        throw Error("invalid_structure", "expected universe and relations keys");
    FiniteStructure s;
    try {
        for (const auto &atom : j.at("universe"))
            s.universe.push_back(atom.get<int>());
        for (const auto &[key, value] : j.at("relations").items()) {
            const int arity = std::stoi(key);
            std::vector<RelationValue> family;
            for (const auto &rel : value) {
                RelationValue r;
                for (const auto &entry : rel) {
                    if (arity == 1)
                        r.insert(Tuple{entry.get<int>()});
                    else {
                        Tuple t;
                        for (const auto &x : entry)
                            t.push_back(x.get<int>());
                        r.insert(std::move(t));
                    }
                }
                family.push_back(std::move(r));
            }
            s.families[arity] = std::move(family);
        }
        if (j.contains("abstraction")) {
            AbstractionMap abs;
            const auto &ja = j.at("abstraction");
            const std::string kind = ja.at("kind").get<std::string>();
            if (kind == "ext")
                abs.kind = AbsOp::Ext;
            else if (kind == "hash")
                abs.kind = AbsOp::Hash;
            else
                throw Error("invalid_structure", "abstraction kind must be ext or hash");
            for (const auto &pair : ja.at("pairs"))
                abs.pairs.emplace_back(pair.at(0).get<size_t>(), pair.at(1).get<int>());
            s.abstraction = std::move(abs);
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error("invalid_structure", std::string("malformed structure JSON: ") + e.what());
    } catch (const std::invalid_argument &) {
        throw Error("invalid_structure", "relation arity keys must be integers");
    }
    validate_structure(s);
    return s;
}

nlohmann::json structure_to_json(const FiniteStructure &s) {
    nlohmann::json j;
    j["universe"] = s.universe;
    nlohmann::json rels = nlohmann::json::object();
    for (const auto &[arity, family] : s.families) {
        nlohmann::json list = nlohmann::json::array();
        for (const RelationValue &r : family) {
            nlohmann::json rel = nlohmann::json::array();
            for (const Tuple &t : r) {
                if (arity == 1)
                    rel.push_back(t[0]);
                else
                    rel.push_back(t);
            }
            list.push_back(std::move(rel));
        }
        rels[std::to_string(arity)] = std::move(list);
    }
    j["relations"] = std::move(rels);
    if (s.abstraction) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto &[index, atom] : s.abstraction->pairs)
            pairs.push_back(nlohmann::json::array({index, atom}));
        j["abstraction"] = {{"kind", s.abstraction->kind == AbsOp::Ext ? "ext" : "hash"},
                            {"pairs", std::move(pairs)}};
    }
    return j;
}

} // namespace sol
