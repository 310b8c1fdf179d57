#include "sol/print.hpp"

#include "sol/error.hpp"
#include "sol/names.hpp"

#include <sstream>

namespace sol {

namespace {

using TK = Term::Kind;
using FK = Formula::Kind;

struct NameEnv {
    std::vector<std::string> obj;
    std::vector<std::string> rel;
    std::set<std::string> used;

    const std::string &obj_name(int index) const {
        if (index < 0 || index >= static_cast<int>(obj.size()))
            throw Error("internal_error", "dangling object variable index");
        return obj[obj.size() - 1 - static_cast<size_t>(index)];
    }
    const std::string &rel_name(int index) const {
        if (index < 0 || index >= static_cast<int>(rel.size()))
            throw Error("internal_error", "dangling relation variable index");
        return rel[rel.size() - 1 - static_cast<size_t>(index)];
    }
};

std::string pick_name(const NameEnv &env, const std::string &hint, bool object, int arity) {
    std::string base;
    if (object)
        base = is_object_var_name(hint) ? hint : "x";
    else
        base = is_relation_var_name(hint) ? hint : (arity == 1 ? "X" : "R");
    std::string cand = base;
    int i = 0;
    while (env.used.count(cand)) cand = base + std::to_string(++i);
    return cand;
}

std::string term_text(const TermPtr &t, const NameEnv &env);

std::string set_term_text(const TermPtr &t, const NameEnv &env) {
    switch (t->kind) {
    case TK::BoundRel:
        return env.rel_name(t->index);
    case TK::FreeRel:
        return t->name;
    case TK::EmptySet:
        return "{}";
    default:
        throw Error("internal_error", "expected a set term");
    }
}

std::string term_text(const TermPtr &t, const NameEnv &env) {
    switch (t->kind) {
    case TK::BoundObj:
        return env.obj_name(t->index);
    case TK::FreeObj:
        return t->name;
    case TK::Zero:
        return "0";
    case TK::DefZero:
        return "Zero";
    case TK::Succ:
        return "s(" + term_text(t->args[0], env) + ")";
    case TK::Plus:
        return "(" + term_text(t->args[0], env) + " + " + term_text(t->args[1], env) + ")";
    case TK::Times:
        return "(" + term_text(t->args[0], env) + " * " + term_text(t->args[1], env) + ")";
    case TK::Abstraction:
        if (t->op == AbsOp::Hash) return "#" + set_term_text(t->args[0], env);
        return "ext(" + set_term_text(t->args[0], env) + ")";
    default:
        throw Error("internal_error", "expected an object term");
    }
}

// `tail` marks positions where nothing follows within the enclosing
// parenthesized unit. A quantifier body extends maximally to the right, so a
// quantified formula in a non-tail position must wear its own parentheses or
// it would absorb the connective after it when reparsed.
std::string formula_text(const FormulaPtr &f, NameEnv &env, bool tail) {
    switch (f->kind) {
    case FK::Member: {
        size_t nargs = f->terms.size() - 1;
        const TermPtr &rel = f->terms.back();
        if (nargs == 1) return term_text(f->terms[0], env) + " in " + set_term_text(rel, env);
        std::string out = set_term_text(rel, env) + "(";
        for (size_t i = 0; i < nargs; ++i) {
            if (i) out += ", ";
            out += term_text(f->terms[i], env);
        }
        return out + ")";
    }
    case FK::Equal:
        return term_text(f->terms[0], env) + " = " + term_text(f->terms[1], env);
    case FK::Leq:
        return term_text(f->terms[0], env) + " <= " + term_text(f->terms[1], env);
    case FK::Card:
        return "card(" + set_term_text(f->terms[0], env) + ", " + term_text(f->terms[1], env) + ")";
    case FK::Infinite:
        return "infinite(" + set_term_text(f->terms[0], env) + ")";
    case FK::Not:
        return "not " + formula_text(f->sub[0], env, tail);
    case FK::And:
    case FK::Or:
    case FK::Implies:
    case FK::Iff: {
        const char *op = f->kind == FK::And       ? " and "
                         : f->kind == FK::Or      ? " or "
                         : f->kind == FK::Implies ? " -> "
                                                  : " <-> ";
        return "(" + formula_text(f->sub[0], env, false) + op +
               formula_text(f->sub[1], env, true) + ")";
    }
    case FK::ForallObj:
    case FK::ExistsObj: {
        std::string name = pick_name(env, f->hint, true, 1);
        env.obj.push_back(name);
        env.used.insert(name);
        std::string body = formula_text(f->sub[0], env, true);
        env.obj.pop_back();
        env.used.erase(name);
        const char *q = f->kind == FK::ForallObj ? "forall " : "exists ";
        std::string out = q + name + ". " + body;
        return tail ? out : "(" + out + ")";
    }
    case FK::ForallRel:
    case FK::ExistsRel: {
        std::string name = pick_name(env, f->hint, false, f->arity);
        env.rel.push_back(name);
        env.used.insert(name);
        std::string body = formula_text(f->sub[0], env, true);
        env.rel.pop_back();
        env.used.erase(name);
        bool forall = f->kind == FK::ForallRel;
        std::string out;
        if (f->arity == 1 && is_plain_relation_name(name))
            out = (forall ? "forall " : "exists ") + name + ". " + body;
        else
            out = (forall ? "forall2 " : "exists2 ") + name + ":" +
                  std::to_string(f->arity) + ". " + body;
        return tail ? out : "(" + out + ")";
    }
    }
    throw Error("internal_error", "unhandled formula kind");
}

NameEnv root_env(const FormulaPtr &f) {
    NameEnv env;
    for (const std::string &name : free_object_vars(f)) env.used.insert(name);
    for (const auto &[name, arity] : free_relation_vars(f)) {
        (void)arity;
        env.used.insert(name);
    }
    return env;
}

std::string decl_prefix(const FormulaPtr &f) {
    std::string out;
    for (const auto &[name, arity] : free_relation_vars(f))
        if (!is_plain_relation_name(name))
            out += "rel " + name + ":" + std::to_string(arity) + ". ";
    return out;
}

nlohmann::json term_json(const TermPtr &t, const NameEnv &env) {
    using nlohmann::json;
    switch (t->kind) {
    case TK::BoundObj:
        return json{{"kind", "obj_var"}, {"name", env.obj_name(t->index)}};
    case TK::FreeObj:
        return json{{"kind", "obj_var"}, {"name", t->name}};
    case TK::BoundRel:
        return json{{"kind", "rel_var"}, {"name", env.rel_name(t->index)}};
    case TK::FreeRel:
        return json{{"kind", "rel_var"}, {"name", t->name}, {"arity", t->arity}};
    case TK::EmptySet:
        return json{{"kind", "empty_set"}};
    case TK::Abstraction: {
        const char *kind = t->op == AbsOp::Hash ? "hash" : "ext";
        return json{{"kind", kind}, {"args", json::array({term_json(t->args[0], env)})}};
    }
    case TK::Zero:
        return json{{"kind", "zero"}};
    case TK::DefZero:
        return json{{"kind", "def_zero"}};
    case TK::Succ:
        return json{{"kind", "succ"}, {"args", json::array({term_json(t->args[0], env)})}};
    case TK::Plus:
    case TK::Times: {
        const char *kind = t->kind == TK::Plus ? "plus" : "times";
        return json{{"kind", kind},
                    {"args", json::array({term_json(t->args[0], env), term_json(t->args[1], env)})}};
    }
    }
    throw Error("internal_error", "unhandled term kind");
}

nlohmann::json formula_json(const FormulaPtr &f, NameEnv &env) {
    using nlohmann::json;
    auto atom = [&](const char *kind) {
        json args = json::array();
        for (const TermPtr &t : f->terms) args.push_back(term_json(t, env));
        return json{{"kind", kind}, {"args", args}};
    };
    switch (f->kind) {
    case FK::Member:
        return atom("in");
    case FK::Equal:
        return atom("eq");
    case FK::Leq:
        return atom("leq");
    case FK::Card:
        return atom("card");
    case FK::Infinite:
        return atom("infinite");
    case FK::Not:
        return json{{"kind", "not"}, {"body", formula_json(f->sub[0], env)}};
    case FK::And:
    case FK::Or:
    case FK::Implies:
    case FK::Iff: {
        const char *kind = f->kind == FK::And       ? "and"
                           : f->kind == FK::Or      ? "or"
                           : f->kind == FK::Implies ? "implies"
                                                    : "iff";
        return json{{"kind", kind},
                    {"args", json::array({formula_json(f->sub[0], env), formula_json(f->sub[1], env)})}};
    }
    case FK::ForallObj:
    case FK::ExistsObj: {
        std::string name = pick_name(env, f->hint, true, 1);
        env.obj.push_back(name);
        env.used.insert(name);
        json body = formula_json(f->sub[0], env);
        env.obj.pop_back();
        env.used.erase(name);
        const char *kind = f->kind == FK::ForallObj ? "forall_obj" : "exists_obj";
        return json{{"kind", kind}, {"name", name}, {"body", body}};
    }
    case FK::ForallRel:
    case FK::ExistsRel: {
        std::string name = pick_name(env, f->hint, false, f->arity);
        env.rel.push_back(name);
        env.used.insert(name);
        json body = formula_json(f->sub[0], env);
        env.rel.pop_back();
        env.used.erase(name);
        const char *kind = f->kind == FK::ForallRel ? "forall_rel" : "exists_rel";
        return json{{"kind", kind}, {"name", name}, {"arity", f->arity}, {"body", body}};
    }
    }
    throw Error("internal_error", "unhandled formula kind");
}

} // namespace

std::string print_formula(const FormulaPtr &f) {
    NameEnv env = root_env(f);
    return decl_prefix(f) + formula_text(f, env, true);
}

std::string print_term(const TermPtr &t) {
    NameEnv env;
    return term_text(t, env);
}

nlohmann::json formula_to_json(const FormulaPtr &f) {
    NameEnv env = root_env(f);
    return formula_json(f, env);
}

} // namespace sol
