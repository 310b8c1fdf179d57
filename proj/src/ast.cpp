#include "sol/ast.hpp"

#include "sol/error.hpp"

namespace sol {

namespace {

TermPtr make_term(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormulaPtr make_formula(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

using TK = Term::Kind;
using FK = Formula::Kind;

bool is_atom(FK k) {
    return k == FK::Member || k == FK::Equal || k == FK::Leq || k == FK::Card || k == FK::Infinite;
}

} // namespace

TermPtr t_bound_obj(int index) { return make_term({TK::BoundObj, index, "", 1, AbsOp::Hash, {}}); }
TermPtr t_free_obj(const std::string &name) {
    return make_term({TK::FreeObj, 0, name, 1, AbsOp::Hash, {}});
}
TermPtr t_bound_rel(int index) { return make_term({TK::BoundRel, index, "", 1, AbsOp::Hash, {}}); }
TermPtr t_free_rel(const std::string &name, int arity) {
    if (arity < 1) throw Error("arity_mismatch", "relation variable " + name + " needs arity >= 1");
    return make_term({TK::FreeRel, 0, name, arity, AbsOp::Hash, {}});
}
TermPtr t_empty_set() { return make_term({TK::EmptySet, 0, "", 1, AbsOp::Hash, {}}); }
TermPtr t_abs(AbsOp op, const TermPtr &set) {
    return make_term({TK::Abstraction, 0, "", 1, op, {set}});
}
TermPtr t_zero() { return make_term({TK::Zero, 0, "", 1, AbsOp::Hash, {}}); }
TermPtr t_def_zero() { return make_term({TK::DefZero, 0, "", 1, AbsOp::Hash, {}}); }
TermPtr t_succ(const TermPtr &t) { return make_term({TK::Succ, 0, "", 1, AbsOp::Hash, {t}}); }
TermPtr t_plus(const TermPtr &a, const TermPtr &b) {
    return make_term({TK::Plus, 0, "", 1, AbsOp::Hash, {a, b}});
}
TermPtr t_times(const TermPtr &a, const TermPtr &b) {
    return make_term({TK::Times, 0, "", 1, AbsOp::Hash, {a, b}});
}

FormulaPtr f_member(std::vector<TermPtr> objects, const TermPtr &rel) {
    Formula f{FK::Member, std::move(objects), {}, "", 1};
    f.terms.push_back(rel);
    return make_formula(std::move(f));
}
FormulaPtr f_equal(const TermPtr &a, const TermPtr &b) {
    return make_formula({FK::Equal, {a, b}, {}, "", 1});
}
FormulaPtr f_leq(const TermPtr &a, const TermPtr &b) {
    return make_formula({FK::Leq, {a, b}, {}, "", 1});
}
FormulaPtr f_card(const TermPtr &set, const TermPtr &obj) {
    return make_formula({FK::Card, {set, obj}, {}, "", 1});
}
FormulaPtr f_infinite(const TermPtr &set) {
    return make_formula({FK::Infinite, {set}, {}, "", 1});
}
FormulaPtr f_not(const FormulaPtr &a) { return make_formula({FK::Not, {}, {a}, "", 1}); }
FormulaPtr f_and(const FormulaPtr &a, const FormulaPtr &b) {
    return make_formula({FK::And, {}, {a, b}, "", 1});
}
FormulaPtr f_or(const FormulaPtr &a, const FormulaPtr &b) {
    return make_formula({FK::Or, {}, {a, b}, "", 1});
}
FormulaPtr f_implies(const FormulaPtr &a, const FormulaPtr &b) {
    return make_formula({FK::Implies, {}, {a, b}, "", 1});
}
FormulaPtr f_iff(const FormulaPtr &a, const FormulaPtr &b) {
    return make_formula({FK::Iff, {}, {a, b}, "", 1});
}
FormulaPtr f_and_all(const std::vector<FormulaPtr> &parts) {
    if (parts.empty()) return f_equal(t_zero(), t_zero());
    FormulaPtr acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) acc = f_and(acc, parts[i]);
    return acc;
}
FormulaPtr f_forall_obj(const std::string &hint, const FormulaPtr &body) {
    return make_formula({FK::ForallObj, {}, {body}, hint, 1});
}
FormulaPtr f_exists_obj(const std::string &hint, const FormulaPtr &body) {
    return make_formula({FK::ExistsObj, {}, {body}, hint, 1});
}
FormulaPtr f_forall_rel(const std::string &hint, int arity, const FormulaPtr &body) {
    if (arity < 1) throw Error("arity_mismatch", "relation binder " + hint + " needs arity >= 1");
    return make_formula({FK::ForallRel, {}, {body}, hint, arity});
}
FormulaPtr f_exists_rel(const std::string &hint, int arity, const FormulaPtr &body) {
    if (arity < 1) throw Error("arity_mismatch", "relation binder " + hint + " needs arity >= 1");
    return make_formula({FK::ExistsRel, {}, {body}, hint, arity});
}

bool equal(const TermPtr &a, const TermPtr &b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->index != b->index || a->name != b->name ||
        a->arity != b->arity || a->op != b->op || a->args.size() != b->args.size())
        return false;
    for (size_t i = 0; i < a->args.size(); ++i)
        if (!equal(a->args[i], b->args[i])) return false;
    return true;
}

bool equal(const FormulaPtr &a, const FormulaPtr &b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->arity != b->arity || a->terms.size() != b->terms.size() ||
        a->sub.size() != b->sub.size())
        return false;
    for (size_t i = 0; i < a->terms.size(); ++i)
        if (!equal(a->terms[i], b->terms[i])) return false;
    for (size_t i = 0; i < a->sub.size(); ++i)
        if (!equal(a->sub[i], b->sub[i])) return false;
    return true;
}

namespace {

void collect_term_vars(const TermPtr &t, std::set<std::string> &objs,
                       std::map<std::string, int> &rels) {
    switch (t->kind) {
    case TK::FreeObj:
        objs.insert(t->name);
        break;
    case TK::FreeRel: {
        auto [it, fresh] = rels.emplace(t->name, t->arity);
        if (!fresh && it->second != t->arity)
            throw Error("arity_mismatch", "relation variable " + t->name + " used with arity " +
                                              std::to_string(t->arity) + " and " +
                                              std::to_string(it->second));
        break;
    }
    default:
        for (const TermPtr &arg : t->args) collect_term_vars(arg, objs, rels);
    }
}

void collect_vars(const FormulaPtr &f, std::set<std::string> &objs,
                  std::map<std::string, int> &rels) {
    for (const TermPtr &t : f->terms) collect_term_vars(t, objs, rels);
    if (f->kind == FK::Member) {
        // The relation term's arity must match the argument count.
        const TermPtr &rel = f->terms.back();
        int nargs = static_cast<int>(f->terms.size()) - 1;
        if (rel->kind == TK::FreeRel && rel->arity != nargs)
            throw Error("arity_mismatch", "relation variable " + rel->name + " applied to " +
                                              std::to_string(nargs) + " arguments but has arity " +
                                              std::to_string(rel->arity));
    }
    for (const FormulaPtr &s : f->sub) collect_vars(s, objs, rels);
}

} // namespace

std::set<std::string> free_object_vars(const FormulaPtr &f) {
    std::set<std::string> objs;
    std::map<std::string, int> rels;
    collect_vars(f, objs, rels);
    return objs;
}

std::map<std::string, int> free_relation_vars(const FormulaPtr &f) {
    std::set<std::string> objs;
    std::map<std::string, int> rels;
    collect_vars(f, objs, rels);
    return rels;
}

bool has_free_relation_var(const FormulaPtr &f, const std::string &name) {
    return free_relation_vars(f).count(name) > 0;
}

TermPtr shift_term(const TermPtr &t, int dobj, int drel) {
    if (dobj == 0 && drel == 0) return t;
    switch (t->kind) {
    case TK::BoundObj:
        return t_bound_obj(t->index + dobj);
    case TK::BoundRel:
        return t_bound_rel(t->index + drel);
    default: {
        if (t->args.empty()) return t;
        Term copy = *t;
        for (TermPtr &arg : copy.args) arg = shift_term(arg, dobj, drel);
        return std::make_shared<const Term>(std::move(copy));
    }
    }
}

namespace {

// Generic structure-preserving map over terms, tracking binder depths.
template <typename TermFn>
TermPtr map_term(const TermPtr &t, int dobj, int drel, const TermFn &fn) {
    TermPtr direct = fn(t, dobj, drel);
    if (direct) return direct;
    if (t->args.empty()) return t;
    Term copy = *t;
    bool changed = false;
    for (TermPtr &arg : copy.args) {
        TermPtr next = map_term(arg, dobj, drel, fn);
        changed = changed || next != arg;
        arg = next;
    }
    return changed ? std::make_shared<const Term>(std::move(copy)) : t;
}

template <typename TermFn>
FormulaPtr map_formula(const FormulaPtr &f, int dobj, int drel, const TermFn &fn) {
    int body_dobj = dobj, body_drel = drel;
    if (f->kind == FK::ForallObj || f->kind == FK::ExistsObj) ++body_dobj;
    if (f->kind == FK::ForallRel || f->kind == FK::ExistsRel) ++body_drel;
    Formula copy = *f;
    bool changed = false;
    for (TermPtr &t : copy.terms) {
        TermPtr next = map_term(t, dobj, drel, fn);
        changed = changed || next != t;
        t = next;
    }
    for (FormulaPtr &s : copy.sub) {
        FormulaPtr next = map_formula(s, body_dobj, body_drel, fn);
        changed = changed || next != s;
        s = next;
    }
    return changed ? std::make_shared<const Formula>(std::move(copy)) : f;
}

} // namespace

FormulaPtr subst_free_obj(const FormulaPtr &f, const std::string &name, const TermPtr &t) {
    return map_formula(f, 0, 0, [&](const TermPtr &u, int dobj, int drel) -> TermPtr {
        if (u->kind == TK::FreeObj && u->name == name) return shift_term(t, dobj, drel);
        return nullptr;
    });
}

FormulaPtr close_obj(const FormulaPtr &f, const std::string &name) {
    return map_formula(f, 0, 0, [&](const TermPtr &u, int dobj, int) -> TermPtr {
        if (u->kind == TK::FreeObj && u->name == name) return t_bound_obj(dobj);
        return nullptr;
    });
}

FormulaPtr close_rel(const FormulaPtr &f, const std::string &name) {
    return map_formula(f, 0, 0, [&](const TermPtr &u, int, int drel) -> TermPtr {
        if (u->kind == TK::FreeRel && u->name == name) return t_bound_rel(drel);
        return nullptr;
    });
}

namespace {

FormulaPtr rewrite_atoms_at(const FormulaPtr &f, const AtomRewriter &rewrite, int dobj, int drel) {
    if (is_atom(f->kind)) {
        std::optional<FormulaPtr> replaced = rewrite(*f, dobj, drel);
        return replaced ? *replaced : f;
    }
    int body_dobj = dobj, body_drel = drel;
    if (f->kind == FK::ForallObj || f->kind == FK::ExistsObj) ++body_dobj;
    if (f->kind == FK::ForallRel || f->kind == FK::ExistsRel) ++body_drel;
    Formula copy = *f;
    bool changed = false;
    for (FormulaPtr &s : copy.sub) {
        FormulaPtr next = rewrite_atoms_at(s, rewrite, body_dobj, body_drel);
        changed = changed || next != s;
        s = next;
    }
    return changed ? std::make_shared<const Formula>(std::move(copy)) : f;
}

FormulaPtr nnf_pos(const FormulaPtr &f);
FormulaPtr nnf_neg(const FormulaPtr &f);

FormulaPtr nnf_pos(const FormulaPtr &f) {
    switch (f->kind) {
    case FK::Not:
        return nnf_neg(f->sub[0]);
    case FK::And:
        return f_and(nnf_pos(f->sub[0]), nnf_pos(f->sub[1]));
    case FK::Or:
        return f_or(nnf_pos(f->sub[0]), nnf_pos(f->sub[1]));
    case FK::Implies:
        return f_or(nnf_neg(f->sub[0]), nnf_pos(f->sub[1]));
    case FK::Iff:
        return f_or(f_and(nnf_pos(f->sub[0]), nnf_pos(f->sub[1])),
                    f_and(nnf_neg(f->sub[0]), nnf_neg(f->sub[1])));
    case FK::ForallObj:
        return f_forall_obj(f->hint, nnf_pos(f->sub[0]));
    case FK::ExistsObj:
        return f_exists_obj(f->hint, nnf_pos(f->sub[0]));
    case FK::ForallRel:
        return f_forall_rel(f->hint, f->arity, nnf_pos(f->sub[0]));
    case FK::ExistsRel:
        return f_exists_rel(f->hint, f->arity, nnf_pos(f->sub[0]));
    default:
        return f;
    }
}

FormulaPtr nnf_neg(const FormulaPtr &f) {
    switch (f->kind) {
    case FK::Not:
        return nnf_pos(f->sub[0]);
    case FK::And:
        return f_or(nnf_neg(f->sub[0]), nnf_neg(f->sub[1]));
    case FK::Or:
        return f_and(nnf_neg(f->sub[0]), nnf_neg(f->sub[1]));
    case FK::Implies:
        return f_and(nnf_pos(f->sub[0]), nnf_neg(f->sub[1]));
    case FK::Iff:
        return f_or(f_and(nnf_pos(f->sub[0]), nnf_neg(f->sub[1])),
                    f_and(nnf_neg(f->sub[0]), nnf_pos(f->sub[1])));
    case FK::ForallObj:
        return f_exists_obj(f->hint, nnf_neg(f->sub[0]));
    case FK::ExistsObj:
        return f_forall_obj(f->hint, nnf_neg(f->sub[0]));
    case FK::ForallRel:
        return f_exists_rel(f->hint, f->arity, nnf_neg(f->sub[0]));
    case FK::ExistsRel:
        return f_forall_rel(f->hint, f->arity, nnf_neg(f->sub[0]));
    default:
        return f_not(f);
    }
}

} // namespace

FormulaPtr rewrite_atoms(const FormulaPtr &f, const AtomRewriter &rewrite) {
    return rewrite_atoms_at(f, rewrite, 0, 0);
}

FormulaPtr negation_normal_form(const FormulaPtr &f) { return nnf_pos(f); }

FormulaPtr bijection_formula(const TermPtr &f, const TermPtr &x, const TermPtr &y) {
    // Only object binders are introduced, so the relation terms f, x, y keep
    // their indices at every depth.
    auto b0 = t_bound_obj(0);
    auto b1 = t_bound_obj(1);
    auto b2 = t_bound_obj(2);
    FormulaPtr contained = f_forall_obj(
        "a", f_forall_obj("b", f_implies(f_member({b1, b0}, f),
                                         f_and(f_member({b1}, x), f_member({b0}, y)))));
    FormulaPtr total =
        f_forall_obj("a", f_implies(f_member({b0}, x), f_exists_obj("b", f_member({b1, b0}, f))));
    FormulaPtr onto =
        f_forall_obj("b", f_implies(f_member({b0}, y), f_exists_obj("a", f_member({b0, b1}, f))));
    FormulaPtr functional = f_forall_obj(
        "a",
        f_forall_obj("b", f_forall_obj("c", f_implies(f_and(f_member({b2, b1}, f),
                                                            f_member({b2, b0}, f)),
                                                      f_equal(b1, b0)))));
    FormulaPtr injective = f_forall_obj(
        "a",
        f_forall_obj("b", f_forall_obj("c", f_implies(f_and(f_member({b2, b0}, f),
                                                            f_member({b1, b0}, f)),
                                                      f_equal(b2, b1)))));
    return f_and_all({contained, total, onto, functional, injective});
}

} // namespace sol
