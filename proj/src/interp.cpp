#include "sol/interp.hpp"

#include "sol/error.hpp"

#include <array>
#include <map>
#include <set>

namespace sol {

namespace {

using TK = Term::Kind;
using FK = Formula::Kind;

// ---------------------------------------------------------------------------
// Counting translation (# elimination)

void ensure_no_ext(const TermPtr &t) {
    if (t->kind == TK::Abstraction && t->op == AbsOp::Ext)
        throw Error("unsupported_abstraction",
                    "the counting translation eliminates # terms only, found an ext term");
    for (const TermPtr &a : t->args)
        ensure_no_ext(a);
}

// Outermost # subterm, or null. The argument of a # term is a relation term
// and cannot itself contain abstractions.
TermPtr first_hash(const TermPtr &t) {
    if (t->kind == TK::Abstraction)
        return t;
    for (const TermPtr &a : t->args)
        if (TermPtr h = first_hash(a))
            return h;
    return nullptr;
}

bool atom_has_hash(const FormulaPtr &a) {
    for (const TermPtr &t : a->terms)
        if (first_hash(t))
            return true;
    return false;
}

TermPtr replace_term(const TermPtr &t, const TermPtr &target, const TermPtr &repl) {
    if (equal(t, target))
        return repl;
    if (t->args.empty())
        return t;
    auto copy = std::make_shared<Term>(*t);
    for (TermPtr &a : copy->args)
        a = replace_term(a, target, repl);
    return copy;
}

FormulaPtr or_all(const std::vector<FormulaPtr> &parts) {
    FormulaPtr out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out = f_or(out, parts[i]);
    return out;
}

// Produces the translation of the equation "#set = t" for the chosen target
// language. t may itself contain further # terms; implementations recurse
// through translate_hash_atom.
using HashRule = std::function<FormulaPtr(const TermPtr &set, const TermPtr &t)>;

FormulaPtr translate_hash_atom(const FormulaPtr &atom, const HashRule &rule);

FormulaPtr rec_if_hash(const FormulaPtr &atom, const HashRule &rule) {
    return atom_has_hash(atom) ? translate_hash_atom(atom, rule) : atom;
}

FormulaPtr translate_hash_atom(const FormulaPtr &atom, const HashRule &rule) {
    if (atom->kind == FK::Equal) {
        for (int side = 0; side < 2; ++side) {
            const TermPtr &s = atom->terms[static_cast<std::size_t>(side)];
            if (s->kind == TK::Abstraction)
                return rule(s->args[0], atom->terms[static_cast<std::size_t>(1 - side)]);
        }
    }
    // The # term sits strictly inside a composite term: pull it out through
    // a fresh existential, then translate the simpler remainder.
    TermPtr hash;
    for (const TermPtr &t : atom->terms)
        if ((hash = first_hash(t)))
            break;
    if (!hash)
        throw Error("internal_error", "hash elimination reached a hash-free atom");
    const TermPtr target = shift_term(hash, 1, 0);
    Formula rest = *atom;
    for (TermPtr &t : rest.terms)
        t = replace_term(shift_term(t, 1, 0), target, t_bound_obj(0));
    FormulaPtr remainder = rec_if_hash(std::make_shared<const Formula>(std::move(rest)), rule);
    return f_exists_obj("m", f_and(rule(target->args[0], t_bound_obj(0)), remainder));
}

FormulaPtr eliminate_hash(const FormulaPtr &f, const HashRule &rule) {
    return rewrite_atoms(f, [&](const Formula &atom, int, int) -> std::optional<FormulaPtr> {
        for (const TermPtr &t : atom.terms)
            ensure_no_ext(t);
        FormulaPtr a = std::make_shared<const Formula>(atom);
        if (!atom_has_hash(a))
            return std::nullopt;
        return translate_hash_atom(a, rule);
    });
}

// "set has exactly k members" in the pure membership language: k pairwise
// distinct witnesses that exhaust the set.
FormulaPtr exactly_k(const TermPtr &set, int k) {
    if (k == 0)
        return f_forall_obj("y",
                            f_not(f_member({t_bound_obj(0)}, shift_term(set, 1, 0))));
    const TermPtr at_k = shift_term(set, k, 0);
    const TermPtr at_k1 = shift_term(set, k + 1, 0);
    std::vector<FormulaPtr> parts;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            parts.push_back(f_not(f_equal(t_bound_obj(k - 1 - i), t_bound_obj(k - 1 - j))));
    for (int i = 0; i < k; ++i)
        parts.push_back(f_member({t_bound_obj(k - 1 - i)}, at_k));
    std::vector<FormulaPtr> hits;
    for (int i = 0; i < k; ++i)
        hits.push_back(f_equal(t_bound_obj(0), t_bound_obj(k - i)));
    parts.push_back(
        f_forall_obj("y", f_implies(f_member({t_bound_obj(0)}, at_k1), or_all(hits))));
    FormulaPtr body = f_and_all(parts);
    for (int i = 0; i < k; ++i)
        body = f_exists_obj("w" + std::to_string(k - i), body);
    return body;
}

// ---------------------------------------------------------------------------
// Frege direction

constexpr std::array<const char *, 4> kReservedRels = {"SuccRel", "N", "PlusGraph",
                                                       "TimesGraph"};

bool is_reserved(const std::string &name) {
    for (const char *r : kReservedRels)
        if (name == r)
            return true;
    return false;
}

int reserved_arity(const std::string &name) {
    if (name == "SuccRel")
        return 2;
    if (name == "N")
        return 1;
    return 3;
}

TermPtr succ_rel() { return t_free_rel("SuccRel", 2); }
TermPtr nat_rel() { return t_free_rel("N", 1); }
TermPtr plus_rel() { return t_free_rel("PlusGraph", 3); }
TermPtr times_rel() { return t_free_rel("TimesGraph", 3); }

FormulaPtr in_nat(const TermPtr &t) { return f_member({t}, nat_rel()); }

// a = #{}
FormulaPtr zero_def() {
    return f_equal(t_free_obj("a"), t_abs(AbsOp::Hash, t_empty_set()));
}

// SuccRel(a, b): some set counted by b extends a set counted by a
// by exactly one member.
FormulaPtr succ_def() {
    FormulaPtr carve = f_forall_obj(
        "w", f_iff(f_member({t_bound_obj(0)}, t_bound_rel(0)),
                   f_and(f_member({t_bound_obj(0)}, t_bound_rel(1)),
                         f_not(f_equal(t_bound_obj(0), t_bound_obj(1))))));
    FormulaPtr same = f_equal(t_abs(AbsOp::Hash, t_bound_rel(2)),
                              t_abs(AbsOp::Hash, t_bound_rel(0)));
    FormulaPtr drop_one = f_exists_rel("Z", 1, f_and(carve, same));
    FormulaPtr pick =
        f_exists_obj("u", f_and(f_member({t_bound_obj(0)}, t_bound_rel(0)), drop_one));
    return f_exists_rel(
        "X", 1,
        f_exists_rel("Y", 1,
                     f_and_all({f_equal(t_abs(AbsOp::Hash, t_bound_rel(1)), t_free_obj("a")),
                                f_equal(t_abs(AbsOp::Hash, t_bound_rel(0)), t_free_obj("b")),
                                pick})));
}

// N(a): a lies in every set containing Zero and closed under SuccRel.
FormulaPtr nat_def() {
    FormulaPtr closed = f_forall_obj(
        "u",
        f_forall_obj("v", f_implies(f_and(f_member({t_bound_obj(1)}, t_bound_rel(0)),
                                          f_member({t_bound_obj(1), t_bound_obj(0)},
                                                   succ_rel())),
                                    f_member({t_bound_obj(0)}, t_bound_rel(0)))));
    FormulaPtr inductive = f_and(f_member({t_def_zero()}, t_bound_rel(0)), closed);
    return f_forall_rel("X", 1,
                        f_implies(inductive, f_member({t_free_obj("a")}, t_bound_rel(0))));
}

// PlusGraph(a, b, c): some graph contains (a, 0, a), climbs down along
// successors, and contains (a, b, c).
FormulaPtr plus_def() {
    const TermPtr a = t_free_obj("a");
    FormulaPtr ante = f_exists_obj(
        "u", f_and(f_member({t_bound_obj(2), t_bound_obj(0)}, succ_rel()),
                   f_member({a, t_bound_obj(0), t_bound_obj(1)}, t_bound_rel(0))));
    FormulaPtr cons = f_exists_obj(
        "w", f_and(f_member({t_bound_obj(0), t_bound_obj(1)}, succ_rel()),
                   f_member({a, t_bound_obj(2), t_bound_obj(0)}, t_bound_rel(0))));
    FormulaPtr climb = f_forall_obj("y", f_forall_obj("z", f_implies(ante, cons)));
    return f_exists_rel(
        "G", 3,
        f_and_all({f_member({a, t_def_zero(), a}, t_bound_rel(0)), climb,
                   f_member({a, t_free_obj("b"), t_free_obj("c")}, t_bound_rel(0))}));
}

// TimesGraph(a, b, c): as for addition, with the step folded through
// PlusGraph: the entry above (a, y, w) carries z = w + a.
FormulaPtr times_def() {
    const TermPtr a = t_free_obj("a");
    FormulaPtr ante = f_exists_obj(
        "u", f_and(f_member({t_bound_obj(2), t_bound_obj(0)}, succ_rel()),
                   f_member({a, t_bound_obj(0), t_bound_obj(1)}, t_bound_rel(0))));
    FormulaPtr cons = f_exists_obj(
        "w", f_and(f_member({a, t_bound_obj(2), t_bound_obj(0)}, t_bound_rel(0)),
                   f_member({t_bound_obj(0), a, t_bound_obj(1)}, plus_rel())));
    FormulaPtr climb = f_forall_obj("y", f_forall_obj("z", f_implies(ante, cons)));
    return f_exists_rel(
        "G", 3,
        f_and_all({f_member({a, t_def_zero(), t_def_zero()}, t_bound_rel(0)), climb,
                   f_member({a, t_free_obj("b"), t_free_obj("c")}, t_bound_rel(0))}));
}

class FreshNames {
  public:
    explicit FreshNames(const FormulaPtr &f) : used_(free_object_vars(f)) {}

    std::string next() {
        while (true) {
            std::string name = "w" + std::to_string(++counter_);
            if (!used_.count(name)) {
                used_.insert(name);
                return name;
            }
        }
    }

  private:
    std::set<std::string> used_;
    int counter_ = 0;
};

bool is_composite(const TermPtr &t) {
    return t->kind == TK::Succ || t->kind == TK::Plus || t->kind == TK::Times;
}

TermPtr map_simple(const TermPtr &t) { return t->kind == TK::Zero ? t_def_zero() : t; }

struct FlatTerm {
    TermPtr value;
    std::vector<FormulaPtr> constraints;
    std::vector<std::string> fresh;
};

FlatTerm flatten_term(const TermPtr &t, FreshNames &names);

// Emits the graph atom forcing slot to carry t's value; t is composite.
// Child constraints come first so witnesses read in evaluation order.
void top_into(const TermPtr &t, const TermPtr &slot, FreshNames &names,
              std::vector<FormulaPtr> &constraints, std::vector<std::string> &fresh) {
    std::vector<TermPtr> kids;
    for (const TermPtr &a : t->args) {
        FlatTerm fa = flatten_term(a, names);
        constraints.insert(constraints.end(), fa.constraints.begin(), fa.constraints.end());
        fresh.insert(fresh.end(), fa.fresh.begin(), fa.fresh.end());
        kids.push_back(fa.value);
    }
    switch (t->kind) {
    case TK::Succ:
        constraints.push_back(f_member({kids[0], slot}, succ_rel()));
        return;
    case TK::Plus:
        constraints.push_back(f_member({kids[0], kids[1], slot}, plus_rel()));
        return;
    case TK::Times:
        constraints.push_back(f_member({kids[0], kids[1], slot}, times_rel()));
        return;
    default:
        throw Error("internal_error", "expected an arithmetic function term");
    }
}

FlatTerm flatten_term(const TermPtr &t, FreshNames &names) {
    if (!is_composite(t))
        return {map_simple(t), {}, {}};
    FlatTerm out;
    const std::string w = names.next();
    out.value = t_free_obj(w);
    top_into(t, out.value, names, out.constraints, out.fresh);
    out.fresh.push_back(w);
    return out;
}

// Conjoins the parts and binds the named witnesses with existentials
// relativized to N. Parts are atoms, so lifting their context indices past
// the new binders is a plain term shift.
FormulaPtr wrap_witnesses(const std::vector<FormulaPtr> &parts,
                          const std::vector<std::string> &fresh) {
    const int r = static_cast<int>(fresh.size());
    if (r == 0)
        return f_and_all(parts);
    std::vector<FormulaPtr> lifted;
    for (const FormulaPtr &p : parts) {
        Formula copy = *p;
        for (TermPtr &t : copy.terms) {
            t = shift_term(t, r, 0);
            for (int i = 0; i < r; ++i)
                t = replace_term(t, t_free_obj(fresh[static_cast<std::size_t>(i)]),
                                 t_bound_obj(r - 1 - i));
        }
        lifted.push_back(std::make_shared<const Formula>(std::move(copy)));
    }
    FormulaPtr body = f_and_all(lifted);
    for (int i = r - 1; i >= 0; --i)
        body = f_exists_obj(fresh[static_cast<std::size_t>(i)],
                            f_and(in_nat(t_bound_obj(0)), body));
    return body;
}

FormulaPtr frege_atom(const FormulaPtr &atom, FreshNames &names) {
    std::vector<FormulaPtr> cons;
    std::vector<std::string> fresh;
    switch (atom->kind) {
    case FK::Equal: {
        const TermPtr &a = atom->terms[0];
        const TermPtr &b = atom->terms[1];
        const bool ca = is_composite(a), cb = is_composite(b);
        if (!ca && !cb)
            return f_equal(map_simple(a), map_simple(b));
        if (ca && !cb) {
            top_into(a, map_simple(b), names, cons, fresh);
            return wrap_witnesses(cons, fresh);
        }
        if (cb && !ca) {
            top_into(b, map_simple(a), names, cons, fresh);
            return wrap_witnesses(cons, fresh);
        }
        const std::string w = names.next();
        top_into(a, t_free_obj(w), names, cons, fresh);
        top_into(b, t_free_obj(w), names, cons, fresh);
        fresh.push_back(w);
        return wrap_witnesses(cons, fresh);
    }
    case FK::Leq: {
        FlatTerm fa = flatten_term(atom->terms[0], names);
        FlatTerm fb = flatten_term(atom->terms[1], names);
        cons = fa.constraints;
        cons.insert(cons.end(), fb.constraints.begin(), fb.constraints.end());
        fresh = fa.fresh;
        fresh.insert(fresh.end(), fb.fresh.begin(), fb.fresh.end());
        const std::string z = names.next();
        fresh.push_back(z);
        cons.push_back(f_member({fa.value, t_free_obj(z), fb.value}, plus_rel()));
        return wrap_witnesses(cons, fresh);
    }
    case FK::Member: {
        std::vector<TermPtr> objs;
        for (std::size_t i = 0; i + 1 < atom->terms.size(); ++i) {
            FlatTerm fa = flatten_term(atom->terms[i], names);
            cons.insert(cons.end(), fa.constraints.begin(), fa.constraints.end());
            fresh.insert(fresh.end(), fa.fresh.begin(), fa.fresh.end());
            objs.push_back(fa.value);
        }
        cons.push_back(f_member(objs, atom->terms.back()));
        return wrap_witnesses(cons, fresh);
    }
    case FK::Card: {
        FlatTerm fa = flatten_term(atom->terms[1], names);
        cons = fa.constraints;
        cons.push_back(f_card(atom->terms[0], fa.value));
        return wrap_witnesses(cons, fa.fresh);
    }
    case FK::Infinite:
        return atom;
    default:
        throw Error("internal_error", "expected an atom");
    }
}

FormulaPtr frege_walk(const FormulaPtr &f, FreshNames &names) {
    switch (f->kind) {
    case FK::Member:
    case FK::Equal:
    case FK::Leq:
    case FK::Card:
    case FK::Infinite:
        return frege_atom(f, names);
    case FK::Not:
        return f_not(frege_walk(f->sub[0], names));
    case FK::And:
        return f_and(frege_walk(f->sub[0], names), frege_walk(f->sub[1], names));
    case FK::Or:
        return f_or(frege_walk(f->sub[0], names), frege_walk(f->sub[1], names));
    case FK::Implies:
        return f_implies(frege_walk(f->sub[0], names), frege_walk(f->sub[1], names));
    case FK::Iff:
        return f_iff(frege_walk(f->sub[0], names), frege_walk(f->sub[1], names));
    case FK::ForallObj:
        return f_forall_obj(f->hint,
                            f_implies(in_nat(t_bound_obj(0)), frege_walk(f->sub[0], names)));
    case FK::ExistsObj:
        return f_exists_obj(f->hint,
                            f_and(in_nat(t_bound_obj(0)), frege_walk(f->sub[0], names)));
    case FK::ForallRel:
        return f_forall_rel(f->hint, f->arity, frege_walk(f->sub[0], names));
    case FK::ExistsRel:
        return f_exists_rel(f->hint, f->arity, frege_walk(f->sub[0], names));
    }
    throw Error("internal_error", "unhandled formula kind");
}

TermPtr expand_defzero(const TermPtr &t) {
    if (t->kind == TK::DefZero)
        return t_abs(AbsOp::Hash, t_empty_set());
    if (t->args.empty())
        return t;
    bool changed = false;
    std::vector<TermPtr> args;
    for (const TermPtr &a : t->args) {
        TermPtr u = expand_defzero(a);
        changed = changed || u != a;
        args.push_back(u);
    }
    if (!changed)
        return t;
    auto copy = std::make_shared<Term>(*t);
    copy->args = std::move(args);
    return copy;
}

// Substitutes the atom's arguments for the definition's parameters. The
// parameters detour through names no parser-produced term can contain, so an
// argument that itself mentions "a", "b" or "c" is never captured.
FormulaPtr instantiate(const FormulaPtr &def, const std::vector<TermPtr> &args) {
    static constexpr std::array<const char *, 3> params = {"a", "b", "c"};
    static constexpr std::array<const char *, 3> slots = {"@p1", "@p2", "@p3"};
    FormulaPtr out = def;
    for (std::size_t i = 0; i < args.size(); ++i)
        out = subst_free_obj(out, params[i], t_free_obj(slots[i]));
    for (std::size_t i = 0; i < args.size(); ++i)
        out = subst_free_obj(out, slots[i], args[i]);
    return out;
}

bool term_has_defzero(const TermPtr &t) {
    if (t->kind == TK::DefZero)
        return true;
    for (const TermPtr &a : t->args)
        if (term_has_defzero(a))
            return true;
    return false;
}

FormulaPtr verify_flat(const FormulaPtr &g) {
    for (const auto &[name, arity] : free_relation_vars(g)) {
        (void)arity;
        if (is_reserved(name))
            throw Error("internal_error", "defined symbol survived flattening");
    }
    rewrite_atoms(g, [](const Formula &atom, int, int) -> std::optional<FormulaPtr> {
        for (const TermPtr &t : atom.terms)
            if (term_has_defzero(t))
                throw Error("internal_error", "Zero term survived flattening");
        return std::nullopt;
    });
    return g;
}

} // namespace

FormulaPtr boolos_translate(const FormulaPtr &f) {
    HashRule rule = [&rule](const TermPtr &set, const TermPtr &t) -> FormulaPtr {
        FormulaPtr counted = f_exists_obj(
            "n", f_and(f_card(shift_term(set, 1, 0), t_bound_obj(0)),
                       rec_if_hash(f_equal(shift_term(t, 1, 0), t_succ(t_bound_obj(0))),
                                   rule)));
        FormulaPtr unbounded =
            f_and(f_infinite(set), rec_if_hash(f_equal(t, t_zero()), rule));
        return f_or(counted, unbounded);
    };
    return eliminate_hash(f, rule);
}

std::string numeral_name(int j) { return "num" + std::to_string(j); }

FormulaPtr boolos_translate_finite(const FormulaPtr &f, int universe_size) {
    if (universe_size < 1)
        throw Error("precondition_violation", "universe size must be at least 1");
    HashRule rule = [&rule, universe_size](const TermPtr &set, const TermPtr &t) -> FormulaPtr {
        std::vector<FormulaPtr> cases;
        for (int k = 0; k <= universe_size; ++k)
            cases.push_back(
                f_and(exactly_k(set, k),
                      rec_if_hash(f_equal(t, t_free_obj(numeral_name(k + 1))), rule)));
        return or_all(cases);
    };
    return eliminate_hash(f, rule);
}

FregeTranslation frege_translate(const FormulaPtr &f) {
    for (const char *name : kReservedRels)
        if (has_free_relation_var(f, name))
            throw Error("precondition_violation",
                        std::string("input already uses the reserved relation variable ") +
                            name);
    FreshNames names(f);
    FregeTranslation out;
    out.translated = frege_walk(f, names);
    out.definitions = {{"Zero", zero_def()},
                       {"SuccRel", succ_def()},
                       {"N", nat_def()},
                       {"PlusGraph", plus_def()},
                       {"TimesGraph", times_def()}};
    return out;
}

FormulaPtr flatten(const FregeTranslation &t) {
    std::map<std::string, FormulaPtr> defs(t.definitions.begin(), t.definitions.end());
    FormulaPtr g = t.translated;
    for (int round = 0; round < 12; ++round) {
        bool changed = false;
        g = rewrite_atoms(g, [&](const Formula &atom, int, int) -> std::optional<FormulaPtr> {
            bool term_change = false;
            std::vector<TermPtr> terms;
            for (const TermPtr &u : atom.terms) {
                TermPtr v = expand_defzero(u);
                term_change = term_change || v != u;
                terms.push_back(v);
            }
            if (atom.kind == FK::Member && terms.back()->kind == TK::FreeRel &&
                is_reserved(terms.back()->name)) {
                const auto it = defs.find(terms.back()->name);
                if (it == defs.end())
                    throw Error("precondition_violation",
                                "no definition attached for " + terms.back()->name);
                if (static_cast<int>(terms.size()) - 1 != reserved_arity(terms.back()->name))
                    throw Error("arity_mismatch",
                                terms.back()->name + " atom does not match its definition");
                changed = true;
                return instantiate(it->second, {terms.begin(), terms.end() - 1});
            }
            if (!term_change)
                return std::nullopt;
            changed = true;
            Formula copy = atom;
            copy.terms = std::move(terms);
            return std::make_shared<const Formula>(std::move(copy));
        });
        if (!changed)
            return verify_flat(g);
    }
    throw Error("internal_error", "definition expansion failed to reach a fixpoint");
}

PartialDelta build_partial_abstraction(
    const std::vector<DeltaFamilyItem> &family,
    const std::function<bool(std::size_t, std::size_t)> &same_set, const IotaChain &tagger) {
    if (family.size() > 1 && !same_set)
        throw Error("precondition_violation", "family equality test is required");
    PartialDelta out;
    std::vector<std::size_t> head_of(family.size());
    for (std::size_t n = 0; n < family.size(); ++n) {
        std::size_t m = n;
        for (std::size_t k = 0; k < n; ++k)
            if (same_set(k, n)) {
                m = k;
                break;
            }
        if (m != n && head_of[m] != m)
            throw Error("precondition_violation",
                        "family equality test is not an equivalence");
        head_of[n] = m;
        out.provenance.push_back({n, m, family[n].parameters});
        if (m != n)
            continue;
        if (!family[n].representative_value)
            throw Error("representative_failure",
                        "family item " + std::to_string(n) + " has no representative selector");
        Int base;
        try {
            base = family[n].representative_value();
        } catch (const std::exception &e) {
            throw Error("representative_failure", "family item " + std::to_string(n) +
                                                      " selector failed: " + e.what());
        }
        out.entries.push_back(
            {family[n].set_display, n, tagger.apply(static_cast<int>(n), base)});
    }
    // disjoint tag ranges per class head make repeats impossible; verify
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        for (std::size_t j = i + 1; j < out.entries.size(); ++j)
            if (out.entries[i].value == out.entries[j].value)
                throw Error("internal_error", "tagger produced a repeated value");
    return out;
}

} // namespace sol
