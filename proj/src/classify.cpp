#include "sol/classify.hpp"

#include "sol/error.hpp"

#include <algorithm>

namespace sol {

bool operator==(const Classification &a, const Classification &b) {
    return a.level == b.level && a.n == b.n;
}

namespace {

// A class is tracked as the pair (s, p): the least n with the formula
// expressible as Sigma(n), and the least n for Pi(n), where level 0 stands
// for arithmetical. Arithmetical is (0,0); a proper Sigma(n) is (n, n+1), a
// proper Pi(n) is (n+1, n); (n, n) is expressible both ways.
struct SP {
    int s = 0;
    int p = 0;
    bool operator==(const SP &o) const { return s == o.s && p == o.p; }
};

SP sp_not(SP a) { return {a.p, a.s}; }
SP sp_join(SP a, SP b) { return {std::max(a.s, b.s), std::max(a.p, b.p)}; }

// Prefixing an existential relation quantifier: the result is Sigma(s') where
// s' is the cheapest way in, either reusing a leading existential block
// (s level) or opening a fresh block over the Pi(p) form.
SP sp_exists_rel(SP a) {
    int s = std::min(std::max(a.s, 1), a.p + 1);
    return {s, s + 1};
}

SP sp_forall_rel(SP a) {
    int p = std::min(std::max(a.p, 1), a.s + 1);
    return {p + 1, p};
}

// (t, e): t counts leading object quantifiers as transparent; e is the class
// once an enclosing relation quantifier forces their promotion.
struct TE {
    SP t;
    SP e;
};

TE walk(const FormulaPtr &f) {
    using FK = Formula::Kind;
    switch (f->kind) {
    case FK::Member:
    case FK::Equal:
    case FK::Leq:
    case FK::Card:
    case FK::Infinite:
        return {{0, 0}, {0, 0}};
    case FK::Not: {
        TE a = walk(f->sub[0]);
        return {sp_not(a.t), sp_not(a.e)};
    }
    case FK::And:
    case FK::Or: {
        TE a = walk(f->sub[0]);
        TE b = walk(f->sub[1]);
        return {sp_join(a.t, b.t), sp_join(a.e, b.e)};
    }
    case FK::Implies: {
        TE a = walk(f->sub[0]);
        TE b = walk(f->sub[1]);
        return {sp_join(sp_not(a.t), b.t), sp_join(sp_not(a.e), b.e)};
    }
    case FK::Iff: {
        TE a = walk(f->sub[0]);
        TE b = walk(f->sub[1]);
        SP t = sp_join(sp_join(sp_not(a.t), b.t), sp_join(sp_not(b.t), a.t));
        SP e = sp_join(sp_join(sp_not(a.e), b.e), sp_join(sp_not(b.e), a.e));
        return {t, e};
    }
    case FK::ForallRel: {
        TE a = walk(f->sub[0]);
        SP q = sp_forall_rel(a.e);
        return {q, q};
    }
    case FK::ExistsRel: {
        TE a = walk(f->sub[0]);
        SP q = sp_exists_rel(a.e);
        return {q, q};
    }
    case FK::ForallObj: {
        TE a = walk(f->sub[0]);
        SP e = a.e == SP{0, 0} ? SP{0, 0} : sp_forall_rel(a.e);
        return {a.t, e};
    }
    case FK::ExistsObj: {
        TE a = walk(f->sub[0]);
        SP e = a.e == SP{0, 0} ? SP{0, 0} : sp_exists_rel(a.e);
        return {a.t, e};
    }
    }
    throw Error("internal_error", "unhandled formula kind");
}

} // namespace

bool subclass_of(const Classification &a, const Classification &b) {
    using L = Classification::Level;
    if (a.level == L::Arithmetical) return true;
    if (b.level == L::Arithmetical) return false;
    if (a.level == b.level) return a.n <= b.n;
    return a.n < b.n;
}

Classification dual(const Classification &c) {
    using L = Classification::Level;
    if (c.level == L::Arithmetical) return c;
    return c.level == L::Sigma ? Classification::pi(c.n) : Classification::sigma(c.n);
}

std::string to_string(const Classification &c) {
    using L = Classification::Level;
    if (c.level == L::Arithmetical) return "Arithmetical";
    return (c.level == L::Sigma ? "Sigma(" : "Pi(") + std::to_string(c.n) + ")";
}

Classification classify(const FormulaPtr &f) {
    SP r = walk(f).t;
    if (r == SP{0, 0}) return Classification::arithmetical();
    if (r.s < r.p) return Classification::sigma(r.s);
    if (r.p < r.s) return Classification::pi(r.p);
    // Expressible both ways at the same level; report the universal side.
    return Classification::pi(r.p);
}

} // namespace sol
