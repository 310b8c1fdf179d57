#include "sol/acf.hpp"

#include "sol/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace sol {

namespace {

Poly poly_one() { return Poly::constant(Rat(1)); }

// (x - 1)(x - 2)...(x - count)
Poly falling_linear_product(int count) {
    Poly p = poly_one();
    for (int i = 1; i <= count; ++i)
        p = p * Poly({Rat(-i), Rat(1)});
    return p;
}

Poly exact_quotient(const Poly &num, const Poly &den) {
    PolyDivMod d = divmod(num, den);
    if (!d.remainder.is_zero())
        throw Error("internal_error", "expected exact polynomial division");
    return d.quotient;
}

} // namespace

AcfSet::AcfSet() : base_(poly_one()), mode_(AcfMode::Finite) {}

AcfSet AcfSet::roots(const Poly &p) {
    if (p.is_zero())
        throw Error("zero_polynomial", "the zero polynomial does not determine a root set");
    AcfSet s;
    s.base_ = p.degree() == 0 ? poly_one() : squarefree_part(p);
    s.mode_ = AcfMode::Finite;
    return s;
}

AcfSet AcfSet::co_roots(const Poly &p) {
    AcfSet s = roots(p);
    s.mode_ = AcfMode::Cofinite;
    return s;
}

AcfSet AcfSet::empty() { return AcfSet(); }

AcfSet AcfSet::full() { return co_roots(poly_one()); }

bool AcfSet::member(const Rat &q) const {
    const bool is_root = base_.eval(q) == 0;
    return mode_ == AcfMode::Finite ? is_root : !is_root;
}

bool AcfSet::is_empty() const { return mode_ == AcfMode::Finite && base_.degree() == 0; }

bool AcfSet::is_full() const { return mode_ == AcfMode::Cofinite && base_.degree() == 0; }

AcfSet acf_algebra(SetOp op, const AcfSet &x, const std::optional<AcfSet> &y) {
    if (op == SetOp::Complement) {
        return x.mode() == AcfMode::Finite ? AcfSet::co_roots(x.base())
                                           : AcfSet::roots(x.base());
    }
    if (!y)
        throw Error("missing_operand", "binary set operation needs a second operand");
    if (op == SetOp::Difference)
        return acf_algebra(SetOp::Intersect, x, acf_algebra(SetOp::Complement, *y));

    const Poly &bx = x.base();
    const Poly &by = y->base();
    const bool fx = x.mode() == AcfMode::Finite;
    const bool fy = y->mode() == AcfMode::Finite;
    if (op == SetOp::Union) {
        if (fx && fy)
            return AcfSet::roots(bx * by);
        if (!fx && !fy)
            return AcfSet::co_roots(poly_gcd(bx, by));
        // finite united with cofinite: complement is the cofinite side's
        // complement minus the finite side's roots
        const Poly &fin = fx ? bx : by;
        const Poly &cof = fx ? by : bx;
        return AcfSet::co_roots(exact_quotient(cof, poly_gcd(cof, fin)));
    }
    // Intersect
    if (fx && fy)
        return AcfSet::roots(poly_gcd(bx, by));
    if (!fx && !fy)
        return AcfSet::co_roots(bx * by);
    const Poly &fin = fx ? bx : by;
    const Poly &cof = fx ? by : bx;
    return AcfSet::roots(exact_quotient(fin, poly_gcd(fin, cof)));
}

CardClass acf_card(const AcfSet &x) { return CardClass{x.mode(), distinct_root_count(x.base())}; }

int acf_number(const AcfSet &x) {
    const CardClass c = acf_card(x);
    return c.mode == AcfMode::Finite ? c.n : -(c.n + 1);
}

bool acf_hume_equiv(const AcfSet &x, const AcfSet &y) { return acf_card(x) == acf_card(y); }

AcfSet acf_canonical_set(int n) {
    if (n >= 0)
        return AcfSet::roots(falling_linear_product(n));
    return AcfSet::co_roots(falling_linear_product(-n - 1));
}

namespace {

// Values m for which the successor relation holds at n, found by witness
// construction: extend the canonical set by one point y outside it and
// collect the value of the extension.
std::set<int> successor_values(int n) {
    const AcfSet x = acf_canonical_set(n);
    std::vector<Rat> candidates;
    if (x.mode() == AcfMode::Finite) {
        // Any point outside a finite set will do, and all give the same
        // extension class; take the first integer that is not a root.
        for (int v = 0;; ++v) {
            if (!x.member(Rat(v))) {
                candidates.emplace_back(v);
                break;
            }
        }
    } else {
        // A point outside a cofinite set is a root of the base. The
        // canonical complement is {1, ..., deg}, so the integer scan finds
        // every complement point; an empty complement leaves no candidate.
        for (int v = 1; v <= x.base().degree(); ++v)
            if (x.base().eval(Rat(v)) == 0)
                candidates.emplace_back(v);
    }
    std::set<int> values;
    for (const Rat &point : candidates) {
        const AcfSet extension = acf_union(x, AcfSet::roots(Poly({-point, Rat(1)})));
        values.insert(acf_number(extension));
    }
    return values;
}

} // namespace

bool acf_successor_P(int n, int m) { return successor_values(n).count(m) > 0; }

SaReport acf_sa_report(int bound) {
    if (bound < 1)
        throw Error("precondition_violation", "scan bound must be at least 1");
    SaReport rep;
    rep.bound = bound;
    rep.witness_number = acf_number(AcfSet::full());

    std::vector<std::set<int>> succ(static_cast<size_t>(2 * bound + 1));
    const auto window_succ = [&](int n) -> const std::set<int> & {
        return succ[static_cast<size_t>(n + bound)];
    };
    for (int n = -bound; n <= bound; ++n)
        succ[static_cast<size_t>(n + bound)] = successor_values(n);

    rep.successor_found = false;
    for (int m : window_succ(rep.witness_number))
        if (-bound <= m && m <= bound)
            rep.successor_found = true;

    const Poly x = Poly::variable();
    const std::vector<AcfSet> family{
        AcfSet::full(),
        AcfSet::co_roots(x),
        AcfSet::roots(Poly({Rat(-1), Rat(1)}) * Poly({Rat(-2), Rat(1)}) *
                      Poly({Rat(-3), Rat(1)})),
        AcfSet::co_roots(Poly({Rat(-5), Rat(1)})),
    };
    for (const AcfSet &f : family) {
        SaSetCheck chk;
        chk.candidate = f;
        chk.closed = true;
        chk.hereditary = true;
        for (int n = -bound; n <= bound; ++n) {
            for (int m : window_succ(n)) {
                if (m < -bound || m > bound)
                    continue;
                if (n == 0 && !f.member(Rat(m)))
                    chk.closed = false;
                if (f.member(Rat(n)) && !f.member(Rat(m))) {
                    chk.hereditary = false;
                    if (!chk.escape)
                        chk.escape = std::pair<int, int>{n, m};
                }
            }
        }
        chk.contains_window = true;
        for (int v = -bound; v <= bound; ++v)
            if (v != 0 && !f.member(Rat(v)))
                chk.contains_window = false;
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

// --- descriptors ------------------------------------------------------------

namespace {

void strip_zero_coeffs(std::vector<Poly> &xc) {
    while (!xc.empty() && xc.back().is_zero())
        xc.pop_back();
}

ThetaPtr make_atom(Theta::Kind kind, std::vector<Poly> xc) {
    strip_zero_coeffs(xc);
    auto t = std::make_shared<Theta>();
    t->kind = kind;
    t->x_coeffs = std::move(xc);
    return t;
}

ThetaPtr make_node(Theta::Kind kind, std::vector<ThetaPtr> sub) {
    auto t = std::make_shared<Theta>();
    t->kind = kind;
    t->sub = std::move(sub);
    return t;
}

} // namespace

ThetaPtr theta_eq(std::vector<Poly> x_coeffs) { return make_atom(Theta::Kind::Eq, std::move(x_coeffs)); }
ThetaPtr theta_neq(std::vector<Poly> x_coeffs) { return make_atom(Theta::Kind::Neq, std::move(x_coeffs)); }
ThetaPtr theta_not(const ThetaPtr &a) { return make_node(Theta::Kind::Not, {a}); }
ThetaPtr theta_and(const ThetaPtr &a, const ThetaPtr &b) { return make_node(Theta::Kind::And, {a, b}); }
ThetaPtr theta_or(const ThetaPtr &a, const ThetaPtr &b) { return make_node(Theta::Kind::Or, {a, b}); }

namespace {

// Polynomial in x and y held by x-power: c[i] is the coefficient of x^i,
// itself a Poly in y.
struct BiPoly {
    std::vector<Poly> c;

    void normalize() {
        while (!c.empty() && c.back().is_zero())
            c.pop_back();
    }

    static BiPoly constant(const Rat &q) {
        BiPoly b;
        if (q != 0)
            b.c.push_back(Poly::constant(q));
        return b;
    }
    static BiPoly var_x() {
        BiPoly b;
        b.c = {Poly(), Poly::constant(Rat(1))};
        return b;
    }
    static BiPoly var_y() {
        BiPoly b;
        b.c = {Poly::variable()};
        return b;
    }
};

BiPoly bi_add(const BiPoly &a, const BiPoly &b) {
    BiPoly out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < out.c.size(); ++i) {
        if (i < a.c.size())
            out.c[i] = out.c[i] + a.c[i];
        if (i < b.c.size())
            out.c[i] = out.c[i] + b.c[i];
    }
    out.normalize();
    return out;
}

BiPoly bi_neg(const BiPoly &a) {
    BiPoly out = a;
    for (Poly &p : out.c)
        p = -p;
    return out;
}

BiPoly bi_sub(const BiPoly &a, const BiPoly &b) { return bi_add(a, bi_neg(b)); }

BiPoly bi_mul(const BiPoly &a, const BiPoly &b) {
    BiPoly out;
    if (a.c.empty() || b.c.empty())
        return out;
    out.c.resize(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = out.c[i + j] + a.c[i] * b.c[j];
    out.normalize();
    return out;
}

BiPoly bi_pow(const BiPoly &a, long long e) {
    BiPoly out = BiPoly::constant(Rat(1));
    for (long long i = 0; i < e; ++i)
        out = bi_mul(out, a);
    return out;
}

struct ThetaLexer {
    const std::string &text;
    size_t pos = 0;

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip();
        return pos >= text.size();
    }
    char peek() {
        skip();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_word(const std::string &w) {
        skip();
        if (text.compare(pos, w.size(), w) != 0)
            return false;
        const size_t end = pos + w.size();
        if (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end])))
            return false;
        pos = end;
        return true;
    }
    [[noreturn]] void fail(const std::string &what) {
        throw Error("parse_error",
                    what + " at position " + std::to_string(pos) + " in '" + text + "'");
    }
    Int integer() {
        skip();
        const size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected a number");
        return Int(text.substr(start, pos - start));
    }
};

struct ThetaParser {
    ThetaLexer lex;

    BiPoly poly_atom() {
        if (lex.accept('(')) {
            BiPoly inner = poly_sum();
            if (!lex.accept(')'))
                lex.fail("expected ')'");
            return inner;
        }
        if (lex.accept_word("x"))
            return BiPoly::var_x();
        if (lex.accept_word("y"))
            return BiPoly::var_y();
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            Int num = lex.integer();
            Int den = 1;
            if (lex.accept('/')) {
                den = lex.integer();
                if (den == 0)
                    lex.fail("zero denominator");
            }
            return BiPoly::constant(Rat(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(lex.peek())))
            throw Error("unsupported_shape",
                        "descriptors range over x and y only, in '" + lex.text + "'");
        lex.fail("expected a polynomial term");
    }

    BiPoly poly_power() {
        BiPoly base = poly_atom();
        if (lex.accept('^')) {
            const Int e = lex.integer();
            if (e < 0 || e > 40)
                lex.fail("unsupported exponent");
            return bi_pow(base, e.convert_to<long long>());
        }
        return base;
    }

    BiPoly poly_product() {
        BiPoly out = poly_power();
        while (lex.accept('*'))
            out = bi_mul(out, poly_power());
        return out;
    }

    BiPoly poly_sum() {
        BiPoly out = lex.accept('-') ? bi_neg(poly_product()) : poly_product();
        while (true) {
            if (lex.accept('+'))
                out = bi_add(out, poly_product());
            else if (lex.accept('-'))
                out = bi_sub(out, poly_product());
            else
                return out;
        }
    }

    ThetaPtr comparison() {
        BiPoly lhs = poly_sum();
        bool negated = false;
        if (lex.accept('!')) {
            if (!lex.accept('='))
                lex.fail("expected '=' after '!'");
            negated = true;
        } else if (lex.peek() == '<' || lex.peek() == '>') {
            throw Error("unsupported_shape",
                        "descriptors admit only = and != comparisons, in '" + lex.text + "'");
        } else if (!lex.accept('=')) {
            lex.fail("expected '=' or '!='");
        }
        BiPoly rhs = poly_sum();
        BiPoly diff = bi_sub(lhs, rhs);
        return negated ? theta_neq(std::move(diff.c)) : theta_eq(std::move(diff.c));
    }

    ThetaPtr unary() {
        if (lex.accept_word("not"))
            return theta_not(unary());
        // '(' is ambiguous between a Boolean group and a parenthesized
        // polynomial; try the comparison first and fall back on the group.
        const size_t save = lex.pos;
        if (lex.peek() == '(') {
            try {
                return comparison();
            } catch (const Error &e) {
                if (e.code() != "parse_error")
                    throw;
                lex.pos = save;
            }
            lex.accept('(');
            ThetaPtr inner = or_level();
            if (!lex.accept(')'))
                lex.fail("expected ')'");
            return inner;
        }
        return comparison();
    }

    ThetaPtr and_level() {
        ThetaPtr out = unary();
        while (lex.accept_word("and"))
            out = theta_and(out, unary());
        return out;
    }

    ThetaPtr or_level() {
        ThetaPtr out = and_level();
        while (lex.accept_word("or"))
            out = theta_or(out, and_level());
        return out;
    }
};

std::string poly_in_y_to_string(const Poly &p) {
    std::string s = poly_to_string(p);
    for (char &c : s)
        if (c == 'x')
            c = 'y';
    return s;
}

// y-monomial test: at most one nonzero coefficient
bool is_monomial(const Poly &p) {
    int nonzero = 0;
    for (const Rat &q : p.coeffs())
        if (q != 0)
            ++nonzero;
    return nonzero <= 1;
}

std::string bipoly_to_string(const std::vector<Poly> &xc) {
    if (xc.empty())
        return "0";
    std::string out;
    for (int i = static_cast<int>(xc.size()) - 1; i >= 0; --i) {
        const Poly &c = xc[static_cast<size_t>(i)];
        if (c.is_zero())
            continue;
        std::string coeff;
        bool negated = false;
        if (is_monomial(c)) {
            const int j = c.degree();
            Rat q = c.coeff(j);
            if (q < 0) {
                negated = true;
                q = -q;
            }
            std::vector<std::string> factors;
            if (q != 1 || (i == 0 && j == 0))
                factors.push_back(rational_to_string(q));
            if (j == 1)
                factors.push_back("y");
            else if (j > 1)
                factors.push_back("y^" + std::to_string(j));
            for (size_t f = 0; f < factors.size(); ++f)
                coeff += (f == 0 ? "" : "*") + factors[f];
        } else {
            coeff = "(" + poly_in_y_to_string(c) + ")";
        }
        std::string term = coeff;
        if (i > 0) {
            const std::string xpart = i == 1 ? "x" : "x^" + std::to_string(i);
            term = coeff.empty() ? xpart : coeff + "*" + xpart;
        }
        if (out.empty())
            out += negated ? "-" : "";
        else
            out += negated ? " - " : " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

} // namespace

ThetaPtr parse_theta(const std::string &text) {
    ThetaParser p{ThetaLexer{text, 0}};
    ThetaPtr out = p.or_level();
    if (!p.lex.done())
        p.lex.fail("unexpected trailing input");
    return out;
}

std::string theta_to_string(const ThetaPtr &t) {
    switch (t->kind) {
    case Theta::Kind::Eq:
        return bipoly_to_string(t->x_coeffs) + " = 0";
    case Theta::Kind::Neq:
        return bipoly_to_string(t->x_coeffs) + " != 0";
    case Theta::Kind::Not: {
        const Theta::Kind k = t->sub[0]->kind;
        const std::string inner = theta_to_string(t->sub[0]);
        if (k == Theta::Kind::And || k == Theta::Kind::Or)
            return "not (" + inner + ")";
        return "not " + inner;
    }
    case Theta::Kind::And: {
        auto side = [](const ThetaPtr &s) {
            const std::string text = theta_to_string(s);
            return s->kind == Theta::Kind::Or ? "(" + text + ")" : text;
        };
        return side(t->sub[0]) + " and " + side(t->sub[1]);
    }
    case Theta::Kind::Or:
        return theta_to_string(t->sub[0]) + " or " + theta_to_string(t->sub[1]);
    }
    throw Error("internal_error", "unhandled descriptor kind");
}

int theta_degree_bound(const ThetaPtr &t) {
    switch (t->kind) {
    case Theta::Kind::Eq:
    case Theta::Kind::Neq:
        return t->x_coeffs.empty() ? 0 : static_cast<int>(t->x_coeffs.size()) - 1;
    case Theta::Kind::Not:
        return theta_degree_bound(t->sub[0]);
    case Theta::Kind::And:
    case Theta::Kind::Or:
        return theta_degree_bound(t->sub[0]) + theta_degree_bound(t->sub[1]);
    }
    throw Error("internal_error", "unhandled descriptor kind");
}

AcfSet theta_set(const ThetaPtr &t, const Rat &a) {
    switch (t->kind) {
    case Theta::Kind::Eq:
    case Theta::Kind::Neq: {
        std::vector<Rat> cs;
        for (const Poly &c : t->x_coeffs)
            cs.push_back(c.eval(a));
        const Poly p(std::move(cs));
        AcfSet s;
        if (p.is_zero())
            s = AcfSet::full();
        else if (p.degree() == 0)
            s = AcfSet::empty();
        else
            s = AcfSet::roots(p);
        return t->kind == Theta::Kind::Eq ? s : acf_complement(s);
    }
    case Theta::Kind::Not:
        return acf_complement(theta_set(t->sub[0], a));
    case Theta::Kind::And:
        return acf_intersect(theta_set(t->sub[0], a), theta_set(t->sub[1], a));
    case Theta::Kind::Or:
        return acf_union(theta_set(t->sub[0], a), theta_set(t->sub[1], a));
    }
    throw Error("internal_error", "unhandled descriptor kind");
}

namespace {

TermPtr numeral_term(const Int &n) {
    TermPtr t = t_zero();
    for (Int i = 0; i < n; ++i)
        t = t_succ(t);
    return t;
}

// c * var^xi * y^yj with c >= 1; the numeral is dropped for a bare c = 1
// monomial with variables.
TermPtr monomial_term(const Int &c, int xi, int yj, const TermPtr &var) {
    TermPtr out;
    if (c != 1 || (xi == 0 && yj == 0))
        out = numeral_term(c);
    for (int i = 0; i < xi; ++i)
        out = out ? t_times(out, var) : var;
    for (int j = 0; j < yj; ++j)
        out = out ? t_times(out, t_free_obj("y")) : t_free_obj("y");
    return out;
}

FormulaPtr atom_equation(const std::vector<Poly> &xc, const TermPtr &var) {
    Int den = 1;
    for (const Poly &c : xc)
        for (const Rat &q : c.coeffs())
            den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q));
    std::vector<TermPtr> pos, neg;
    for (size_t i = 0; i < xc.size(); ++i) {
        const Poly &c = xc[i];
        for (int j = 0; j <= std::max(c.degree(), 0); ++j) {
            if (c.is_zero())
                break;
            const Rat scaled = c.coeff(j) * den;
            const Int n = boost::multiprecision::numerator(scaled);
            if (n > 0)
                pos.push_back(monomial_term(n, static_cast<int>(i), j, var));
            else if (n < 0)
                neg.push_back(monomial_term(-n, static_cast<int>(i), j, var));
        }
    }
    const auto side = [](const std::vector<TermPtr> &terms) {
        if (terms.empty())
            return t_zero();
        TermPtr out = terms[0];
        for (size_t i = 1; i < terms.size(); ++i)
            out = t_plus(out, terms[i]);
        return out;
    };
    return f_equal(side(pos), side(neg));
}

} // namespace

FormulaPtr theta_matrix(const ThetaPtr &t, const TermPtr &var) {
    switch (t->kind) {
    case Theta::Kind::Eq:
        return atom_equation(t->x_coeffs, var);
    case Theta::Kind::Neq:
        return f_not(atom_equation(t->x_coeffs, var));
    case Theta::Kind::Not:
        return f_not(theta_matrix(t->sub[0], var));
    case Theta::Kind::And:
        return f_and(theta_matrix(t->sub[0], var), theta_matrix(t->sub[1], var));
    case Theta::Kind::Or:
        return f_or(theta_matrix(t->sub[0], var), theta_matrix(t->sub[1], var));
    }
    throw Error("internal_error", "unhandled descriptor kind");
}

FormulaPtr acf_theta_prime(const ThetaPtr &t) {
    const int bound = theta_degree_bound(t);
    const auto phi = [&t](const TermPtr &v, bool positive) {
        const FormulaPtr m = theta_matrix(t, v);
        return positive ? m : f_not(m);
    };

    // "exactly i points satisfy phi": i existential witnesses, pairwise
    // distinct, covering every solution.
    const auto exact_count = [&phi](int i, bool positive) {
        if (i == 0)
            return f_forall_obj("z", close_obj(f_not(phi(t_free_obj("z"), positive)), "z"));
        std::vector<std::string> names;
        for (int j = 1; j <= i; ++j)
            names.push_back("w" + std::to_string(j));
        std::vector<FormulaPtr> parts;
        for (const std::string &w : names)
            parts.push_back(phi(t_free_obj(w), positive));
        for (size_t j = 0; j < names.size(); ++j)
            for (size_t l = j + 1; l < names.size(); ++l)
                parts.push_back(
                    f_not(f_equal(t_free_obj(names[j]), t_free_obj(names[l]))));
        FormulaPtr covered = f_equal(t_free_obj("z"), t_free_obj(names[0]));
        for (size_t j = 1; j < names.size(); ++j)
            covered = f_or(covered, f_equal(t_free_obj("z"), t_free_obj(names[j])));
        parts.push_back(f_forall_obj(
            "z", close_obj(f_implies(phi(t_free_obj("z"), positive), covered), "z")));
        FormulaPtr out = f_and_all(parts);
        for (int j = i; j >= 1; --j)
            out = f_exists_obj(names[static_cast<size_t>(j - 1)],
                               close_obj(out, names[static_cast<size_t>(j - 1)]));
        return out;
    };

    const TermPtr x = t_free_obj("x");
    FormulaPtr out;
    for (int i = 0; i <= bound; ++i) {
        const FormulaPtr finite_clause =
            f_and(exact_count(i, true), f_equal(x, numeral_term(i)));
        const FormulaPtr cofinite_clause = f_and(
            exact_count(i, false), f_equal(t_plus(x, numeral_term(i + 1)), t_zero()));
        out = out ? f_or(out, finite_clause) : finite_clause;
        out = f_or(out, cofinite_clause);
    }
    return out;
}

// --- text and JSON forms ----------------------------------------------------

std::string acf_set_to_string(const AcfSet &x) {
    const std::string name = x.mode() == AcfMode::Finite ? "roots" : "co-roots";
    return name + "(" + poly_to_string(x.base()) + ")";
}

AcfSet acf_set_from_string(const std::string &text) {
    size_t start = 0;
    size_t end = text.size();
    while (start < end && std::isspace(static_cast<unsigned char>(text[start])))
        ++start;
    while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    const std::string body = text.substr(start, end - start);
    bool cofinite = false;
    std::string inner;
    if (body.rfind("co-roots(", 0) == 0) {
        cofinite = true;
        inner = body.substr(9);
    } else if (body.rfind("roots(", 0) == 0) {
        inner = body.substr(6);
    } else {
        throw Error("parse_error", "expected roots(...) or co-roots(...) in '" + text + "'");
    }
    if (inner.empty() || inner.back() != ')')
        throw Error("parse_error", "expected closing ')' in '" + text + "'");
    inner.pop_back();
    const Poly base = parse_poly(inner);
    return cofinite ? AcfSet::co_roots(base) : AcfSet::roots(base);
}

nlohmann::json acf_set_to_json(const AcfSet &x) {
    return {{"base", poly_to_string(x.base())},
            {"mode", x.mode() == AcfMode::Finite ? "finite" : "cofinite"}};
}

AcfSet acf_set_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("mode"))
        throw Error("parse_error", "expected base and mode keys");
    std::string base, mode;
    try {
        base = j.at("base").get<std::string>();
        mode = j.at("mode").get<std::string>();
    } catch (const nlohmann::json::exception &e) {
        throw Error("parse_error", std::string("malformed set JSON: ") + e.what());
    }
    const Poly p = parse_poly(base);
    if (mode == "finite")
        return AcfSet::roots(p);
    if (mode == "cofinite")
        return AcfSet::co_roots(p);
    throw Error("parse_error", "mode must be finite or cofinite");
}

} // namespace sol
