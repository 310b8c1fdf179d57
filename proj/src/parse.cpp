#include "sol/parse.hpp"

#include "sol/error.hpp"
#include "sol/names.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <vector>

namespace sol {

namespace {

enum class Tok {
    Name,
    Number,
    LParen,
    RParen,
    Dot,
    Comma,
    Colon,
    Equal,
    Leq,
    Hash,
    EmptySet,
    Plus,
    Star,
    Arrow,
    Iff,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

[[noreturn]] void fail(size_t pos, const std::string &message) {
    throw Error("parse_error", message + " at position " + std::to_string(pos));
}

std::vector<Token> lex(const std::string &text) {
    std::vector<Token> out;
    size_t i = 0, n = text.size();
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < n && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::Name, text.substr(start, i - start), start});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::Number, text.substr(start, i - start), start});
        } else if (c == '(') {
            out.push_back({Tok::LParen, "(", start});
            ++i;
        } else if (c == ')') {
            out.push_back({Tok::RParen, ")", start});
            ++i;
        } else if (c == '.') {
            out.push_back({Tok::Dot, ".", start});
            ++i;
        } else if (c == ',') {
            out.push_back({Tok::Comma, ",", start});
            ++i;
        } else if (c == ':') {
            out.push_back({Tok::Colon, ":", start});
            ++i;
        } else if (c == '=') {
            out.push_back({Tok::Equal, "=", start});
            ++i;
        } else if (c == '#') {
            out.push_back({Tok::Hash, "#", start});
            ++i;
        } else if (c == '+') {
            out.push_back({Tok::Plus, "+", start});
            ++i;
        } else if (c == '*') {
            out.push_back({Tok::Star, "*", start});
            ++i;
        } else if (c == '{') {
            if (i + 1 < n && text[i + 1] == '}') {
                out.push_back({Tok::EmptySet, "{}", start});
                i += 2;
            } else {
                fail(start, "expected '{}'");
            }
        } else if (c == '<') {
            if (i + 2 < n + 1 && text.compare(i, 3, "<->") == 0) {
                out.push_back({Tok::Iff, "<->", start});
                i += 3;
            } else if (i + 1 < n && text[i + 1] == '=') {
                out.push_back({Tok::Leq, "<=", start});
                i += 2;
            } else {
                fail(start, "expected '<->' or '<='");
            }
        } else if (c == '-') {
            if (i + 1 < n && text[i + 1] == '>') {
                out.push_back({Tok::Arrow, "->", start});
                i += 2;
            } else {
                fail(start, "expected '->'");
            }
        } else {
            fail(start, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", n});
    return out;
}

// A binder in scope. Relation binders share a mutable arity slot: 0 means not
// yet determined; the first use fixes it and later conflicting uses fail.
struct Binder {
    std::string name;
    bool is_object;
    std::shared_ptr<int> arity;
};

struct Parser {
    std::vector<Token> toks;
    size_t pos = 0;
    std::vector<Binder> scopes;
    std::map<std::string, int> decls;

    const Token &peek(int ahead = 0) const {
        size_t i = pos + static_cast<size_t>(ahead);
        return i < toks.size() ? toks[i] : toks.back();
    }
    const Token &advance() { return toks[pos++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_word(const char *w) {
        if (peek().kind == Tok::Name && peek().text == w) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(Tok k, const char *what) {
        if (!accept(k)) fail(peek().pos, std::string("expected ") + what);
    }

    void demand_arity(const Binder &b, int arity) {
        if (*b.arity == 0)
            *b.arity = arity;
        else if (*b.arity != arity)
            throw Error("arity_mismatch", "relation variable " + b.name + " used with arity " +
                                              std::to_string(arity) + " and " +
                                              std::to_string(*b.arity));
    }

    // Finds a name in scope; fills the matching de Bruijn index counted over
    // binders of the same sort.
    const Binder *lookup(const std::string &name, int &index) const {
        int obj_depth = 0, rel_depth = 0;
        for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
            if (it->name == name) {
                index = it->is_object ? obj_depth : rel_depth;
                return &*it;
            }
            if (it->is_object)
                ++obj_depth;
            else
                ++rel_depth;
        }
        return nullptr;
    }

    // --- terms ---

    TermPtr set_term() {
        const Token &t = peek();
        if (accept(Tok::EmptySet)) return t_empty_set();
        if (t.kind != Tok::Name) fail(t.pos, "expected a set term");
        advance();
        int index = 0;
        if (const Binder *b = lookup(t.text, index)) {
            if (b->is_object) fail(t.pos, "object variable " + t.text + " used as a set");
            demand_arity(*b, 1);
            return t_bound_rel(index);
        }
        auto decl = decls.find(t.text);
        if (decl != decls.end()) {
            if (decl->second != 1)
                throw Error("arity_mismatch", "relation variable " + t.text + " used with arity 1 and " +
                                                  std::to_string(decl->second));
            return t_free_rel(t.text, 1);
        }
        if (is_plain_relation_name(t.text)) return t_free_rel(t.text, 1);
        fail(t.pos, "undeclared relation variable " + t.text);
    }

    TermPtr relation_ref(int arity) {
        const Token &t = peek();
        if (t.kind != Tok::Name || !is_relation_var_name(t.text))
            fail(t.pos, "expected a relation variable");
        advance();
        int index = 0;
        if (const Binder *b = lookup(t.text, index)) {
            if (b->is_object) fail(t.pos, "object variable " + t.text + " used as a relation");
            demand_arity(*b, arity);
            return t_bound_rel(index);
        }
        auto decl = decls.find(t.text);
        if (decl != decls.end()) {
            if (decl->second != arity)
                throw Error("arity_mismatch", "relation variable " + t.text + " used with arity " +
                                                  std::to_string(arity) + " and " +
                                                  std::to_string(decl->second));
            return t_free_rel(t.text, arity);
        }
        if (is_plain_relation_name(t.text)) return t_free_rel(t.text, arity);
        fail(t.pos, "undeclared relation variable " + t.text);
    }

    TermPtr term() {
        TermPtr lhs = mul_term();
        while (accept(Tok::Plus)) lhs = t_plus(lhs, mul_term());
        return lhs;
    }

    TermPtr mul_term() {
        TermPtr lhs = prim_term();
        while (accept(Tok::Star)) lhs = t_times(lhs, prim_term());
        return lhs;
    }

    TermPtr prim_term() {
        const Token &t = peek();
        if (t.kind == Tok::Number) {
            if (t.text != "0") fail(t.pos, "only the numeral 0 exists; build others with s(...)");
            advance();
            return t_zero();
        }
        if (accept(Tok::Hash)) return t_abs(AbsOp::Hash, set_term());
        if (accept(Tok::LParen)) {
            TermPtr inner = term();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (t.kind != Tok::Name) fail(t.pos, "expected an object term");
        if (t.text == "Zero") {
            advance();
            return t_def_zero();
        }
        if (t.text == "s") {
            advance();
            expect(Tok::LParen, "'(' after s");
            TermPtr inner = term();
            expect(Tok::RParen, "')'");
            return t_succ(inner);
        }
        if (t.text == "ext") {
            advance();
            expect(Tok::LParen, "'(' after ext");
            TermPtr set = set_term();
            expect(Tok::RParen, "')'");
            return t_abs(AbsOp::Ext, set);
        }
        advance();
        int index = 0;
        if (const Binder *b = lookup(t.text, index)) {
            if (!b->is_object) fail(t.pos, "relation variable " + t.text + " used as an object");
            return t_bound_obj(index);
        }
        if (decls.count(t.text)) fail(t.pos, "relation variable " + t.text + " used as an object");
        if (is_object_var_name(t.text)) return t_free_obj(t.text);
        fail(t.pos, "expected an object term, found " + t.text);
    }

    // --- formulas ---

    FormulaPtr formula() {
        FormulaPtr lhs = implies_formula();
        while (accept(Tok::Iff)) lhs = f_iff(lhs, implies_formula());
        return lhs;
    }

    FormulaPtr implies_formula() {
        FormulaPtr lhs = or_formula();
        if (accept(Tok::Arrow)) return f_implies(lhs, implies_formula());
        return lhs;
    }

    FormulaPtr or_formula() {
        FormulaPtr lhs = and_formula();
        while (accept_word("or")) lhs = f_or(lhs, and_formula());
        return lhs;
    }

    FormulaPtr and_formula() {
        FormulaPtr lhs = unary_formula();
        while (accept_word("and")) lhs = f_and(lhs, unary_formula());
        return lhs;
    }

    FormulaPtr unary_formula() {
        if (accept_word("not")) return f_not(unary_formula());
        const Token &t = peek();
        if (t.kind == Tok::Name && (t.text == "forall" || t.text == "exists" ||
                                    t.text == "forall2" || t.text == "exists2"))
            return quantifier();
        return atom();
    }

    FormulaPtr quantifier() {
        const Token &kw = advance();
        bool universal = kw.text == "forall" || kw.text == "forall2";
        bool explicit_form = kw.text == "forall2" || kw.text == "exists2";
        const Token &nm = peek();
        if (nm.kind != Tok::Name) fail(nm.pos, "expected a variable after " + kw.text);
        advance();

        bool object_binder;
        int preset_arity = 0;
        if (explicit_form) {
            if (!is_relation_var_name(nm.text))
                fail(nm.pos, "invalid relation variable " + nm.text);
            object_binder = false;
            if (accept(Tok::Colon)) {
                const Token &ar = peek();
                if (ar.kind != Tok::Number || ar.text == "0" || ar.text.size() > 3)
                    fail(ar.pos, "expected a positive arity");
                advance();
                preset_arity = std::stoi(ar.text);
            }
        } else if (is_object_var_name(nm.text)) {
            object_binder = true;
        } else if (is_plain_relation_name(nm.text)) {
            object_binder = false;
        } else {
            fail(nm.pos, "invalid variable " + nm.text);
        }
        expect(Tok::Dot, "'.' after binder");

        scopes.push_back({nm.text, object_binder, std::make_shared<int>(preset_arity)});
        FormulaPtr body = formula();
        Binder bound = scopes.back();
        scopes.pop_back();

        if (object_binder)
            return universal ? f_forall_obj(nm.text, body) : f_exists_obj(nm.text, body);
        int arity = *bound.arity == 0 ? 1 : *bound.arity;
        return universal ? f_forall_rel(nm.text, arity, body)
                         : f_exists_rel(nm.text, arity, body);
    }

    FormulaPtr atom() {
        const Token &t = peek();
        if (t.kind == Tok::LParen) return paren_atom();
        if (t.kind == Tok::Name) {
            if (t.text == "card") {
                advance();
                expect(Tok::LParen, "'(' after card");
                TermPtr set = set_term();
                expect(Tok::Comma, "','");
                TermPtr obj = term();
                expect(Tok::RParen, "')'");
                return f_card(set, obj);
            }
            if (t.text == "infinite") {
                advance();
                expect(Tok::LParen, "'(' after infinite");
                TermPtr set = set_term();
                expect(Tok::RParen, "')'");
                return f_infinite(set);
            }
            if (t.text == "bijection") return bijection_macro();
            // Relation application R(t1, ..., tk): the name must denote a
            // relation and be followed by '('.
            if (!is_reserved_word(t.text) && peek(1).kind == Tok::LParen &&
                looks_like_relation(t.text))
                return application();
        }
        return relational_atom();
    }

    bool looks_like_relation(const std::string &name) const {
        int index = 0;
        if (const Binder *b = lookup(name, index)) return !b->is_object;
        if (decls.count(name)) return true;
        return is_plain_relation_name(name);
    }

    FormulaPtr application() {
        const Token &nm = advance();
        expect(Tok::LParen, "'('");
        std::vector<TermPtr> args;
        args.push_back(term());
        while (accept(Tok::Comma)) args.push_back(term());
        expect(Tok::RParen, "')'");
        int arity = static_cast<int>(args.size());

        int index = 0;
        TermPtr rel;
        if (const Binder *b = lookup(nm.text, index)) {
            demand_arity(*b, arity);
            rel = t_bound_rel(index);
        } else {
            auto decl = decls.find(nm.text);
            if (decl != decls.end() && decl->second != arity)
                throw Error("arity_mismatch", "relation variable " + nm.text +
                                                  " applied to " + std::to_string(arity) +
                                                  " arguments but declared with arity " +
                                                  std::to_string(decl->second));
            rel = t_free_rel(nm.text, arity);
        }
        return f_member(std::move(args), rel);
    }

    FormulaPtr relational_atom() {
        TermPtr lhs = term();
        if (accept_word("in")) return f_member({lhs}, set_term());
        if (accept(Tok::Equal)) return f_equal(lhs, term());
        if (accept(Tok::Leq)) return f_leq(lhs, term());
        fail(peek().pos, "expected 'in', '=' or '<='");
    }

    // '(' starts either a parenthesized formula or a parenthesized term; try
    // the formula reading first and fall back, reporting the deeper error.
    FormulaPtr paren_atom() {
        size_t saved = pos;
        std::string formula_message;
        size_t formula_reach = 0;
        try {
            expect(Tok::LParen, "'('");
            FormulaPtr inner = formula();
            expect(Tok::RParen, "')'");
            return inner;
        } catch (const Error &e) {
            if (std::string(e.code()) != "parse_error") throw;
            formula_message = e.what();
            formula_reach = peek().pos;
            pos = saved;
        }
        try {
            return relational_atom();
        } catch (const Error &e) {
            if (std::string(e.code()) != "parse_error") throw;
            if (peek().pos >= formula_reach) throw;
            throw Error("parse_error", formula_message);
        }
    }

    FormulaPtr bijection_macro() {
        advance();
        expect(Tok::LParen, "'(' after bijection");
        TermPtr f = relation_ref(2);
        expect(Tok::Comma, "','");
        TermPtr x = set_term();
        expect(Tok::Comma, "','");
        TermPtr y = set_term();
        expect(Tok::RParen, "')'");
        return bijection_formula(f, x, y);
    }

    FormulaPtr parse() {
        while (peek().kind == Tok::Name && peek().text == "rel") {
            advance();
            const Token &nm = peek();
            if (nm.kind != Tok::Name || !is_relation_var_name(nm.text))
                fail(nm.pos, "expected a relation variable after rel");
            advance();
            expect(Tok::Colon, "':' in rel declaration");
            const Token &ar = peek();
            if (ar.kind != Tok::Number || ar.text == "0" || ar.text.size() > 3)
                fail(ar.pos, "expected a positive arity");
            advance();
            expect(Tok::Dot, "'.' after rel declaration");
            if (!decls.emplace(nm.text, std::stoi(ar.text)).second)
                fail(nm.pos, "duplicate declaration of " + nm.text);
        }
        FormulaPtr f = formula();
        if (peek().kind != Tok::End) fail(peek().pos, "unexpected trailing input");
        return f;
    }
};

} // namespace

FormulaPtr parse_formula(const std::string &text) {
    Parser p{lex(text), 0, {}, {}};
    FormulaPtr f = p.parse();
    // Re-walk the result so cross-occurrence arity clashes of free relation
    // variables surface as arity_mismatch.
    free_relation_vars(f);
    return f;
}

} // namespace sol
