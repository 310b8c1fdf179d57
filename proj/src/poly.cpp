#include "sol/poly.hpp"

#include "sol/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sol {

Rat parse_rational(const std::string &text) {
    size_t i = 0, n = text.size();
    auto fail = [&] { throw Error("parse_error", "malformed rational: '" + text + "'"); };
    if (n == 0) fail();
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    size_t num_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) fail();
    Int num(text.substr(num_start, i - num_start));
    Int den = 1;
    if (i < n) {
        if (text[i] != '/') fail();
        ++i;
        size_t den_start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != n) fail();
        den = Int(text.substr(den_start));
        if (den == 0) throw Error("parse_error", "zero denominator: '" + text + "'");
    }
    Rat r(num, den);
    return neg ? -r : r;
}

std::string rational_to_string(const Rat &r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Rat &c) {
    if (c == 0) return Poly();
    return Poly({c});
}

Poly Poly::variable() { return Poly({Rat(0), Rat(1)}); }

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat &Poly::leading() const {
    if (c_.empty()) throw Error("zero_polynomial", "zero polynomial has no leading coefficient");
    return c_.back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(i)];
}

Rat Poly::eval(const Rat &x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    std::vector<Rat> out(c_);
    for (auto &v : out) v = -v;
    return Poly(std::move(out));
}

Poly Poly::operator+(const Poly &o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly &o) const { return *this + (-o); }

Poly Poly::operator*(const Poly &o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rat &k) const {
    std::vector<Rat> out(c_);
    for (auto &v : out) v *= k;
    return Poly(std::move(out));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (c_.empty()) throw Error("zero_polynomial", "cannot normalize the zero polynomial");
    return scaled(Rat(1) / leading());
}

PolyDivMod divmod(const Poly &num, const Poly &den) {
    if (den.is_zero()) throw Error("division_by_zero", "polynomial division by zero");
    std::vector<Rat> rem(num.coeffs());
    int dd = den.degree();
    if (num.degree() < dd) return {Poly(), num};
    std::vector<Rat> quot(static_cast<size_t>(num.degree() - dd + 1), Rat(0));
    const Rat &lead = den.leading();
    for (int k = num.degree() - dd; k >= 0; --k) {
        Rat factor = rem[static_cast<size_t>(k + dd)] / lead;
        quot[static_cast<size_t>(k)] = factor;
        if (factor == 0) continue;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(k + i)] -= factor * den.coeff(i);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly &a, const Poly &b) {
    if (a.is_zero() && b.is_zero())
        throw Error("zero_polynomial", "gcd of two zero polynomials is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).remainder;
        x = y;
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

Poly squarefree_part(const Poly &p) {
    if (p.is_zero()) throw Error("zero_polynomial", "squarefree part of the zero polynomial");
    if (p.degree() == 0) return Poly::constant(1);
    Poly g = poly_gcd(p, p.derivative());
    return divmod(p, g).quotient.monic();
}

Rat cauchy_bound(const Poly &p) {
    if (p.is_zero() || p.degree() == 0)
        throw Error("constant_polynomial", "root bound needs a nonconstant polynomial");
    Rat maxratio = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = abs(p.coeff(i) / p.leading());
        if (r > maxratio) maxratio = r;
    }
    return maxratio + 1;
}

std::vector<Poly> sturm_sequence(const Poly &p) {
    if (p.is_zero()) throw Error("zero_polynomial", "Sturm sequence of the zero polynomial");
    std::vector<Poly> seq;
    seq.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        const Poly &a = seq[seq.size() - 2];
        const Poly &b = seq.back();
        Poly r = divmod(a, b).remainder;
        if (r.is_zero()) break;
        // Scale to leading coefficient +-1; positive scaling keeps every sign.
        seq.push_back((-r).scaled(Rat(1) / abs(r.leading())));
    }
    return seq;
}

int sign_variations_at(const std::vector<Poly> &seq, const Rat &x) {
    int variations = 0;
    int prev = 0;
    for (const Poly &q : seq) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int count_roots_in(const Poly &p, const Rat &lo, const Rat &hi) {
    if (p.is_zero()) throw Error("zero_polynomial", "root counting for the zero polynomial");
    if (!(lo < hi)) throw Error("invalid_interval", "root counting needs lo < hi");
    Poly q = squarefree_part(p);
    if (q.degree() == 0) return 0;
    std::vector<Poly> seq = sturm_sequence(q);
    return sign_variations_at(seq, lo) - sign_variations_at(seq, hi);
}

int count_real_roots(const Poly &p) {
    if (p.is_zero()) throw Error("zero_polynomial", "root counting for the zero polynomial");
    Poly q = squarefree_part(p);
    if (q.degree() == 0) return 0;
    Rat bound = cauchy_bound(q);
    return count_roots_in(q, -bound, bound);
}

int distinct_root_count(const Poly &p) { return squarefree_part(p).degree(); }

namespace {
Rat rat_pow(const Rat &base, int e) {
    Rat r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}
} // namespace

Rat resultant(const Poly &p, const Poly &q) {
    if (p.is_zero() || q.is_zero())
        throw Error("zero_polynomial", "resultant of the zero polynomial");
    int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0) return Rat(1);
    if (m == 0) return rat_pow(p.coeff(0), n);
    if (n == 0) return rat_pow(q.coeff(0), m);
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<Rat>> s(dim, std::vector<Rat>(dim, Rat(0)));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = p.coeff(m - i);
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) s[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = q.coeff(n - i);
    // Exact Gaussian elimination; determinant is the product of pivots.
    Rat det = 1;
    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        while (pivot < dim && s[pivot][col] == 0) ++pivot;
        if (pivot == dim) return Rat(0);
        if (pivot != col) {
            std::swap(s[pivot], s[col]);
            det = -det;
        }
        det *= s[col][col];
        for (size_t row = col + 1; row < dim; ++row) {
            if (s[row][col] == 0) continue;
            Rat factor = s[row][col] / s[col][col];
            for (size_t k = col; k < dim; ++k) s[row][k] -= factor * s[col][k];
        }
    }
    return det;
}

namespace {

std::string term_to_string(const Rat &coeff, int deg) {
    Rat mag = abs(coeff);
    std::string body;
    if (deg == 0) {
        body = rational_to_string(mag);
    } else {
        if (mag != 1) body = rational_to_string(mag) + "*";
        body += "x";
        if (deg != 1) body += "^" + std::to_string(deg);
    }
    return body;
}

struct PolyLexer {
    const std::string &text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_space();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw Error("parse_error", "expected a number at position " + std::to_string(start) +
                                           " in '" + text + "'");
        return Int(text.substr(start, pos - start));
    }
};

} // namespace

std::string poly_to_string(const Poly &p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        Rat c = p.coeff(d);
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += term_to_string(c, d);
    }
    return out;
}

Poly parse_poly(const std::string &text) {
    PolyLexer lex{text};
    std::vector<Rat> coeffs;
    auto add_term = [&](const Rat &c, const Int &deg) {
        if (deg < 0 || deg > 1000) throw Error("parse_error", "unsupported exponent in '" + text + "'");
        size_t d = static_cast<size_t>(deg);
        if (coeffs.size() <= d) coeffs.resize(d + 1, Rat(0));
        coeffs[d] += c;
    };
    bool first = true;
    while (!lex.done()) {
        int sign = 1;
        if (lex.accept('-')) sign = -1;
        else if (lex.accept('+')) sign = 1;
        else if (!first)
            throw Error("parse_error", "expected '+' or '-' at position " + std::to_string(lex.pos) +
                                           " in '" + text + "'");
        first = false;
        Rat coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            Int num = lex.integer();
            Int den = 1;
            if (lex.accept('/')) {
                den = lex.integer();
                if (den == 0) throw Error("parse_error", "zero denominator in '" + text + "'");
            }
            coeff = Rat(num, den);
            saw_coeff = true;
        }
        bool saw_var = false;
        Int deg = 0;
        if (saw_coeff) lex.accept('*');
        if (lex.accept('x')) {
            saw_var = true;
            deg = 1;
            if (lex.accept('^')) deg = lex.integer();
        }
        if (!saw_coeff && !saw_var)
            throw Error("parse_error", "expected a term at position " + std::to_string(lex.pos) +
                                           " in '" + text + "'");
        add_term(sign < 0 ? -coeff : coeff, deg);
    }
    if (first) throw Error("parse_error", "empty polynomial text");
    return Poly(std::move(coeffs));
}

} // namespace sol
