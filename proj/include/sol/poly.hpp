#pragma once

#include "sol/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sol {

// Univariate polynomial with exact rational coefficients.
// coeffs[i] is the coefficient of x^i; the vector never has a trailing zero,
// and the zero polynomial is the empty vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat &c);
    static Poly variable(); // x

    const std::vector<Rat> &coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat &leading() const;
    Rat coeff(int i) const;

    Rat eval(const Rat &x) const;
    int sign_at(const Rat &x) const { return sgn(eval(x)); }

    Poly operator-() const;
    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    Poly scaled(const Rat &k) const;
    bool operator==(const Poly &o) const { return c_ == o.c_; }

    Poly derivative() const;
    Poly monic() const; // error on the zero polynomial

  private:
    std::vector<Rat> c_;
    void normalize();
};

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

// Exact division with remainder; errors when the divisor is zero.
PolyDivMod divmod(const Poly &num, const Poly &den);

// Monic greatest common divisor by the Euclidean algorithm.
// gcd(0, 0) errors; gcd(p, 0) is monic(p).
Poly poly_gcd(const Poly &a, const Poly &b);

// Monic product of the distinct irreducible factors: p / gcd(p, p').
// Errors on the zero polynomial.
Poly squarefree_part(const Poly &p);

// B > 0 such that every real root of p lies in (-B, B]. Errors on constants.
Rat cauchy_bound(const Poly &p);

// Sturm sequence of p (canonical: p, p', then negated remainders).
std::vector<Poly> sturm_sequence(const Poly &p);

// Sign variations of the sequence evaluated at x.
int sign_variations_at(const std::vector<Poly> &seq, const Rat &x);

// Number of distinct real roots of p in the half-open interval (lo, hi].
// Requires lo < hi; errors on the zero polynomial.
int count_roots_in(const Poly &p, const Rat &lo, const Rat &hi);

// Number of distinct real roots of p over all of R.
int count_real_roots(const Poly &p);

// Number of distinct complex roots: degree of the squarefree part.
int distinct_root_count(const Poly &p);

// Resultant via the Sylvester matrix and fraction-free elimination.
// Res of two constants is 1 by convention; Res(p, c) = c^deg(p).
Rat resultant(const Poly &p, const Poly &q);

// Text format: terms like "x^3 - 2*x + 1/2", highest degree first.
std::string poly_to_string(const Poly &p);
Poly parse_poly(const std::string &text);

} // namespace sol
