#include "sol/collision.hpp"

#include "sol/error.hpp"

namespace sol {

namespace {

bool is_squarefree(const Poly &p) { return poly_gcd(p, p.derivative()).degree() == 0; }

} // namespace

std::optional<CollisionWitness> collision_witness(const Poly &p) {
    if (p.is_zero() || p.degree() == 0)
        throw Error("constant_polynomial", "collision search needs a nonconstant polynomial");
    if (p.degree() == 1) return std::nullopt;

    // p - c is non-squarefree only when c is one of the <= deg-1 critical
    // values, so some c in {0, ..., deg} works.
    Poly shifted;
    Rat value;
    for (int c = 0;; ++c) {
        if (c > p.degree())
            throw Error("internal_error", "no squarefree shift found below the degree bound");
        value = Rat(c);
        shifted = p - Poly::constant(value);
        if (is_squarefree(shifted)) break;
    }

    CollisionWitness w;
    w.defining = shifted.monic();
    w.value = value;
    int real_count = count_real_roots(w.defining);
    if (real_count >= 2) {
        std::vector<AlgReal> roots = real_roots(w.defining);
        w.index_a = 0;
        w.index_b = 1;
        w.real_a = roots[0];
        w.real_b = roots[1];
    } else {
        // Fewer than two real roots but degree >= 2: a conjugate pair exists,
        // listed right after the real roots in the fixed ordering.
        w.index_a = real_count;
        w.index_b = real_count + 1;
    }
    return w;
}

bool verify_collision(const Poly &p, const CollisionWitness &w) {
    if (p.is_zero() || p.degree() < 2) return false;
    if (w.defining.degree() < 2 || !is_squarefree(w.defining)) return false;
    if (w.index_a == w.index_b) return false;
    if (w.index_a < 0 || w.index_b < 0) return false;
    if (w.index_a >= w.defining.degree() || w.index_b >= w.defining.degree()) return false;

    Poly shifted = p - Poly::constant(w.value);
    if (!divmod(shifted, w.defining).remainder.is_zero()) return false;
    if (resultant(w.defining, shifted) != 0) return false;

    if (w.real_a.has_value() != w.real_b.has_value()) return false;
    if (w.real_a) {
        if (compare(*w.real_a, *w.real_b) == 0) return false;
        if (sign_at(shifted, *w.real_a) != 0) return false;
        if (sign_at(shifted, *w.real_b) != 0) return false;
    } else {
        // Symbolic conjugate pair: the indices must land beyond the real roots.
        int real_count = count_real_roots(w.defining);
        if (w.index_a < real_count || w.index_b < real_count) return false;
    }
    return true;
}

} // namespace sol
