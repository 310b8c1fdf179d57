#pragma once

#include "sol/algreal.hpp"
#include "sol/poly.hpp"

#include <optional>

namespace sol {

// Certificate that a polynomial map is not injective: two distinct algebraic
// points with the same image `value`. Both points are roots of `defining`,
// which divides p - value. Root indices follow a fixed ordering: real roots
// ascending first, then non-real roots grouped in conjugate pairs. When the
// collision is real the two isolated roots are included; a non-real collision
// is carried purely symbolically by the shared defining polynomial.
struct CollisionWitness {
    Poly defining;
    Rat value;
    int index_a = 0;
    int index_b = 0;
    std::optional<AlgReal> real_a;
    std::optional<AlgReal> real_b;
};

// None iff deg p = 1 (a degree-one map is injective); otherwise finds a value
// c avoiding the critical values so that p - c is squarefree of degree >= 2,
// and returns two of its distinct roots. Errors on constant polynomials.
std::optional<CollisionWitness> collision_witness(const Poly &p);

// Symbolic verification: defining is squarefree of degree >= 2 and divides
// p - value exactly, the resultant of the two vanishes, the indices name two
// distinct roots, and any included real roots are distinct and map to value.
bool verify_collision(const Poly &p, const CollisionWitness &w);

} // namespace sol
