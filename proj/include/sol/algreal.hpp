#pragma once

#include "sol/poly.hpp"

#include <vector>

namespace sol {

inline constexpr int kDefaultIterationCap = 100000;

// A real algebraic number: a squarefree monic defining polynomial together
// with a rational interval (lo, hi] containing exactly one of its real roots.
// All comparisons are decided exactly by interval refinement plus Sturm
// counts; no floating point is involved.
class AlgReal {
  public:
    AlgReal(Poly defining, Rat lo, Rat hi);
    static AlgReal from_rational(const Rat &r);

    const Poly &defining() const { return defining_; }
    const Rat &lo() const { return lo_; }
    const Rat &hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }

    // Halves the isolating interval, keeping the root.
    void refine();
    void refine_below(const Rat &width, int iteration_cap = kDefaultIterationCap);

    // Decimal approximation for display only; never used in decisions.
    double approx() const;

    std::string to_string() const;

  private:
    Poly defining_;
    Rat lo_, hi_;
};

// Total order: -1, 0, +1 as a <, =, > b, decided exactly.
int compare(const AlgReal &a, const AlgReal &b, int iteration_cap = kDefaultIterationCap);

inline bool operator==(const AlgReal &a, const AlgReal &b) { return compare(a, b) == 0; }
inline bool operator<(const AlgReal &a, const AlgReal &b) { return compare(a, b) < 0; }
inline bool operator<=(const AlgReal &a, const AlgReal &b) { return compare(a, b) <= 0; }

// Exact sign of r evaluated at the algebraic point a.
int sign_at(const Poly &r, const AlgReal &a, int iteration_cap = kDefaultIterationCap);

// A rational number strictly between a and b; requires a < b.
Rat rational_between(const AlgReal &a, const AlgReal &b, int iteration_cap = kDefaultIterationCap);

// All real roots of p, each isolated, sorted ascending. Errors on the zero
// polynomial.
std::vector<AlgReal> real_roots(const Poly &p, int iteration_cap = kDefaultIterationCap);

} // namespace sol
