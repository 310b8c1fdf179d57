#include "sol/algreal.hpp"

#include "sol/error.hpp"

#include <sstream>

namespace sol {

namespace {

void spend(int &budget, const char *what) {
    if (--budget < 0) throw Error("iteration_cap", std::string("iteration cap exceeded in ") + what);
}

} // namespace

AlgReal::AlgReal(Poly defining, Rat lo, Rat hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (defining_.is_zero() || defining_.degree() == 0)
        throw Error("invalid_algebraic", "defining polynomial must be nonconstant");
    if (poly_gcd(defining_, defining_.derivative()).degree() != 0)
        throw Error("invalid_algebraic", "defining polynomial must be squarefree");
    defining_ = defining_.monic();
    if (count_roots_in(defining_, lo_, hi_) != 1)
        throw Error("invalid_algebraic", "interval must isolate exactly one root");
}

AlgReal AlgReal::from_rational(const Rat &r) {
    return AlgReal(Poly({-r, Rat(1)}), r - 1, r);
}

void AlgReal::refine() {
    Rat mid = (lo_ + hi_) / 2;
    if (count_roots_in(defining_, lo_, mid) == 1)
        hi_ = mid;
    else
        lo_ = mid;
}

void AlgReal::refine_below(const Rat &width, int iteration_cap) {
    int budget = iteration_cap;
    while (this->width() >= width) {
        spend(budget, "interval refinement");
        refine();
    }
}

double AlgReal::approx() const {
    AlgReal copy = *this;
    copy.refine_below(Rat(1, Int(1) << 40));
    Rat mid = (copy.lo_ + copy.hi_) / 2;
    return mid.convert_to<double>();
}

std::string AlgReal::to_string() const {
    std::ostringstream out;
    out << "root of " << poly_to_string(defining_) << " in (" << rational_to_string(lo_) << ", "
        << rational_to_string(hi_) << "]";
    return out.str();
}

int compare(const AlgReal &a, const AlgReal &b, int iteration_cap) {
    AlgReal x = a, y = b;
    Poly common = poly_gcd(x.defining(), y.defining());
    bool may_be_equal = common.degree() > 0;
    int budget = iteration_cap;
    while (true) {
        if (x.hi() <= y.lo()) return -1;
        if (y.hi() <= x.lo()) return 1;
        if (may_be_equal) {
            Rat jlo = std::max(x.lo(), y.lo());
            Rat jhi = std::min(x.hi(), y.hi());
            if (jlo < jhi && count_roots_in(x.defining(), jlo, jhi) == 1 &&
                count_roots_in(y.defining(), jlo, jhi) == 1 && count_roots_in(common, jlo, jhi) >= 1)
                return 0;
        }
        spend(budget, "algebraic comparison");
        x.refine();
        y.refine();
    }
}

int sign_at(const Poly &r, const AlgReal &a, int iteration_cap) {
    if (r.is_zero()) return 0;
    if (r.degree() == 0) return sgn(r.coeff(0));
    Poly common = poly_gcd(r, a.defining());
    if (common.degree() > 0 && count_roots_in(common, a.lo(), a.hi()) >= 1) return 0;
    AlgReal x = a;
    int budget = iteration_cap;
    while (count_roots_in(r, x.lo(), x.hi()) != 0) {
        spend(budget, "sign evaluation");
        x.refine();
    }
    return r.sign_at(x.hi());
}

Rat rational_between(const AlgReal &a, const AlgReal &b, int iteration_cap) {
    if (compare(a, b, iteration_cap) >= 0)
        throw Error("invalid_interval", "rational_between needs a < b");
    AlgReal x = a, y = b;
    int budget = iteration_cap;
    while (!(x.hi() < y.lo())) {
        spend(budget, "midpoint search");
        x.refine();
        y.refine();
    }
    return (x.hi() + y.lo()) / 2;
}

std::vector<AlgReal> real_roots(const Poly &p, int iteration_cap) {
    if (p.is_zero()) throw Error("zero_polynomial", "root isolation for the zero polynomial");
    Poly q = squarefree_part(p);
    std::vector<AlgReal> roots;
    if (q.degree() == 0) return roots;
    Rat bound = cauchy_bound(q);
    int budget = iteration_cap;
    // Bisection queue over half-open intervals; q squarefree guarantees the
    // counts eventually separate.
    struct Segment {
        Rat lo, hi;
    };
    std::vector<Segment> stack;
    stack.push_back({-bound, bound});
    std::vector<Segment> isolated;
    while (!stack.empty()) {
        spend(budget, "root isolation");
        Segment seg = stack.back();
        stack.pop_back();
        int count = count_roots_in(q, seg.lo, seg.hi);
        if (count == 0) continue;
        if (count == 1) {
            isolated.push_back(seg);
            continue;
        }
        Rat mid = (seg.lo + seg.hi) / 2;
        stack.push_back({mid, seg.hi});
        stack.push_back({seg.lo, mid});
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const Segment &s, const Segment &t) { return s.lo < t.lo; });
    for (const Segment &seg : isolated) roots.emplace_back(q, seg.lo, seg.hi);
    return roots;
}

} // namespace sol
