#include "sol/rcf.hpp"

#include "sol/error.hpp"
#include "sol/pairing.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <utility>

namespace sol {

namespace {

[[noreturn]] void internal_error(const std::string &message) {
    throw Error("internal_error", message);
}

// Rational value of an algebraic number whose defining polynomial is linear
// (monic x + c has the root -c). Rational roots can also hide under a
// higher-degree squarefree defining polynomial; those are simply not
// recognized here and take the bracketed path instead.
std::optional<Rat> exact_rational(const AlgReal &a) {
    if (a.defining().degree() != 1) return std::nullopt;
    return -a.defining().coeff(0);
}

Int rat_floor(const Rat &r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

bool opt_equal(const std::optional<AlgReal> &a, const std::optional<AlgReal> &b) {
    if (a.has_value() != b.has_value()) return false;
    return !a.has_value() || *a == *b;
}

// --- Region sweep ------------------------------------------------------------
//
// All set construction goes through one device: collect the finite endpoints
// involved, and read the line as the alternating partition
//   (-oo,a1), {a1}, (a1,a2), ..., {ak}, (ak,+oo)
// indexed 0..2k, even indices the open intervals. Boolean structure and sign
// data are decided per region, and marked regions are merged back into
// canonical cells.

struct Regions {
    std::vector<AlgReal> breaks;

    int count() const { return 2 * static_cast<int>(breaks.size()) + 1; }
    bool is_point(int r) const { return r % 2 == 1; }
    const AlgReal &point(int r) const { return breaks[static_cast<std::size_t>(r - 1) / 2]; }
    std::optional<AlgReal> lo(int r) const {
        if (r == 0) return std::nullopt;
        return breaks[static_cast<std::size_t>(r) / 2 - 1];
    }
    std::optional<AlgReal> hi(int r) const {
        if (r == count() - 1) return std::nullopt;
        return breaks[static_cast<std::size_t>(r) / 2];
    }
};

std::vector<AlgReal> sort_unique(std::vector<AlgReal> values) {
    std::sort(values.begin(), values.end(),
              [](const AlgReal &a, const AlgReal &b) { return compare(a, b) < 0; });
    std::vector<AlgReal> out;
    for (const AlgReal &a : values) {
        if (out.empty() || compare(out.back(), a) != 0) out.push_back(a);
    }
    return out;
}

void add_endpoints(const std::vector<Cell1> &cells, std::vector<AlgReal> &out) {
    for (const Cell1 &c : cells) {
        if (c.kind == Cell1::Kind::Point) {
            out.push_back(*c.lo);
        } else {
            if (c.lo) out.push_back(*c.lo);
            if (c.hi) out.push_back(*c.hi);
        }
    }
}

// Whether one cell covers a whole region. Correct only when every finite
// endpoint of the cell is among the breakpoints, which the callers arrange.
bool cell_covers(const Cell1 &cell, const Regions &regs, int r) {
    if (regs.is_point(r)) {
        const AlgReal &p = regs.point(r);
        if (cell.kind == Cell1::Kind::Point) return *cell.lo == p;
        return (!cell.lo || *cell.lo < p) && (!cell.hi || p < *cell.hi);
    }
    if (cell.kind == Cell1::Kind::Point) return false;
    std::optional<AlgReal> u = regs.lo(r);
    std::optional<AlgReal> v = regs.hi(r);
    bool lo_ok = !cell.lo || (u.has_value() && !(*u < *cell.lo));
    bool hi_ok = !cell.hi || (v.has_value() && !(*cell.hi < *v));
    return lo_ok && hi_ok;
}

bool set_covers(const std::vector<Cell1> &cells, const Regions &regs, int r) {
    return std::any_of(cells.begin(), cells.end(),
                       [&](const Cell1 &c) { return cell_covers(c, regs, r); });
}

// Merges a run of marked regions into canonical cells: interior breakpoints
// disappear, a closed end becomes a separate point cell next to the merged
// open interval.
std::vector<Cell1> merge_marks(const Regions &regs, const std::vector<bool> &marks) {
    std::vector<Cell1> out;
    int n = regs.count();
    int r = 0;
    while (r < n) {
        if (!marks[static_cast<std::size_t>(r)]) {
            ++r;
            continue;
        }
        int start = r;
        while (r < n && marks[static_cast<std::size_t>(r)]) ++r;
        int end = r - 1;
        if (start == end && regs.is_point(start)) {
            out.push_back(Cell1::point(regs.point(start)));
            continue;
        }
        std::optional<AlgReal> left;
        if (regs.is_point(start)) {
            out.push_back(Cell1::point(regs.point(start)));
            left = regs.point(start);
        } else {
            left = regs.lo(start);
        }
        bool closed_right = regs.is_point(end);
        std::optional<AlgReal> right = closed_right ? std::optional<AlgReal>(regs.point(end))
                                                    : regs.hi(end);
        out.push_back(Cell1::interval(std::move(left), right));
        if (closed_right) out.push_back(Cell1::point(regs.point(end)));
    }
    return out;
}

int sign_target(SignKind sign) {
    switch (sign) {
    case SignKind::Negative: return -1;
    case SignKind::Zero: return 0;
    case SignKind::Positive: return 1;
    }
    internal_error("unhandled sign kind");
}

// A rational point strictly inside an open region. The first breakpoint's
// isolating interval starts strictly below its root, so its lower bound works
// for the leftmost region; symmetrically the last upper bound plus one works
// on the right.
Rat region_sample(const Regions &regs, int r) {
    if (regs.breaks.empty()) return Rat(0);
    if (r == 0) return regs.breaks.front().lo();
    if (r == regs.count() - 1) return regs.breaks.back().hi() + 1;
    std::size_t i = static_cast<std::size_t>(r) / 2;
    return rational_between(regs.breaks[i - 1], regs.breaks[i]);
}

// --- Bijection support -------------------------------------------------------

std::size_t count_points(const std::vector<Cell1> &cells) {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const Cell1 &c) {
        return c.kind == Cell1::Kind::Point;
    }));
}

// A rational strictly inside an interval cell, preferring integers (and small
// denominators) so split points stay readable.
Rat split_point(const Cell1 &cell) {
    if (!cell.lo && !cell.hi) return Rat(0);
    if (!cell.lo) {
        if (std::optional<Rat> r = exact_rational(*cell.hi)) return Rat(-rat_floor(-*r) - 1);
        return cell.hi->lo();
    }
    if (!cell.hi) {
        if (std::optional<Rat> r = exact_rational(*cell.lo)) return Rat(rat_floor(*r) + 1);
        return cell.lo->hi() + 1;
    }
    std::optional<Rat> a = exact_rational(*cell.lo);
    std::optional<Rat> b = exact_rational(*cell.hi);
    if (a && b) {
        Rat candidate(rat_floor(*a) + 1);
        if (candidate < *b) return candidate;
        return (*a + *b) / 2;
    }
    return rational_between(*cell.lo, *cell.hi);
}

// Splits the first interval of the list into interval-point-interval, the
// inverse of the canonical merge; preserves the union and the sort order.
void split_first_interval(std::vector<Cell1> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].kind != Cell1::Kind::Interval) continue;
        Cell1 cell = cells[i];
        AlgReal q = AlgReal::from_rational(split_point(cell));
        std::vector<Cell1> pieces = {Cell1::interval(cell.lo, q), Cell1::point(q),
                                     Cell1::interval(q, cell.hi)};
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
        return;
    }
    internal_error("no interval available to split");
}

// --- Rational interval arithmetic for piece evaluation -----------------------
//
// Piece maps are evaluated through brackets: each algebraic endpoint is
// replaced by a closed rational interval around it, and the chart formulas
// are propagated with outward rounding. Rational endpoints give zero-width
// brackets, so those pieces evaluate exactly.

RatInterval riv_const(const Rat &q) { return {q, q}; }

RatInterval riv_add(const RatInterval &a, const RatInterval &b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval riv_sub(const RatInterval &a, const RatInterval &b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval riv_mul(const RatInterval &a, const RatInterval &b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

// Division with a sign-definite denominator; nullopt asks the caller for
// tighter input brackets.
std::optional<RatInterval> riv_div(const RatInterval &a, const RatInterval &b) {
    if (!(b.lo > 0) && !(b.hi < 0)) return std::nullopt;
    Rat q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    return RatInterval{std::min(std::min(q1, q2), std::min(q3, q4)),
                       std::max(std::max(q1, q2), std::max(q3, q4))};
}

// Chart of an interval cell onto (0,1): affine for bounded cells, reciprocal
// on unbounded sides, fixed once so source chart and inverse target chart
// compose to the piece map. All four charts are strictly increasing.
std::optional<RatInterval> chart_value(const Cell1 &cell, const Rat &t,
                                       const std::optional<RatInterval> &lo_br,
                                       const std::optional<RatInterval> &hi_br) {
    if (!cell.lo && !cell.hi) {
        Rat abs_t = t < 0 ? Rat(-t) : t;
        Rat u = (1 + t / (1 + abs_t)) / 2;
        return riv_const(u);
    }
    if (!cell.lo) { // (-oo, b): u = 1/(1 + b - t), increasing in t
        RatInterval s = riv_sub(*hi_br, riv_const(t));
        if (!(s.lo > 0)) return std::nullopt;
        return RatInterval{1 / (1 + s.hi), 1 / (1 + s.lo)};
    }
    if (!cell.hi) { // (a, oo): u = (t - a)/(1 + t - a)
        RatInterval s = riv_sub(riv_const(t), *lo_br);
        if (!(s.lo > 0)) return std::nullopt;
        return RatInterval{s.lo / (1 + s.lo), s.hi / (1 + s.hi)};
    }
    RatInterval num = riv_sub(riv_const(t), *lo_br);
    RatInterval den = riv_sub(*hi_br, *lo_br);
    return riv_div(num, den);
}

// Inverse chart: carries u in (0,1) into the target cell.
std::optional<RatInterval> unchart_value(const Cell1 &cell, const RatInterval &u,
                                         const std::optional<RatInterval> &lo_br,
                                         const std::optional<RatInterval> &hi_br) {
    if (!cell.lo && !cell.hi) { // v/(1-|v|) over v = 2u-1, increasing
        RatInterval v{2 * u.lo - 1, 2 * u.hi - 1};
        if (!(v.lo > -1) || !(v.hi < 1)) return std::nullopt;
        // the explicit return type materializes the expression template before
        // its operands go out of scope
        auto stretch = [](const Rat &x) -> Rat {
            Rat ax = x < 0 ? Rat(-x) : x;
            return x / (1 - ax);
        };
        return RatInterval{stretch(v.lo), stretch(v.hi)};
    }
    if (!cell.lo) { // (-oo, d): image = d + 1 - 1/u, increasing in u
        if (!(u.lo > 0)) return std::nullopt;
        return RatInterval{hi_br->lo + 1 - 1 / u.lo, hi_br->hi + 1 - 1 / u.hi};
    }
    if (!cell.hi) { // (c, oo): image = c + u/(1-u)
        if (!(u.hi < 1)) return std::nullopt;
        RatInterval q{u.lo / (1 - u.lo), u.hi / (1 - u.hi)};
        return riv_add(*lo_br, q);
    }
    RatInterval span = riv_sub(*hi_br, *lo_br);
    return riv_add(*lo_br, riv_mul(u, span));
}

// Closed rational bracket around an algebraic number, width at most tol
// (width zero for rational values).
RatInterval bracket_of(const AlgReal &a, const Rat &tol) {
    if (std::optional<Rat> r = exact_rational(a)) return riv_const(*r);
    AlgReal copy = a;
    copy.refine_below(tol);
    return {copy.lo(), copy.hi()};
}

} // namespace

// --- Cells and sets ----------------------------------------------------------

Cell1 Cell1::point(AlgReal at) {
    Cell1 c;
    c.kind = Kind::Point;
    c.lo = std::move(at);
    return c;
}

Cell1 Cell1::interval(std::optional<AlgReal> lo, std::optional<AlgReal> hi) {
    if (lo && hi && !(*lo < *hi)) {
        throw Error("invalid_cell", "interval endpoints must satisfy lo < hi");
    }
    Cell1 c;
    c.kind = Kind::Interval;
    c.lo = std::move(lo);
    c.hi = std::move(hi);
    return c;
}

bool Cell1::operator==(const Cell1 &other) const {
    if (kind != other.kind) return false;
    if (kind == Kind::Point) return opt_equal(lo, other.lo);
    return opt_equal(lo, other.lo) && opt_equal(hi, other.hi);
}

RcfSet RcfSet::from_cells(const std::vector<Cell1> &cells) {
    for (const Cell1 &c : cells) {
        if (c.kind == Cell1::Kind::Point) {
            if (!c.lo) throw Error("invalid_cell", "point cell without a value");
        } else if (c.lo && c.hi && !(*c.lo < *c.hi)) {
            throw Error("invalid_cell", "interval endpoints must satisfy lo < hi");
        }
    }
    std::vector<AlgReal> endpoints;
    add_endpoints(cells, endpoints);
    Regions regs{sort_unique(std::move(endpoints))};
    std::vector<bool> marks(static_cast<std::size_t>(regs.count()));
    for (int r = 0; r < regs.count(); ++r) {
        marks[static_cast<std::size_t>(r)] = set_covers(cells, regs, r);
    }
    RcfSet result;
    result.cells_ = merge_marks(regs, marks);
    return result;
}

RcfSet RcfSet::line() {
    return from_cells({Cell1::interval(std::nullopt, std::nullopt)});
}

bool RcfSet::member(const AlgReal &a) const {
    for (const Cell1 &c : cells_) {
        if (c.kind == Cell1::Kind::Point) {
            if (*c.lo == a) return true;
        } else if ((!c.lo || *c.lo < a) && (!c.hi || a < *c.hi)) {
            return true;
        }
    }
    return false;
}

bool RcfSet::member(const Rat &q) const { return member(AlgReal::from_rational(q)); }

bool RcfSet::operator==(const RcfSet &other) const {
    if (cells_.size() != other.cells_.size()) return false;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] != other.cells_[i]) return false;
    }
    return true;
}

// --- Constructors ------------------------------------------------------------

RcfSet rcf_from_sign_condition(const std::vector<SignCondition> &conds) {
    std::vector<AlgReal> endpoints;
    for (const SignCondition &cond : conds) {
        if (cond.poly.is_zero()) {
            throw Error("zero_polynomial", "sign conditions need nonzero polynomials");
        }
        if (cond.poly.degree() >= 1) {
            for (AlgReal &root : real_roots(cond.poly)) endpoints.push_back(std::move(root));
        }
    }
    Regions regs{sort_unique(std::move(endpoints))};
    std::vector<bool> marks(static_cast<std::size_t>(regs.count()));
    for (int r = 0; r < regs.count(); ++r) {
        bool ok = true;
        if (regs.is_point(r)) {
            for (const SignCondition &cond : conds) {
                if (sign_at(cond.poly, regs.point(r)) != sign_target(cond.sign)) {
                    ok = false;
                    break;
                }
            }
        } else {
            Rat sample = region_sample(regs, r);
            for (const SignCondition &cond : conds) {
                if (cond.poly.sign_at(sample) != sign_target(cond.sign)) {
                    ok = false;
                    break;
                }
            }
        }
        marks[static_cast<std::size_t>(r)] = ok;
    }
    return RcfSet::from_cells(merge_marks(regs, marks));
}

std::vector<SignCondition> parse_sign_conditions(const std::string &text) {
    std::vector<SignCondition> conds;
    std::size_t start = 0;
    bool saw_any = false;
    while (start <= text.size()) {
        std::size_t amp = text.find('&', start);
        std::string atom = text.substr(start, amp == std::string::npos ? amp : amp - start);
        std::size_t comparator = std::string::npos;
        for (std::size_t i = 0; i < atom.size(); ++i) {
            if (atom[i] != '<' && atom[i] != '=' && atom[i] != '>') continue;
            if (comparator != std::string::npos) {
                throw Error("parse_error", "sign condition admits a single comparator");
            }
            comparator = i;
        }
        if (comparator == std::string::npos) {
            throw Error("parse_error", "sign condition needs a comparator among <, =, >");
        }
        Poly lhs = parse_poly(atom.substr(0, comparator));
        Poly rhs = parse_poly(atom.substr(comparator + 1));
        Poly diff = lhs - rhs;
        if (diff.is_zero()) {
            throw Error("zero_polynomial", "the two sides of a sign condition are identical");
        }
        SignKind sign = atom[comparator] == '<'   ? SignKind::Negative
                        : atom[comparator] == '>' ? SignKind::Positive
                                                  : SignKind::Zero;
        conds.push_back({std::move(diff), sign});
        saw_any = true;
        if (amp == std::string::npos) break;
        start = amp + 1;
    }
    if (!saw_any) throw Error("parse_error", "empty sign condition");
    return conds;
}

// --- Boolean algebra ----------------------------------------------------------

RcfSet rcf_algebra(SetOp op, const RcfSet &x, const std::optional<RcfSet> &y) {
    if (op != SetOp::Complement && !y) {
        throw Error("missing_operand", "binary set operation needs a second operand");
    }
    std::vector<AlgReal> endpoints;
    add_endpoints(x.cells(), endpoints);
    if (op != SetOp::Complement) add_endpoints(y->cells(), endpoints);
    Regions regs{sort_unique(std::move(endpoints))};
    std::vector<bool> marks(static_cast<std::size_t>(regs.count()));
    for (int r = 0; r < regs.count(); ++r) {
        bool in_x = set_covers(x.cells(), regs, r);
        bool value = false;
        switch (op) {
        case SetOp::Complement: value = !in_x; break;
        case SetOp::Union: value = in_x || set_covers(y->cells(), regs, r); break;
        case SetOp::Intersect: value = in_x && set_covers(y->cells(), regs, r); break;
        case SetOp::Difference: value = in_x && !set_covers(y->cells(), regs, r); break;
        }
        marks[static_cast<std::size_t>(r)] = value;
    }
    return RcfSet::from_cells(merge_marks(regs, marks));
}

// --- Decomposition -------------------------------------------------------------

Decomposition rcf_decompose(const std::vector<RcfSet> &targets) {
    std::vector<AlgReal> endpoints;
    for (const RcfSet &target : targets) add_endpoints(target.cells(), endpoints);
    Regions regs{sort_unique(std::move(endpoints))};
    Decomposition result;
    for (int r = 0; r < regs.count(); ++r) {
        if (regs.is_point(r)) {
            result.cells.push_back(Cell1::point(regs.point(r)));
        } else {
            result.cells.push_back(Cell1::interval(regs.lo(r), regs.hi(r)));
        }
    }
    for (const RcfSet &target : targets) {
        std::vector<std::size_t> cover;
        for (int r = 0; r < regs.count(); ++r) {
            if (set_covers(target.cells(), regs, r)) cover.push_back(static_cast<std::size_t>(r));
        }
        result.covers.push_back(std::move(cover));
    }
    result.invariant_bound = 1 + static_cast<int>(regs.breaks.size());
    return result;
}

// --- Counting -------------------------------------------------------------------

Invariant rcf_invariant(const RcfSet &x) {
    Invariant inv;
    if (x.is_empty()) return inv; // sentinel dim -1, euler 0
    int points = 0;
    int intervals = 0;
    for (const Cell1 &c : x.cells()) {
        if (c.kind == Cell1::Kind::Point) {
            ++points;
        } else {
            ++intervals;
        }
    }
    inv.dim = intervals > 0 ? 1 : 0;
    inv.euler = points - intervals;
    return inv;
}

Int rcf_number(const RcfSet &x) {
    Invariant inv = rcf_invariant(x);
    return pairing_int(Int(inv.dim), Int(inv.euler));
}

bool rcf_hume_equiv(const RcfSet &x, const RcfSet &y) {
    return rcf_invariant(x) == rcf_invariant(y);
}

// --- Explicit bijections ---------------------------------------------------------

PiecewiseMap rcf_build_bijection(const RcfSet &x, const RcfSet &y) {
    if (!rcf_hume_equiv(x, y)) {
        throw Error("invariant_mismatch", "the sets have different dimension or Euler characteristic");
    }
    std::vector<Cell1> from = x.cells();
    std::vector<Cell1> to = y.cells();
    // Equal Euler characteristic makes the point surplus equal the interval
    // surplus; splitting an interval on the smaller side adds one of each.
    std::ptrdiff_t surplus = static_cast<std::ptrdiff_t>(count_points(from)) -
                             static_cast<std::ptrdiff_t>(count_points(to));
    for (; surplus > 0; --surplus) split_first_interval(to);
    for (; surplus < 0; ++surplus) split_first_interval(from);
    if (from.size() != to.size()) internal_error("cell counts differ after splitting");

    std::vector<const Cell1 *> to_points;
    std::vector<const Cell1 *> to_intervals;
    for (const Cell1 &c : to) {
        (c.kind == Cell1::Kind::Point ? to_points : to_intervals).push_back(&c);
    }
    PiecewiseMap map;
    std::size_t next_point = 0;
    std::size_t next_interval = 0;
    for (const Cell1 &c : from) {
        if (c.kind == Cell1::Kind::Point) {
            if (next_point == to_points.size()) internal_error("point cells out of balance");
            map.pieces.push_back({c, *to_points[next_point++]});
        } else {
            if (next_interval == to_intervals.size()) {
                internal_error("interval cells out of balance");
            }
            map.pieces.push_back({c, *to_intervals[next_interval++]});
        }
    }
    // Coverage check: the pieces partition both sides exactly.
    std::vector<Cell1> from_union;
    std::vector<Cell1> to_union;
    for (const MapPiece &piece : map.pieces) {
        from_union.push_back(piece.from);
        to_union.push_back(piece.to);
    }
    if (RcfSet::from_cells(from_union) != x || RcfSet::from_cells(to_union) != y) {
        internal_error("bijection pieces fail to cover the two sets");
    }
    return map;
}

RatInterval rcf_map_eval(const MapPiece &piece, const Rat &t, const Rat &tol) {
    if (!(tol > 0)) throw Error("precondition_violation", "tolerance must be positive");
    if (piece.from.kind != piece.to.kind) {
        throw Error("precondition_violation", "piece cells must have matching kinds");
    }
    AlgReal at = AlgReal::from_rational(t);
    if (piece.from.kind == Cell1::Kind::Point) {
        if (!(*piece.from.lo == at)) {
            throw Error("out_of_range", "sample point is not the source point");
        }
        return bracket_of(*piece.to.lo, tol);
    }
    if ((piece.from.lo && !(*piece.from.lo < at)) || (piece.from.hi && !(at < *piece.from.hi))) {
        throw Error("out_of_range", "sample point lies outside the source interval");
    }
    // Tighten endpoint brackets until the charts are defined and the image
    // bracket is narrow enough; rational endpoints succeed immediately.
    AlgReal flo = piece.from.lo ? *piece.from.lo : at;
    AlgReal fhi = piece.from.hi ? *piece.from.hi : at;
    AlgReal tlo = piece.to.lo ? *piece.to.lo : at;
    AlgReal thi = piece.to.hi ? *piece.to.hi : at;
    Rat width(1);
    for (int round = 0; round < 300; ++round) {
        auto maybe = [&](bool present, const AlgReal &a) {
            return present ? std::optional<RatInterval>(bracket_of(a, width)) : std::nullopt;
        };
        std::optional<RatInterval> flo_br = maybe(piece.from.lo.has_value(), flo);
        std::optional<RatInterval> fhi_br = maybe(piece.from.hi.has_value(), fhi);
        std::optional<RatInterval> tlo_br = maybe(piece.to.lo.has_value(), tlo);
        std::optional<RatInterval> thi_br = maybe(piece.to.hi.has_value(), thi);
        std::optional<RatInterval> u = chart_value(piece.from, t, flo_br, fhi_br);
        if (u && !(u->lo > 0 && u->hi < 1)) u = std::nullopt;
        if (u) {
            std::optional<RatInterval> image = unchart_value(piece.to, *u, tlo_br, thi_br);
            if (image && image->hi - image->lo <= tol) return *image;
        }
        width /= 16;
    }
    throw Error("iteration_cap", "piece evaluation failed to converge");
}

MapPiece rcf_map_invert(const MapPiece &piece) { return {piece.to, piece.from}; }

// --- Choice-function contrast -----------------------------------------------------

SkolemReport rcf_skolem_demo() {
    AlgReal zero = AlgReal::from_rational(0);
    SkolemReport report;
    report.choice_range =
        RcfSet::from_cells({Cell1::point(zero), Cell1::interval(zero, std::nullopt)});
    report.choice_invariant = rcf_invariant(report.choice_range);
    report.rcf_representable = report.choice_range.cells().size() == 2;
    // On the algebraically closed side, scan a family of definable sets for
    // one that is neither finite nor cofinite. The representation makes the
    // scan come up empty: each set carries its finiteness mode.
    bool counterpart = false;
    int probes = 0;
    for (int n = -8; n <= 8; ++n) {
        AcfSet s = acf_canonical_set(n);
        bool finite = acf_card(s).mode == AcfMode::Finite;
        bool cofinite = acf_card(acf_complement(s)).mode == AcfMode::Finite;
        if (!finite && !cofinite) counterpart = true;
        ++probes;
    }
    report.acf_counterpart_exists = counterpart;
    report.acf_probes = probes;
    return report;
}

// --- Serialization ------------------------------------------------------------------

nlohmann::json alg_real_to_json(const AlgReal &a) {
    return nlohmann::json{{"poly", poly_to_string(a.defining())},
                          {"lo", rational_to_string(a.lo())},
                          {"hi", rational_to_string(a.hi())}};
}

AlgReal alg_real_from_json(const nlohmann::json &j) {
    std::string poly_text, lo_text, hi_text;
    try {
        poly_text = j.at("poly").get<std::string>();
        lo_text = j.at("lo").get<std::string>();
        hi_text = j.at("hi").get<std::string>();
    } catch (const nlohmann::json::exception &) {
        throw Error("parse_error", "algebraic number needs string fields poly, lo, hi");
    }
    try {
        return AlgReal(parse_poly(poly_text), parse_rational(lo_text), parse_rational(hi_text));
    } catch (const std::invalid_argument &) {
        throw Error("parse_error", "malformed rational endpoint in algebraic number");
    }
}

nlohmann::json rcf_set_to_json(const RcfSet &x) {
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell1 &c : x.cells()) {
        if (c.kind == Cell1::Kind::Point) {
            cells.push_back(nlohmann::json{{"kind", "point"}, {"at", alg_real_to_json(*c.lo)}});
        } else {
            cells.push_back(nlohmann::json{
                {"kind", "interval"},
                {"lo", c.lo ? alg_real_to_json(*c.lo) : nlohmann::json(nullptr)},
                {"hi", c.hi ? alg_real_to_json(*c.hi) : nlohmann::json(nullptr)}});
        }
    }
    return nlohmann::json{{"cells", std::move(cells)}};
}

RcfSet rcf_set_from_json(const nlohmann::json &j) {
    std::vector<Cell1> cells;
    try {
        const nlohmann::json &array = j.at("cells");
        if (!array.is_array()) throw Error("parse_error", "cells must be an array");
        for (const nlohmann::json &cell : array) {
            std::string kind = cell.at("kind").get<std::string>();
            if (kind == "point") {
                cells.push_back(Cell1::point(alg_real_from_json(cell.at("at"))));
            } else if (kind == "interval") {
                std::optional<AlgReal> lo, hi;
                if (!cell.at("lo").is_null()) lo = alg_real_from_json(cell.at("lo"));
                if (!cell.at("hi").is_null()) hi = alg_real_from_json(cell.at("hi"));
                cells.push_back(Cell1::interval(std::move(lo), std::move(hi)));
            } else {
                throw Error("parse_error", "cell kind must be point or interval");
            }
        }
    } catch (const nlohmann::json::exception &) {
        throw Error("parse_error", "malformed cell list");
    }
    return RcfSet::from_cells(cells);
}

std::string rcf_set_to_string(const RcfSet &x) {
    if (x.is_empty()) return "empty";
    auto endpoint = [](const AlgReal &a) {
        if (std::optional<Rat> r = exact_rational(a)) return rational_to_string(*r);
        return a.to_string();
    };
    std::ostringstream out;
    bool first = true;
    for (const Cell1 &c : x.cells()) {
        if (!first) out << " | ";
        first = false;
        if (c.kind == Cell1::Kind::Point) {
            out << "{" << endpoint(*c.lo) << "}";
        } else {
            out << "(" << (c.lo ? endpoint(*c.lo) : "-oo") << ", "
                << (c.hi ? endpoint(*c.hi) : "+oo") << ")";
        }
    }
    return out.str();
}

} // namespace sol
