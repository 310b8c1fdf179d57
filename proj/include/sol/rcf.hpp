#pragma once

#include "sol/acf.hpp"
#include "sol/algreal.hpp"
#include "sol/poly.hpp"
#include "sol/rational.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sol {

// Definable subsets of the real algebraic line. O-minimality makes every such
// set a finite union of points (0-cells) and open intervals (1-cells); the
// representation keeps exactly that: a sorted list of pairwise disjoint cells
// in a canonical form, so extensional equality is structural equality.

// One cell: a single algebraic point, or an open interval whose endpoints are
// algebraic numbers or infinite (an absent endpoint means the interval is
// unbounded on that side).
struct Cell1 {
    enum class Kind { Point, Interval };

    Kind kind = Kind::Point;
    std::optional<AlgReal> lo; // the point itself, or the finite lower endpoint
    std::optional<AlgReal> hi; // unused for points; the finite upper endpoint

    static Cell1 point(AlgReal at);
    // Throws "invalid_cell" unless lo < hi (absent endpoints are infinite).
    static Cell1 interval(std::optional<AlgReal> lo, std::optional<AlgReal> hi);

    bool operator==(const Cell1 &other) const;
    bool operator!=(const Cell1 &other) const { return !(*this == other); }
};

// Canonical finite union of cells. Canonical means: cells sorted left to
// right, pairwise disjoint, and eagerly merged, so no point sits between two
// intervals it would glue into one (an interval-point-interval triple with
// matching endpoints collapses when built).
class RcfSet {
  public:
    RcfSet() = default; // the empty set

    // Canonicalizes an arbitrary cell list: the cells may overlap, abut, or
    // arrive unsorted; the result is their union in canonical form.
    static RcfSet from_cells(const std::vector<Cell1> &cells);
    static RcfSet line(); // the full line as a single interval

    const std::vector<Cell1> &cells() const { return cells_; }
    bool is_empty() const { return cells_.empty(); }

    bool member(const AlgReal &a) const;
    bool member(const Rat &q) const;

    bool operator==(const RcfSet &other) const;
    bool operator!=(const RcfSet &other) const { return !(*this == other); }

  private:
    std::vector<Cell1> cells_;
};

// Dimension and Euler characteristic read off the canonical cells. The empty
// set gets the sentinel dimension -1 (and Euler characteristic 0); it is the
// only set with that dimension, so equality of invariants still characterizes
// the existence of a definable bijection.
struct Invariant {
    int dim = -1;
    int euler = 0;

    bool operator==(const Invariant &other) const {
        return dim == other.dim && euler == other.euler;
    }
    bool operator!=(const Invariant &other) const { return !(*this == other); }
};

// --- Constructors -----------------------------------------------------------

enum class SignKind { Negative, Zero, Positive };

// One conjunct of a sign condition: "poly sign 0".
struct SignCondition {
    Poly poly;
    SignKind sign = SignKind::Zero;
};

// The set {x : every condition holds}, computed by isolating all real roots
// of all the polynomials and reading signs on the resulting points and
// intervals. The empty conjunction gives the full line. Throws
// "zero_polynomial" if any condition's polynomial is zero.
RcfSet rcf_from_sign_condition(const std::vector<SignCondition> &conds);

// Parses "x^2-2 < 0 & x > -3": conditions joined by '&', each one a single
// comparison between polynomials with comparator '<', '=', or '>'. Throws
// "parse_error" on malformed input, "zero_polynomial" when the two sides of
// a comparison are identical.
std::vector<SignCondition> parse_sign_conditions(const std::string &text);

// --- Boolean algebra --------------------------------------------------------

// Canonical union, intersection, complement, or difference. Complement is
// unary; the binary operations throw "missing_operand" without y.
RcfSet rcf_algebra(SetOp op, const RcfSet &x, const std::optional<RcfSet> &y = std::nullopt);

inline RcfSet rcf_union(const RcfSet &x, const RcfSet &y) {
    return rcf_algebra(SetOp::Union, x, y);
}
inline RcfSet rcf_intersect(const RcfSet &x, const RcfSet &y) {
    return rcf_algebra(SetOp::Intersect, x, y);
}
inline RcfSet rcf_complement(const RcfSet &x) { return rcf_algebra(SetOp::Complement, x); }
inline RcfSet rcf_difference(const RcfSet &x, const RcfSet &y) {
    return rcf_algebra(SetOp::Difference, x, y);
}

// --- Decomposition ----------------------------------------------------------

// A partition of the line refining every target: between (and beyond) the
// collected breakpoints, alternating open intervals and points. Each target
// is certified as the union of the listed cell indices. invariant_bound is
// 1 + the number of breakpoints; every union of cells drawn from the
// decomposition has |euler| at most that bound (and dimension at most 1).
struct Decomposition {
    std::vector<Cell1> cells;
    std::vector<std::vector<std::size_t>> covers; // one index list per target
    int invariant_bound = 1;
};

Decomposition rcf_decompose(const std::vector<RcfSet> &targets);

// --- Counting ---------------------------------------------------------------

Invariant rcf_invariant(const RcfSet &x);

// The abstraction value: pairing_int(dim, euler), an integer sitting inside
// the field via the prime field.
Int rcf_number(const RcfSet &x);

// True iff the invariants agree, which is exactly when a definable bijection
// between the two sets exists.
bool rcf_hume_equiv(const RcfSet &x, const RcfSet &y);

// --- Explicit bijections ----------------------------------------------------

// One piece of a bijection: a source cell and a target cell of the same kind.
// Point pieces send the point to the point; interval pieces carry the unique
// increasing map matching the charts described at rcf_map_eval.
struct MapPiece {
    Cell1 from;
    Cell1 to;
};

struct PiecewiseMap {
    std::vector<MapPiece> pieces; // sorted by source cell
};

// Builds an explicit bijection between sets with equal invariants, matching
// points to points and intervals to intervals in order. When the cell counts
// differ, the side with fewer cells has an interval split into
// interval-point-interval first (the move that cancels a point against two
// flanking intervals, run in reverse). Throws "invariant_mismatch" when
// rcf_hume_equiv fails.
PiecewiseMap rcf_build_bijection(const RcfSet &x, const RcfSet &y);

// A closed rational bracket [lo, hi].
struct RatInterval {
    Rat lo;
    Rat hi;
};

// Evaluates a piece at a rational point of its source cell, returning a
// bracket of width at most tol around the image. Interval pieces realize the
// increasing bijection obtained by charting source and target onto (0,1):
// affine when both cells are bounded, a rational reciprocal chart on
// unbounded sides. Pieces with rational endpoints evaluate exactly (a bracket
// of width zero). Throws "out_of_range" when t lies outside the source cell.
RatInterval rcf_map_eval(const MapPiece &piece, const Rat &t, const Rat &tol);

// The inverse piece: swaps source and target. The charts make the piece maps
// mutually inverse by construction.
MapPiece rcf_map_invert(const MapPiece &piece);

// --- Choice-function contrast -----------------------------------------------

// The executable content of the Skolem-function contrast between the real and
// the algebraically closed line: the nonnegative square-root choice function
// has range [0, oo), representable here as one point plus one interval, while
// on the algebraically closed side every definable subset of the line is
// finite or cofinite, so no such range exists there.
struct SkolemReport {
    RcfSet choice_range;          // {0} together with (0, oo)
    Invariant choice_invariant;   // dim 1, euler 0
    bool rcf_representable = false;
    bool acf_counterpart_exists = true; // scan outcome; false on success
    int acf_probes = 0;                 // sets inspected for the scan
};

SkolemReport rcf_skolem_demo();

// --- Serialization ----------------------------------------------------------

// {"poly": "x^2 - 2", "lo": "1", "hi": "2"}; the interval must isolate one
// root of the polynomial (half-open, root in (lo, hi]).
nlohmann::json alg_real_to_json(const AlgReal &a);
AlgReal alg_real_from_json(const nlohmann::json &j);

// {"cells": [{"kind": "point", "at": ...}, {"kind": "interval", "lo": ...,
// "hi": ...}]} with null for infinite endpoints. Reading canonicalizes, so
// non-canonical cell lists are accepted. Shape errors throw "parse_error";
// invalid algebraic numbers propagate "invalid_algebraic".
nlohmann::json rcf_set_to_json(const RcfSet &x);
RcfSet rcf_set_from_json(const nlohmann::json &j);

// Display form, e.g. "{0} | (0, +oo)" with algebraic endpoints shown as
// root-of descriptions. No parser; JSON is the round-trip format.
std::string rcf_set_to_string(const RcfSet &x);

} // namespace sol
