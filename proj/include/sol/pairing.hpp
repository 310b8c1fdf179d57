#pragma once

#include "sol/rational.hpp"

#include <functional>
#include <utility>

namespace sol {

// Bijection Z^2 -> N (viewed inside Z): folds each argument onto N by the
// zigzag z(n) = 2n for n >= 0 and -2n-1 otherwise, then applies the Cantor
// pairing cantor(a, b) = (a+b)(a+b+1)/2 + b.
Int pairing_int(const Int &i, const Int &j);

// Exact inverse of pairing_int. Every nonnegative integer decodes; a negative
// argument throws "out_of_range" since pairing_int never produces one.
std::pair<Int, Int> unpair_int(const Int &z);

// Chain of injections iota_0, iota_1, ... with pairwise disjoint ranges,
// built from a single injective pair map and two distinct tag constants:
//   iota_0(x)      = iota(c, iota(c, x))
//   iota_{2s+1}(x) = iota(b, iota_{2s}(x))
//   iota_{2s+2}(x) = iota(c, iota_{2s+1}(x))
// Alternating the tags keeps the ranges disjoint: two chain maps of different
// index disagree on some tag position, and injectivity of the pair map
// propagates the disagreement outward.
class IotaChain {
  public:
    using PairMap = std::function<Int(const Int &, const Int &)>;

    // The pair map's injectivity is the caller's obligation (spot-checked in
    // tests, not here). Throws "precondition_violation" when b == c, because
    // equal tags collapse the ranges into one another.
    IotaChain(PairMap iota, Int b, Int c);

    // Evaluates iota_n(x). Throws "precondition_violation" for n < 0.
    Int apply(int n, const Int &x) const;

  private:
    PairMap iota_;
    Int b_;
    Int c_;
};

} // namespace sol
