#include "sol/pairing.hpp"

#include "sol/error.hpp"

#include <utility>

namespace sol {

namespace {

Int zigzag(const Int &n) {
    if (n >= 0) return 2 * n;
    return -2 * n - 1;
}

Int unzigzag(const Int &m) {
    if (m % 2 == 0) return m / 2;
    return -((m + 1) / 2);
}

Int cantor(const Int &a, const Int &b) { return (a + b) * (a + b + 1) / 2 + b; }

} // namespace

Int pairing_int(const Int &i, const Int &j) { return cantor(zigzag(i), zigzag(j)); }

std::pair<Int, Int> unpair_int(const Int &z) {
    if (z < 0) {
        throw Error("out_of_range", "unpair_int expects a nonnegative integer");
    }
    // Invert the Cantor pairing: w is the index of the diagonal containing z,
    // recovered from the triangular-number inequality w(w+1)/2 <= z.
    Int discriminant = 8 * z + 1;
    Int w = (boost::multiprecision::sqrt(discriminant) - 1) / 2;
    Int b = z - w * (w + 1) / 2;
    Int a = w - b;
    return {unzigzag(a), unzigzag(b)};
}

IotaChain::IotaChain(PairMap iota, Int b, Int c)
    : iota_(std::move(iota)), b_(std::move(b)), c_(std::move(c)) {
    if (b_ == c_) {
        throw Error("precondition_violation", "iota chain requires distinct tag constants");
    }
}

Int IotaChain::apply(int n, const Int &x) const {
    if (n < 0) {
        throw Error("precondition_violation", "iota chain index must be nonnegative");
    }
    Int value = iota_(c_, iota_(c_, x));
    for (int k = 1; k <= n; ++k) {
        value = iota_(k % 2 == 1 ? b_ : c_, value);
    }
    return value;
}

} // namespace sol
