#pragma once

#include <cstdint>

#include <boost/rational.hpp>

#include "cyclemod/errors.hpp"

namespace cyclemod {

using Rational = boost::rational<std::int64_t>;

struct BoundResult {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    /// 15q + floor(3r/2)
    std::uint64_t bound = 0;
    /// (3/2)(n + q - 1), equal to 15q + 3r/2
    Rational alternate;
};

/// Edge count above which every n-vertex graph has a (1 mod 3)-cycle, with
/// n - 1 = 9q + r.
inline BoundResult edge_bound(std::uint64_t n) {
    if (n == 0)
        throw precondition_failed("edge_bound needs n >= 1");
    BoundResult b;
    b.n = n;
    b.q = (n - 1) / 9;
    b.r = (n - 1) % 9;
    b.bound = 15 * b.q + 3 * b.r / 2;
    b.alternate = Rational(3, 2) * static_cast<std::int64_t>(n + b.q - 1);
    return b;
}

} // namespace cyclemod
