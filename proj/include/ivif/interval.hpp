#pragma once

#include <ostream>
#include <string>

#include "ivif/errors.hpp"

namespace ivif {

/// Validation tolerance. Bounds may overshoot their constraint by at most
/// this much (to absorb float round-off) and are stored exactly as given.
inline constexpr double kEps = 1e-9;

/// A closed subinterval [lo, hi] of the unit interval. Degenerate intervals
/// (lo == hi) are fine; they model a plain scalar degree.
class UnitInterval {
public:
    UnitInterval(double lo, double hi) : lo_(lo), hi_(hi) {
        // negated comparisons so NaN bounds also fail
        if (!(lo >= -kEps) || !(hi <= 1.0 + kEps) || !(lo <= hi + kEps))
            throw ValidationError("[" + std::to_string(lo) + ", " + std::to_string(hi) +
                                  "] is not a subinterval of [0, 1]");
    }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

    friend bool operator==(const UnitInterval& a, const UnitInterval& b) noexcept {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const UnitInterval& a, const UnitInterval& b) noexcept {
        return !(a == b);
    }

private:
    double lo_;
    double hi_;
};

inline std::ostream& operator<<(std::ostream& os, const UnitInterval& u) {
    return os << '[' << u.lo() << ", " << u.hi() << ']';
}

} // namespace ivif
