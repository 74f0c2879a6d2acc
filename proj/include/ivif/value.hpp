#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>

#include "ivif/errors.hpp"
#include "ivif/interval.hpp"

namespace ivif {

/// One matrix entry: a membership interval mu and a non-membership interval
/// nu constrained by mu.hi + nu.hi <= 1. Whatever is left of that sum is the
/// hesitation margin.
class Value {
public:
    Value(UnitInterval mu, UnitInterval nu) : mu_(mu), nu_(nu) {
        if (!(mu.hi() + nu.hi() <= 1.0 + kEps))
            throw ValidationError("mu.hi + nu.hi = " + std::to_string(mu.hi() + nu.hi()) +
                                  " exceeds 1");
    }

    const UnitInterval& mu() const noexcept { return mu_; }
    const UnitInterval& nu() const noexcept { return nu_; }

    /// Full membership <[1,1],[0,0]>, the greatest value under le().
    static Value top() { return Value({1.0, 1.0}, {0.0, 0.0}); }
    /// Full non-membership <[0,0],[1,1]>, the least value under le().
    static Value bottom() { return Value({0.0, 0.0}, {1.0, 1.0}); }

    friend bool operator==(const Value& a, const Value& b) noexcept {
        return a.mu_ == b.mu_ && a.nu_ == b.nu_;
    }
    friend bool operator!=(const Value& a, const Value& b) noexcept { return !(a == b); }

private:
    UnitInterval mu_;
    UnitInterval nu_;
};

namespace detail {

/// Apply f to the four bound pairs (mu.lo, mu.hi, nu.lo, nu.hi) of a and b.
template <typename F>
Value map_bounds(const Value& a, const Value& b, F f) {
    return Value({f(a.mu().lo(), b.mu().lo()), f(a.mu().hi(), b.mu().hi())},
                 {f(a.nu().lo(), b.nu().lo()), f(a.nu().hi(), b.nu().hi())});
}

} // namespace detail

/// Join: componentwise max on mu, min on nu.
inline Value add(const Value& a, const Value& b) {
    return Value({std::max(a.mu().lo(), b.mu().lo()), std::max(a.mu().hi(), b.mu().hi())},
                 {std::min(a.nu().lo(), b.nu().lo()), std::min(a.nu().hi(), b.nu().hi())});
}

/// Meet: componentwise min on mu, max on nu.
inline Value mul(const Value& a, const Value& b) {
    return Value({std::min(a.mu().lo(), b.mu().lo()), std::min(a.mu().hi(), b.mu().hi())},
                 {std::max(a.nu().lo(), b.nu().lo()), std::max(a.nu().hi(), b.nu().hi())});
}

/// Probabilistic sum x + y - xy on mu, product on nu. The nu product keeps
/// mu.hi + nu.hi within 1, which the probabilistic sum alone would not.
inline Value oplus(const Value& a, const Value& b) {
    auto psum = [](double x, double y) { return x + y - x * y; };
    return Value({psum(a.mu().lo(), b.mu().lo()), psum(a.mu().hi(), b.mu().hi())},
                 {a.nu().lo() * b.nu().lo(), a.nu().hi() * b.nu().hi()});
}

/// Product on mu, probabilistic sum on nu. Dual of oplus.
inline Value odot(const Value& a, const Value& b) {
    auto psum = [](double x, double y) { return x + y - x * y; };
    return Value({a.mu().lo() * b.mu().lo(), a.mu().hi() * b.mu().hi()},
                 {psum(a.nu().lo(), b.nu().lo()), psum(a.nu().hi(), b.nu().hi())});
}

/// Componentwise arithmetic mean.
inline Value amean(const Value& a, const Value& b) {
    return detail::map_bounds(a, b, [](double x, double y) { return (x + y) / 2.0; });
}

/// Componentwise geometric mean.
inline Value gmean(const Value& a, const Value& b) {
    // max() absorbs the tiny negative products that eps-tolerant bounds allow
    return detail::map_bounds(a, b,
                              [](double x, double y) { return std::sqrt(std::max(0.0, x * y)); });
}

/// Componentwise harmonic mean 2xy / (x + y), defined as 0 when x = y = 0.
inline Value hmean(const Value& a, const Value& b) {
    return detail::map_bounds(a, b, [](double x, double y) {
        const double s = x + y;
        return s == 0.0 ? 0.0 : 2.0 * x * y / s;
    });
}

/// Componentwise (x + y) / (2 (xy + 1)).
inline Value star(const Value& a, const Value& b) {
    return detail::map_bounds(a, b,
                              [](double x, double y) { return (x + y) / (2.0 * (x * y + 1.0)); });
}

/// Swap mu and nu.
inline Value complement(const Value& a) {
    return Value(a.nu(), a.mu());
}

/// Partial order: mu bounds <=, nu bounds >=. Values can be incomparable.
inline bool le(const Value& a, const Value& b) noexcept {
    return a.mu().lo() <= b.mu().lo() && a.mu().hi() <= b.mu().hi() &&
           a.nu().lo() >= b.nu().lo() && a.nu().hi() >= b.nu().hi();
}

/// Exact boundwise equality, same as operator==.
inline bool eq(const Value& a, const Value& b) noexcept {
    return a == b;
}

inline std::ostream& operator<<(std::ostream& os, const Value& v) {
    return os << '<' << v.mu() << ", " << v.nu() << '>';
}

} // namespace ivif
