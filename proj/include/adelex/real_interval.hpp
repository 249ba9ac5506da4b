/*
 * real_interval.hpp
 * -----------------
 * Closed real intervals [lo, hi] used as certified enclosures for the
 * archimedean quantities (Mahler measure, h(t_oo)). Not a general interval
 * arithmetic: just the handful of operations the enclosures need, with
 * explicit outward widening where rounding enters.
 */
#pragma once

#include <optional>
#include <stdexcept>

namespace adelex {

template <class R>
struct Interval {
    R lo{};
    R hi{};

    Interval() = default;
    explicit Interval(const R& point) : lo(point), hi(point) {}
    Interval(const R& l, const R& h) : lo(l), hi(h) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }

    R width() const { return hi - lo; }
    R midpoint() const { return (lo + hi) / 2; }
    bool contains(const R& x) const { return lo <= x && x <= hi; }

    Interval& operator+=(const Interval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }
    friend Interval operator+(Interval a, const Interval& b) { return a += b; }

    Interval& operator+=(const R& x) {
        lo += x;
        hi += x;
        return *this;
    }

    /// Widen both ends outward by eps.
    Interval widened(const R& eps) const { return Interval(lo - eps, hi + eps); }

    static std::optional<Interval> intersection(const Interval& a, const Interval& b) {
        R l = a.lo > b.lo ? a.lo : b.lo;
        R h = a.hi < b.hi ? a.hi : b.hi;
        if (l > h) return std::nullopt;
        return Interval(l, h);
    }

    template <class S>
    Interval<S> convert() const {
        // outward rounding when narrowing the representation
        S l(lo), h(hi);
        S slack = S(4) * std::numeric_limits<S>::epsilon();
        S scale_l = l < 0 ? -l : l, scale_h = h < 0 ? -h : h;
        return Interval<S>(l - slack * (scale_l + 1), h + slack * (scale_h + 1));
    }
};

}  // namespace adelex
