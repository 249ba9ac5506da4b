/*
 * newton_polygon.hpp
 * ------------------
 * Newton polygons over a finite prime p: the lower convex hull of the points
 * (i, v_p(a_i)) taken over nonzero coefficients. A segment of slope s and
 * horizontal length l certifies l roots of p-adic valuation -s, i.e. p-adic
 * norm p^s; this is how per-place root norms are obtained without ever
 * constructing an algebraic closure of Q_p.
 */
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "adelex/bigint.hpp"
#include "adelex/int_poly.hpp"

namespace adelex {

struct NewtonSegment {
    BigRat slope;
    int length = 0;  // horizontal extent; the number of roots it certifies
};

struct NewtonPolygon {
    BigInt prime;
    std::vector<std::pair<int, int>> points;    // (degree index i, v_p(a_i)), a_i != 0
    std::vector<std::pair<int, int>> vertices;  // lower convex hull, strictly convex
    std::vector<NewtonSegment> segments;

    /// Sum of slope*length over positive-slope segments: the finite-place
    /// entropy exponent e_p (so h(t_p) = e_p * log p).
    BigRat positive_part() const {
        BigRat e = 0;
        for (const auto& s : segments)
            if (s.slope > 0) e += s.slope * s.length;
        return e;
    }

    /// Sum of slope*length over all segments; equals v_p(a_n) - v_p(a_0).
    BigRat total_rise() const {
        BigRat e = 0;
        for (const auto& s : segments) e += s.slope * s.length;
        return e;
    }
};

inline NewtonPolygon newton_polygon(const IntPoly& f, const BigInt& p) {
    if (!is_prime(p)) throw std::invalid_argument("newton_polygon: p = " + p.str() + " is not prime");
    NewtonPolygon np;
    np.prime = p;
    for (int i = 0; i <= f.degree(); ++i) {
        const BigInt& a = f.coeff(static_cast<size_t>(i));
        if (a == 0) continue;
        np.points.emplace_back(i, valuation(a, p));
    }

    // Lower hull, left to right; a new point pops the last vertex whenever it
    // does not keep the slopes strictly increasing (collinear points merge).
    auto& hull = np.vertices;
    for (const auto& pt : np.points) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // slope(a,b) >= slope(b,pt) as exact integer cross-multiplication
            BigInt lhs = BigInt(b.second - a.second) * (pt.first - b.first);
            BigInt rhs = BigInt(pt.second - b.second) * (b.first - a.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        NewtonSegment seg;
        seg.length = hull[k + 1].first - hull[k].first;
        seg.slope = BigRat(hull[k + 1].second - hull[k].second, seg.length);
        np.segments.push_back(std::move(seg));
    }
    return np;
}

}  // namespace adelex
