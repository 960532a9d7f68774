#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "magnitude.hpp"
#include "poly.hpp"

namespace ultrametric {

// Newton polygon of a monic polynomial at p: the lower convex hull of
// {(i, v_p(a_i)) : a_i != 0}. Serves as the independent oracle for the
// spectral value (segment slopes are root valuations with multiplicity).
struct NewtonSegment {
    Rational slope;
    long length; // horizontal span

    friend bool operator==(const NewtonSegment& a, const NewtonSegment& b) {
        return a.slope == b.slope && a.length == b.length;
    }
};

struct NewtonPolygon {
    std::int64_t prime = 0;
    std::vector<std::pair<long, ValExp>> vertices; // hull corners, index increasing
    std::vector<NewtonSegment> segments;           // slopes strictly increasing
};

inline NewtonPolygon newton_polygon(const Poly& p, std::int64_t prime) {
    require_prime(prime);
    if (p.is_zero() || p.degree() < 1) throw DomainError("newton polygon requires degree >= 1");
    if (!p.is_monic()) throw DomainError("newton polygon requires a monic polynomial");

    // finite-valuation points, index increasing; (deg, 0) present since monic
    std::vector<std::pair<long, Rational>> pts;
    for (long i = 0; i <= p.degree(); ++i) {
        const Rational c = p.coeff(static_cast<std::size_t>(i));
        if (!c.is_zero()) pts.emplace_back(i, vp(c, prime).finite_value());
    }

    // lower hull, strict corners only (collinear points merge into a segment)
    std::vector<std::pair<long, Rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // slope(a,b) >= slope(b,pt) means b is not a strict corner
            const Rational lhs = (b.second - a.second) * Rational(pt.first - b.first);
            const Rational rhs = (pt.second - b.second) * Rational(b.first - a.first);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    NewtonPolygon np;
    np.prime = prime;
    for (const auto& [i, v] : hull) np.vertices.emplace_back(i, ValExp(v));
    for (std::size_t k = 1; k < hull.size(); ++k) {
        const long dx = hull[k].first - hull[k - 1].first;
        np.segments.push_back(
            {(hull[k].second - hull[k - 1].second) / Rational(dx), dx});
    }
    return np;
}

// Root magnitudes with multiplicity: one copy of p^{slope} per unit of
// horizontal length, plus one ZERO per zero root (index of the first nonzero
// coefficient).
inline std::vector<Magnitude> root_magnitudes(const Poly& p, std::int64_t prime) {
    const NewtonPolygon np = newton_polygon(p, prime);
    std::vector<Magnitude> out;
    long zero_roots = 0;
    while (p.coeff(static_cast<std::size_t>(zero_roots)).is_zero()) ++zero_roots;
    for (long i = 0; i < zero_roots; ++i) out.push_back(Magnitude::zero());
    for (const auto& seg : np.segments)
        for (long i = 0; i < seg.length; ++i) out.push_back(Magnitude::prime_power(prime, seg.slope));
    return out;
}

} // namespace ultrametric
