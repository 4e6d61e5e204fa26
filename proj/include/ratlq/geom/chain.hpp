// Tight curve model: an arc (or closed curve) transversal to the real axis
// is recorded by its ordered sequence of axis crossings ("feet") plus the
// half-plane of the first excursion. Tight means no excursion bounds a
// puncture-free disk with the axis. Chains are realized as rectilinear
// polylines with exact rational coordinates for crossing computations.

#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "exact.hpp"

namespace ratlq::geom {

struct FeetChain {
    bool closed = false;
    // Arc: [start puncture, interior feet..., end puncture].
    // Closed: feet only, cyclic, even count.
    std::vector<Rat> feet;
    int first_side = +1;  // +1 = upper half-plane for excursion 0
    Rat height_scale = Rat(1);

    std::size_t excursions() const {
        if (closed) return feet.size();
        return feet.size() < 2 ? 0 : feet.size() - 1;
    }
    int side(std::size_t k) const { return (k % 2 == 0) ? first_side : -first_side; }
    const Rat& foot(std::size_t i) const { return feet[i % feet.size()]; }
};

inline std::pair<Rat, Rat> excursion_span(const FeetChain& c, std::size_t k) {
    const Rat a = c.feet[k];
    const Rat b = c.foot(k + 1);
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

inline Rat excursion_height(const FeetChain& c, std::size_t k) {
    const auto [a, b] = excursion_span(c, k);
    return Rat(c.side(k)) * c.height_scale * (b - a) / Rat(2);
}

// Removes axis bigons from an arc: consecutive interior feet with no
// puncture strictly between, and endpoint spirals (an interior foot with no
// puncture between it and the adjacent terminal puncture).
inline void tighten_arc(FeetChain& c, const std::vector<Rat>& punctures) {
    if (c.closed) throw std::invalid_argument("tighten_arc: arc expected");
    const auto clear_between = [&](const Rat& a, const Rat& b) {
        const Rat lo = std::min(a, b), hi = std::max(a, b);
        for (const Rat& p : punctures)
            if (p > lo && p < hi) return false;
        return true;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t n = c.feet.size();
        if (n < 2) throw std::logic_error("tighten_arc: malformed arc");
        for (std::size_t i = 1; i + 2 < n; ++i) {
            if (clear_between(c.feet[i], c.feet[i + 1])) {
                c.feet.erase(c.feet.begin() + static_cast<long>(i),
                             c.feet.begin() + static_cast<long>(i) + 2);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        if (c.feet.size() > 2 && clear_between(c.feet[0], c.feet[1])) {
            c.feet.erase(c.feet.begin() + 1);
            c.first_side = -c.first_side;
            changed = true;
            continue;
        }
        if (c.feet.size() > 2 &&
            clear_between(c.feet[c.feet.size() - 2], c.feet.back())) {
            c.feet.erase(c.feet.end() - 2);
            changed = true;
        }
    }
}

// Structural assertion: same-side excursions nested or disjoint, feet
// pairwise distinct, closed chains of even length.
inline void check_embedded(const FeetChain& c) {
    if (c.closed && c.feet.size() % 2 != 0)
        throw std::logic_error("check_embedded: closed chain needs even feet count");
    const std::size_t m = c.excursions();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (c.side(i) != c.side(j)) continue;
            const auto [a1, b1] = excursion_span(c, i);
            const auto [a2, b2] = excursion_span(c, j);
            const bool disjoint = b1 <= a2 || b2 <= a1;
            const bool nested12 = a1 <= a2 && b2 <= b1;
            const bool nested21 = a2 <= a1 && b1 <= b2;
            if (!(disjoint || nested12 || nested21))
                throw std::logic_error("check_embedded: overlapping same-side excursions");
        }
    std::vector<Rat> f = c.feet;
    std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] == f[i + 1]) throw std::logic_error("check_embedded: duplicate feet");
}

// Rectilinear realization. For arcs the first and last vertex sit on the
// axis (the endpoint punctures); every interior foot crossing lies inside a
// vertical segment. For closed chains the segment list wraps around.
inline std::vector<Pt> realize(const FeetChain& c) {
    const std::size_t m = c.excursions();
    if (m == 0) throw std::logic_error("realize: chain with no excursions");
    std::vector<Pt> v;
    if (!c.closed) {
        v.push_back(Pt{c.feet.front(), Rat(0)});
        for (std::size_t k = 0; k < m; ++k) {
            const Rat h = excursion_height(c, k);
            v.push_back(Pt{c.feet[k], h});
            v.push_back(Pt{c.feet[k + 1], h});
        }
        v.push_back(Pt{c.feet.back(), Rat(0)});
    } else {
        for (std::size_t k = 0; k < m; ++k) {
            const Rat h = excursion_height(c, k);
            v.push_back(Pt{c.feet[k], h});
            v.push_back(Pt{c.foot(k + 1), h});
        }
    }
    return v;
}

// Recovers a tight arc from a mapped polyline whose endpoints lie on the
// axis. Crossings are read off sign changes of y along the polyline.
inline FeetChain extract_arc(const std::vector<Pt>& poly,
                             const std::vector<Rat>& punctures) {
    if (poly.size() < 3) throw std::invalid_argument("extract_arc: too short");
    if (poly.front().y != Rat(0) || poly.back().y != Rat(0))
        throw std::invalid_argument("extract_arc: endpoints must be on the axis");

    FeetChain c;
    c.feet.push_back(poly.front().x);

    int cur_sign = 0;           // sign of the current off-axis run
    std::size_t last_nz = 0;    // index of last vertex with nonzero y
    bool have_first = false;
    for (std::size_t i = 1; i < poly.size(); ++i) {
        const int s = sgn(poly[i].y);
        if (s == 0) continue;  // axis vertex; crossing resolved at next nonzero
        if (cur_sign == 0) {
            c.first_side = s;
            have_first = true;
        } else if (s != cur_sign) {
            // Crossing happened between vertices last_nz and i. All vertices
            // strictly between have y == 0; a transversal crossing admits at
            // most one such vertex.
            Rat x;
            if (i == last_nz + 1) {
                const Pt& a = poly[last_nz];
                const Pt& b = poly[i];
                const Rat t = a.y / (a.y - b.y);
                x = a.x + t * (b.x - a.x);
            } else if (i == last_nz + 2) {
                x = poly[last_nz + 1].x;
            } else {
                throw std::logic_error("extract_arc: sliding axis run");
            }
            for (const Rat& p : punctures)
                if (x == p) throw std::logic_error("extract_arc: crossing at a puncture");
            c.feet.push_back(x);
        }
        cur_sign = s;
        last_nz = i;
    }
    if (!have_first) throw std::logic_error("extract_arc: polyline never leaves the axis");
    c.feet.push_back(poly.back().x);
    tighten_arc(c, punctures);
    check_embedded(c);
    return c;
}

}  // namespace ratlq::geom
