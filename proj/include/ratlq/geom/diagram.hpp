// Tangle diagrams D(tau_{u/v}): the arc, the two vertical axes placed in
// bigon-free windows, and the ordered Lagrangian intersection points.

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "../tangle.hpp"
#include "chain.hpp"
#include "twist.hpp"

namespace ratlq::geom {

// A crossing of a chain with a vertical line: excursion index, the line's
// x position, and the tent height there.
struct Crossing {
    std::size_t exc = 0;
    Rat x;
    Rat y;
};

inline int travel_dir(const FeetChain& c, std::size_t k) {
    return c.foot(k + 1) > c.feet[k] ? +1 : -1;
}

// Crossings of a chain with the vertical at position x0, in curve order.
inline std::vector<Crossing> crossings_with_vertical(const FeetChain& c, const Rat& x0) {
    std::vector<Crossing> out;
    for (std::size_t k = 0; k < c.excursions(); ++k) {
        const auto [a, b] = excursion_span(c, k);
        if (x0 > a && x0 < b) out.push_back(Crossing{k, x0, excursion_height(c, k)});
    }
    return out;
}

// Bigon-free window for a vertical line inside the open gap (lo, hi)
// between two punctures. Hairpin feet (both neighbours on one side) bound
// the window; the returned position also avoids all feet.
inline Rat vertical_position(const FeetChain& c, const Rat& lo, const Rat& hi) {
    Rat wlo = lo, whi = hi;
    const std::size_t n = c.feet.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const Rat& f = c.feet[i];
        if (f <= lo || f >= hi) continue;
        const Rat& p = c.feet[i - 1];
        const Rat& q = c.feet[i + 1];
        if (p < f && q < f) wlo = std::max(wlo, f);   // opens left: stay right of f
        if (p > f && q > f) whi = std::min(whi, f);   // opens right: stay left of f
    }
    if (!(wlo < whi))
        throw std::logic_error("vertical_position: empty bigon-free window");
    // Avoid pass-through feet inside the window: use the lowest foot-free slot.
    Rat cut = whi;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (c.feet[i] > wlo && c.feet[i] < cut) cut = c.feet[i];
    return wlo + (cut - wlo) / Rat(2);
}

struct XiPoint {
    Crossing at;
    bool active = false;  // on l_A
};

struct TangleDiagram {
    Fraction f{0, 1};
    TangleState state;
    FeetChain alpha;
    std::array<Rat, 3> ppos{rat(1), rat(2), rat(3)};  // puncture positions
    Rat xA, xI;                                       // vertical positions
    Rat copy_eps;                                     // parallel-copy offset
    std::vector<XiPoint> xi;                          // ordered along alpha (the prec order)

    std::size_t omega() const { return xi.size() - 1; }

    // Position of a named puncture on the axis.
    Rat puncture_pos(Puncture p) const {
        for (int i = 0; i < 3; ++i)
            if (state.puncture_order[static_cast<std::size_t>(i)] == p)
                return ppos[static_cast<std::size_t>(i)];
        throw std::logic_error("puncture_pos: unreachable");
    }
};

inline TangleDiagram build_tangle_diagram(const Fraction& f,
                                          const TwistConventions& conv = kConventions) {
    TangleDiagram d;
    d.f = f;
    const TwistWord word = continued_fraction(f);
    d.state = run_state_machine(word);
    d.alpha = build_alpha(word, conv);
    check_embedded(d.alpha);

    d.xA = vertical_position(d.alpha, d.ppos[0], d.ppos[1]);
    d.xI = vertical_position(d.alpha, d.ppos[1], d.ppos[2]);

    // Enumerate crossings in order along the arc.
    for (std::size_t k = 0; k < d.alpha.excursions(); ++k) {
        const auto [a, b] = excursion_span(d.alpha, k);
        struct Hit {
            Rat x;
            bool active;
        };
        std::vector<Hit> hits;
        if (d.xA > a && d.xA < b) hits.push_back({d.xA, true});
        if (d.xI > a && d.xI < b) hits.push_back({d.xI, false});
        if (hits.size() == 2) {
            const bool ascending = travel_dir(d.alpha, k) > 0;
            if ((hits[0].x < hits[1].x) != ascending) std::swap(hits[0], hits[1]);
        }
        for (const Hit& h : hits)
            d.xi.push_back(XiPoint{Crossing{k, h.x, excursion_height(d.alpha, k)}, h.active});
    }

    const long n_active =
        static_cast<long>(std::count_if(d.xi.begin(), d.xi.end(),
                                        [](const XiPoint& p) { return p.active; }));
    if (n_active != f.u || static_cast<long>(d.xi.size()) - n_active != f.v)
        throw std::logic_error("build_tangle_diagram: intersection counts off for " +
                               f.str());

    // Copy offset: stay clear of feet and window boundaries.
    Rat eps = rat(1, 64);
    for (const Rat& c : {d.xA, d.xI})
        for (const Rat& ft : d.alpha.feet) {
            const Rat gap = ft > c ? ft - c : c - ft;
            if (gap / Rat(4) < eps) eps = gap / Rat(4);
        }
    d.copy_eps = eps;
    return d;
}

}  // namespace ratlq::geom
