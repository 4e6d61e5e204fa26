// Exact half-twist homeomorphisms swapping two adjacent punctures, built
// from three convex fan relocations, and the resulting construction of the
// tangle arcs alpha_{u/v} by twisting the trivial arc.

#pragma once

#include <array>
#include <vector>

#include "../tangle.hpp"
#include "chain.hpp"
#include "exact.hpp"

namespace ratlq::geom {

// The three punctures sit at fixed x positions 1, 2, 3; names travel with
// the state machine.
inline std::vector<Rat> standard_punctures() { return {rat(1), rat(2), rat(3)}; }

// Half-twist swapping the punctures at positions (pa, pb), pa < pb adjacent.
// under == true drags the pa puncture below the pb puncture (and pb above),
// under == false is the mirror image. Applies to an arc polyline.
inline std::vector<Pt> apply_half_twist(const std::vector<Pt>& poly, const Rat& pa,
                                        const Rat& pb, bool under) {
    // Geometry parameters, scaled by the gap (gap is 1 for our pairs).
    const Rat g = pb - pa;
    const Rat w = g / rat(8);
    const Rat D = g / rat(2);
    const Rat e = g / rat(4);
    const Rat d2 = g / rat(8);
    const Rat d = g / rat(7);  // parking depth, strictly below the P1 top edge at pb

    const int s = under ? -1 : +1;  // flip the construction through the axis
    auto Y = [&](const Rat& y) { return Rat(s) * y; };

    const Pt A{pa, Rat(0)}, B{pb, Rat(0)};
    const Pt park{pb, Y(-d)};

    // Step 1: move A to the parking spot past B (polygon excludes B).
    ConvexPolygon P1;
    if (s > 0) {
        P1.v = {Pt{pa - w, Y(-D)}, Pt{pb + w, Y(-D)}, Pt{pb + w, Y(-d2)},
                Pt{pa - w, Y(e)}};
    } else {
        // Mirrored polygon must stay counterclockwise.
        P1.v = {Pt{pa - w, Y(e)}, Pt{pb + w, Y(-d2)}, Pt{pb + w, Y(-D)},
                Pt{pa - w, Y(-D)}};
    }
    // Step 2: move B to A's old home through a band missing the parking spot.
    ConvexPolygon P2;
    if (s > 0) {
        P2.v = {Pt{pa - w, Y(-d2 / 2)}, Pt{pb + w, Y(-d2 / 2)}, Pt{pb + w, Y(e)},
                Pt{pa - w, Y(e)}};
    } else {
        P2.v = {Pt{pa - w, Y(e)}, Pt{pb + w, Y(e)}, Pt{pb + w, Y(-d2 / 2)},
                Pt{pa - w, Y(-d2 / 2)}};
    }
    // Step 3: lift the parked puncture onto B's old home; polygon avoids pa.
    const Rat mid = pa + g / rat(2);
    ConvexPolygon P3;
    if (s > 0) {
        P3.v = {Pt{mid, Y(-D)}, Pt{pb + w, Y(-D)}, Pt{pb + w, Y(e)}, Pt{mid, Y(e)}};
    } else {
        P3.v = {Pt{mid, Y(e)}, Pt{pb + w, Y(e)}, Pt{pb + w, Y(-D)}, Pt{mid, Y(-D)}};
    }

    FanRelocation f1(P1, A, park);
    FanRelocation f2(P2, B, A);
    FanRelocation f3(P3, park, B);
    return f3.apply(f2.apply(f1.apply(poly)));
}

// Global handedness convention for the two twist letters, fixed by the
// golden-matrix calibration: with these settings the torus-tangle data and
// the figure-eight companion matrix come out exactly as printed.
struct TwistConventions {
    bool t_under = false;
    bool r_under = true;
    int trivial_side = -1;  // side of the initial tau_{0/1} excursion
};

inline constexpr TwistConventions kConventions{};

// Applies one tangle twist letter to an arc chain: T twists the punctures
// at positions (1,2), R at (2,3).
inline FeetChain apply_letter(const FeetChain& arc, Twist letter,
                              const TwistConventions& conv = kConventions) {
    const std::vector<Rat> punct = standard_punctures();
    std::vector<Pt> poly = realize(arc);
    if (letter == Twist::T)
        poly = apply_half_twist(poly, rat(1), rat(2), conv.t_under);
    else
        poly = apply_half_twist(poly, rat(2), rat(3), conv.r_under);
    return extract_arc(poly, punct);
}

// The trivial tangle's arc: from the middle puncture (X-) to the right
// puncture (X+), one excursion.
inline FeetChain trivial_arc(const TwistConventions& conv = kConventions) {
    FeetChain c;
    c.closed = false;
    c.feet = {rat(2), rat(3)};
    c.first_side = conv.trivial_side;
    return c;
}

// alpha_{u/v}: fold the twist word over the trivial arc.
inline FeetChain build_alpha(const TwistWord& word,
                             const TwistConventions& conv = kConventions) {
    FeetChain c = trivial_arc(conv);
    for (Twist t : word.letters) c = apply_letter(c, t, conv);
    return c;
}

}  // namespace ratlq::geom
