// Loop machinery: rectilinear paths along chains, signed ray-crossing
// winding counts, and exact two-strand braid classes for configuration
// space loops.

#pragma once

#include <array>
#include <vector>

#include "diagram.hpp"

namespace ratlq::geom {

// Raw signed ray crossings per puncture position. The convention here is
// "+1 when passing above the puncture moving rightward"; the caller applies
// the global orientation sign.
using WindRaw = std::array<long, 3>;

inline void add_wind(WindRaw& w, const WindRaw& o) {
    for (int i = 0; i < 3; ++i) w[static_cast<std::size_t>(i)] += o[static_cast<std::size_t>(i)];
}

// Path = rectilinear polyline with exact vertices.
using Path = std::vector<Pt>;

inline WindRaw ray_crossings(const Path& path, const std::array<Rat, 3>& ppos) {
    WindRaw w{0, 0, 0};
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        const Pt& a = path[s];
        const Pt& b = path[s + 1];
        if (a.y != b.y) continue;  // vertical or connector: x is constant there
        if (a.y <= Rat(0)) continue;
        for (int i = 0; i < 3; ++i) {
            const Rat& p = ppos[static_cast<std::size_t>(i)];
            if ((a.x < p && p < b.x)) w[static_cast<std::size_t>(i)] += 1;
            if ((b.x < p && p < a.x)) w[static_cast<std::size_t>(i)] -= 1;
        }
    }
    return w;
}

// Walks along the chain between two vertical-line crossings, emitting the
// exact polyline (tent tops and through segments).
inline Path walk_path(const FeetChain& c, const Crossing& from, const Crossing& to) {
    Path p;
    auto h = [&](std::size_t k) { return excursion_height(c, k); };
    p.push_back(Pt{from.x, h(from.exc)});
    if (from.exc == to.exc) {
        p.push_back(Pt{to.x, h(to.exc)});
        return p;
    }
    if (from.exc < to.exc) {
        for (std::size_t k = from.exc; k < to.exc; ++k) {
            const Rat foot = c.foot(k + 1);
            p.push_back(Pt{foot, h(k)});
            p.push_back(Pt{foot, h(k + 1)});
        }
    } else {
        for (std::size_t k = from.exc; k > to.exc; --k) {
            const Rat foot = c.feet[k];
            p.push_back(Pt{foot, h(k)});
            p.push_back(Pt{foot, h(k - 1)});
        }
    }
    p.push_back(Pt{to.x, h(to.exc)});
    return p;
}

inline Path vertical_path(const Rat& x, const Rat& y1, const Rat& y2) {
    return Path{Pt{x, y1}, Pt{x, y2}};
}

inline Path shifted(Path p, const Rat& dy) {
    for (Pt& q : p) q.y += dy;
    return p;
}

// One stage of a configuration-space loop: one component moves along a
// polyline, the other rests. Component labels stay fixed across stages.
struct Stage {
    int mover = 1;  // 1 or 2
    Path moving;
    Pt resting;
};

struct Conf2Raw {
    long phi = 0;          // raw braid letters, pre-sign
    WindRaw psi{0, 0, 0};  // raw ray crossings of the collapsed loop
};

// Counts signed strand crossings over the concatenated stages. Crossings
// sit where x_1 - x_2 changes sign; zero runs at stage boundaries count as
// one crossing when the sign genuinely flips across them. The crossing
// contribution sgn(d_after) * sgn(y_1 - y_2) is invariant under relabeling
// the components.
inline Conf2Raw evaluate_stages(const std::vector<Stage>& stages,
                                const std::array<Rat, 3>& ppos) {
    Conf2Raw r;
    // Configuration trace: positions of both components at breakpoints.
    struct Config {
        Pt p1, p2;
    };
    std::vector<Config> trace;
    for (const Stage& st : stages) {
        add_wind(r.psi, ray_crossings(st.moving, ppos));
        for (std::size_t k = 0; k < st.moving.size(); ++k) {
            Config c;
            if (st.mover == 1) {
                c.p1 = st.moving[k];
                c.p2 = st.resting;
            } else {
                c.p1 = st.resting;
                c.p2 = st.moving[k];
            }
            if (!trace.empty()) {
                const Config& prev = trace.back();
                if (k == 0 && (prev.p1 != c.p1 || prev.p2 != c.p2))
                    throw std::logic_error("evaluate_stages: discontinuous stages");
            }
            if (trace.empty() || k > 0) trace.push_back(c);
        }
    }
    if (trace.size() < 2) return r;

    long phi = 0;
    int prev_sign = sgn(trace.front().p1.x - trace.front().p2.x);
    if (prev_sign == 0)
        throw std::logic_error("evaluate_stages: basepoints vertically aligned");
    std::optional<int> pending_ydiff;  // y-order inside a zero run
    for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
        const Config& a = trace[k];
        const Config& b = trace[k + 1];
        const Rat da = a.p1.x - a.p2.x;
        const Rat db = b.p1.x - b.p2.x;
        const int sa = sgn(da), sb = sgn(db);
        // Interior crossing: strict sign change within the segment.
        if (sa != 0 && sb != 0 && sa != sb) {
            const Rat t = da / (da - db);
            const Rat y1 = a.p1.y + t * (b.p1.y - a.p1.y);
            const Rat y2 = a.p2.y + t * (b.p2.y - a.p2.y);
            if (y1 == y2) throw std::logic_error("evaluate_stages: components collide");
            phi += static_cast<long>(sb) * sgn(y1 - y2);
            prev_sign = sb;
            pending_ydiff.reset();
            continue;
        }
        if (sb == 0) {
            const int yd = sgn(b.p1.y - b.p2.y);
            if (yd == 0) throw std::logic_error("evaluate_stages: components collide");
            if (pending_ydiff && *pending_ydiff != yd)
                throw std::logic_error("evaluate_stages: y-order flips inside a zero run");
            pending_ydiff = yd;
            continue;
        }
        // sb != 0 here.
        if (sa == 0) {
            if (!pending_ydiff)
                throw std::logic_error("evaluate_stages: zero run without y-order");
            if (sb != prev_sign) phi += static_cast<long>(sb) * (*pending_ydiff);
            pending_ydiff.reset();
        }
        prev_sign = sb;
    }
    if (sgn(trace.back().p1.x - trace.back().p2.x) == 0)
        throw std::logic_error("evaluate_stages: loop ends vertically aligned");
    r.phi = phi;
    return r;
}

}  // namespace ratlq::geom
