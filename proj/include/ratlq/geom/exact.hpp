// Exact rational plane primitives for the diagram engine.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace ratlq::geom {

using Rat = boost::rational<boost::multiprecision::cpp_int>;

inline Rat rat(long n, long d = 1) {
    return Rat(boost::multiprecision::cpp_int(n), boost::multiprecision::cpp_int(d));
}

struct Pt {
    Rat x, y;
    friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
};

inline int sgn(const Rat& v) { return v > Rat(0) ? 1 : (v < Rat(0) ? -1 : 0); }

// Orientation determinant of (b-a, c-a).
inline Rat cross(const Pt& a, const Pt& b, const Pt& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// A convex polygon given in counterclockwise order.
struct ConvexPolygon {
    std::vector<Pt> v;

    bool contains_strict(const Pt& p) const {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Pt& a = v[i];
            const Pt& b = v[(i + 1) % v.size()];
            if (cross(a, b, p) <= Rat(0)) return false;
        }
        return true;
    }
    bool contains_closed(const Pt& p) const {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Pt& a = v[i];
            const Pt& b = v[(i + 1) % v.size()];
            if (cross(a, b, p) < Rat(0)) return false;
        }
        return true;
    }
};

// Affine map determined by a triangle pair: (a,b,c) -> (a2,b,c) where only
// the first vertex moves. Solves barycentric coordinates exactly.
struct Affine {
    // p -> M p + t
    Rat m00, m01, m10, m11;
    Pt t;

    Pt apply(const Pt& p) const {
        return Pt{m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y};
    }

    static Affine from_triangles(const Pt& a, const Pt& b, const Pt& c,
                                 const Pt& a2, const Pt& b2, const Pt& c2) {
        // Solve M*(b-a)+.. : columns u=b-a, v=c-a map to u2=b2-a2, v2=c2-a2.
        const Rat ux = b.x - a.x, uy = b.y - a.y;
        const Rat vx = c.x - a.x, vy = c.y - a.y;
        const Rat det = ux * vy - uy * vx;
        if (det == Rat(0)) throw std::logic_error("degenerate triangle");
        const Rat u2x = b2.x - a2.x, u2y = b2.y - a2.y;
        const Rat v2x = c2.x - a2.x, v2y = c2.y - a2.y;
        Affine f;
        // M = [u2 v2] * [u v]^{-1}
        f.m00 = (u2x * vy - v2x * uy) / det;
        f.m01 = (v2x * ux - u2x * vx) / det;
        f.m10 = (u2y * vy - v2y * uy) / det;
        f.m11 = (v2y * ux - u2y * vx) / det;
        f.t = Pt{a2.x - (f.m00 * a.x + f.m01 * a.y), a2.y - (f.m10 * a.x + f.m11 * a.y)};
        return f;
    }
};

// Piecewise-affine homeomorphism of the plane supported on a convex polygon:
// the fan triangulation from an interior center is re-anchored at a new
// interior center; everything outside the polygon is fixed. Used as the
// building block for puncture-swap homeomorphisms.
class FanRelocation {
  public:
    FanRelocation(ConvexPolygon poly, Pt center_old, Pt center_new)
        : poly_(std::move(poly)), c0_(center_old), c1_(center_new) {
        if (!poly_.contains_strict(c0_) || !poly_.contains_strict(c1_))
            throw std::invalid_argument("FanRelocation: centers must be interior");
        const std::size_t n = poly_.v.size();
        maps_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Pt& a = poly_.v[i];
            const Pt& b = poly_.v[(i + 1) % n];
            maps_.push_back(Affine::from_triangles(c0_, a, b, c1_, a, b));
        }
    }

    // Applies the map to a polyline, subdividing segments at fan-cell
    // boundaries so each output piece is the exact affine image.
    std::vector<Pt> apply(const std::vector<Pt>& polyline) const {
        std::vector<Pt> out;
        if (polyline.empty()) return out;
        out.push_back(map_point(polyline.front()));
        for (std::size_t i = 0; i + 1 < polyline.size(); ++i)
            apply_segment(polyline[i], polyline[i + 1], out);
        return out;
    }

    Pt map_point(const Pt& p) const {
        const int cell = locate(p);
        if (cell < 0) return p;
        return maps_[static_cast<std::size_t>(cell)].apply(p);
    }

  private:
    ConvexPolygon poly_;
    Pt c0_, c1_;
    std::vector<Affine> maps_;

    // Fan cell index containing p (triangle c0, v_i, v_{i+1}); -1 if outside
    // the polygon. Points on internal fan edges may land in either adjacent
    // cell; both maps agree there.
    int locate(const Pt& p) const {
        if (!poly_.contains_closed(p)) return -1;
        const std::size_t n = poly_.v.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Pt& a = poly_.v[i];
            const Pt& b = poly_.v[(i + 1) % n];
            // Inside triangle (c0, a, b), counterclockwise.
            if (cross(c0_, a, p) >= Rat(0) && cross(a, b, p) >= Rat(0) &&
                cross(b, c0_, p) >= Rat(0))
                return static_cast<int>(i);
        }
        return -1;
    }

    // All boundary lines that may subdivide a segment: polygon edges and fan
    // spokes. Collect intersection parameters, split, map each midpoint's cell.
    void apply_segment(const Pt& p, const Pt& q, std::vector<Pt>& out) const {
        std::vector<Rat> cuts;
        cuts.push_back(Rat(0));
        cuts.push_back(Rat(1));
        const std::size_t n = poly_.v.size();
        auto add_line_cut = [&](const Pt& a, const Pt& b) {
            // Parameter t where p + t(q-p) crosses line ab.
            const Rat fp = cross(a, b, p);
            const Rat fq = cross(a, b, q);
            if (fp == fq) return;
            const Rat t = fp / (fp - fq);
            if (t > Rat(0) && t < Rat(1)) cuts.push_back(t);
        };
        for (std::size_t i = 0; i < n; ++i) {
            add_line_cut(poly_.v[i], poly_.v[(i + 1) % n]);  // edges
            add_line_cut(c0_, poly_.v[i]);                   // spokes
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        auto at = [&](const Rat& t) {
            return Pt{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
        };
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            const Pt sub_end = at(cuts[k + 1]);
            out.push_back(map_point(sub_end));
        }
    }
};

}  // namespace ratlq::geom
