// Geometric evaluation of the linear and quadratic forms attached to a
// tangle diagram: winding numbers of the gamma loops in the punctured
// plane and braid classes of the configuration-space loops.

#pragma once

#include <vector>

#include "loops.hpp"

namespace ratlq::geom {

// Orientation conventions fixed by the golden-matrix calibration.
struct FormFlags {
    int wind_sign = +1;      // global sign of the winding homomorphisms
    int phi_sign = +1;       // global sign of the braid abelianization
    bool slide_above = true; // which side the mixed-return slide runs on
};

inline constexpr FormFlags kFormFlags{};

namespace detail {

inline bool same_axis(const TangleDiagram& d, std::size_t i, std::size_t j) {
    return d.xi[i].active == d.xi[j].active;
}

inline Rat axis_x(const TangleDiagram& d, std::size_t i) {
    return d.xi[i].active ? d.xA : d.xI;
}

inline Crossing top_crossing(const FeetChain& alpha, const Rat& line_x) {
    auto cs = crossings_with_vertical(alpha, line_x);
    if (cs.empty()) throw std::logic_error("top_crossing: line misses the curve");
    std::size_t best = 0;
    for (std::size_t t = 1; t < cs.size(); ++t)
        if (cs[t].y > cs[best].y) best = t;
    return cs[best];
}

}  // namespace detail

// Winding vector of the M-loop gamma_{i,j} = eta_{i,j} * etabar_{j,i}.
inline WindRaw gamma_wind(const TangleDiagram& d, std::size_t i, std::size_t j) {
    WindRaw w = ray_crossings(walk_path(d.alpha, d.xi[i].at, d.xi[j].at), d.ppos);
    if (!detail::same_axis(d, i, j)) {
        // Mixed axes: return via the top crossings; the vertical legs do not
        // wind, the slide along alpha does.
        const Crossing tj = detail::top_crossing(d.alpha, detail::axis_x(d, j));
        const Crossing ti = detail::top_crossing(d.alpha, detail::axis_x(d, i));
        add_wind(w, ray_crossings(walk_path(d.alpha, tj, ti), d.ppos));
    }
    return w;
}

// Configuration-space loop gamma~_{j,i}: the first component starts at
// xi_j and chases toward xi_i over parallel copies of the axes. Returns the
// raw braid letter count and the collapsed loop's ray crossings.
inline Conf2Raw conf2_loop(const TangleDiagram& d, std::size_t j, std::size_t i,
                           const FormFlags& flags = kFormFlags) {
    const Rat eps = d.copy_eps;
    // Placement: the lower point (same axis) or the active point (mixed
    // axes) sits on the left copy of its axis.
    bool j_left;
    if (detail::same_axis(d, i, j))
        j_left = d.xi[j].at.y < d.xi[i].at.y;
    else
        j_left = d.xi[j].active;
    const bool i_left = !j_left ? true : false;

    auto twin = [&](std::size_t t, bool left) {
        Crossing c = d.xi[t].at;
        c.x = detail::axis_x(d, t) + (left ? -eps : eps);
        return c;
    };
    const Crossing p_start = twin(j, j_left);
    const Crossing p_other = twin(i, i_left);
    const Crossing target = twin(i, !i_left);

    auto pt = [](const Crossing& c) { return Pt{c.x, c.y}; };

    // Which of the two xi_i twins does the walk from xi_j meet first?
    int arrive_dir;
    if (p_start.exc == d.xi[i].at.exc) {
        arrive_dir = sgn(d.xi[i].at.x - p_start.x);
    } else {
        const int td = travel_dir(d.alpha, d.xi[i].at.exc);
        arrive_dir = (p_start.exc < d.xi[i].at.exc) ? td : -td;
    }
    const bool other_first = sgn(p_other.x - target.x) != arrive_dir;

    // Return route from the target twin back to p_start's position; for
    // mixed axes this runs over the tops with the slide pushed off alpha.
    auto return_path = [&](const Crossing& from) {
        Path p;
        if (detail::same_axis(d, i, j)) {
            p = vertical_path(from.x, from.y, p_start.y);
        } else {
            const Crossing top_from = detail::top_crossing(d.alpha, from.x);
            const Crossing top_to = detail::top_crossing(d.alpha, p_start.x);
            const Rat mu = eps / rat(16) * Rat(flags.slide_above ? 1 : -1);
            p.push_back(pt(from));
            p.push_back(Pt{from.x, top_from.y});
            for (const Pt& q :
                 shifted(walk_path(d.alpha, top_from, top_to), mu))
                p.push_back(q);
            p.push_back(Pt{p_start.x, top_to.y});
            p.push_back(Pt{p_start.x, p_start.y});
        }
        return p;
    };

    std::vector<Stage> stages;
    if (!other_first) {
        stages.push_back(Stage{1, walk_path(d.alpha, p_start, target), pt(p_other)});
        stages.push_back(Stage{1, return_path(target), pt(p_other)});
    } else {
        // The chased point hops forward first, then the chaser walks onto
        // its old spot, then the chased completes the return.
        stages.push_back(Stage{2, walk_path(d.alpha, p_other, target), pt(p_start)});
        stages.push_back(Stage{1, walk_path(d.alpha, p_start, p_other), pt(target)});
        stages.push_back(Stage{2, return_path(target), pt(p_other)});
    }
    return evaluate_stages(stages, d.ppos);
}

struct TangleForms {
    // Basis: active points in prec order, then inactive points in prec order.
    std::vector<long> S, A;
    std::vector<std::vector<long>> Q;
    std::vector<bool> active;
    std::vector<std::size_t> xi_of_basis;  // basis index -> position in d.xi
};

inline TangleForms tangle_forms(const TangleDiagram& d,
                                const FormFlags& flags = kFormFlags) {
    const std::size_t n = d.xi.size();
    std::vector<std::size_t> order;
    for (std::size_t t = 0; t < n; ++t)
        if (d.xi[t].active) order.push_back(t);
    for (std::size_t t = 0; t < n; ++t)
        if (!d.xi[t].active) order.push_back(t);

    // Puncture name -> position index.
    std::array<int, 3> idx{};  // [X+ , X-, Y]
    for (int s = 0; s < 3; ++s) {
        switch (d.state.puncture_order[static_cast<std::size_t>(s)]) {
            case Puncture::Xplus: idx[0] = s; break;
            case Puncture::Xminus: idx[1] = s; break;
            case Puncture::Y: idx[2] = s; break;
        }
    }
    const bool z_is_xplus = d.state.middle() == Puncture::Xplus;
    const std::size_t omega = d.omega();
    const bool omega_active = d.xi[omega].active;
    const int W = flags.wind_sign;
    const int F = flags.phi_sign;

    TangleForms out;
    out.S.resize(n);
    out.A.resize(n);
    out.Q.assign(n, std::vector<long>(n, 0));
    out.active.resize(n);
    out.xi_of_basis = order;

    auto delta_pair = [&](bool a_active) {
        // delta_{i,A} delta_{omega,I} - delta_{i,I} delta_{omega,A}
        const long d1 = (a_active && !omega_active) ? 1 : 0;
        const long d2 = (!a_active && omega_active) ? 1 : 0;
        return d1 - d2;
    };

    for (std::size_t b = 0; b < n; ++b) {
        const std::size_t t = order[b];
        const bool act = d.xi[t].active;
        out.active[b] = act;
        const WindRaw w = gamma_wind(d, t, omega);
        const long wXp = W * w[static_cast<std::size_t>(idx[0])];
        const long wXm = W * w[static_cast<std::size_t>(idx[1])];
        const long wY = W * w[static_cast<std::size_t>(idx[2])];
        const long dp = delta_pair(act);
        out.S[b] = wXp + wXm + wY + dp;
        out.A[b] = 2 * wXp + (z_is_xplus ? dp : 0);
        out.Q[b][b] = wXm + wY - 3 * wXp - (z_is_xplus ? 2 * dp : 0);
    }

    for (std::size_t bi = 0; bi < n; ++bi)
        for (std::size_t bj = 0; bj < n; ++bj) {
            if (bi == bj) continue;
            const std::size_t ti = order[bi], tj = order[bj];
            const Conf2Raw c = conf2_loop(d, tj, ti, flags);
            long q = out.Q[bi][bi] + F * c.phi -
                     2 * W * c.psi[static_cast<std::size_t>(idx[0])];
            if (z_is_xplus) {
                const long di = (d.xi[ti].active && !d.xi[tj].active) ? 1 : 0;
                const long dj = (d.xi[tj].active && !d.xi[ti].active) ? 1 : 0;
                q += di - dj;
            }
            out.Q[bi][bj] = q;
        }
    return out;
}

}  // namespace ratlq::geom
