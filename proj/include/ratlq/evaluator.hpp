// Quiver-form generating function evaluation at fixed color, truncated
// series equivalence, colored Jones sums, framing-monomial fitting, and the
// three-route cross verification.

#pragma once

#include <functional>
#include <optional>

#include "quiver.hpp"
#include "skein.hpp"

namespace ratlq {

// Enumerates compositions d of j into m parts, calling f on each.
inline void for_each_composition(int j, int m,
                                 const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> d(static_cast<std::size_t>(m), 0);
    if (m == 0) {
        if (j == 0) f(d);
        return;
    }
    d[0] = j;
    for (;;) {
        f(d);
        // Next composition in colex-ish order: move one unit rightward.
        int i = 0;
        while (i < m && d[static_cast<std::size_t>(i)] == 0) ++i;
        if (i == m - 1) break;
        const int carry = d[static_cast<std::size_t>(i)];
        d[static_cast<std::size_t>(i)] = 0;
        d[0] = carry - 1;
        d[static_cast<std::size_t>(i) + 1] += 1;
    }
}

inline long compositions_count(int j, int m) {
    // C(j + m - 1, m - 1)
    long r = 1;
    for (int i = 1; i < m; ++i) r = r * (j + i) / i;
    return r;
}

// Knot: sum over compositions d of j of (-q)^{S.d} a^{A.d} q^{d Q d^t} [j; d].
// Link: the same divided once by (q^2;q^2)_j.
inline QSeriesRatio quiver_coefficient(const QuiverData& d, int j) {
    const int m = static_cast<int>(d.dim());
    LaurentPoly total;
    for_each_composition(j, m, [&](const std::vector<int>& comp) {
        long sd = 0, ad = 0, qd = 0;
        for (int i = 0; i < m; ++i) {
            sd += d.S[static_cast<std::size_t>(i)] * comp[static_cast<std::size_t>(i)];
            ad += d.A[static_cast<std::size_t>(i)] * comp[static_cast<std::size_t>(i)];
            for (int k = 0; k < m; ++k)
                qd += static_cast<long>(comp[static_cast<std::size_t>(i)]) *
                      d.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                      comp[static_cast<std::size_t>(k)];
        }
        const BigInt sign = (sd % 2 == 0) ? 1 : -1;
        total += LaurentPoly::term(sign, sd + qd, ad) * qmultinomial(comp);
    });
    if (d.kind == QuiverKind::Link) return QSeriesRatio(total, j);
    return QSeriesRatio(total, 0);
}

// Exact equality of the generating functions for all colors <= J, aligned
// by the given basis permutation of d2 (perm[i] = index in d2 of d1's i-th
// basis vector; identity when empty).
inline bool series_equivalent(const QuiverData& d1, const QuiverData& d2, int J,
                              const std::vector<std::size_t>& perm = {}) {
    if (d1.dim() != d2.dim() || d1.kind != d2.kind) return false;
    QuiverData d2p = d2;
    if (!perm.empty()) {
        const std::size_t n = d2.dim();
        QuiverData t = d2;
        for (std::size_t i = 0; i < n; ++i) {
            t.S[i] = d2.S[perm[i]];
            t.A[i] = d2.A[perm[i]];
            t.labels[i] = d2.labels[perm[i]];
            for (std::size_t j2 = 0; j2 < n; ++j2) t.Q[i][j2] = d2.Q[perm[i]][perm[j2]];
        }
        d2p = t;
    }
    for (int j = 0; j <= J; ++j)
        if (quiver_coefficient(d1, j) != quiver_coefficient(d2p, j)) return false;
    return true;
}

// Colored Jones sum: V^j = sum (-q)^{H.d} q^{d Q_J d^t} [j; d] |_{q -> 1/q}.
inline LaurentPoly jones_polynomial_from_data(const std::vector<long>& H,
                                              const std::vector<std::vector<long>>& QJ,
                                              int j) {
    const int m = static_cast<int>(H.size());
    LaurentPoly total;
    for_each_composition(j, m, [&](const std::vector<int>& comp) {
        long hd = 0, qd = 0;
        for (int i = 0; i < m; ++i) {
            hd += H[static_cast<std::size_t>(i)] * comp[static_cast<std::size_t>(i)];
            for (int k = 0; k < m; ++k)
                qd += static_cast<long>(comp[static_cast<std::size_t>(i)]) *
                      QJ[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                      comp[static_cast<std::size_t>(k)];
        }
        const BigInt sign = (hd % 2 == 0) ? 1 : -1;
        total += LaurentPoly::term(sign, hd + qd, 0) * qmultinomial(comp).invert_q();
    });
    return total;
}

// ---------------------------------------------------------------------------
// Framing normalization: all routes agree up to one monomial
// (-q)^{c1 j} a^{c2 j} q^{c3 j^2} with integer constants.

struct FramingFit {
    long c1 = 0, c2 = 0, c3 = 0;

    // The framing monomial at color j.
    LaurentPoly monomial(int j) const {
        const long e = c1 * j + c3 * static_cast<long>(j) * j;
        const BigInt sign = ((c1 * j) % 2 == 0) ? 1 : -1;
        return LaurentPoly::term(sign, e, c2 * j);
    }
};

// Single-monomial quotient x / y, if it exists.
inline std::optional<Monomial> monomial_quotient(const LaurentPoly& x,
                                                 const LaurentPoly& y) {
    if (x.is_zero() || y.is_zero()) return std::nullopt;
    if (x.term_count() != y.term_count()) return std::nullopt;
    const auto& tx = *x.terms().begin();
    const auto& ty = *y.terms().begin();
    if (tx.second % ty.second != 0 && ty.second % tx.second != 0) return std::nullopt;
    // candidate factor from the leading terms
    Monomial m;
    m.eq = checked_exp_add(tx.first.eq, -std::int64_t(ty.first.eq));
    m.ea = checked_exp_add(tx.first.ea, -std::int64_t(ty.first.ea));
    if (tx.second == ty.second)
        m.coeff = 1;
    else if (tx.second == -ty.second)
        m.coeff = -1;
    else
        return std::nullopt;
    if (y * LaurentPoly(m) == x) return m;
    return std::nullopt;
}

// Fits (c1, c2, c3) from the monomial quotients at colors 1 and 2.
inline std::optional<FramingFit> fit_framing(const Monomial& q1, const Monomial& q2) {
    FramingFit f;
    f.c2 = q1.ea;
    if (q2.ea != 2 * f.c2) return std::nullopt;
    // exponents: e1 = c1 + c3, e2 = 2 c1 + 4 c3
    const long e1 = q1.eq, e2 = q2.eq;
    const long twoc3 = e2 - 2 * e1;
    if (twoc3 % 2 != 0) return std::nullopt;
    f.c3 = twoc3 / 2;
    f.c1 = e1 - f.c3;
    // signs: (-1)^{c1 j}
    const bool s1 = q1.coeff == -1;
    const bool s2 = q2.coeff == -1;
    if (s1 != (((f.c1 % 2) + 2) % 2 == 1)) return std::nullopt;
    if (s2) return std::nullopt;  // (-1)^{2 c1} = +1 always
    return f;
}

// ---------------------------------------------------------------------------
// Cross-route verification.

struct RouteValues {
    std::string name;
    std::vector<QSeriesRatio> values;  // index = color j
};

struct CrossVerifyReport {
    Fraction fraction{2, 1};
    int J = 0;
    bool all_pass = false;
    std::vector<std::string> route_names;
    // framing fit of each non-reference route against the skein route
    std::vector<FramingFit> framings;
    std::vector<std::string> failures;  // human-readable mismatch notes
};

struct MismatchReport : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ratio division x / y as a monomial, via cross-multiplication.
inline std::optional<Monomial> ratio_monomial_quotient(const QSeriesRatio& x,
                                                       const QSeriesRatio& y) {
    // x / y = m  iff  x.num * (q^2;q^2)_{y.den} = m * y.num * (q^2;q^2)_{x.den}
    return monomial_quotient(x.numerator() * pochhammer_q2(y.denom_index()),
                             y.numerator() * pochhammer_q2(x.denom_index()));
}

inline CrossVerifyReport cross_verify(const Fraction& f, int J,
                                      bool throw_on_mismatch = false) {
    CrossVerifyReport rep;
    rep.fraction = f;
    rep.J = J;
    const ClosureInfo ci = classify_closure(f);

    std::vector<RouteValues> routes;
    {
        RouteValues rv;
        rv.name = "skein";
        for (int j = 0; j <= J; ++j) rv.values.push_back(homfly(f, j).value);
        routes.push_back(std::move(rv));
    }
    const bool is_knot = ci.kind == ClosureKind::Knot;
    const QuiverData alg = apply_corrections(is_knot ? knot_quiver_algebraic(f)
                                                     : link_quiver_algebraic(f));
    {
        RouteValues rv;
        rv.name = "quiver-alg";
        for (int j = 0; j <= J; ++j) rv.values.push_back(quiver_coefficient(alg, j));
        routes.push_back(std::move(rv));
    }
    const QuiverData geo =
        apply_corrections(is_knot ? knot_quiver_geometric(f) : link_quiver_geometric(f));
    {
        RouteValues rv;
        rv.name = "quiver-geo";
        for (int j = 0; j <= J; ++j) rv.values.push_back(quiver_coefficient(geo, j));
        routes.push_back(std::move(rv));
    }

    rep.all_pass = true;
    for (std::size_t r = 1; r < routes.size(); ++r) {
        rep.route_names.push_back(routes[r].name);
        FramingFit fit;
        bool fitted = false;
        if (J >= 2) {
            const auto m1 = ratio_monomial_quotient(routes[0].values[1], routes[r].values[1]);
            const auto m2 = ratio_monomial_quotient(routes[0].values[2], routes[r].values[2]);
            if (m1 && m2) {
                const auto ff = fit_framing(*m1, *m2);
                if (ff) {
                    fit = *ff;
                    fitted = true;
                }
            }
        } else if (J >= 1) {
            const auto m1 = ratio_monomial_quotient(routes[0].values[1], routes[r].values[1]);
            if (m1 && m1->ea == 0 && m1->eq == 0 && m1->coeff == 1) fitted = true;
        } else {
            fitted = true;
        }
        if (!fitted) {
            rep.all_pass = false;
            rep.failures.push_back(routes[r].name + ": no framing monomial fits at j=1,2");
            continue;
        }
        rep.framings.push_back(fit);
        for (int j = 0; j <= J; ++j) {
            const QSeriesRatio want(routes[r].values[static_cast<std::size_t>(j)].numerator() *
                                        fit.monomial(j),
                                    routes[r].values[static_cast<std::size_t>(j)].denom_index());
            if (!(routes[0].values[static_cast<std::size_t>(j)] == want)) {
                rep.all_pass = false;
                rep.failures.push_back(routes[r].name + ": mismatch at j=" +
                                       std::to_string(j) + " for " + f.str());
                break;
            }
        }
    }
    if (throw_on_mismatch && !rep.all_pass)
        throw MismatchReport("cross_verify failed for " + f.str() + ": " +
                             (rep.failures.empty() ? "?" : rep.failures.front()));
    return rep;
}

}  // namespace ratlq
