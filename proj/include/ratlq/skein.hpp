// Skein-module evaluation of rational tangles over the three basis web
// families and the closure formulas giving colored HOMFLY-PT values.

#pragma once

#include <stdexcept>
#include <vector>

#include "laurent.hpp"
#include "tangle.hpp"

namespace ratlq {

// <tau>_j = sum_k C_k X[j,k] with X the tangle orientation. coeffs[k] = C_k.
struct WebVector {
    int color = 0;
    Orientation orientation = Orientation::UP;
    std::vector<LaurentPoly> coeffs;
};

inline WebVector initial_web(int j) {
    if (j < 0) throw std::invalid_argument("initial_web: negative color");
    WebVector w;
    w.color = j;
    w.orientation = Orientation::UP;
    w.coeffs.assign(static_cast<std::size_t>(j) + 1, LaurentPoly::zero());
    w.coeffs[0] = LaurentPoly::one();
    return w;
}

namespace detail {

// Twist rule coefficient for mapping X[j,k] -> X'[j,h].
//  T rules (h >= k):
//   TUP: (-q)^h q^{k^2}        [h;k]+   -> UP
//   TOP: (-q)^h a^k q^{k(k-2j)}[h;k]+   -> RI
//   TRI: (-q)^h a^h q^{k^2-2hj}[h;k]+   -> OP
//  R rules (h <= k):
//   RUP: (-q)^h a^h q^{k(2j-k)-2hj}[j-h;k-h]- -> OP
//   ROP: (-q)^h a^k q^{-k^2}       [j-h;k-h]- -> UP
//   RRI: (-q)^h q^{-k(k-2j)}       [j-h;k-h]- -> RI
inline LaurentPoly twist_coeff(Twist t, Orientation from, int j, int k, int h) {
    const auto mono = [](const BigInt& c, long eq, long ea) {
        return LaurentPoly::term(c, static_cast<std::int32_t>(eq),
                                 static_cast<std::int32_t>(ea));
    };
    const BigInt sign = (h % 2 == 0) ? 1 : -1;
    if (t == Twist::T) {
        if (h < k) return LaurentPoly::zero();
        const LaurentPoly bin = qbinomial_pos(h, k);
        switch (from) {
            case Orientation::UP:
                return mono(sign, h + static_cast<long>(k) * k, 0) * bin;
            case Orientation::OP:
                return mono(sign, h + static_cast<long>(k) * (k - 2 * j), k) * bin;
            case Orientation::RI:
                return mono(sign, h + static_cast<long>(k) * k - 2L * h * j, h) * bin;
        }
    } else {
        if (h > k) return LaurentPoly::zero();
        const LaurentPoly bin = qbinomial_neg(j - h, k - h);
        switch (from) {
            case Orientation::UP:
                return mono(sign, h + static_cast<long>(k) * (2 * j - k) - 2L * h * j, h) * bin;
            case Orientation::OP:
                return mono(sign, h - static_cast<long>(k) * k, k) * bin;
            case Orientation::RI:
                return mono(sign, h - static_cast<long>(k) * (k - 2 * j), 0) * bin;
        }
    }
    throw std::logic_error("twist_coeff: unreachable");
}

}  // namespace detail

// D_h = sum_k C_k * (rule coefficient k -> h). Orientation follows the
// hexagon image of the twist.
inline WebVector apply_twist(const WebVector& w, Twist t) {
    const int j = w.color;
    WebVector r;
    r.color = j;
    // Orientation image: T and R act on orientations as on the hexagon.
    switch (w.orientation) {
        case Orientation::UP:
            r.orientation = (t == Twist::T) ? Orientation::UP : Orientation::OP;
            break;
        case Orientation::OP:
            r.orientation = (t == Twist::T) ? Orientation::RI : Orientation::UP;
            break;
        case Orientation::RI:
            r.orientation = (t == Twist::T) ? Orientation::OP : Orientation::RI;
            break;
    }
    r.coeffs.assign(static_cast<std::size_t>(j) + 1, LaurentPoly::zero());
    for (int k = 0; k <= j; ++k) {
        if (w.coeffs[static_cast<std::size_t>(k)].is_zero()) continue;
        for (int h = 0; h <= j; ++h) {
            const LaurentPoly c = detail::twist_coeff(t, w.orientation, j, k, h);
            if (c.is_zero()) continue;
            r.coeffs[static_cast<std::size_t>(h)] +=
                w.coeffs[static_cast<std::size_t>(k)] * c;
        }
    }
    return r;
}

inline WebVector evaluate_tangle(const Fraction& f, int j) {
    WebVector w = initial_web(j);
    for (Twist t : continued_fraction(f).letters) w = apply_twist(w, t);
    return w;
}

// Cl(T X[j,k]) assembled over the common denominator (q^2;q^2)_j.
//  Cl(TUP[j,k]) ~ (-q)^k q^{2k^2} [j;k]+ (a^2 q^{2-2j-2k}; q^2)_k / (q^2;q^2)_k
//  Cl(TRI[j,k]) ~ (-q)^{k-j} a^{2(k-j)} q^{2(k-j)^2} [j;k]+
//                   (a^2 q^{2-2j-2(j-k)}; q^2)_{j-k} / (q^2;q^2)_{j-k}
inline QSeriesRatio closure_value(const WebVector& w) {
    if (w.orientation == Orientation::OP)
        throw std::invalid_argument("closure_value: companion orientation cannot be OP");
    const int j = w.color;
    LaurentPoly num;
    for (int k = 0; k <= j; ++k) {
        const LaurentPoly& C = w.coeffs[static_cast<std::size_t>(k)];
        if (C.is_zero()) continue;
        LaurentPoly factor;
        if (w.orientation == Orientation::UP) {
            const BigInt sign = (k % 2 == 0) ? 1 : -1;
            factor = LaurentPoly::term(sign, k + 2L * k * k, 0) * qbinomial_pos(j, k) *
                     pochhammer(Monomial{1, static_cast<std::int32_t>(2 - 2 * j - 2 * k), 2},
                                Monomial::q(2), k) *
                     // clear (q^2;q^2)_k against (q^2;q^2)_j
                     qbinomial_pos(j, k) * pochhammer_q2(j - k);
        } else {
            const int d = k - j;  // <= 0
            const BigInt sign = (d % 2 == 0) ? 1 : -1;
            factor = LaurentPoly::term(sign, d + 2L * d * d, 2L * d) * qbinomial_pos(j, k) *
                     pochhammer(Monomial{1, static_cast<std::int32_t>(2 - 2 * j - 2 * (j - k)), 2},
                                Monomial::q(2), j - k) *
                     qbinomial_pos(j, k) * pochhammer_q2(k);
        }
        num += C * factor;
    }
    return QSeriesRatio(num, j);
}

struct HomflyValue {
    ClosureKind kind;
    // Knot values reduce to an exact Laurent polynomial; link values stay
    // as ratios with denominator (q^2;q^2)_j.
    QSeriesRatio value;

    const LaurentPoly& polynomial() const {
        if (kind != ClosureKind::Knot || value.denom_index() != 0)
            throw std::logic_error("HomflyValue: not a polynomial value");
        return value.numerator();
    }
};

// P^{wedge j}_{u/v} = Cl(<T tau_{(u-v)/v}>_j), computed via the companion
// tangle. Knot values are asserted to reduce exactly.
inline HomflyValue homfly(const Fraction& f, int j) {
    const ClosureInfo ci = classify_closure(f);
    const WebVector w = evaluate_tangle(ci.companion, j);
    if (w.orientation != ci.companion_orientation)
        throw std::logic_error("homfly: companion orientation mismatch");
    QSeriesRatio val = closure_value(w);
    HomflyValue hv;
    hv.kind = ci.kind;
    if (ci.kind == ClosureKind::Knot) {
        QSeriesRatio red = val.reduced();
        if (red.denom_index() != 0)
            throw std::logic_error("homfly: knot value failed exact reduction");
        hv.value = red;
    } else {
        hv.value = val;
    }
    return hv;
}

}  // namespace ratlq
