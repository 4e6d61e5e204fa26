// Test-only brute-force polynomial oracle, independent of the library's
// LaurentPoly implementation path. Coefficients are plain long long; the
// oracle is only used on small inputs.

#pragma once

#include <map>
#include <utility>

namespace oracle {

// (eq, ea) -> coefficient
using Poly = std::map<std::pair<long, long>, long long>;

inline Poly mono(long long c, long eq, long ea) {
    Poly p;
    if (c != 0) p[{eq, ea}] = c;
    return p;
}

inline Poly add(const Poly& x, const Poly& y) {
    Poly r = x;
    for (auto& [e, c] : y) {
        r[e] += c;
        if (r[e] == 0) r.erase(e);
    }
    return r;
}

inline Poly mul(const Poly& x, const Poly& y) {
    Poly r;
    for (auto& [ex, cx] : x)
        for (auto& [ey, cy] : y) {
            auto key = std::make_pair(ex.first + ey.first, ex.second + ey.second);
            r[key] += cx * cy;
            if (r[key] == 0) r.erase(key);
        }
    return r;
}

// prod_{i=0}^{n-1} (1 - x * y^i) with x, y monomials.
inline Poly pochhammer(long long xc, long xeq, long xea, long yeq, long yea, int n) {
    Poly r = mono(1, 0, 0);
    for (int i = 0; i < n; ++i) {
        Poly f = add(mono(1, 0, 0), mono(-xc, xeq + i * yeq, xea + i * yea));
        r = mul(r, f);
    }
    return r;
}

}  // namespace oracle
