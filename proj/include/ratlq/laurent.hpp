// Exact Laurent polynomial arithmetic in q and a with arbitrary-precision
// integer coefficients, plus the q-Pochhammer / quantum multinomial layer
// used throughout the quiver and skein computations.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ratlq {

using BigInt = boost::multiprecision::cpp_int;

// Exponent pair (e_q, e_a) of a monomial q^{e_q} a^{e_a}. Exponents are
// signed 32-bit; arithmetic that would leave that range throws instead of
// wrapping.
struct ExpPair {
    std::int32_t eq = 0;
    std::int32_t ea = 0;

    friend bool operator<(const ExpPair& x, const ExpPair& y) {
        return x.eq != y.eq ? x.eq < y.eq : x.ea < y.ea;
    }
    friend bool operator==(const ExpPair& x, const ExpPair& y) {
        return x.eq == y.eq && x.ea == y.ea;
    }
};

inline std::int32_t checked_exp_add(std::int64_t x, std::int64_t y) {
    const std::int64_t s = x + y;
    if (s < INT32_MIN || s > INT32_MAX)
        throw std::overflow_error("monomial exponent overflow");
    return static_cast<std::int32_t>(s);
}

// A monomial c * q^{e_q} a^{e_a}; the building block for Pochhammer factors.
struct Monomial {
    BigInt coeff = 1;
    std::int32_t eq = 0;
    std::int32_t ea = 0;

    static Monomial q(std::int32_t e) { return Monomial{1, e, 0}; }
    static Monomial a(std::int32_t e) { return Monomial{1, 0, e}; }

    Monomial operator*(const Monomial& o) const {
        return Monomial{coeff * o.coeff, checked_exp_add(eq, o.eq),
                        checked_exp_add(ea, o.ea)};
    }
    Monomial pow(std::int64_t n) const {
        if (n < 0) throw std::invalid_argument("Monomial::pow: negative power");
        Monomial r;
        for (std::int64_t i = 0; i < n; ++i) r = r * *this;
        return r;
    }
};

// Element of Z[q^{+-1}, a^{+-1}]. Terms are kept in a sorted map keyed by
// exponent pair; zero coefficients are never stored.
class LaurentPoly {
  public:
    using TermMap = std::map<ExpPair, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(const BigInt& c) {
        if (c != 0) terms_[ExpPair{0, 0}] = c;
    }
    explicit LaurentPoly(long c) : LaurentPoly(BigInt(c)) {}
    explicit LaurentPoly(const Monomial& m) {
        if (m.coeff != 0) terms_[ExpPair{m.eq, m.ea}] = m.coeff;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(BigInt(1)); }
    // q^{eq} a^{ea} with coefficient c. Exponents are range-checked.
    static LaurentPoly term(const BigInt& c, std::int64_t eq, std::int64_t ea) {
        LaurentPoly p;
        if (c != 0)
            p.terms_[ExpPair{checked_exp_add(eq, 0), checked_exp_add(ea, 0)}] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == ExpPair{0, 0} &&
               terms_.begin()->second == 1;
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Returns the unique term as a monomial if the polynomial is +-q^i a^j
    // (any single term); nullopt otherwise.
    std::optional<Monomial> as_monomial() const {
        if (terms_.size() != 1) return std::nullopt;
        const auto& [e, c] = *terms_.begin();
        return Monomial{c, e.eq, e.ea};
    }

    void add_term(const BigInt& c, std::int32_t eq, std::int32_t ea) {
        if (c == 0) return;
        const ExpPair key{eq, ea};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(c, e.eq, e.ea);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(-c, e.eq, e.ea);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) {
        x += y;
        return x;
    }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) {
        x -= y;
        return x;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
        LaurentPoly r;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_)
                r.add_term(cx * cy, checked_exp_add(ex.eq, ey.eq),
                           checked_exp_add(ex.ea, ey.ea));
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) {
        return !(x == y);
    }

    // Substitute q -> q^{-1} (negates every q exponent).
    LaurentPoly invert_q() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[ExpPair{-e.eq, e.ea}] = c;
        return r;
    }
    // Substitute a -> a^{-1}.
    LaurentPoly invert_a() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[ExpPair{e.eq, -e.ea}] = c;
        return r;
    }
    // Substitute a -> q^N.
    LaurentPoly substitute_a_to_qN(std::int32_t N) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_)
            r.add_term(c, checked_exp_add(e.eq, std::int64_t(N) * e.ea), 0);
        return r;
    }

    // Exact division by a divisor that involves only the variable q and has
    // leading q-coefficient +-1. Returns nullopt if a remainder is left.
    std::optional<LaurentPoly> divide_exact_q(const LaurentPoly& div) const {
        if (div.is_zero()) throw std::invalid_argument("division by zero");
        for (const auto& [e, c] : div.terms_)
            if (e.ea != 0)
                throw std::invalid_argument("divide_exact_q: divisor must be q-only");
        const auto dlead = std::prev(div.terms_.end());
        if (dlead->second != 1 && dlead->second != -1)
            throw std::invalid_argument("divide_exact_q: divisor not monic up to sign");
        if (is_zero()) return LaurentPoly::zero();
        // Any exact quotient has q-exponents >= min_q(dividend) - min_q(divisor):
        // the bottom q-layer of a product cannot cancel when the divisor is
        // q-only. Use that as the termination bound for inexact inputs.
        const std::int64_t lo = std::int64_t(terms_.begin()->first.eq) -
                                std::int64_t(div.terms_.begin()->first.eq);
        LaurentPoly rem = *this, quot;
        while (!rem.is_zero()) {
            const auto rlead = std::prev(rem.terms_.end());
            const std::int64_t qe = std::int64_t(rlead->first.eq) - dlead->first.eq;
            if (qe < lo) return std::nullopt;
            const BigInt c = rlead->second * dlead->second;  // dlead in {+1,-1}
            LaurentPoly t = LaurentPoly::term(c, static_cast<std::int32_t>(qe),
                                              rlead->first.ea);
            quot += t;
            rem -= t * div;
        }
        return quot;
    }

    // Canonical serialization: sorted [e_q, e_a, coeff-as-decimal-string].
    std::string serialize() const {
        std::ostringstream os;
        os << "[";
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << ",";
            first = false;
            os << "[" << e.eq << "," << e.ea << ",\"" << c.str() << "\"]";
        }
        os << "]";
        return os.str();
    }

    // Human-readable rendering, mostly for CLI/LaTeX output and test logs.
    std::string pretty() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt cc = c;
            if (first) {
                if (cc < 0) { os << "-"; cc = -cc; }
            } else {
                os << (cc < 0 ? " - " : " + ");
                if (cc < 0) cc = -cc;
            }
            first = false;
            const bool unit = (cc == 1) && (e.eq != 0 || e.ea != 0);
            if (!unit) os << cc.str();
            if (e.eq != 0) os << (unit ? "" : "*") << "q^" << e.eq;
            if (e.ea != 0) os << ((e.eq != 0 || !unit) ? "*" : "") << "a^" << e.ea;
        }
        return os.str();
    }

  private:
    TermMap terms_;
};

// (x; y)_count = prod_{j=0}^{count-1} (1 - x y^j), x and y monomials.
inline LaurentPoly pochhammer(const Monomial& x, const Monomial& y, int count) {
    if (count < 0) throw std::invalid_argument("pochhammer: negative count");
    LaurentPoly r = LaurentPoly::one();
    Monomial xyj = x;
    for (int j = 0; j < count; ++j) {
        r *= LaurentPoly::one() - LaurentPoly(xyj);
        xyj = xyj * y;
    }
    return r;
}

// (q^2; q^2)_n, the denominator family every ratio in this library uses.
inline LaurentPoly pochhammer_q2(int n) {
    return pochhammer(Monomial::q(2), Monomial::q(2), n);
}

// Quantum multinomial [d_1+...+d_m ; d_1,...,d_m], a polynomial in q^2.
// The defining division is exact; a remainder indicates a bug upstream.
inline LaurentPoly qmultinomial(const std::vector<int>& d) {
    long total = 0;
    for (int di : d) {
        if (di < 0) throw std::invalid_argument("qmultinomial: negative part");
        total += di;
    }
    LaurentPoly num = pochhammer_q2(static_cast<int>(total));
    for (int di : d) {
        auto q = num.divide_exact_q(pochhammer_q2(di));
        if (!q) throw std::logic_error("qmultinomial: inexact division");
        num = *q;
    }
    return num;
}

// [a ; b]_+ = [a ; b, a-b].
inline LaurentPoly qbinomial_pos(int a, int b) {
    if (b < 0 || b > a) throw std::invalid_argument("qbinomial_pos: need 0 <= b <= a");
    return qmultinomial({b, a - b});
}

// [a ; b]^- = [a ; b]_+ with q -> q^{-1}.
inline LaurentPoly qbinomial_neg(int a, int b) {
    if (b < 0 || b > a) throw std::invalid_argument("qbinomial_neg: need 0 <= b <= a");
    return qbinomial_pos(a, b).invert_q();
}

// Index-splitting identity: checks, after clearing denominators by
// prod (q^2;q^2)_{d_i}, that
//   (x^2;q^2)_{|d|} = sum_{alpha+beta=d} (-x^2 q^{-1})^{|alpha|}
//        q^{sum alpha_i^2 + 2 sum_{i} alpha_{i+1}(d_1+...+d_i)}
//        prod [d_i ; alpha_i]_+ .
inline bool split_index_identity_check(const Monomial& x,
                                       const std::vector<int>& d) {
    const std::size_t m = d.size();
    long total = 0;
    for (int di : d) total += di;

    const Monomial x2 = x * x;
    const LaurentPoly lhs = pochhammer(x2, Monomial::q(2), static_cast<int>(total));

    LaurentPoly rhs;
    std::vector<int> alpha(m, 0);
    for (;;) {
        long asum = 0, expo = 0;
        for (std::size_t i = 0; i < m; ++i) {
            asum += alpha[i];
            expo += static_cast<long>(alpha[i]) * alpha[i];
        }
        long prefix = 0;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            prefix += d[i];
            expo += 2L * alpha[i + 1] * prefix;
        }
        // (-x^2 q^{-1})^{asum} q^{expo} * prod of binomials
        Monomial pref = (x2 * Monomial::q(-1)).pow(asum);
        if (asum % 2 == 1) pref.coeff = -pref.coeff;
        LaurentPoly term = LaurentPoly(pref * Monomial::q(static_cast<std::int32_t>(expo)));
        for (std::size_t i = 0; i < m; ++i) term *= qbinomial_pos(d[i], alpha[i]);
        rhs += term;

        // Next alpha with alpha_i <= d_i.
        std::size_t k = 0;
        while (k < m && alpha[k] == d[k]) alpha[k++] = 0;
        if (k == m) break;
        ++alpha[k];
    }
    return lhs == rhs;
}

// A Laurent polynomial divided by (q^2;q^2)_n. denom_index 0 means the
// value is the numerator itself.
class QSeriesRatio {
  public:
    QSeriesRatio() = default;
    QSeriesRatio(LaurentPoly num, int denom_index)
        : num_(std::move(num)), denom_(denom_index) {
        if (denom_index < 0)
            throw std::invalid_argument("QSeriesRatio: negative denominator index");
    }
    explicit QSeriesRatio(LaurentPoly num) : num_(std::move(num)) {}

    const LaurentPoly& numerator() const { return num_; }
    int denom_index() const { return denom_; }

    // Equal iff cross-multiplied numerators agree.
    friend bool operator==(const QSeriesRatio& x, const QSeriesRatio& y) {
        if (x.denom_ == y.denom_) return x.num_ == y.num_;
        return x.num_ * pochhammer_q2(y.denom_) == y.num_ * pochhammer_q2(x.denom_);
    }
    friend bool operator!=(const QSeriesRatio& x, const QSeriesRatio& y) {
        return !(x == y);
    }

    QSeriesRatio& operator+=(const QSeriesRatio& o) {
        if (denom_ == o.denom_) {
            num_ += o.num_;
        } else if (denom_ > o.denom_) {
            // (q^2;q^2)_denom / (q^2;q^2)_{o.denom} is the trailing part of
            // the Pochhammer product.
            LaurentPoly scale = LaurentPoly::one();
            for (int j = o.denom_; j < denom_; ++j)
                scale *= LaurentPoly::one() -
                         LaurentPoly(Monomial::q(static_cast<std::int32_t>(2 * (j + 1))));
            num_ += o.num_ * scale;
        } else {
            QSeriesRatio t = o;
            t += *this;
            *this = std::move(t);
        }
        return *this;
    }

    // If the denominator divides the numerator exactly, drop to index 0.
    // Reduction is all-or-nothing: partial cancellation is not attempted.
    QSeriesRatio reduced() const {
        if (denom_ == 0) return *this;
        auto q = num_.divide_exact_q(pochhammer_q2(denom_));
        if (q) return QSeriesRatio(*q, 0);
        return *this;
    }
    bool is_polynomial() const { return reduced().denom_index() == 0; }

    std::string pretty() const {
        if (denom_ == 0) return num_.pretty();
        return "(" + num_.pretty() + ") / (q^2;q^2)_" + std::to_string(denom_);
    }

  private:
    LaurentPoly num_;
    int denom_ = 0;
};

}  // namespace ratlq
