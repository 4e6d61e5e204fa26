// Rational tangle combinatorics: reduced fractions, continued-fraction
// twist words, the six-state orientation/puncture automaton, closure
// classification, twist-type counting and the signature formula.

#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratlq {

enum class Twist : std::uint8_t { T, R };

enum class Orientation : std::uint8_t { UP, OP, RI };

inline const char* to_string(Orientation o) {
    switch (o) {
        case Orientation::UP: return "UP";
        case Orientation::OP: return "OP";
        default: return "RI";
    }
}

enum class Puncture : std::uint8_t { Xplus, Xminus, Y };

inline const char* to_string(Puncture p) {
    switch (p) {
        case Puncture::Xplus: return "X+";
        case Puncture::Xminus: return "X-";
        default: return "Y";
    }
}

// Reduced positive fraction u/v. v may exceed u; closures additionally
// require u/v > 1.
struct Fraction {
    long u = 0;
    long v = 1;

    Fraction() = default;
    Fraction(long uu, long vv) : u(uu), v(vv) {
        if (u < 0 || v <= 0) throw std::invalid_argument("Fraction: need u >= 0, v > 0");
        if (std::gcd(u, v) != 1) throw std::invalid_argument("Fraction: not reduced");
    }
    friend bool operator==(const Fraction& x, const Fraction& y) {
        return x.u == y.u && x.v == y.v;
    }
    std::string str() const { return std::to_string(u) + "/" + std::to_string(v); }
};

// Twist word stored fully expanded, in application order (first letter is
// applied to the trivial tangle first).
struct TwistWord {
    std::vector<Twist> letters;

    std::size_t size() const { return letters.size(); }

    // Compact form like "T2RT": runs in application order.
    std::string compact() const {
        std::string s;
        std::size_t i = 0;
        while (i < letters.size()) {
            std::size_t j = i;
            while (j < letters.size() && letters[j] == letters[i]) ++j;
            s += (letters[i] == Twist::T ? 'T' : 'R');
            if (j - i > 1) s += std::to_string(j - i);
            i = j;
        }
        return s;
    }

    // Fraction action: T: u/v -> (u+v)/v, R: u/v -> u/(u+v), from 0/1.
    Fraction apply_to_trivial() const {
        long u = 0, v = 1;
        for (Twist t : letters) {
            if (t == Twist::T)
                u += v;
            else
                v += u;
        }
        return Fraction(u, v);
    }
};

// Continued-fraction expansion producing the twist word of u/v: the word
// T^{a_n} R^{a_{n-1}} ... T^{a_1} with all a_i > 0, n odd iff u/v >= 1.
// Returned in application order (T^{a_1} block first).
inline TwistWord continued_fraction(const Fraction& f) {
    if (f.u == 0) return TwistWord{};
    long u = f.u, v = f.v;
    // Peel twists off the top: u/v >= 1 ends in T, otherwise in R.
    std::vector<Twist> rev;
    while (!(u == 0 && v == 1)) {
        if (u >= v) {
            rev.push_back(Twist::T);
            u -= v;
        } else {
            rev.push_back(Twist::R);
            v -= u;
        }
    }
    TwistWord w;
    w.letters.assign(rev.rbegin(), rev.rend());
    if (!w.letters.empty() && w.letters.front() != Twist::T)
        throw std::logic_error("continued_fraction: word must start with T");
    return w;
}

// One of the six vertices of the state hexagon: orientation plus the
// left-to-right order of the punctures. Z (the middle puncture) is
// puncture_order[1].
struct TangleState {
    Orientation orientation = Orientation::UP;
    std::array<Puncture, 3> puncture_order = {Puncture::Y, Puncture::Xminus,
                                              Puncture::Xplus};

    Puncture middle() const { return puncture_order[1]; }

    friend bool operator==(const TangleState& x, const TangleState& y) {
        return x.orientation == y.orientation && x.puncture_order == y.puncture_order;
    }

    std::string str() const {
        std::string s = "(";
        s += to_string(orientation);
        s += ", ";
        s += to_string(puncture_order[0]);
        s += "|";
        s += to_string(puncture_order[1]);
        s += "|";
        s += to_string(puncture_order[2]);
        s += ")";
        return s;
    }

    static TangleState initial() { return TangleState{}; }

    // Hexagon transition: T swaps the left two punctures, R the right two;
    // the orientation follows the six-vertex diagram.
    TangleState apply(Twist t) const {
        TangleState s = *this;
        if (t == Twist::T)
            std::swap(s.puncture_order[0], s.puncture_order[1]);
        else
            std::swap(s.puncture_order[1], s.puncture_order[2]);
        s.orientation = orientation_of(s.puncture_order);
        return s;
    }

  private:
    static Orientation orientation_of(const std::array<Puncture, 3>& p) {
        // The six realizable orders each carry a fixed orientation.
        using P = Puncture;
        const std::array<Puncture, 3> a = p;
        if (a == std::array<P, 3>{P::Y, P::Xminus, P::Xplus}) return Orientation::UP;
        if (a == std::array<P, 3>{P::Xminus, P::Y, P::Xplus}) return Orientation::UP;
        if (a == std::array<P, 3>{P::Xminus, P::Xplus, P::Y}) return Orientation::OP;
        if (a == std::array<P, 3>{P::Y, P::Xplus, P::Xminus}) return Orientation::OP;
        if (a == std::array<P, 3>{P::Xplus, P::Xminus, P::Y}) return Orientation::RI;
        if (a == std::array<P, 3>{P::Xplus, P::Y, P::Xminus}) return Orientation::RI;
        throw std::logic_error("TangleState: unreachable puncture order");
    }
};

inline TangleState run_state_machine(const TwistWord& w) {
    TangleState s = TangleState::initial();
    for (Twist t : w.letters) s = s.apply(t);
    return s;
}

// The eight twist classes. OP splits by whether the active axis carries
// the final intersection point, i.e. u > v before the twist.
enum class TwistType : std::uint8_t {
    TUP, TRI, TOPp, TOPm, RUP, RRI, ROPp, ROPm
};

struct TwistTypeCounts {
    std::array<long, 8> n = {0, 0, 0, 0, 0, 0, 0, 0};

    long& operator[](TwistType t) { return n[static_cast<std::size_t>(t)]; }
    long operator[](TwistType t) const { return n[static_cast<std::size_t>(t)]; }
    long total() const {
        long s = 0;
        for (long x : n) s += x;
        return s;
    }
};

// Classify each letter by the state (and fraction, for OP+-) before it.
inline TwistTypeCounts twist_type_counts(const TwistWord& w) {
    TwistTypeCounts c;
    TangleState s = TangleState::initial();
    long u = 0, v = 1;
    for (Twist t : w.letters) {
        switch (s.orientation) {
            case Orientation::UP:
                c[t == Twist::T ? TwistType::TUP : TwistType::RUP] += 1;
                break;
            case Orientation::RI:
                c[t == Twist::T ? TwistType::TRI : TwistType::RRI] += 1;
                break;
            case Orientation::OP: {
                const bool active = u > v;  // xi_omega on the active axis
                if (t == Twist::T)
                    c[active ? TwistType::TOPp : TwistType::TOPm] += 1;
                else
                    c[active ? TwistType::ROPp : TwistType::ROPm] += 1;
                break;
            }
        }
        s = s.apply(t);
        if (t == Twist::T)
            u += v;
        else
            v += u;
    }
    return c;
}

enum class ClosureKind : std::uint8_t { Knot, TwoComponentLink };

struct ClosureInfo {
    ClosureKind kind;
    Fraction companion;              // (u-v)/v
    Orientation companion_orientation;  // UP or RI
};

// A fraction u/v > 1 is closable when its tangle carries UP or OP
// orientation; RI-state fractions present the mirror family and admit no
// coherently oriented numerator closure.
inline bool is_closable(const Fraction& f) {
    if (f.u <= f.v) return false;
    return run_state_machine(continued_fraction(f)).orientation != Orientation::RI;
}

// Numerator closure data for closable u/v > 1: the closure is a knot iff u
// is odd; undoing the final top twist leaves tau_{(u-v)/v} with UP
// orientation (when the closed tangle is UP) or RI (when it is OP).
inline ClosureInfo classify_closure(const Fraction& f) {
    if (f.u <= f.v) throw std::invalid_argument("classify_closure: need u/v > 1");
    const TangleState s = run_state_machine(continued_fraction(f));
    if (s.orientation == Orientation::RI)
        throw std::invalid_argument("classify_closure: " + f.str() +
                                    " has RI orientation and no numerator closure");
    ClosureInfo ci;
    ci.kind = (f.u % 2 != 0) ? ClosureKind::Knot : ClosureKind::TwoComponentLink;
    ci.companion = Fraction(f.u - f.v, f.v);
    ci.companion_orientation =
        run_state_machine(continued_fraction(ci.companion)).orientation;
    if (ci.companion_orientation !=
        (s.orientation == Orientation::UP ? Orientation::UP : Orientation::RI))
        throw std::logic_error("classify_closure: companion orientation mismatch");
    // For knots the closure lemma parity holds: UP iff v odd.
    if (ci.kind == ClosureKind::Knot &&
        (s.orientation == Orientation::UP) != (f.v % 2 != 0))
        throw std::logic_error("classify_closure: closure parity mismatch");
    return ci;
}

// sigma(K_{u/v}) = 1 + #RRI - #TUP, counted over the word of tau_{u/v}.
inline long signature(const Fraction& f) {
    if (f.u % 2 == 0) throw std::invalid_argument("signature: u must be odd");
    if (f.u <= f.v) throw std::invalid_argument("signature: need u/v > 1");
    if (!is_closable(f))
        throw std::invalid_argument("signature: " + f.str() + " is not closable");
    const TwistTypeCounts c = twist_type_counts(continued_fraction(f));
    return 1 + c[TwistType::RRI] - c[TwistType::TUP];
}

}  // namespace ratlq
