#include <catch2/catch_amalgamated.hpp>

#include "ratlq/tangle.hpp"

using namespace ratlq;

TEST_CASE("continued fractions") {
    CHECK(continued_fraction(Fraction(0, 1)).size() == 0);
    CHECK(continued_fraction(Fraction(3, 1)).compact() == "T3");
    CHECK(continued_fraction(Fraction(5, 2)).compact() == "TRT2");  // T^2 R T applied
    CHECK(continued_fraction(Fraction(4, 3)).compact() == "TR2T");

    CHECK_THROWS(Fraction(4, 2));

    // Word action reproduces the fraction for all reduced u/v with u+v <= 60.
    for (long u = 0; u <= 59; ++u)
        for (long v = 1; u + v <= 60; ++v) {
            if (std::gcd(u, v) != 1) continue;
            const Fraction f(u, v);
            CHECK(continued_fraction(f).apply_to_trivial() == f);
        }
}

TEST_CASE("state machine") {
    CHECK(run_state_machine(TwistWord{}) == TangleState::initial());

    const auto s43 = run_state_machine(continued_fraction(Fraction(4, 3)));
    CHECK(s43 == TangleState::initial());  // (UP, Y|X-|X+)

    const auto s52 = run_state_machine(continued_fraction(Fraction(5, 2)));
    CHECK(s52.orientation == Orientation::OP);

    const auto s32 = run_state_machine(continued_fraction(Fraction(3, 2)));
    CHECK(s32.orientation == Orientation::RI);

    const auto s53 = run_state_machine(continued_fraction(Fraction(5, 3)));
    CHECK(s53.orientation == Orientation::RI);

    const auto s83 = run_state_machine(continued_fraction(Fraction(8, 3)));
    CHECK(s83.orientation == Orientation::OP);
}

TEST_CASE("closure classification") {
    auto c52 = classify_closure(Fraction(5, 2));
    CHECK(c52.kind == ClosureKind::Knot);
    CHECK(c52.companion == Fraction(3, 2));
    CHECK(c52.companion_orientation == Orientation::RI);

    auto c73 = classify_closure(Fraction(7, 3));
    CHECK(c73.kind == ClosureKind::Knot);
    CHECK(c73.companion == Fraction(4, 3));
    CHECK(c73.companion_orientation == Orientation::UP);

    auto c83 = classify_closure(Fraction(8, 3));
    CHECK(c83.kind == ClosureKind::TwoComponentLink);
    CHECK(c83.companion == Fraction(5, 3));
    CHECK(c83.companion_orientation == Orientation::RI);

    CHECK_THROWS(classify_closure(Fraction(2, 3)));

    // Closure lemma parity sweep over closable fractions: knots iff u odd,
    // UP iff v odd, and the companion is UP iff v odd.
    long closable_count = 0;
    for (long u = 2; u <= 40; ++u)
        for (long v = 1; v < u && u + v <= 60; ++v) {
            if (std::gcd(u, v) != 1) continue;
            const Fraction f(u, v);
            if (!is_closable(f)) {
                CHECK_THROWS_AS(classify_closure(f), std::invalid_argument);
                continue;
            }
            ++closable_count;
            const auto st = run_state_machine(continued_fraction(f));
            if (u % 2 == 1)
                CHECK(st.orientation ==
                      (v % 2 == 1 ? Orientation::UP : Orientation::OP));
            const auto ci = classify_closure(f);
            if (u % 2 == 1)
                CHECK(ci.companion_orientation ==
                      (v % 2 == 1 ? Orientation::UP : Orientation::RI));
            else
                CHECK(ci.companion_orientation ==
                      (st.orientation == Orientation::UP ? Orientation::UP
                                                         : Orientation::RI));
        }
    CHECK(closable_count > 100);
}

TEST_CASE("twist type counts") {
    // tau_{2n/1} = T^{2n}: all TUP.
    for (int n = 1; n <= 5; ++n) {
        TwistWord w;
        w.letters.assign(static_cast<std::size_t>(2 * n), Twist::T);
        auto c = twist_type_counts(w);
        CHECK(c[TwistType::TUP] == 2 * n);
        CHECK(c.total() == 2 * n);
    }

    // tau_{3/2} word = T,R,T: one TUP, no RRI; third letter is TOP-.
    auto c32 = twist_type_counts(continued_fraction(Fraction(3, 2)));
    CHECK(c32[TwistType::TUP] == 1);
    CHECK(c32[TwistType::RRI] == 0);
    CHECK(c32[TwistType::RUP] == 1);
    CHECK(c32[TwistType::TOPm] == 1);

    CHECK(twist_type_counts(TwistWord{}).total() == 0);
}

TEST_CASE("signature") {
    for (int n = 1; n <= 6; ++n)
        CHECK(signature(Fraction(2 * n + 1, 1)) == -2 * n);
    CHECK(signature(Fraction(5, 2)) == 0);
    CHECK(signature(Fraction(3, 1)) == -2);
    CHECK_THROWS(signature(Fraction(4, 1)));

    // Knot signatures are even for every admissible fraction.
    for (long u = 3; u <= 27; u += 2)
        for (long v = 1; v < u; ++v) {
            if (std::gcd(u, v) != 1 || !is_closable(Fraction(u, v))) continue;
            CHECK(signature(Fraction(u, v)) % 2 == 0);
        }
}
