#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmock/forms.hpp"
#include "qmock/qseries.hpp"

using namespace qmock;

namespace {

QSeries mono(long num, long den, const Rat& c) {
    return QSeries::monomial(c, Rat(num, den));
}

QSeries random_series(std::mt19937_64& gen, bool unit = false) {
    std::uniform_int_distribution<int> lat(1, 3), slot(1, 30), coeff(-3, 3);
    const long d = lat(gen);
    QSeries s(d, Trunc::at(Rat(12)));
    if (unit) s.set_coeff(Rat(0), Rat(1));
    for (int t = 0; t < 6; ++t) {
        const Rat e(slot(gen), d);
        if (e < Rat(12)) s.set_coeff(e, Rat(coeff(gen)));
    }
    return s;
}

} // namespace

TEST_CASE("multiplication with fractional exponents") {
    // q^{1/24}(1-q) * q^{1/24}(1+q) = q^{1/12}(1-q^2)
    const QSeries a =
        mono(1, 24, Rat(1)) - mono(25, 24, Rat(1)); // q^{1/24}(1 - q)
    const QSeries b = mono(1, 24, Rat(1)) + mono(25, 24, Rat(1));
    const QSeries p = a * b;
    CHECK(p.coeff_unchecked(Rat(1, 12)).rational_value() == 1);
    CHECK(p.coeff_unchecked(Rat(1, 12) + 2).rational_value() == -1);
    CHECK(p.terms().size() == 2);
}

TEST_CASE("theta1 + theta2 kills half-integer exponents") {
    const QSeries s = theta(1, Rat(10)) + theta(2, Rat(10));
    CHECK(s.coeff(Rat(0)).rational_value() == 2);
    CHECK(s.coeff(Rat(1, 2)).is_zero());
    CHECK(s.coeff(Rat(2)).rational_value() == 4);
    CHECK(!s.has_fractional_exponent());
}

TEST_CASE("subtraction keeps the truncation") {
    std::mt19937_64 gen(5);
    const QSeries a = random_series(gen);
    const QSeries z = a - a;
    CHECK(z.is_zero());
    CHECK(z.truncation() == a.truncation());
    CHECK(z.coeff(Rat(11)).is_zero());
    CHECK_THROWS_AS(z.coeff(Rat(12)), exponent_out_of_range);
}

TEST_CASE("division") {
    // 1/(1-q) is geometric
    const QSeries one = QSeries::constant(Rat(1)).truncated(Trunc::at(Rat(9)));
    const QSeries g = one.div(QSeries::constant(Rat(1)) - mono(1, 1, Rat(1)));
    for (long n = 0; n < 9; ++n)
        CHECK(g.coeff(Rat(n)).rational_value() == 1);

    // theta3-style leading quotient: (2q^{1/8} + 2q^{9/8} + ...) / (2q^{1/8})
    const QSeries t3 = theta(3, Rat(6));
    const QSeries q = t3.div(mono(1, 8, Rat(2)));
    CHECK(q.coeff(Rat(0)).rational_value() == 1);
    CHECK(q.coeff(Rat(1)).rational_value() == 1);
    CHECK(q.valuation() == 0);

    // negative valuation: q / q^2 = q^{-1}
    const QSeries inv = mono(1, 1, Rat(1)).div(mono(2, 1, Rat(1)));
    CHECK(inv.coeff_unchecked(Rat(-1)).rational_value() == 1);
    CHECK(inv.terms().size() == 1);

    CHECK_THROWS_AS(one.div(QSeries::zero(Trunc::at(Rat(5)))), division_by_zero);
}

TEST_CASE("division round trip on random series") {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 20; ++trial) {
        const QSeries a = random_series(gen);
        const QSeries b = random_series(gen, true);
        const QSeries back = (a * b).div(b);
        // agreement to the justified truncation
        const Rat bound = back.truncation().finite ? back.truncation().value
                                                   : Rat(12);
        CHECK(!QSeries::first_mismatch(back, a, bound).has_value());
    }
}

TEST_CASE("log and exp") {
    const Rat T(9);
    const QSeries one = QSeries::constant(Rat(1)).truncated(Trunc::at(T));
    const QSeries geom = one.div(QSeries::constant(Rat(1)) - mono(1, 1, Rat(1)));
    const QSeries lg = geom.log();
    for (long n = 1; n < 9; ++n)
        CHECK(lg.coeff(Rat(n)).rational_value() == Rat(1, n));

    const QSeries l1q =
        (QSeries::constant(Rat(1)) + mono(1, 1, Rat(1))).truncated(Trunc::at(T)).log();
    CHECK(l1q.coeff(Rat(1)).rational_value() == 1);
    CHECK(l1q.coeff(Rat(2)).rational_value() == Rat(-1, 2));
    CHECK(l1q.coeff(Rat(3)).rational_value() == Rat(1, 3));

    const QSeries ez = QSeries::zero(Trunc::at(T), 1).exp();
    CHECK(ez.coeff(Rat(0)).rational_value() == 1);
    CHECK(ez.terms().size() == 1);

    const QSeries eq = mono(1, 1, Rat(1)).truncated(Trunc::at(T)).exp();
    CHECK(eq.coeff(Rat(2)).rational_value() == Rat(1, 2));
    CHECK(eq.coeff(Rat(3)).rational_value() == Rat(1, 6));

    // inverse properties on random input
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a = random_series(gen, true);
        const QSeries lo = a.log().exp();
        CHECK(!QSeries::first_mismatch(lo, a, Rat(12)).has_value());

        QSeries v = random_series(gen);
        if (v.is_zero() || v.valuation() <= 0) continue;
        const QSeries le = v.exp().log();
        CHECK(!QSeries::first_mismatch(le, v, Rat(12)).has_value());
    }

    CHECK_THROWS_AS((QSeries::constant(Rat(2)).truncated(Trunc::at(T))).log(),
                    rejected_input);
    CHECK_THROWS_AS(
        (QSeries::constant(Rat(1)).truncated(Trunc::at(T))).exp(),
        rejected_input);
}

TEST_CASE("derivative") {
    const QSeries d = mono(1, 8, Rat(1)).derive();
    CHECK(d.coeff_unchecked(Rat(1, 8)).rational_value() == Rat(1, 8));
    CHECK(QSeries::constant(Rat(5)).derive().is_zero());

    // termwise rule on the expanded geometric series
    const QSeries one = QSeries::constant(Rat(1)).truncated(Trunc::at(Rat(20)));
    const QSeries geom =
        one.div(QSeries::constant(Rat(1)) - mono(1, 1, Rat(1)));
    const QSeries dg = (geom * mono(1, 1, Rat(1))).derive(); // D(q/(1-q))
    for (long n = 1; n < 20; ++n)
        CHECK(dg.coeff(Rat(n)).rational_value() == n);

    // Leibniz on random inputs
    std::mt19937_64 gen(29);
    for (int trial = 0; trial < 10; ++trial) {
        const QSeries a = random_series(gen);
        const QSeries b = random_series(gen);
        const QSeries lhs = (a * b).derive();
        const QSeries rhs = a.derive() * b + a * b.derive();
        const Rat bound =
            lhs.truncation().finite ? lhs.truncation().value : Rat(12);
        CHECK(!QSeries::first_mismatch(lhs, rhs, bound).has_value());
    }
}

TEST_CASE("tau substitution") {
    // theta1(2 tau) against the shifted-exponent oracle (n^2/2 -> n^2)
    const QSeries doubled = theta(1, Rat(20)).subst_tau(Rat(2), Rat(0));
    QSeries oracle(1, Trunc::at(Rat(40)));
    oracle.set_coeff(Rat(0), Rat(1));
    for (long n = 1; n * n < 40; ++n) oracle.set_coeff(Rat(n * n), Rat(2));
    CHECK(!QSeries::first_mismatch(doubled, oracle, Rat(40)).has_value());

    // (s=1/2, b=1/2) on q: phase e^{pi i} = -1
    const QSeries half = mono(1, 1, Rat(1)).subst_tau(Rat(1, 2), Rat(1, 2));
    CHECK(half.coeff_unchecked(Rat(1, 2)).rational_value() == -1);

    // identity substitution
    std::mt19937_64 gen(31);
    const QSeries a = random_series(gen);
    const QSeries same = a.subst_tau(Rat(1), Rat(0));
    CHECK(!QSeries::first_mismatch(same, a, Rat(12)).has_value());

    // composition of scalings
    const QSeries s1 = a.subst_tau(Rat(1, 2), Rat(0)).subst_tau(Rat(3), Rat(0));
    const QSeries s2 = a.subst_tau(Rat(3, 2), Rat(0));
    CHECK(!QSeries::first_mismatch(s1, s2, Rat(18)).has_value());

    // subst(1,1) is trivial on integer exponents
    const QSeries one_shift =
        (QSeries::constant(Rat(1)) + mono(3, 1, Rat(5)))
            .subst_tau(Rat(1), Rat(1));
    CHECK(one_shift.coeff_unchecked(Rat(3)).rational_value() == 5);

    // phases outside Q(zeta_48) are rejected
    CHECK_THROWS_AS(mono(1, 1, Rat(1)).subst_tau(Rat(1), Rat(1, 97)),
                    unsupported_substitution);
}

TEST_CASE("truncation bookkeeping through multiplication") {
    // product of series with valuations v and truncations T:
    // T(ab) = min(Ta + vb, Tb + va)
    QSeries a(1, Trunc::at(Rat(5)));
    a.set_coeff(Rat(2), Rat(1)); // q^2 + O(q^5)
    QSeries b(1, Trunc::at(Rat(7)));
    b.set_coeff(Rat(3), Rat(1)); // q^3 + O(q^7)
    const QSeries p = a * b;
    CHECK(p.truncation().finite);
    CHECK(p.truncation().value == Rat(8)); // min(5+3, 7+2)
    CHECK(p.coeff(Rat(5)).rational_value() == 1);
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 gen(37);
    for (int trial = 0; trial < 15; ++trial) {
        const QSeries a = random_series(gen);
        const QSeries b = random_series(gen);
        const QSeries c = random_series(gen);
        const Rat bound(6);
        CHECK(!QSeries::first_mismatch(a * b, b * a, bound).has_value());
        CHECK(!QSeries::first_mismatch((a + b) + c, a + (b + c), bound).has_value());
        CHECK(!QSeries::first_mismatch((a + b) * c, a * c + b * c, bound).has_value());
    }
}
