#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmock/cyclo.hpp"
#include "qmock/numeric.hpp"

using namespace qmock;

namespace {

Cyclo random_cyclo(std::mt19937_64& gen, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), slot(0, 15);
    for (;;) {
        Cyclo c(Rat(0), 48);
        for (int t = 0; t < 3; ++t) {
            Rat r(num(gen), den(gen));
            c = c + Cyclo::zeta_pow(slot(gen)) * r;
        }
        if (!nonzero || !c.is_zero()) return c;
    }
}

} // namespace

TEST_CASE("zeta power arithmetic") {
    const Cyclo i = Cyclo::zeta_pow(12); // zeta_48^12 = i
    CHECK(i * i == Cyclo::integer(-1));
    CHECK((Cyclo::zeta_pow(24) + Cyclo::integer(1)).is_zero());

    const Cyclo z = Cyclo::zeta_pow(1);
    const Cyclo one = Cyclo::integer(1);
    CHECK((one + z) * (one - z) == one - Cyclo::zeta_pow(2));

    CHECK(Cyclo::zeta_pow(48) == one);
    CHECK(Cyclo::zeta_pow(-5) == Cyclo::zeta_pow(43));
}

TEST_CASE("cyclotomic polynomial vanishes at zeta") {
    const auto& phi = Cyclo::cyclotomic_poly(48);
    CHECK(phi.size() == 17); // phi(48) = 16
    Cyclo acc(Rat(0), 48);
    for (size_t j = 0; j < phi.size(); ++j)
        acc = acc + Cyclo::zeta_pow(static_cast<long>(j)) * phi[j];
    CHECK(acc.is_zero());
}

TEST_CASE("inverses") {
    for (long k : {1L, 5L, 12L, 25L, 47L})
        CHECK(Cyclo::zeta_pow(k).inverse() == Cyclo::zeta_pow(48 - k));
    CHECK(Cyclo::integer(2).inverse() == Cyclo::from_rat(Rat(1, 2)));

    // 1/(1+i) = (1-i)/2
    const Cyclo i = Cyclo::zeta_pow(12);
    const Cyclo lhs = (Cyclo::integer(1) + i).inverse();
    const Cyclo rhs = (Cyclo::integer(1) - i) * Rat(1, 2);
    CHECK(lhs == rhs);

    CHECK_THROWS_AS(Cyclo::integer(0).inverse(), division_by_zero);
}

TEST_CASE("field laws on random elements") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Cyclo a = random_cyclo(gen);
        const Cyclo b = random_cyclo(gen);
        const Cyclo c = random_cyclo(gen);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        const Cyclo nz = random_cyclo(gen, true);
        CHECK(nz * nz.inverse() == Cyclo::integer(1));
    }
}

TEST_CASE("order mismatch is rejected") {
    const Cyclo a(Rat(1), 48);
    const Cyclo b(Rat(1), 24);
    CHECK_THROWS_AS(a + b, order_mismatch);
}

TEST_CASE("conjugation inverts the root") {
    std::mt19937_64 gen(11);
    const Cyclo a = random_cyclo(gen);
    CHECK(a.conj().conj() == a);
    CHECK(Cyclo::zeta_pow(7).conj() == Cyclo::zeta_pow(41));
}

TEST_CASE("principal embedding") {
    const EvalCtx ctx = EvalCtx::make(40);
    const Complex i_emb = to_complex(Cyclo::zeta_pow(12), ctx);
    CHECK(i_emb.re.abs() < Real::pow10(-38, ctx.bits));
    CHECK((i_emb.im - Real::of(1L, ctx.bits)).abs() < Real::pow10(-38, ctx.bits));

    // zeta_48 = cos(pi/24) + i sin(pi/24)
    const Complex z = to_complex(Cyclo::zeta_pow(1), ctx);
    const Real ang = Real::pi(ctx.bits) / 24L;
    CHECK((z.re - ang.cos()).abs() < Real::pow10(-38, ctx.bits));
    CHECK((z.im - ang.sin()).abs() < Real::pow10(-38, ctx.bits));

    const Complex third = to_complex(Cyclo::from_rat(Rat(1, 3)), ctx);
    CHECK((third.re - Real::of(Rat(1, 3), ctx.bits)).abs() <
          Real::pow10(-38, ctx.bits));

    // ring homomorphism up to rounding on random unit-scale elements
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Cyclo a = random_cyclo(gen);
        const Cyclo b = random_cyclo(gen);
        const Complex lhs = to_complex(a * b, ctx);
        const Complex rhs = to_complex(a, ctx) * to_complex(b, ctx);
        CHECK((lhs - rhs).abs() < Real::pow10(-30, ctx.bits));
    }
}
