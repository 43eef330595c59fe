#include <doctest.h>

#include "lgenus/series.hpp"
#include "test_util.hpp"

using namespace lgenus;
using testutil::ps;
using testutil::random_series;
using testutil::rat;

TEST_SUITE_BEGIN("series");

TEST_CASE("coefficient access respects precision") {
    const PowerSeries f = ps({1L, 0L, 3L});  // 1 + 3x^2
    CHECK(f.coeff(2) == rat(3));
    CHECK(f.coeff(1) == rat(0));
    CHECK_THROWS_AS(f.coeff(7), std::out_of_range);
    CHECK_THROWS_AS(f.coeff(-1), std::out_of_range);

    const LaurentSeries g(-1, {rat(1), rat(5), rat(0)});  // x^-1 + 5
    CHECK(g.coeff(-1) == rat(1));
    CHECK(g.coeff(0) == rat(5));
    CHECK(g.coeff(-4) == rat(0));  // below the window: exact zero
    CHECK_THROWS_AS(g.coeff(2), std::out_of_range);
}

TEST_CASE("ring operations") {
    const PowerSeries a = ps({1L, 1L, 0L});
    const PowerSeries b = ps({1L, -1L, 0L});
    CHECK(a * b == ps({1L, 0L, -1L}));
    CHECK(a + PowerSeries(2) == a);
    const LaurentSeries xinv(-1, {rat(1), rat(0), rat(0)});
    const LaurentSeries x(1, {rat(1), rat(0), rat(0)});
    CHECK((xinv * x).coeff(0) == rat(1));
    CHECK((xinv * x).coeff(1) == rat(0));
}

TEST_CASE("order and trimming") {
    CHECK(ps({0L, 0L, 2L}).order() == ExtInt(2));
    CHECK(PowerSeries(5).order() == ExtInt::infinity());
    const LaurentSeries f(-2, {rat(0), rat(0), rat(0), rat(7)});
    CHECK(f.order() == ExtInt(1));
    const LaurentSeries t = f.trimmed();
    CHECK(t.lowest_exponent() == 1);
    for (int i = -2; i <= 1; ++i) CHECK(t.coeff(i) == f.coeff(i));
}

TEST_CASE("division") {
    const LaurentSeries q = divide(PowerSeries::identity(4), PowerSeries::identity(4));
    CHECK(q.coeff(0) == rat(1));
    CHECK(q.order() == ExtInt(0));

    const LaurentSeries geo = divide(PowerSeries::constant(rat(1), 10),
                                     ps({1L, -1L, 0L, 0L, 0L, 0L, 0L, 0L, 0L, 0L, 0L}));
    for (int i = 0; i <= 10; ++i) CHECK(geo.coeff(i) == rat(1));

    // x / (x^2 + x^3) = x^-1 - 1 + x - ...
    const PowerSeries num = PowerSeries::identity(6);
    const PowerSeries den = ps({0L, 0L, 1L, 1L, 0L, 0L, 0L});
    const LaurentSeries h = divide(num, den);
    CHECK(h.lowest_exponent() == -1);
    CHECK(h.coeff(-1) == rat(1));
    CHECK(h.coeff(0) == rat(-1));
    CHECK(h.coeff(1) == rat(1));
    // multiply back
    CHECK(agree(h * LaurentSeries::from(den), LaurentSeries::from(num)));

    CHECK_THROWS_AS(divide(num, PowerSeries(4)), std::domain_error);
    CHECK(divide(PowerSeries(6), den).order() == ExtInt::infinity());
}

TEST_CASE("derivative") {
    CHECK(ps({0L, 0L, 1L}).derivative() == ps({0L, 2L}));
    CHECK(PowerSeries::constant(rat(9), 3).derivative() == PowerSeries(2));
    CHECK(ps({0L, 2L, 1L}).derivative() == ps({2L, 2L}));
    const LaurentSeries f(-2, {rat(1), rat(0), rat(3)});  // x^-2 + 3
    const LaurentSeries d = f.derivative();
    CHECK(d.coeff(-3) == rat(-2));
    CHECK(d.coeff(-1) == rat(0));
}

TEST_CASE("residue") {
    CHECK(LaurentSeries(-1, {rat(1)}).residue() == rat(1));
    CHECK(LaurentSeries::from(ps({4L, 5L, 6L})).residue() == rat(0));
    CHECK(LaurentSeries(-2, {rat(1), rat(3), rat(7)}).residue() == rat(3));
}

TEST_CASE("composition") {
    // F = x^2, G = y + y^2
    const PowerSeries F = ps({0L, 0L, 1L, 0L, 0L});
    const PowerSeries G = ps({0L, 1L, 1L, 0L, 0L});
    CHECK(compose(F, G) == ps({0L, 0L, 1L, 2L, 1L}));

    // F = 1/x, G = 2y + y^2: multiply back against G
    const LaurentSeries xinv(-1, {rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)});
    const PowerSeries G2 = ps({0L, 2L, 1L, 0L, 0L, 0L, 0L, 0L});
    const LaurentSeries img = compose(xinv, G2);
    CHECK(img.coeff(-1) == rat(1, 2));
    CHECK(img.coeff(0) == rat(-1, 4));
    LaurentSeries back = img * LaurentSeries::from(G2);
    CHECK(back.coeff(0) == rat(1));
    CHECK(back.coeff(1) == rat(0));
    CHECK(back.coeff(2) == rat(0));

    // constant result through a zero inner series
    CHECK(compose(ps({1L, 1L}), PowerSeries(6)) == PowerSeries::constant(rat(1), 6));

    CHECK_THROWS_AS(compose(F, ps({1L, 1L})), std::invalid_argument);
    CHECK_THROWS_AS(compose(xinv, ps({0L, 0L, 1L, 0L})), std::invalid_argument);
}

TEST_CASE("residue invariance under change of variable") {
    const PowerSeries G = ps({0L, 2L, 1L, 0L, 0L, 0L, 0L, 0L, 0L, 0L});
    const LaurentSeries xinv(-1, {rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)});
    const auto [lhs, rhs] = residue_change_of_variable(xinv, G);
    CHECK(lhs == rat(1));
    CHECK(rhs == rat(1));

    for (int n = -4; n <= 2; ++n) {
        if (n == -1) continue;
        std::vector<Rational> c(static_cast<size_t>(8 - n), rat(0));
        c[0] = rat(1);
        const auto [l, r] = residue_change_of_variable(LaurentSeries(n, std::move(c)), G);
        CHECK(l == rat(0));
        CHECK(r == rat(0));
    }

    const LaurentSeries f(-2, {rat(1), rat(3), rat(0), rat(0), rat(0), rat(0), rat(0)});
    const PowerSeries g3 = ps({0L, 1L, 0L, -1L, 0L, 0L, 0L, 0L, 0L, 0L});  // y - y^3
    const auto [l2, r2] = residue_change_of_variable(f, g3);
    CHECK(l2 == rat(3));
    CHECK(r2 == rat(3));

    CHECK_THROWS_AS(residue_change_of_variable(f, ps({0L, 0L, 1L, 0L})),
                    std::invalid_argument);
}

TEST_CASE("reversion") {
    CHECK(revert(PowerSeries::identity(3)) == PowerSeries::identity(3));

    // x + x^2 reverts to the signed Catalan series
    const PowerSeries F = ps({0L, 1L, 1L, 0L, 0L, 0L, 0L});
    const PowerSeries G = revert(F);
    CHECK(G == ps({0L, 1L, -1L, 2L, -5L, 14L, -42L}));
    CHECK(compose(F, G) == PowerSeries::identity(6));
    CHECK(compose(G, F) == PowerSeries::identity(6));

    // (1+x)^3 - 1 reverts to (1+y)^{1/3} - 1 with 2-integral coefficients
    const PowerSeries cube =
        pow_int(PowerSeries::identity(8) + rat(1), Int(3)) - rat(1);
    const PowerSeries root = revert(cube, 2);
    CHECK(pow_int(root + rat(1), Int(3)) ==
          PowerSeries::identity(8) + rat(1));
    for (int i = 0; i <= 8; ++i) CHECK(is_p_integral(root.coeff(i), 2));

    CHECK_THROWS_AS(revert(ps({1L, 1L})), std::invalid_argument);
    CHECK_THROWS_AS(revert(ps({0L, 0L, 1L})), std::invalid_argument);
    // linear coefficient 2 is invertible in Q but not a 2-unit
    CHECK_NOTHROW(revert(ps({0L, 2L, 1L})));
    CHECK_THROWS_AS(revert(ps({0L, 2L, 1L}), 2), std::invalid_argument);
    CHECK_THROWS_AS(revert(ps({rat(0), rat(1), rat(1, 2)}), 2), std::invalid_argument);
}

TEST_CASE("q-th roots") {
    const PowerSeries f = ps({1L, 1L, 0L, 0L, 0L, 0L});
    CHECK(qth_root(f, 1, 2) == f);

    const PowerSeries cbrt = qth_root(f, 3, 2);
    CHECK(cbrt.coeff(0) == rat(1));
    CHECK(cbrt.coeff(1) == rat(1, 3));
    CHECK(cbrt.coeff(2) == rat(-1, 9));
    CHECK(pow_int(cbrt, Int(3)) == f);

    CHECK_THROWS_AS(qth_root(f, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(qth_root(ps({2L, 1L}), 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(qth_root(ps({rat(1), rat(1, 2)}), 3, 2), std::invalid_argument);
}

TEST_CASE("rational powers") {
    const PowerSeries f = ps({1L, 1L, 0L, 0L, 0L, 0L});
    CHECK(rational_power(f, 0, 1, 2) == PowerSeries::constant(rat(1), 5));

    const PowerSeries square = pow_int(f, Int(2));
    CHECK_THROWS_AS(rational_power(square, 1, 2, 2), std::invalid_argument);
    CHECK(rational_power(square, 1, 2, 3) == f);

    const PowerSeries plus = rational_power(f, 1, 3, 2);
    const PowerSeries minus = rational_power(f, -1, 3, 2);
    CHECK(plus * minus == PowerSeries::constant(rat(1), 5));
}

TEST_CASE("integer powers and the mod-2 Frobenius instance") {
    const PowerSeries f = ps({1L, 1L, 1L});
    CHECK(pow_int(f, Int(0)) == PowerSeries::constant(rat(1), 2));
    const PowerSeries p4 = pow_int(ps({1L, 1L, 0L, 0L, 0L}), Int(4));
    CHECK(p4 == ps({1L, 4L, 6L, 4L, 1L}));

    // (1 + x + x^2)^8 mod 2 keeps only exponents 0, 8, 16
    std::vector<Rational> c(17, rat(0));
    c[0] = c[1] = c[2] = rat(1);
    const PowerSeries p8 = pow_int(PowerSeries(std::move(c)), Int(8));
    for (int e = 0; e <= 16; ++e) {
        const bool odd_coeff = nu2(p8.coeff(e)) == ExtInt(0);
        CHECK(odd_coeff == (e == 0 || e == 8 || e == 16));
    }
}

TEST_CASE("valuation bound on power coefficients") {
    CHECK(verify_valuation_bound(ps({1L, 1L, 0L, 0L, 0L}), Int(4)).empty());
    CHECK(verify_valuation_bound(ps({1L, 1L, 0L, 0L, 0L}), Int(1)).empty());
    CHECK(verify_valuation_bound(ps({1L, 3L, 0L, 5L, 7L, 0L, 0L, 0L, 0L}), Int(8)).empty());
    CHECK_THROWS_AS(verify_valuation_bound(ps({rat(1), rat(1, 2)}), Int(2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_valuation_bound(ps({1L, 1L}), Int(0)), std::invalid_argument);
}

TEST_CASE("ring laws on random instances") {
    SplitMix64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const int prec = static_cast<int>(rng.range(2, 8));
        const PowerSeries a = random_series(rng, prec, 2);
        const PowerSeries b = random_series(rng, prec, 2);
        const PowerSeries c = random_series(rng, prec, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("composition is a ring homomorphism") {
    SplitMix64 rng(37);
    for (int t = 0; t < 100; ++t) {
        const int prec = static_cast<int>(rng.range(3, 8));
        const PowerSeries f = random_series(rng, prec, 2);
        const PowerSeries h = random_series(rng, prec, 2);
        PowerSeries g = random_series(rng, prec, 2);
        std::vector<Rational> gc = g.coefficients();
        gc[0] = rat(0);
        g = PowerSeries(std::move(gc));
        CHECK(agree(compose(f * h, g), compose(f, g) * compose(h, g)));
        CHECK(agree(compose(f + h, g), compose(f, g) + compose(h, g)));
    }
}

TEST_CASE("random reversion and root round trips") {
    SplitMix64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const int prec = static_cast<int>(rng.range(3, 10));
        PowerSeries f = random_series(rng, prec, 1);
        std::vector<Rational> c = f.coefficients();
        c[0] = rat(0);
        c[1] = rat(2 * rng.range(-4, 4) + 1, 2 * rng.range(0, 4) + 1);
        f = PowerSeries(std::move(c));
        const PowerSeries g = revert(f, 2);
        CHECK(compose(f, g) == PowerSeries::identity(prec));
        CHECK(compose(g, f) == PowerSeries::identity(prec));
        for (int i = 0; i <= prec; ++i) CHECK(is_p_integral(g.coeff(i), 2));
    }
    for (int t = 0; t < 100; ++t) {
        const int prec = static_cast<int>(rng.range(3, 8));
        const unsigned long q = static_cast<unsigned long>(2 * rng.range(1, 3) + 1);
        PowerSeries phi = random_series(rng, prec, 1);
        std::vector<Rational> c = phi.coefficients();
        c[0] = rat(1);
        phi = PowerSeries(std::move(c));
        // uniqueness: the root of phi^q with constant term 1 is phi itself
        const PowerSeries recovered =
            qth_root(pow_int(phi, Int(static_cast<long>(q))), q, 2);
        CHECK(recovered == phi);
        for (int i = 0; i <= prec; ++i) CHECK(is_p_integral(recovered.coeff(i), 2));
    }
}

TEST_CASE("random residue invariance") {
    SplitMix64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const int low = static_cast<int>(rng.range(-4, -1));
        const int fprec = static_cast<int>(rng.range(1, 5));
        std::vector<Rational> fc(static_cast<size_t>(fprec - low) + 1);
        for (auto& coeff : fc) coeff = rat(rng.range(-9, 9), rng.range(1, 9));
        const LaurentSeries F(low, std::move(fc));
        const int gprec = static_cast<int>(rng.range(10, 14));
        PowerSeries G = random_series(rng, gprec, 2);
        std::vector<Rational> gc = G.coefficients();
        gc[0] = rat(0);
        gc[1] = rat(rng.range(1, 9), rng.range(1, 9));
        G = PowerSeries(std::move(gc));
        const auto [lhs, rhs] = residue_change_of_variable(F, G);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Frobenius power congruence on random integer series") {
    SplitMix64 rng(47);
    for (int t = 0; t < 100; ++t) {
        const int mm = static_cast<int>(rng.range(0, 3));
        const int nn = static_cast<int>(rng.range(0, 3 - mm));
        const int prec = static_cast<int>(rng.range(4, 8));
        const PowerSeries f = random_series(rng, prec, 0);
        const PowerSeries lhs = pow_int(f, Int(1) << (mm + nn));
        std::vector<Rational> spread(static_cast<size_t>(prec) + 1, rat(0));
        for (int e = 0; e <= prec; ++e) {
            if (static_cast<long>(e) << mm > prec) break;
            spread[static_cast<size_t>(e) << mm] = pow(f.coeff(e), 1UL << mm);
        }
        const PowerSeries rhs = pow_int(PowerSeries(std::move(spread)), Int(1) << nn);
        for (int e = 0; e <= prec; ++e)
            CHECK(congruent_mod_2pow(lhs.coeff(e), rhs.coeff(e), nn + 1));
    }
}

TEST_SUITE_END();
