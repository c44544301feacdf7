#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "brute.hpp"
#include "modcong/powerseries.hpp"

using namespace modcong;

namespace {

PowerSeries from_vec(const brute::Vec& v, std::optional<Int> mod = std::nullopt) {
    return PowerSeries(v, std::move(mod));
}

bool coeffs_equal(const PowerSeries& f, const brute::Vec& v) {
    if (f.precision() != v.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (f.coefficients()[i] != v[i]) return false;
    return true;
}

} // namespace

TEST_CASE("construction and canonical residues") {
    PowerSeries f = make_series({1, -3, 7}, 5);
    CHECK(f.precision() == 5);
    CHECK(f[1] == -3);
    CHECK(f[4] == 0);
    CHECK_THROWS_AS(f[5], const PrecisionExceeded&);
    CHECK_THROWS_AS(make_series({1}, 0), const InvalidPrecision&);

    PowerSeries g = make_series({1, -3, 7}, 3, Int(5));
    CHECK(g[0] == 1);
    CHECK(g[1] == 2); // -3 = 2 (mod 5), canonical in [0,5)
    CHECK(g[2] == 2);

    CHECK(zero_series(4).is_zero());
    CHECK(valuation(zero_series(4)) == 4);
    CHECK(one_series(3)[0] == 1);
    CHECK(q_series(3)[1] == 1);
    CHECK(valuation(q_series(3)) == 1);
}

TEST_CASE("linear combinations and min-precision") {
    PowerSeries f = make_series({1, 2, 3, 4}, 4);
    PowerSeries g = make_series({5, 6}, 2);
    PowerSeries h = f + g;
    CHECK(h.precision() == 2);
    CHECK(h[0] == 6);
    CHECK(h[1] == 8);
    CHECK((f - f).is_zero());
    PowerSeries s = Int(3) * f;
    CHECK(s[3] == 12);

    // exact + mod M gives mod M; mixed moduli are rejected
    PowerSeries m5 = make_series({1, 1}, 2, Int(5));
    CHECK(*(f + m5).modulus() == 5);
    CHECK((f + m5)[1] == 3);
    PowerSeries m7 = make_series({1, 1}, 2, Int(7));
    CHECK_THROWS_AS(m5 + m7, const ModulusMismatch&);
    CHECK_THROWS_AS((void)mul(m5, m7), const ModulusMismatch&);
}

TEST_CASE("multiplication small cases") {
    PowerSeries a = make_series({1, 1}, 4);
    PowerSeries b = make_series({1, -1}, 4);
    CHECK(coeffs_equal(mul(a, b), {1, 0, -1, 0}));
    // truncation: (1+q)(1-q) to 1 term is just 1
    CHECK(coeffs_equal(mul(truncate(a, 1), truncate(b, 1)), {1}));
}

TEST_CASE("schoolbook and Kronecker agree on random input") {
    std::mt19937_64 rng(20260815);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + rng() % 90; // crosses the dispatch cutoff
        unsigned bits = 1 + static_cast<unsigned>(rng() % 140);
        brute::Vec av = brute::random_vec(rng, n, bits);
        brute::Vec bv = brute::random_vec(rng, n, bits);
        PowerSeries a = from_vec(av), b = from_vec(bv);
        brute::Vec ref = brute::mul(av, bv, n);
        CHECK(coeffs_equal(mul_schoolbook(a, b), ref));
        CHECK(coeffs_equal(mul_kronecker(a, b), ref));
        CHECK(coeffs_equal(mul(a, b), ref));
    }
}

TEST_CASE("multiplication with modulus") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng() % 70;
        brute::Vec av = brute::random_vec(rng, n, 80);
        brute::Vec bv = brute::random_vec(rng, n, 80);
        Int M = Int(2) + Int(rng() % 1000);
        brute::Vec ref = brute::mul(av, bv, n);
        for (auto& c : ref) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
        PowerSeries p = mul(from_vec(av, M), from_vec(bv, M));
        CHECK(coeffs_equal(p, ref));
        CHECK(*p.modulus() == M);
    }
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2 + rng() % 40;
        PowerSeries a = from_vec(brute::random_vec(rng, n, 64));
        PowerSeries b = from_vec(brute::random_vec(rng, n, 64));
        PowerSeries c = from_vec(brute::random_vec(rng, n, 64));
        CHECK(agrees_to(mul(a, b), mul(b, a), n));
        CHECK(agrees_to(mul(mul(a, b), c), mul(a, mul(b, c)), n));
        CHECK(agrees_to(mul(a, b + c), mul(a, b) + mul(a, c), n));
        CHECK(agrees_to(mul(a, one_series(n)), a, n));
    }
}

TEST_CASE("pow_int") {
    PowerSeries f = make_series({1, 3, -2, 5}, 8);
    CHECK(coeffs_equal(pow_int(f, 0), {1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(agrees_to(pow_int(f, 1), f, 8));
    brute::Vec fv = {1, 3, -2, 5, 0, 0, 0, 0};
    CHECK(coeffs_equal(pow_int(f, 7), brute::pow(fv, 7, 8)));
    CHECK(agrees_to(pow_int(f, -2), mul(inverse(f), inverse(f)), 8));
    CHECK_THROWS_AS(pow_int(q_series(4), -1), const NotInvertible&);
}

TEST_CASE("inverse against the convolution recurrence") {
    std::mt19937_64 rng(1234);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + rng() % 80;
        brute::Vec fv = brute::random_vec(rng, n, 72, /*unit_lead=*/true);
        PowerSeries f = from_vec(fv);
        PowerSeries g = inverse(f);
        CHECK(coeffs_equal(g, brute::inverse(fv, n)));
        CHECK(agrees_to(mul(f, g), one_series(n), n));
    }
    // geometric series
    CHECK(coeffs_equal(inverse(make_series({1, -1}, 6)), {1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(inverse(q_series(4)), const NotInvertible&);
    CHECK_THROWS_AS(inverse(make_series({2, 1}, 4)), const NotInvertible&);
    // 2 is invertible mod 5 but not mod 4
    CHECK(agrees_to(mul(inverse(make_series({2, 1}, 6, Int(5))),
                        make_series({2, 1}, 6, Int(5))),
                    one_series(6, Int(5)), 6));
    CHECK_THROWS_AS(inverse(make_series({2, 1}, 4, Int(4))), const NotInvertible&);
}

TEST_CASE("sqrt_unit on constructed squares") {
    std::mt19937_64 rng(555);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 1 + rng() % 60;
        brute::Vec sv = brute::random_vec(rng, n, 60);
        sv[0] = 1;
        PowerSeries s = from_vec(sv);
        PowerSeries f = mul(s, s);
        CHECK(coeffs_equal(sqrt_unit(f), sv));
        CHECK(coeffs_equal(sqrt_unit(f), brute::sqrt1(f.coefficients(), n)));
    }
    CHECK_THROWS_AS(sqrt_unit(make_series({1, 1}, 8)), const NotIntegralSqrt&);
    CHECK_THROWS_AS(sqrt_unit(make_series({2, 4}, 4)), const BadLeadingTerm&);
    CHECK_THROWS_AS(sqrt_unit(make_series({1, 2}, 4, Int(7))), const BadParameter&);
}

TEST_CASE("differential operators") {
    PowerSeries f = make_series({5, 1, 4, -9}, 4);
    CHECK(coeffs_equal(d_operator(f), {0, 1, 8, -27}));
    CHECK(coeffs_equal(derivative(f), {1, 8, -27}));
    CHECK_THROWS_AS(derivative(one_series(1)), const InvalidPrecision&);

    std::mt19937_64 rng(42);
    for (int t = 0; t < 15; ++t) {
        std::size_t n = 2 + rng() % 40;
        PowerSeries a = from_vec(brute::random_vec(rng, n, 48));
        PowerSeries b = from_vec(brute::random_vec(rng, n, 48));
        // Leibniz for the q d/dq operator
        CHECK(agrees_to(d_operator(mul(a, b)),
                        mul(d_operator(a), b) + mul(a, d_operator(b)), n));
    }
}

TEST_CASE("compose against the direct sum") {
    std::mt19937_64 rng(321);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + rng() % 30;
        brute::Vec fv = brute::random_vec(rng, n, 40);
        brute::Vec gv = brute::random_vec(rng, n, 40);
        gv[0] = 0;
        PowerSeries comp = compose(from_vec(fv), from_vec(gv));
        CHECK(coeffs_equal(comp, brute::compose(fv, gv, n)));
    }
    PowerSeries f = make_series({3, 1, 4, 1, 5}, 5);
    CHECK(agrees_to(compose(f, q_series(5)), f, 5));
    CHECK_THROWS_AS(compose(f, one_series(5)), const CompositionDiverges&);

    // chain rule: D(f(g)) = f'(g) * D(g)
    std::mt19937_64 rng2(77);
    for (int t = 0; t < 10; ++t) {
        std::size_t n = 3 + rng2() % 30;
        brute::Vec fv = brute::random_vec(rng2, n, 32);
        brute::Vec gv = brute::random_vec(rng2, n, 32);
        gv[0] = 0;
        PowerSeries f2 = from_vec(fv), g2 = from_vec(gv);
        PowerSeries lhs = d_operator(compose(f2, g2));
        PowerSeries rhs = mul(compose(derivative(f2), g2), d_operator(g2));
        CHECK(agrees_to(lhs, rhs, n - 1));
    }
}

TEST_CASE("revert") {
    // q - q^2 has the Catalan numbers as compositional inverse
    PowerSeries t = make_series({0, 1, -1}, 8);
    CHECK(coeffs_equal(revert(t), {0, 1, 1, 2, 5, 14, 42, 132}));
    // q/(1-q) = q + q^2 + ... inverts to q/(1+q)
    PowerSeries u = make_series({0, 1, 1, 1, 1, 1, 1}, 7);
    CHECK(coeffs_equal(revert(u), {0, 1, -1, 1, -1, 1, -1}));

    std::mt19937_64 rng(909);
    for (int t2 = 0; t2 < 15; ++t2) {
        std::size_t n = 2 + rng() % 50;
        brute::Vec tv = brute::random_vec(rng, n, 32);
        tv[0] = 0;
        if (n > 1) tv[1] = (rng() & 1) ? 1 : -1;
        PowerSeries ts = from_vec(tv);
        PowerSeries r = revert(ts);
        CHECK(coeffs_equal(r, brute::revert(tv, n)));
        CHECK(agrees_to(compose(ts, r), q_series(n), n));
        CHECK(agrees_to(compose(r, ts), q_series(n), n));
    }
    CHECK_THROWS_AS(revert(one_series(4)), const NotRevertible&);
    CHECK_THROWS_AS(revert(make_series({0, 2}, 4)), const NotRevertible&);
    CHECK_THROWS_AS(revert(make_series({0, 0, 1}, 4)), const NotRevertible&);
}

TEST_CASE("shifts, truncation, sign flips") {
    PowerSeries f = make_series({1, 2, 3}, 3);
    PowerSeries up = shift_up(f, 2);
    CHECK(up.precision() == 5);
    CHECK(coeffs_equal(up, {0, 0, 1, 2, 3}));
    CHECK(coeffs_equal(shift_down(up, 2), {1, 2, 3}));
    CHECK_THROWS_AS(shift_down(f, 1), const BadParameter&);
    CHECK(coeffs_equal(alternate_signs(f), {1, -2, 3}));
    CHECK(coeffs_equal(truncate(f, 2), {1, 2}));
    CHECK_THROWS_AS(truncate(f, 0), const InvalidPrecision&);
    CHECK_THROWS_AS(truncate(f, 4), const PrecisionExceeded&);
    CHECK(valuation(shift_up(q_series(3), 4)) == 5);
}

TEST_CASE("reduce_mod refines only to divisors") {
    PowerSeries f = make_series({7, -3, 10}, 3);
    PowerSeries m12 = reduce_mod(f, 12);
    CHECK(coeffs_equal(m12, {7, 9, 10}));
    PowerSeries m4 = reduce_mod(m12, 4);
    CHECK(coeffs_equal(m4, {3, 1, 2}));
    CHECK_THROWS_AS(reduce_mod(m12, 5), const ModulusMismatch&);
    CHECK_THROWS_AS(reduce_mod(f, 1), const BadParameter&);
}

TEST_CASE("agrees_to requirements") {
    PowerSeries f = make_series({1, 2}, 2);
    PowerSeries g = make_series({1, 2, 3}, 3);
    CHECK(agrees_to(f, g, 2));
    CHECK_THROWS_AS(agrees_to(f, g, 3), const PrecisionExceeded&);
    CHECK_THROWS_AS(agrees_to(f, reduce_mod(g, 5), 2), const ModulusMismatch&);
}
