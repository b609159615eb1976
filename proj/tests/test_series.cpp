#include <doctest.h>

#include <cmath>
#include <random>

#include "cdg/genus_tables.hpp"
#include "cdg/series.hpp"

using namespace cdg;

namespace {

SeriesQ from_ints(std::initializer_list<long> cs, int order) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return SeriesQ(std::move(v), order);
}

SeriesQ random_series(std::mt19937_64& rng, int order, bool unit_constant) {
    std::uniform_int_distribution<int> num(-6, 6);
    SeriesQ s(order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, make_rational(num(rng), 1 + (num(rng) & 3)));
    if (unit_constant) s.set_coeff(0, 1);
    return s;
}

}  // namespace

TEST_CASE("product truncates to the smaller order and telescopes") {
    SeriesQ a = from_ints({1, 1}, 5);
    SeriesQ b = from_ints({1, -1}, 5);
    SeriesQ p = mul(a, b);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -1);
    for (int k = 3; k <= 5; ++k) CHECK(p.coeff(k) == 0);
    CHECK(mul(a.truncated(2), b).order() == 2);
}

TEST_CASE("additive identity") {
    std::mt19937_64 rng(7);
    SeriesQ p = random_series(rng, 6, false);
    CHECK(add(p, SeriesQ(6)) == p);
}

TEST_CASE("catalan square convolution") {
    SeriesQ cat = from_ints({1, 1, 2, 5, 14}, 4);
    SeriesQ sq = mul(cat, cat);
    // 1*5 + 1*2 + 2*1 + 5*1
    CHECK(sq.coeff(3) == 14);
}

TEST_CASE("geometric inverse") {
    SeriesQ s = from_ints({1, -1}, 6);
    SeriesQ inv = invert(s);
    for (int k = 0; k <= 6; ++k) CHECK(inv.coeff(k) == 1);
    CHECK(invert(SeriesQ::constant(1, 4)) == SeriesQ::constant(1, 4));
}

TEST_CASE("inverse of 1 - u C0^2 picks up the matching counts") {
    auto c = harer_zagier(0, 8);
    SeriesQ C0 = c[0];
    SeriesQ u = SeriesQ::identity(8);
    SeriesQ s = invert(sub(SeriesQ::constant(1, 8), mul(u, mul(C0, C0))));
    CHECK(s.coeff(2) == 3);
}

TEST_CASE("zero constant term cannot be inverted") {
    CHECK_THROWS_AS(invert(SeriesQ::identity(3)), ZeroConstantTerm);
}

TEST_CASE("invert then multiply gives one, 100 random unit series") {
    std::mt19937_64 rng(20240901);
    for (int i = 0; i < 100; ++i) {
        SeriesQ s = random_series(rng, 8, true);
        SeriesQ prod = mul(s, invert(s));
        CHECK(prod == SeriesQ::constant(1, 8));
    }
}

TEST_CASE("composition basics") {
    SeriesQ inner = from_ints({0, 1, 1}, 4);  // u + u^2
    SeriesQ sq = compose(std::vector<Rational>{0, 0, 1}, inner);
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(3) == 2);

    Poly i11 = poly_from_ints({0, 0, 1, 2, 1});
    SeriesQ u = SeriesQ::identity(5);
    SeriesQ c = compose(std::vector<Rational>(i11.coeffs().begin(), i11.coeffs().end()), u);
    CHECK(c.coeff(2) == 1);
    CHECK(c.coeff(3) == 2);
    CHECK(c.coeff(4) == 1);

    SeriesQ theta = theta_series(4);
    CHECK(theta.coeff(1) == 1);
    CHECK(theta.coeff(2) == -3);
    CHECK(theta.coeff(3) == 8);
    CHECK(theta.coeff(4) == -20);

    CHECK_THROWS_AS(compose(sq, SeriesQ::constant(1, 3)), NonzeroConstantTerm);
}

TEST_CASE("composition agrees with a direct convolution oracle for monomials") {
    std::mt19937_64 rng(99);
    SeriesQ inner = random_series(rng, 8, false);
    inner.set_coeff(0, 0);
    for (int power = 1; power <= 4; ++power) {
        std::vector<Rational> mono(static_cast<size_t>(power) + 1, Rational(0));
        mono.back() = 1;
        SeriesQ composed = compose(mono, inner);
        SeriesQ expect = SeriesQ::constant(1, 8);
        for (int i = 0; i < power; ++i) expect = mul(expect, inner);
        CHECK(composed == expect);
    }
}

TEST_CASE("derivative") {
    SeriesQ p = from_ints({0, 0, 1, 2, 1}, 4);  // y^2 + 2y^3 + y^4
    SeriesQ d = derivative(p);
    CHECK(d.order() == 3);
    CHECK(d.coeff(1) == 2);
    CHECK(d.coeff(2) == 6);
    CHECK(d.coeff(3) == 4);
    CHECK(derivative(SeriesQ::constant(5, 3)).is_zero());

    // 2(y^2+y) I_1' - I_1 = 3y^2 + 14y^3 + 19y^4 + 8y^5
    Poly i1 = poly_from_ints({0, 0, 1, 2, 1});
    Poly lhs = poly_from_ints({0, 2, 2}) * i1.derivative() - i1;
    CHECK(lhs == poly_from_ints({0, 0, 3, 14, 19, 8}));
}

TEST_CASE("fixed point solves the catalan equation") {
    auto step = [](const SeriesQ& h) {
        SeriesQ one = SeriesQ::constant(1, h.order());
        SeriesQ u = SeriesQ::identity(h.order());
        return add(one, mul(u, mul(h, h)));
    };
    SeriesQ h = solve_fixed_point<Rational>(step, SeriesQ::constant(1, 10), 10);
    long expect[] = {1, 1, 2, 5, 14, 42};
    for (int k = 0; k <= 5; ++k) CHECK(h.coeff(k) == expect[k]);
    // residual of the defining equation vanishes through the target order
    CHECK(sub(h, step(h)).is_zero());
}

TEST_CASE("fixed point on a constant equation returns the constant") {
    auto step = [](const SeriesQ& h) { return SeriesQ::constant(1, h.order()); };
    CHECK(solve_fixed_point<Rational>(step, SeriesQ::constant(1, 5), 5) == SeriesQ::constant(1, 5));
}

TEST_CASE("fixed point reports non-contraction") {
    auto step = [](const SeriesQ& h) {
        SeriesQ out = h;
        if (h.order() >= 1) out.set_coeff(1, Rational(1) - h.coeff(1));
        return out;
    };
    CHECK_THROWS_AS(solve_fixed_point<Rational>(step, SeriesQ::constant(1, 5), 5), NoConvergence);
}

TEST_CASE("ring axioms on random operands") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 40; ++i) {
        SeriesQ a = random_series(rng, 6, false);
        SeriesQ b = random_series(rng, 6, false);
        SeriesQ c = random_series(rng, 6, false);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
        CHECK(add(a, b) == add(b, a));
    }
}

TEST_CASE("coefficient reads beyond the order are refused") {
    SeriesQ s = from_ints({1, 2}, 3);
    CHECK_THROWS_AS((void)s.coeff(4), OrderTooLow);
}

TEST_CASE("bivariate inversion with a polynomial constant term needs a cap") {
    SeriesB s(3);
    s.set_coeff(0, Poly({Rational(1), Rational(-1)}));  // 1 - t
    SeriesB inv = invert(s, 4);
    for (int g = 0; g <= 4; ++g) CHECK(inv.coeff(0).coeff(g) == 1);
    CHECK_THROWS_AS(invert(s, -1), ZeroConstantTerm);
}

TEST_CASE("t slices and evaluation agree") {
    SeriesB s(3);
    s.set_coeff(1, Poly({Rational(2), Rational(3)}));               // (2 + 3t) u
    s.set_coeff(2, Poly({Rational(0), Rational(0), Rational(5)}));  // 5 t^2 u^2
    CHECK(t_slice(s, 1).coeff(1) == 3);
    SeriesQ at1 = eval_t(s, 1);
    CHECK(at1.coeff(1) == 5);
    CHECK(at1.coeff(2) == 5);
}

TEST_CASE("rational to long double carries more than double precision") {
    Rational q = make_rational(BigInt("123456789012345678901234567890"), BigInt(997));
    long double x = to_long_double(q);
    long double ref = 123456789012345678901234567890.0L / 997.0L;
    CHECK(std::fabs(x - ref) / ref < 1e-17L);
}
