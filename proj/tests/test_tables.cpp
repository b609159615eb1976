#include <doctest.h>

#include "cdg/genus_tables.hpp"

using namespace cdg;

namespace {

/* prefix * (1+y)^pow * (tail polynomial), the factored form the tables print */
Poly factored(int prefix_deg, int binom_pow, std::initializer_list<long> tail) {
    Poly p = poly_from_ints(tail);
    Poly onepy = poly_from_ints({1, 1});
    for (int i = 0; i < binom_pow; ++i) p = p * onepy;
    return Poly::monomial(1, prefix_deg) * p;
}

}  // namespace

TEST_CASE("harer table heads") {
    auto c = harer_zagier(2, 10);
    CHECK(c[0].coeff(3) == 5);
    CHECK(c[0].coeff(10) == 16796);
    CHECK(c[1].coeff(2) == 1);
    CHECK(c[1].coeff(3) == 10);
    CHECK(c[1].coeff(4) == 70);
    CHECK(c[2].coeff(4) == 21);
    CHECK(c[1].coeff(1) == 0);  // c_g(n) = 0 for 2g > n
}

TEST_CASE("bicellular table heads") {
    auto c = harer_zagier(3, 8);
    auto q = bicellular_q(2, 7, c);
    CHECK(q[0].coeff(1) == 1);
    CHECK(q[0].coeff(2) == 8);
    CHECK(q[0].coeff(3) == 48);
    CHECK(q[1].coeff(3) == 21);
    CHECK(q[1].coeff(4) == 440);
    CHECK(q[2].coeff(5) == 1485);
    CHECK_THROWS_AS(bicellular_q(3, 7, c), TruncationTooLow);
}

TEST_CASE("theta round trip: omega(theta(y)) = y") {
    int order = 12;
    auto c = harer_zagier(0, order);
    SeriesQ C0 = c[0];
    SeriesQ u = SeriesQ::identity(order);
    SeriesQ uC2 = mul(u, mul(C0, C0));
    SeriesQ omega0 = mul(uC2, invert(sub(SeriesQ::constant(1, order), uC2)));
    SeriesQ round = compose(omega0, theta_series(order));
    CHECK(round == SeriesQ::identity(order));
}

TEST_CASE("catalan series composed with theta collapses to (2y+1)/(y+1)") {
    int order = 10;
    auto c = harer_zagier(0, order);
    SeriesQ lhs = compose(c[0], theta_series(order));
    SeriesQ rhs = mul(SeriesQ({1, 2}, order), invert(SeriesQ({1, 1}, order)));
    CHECK(lhs == rhs);
}

TEST_CASE("irreducible one-backbone polynomials match the printed closed forms") {
    auto i1 = irreducible_1bb(3);
    CHECK(i1[1] == factored(2, 2, {1}));  // y^2 (1+y)^2
    CHECK(i1[2] == factored(4, 4, {17, 92, 96}));
    CHECK(i1[2].coeff(4) == 17);
    CHECK(i1[3] == factored(6, 6, {1259, 15928, 61850, 92736, 47040}));
    CHECK(i1[3].coeff(6) == 1259);
}

TEST_CASE("irreducible_1bb needs enough working order") {
    CHECK_THROWS_AS(irreducible_1bb(2, 5), TruncationTooLow);
}

TEST_CASE("two-backbone shadow polynomials match the printed closed forms") {
    auto ab = two_bb_shadow_polys(3);
    CHECK(ab.A[0].is_zero());
    CHECK(ab.A[1] == poly_from_ints({0, 0, 0, 11, 18, 8}));
    CHECK(ab.A[2] == factored(5, 1, {928, 5378, 12515, 14520, 8376, 1920}));
    CHECK(ab.A[3] == factored(7, 2, {162158, 1835979, 8891051, 24076143, 39943686, 41655548,
                                     26715416, 9649920, 1505280}));
    CHECK(ab.B[0] == poly_from_ints({0, 0, 3, 3, 1}));
    CHECK(ab.B[1] == factored(4, 1, {119, 529, 991, 960, 476, 96}));
    CHECK(ab.B[2] == factored(6, 2, {13849, 130518, 538113, 1263849, 1847182, 1719618, 995738,
                                     327936, 47040}));
}

TEST_CASE("A and B sum to the two-backbone irreducible polynomials") {
    auto ab = two_bb_shadow_polys(1);
    CHECK(ab.A[0] + ab.B[0] == poly_from_ints({0, 0, 3, 3, 1}));
    Poly i12 = ab.A[1] + ab.B[1];
    CHECK(i12 == poly_from_ints({0, 0, 0, 11, 137, 656, 1520, 1951, 1436, 572, 96}));
    CHECK(i12.coeff(4) == 137);  // 18 + 119
}

TEST_CASE("cut identity for every computed level") {
    int gmax = 3;
    auto i1 = irreducible_1bb(gmax);
    auto ab = two_bb_shadow_polys(gmax);
    for (int g = 1; g <= gmax; ++g)
        for (int m = 1; m <= 20; ++m) {
            Rational lhs = ab.A[static_cast<size_t>(g)].coeff(m) + ab.B[static_cast<size_t>(g - 1)].coeff(m);
            Rational rhs = Rational(2 * m - 1) * i1[static_cast<size_t>(g)].coeff(m) +
                           Rational(2 * (m - 1)) * i1[static_cast<size_t>(g)].coeff(m - 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("support bounds hold") {
    auto ab = two_bb_shadow_polys(2);
    auto i1 = irreducible_1bb(2);
    for (int g = 0; g <= 2; ++g) {
        for (int m = 0; m <= std::max(ab.A[static_cast<size_t>(g)].degree(),
                                      ab.B[static_cast<size_t>(g)].degree()); ++m) {
            bool in_range = m >= min_arcs_2bb(g) && m <= max_arcs_2bb(g);
            if (!in_range) {
                CHECK(ab.A[static_cast<size_t>(g)].coeff(m) == 0);
                CHECK(ab.B[static_cast<size_t>(g)].coeff(m) == 0);
            }
        }
        if (g >= 1)
            for (int m = 0; m <= i1[static_cast<size_t>(g)].degree(); ++m)
                if (m < min_arcs_1bb(g) || m > max_arcs_1bb(g))
                    CHECK(i1[static_cast<size_t>(g)].coeff(m) == 0);
    }
}

TEST_CASE("bundled tables are coherent") {
    GenusTables t = build_genus_tables(2);
    CHECK(t.max_genus == 2);
    CHECK(static_cast<int>(t.c.size()) == 3);
    CHECK(static_cast<int>(t.q.size()) == 3);
    CHECK(t.i2A[1] == poly_from_ints({0, 0, 0, 11, 18, 8}));
}
