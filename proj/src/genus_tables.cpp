#include "cdg/genus_tables.hpp"

#include <string>

namespace cdg {

SeriesQ theta_series(int order) {
    SeriesQ num(order);  // y + y^2
    if (order >= 1) num.set_coeff(1, 1);
    if (order >= 2) num.set_coeff(2, 1);
    SeriesQ den(order);  // (2y+1)^2 = 1 + 4y + 4y^2
    den.set_coeff(0, 1);
    if (order >= 1) den.set_coeff(1, 4);
    if (order >= 2) den.set_coeff(2, 4);
    return mul(num, invert(den));
}

std::vector<SeriesQ> harer_zagier(int max_genus, int max_arcs) {
    std::vector<std::vector<Rational>> c(static_cast<size_t>(max_genus) + 1,
                                         std::vector<Rational>(static_cast<size_t>(max_arcs) + 1, 0));
    for (int g = 0; g <= max_genus; ++g) {
        for (int n = 0; n <= max_arcs; ++n) {
            if (2 * g > n) continue;
            if (n == 0) {
                c[static_cast<size_t>(g)][0] = (g == 0) ? 1 : 0;
                continue;
            }
            Rational v = Rational(2 * (2 * n - 1)) * c[static_cast<size_t>(g)][static_cast<size_t>(n - 1)];
            if (g >= 1 && n >= 2)
                v += Rational(static_cast<long>(2 * n - 1) * (n - 1) * (2 * n - 3)) *
                     c[static_cast<size_t>(g - 1)][static_cast<size_t>(n - 2)];
            c[static_cast<size_t>(g)][static_cast<size_t>(n)] = v / Rational(n + 1);
        }
    }
    std::vector<SeriesQ> out;
    out.reserve(static_cast<size_t>(max_genus) + 1);
    for (int g = 0; g <= max_genus; ++g) {
        SeriesQ s(std::move(c[static_cast<size_t>(g)]), max_arcs);
        assert_integral(s, "harer_zagier");
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<SeriesQ> bicellular_q(int max_genus, int max_arcs, const std::vector<SeriesQ>& c) {
    if (static_cast<int>(c.size()) < max_genus + 2 || c[0].order() < max_arcs + 1)
        throw TruncationTooLow("bicellular_q needs the c-table through genus g*+1 and order n*+1");
    std::vector<SeriesQ> out;
    out.reserve(static_cast<size_t>(max_genus) + 1);
    for (int g = 0; g <= max_genus; ++g) {
        SeriesQ s(max_arcs);
        for (int n = 0; n <= max_arcs; ++n) {
            Rational v = c[static_cast<size_t>(g + 1)].coeff(n + 1);
            for (int g1 = 0; g1 <= g + 1; ++g1)
                for (int i = 0; i <= n; ++i)
                    v -= c[static_cast<size_t>(g1)].coeff(i) *
                         c[static_cast<size_t>(g + 1 - g1)].coeff(n - i);
            if (sgn(v) < 0) throw InconsistentSystem("bicellular count went negative");
            s.set_coeff(n, v);
        }
        assert_integral(s, "bicellular_q");
        out.push_back(std::move(s));
    }
    return out;
}

SeriesB bivariate_from_layers(const std::vector<SeriesQ>& layers, int order, int tcap) {
    SeriesB out(order);
    for (int n = 0; n <= order; ++n) {
        Poly p;
        for (int g = 0; g < static_cast<int>(layers.size()); ++g) {
            if (tcap >= 0 && g > tcap) break;
            if (n <= layers[static_cast<size_t>(g)].order()) {
                const Rational& v = layers[static_cast<size_t>(g)].coeff(n);
                if (sgn(v) != 0) p.set_coeff(g, v);
            }
        }
        out.set_coeff(n, std::move(p));
    }
    return out;
}

SeriesB omega_bivariate(const SeriesB& C, int tcap) {
    int order = C.order();
    SeriesB u = SeriesB::identity(order);
    SeriesB uC2 = mul(u, mul(C, C, tcap), tcap);
    SeriesB one = SeriesB::constant(Poly::constant(1), order);
    return mul(uC2, invert(sub(one, uC2), tcap), tcap);
}

namespace {

/* read a y-polynomial off a y-series that must die beyond max_degree */
Poly polynomial_from_series(const SeriesQ& s, int max_degree, const char* what) {
    for (int k = max_degree + 1; k <= s.order(); ++k)
        if (sgn(s.coeff(k)) != 0)
            throw InconsistentSystem(std::string(what) + ": nonzero series tail at y^" +
                                     std::to_string(k));
    assert_integral(s.truncated(max_degree), what);
    Poly p;
    for (int k = 0; k <= std::min(max_degree, s.order()); ++k)
        if (sgn(s.coeff(k)) != 0) p.set_coeff(k, s.coeff(k));
    return p;
}

}  // namespace

std::vector<Poly> irreducible_1bb(int max_genus, int order) {
    if (order < 0) order = 6 * std::max(max_genus, 1) + 2;
    if (max_genus >= 1 && order < 6 * max_genus - 2)
        throw TruncationTooLow("irreducible_1bb needs series order >= 6g*-2 = " +
                               std::to_string(6 * max_genus - 2));
    int tcap = max_genus;
    auto c = harer_zagier(max_genus, order);
    SeriesB C = bivariate_from_layers(c, order, tcap);
    SeriesB C2 = mul(C, C, tcap);
    SeriesB om = omega_bivariate(C, tcap);
    SeriesQ theta = theta_series(order);
    SeriesQ u = SeriesQ::identity(order);

    std::vector<Poly> I(static_cast<size_t>(max_genus) + 1);  // I[0] stays zero
    for (int g = 1; g <= max_genus; ++g) {
        SeriesQ J = sub(c[static_cast<size_t>(g)].truncated(order), mul(u, t_slice(C2, g)));
        for (int j = 1; j < g; ++j) {
            SeriesB comp = compose_poly(I[static_cast<size_t>(j)], om, tcap);
            J = sub(J, t_slice(comp, g - j));
        }
        SeriesQ in_y = compose(J, theta);
        I[static_cast<size_t>(g)] = polynomial_from_series(in_y, 6 * g - 2, "irreducible_1bb");
    }
    return I;
}

namespace {

/* the cleared-denominator residual of the two-backbone product formula:
 * Q (1 - t IB)(1 - uC^2 - IA - t IB) - C^2 (IA + IB - t IB^2 - IA IB + uC^2 (1 - IB))
 * vanishes identically when IA, IB carry the true shadow polynomials. */
SeriesB product_formula_residual(const SeriesB& Q, const SeriesB& C, const SeriesB& IA,
                                 const SeriesB& IB, int tcap) {
    int order = C.order();
    SeriesB one = SeriesB::constant(Poly::constant(1), order);
    SeriesB u = SeriesB::identity(order);
    SeriesB tpoly = SeriesB::constant(Poly::monomial(1, 1), order);
    SeriesB C2 = mul(C, C, tcap);
    SeriesB uC2 = mul(u, C2, tcap);
    SeriesB tIB = mul(tpoly, IB, tcap);
    SeriesB lhs = mul(Q, mul(sub(one, tIB), sub(sub(sub(one, uC2), IA), tIB), tcap), tcap);
    SeriesB inner = add(sub(sub(add(IA, IB), mul(tpoly, mul(IB, IB, tcap), tcap)), mul(IA, IB, tcap)),
                        mul(uC2, sub(one, IB), tcap));
    SeriesB rhs = mul(C2, inner, tcap);
    return sub(lhs, rhs);
}

}  // namespace

TwoBackbonePolys two_bb_shadow_polys(int max_genus) {
    int order = 6 * (max_genus + 1) + 2;
    int tcap = max_genus;
    auto c = harer_zagier(max_genus + 1, order + 1);
    auto qtab = bicellular_q(max_genus, order, c);
    auto i1 = irreducible_1bb(max_genus, order);

    SeriesB C = bivariate_from_layers(c, order, tcap);
    SeriesB Q = bivariate_from_layers(qtab, order, tcap);
    SeriesB om = omega_bivariate(C, tcap);
    SeriesQ theta = theta_series(order);
    SeriesQ u = SeriesQ::identity(order);
    SeriesQ one = SeriesQ::constant(1, order);

    // 1 / (C0^2 - u C0^4), the multiplier of the unknown B-polynomial layer
    SeriesQ C0 = t_slice(C, 0);
    SeriesQ C0sq = mul(C0, C0);
    SeriesQ denomB_inv = invert(sub(C0sq, mul(u, mul(C0sq, C0sq))));

    TwoBackbonePolys out;
    out.A.assign(static_cast<size_t>(max_genus) + 1, Poly{});
    out.B.assign(static_cast<size_t>(max_genus) + 1, Poly{});

    SeriesB IA = SeriesB(order);  // accumulates t^j I_{2,A_j}(omega)
    SeriesB IB = SeriesB(order);
    for (int g = 0; g <= max_genus; ++g) {
        if (g >= 1) {
            // Claim 2: I_{2,A_g} = 2(y^2+y) I_g' - I_g - I_{2,B_{g-1}}
            const Poly& Ig = i1[static_cast<size_t>(g)];
            Poly two_y2y = poly_from_ints({0, 2, 2});
            Poly Ag = two_y2y * Ig.derivative() - Ig - out.B[static_cast<size_t>(g - 1)];
            for (int k = 0; k <= Ag.degree(); ++k)
                if (sgn(Ag.coeff(k)) < 0)
                    throw InconsistentSystem("negative coefficient in I_{2,A}");
            out.A[static_cast<size_t>(g)] = Ag;
        }
        if (!out.A[static_cast<size_t>(g)].is_zero()) {
            SeriesB comp = compose_poly(out.A[static_cast<size_t>(g)], om, tcap);
            IA = add(IA, mul(SeriesB::constant(Poly::monomial(1, g), order), comp, tcap));
        }
        // extract I_{2,B_g} from the [t^g] layer with IB still missing its t^g part
        SeriesB resid = product_formula_residual(Q, C, IA, IB, tcap);
        SeriesQ b_of_u = mul(t_slice(resid, g), denomB_inv);
        SeriesQ b_of_y = compose(b_of_u, theta);
        out.B[static_cast<size_t>(g)] =
            polynomial_from_series(b_of_y, max_arcs_2bb(g), "two_bb_shadow_polys");
        SeriesB compB = compose_poly(out.B[static_cast<size_t>(g)], om, tcap);
        IB = add(IB, mul(SeriesB::constant(Poly::monomial(1, g), order), compB, tcap));
        // with the level filled in, the whole [t^g] layer must cancel
        SeriesB check = product_formula_residual(Q, C, IA, IB, tcap);
        if (!t_slice(check, g).is_zero())
            throw InconsistentSystem("two-backbone extraction left a nonzero [t^" +
                                     std::to_string(g) + "] residual");
    }
    return out;
}

GenusTables build_genus_tables(int max_genus, int max_arcs) {
    GenusTables t;
    t.max_genus = max_genus;
    t.max_order = (max_arcs < 0) ? 6 * (max_genus + 1) + 2 : max_arcs;
    t.c = harer_zagier(max_genus + 1, t.max_order + 1);
    t.q = bicellular_q(max_genus, t.max_order, t.c);
    t.i1 = irreducible_1bb(max_genus, std::max(t.max_order, 6 * std::max(max_genus, 1) + 2));
    auto ab = two_bb_shadow_polys(max_genus);
    t.i2A = std::move(ab.A);
    t.i2B = std::move(ab.B);
    t.c.resize(static_cast<size_t>(max_genus) + 1);
    for (auto& s : t.c) s = s.truncated(t.max_order);
    return t;
}

}  // namespace cdg
