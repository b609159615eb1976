#include "cdg/gamma_series.hpp"

#include <string>

namespace cdg {

SeriesB h_gamma_bivariate(const GammaConfig& cfg, const std::vector<Poly>& i1, int tcap) {
    int order = cfg.u_order;
    if (tcap < 0) tcap = order / 2 + 1;
    std::vector<std::vector<Poly>> lifted;  // I_{g,1} coefficients lifted to t-constants
    for (int g = 1; g <= cfg.gamma; ++g) {
        std::vector<Poly> cs;
        const Poly& p = i1.at(static_cast<size_t>(g));
        for (int k = 0; k <= p.degree(); ++k) cs.push_back(Poly::constant(p.coeff(k)));
        lifted.push_back(std::move(cs));
    }
    auto step = [&](const SeriesB& h) {
        int ord = h.order();
        SeriesB one = SeriesB::constant(Poly::constant(1), ord);
        SeriesB u = SeriesB::identity(ord);
        SeriesB h2 = mul(h, h, tcap);
        SeriesB uh2 = mul(u, h2, tcap);
        SeriesB x = mul(uh2, invert(sub(one, uh2), tcap), tcap);
        SeriesB acc(ord);
        for (int g = 1; g <= cfg.gamma; ++g) {
            SeriesB term = compose(lifted[static_cast<size_t>(g - 1)], x, tcap);
            acc = add(acc, mul(SeriesB::constant(Poly::monomial(1, g), ord), term, tcap));
        }
        SeriesB rhs = sub(one, add(mul(u, h, tcap), mul(invert(h, tcap), acc, tcap)));
        return invert(rhs, tcap);
    };
    SeriesB seed = SeriesB::constant(Poly::constant(1), order);
    return solve_fixed_point<Poly>(step, seed, order);
}

namespace {

SeriesB product_formula(const SeriesB& H, const SeriesB& IA, const SeriesB& IB, int tcap) {
    int order = H.order();
    SeriesB one = SeriesB::constant(Poly::constant(1), order);
    SeriesB u = SeriesB::identity(order);
    SeriesB tpoly = SeriesB::constant(Poly::monomial(1, 1), order);
    SeriesB H2 = mul(H, H, tcap);
    SeriesB uH2 = mul(u, H2, tcap);
    SeriesB tIB = mul(tpoly, IB, tcap);
    SeriesB num = mul(H2,
                      add(sub(sub(add(IA, IB), mul(tIB, IB, tcap)), mul(IA, IB, tcap)),
                          mul(uH2, sub(one, IB), tcap)),
                      tcap);
    SeriesB den = mul(sub(one, tIB), sub(sub(sub(one, uH2), IA), tIB), tcap);
    return mul(num, invert(den, tcap), tcap);
}

SeriesB compose_ab_sum(const std::vector<Poly>& polys, int upto, const SeriesB& x, int tcap,
                       int order) {
    SeriesB acc(order);
    for (int g = 0; g <= upto; ++g) {
        const Poly& p = polys.at(static_cast<size_t>(g));
        if (p.is_zero()) continue;
        SeriesB comp = compose_poly(p, x, tcap);
        acc = add(acc, mul(SeriesB::constant(Poly::monomial(1, g), order), comp, tcap));
    }
    return acc;
}

}  // namespace

SeriesB q_full_bivariate(int u_order, const GenusTables& tables) {
    int tcap = genus_cap_for_arcs(u_order);
    int have = static_cast<int>(tables.i2A.size()) - 1;
    if (tcap > have)
        throw TruncationTooLow("order " + std::to_string(u_order) + " reaches genus " +
                               std::to_string(tcap) + " but A/B polynomials stop at genus " +
                               std::to_string(have));
    SeriesB C = bivariate_from_layers(tables.c, u_order, tcap);
    SeriesB om = omega_bivariate(C, tcap);
    SeriesB IA = compose_ab_sum(tables.i2A, have, om, tcap, u_order);
    SeriesB IB = compose_ab_sum(tables.i2B, have, om, tcap, u_order);
    return product_formula(C, IA, IB, tcap);
}

SeriesB q_gamma_bivariate(const GammaConfig& cfg, const std::vector<Poly>& i1,
                          const TwoBackbonePolys& ab, int tcap) {
    int order = cfg.u_order;
    if (tcap < 0) tcap = genus_cap_for_arcs(order) + 1;
    SeriesB H = h_gamma_bivariate(cfg, i1, tcap);
    SeriesB one = SeriesB::constant(Poly::constant(1), order);
    SeriesB u = SeriesB::identity(order);
    SeriesB uH2 = mul(u, mul(H, H, tcap), tcap);
    SeriesB x = mul(uH2, invert(sub(one, uH2), tcap), tcap);
    SeriesB IA = compose_ab_sum(ab.A, cfg.gamma, x, tcap, order);
    SeriesB IB = compose_ab_sum(ab.B, cfg.gamma, x, tcap, order);
    return product_formula(H, IA, IB, tcap);
}

SeriesB a_series(int u_order, const GenusTables& tables) {
    int tcap = genus_cap_for_arcs(u_order) + 1;
    SeriesB C = bivariate_from_layers(tables.c, u_order, tcap);
    SeriesB one = SeriesB::constant(Poly::constant(1), u_order);
    SeriesB u = SeriesB::identity(u_order);
    SeriesB C2 = mul(C, C, tcap);
    SeriesB C4 = mul(C2, C2, tcap);
    return mul(mul(u, C4, tcap), invert(sub(one, mul(u, C2, tcap)), tcap), tcap);
}

namespace {

/* exact Lagrange interpolation through (j, values[j]), j = 0..k, Newton form */
Poly interpolate_integer_nodes(const std::vector<Rational>& values) {
    int k = static_cast<int>(values.size()) - 1;
    std::vector<Rational> dd(values.begin(), values.end());  // divided differences
    for (int level = 1; level <= k; ++level)
        for (int i = k; i >= level; --i)
            dd[static_cast<size_t>(i)] =
                (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) / Rational(level);
    // expand newton form sum dd[i] * prod_{j<i} (t - j)
    Poly acc;
    Poly basis = Poly::constant(1);
    for (int i = 0; i <= k; ++i) {
        if (sgn(dd[static_cast<size_t>(i)]) != 0) acc = acc + dd[static_cast<size_t>(i)] * basis;
        basis = basis * Poly({Rational(-i), Rational(1)});
    }
    return acc;
}

}  // namespace

SeriesB canonical_gf(const GammaConfig& cfg, int z_order, const std::vector<Poly>& i1,
                     const TwoBackbonePolys& ab) {
    int max_arcs = z_order / 2;
    int tcap = genus_cap_for_arcs(max_arcs);
    int nodes = tcap + 2;  // one spare node to confirm the degree cap
    std::vector<SeriesQ> slices;
    slices.reserve(static_cast<size_t>(nodes));
    for (int t0 = 0; t0 < nodes; ++t0)
        slices.push_back(canonical_scalar<Rational>(cfg.gamma, cfg.tau, z_order, Rational(t0), i1, ab));
    SeriesB out(z_order);
    for (int n = 0; n <= z_order; ++n) {
        std::vector<Rational> vals;
        vals.reserve(static_cast<size_t>(tcap) + 1);
        for (int t0 = 0; t0 <= tcap; ++t0) vals.push_back(slices[static_cast<size_t>(t0)].coeff(n));
        Poly p = interpolate_integer_nodes(vals);
        if (eval_rational(p, Rational(tcap + 1)) != slices[static_cast<size_t>(tcap + 1)].coeff(n))
            throw InconsistentSystem("canonical genus layers exceed the genus cap at z^" +
                                     std::to_string(n));
        out.set_coeff(n, std::move(p));
    }
    return out;
}

SeriesT shape_gf(const GammaConfig& cfg, const std::vector<Poly>& i1, const TwoBackbonePolys& ab) {
    int order = cfg.u_order;
    GammaConfig qcfg = cfg;
    SeriesB Q = q_gamma_bivariate(qcfg, i1, ab);

    auto c2 = [](long v) { return Poly2::constant(Poly::constant(Rational(v))); };
    SeriesT one = SeriesT::constant(c2(1), order);
    SeriesT u = SeriesT::identity(order);
    SeriesT one_plus_u = add(one, u);
    // 1 + (2 - e) u : the e-marked denominator base
    SeriesT den(order);
    den.set_coeff(0, c2(1));
    if (order >= 1) {
        Poly two_minus_e({Rational(2), Rational(-1)});  // in e
        den.set_coeff(1, Poly2::constant(two_minus_e));
    }
    SeriesT deninv = invert(den);
    SeriesT deninv2 = mul(deninv, deninv);
    SeriesT arg = mul(mul(u, one_plus_u), deninv2);      // u(1+u)/(1+2u-ue)^2
    SeriesT pref = mul(mul(one_plus_u, one_plus_u), deninv2);
    // Horner over Q's u-coefficients (polynomials in t, lifted to (t,e))
    SeriesT out(order);
    for (int k = Q.order(); k >= 0; --k) {
        out = mul(out, arg);
        const Poly& pt = Q.coeff(k);
        if (!pt.is_zero()) {
            Poly2 lift;
            for (int g = 0; g <= pt.degree(); ++g)
                if (sgn(pt.coeff(g)) != 0) lift.set_coeff(g, Poly::constant(pt.coeff(g)));
            out.set_coeff(0, out.coeff(0) + lift);
        }
    }
    return mul(pref, out);
}

GammaSeriesBundle build_bundle(const GammaConfig& cfg, const GenusTables& tables) {
    GammaSeriesBundle b;
    b.cfg = cfg;
    b.H = h_gamma_scalar<Rational>(cfg.gamma, cfg.u_order, Rational(1), tables.i1);
    TwoBackbonePolys ab{tables.i2A, tables.i2B};
    b.Q = q_gamma_scalar<Rational>(cfg.gamma, cfg.u_order, Rational(1), tables.i1, ab);
    assert_integral(b.H, "H_gamma");
    assert_integral(b.Q, "Q_gamma");
    if (cfg.bivariate) {
        GammaConfig c2 = cfg;
        b.H_biv = h_gamma_bivariate(c2, tables.i1);
        b.Q_biv = q_gamma_bivariate(c2, tables.i1, ab);
    }
    b.I2A_gamma = SeriesB(cfg.u_order);
    b.I2B_gamma = SeriesB(cfg.u_order);
    for (int g = 0; g <= cfg.gamma; ++g) {
        for (int k = 0; k <= std::min(cfg.u_order, tables.i2A.at(static_cast<size_t>(g)).degree()); ++k)
            if (sgn(tables.i2A[static_cast<size_t>(g)].coeff(k)) != 0) {
                Poly p = b.I2A_gamma.coeff(k);
                p.set_coeff(g, tables.i2A[static_cast<size_t>(g)].coeff(k));
                b.I2A_gamma.set_coeff(k, p);
            }
        for (int k = 0; k <= std::min(cfg.u_order, tables.i2B.at(static_cast<size_t>(g)).degree()); ++k)
            if (sgn(tables.i2B[static_cast<size_t>(g)].coeff(k)) != 0) {
                Poly p = b.I2B_gamma.coeff(k);
                p.set_coeff(g, tables.i2B[static_cast<size_t>(g)].coeff(k));
                b.I2B_gamma.set_coeff(k, p);
            }
    }
    TwoBackbonePolys ab2{tables.i2A, tables.i2B};
    b.Q_tau = canonical_gf(cfg, cfg.u_order, tables.i1, ab2);
    return b;
}

}  // namespace cdg
