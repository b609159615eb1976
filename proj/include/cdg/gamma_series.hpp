#ifndef CDG_GAMMA_SERIES_HPP
#define CDG_GAMMA_SERIES_HPP

#include <vector>

#include "cdg/genus_tables.hpp"
#include "cdg/series.hpp"

namespace cdg {

struct GammaConfig {
    int gamma = 0;
    int tau = 1;
    int u_order = 60;
    bool bivariate = false;
};

/* Which inner argument feeds the I_{g,2} substitution in the univariate
 * two-backbone formula. The paper prints u H^2/(1-u); the t=1 slice of the
 * bivariate product formula gives u H^2/(1-u H^2). Both are computed; the
 * brute-force census arbitrates which one counts (the self-consistent one),
 * and the printed variant is kept because the paper's growth constants and
 * Table 1 belong to it. */
enum class SubstitutionVariant { as_printed, self_consistent };

namespace detail {

template <class K>
K from_rational(const Rational& q);
template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }
template <>
inline long double from_rational<long double>(const Rational& q) { return to_long_double(q); }

template <class K>
std::vector<K> poly_coeffs(const Poly& p) {
    std::vector<K> out;
    out.reserve(static_cast<size_t>(p.degree() < 0 ? 0 : p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) out.push_back(from_rational<K>(p.coeff(k)));
    return out;
}

}  // namespace detail

/* H_gamma at a numeric genus weight t0 (t0 = 1 gives the plain univariate
 * series): unique solution with constant term 1 of
 *   H^{-1} = 1 - ( u H + H^{-1} sum_{g<=gamma} t0^g I_{g,1}( uH^2/(1-uH^2) ) ).
 * K is the coefficient field: exact rationals, or long double inside the
 * asymptotics layer. */
template <class K>
Series<K> h_gamma_scalar(int gamma, int order, const K& t0, const std::vector<Poly>& i1) {
    using S = Series<K>;
    std::vector<std::vector<K>> ipolys;
    for (int g = 1; g <= gamma; ++g) ipolys.push_back(detail::poly_coeffs<K>(i1.at(static_cast<size_t>(g))));
    std::vector<K> tpow;
    {
        K acc = detail::from_rational<K>(Rational(1));
        for (int g = 0; g <= gamma; ++g) {
            tpow.push_back(acc);
            acc = acc * t0;
        }
    }
    auto step = [&](const S& h) {
        int ord = h.order();
        S one = S::constant(detail::from_rational<K>(Rational(1)), ord);
        S u = S::identity(ord);
        S h2 = mul(h, h);
        S uh2 = mul(u, h2);
        S x = mul(uh2, invert(sub(one, uh2)));
        S acc(ord);
        for (int g = 1; g <= gamma; ++g) {
            S term = compose(ipolys[static_cast<size_t>(g - 1)], x);
            for (int k = 0; k <= ord; ++k)
                acc.set_coeff(k, acc.coeff(k) + tpow[static_cast<size_t>(g)] * term.coeff(k));
        }
        S rhs = sub(one, add(mul(u, h), mul(invert(h), acc)));
        return invert(rhs);
    };
    S seed = S::constant(detail::from_rational<K>(Rational(1)), order);
    return solve_fixed_point<K>(step, seed, order);
}

/* Q_gamma at numeric t0 via the two-backbone product formula with the
 * genus-marked A/B polynomials (the bivariate corollary, t evaluated):
 *   Q = H^2 (IA + IB - t0 IB^2 - IA IB + uH^2(1 - IB))
 *       / ((1 - t0 IB)(1 - uH^2 - IA - t0 IB)),
 * IA = sum t0^g I_{2,A_g}(x), IB likewise; x per the chosen variant. */
template <class K>
Series<K> q_gamma_scalar(int gamma, int order, const K& t0, const std::vector<Poly>& i1,
                         const TwoBackbonePolys& ab,
                         SubstitutionVariant variant = SubstitutionVariant::self_consistent) {
    using S = Series<K>;
    S H = h_gamma_scalar<K>(gamma, order, t0, i1);
    S one = S::constant(detail::from_rational<K>(Rational(1)), order);
    S u = S::identity(order);
    S H2 = mul(H, H);
    S uH2 = mul(u, H2);
    S x = (variant == SubstitutionVariant::self_consistent)
              ? mul(uH2, invert(sub(one, uH2)))
              : mul(uH2, invert(sub(one, u)));
    S IA(order), IB(order);
    K tg = detail::from_rational<K>(Rational(1));
    for (int g = 0; g <= gamma; ++g) {
        S ca = compose(detail::poly_coeffs<K>(ab.A.at(static_cast<size_t>(g))), x);
        S cb = compose(detail::poly_coeffs<K>(ab.B.at(static_cast<size_t>(g))), x);
        for (int k = 0; k <= order; ++k) {
            IA.set_coeff(k, IA.coeff(k) + tg * ca.coeff(k));
            IB.set_coeff(k, IB.coeff(k) + tg * cb.coeff(k));
        }
        tg = tg * t0;
    }
    S t0IB(order);
    for (int k = 0; k <= order; ++k) t0IB.set_coeff(k, t0 * IB.coeff(k));
    S num = mul(H2, add(sub(sub(add(IA, IB), mul(t0IB, IB)), mul(IA, IB)), mul(uH2, sub(one, IB))));
    S den = mul(sub(one, t0IB), sub(sub(sub(one, uH2), IA), t0IB));
    return mul(num, invert(den));
}

/* tau-canonical interaction structures by total vertices z at numeric t0:
 *   Q_{tau,gamma}(z,t) = (u_tau z^2 - z + 1)^{-2} Q_gamma( u_tau z^2 (u_tau z^2 - z + 1)^{-2}, t )
 * with u_tau(z) z^2 = z^{2 tau} / (z^{2 tau} - z^2 + 1). */
template <class K>
Series<K> canonical_scalar(int gamma, int tau, int z_order, const K& t0,
                           const std::vector<Poly>& i1, const TwoBackbonePolys& ab,
                           SubstitutionVariant variant = SubstitutionVariant::self_consistent) {
    using S = Series<K>;
    if (tau < 1) throw BadInput("tau must be >= 1");
    int u_order = z_order / (2 * tau) + 1;
    S Q = q_gamma_scalar<K>(gamma, u_order, t0, i1, ab, variant);
    S one = S::constant(detail::from_rational<K>(Rational(1)), z_order);
    S z = S::identity(z_order);
    S z2(z_order), z2t(z_order);
    if (z_order >= 2) z2.set_coeff(2, detail::from_rational<K>(Rational(1)));
    if (z_order >= 2 * tau) z2t.set_coeff(2 * tau, detail::from_rational<K>(Rational(1)));
    S utz2 = mul(z2t, invert(add(sub(z2t, z2), one)));
    S den = add(sub(utz2, z), one);
    S deninv = invert(den);
    S deninv2 = mul(deninv, deninv);
    S x = mul(utz2, deninv2);
    S out = compose(Q, x);
    return mul(deninv2, out);
}

/* ---- exact bivariate objects ---- */

/* genus-marked H_gamma(u,t): Eq-stru with each I_{g,1} weighted by t^g */
SeriesB h_gamma_bivariate(const GammaConfig& cfg, const std::vector<Poly>& i1, int tcap = -1);

/* the full (unfiltered) product formula: [u^n t^g] = q_g(n) */
SeriesB q_full_bivariate(int u_order, const GenusTables& tables);

/* Q_gamma(u,t) by the genus-filtered product formula */
SeriesB q_gamma_bivariate(const GammaConfig& cfg, const std::vector<Poly>& i1,
                          const TwoBackbonePolys& ab, int tcap = -1);

/* genus reachable by an n-arc connected two-backbone matching */
inline int genus_cap_for_arcs(int n_arcs) { return n_arcs <= 0 ? 0 : (n_arcs - 1) / 2; }

/* exact Q_{tau,gamma}(z,t), assembled from integer-t slices of the scalar
 * pipeline and exact Lagrange interpolation of each z-coefficient (one spare
 * node verifies the genus cap); equals the direct composition of
 * q_gamma_bivariate with the canonical substitution */
SeriesB canonical_gf(const GammaConfig& cfg, int z_order, const std::vector<Poly>& i1,
                     const TwoBackbonePolys& ab);

/* shape generating function S_gamma(u, t, e): u marks arcs, t genus, e the
 * interior length-one arcs. coefficient of u^n is a polynomial in t whose
 * coefficients are polynomials in e. */
SeriesT shape_gf(const GammaConfig& cfg, const std::vector<Poly>& i1, const TwoBackbonePolys& ab);

/* A(u,t) = u C(u,t)^4 / (1 - u C(u,t)^2): the layer of matchings whose
 * exterior arcs form one stack (no irreducible two-backbone shadow) */
SeriesB a_series(int u_order, const GenusTables& tables);

struct GammaSeriesBundle {
    GammaConfig cfg;
    SeriesQ H;
    SeriesQ Q;
    SeriesB H_biv;
    SeriesB Q_biv;
    SeriesB I2A_gamma;  // sum_{g<=gamma} I_{2,A_g}(u) t^g, as a u-series
    SeriesB I2B_gamma;
    SeriesB Q_tau;      // canonical structures in (z, t)
};

GammaSeriesBundle build_bundle(const GammaConfig& cfg, const GenusTables& tables);

}  // namespace cdg

#endif
