// Acceptance suite: runs the project's exit criteria end to end and prints one
// PASS/FAIL line per criterion (plus sub-results). Exit code 0 iff every
// criterion that ran passed. Criteria 1d and 6 compare against values printed
// in the source material that the oracle web shows to be erroneous; those
// comparisons are kept as stated and fail loudly, with the computed values and
// the cross-validation evidence printed alongside (see README, "Known
// discrepancies").

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <thread>

#include "cdg/asymptotics.hpp"
#include "cdg/enumerate.hpp"
#include "cdg/verify.hpp"

using namespace cdg;

namespace {

int g_failures = 0;
int g_subchecks = 0;

void sub(bool ok, const std::string& what) {
    ++g_subchecks;
    if (!ok) ++g_failures;
    std::cout << "    " << (ok ? "ok   " : "FAIL ") << what << '\n';
}

struct CriterionScope {
    int before;
    std::string title;
    std::chrono::steady_clock::time_point t0;
    explicit CriterionScope(const std::string& t)
        : before(g_failures), title(t), t0(std::chrono::steady_clock::now()) {
        std::cout << "criterion " << title << '\n';
    }
    ~CriterionScope() {
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << "criterion " << title << ": "
                  << (g_failures == before ? "PASS" : "FAIL") << "  (" << dt / 1000.0 << " s)\n";
    }
};

Poly factored(int prefix_deg, int binom_pow, std::initializer_list<long> tail) {
    Poly p = poly_from_ints(tail);
    for (int i = 0; i < binom_pow; ++i) p = p * poly_from_ints({1, 1});
    return Poly::monomial(1, prefix_deg) * p;
}

std::string poly_str(const Poly& p, const char* var) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= p.degree(); ++k) {
        if (sgn(p.coeff(k)) == 0) continue;
        if (!s.empty()) s += " + ";
        s += p.coeff(k).get_str() + std::string(var) + "^" + std::to_string(k);
    }
    return s;
}

void criterion1() {
    CriterionScope scope("1 (golden polynomials)");
    auto i1 = irreducible_1bb(3);
    auto ab = two_bb_shadow_polys(3);

    sub(i1[1] == poly_from_ints({0, 0, 1, 2, 1}), "I_{1,1} = u^2 + 2u^3 + u^4");
    sub(i1[2] == poly_from_ints({0, 0, 0, 0, 17, 160, 566, 1004, 961, 476, 96}),
        "I_{2,1} = 17u^4 + ... + 96u^10");
    sub(ab.A[0] + ab.B[0] == poly_from_ints({0, 0, 3, 3, 1}), "I_{0,2} = 3u^2 + 3u^3 + u^4");
    sub(ab.A[1] + ab.B[1] == poly_from_ints({0, 0, 0, 11, 137, 656, 1520, 1951, 1436, 572, 96}),
        "I_{1,2} = 11u^3 + 137u^4 + ... + 96u^10");

    sub(i1[1] == factored(2, 2, {1}), "I_1 = y^2 (1+y)^2");
    sub(i1[2] == factored(4, 4, {17, 92, 96}), "I_2 = y^4 (1+y)^4 (17 + 92y + 96y^2)");
    sub(i1[3] == factored(6, 6, {1259, 15928, 61850, 92736, 47040}),
        "I_3 = y^6 (1+y)^6 (1259 + ... + 47040y^4)");

    sub(ab.A[1] == poly_from_ints({0, 0, 0, 11, 18, 8}), "I_{2,A_1} = y^3 (11 + 18y + 8y^2)");
    sub(ab.A[2] == factored(5, 1, {928, 5378, 12515, 14520, 8376, 1920}),
        "I_{2,A_2} = y^5 (y+1)(928 + ... + 1920y^5)");
    sub(ab.A[3] == factored(7, 2, {162158, 1835979, 8891051, 24076143, 39943686, 41655548,
                                   26715416, 9649920, 1505280}),
        "I_{2,A_3} = y^7 (y+1)^2 (162158 + ... + 1505280y^8)");
    sub(ab.B[0] == poly_from_ints({0, 0, 3, 3, 1}), "I_{2,B_0} = y^2 (3 + 3y + y^2)");
    sub(ab.B[1] == factored(4, 1, {119, 529, 991, 960, 476, 96}),
        "I_{2,B_1} = y^4 (y+1)(119 + ... + 96y^5)");
    sub(ab.B[2] == factored(6, 2, {13849, 130518, 538113, 1263849, 1847182, 1719618, 995738,
                                   327936, 47040}),
        "I_{2,B_2} = y^6 (y+1)^2 (13849 + ... + 47040y^8)");

    // the gamma-assembled polynomials of the applications section
    sub(ab.A[0].is_zero(), "I_{2,0_A}(u,t) = 0");
    sub(ab.B[0] == poly_from_ints({0, 0, 3, 3, 1}), "I_{2,0_B}(u,t) = 3u^2 + 3u^3 + u^4");
    {
        Poly printed_a1 = poly_from_ints({0, 0, 0, 7, 6});
        bool ok = ab.A[1] == printed_a1;
        sub(ok, "I_{2,1_A}(u,t) t-layer equals the printed (7u^3 + 6u^4)");
        if (!ok)
            std::cout << "         computed " << poly_str(ab.A[1], "u")
                      << " -- the printed value fails the cut identity (criterion 2) and the\n"
                         "         classified brute-force census (criterion 3); see README\n";
        Poly printed_b1 = poly_from_ints({0, 0, 0, 4, 131, 656, 1520, 1951, 1436, 572, 96});
        bool okb = ab.B[1] == printed_b1;
        sub(okb, "I_{2,1_B}(u,t) t-layer equals the printed (4u^3 + 131u^4 + ...)");
        if (!okb)
            std::cout << "         computed " << poly_str(ab.B[1], "u")
                      << " -- same evidence as above; the printed A+B layers do sum to I_{1,2}\n";
    }
}

void criterion2() {
    CriterionScope scope("2 (cross-identities)");
    auto i1 = irreducible_1bb(3);
    auto ab = two_bb_shadow_polys(3);
    sub(ab.A[0] + ab.B[0] == poly_from_ints({0, 0, 3, 3, 1}), "A_0 + B_0 = I_{0,2}");
    Poly i12 = ab.A[1] + ab.B[1];
    sub(i12 == poly_from_ints({0, 0, 0, 11, 137, 656, 1520, 1951, 1436, 572, 96}),
        "A_1 + B_1 = I_{1,2}");
    sub(ab.A[1].coeff(4) + ab.B[1].coeff(4) == 137, "u^4 coefficient: 18 + 119 = 137");
    bool abi = true;
    for (int g = 1; g <= 3 && abi; ++g)
        for (int m = 1; m <= 20 && abi; ++m) {
            Rational lhs = ab.A[size_t(g)].coeff(m) + ab.B[size_t(g - 1)].coeff(m);
            Rational rhs = Rational(2 * m - 1) * i1[size_t(g)].coeff(m) +
                           Rational(2 * (m - 1)) * i1[size_t(g)].coeff(m - 1);
            abi = lhs == rhs;
        }
    sub(abi, "cut identity A_g(m) + B_{g-1}(m) = (2m-1) i_g(m) + 2(m-1) i_g(m-1), g <= 3, m <= 20");
}

void criterion3() {
    CriterionScope scope("3 (oracle equivalence)");
    int threads = std::max(2u, std::thread::hardware_concurrency());
    {
        auto r = check_harer_vs_enumeration(8, threads);
        sub(r.passed, "c_g(n) vs exhaustive enumeration, n <= 8: " + r.detail);
    }
    {
        auto r = check_bicellular_vs_enumeration(6, threads);
        sub(r.passed, "q_g(n) vs exhaustive enumeration, n <= 6: " + r.detail);
    }
    {
        auto r = check_irreducible_1bb_vs_enumeration(5, 2);
        sub(r.passed, "irreducible 1bb shadows, m <= 5, g <= 2: " + r.detail);
    }
    {
        auto r = check_two_bb_split_vs_enumeration(5, 2);
        sub(r.passed, "irreducible 2bb shadows with A/B split, m <= 5, g <= 2: " + r.detail);
    }
    {
        auto r = check_theorem4_vs_bicellular(6);
        sub(r.passed, "[u^n t^g] product formula vs bicellular table, n <= 6: " + r.detail);
    }
}

void criterion4() {
    CriterionScope scope("4 (finiteness bounds)");
    ShadowCensus census = shadow_census_pruned(12, 1);
    bool g0_exact = true, g1_exact = true, g1_full = true;
    for (int m = 2; m <= 12; ++m) {
        std::int64_t k0 = census.get(0, m);
        if ((m >= 2 && m <= 4) != (k0 > 0)) g0_exact = false;
        std::int64_t k1 = census.get(1, m);
        if (m >= 3 && m <= 10 && k1 == 0) g1_full = false;
        if ((m < 3 || m > 10) && k1 != 0) g1_exact = false;
    }
    sub(g0_exact, "genus 0 shadows occupy exactly [2, 4] (checked to m = 12)");
    sub(g1_full, "genus 1 shadows present at every m in [3, 10]");
    sub(g1_exact, "no genus 1 shadow outside [3, 10] (checked to m = 12)");
    ShadowCensus spot = shadow_census_pruned(5, 2);
    sub(spot.get(2, 5) > 0, "genus 2 lower edge m = 2g+1 = 5 is populated (count " +
                                std::to_string(spot.get(2, 5)) + ")");
}

void criterion5(int order) {
    CriterionScope scope("5 (growth constants, order " + std::to_string(order) + ")");
    auto i1 = irreducible_1bb(1);
    auto ab = two_bb_shadow_polys(1);

    SeriesQ h1 = h_gamma_scalar<Rational>(1, order, Rational(1), i1);
    SingularityEstimate rho = estimate_radius(h1);
    double rho_inv = 1.0 / rho.radius;
    sub(std::fabs(rho_inv - 8.28425) / 8.28425 < 0.005,
        "1/rho from H_1 = " + std::to_string(rho_inv) + " (target 8.28425, tol 0.5%)");

    // The printed growth constants belong to the formula as printed (inner
    // argument u H^2/(1-u)); the census-validated variant has its own radii,
    // frozen below as regression values.
    for (int gamma = 0; gamma <= 1; ++gamma) {
        double printed_target = gamma == 0 ? 5.4252 : 8.7266;
        double derived_target = gamma == 0 ? 5.76524 : 8.94995;
        SeriesQ qp = q_gamma_scalar<Rational>(gamma, order, Rational(1), i1, ab,
                                              SubstitutionVariant::as_printed);
        double dp = 1.0 / estimate_radius(qp).radius;
        sub(std::fabs(dp - printed_target) / printed_target < 0.005,
            "1/delta_" + std::to_string(gamma) + " (as-printed variant) = " + std::to_string(dp) +
                " (target " + std::to_string(printed_target) + ", tol 0.5%)");
        SeriesQ qc = q_gamma_scalar<Rational>(gamma, order, Rational(1), i1, ab,
                                              SubstitutionVariant::self_consistent);
        double dc = 1.0 / estimate_radius(qc).radius;
        sub(std::fabs(dc - derived_target) / derived_target < 0.005,
            "1/delta_" + std::to_string(gamma) + " (census-validated variant) = " +
                std::to_string(dc) + " (regression value " + std::to_string(derived_target) + ")");
    }
}

/* finite-n moments of the genus distribution from t-derivatives of the z^n
 * coefficient; an estimation route independent of the singularity stencil */
void slope_moments(int gamma, int tau, int n, const std::vector<Poly>& i1,
                   const TwoBackbonePolys& ab, double* mean, double* var) {
    long double h = 1e-3L;
    long double f[5];
    for (int k = -2; k <= 2; ++k) {
        SeriesF zc = canonical_scalar<long double>(gamma, tau, n, 1.0L + k * h, i1, ab);
        f[k + 2] = zc.coeff(n);
    }
    long double d1 = (-f[4] + 8 * f[3] - 8 * f[1] + f[0]) / (12 * h);
    long double d2 = (-f[4] + 16 * f[3] - 30 * f[2] + 16 * f[1] - f[0]) / (12 * h * h);
    long double E = d1 / f[2];
    long double E2 = d2 / f[2];  // E[X(X-1)]
    *mean = static_cast<double>(E);
    *var = static_cast<double>(E2 + E - E * E);
}

void criterion6(int order) {
    CriterionScope scope("6 (central-limit parameters, order " + std::to_string(order) + ")");
    auto i1 = irreducible_1bb(1);
    auto ab = two_bb_shadow_polys(1);
    const double printed[2][3][2] = {
        {{0.065198, 0.087702}, {0.029719, 0.010128}, {0.019179, 0.006550}},
        {{0.091240, 0.021067}, {0.041235, 0.009358}, {0.026632, 0.006043}},
    };
    for (int gamma = 0; gamma <= 1; ++gamma) {
        for (int tau = 1; tau <= 3; ++tau) {
            CltOptions opt;
            opt.z_order = order;
            CltReport rep = clt_params(gamma, tau, opt, i1, ab);
            double pm = printed[gamma][tau - 1][0], ps = printed[gamma][tau - 1][1];
            bool mu_ok = std::fabs(rep.mu - pm) < 5e-3;
            bool s2_ok = std::fabs(rep.sigma_sq - ps) < 5e-3;
            if (!mu_ok || !s2_ok) {
                // not noise? retry deeper before concluding
                CltOptions deep = opt;
                deep.z_order = 600;
                rep = clt_params(gamma, tau, deep, i1, ab);
                mu_ok = std::fabs(rep.mu - pm) < 5e-3;
                s2_ok = std::fabs(rep.sigma_sq - ps) < 5e-3;
            }
            char line[256];
            std::snprintf(line, sizeof line,
                          "(gamma=%d, tau=%d) mu=%.6f vs %.6f, sigma^2=%.6f vs %.6f "
                          "(halving drift %.1e / %.1e)",
                          gamma, tau, rep.mu, pm, rep.sigma_sq, ps, rep.mu_halving_delta,
                          rep.sigma_sq_halving_delta);
            sub(mu_ok && s2_ok, line);
            if (!mu_ok || !s2_ok) {
                double m2, v2;
                slope_moments(gamma, tau, 320, i1, ab, &m2, &v2);
                double m1, v1;
                slope_moments(gamma, tau, 240, i1, ab, &m1, &v1);
                double mu_slope = (m2 - m1) / 80.0, s2_slope = (v2 - v1) / 80.0;
                bool route_agree = std::fabs(mu_slope - rep.mu) < 2e-3 &&
                                   std::fabs(s2_slope - rep.sigma_sq) < 2e-3;
                std::cout << "         independent finite-n moment route gives mu="
                          << mu_slope << ", sigma^2=" << s2_slope
                          << (route_agree ? " (agrees with the stencil; the printed value is the "
                                            "outlier -- see README)"
                                          : " (routes disagree!)")
                          << '\n';
                if (!route_agree) ++g_failures;
            }
        }
    }
}

void criterion7() {
    CriterionScope scope("7 (specialization suite)");
    auto i1 = irreducible_1bb(1);
    auto ab = two_bb_shadow_polys(1);
    {
        SeriesQ h0 = h_gamma_scalar<Rational>(0, 10, Rational(1), i1);
        long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
        bool ok = true;
        for (int k = 0; k <= 10; ++k) ok = ok && h0.coeff(k) == cat[k];
        sub(ok, "H_0 equals the Catalan series");
    }
    for (int gamma = 0; gamma <= 1; ++gamma) {
        GammaConfig cfg;
        cfg.gamma = gamma;
        cfg.u_order = 9;
        SeriesB Hb = h_gamma_bivariate(cfg, i1);
        SeriesB Qb = q_gamma_bivariate(cfg, i1, ab);
        bool hok = eval_t(Hb, 1) == h_gamma_scalar<Rational>(gamma, 9, Rational(1), i1);
        bool qok = eval_t(Qb, 1) == q_gamma_scalar<Rational>(gamma, 9, Rational(1), i1, ab);
        sub(hok, "H_" + std::to_string(gamma) + "(u,t) at t=1 equals H_" + std::to_string(gamma) + "(u)");
        sub(qok, "Q_" + std::to_string(gamma) + "(u,t) at t=1 equals Q_" + std::to_string(gamma) + "(u)");
        GammaConfig ccfg = cfg;
        ccfg.tau = 1;
        SeriesB Qt = canonical_gf(ccfg, 9, i1, ab);
        bool cok = eval_t(Qt, 1) == canonical_scalar<Rational>(gamma, 1, 9, Rational(1), i1, ab);
        sub(cok, "Q_{1," + std::to_string(gamma) + "}(z,t) at t=1 equals the scalar pipeline");
    }
    {
        // u_tau(z) = (z^2)^{tau-1} / (z^{2 tau} - z^2 + 1) is identically 1 at tau = 1
        int order = 16;
        SeriesQ one = SeriesQ::constant(1, order);
        SeriesQ z2(order), z2t(order);
        z2.set_coeff(2, 1);
        z2t.set_coeff(2, 1);  // tau = 1: z^{2 tau} = z^2
        SeriesQ u1 = mul(SeriesQ::constant(1, order), invert(add(sub(z2t, z2), one)));
        sub(u1 == one, "u_1(z) = 1 identically");
    }
}

void criterion8() {
    CriterionScope scope("8 (normality proxy at n = 150)");
    auto i1 = irreducible_1bb(1);
    auto ab = two_bb_shadow_polys(1);
    GenusDistribution d = genus_distribution(150, 0, 1, i1, ab);
    Rational total = 0;
    for (const auto& p : d.probabilities) total += p;
    sub(total == 1, "probabilities sum to one exactly");
    char line[160];
    std::snprintf(line, sizeof line, "|skewness| = %.4f < 0.3", std::fabs(d.skewness));
    sub(std::fabs(d.skewness) < 0.3, line);
    std::snprintf(line, sizeof line, "|excess kurtosis| = %.4f < 0.5", std::fabs(d.excess_kurtosis));
    sub(std::fabs(d.excess_kurtosis) < 0.5, line);
    GenusDistribution d200 = genus_distribution(200, 0, 1, i1, ab);
    double ratio = d200.mean / 200.0;
    std::snprintf(line, sizeof line, "mean/n at n=200 is %.6f, within 15%% of 0.065198", ratio);
    sub(std::fabs(ratio - 0.065198) / 0.065198 < 0.15, line);
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    int order5 = 400, order6 = 400;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
        if (!std::strcmp(argv[i], "--order") && i + 1 < argc) order5 = order6 = std::atoi(argv[++i]);
    }
    auto want = [&](int k) { return only == 0 || only == k; };
    try {
        if (want(1)) criterion1();
        if (want(2)) criterion2();
        if (want(3)) criterion3();
        if (want(4)) criterion4();
        if (want(5)) criterion5(order5);
        if (want(6)) criterion6(order6);
        if (want(7)) criterion7();
        if (want(8)) criterion8();
    } catch (const std::exception& e) {
        std::cout << "acceptance aborted: " << e.what() << '\n';
        return 3;
    }
    std::cout << (g_failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(g_failures) + " of " +
                                        std::to_string(g_subchecks) + " checks failed")
              << '\n';
    return g_failures == 0 ? 0 : 1;
}
