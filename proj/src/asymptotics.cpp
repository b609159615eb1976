#include "cdg/asymptotics.hpp"

#include <algorithm>
#include <cmath>

namespace cdg {

namespace {

SingularityEstimate extrapolate_ratios(const std::vector<long double>& a, int richardson) {
    int n_terms = static_cast<int>(a.size());
    if (n_terms < 50) throw TooFewTerms("radius estimation wants >= 50 coefficients, got " +
                                        std::to_string(n_terms));
    int start = n_terms / 2;
    std::vector<long double> seq;
    std::vector<long double> xs;
    for (int n = start; n < n_terms; ++n) {
        if (!(a[static_cast<size_t>(n - 1)] > 0.0L) || !(a[static_cast<size_t>(n)] > 0.0L))
            throw NonPositiveTail("coefficient tail must be positive past burn-in (index " +
                                  std::to_string(n) + ")");
        seq.push_back(a[static_cast<size_t>(n)] / a[static_cast<size_t>(n - 1)]);
        xs.push_back(static_cast<long double>(n));
    }
    for (int lev = 1; lev <= richardson; ++lev) {
        if (seq.size() < 3) break;
        std::vector<long double> nxt;
        for (size_t i = 1; i < seq.size(); ++i) {
            long double x1 = xs[i], x0 = xs[i - 1];
            nxt.push_back((x1 * seq[i] - x0 * seq[i - 1]) / (x1 - x0));
        }
        seq = std::move(nxt);
        xs.erase(xs.begin());
    }
    long double last = seq.back();
    long double prev = seq[seq.size() - 2];
    SingularityEstimate est;
    est.radius = static_cast<double>(1.0L / last);
    est.error_estimate = static_cast<double>(std::fabs(1.0L / last - 1.0L / prev));
    est.terms_used = n_terms - start;
    return est;
}

}  // namespace

SingularityEstimate estimate_radius(const std::vector<long double>& coeffs, int richardson) {
    return extrapolate_ratios(coeffs, richardson);
}

SingularityEstimate estimate_radius(const SeriesQ& series, int richardson) {
    std::vector<long double> a;
    a.reserve(static_cast<size_t>(series.order()) + 1);
    for (int k = 0; k <= series.order(); ++k) a.push_back(to_long_double(series.coeff(k)));
    SingularityEstimate est = extrapolate_ratios(a, richardson);
    est.method = "ratio-richardson-exact";
    return est;
}

std::vector<SingularityEstimate> theta_curve(int gamma, int tau, const std::vector<long double>& ts,
                                             const CltOptions& opt, const std::vector<Poly>& i1,
                                             const TwoBackbonePolys& ab) {
    std::vector<SingularityEstimate> out;
    out.reserve(ts.size());
    for (long double t : ts) {
        SeriesF zc = canonical_scalar<long double>(gamma, tau, opt.z_order, t, i1, ab, opt.variant);
        out.push_back(estimate_radius(zc.coeffs(), opt.richardson));
    }
    return out;
}

namespace {

struct StencilDerivs {
    long double theta1, d1, d2;
};

StencilDerivs stencil(int gamma, int tau, const CltOptions& opt, long double h,
                      const std::vector<Poly>& i1, const TwoBackbonePolys& ab) {
    std::vector<long double> ts = {1.0L - 2 * h, 1.0L - h, 1.0L, 1.0L + h, 1.0L + 2 * h};
    auto ests = theta_curve(gamma, tau, ts, opt, i1, ab);
    long double th[5];
    for (int i = 0; i < 5; ++i) th[i] = static_cast<long double>(ests[static_cast<size_t>(i)].radius);
    StencilDerivs d;
    d.theta1 = th[2];
    d.d1 = (-th[4] + 8 * th[3] - 8 * th[1] + th[0]) / (12 * h);
    d.d2 = (-th[4] + 16 * th[3] - 30 * th[2] + 16 * th[1] - th[0]) / (12 * h * h);
    return d;
}

void mu_sigma(const StencilDerivs& d, double* mu, double* s2) {
    long double ratio = d.d1 / d.theta1;
    *mu = static_cast<double>(-ratio);
    *s2 = static_cast<double>(-d.d2 / d.theta1 - ratio + ratio * ratio);
}

}  // namespace

CltReport clt_params(int gamma, int tau, const CltOptions& opt, const std::vector<Poly>& i1,
                     const TwoBackbonePolys& ab) {
    StencilDerivs full = stencil(gamma, tau, opt, opt.step_h, i1, ab);
    StencilDerivs half = stencil(gamma, tau, opt, opt.step_h / 2, i1, ab);
    double mu_f, s2_f, mu_h, s2_h;
    mu_sigma(full, &mu_f, &s2_f);
    mu_sigma(half, &mu_h, &s2_h);
    CltReport rep;
    rep.gamma = gamma;
    rep.tau = tau;
    rep.mu = mu_h;
    rep.sigma_sq = s2_h;
    rep.theta_at_1 = static_cast<double>(half.theta1);
    rep.theta_prime = static_cast<double>(half.d1);
    rep.theta_second = static_cast<double>(half.d2);
    rep.step_h = static_cast<double>(opt.step_h / 2);
    rep.mu_halving_delta = std::fabs(mu_f - mu_h);
    rep.sigma_sq_halving_delta = std::fabs(s2_f - s2_h);
    if (rep.mu_halving_delta > opt.mu_tolerance)
        throw UnstableDerivative("step halving moved mu by " +
                                 std::to_string(rep.mu_halving_delta) + " (tolerance " +
                                 std::to_string(opt.mu_tolerance) + ")");
    return rep;
}

GenusDistribution genus_distribution(int n, int gamma, int tau, const std::vector<Poly>& i1,
                                     const TwoBackbonePolys& ab) {
    if (n < 2) throw OrderTooLow("need at least two vertices");
    GammaConfig cfg;
    cfg.gamma = gamma;
    cfg.tau = tau;
    SeriesB qt = canonical_gf(cfg, n, i1, ab);
    const Poly& layer = qt.coeff(n);
    Rational total = 0;
    for (int g = 0; g <= layer.degree(); ++g) total += layer.coeff(g);
    if (sgn(total) == 0) throw OrderTooLow("no structures on " + std::to_string(n) + " vertices");
    GenusDistribution dist;
    dist.n = n;
    dist.gamma = gamma;
    dist.tau = tau;
    int gmax = std::max(layer.degree(), 0);
    Rational mean = 0, m2 = 0, m3 = 0, m4 = 0;
    for (int g = 0; g <= gmax; ++g) {
        Rational p = layer.coeff(g) / total;
        dist.probabilities.push_back(p);
        mean += Rational(g) * p;
    }
    for (int g = 0; g <= gmax; ++g) {
        Rational d = Rational(g) - mean;
        const Rational& p = dist.probabilities[static_cast<size_t>(g)];
        Rational d2 = d * d;
        m2 += d2 * p;
        m3 += d2 * d * p;
        m4 += d2 * d2 * p;
    }
    dist.mean = to_double(mean);
    dist.variance = to_double(m2);
    double sd = std::sqrt(dist.variance);
    dist.skewness = sd > 0 ? to_double(m3) / (sd * sd * sd) : 0.0;
    dist.excess_kurtosis = dist.variance > 0 ? to_double(m4) / (dist.variance * dist.variance) - 3.0 : 0.0;
    return dist;
}

}  // namespace cdg
