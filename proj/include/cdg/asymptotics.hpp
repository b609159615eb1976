#ifndef CDG_ASYMPTOTICS_HPP
#define CDG_ASYMPTOTICS_HPP

#include <string>
#include <vector>

#include "cdg/gamma_series.hpp"

namespace cdg {

struct SingularityEstimate {
    double radius = 0;
    double error_estimate = 0;
    std::string method = "ratio-richardson";
    int terms_used = 0;
};

/* Dominant-singularity radius from a positive coefficient tail: ratios
 * a_n/a_{n-1} -> 1/R with c/n corrections, cleaned by iterated Richardson
 * extrapolation; error from the last two extrapolants. */
SingularityEstimate estimate_radius(const std::vector<long double>& coeffs, int richardson = 3);
SingularityEstimate estimate_radius(const SeriesQ& series, int richardson = 3);

struct CltOptions {
    int z_order = 400;
    long double step_h = 2e-3L;
    int richardson = 3;
    double mu_tolerance = 2e-3;  // step-halving drift allowed before UnstableDerivative
    SubstitutionVariant variant = SubstitutionVariant::self_consistent;
};

struct CltReport {
    int gamma = 0;
    int tau = 1;
    double mu = 0;
    double sigma_sq = 0;
    double theta_at_1 = 0;
    double theta_prime = 0;
    double theta_second = 0;
    double step_h = 0;
    double mu_halving_delta = 0;        // |mu(h) - mu(h/2)|
    double sigma_sq_halving_delta = 0;
};

/* radius of Q_{tau,gamma}(z, t) at each numeric t (long double pipeline) */
std::vector<SingularityEstimate> theta_curve(int gamma, int tau, const std::vector<long double>& ts,
                                             const CltOptions& opt, const std::vector<Poly>& i1,
                                             const TwoBackbonePolys& ab);

/* central-limit parameters from a 5-point stencil around t = 1:
 * mu = -theta'(1)/theta(1),
 * sigma^2 = -theta''(1)/theta(1) - theta'(1)/theta(1) + (theta'(1)/theta(1))^2 */
CltReport clt_params(int gamma, int tau, const CltOptions& opt, const std::vector<Poly>& i1,
                     const TwoBackbonePolys& ab);

struct GenusDistribution {
    int n = 0;
    int gamma = 0;
    int tau = 1;
    std::vector<Rational> probabilities;  // P(X = g), g = 0..
    double mean = 0;
    double variance = 0;
    double skewness = 0;
    double excess_kurtosis = 0;
};

/* exact genus distribution of tau-canonical gamma-structures on n vertices */
GenusDistribution genus_distribution(int n, int gamma, int tau, const std::vector<Poly>& i1,
                                     const TwoBackbonePolys& ab);

}  // namespace cdg

#endif
