#ifndef CDG_GENUS_TABLES_HPP
#define CDG_GENUS_TABLES_HPP

#include <vector>

#include "cdg/series.hpp"

namespace cdg {

/* theta(y) = y(y+1)/(2y+1)^2, the inverse substitution of y = uC0^2/(1-uC0^2) */
SeriesQ theta_series(int order);

/* c_g(n) for g <= max_genus, n <= max_arcs via the Harer recursion
 * (n+1)c_g(n) = 2(2n-1)c_g(n-1) + (2n-1)(n-1)(2n-3)c_{g-1}(n-2),
 * c_g(n) = 0 for 2g > n. Entries come out integral; asserted. */
std::vector<SeriesQ> harer_zagier(int max_genus, int max_arcs);

/* q_g(n) = c_{g+1}(n+1) - sum_{g1} sum_i c_{g1}(i) c_{g+1-g1}(n-i) */
std::vector<SeriesQ> bicellular_q(int max_genus, int max_arcs, const std::vector<SeriesQ>& c);

/* C(u,t) = sum_g C_g(u) t^g as a bivariate series, t capped at tcap */
SeriesB bivariate_from_layers(const std::vector<SeriesQ>& layers, int order, int tcap);

/* omega(u,t) = u C(u,t)^2 / (1 - u C(u,t)^2) */
SeriesB omega_bivariate(const SeriesB& C, int tcap);

/* Irreducible one-backbone shadow polynomials I_g(y), g = 1..max_genus, via
 * I_g(y) = C_g(th) - th [t^g]C(th,t)^2 - sum_{j=1}^{g-1} [t^{g-j}] I_j(omega(th,t)).
 * Computed in u first, then composed with theta; the series tail beyond the
 * degree bound 6g-2 must vanish, and coefficients must be integers. */
std::vector<Poly> irreducible_1bb(int max_genus, int order = -1);

struct TwoBackbonePolys {
    std::vector<Poly> A;  // I_{2,A_g}(y), index = genus
    std::vector<Poly> B;  // I_{2,B_g}(y)
};

/* Solve for the irreducible two-backbone shadow polynomials:
 * I_{2,A_0} = 0; each level extracts I_{2,B_g} from the [t^g] layer of the
 * cleared-denominator form of the Q(u,t) product formula, then gets
 * I_{2,A_{g+1}} = 2(y^2+y) I'_{g+1} - I_{g+1} - I_{2,B_g}. The final level
 * only yields B when I_{g+1} is known, so B stops at max_genus and A at
 * max_genus as well (A_{max_genus} needs I_{max_genus}). */
TwoBackbonePolys two_bb_shadow_polys(int max_genus);

/* everything bundled, built consistently at one working order */
struct GenusTables {
    int max_genus = 0;
    int max_order = 0;
    std::vector<SeriesQ> c;   // matchings over one backbone, by genus
    std::vector<SeriesQ> q;   // connected matchings over two backbones, by genus
    std::vector<Poly> i1;     // irreducible 1bb shadow polynomials (index 0 is zero)
    std::vector<Poly> i2A;
    std::vector<Poly> i2B;
};

GenusTables build_genus_tables(int max_genus, int max_arcs = -1);

/* support bounds from the finiteness theorem: two-backbone irreducible shadows
 * of genus g live on [max(2, 2g+1), 6(g+1)-2], one-backbone on [2g, 6g-2] */
inline int min_arcs_2bb(int g) { return g == 0 ? 2 : 2 * g + 1; }
inline int max_arcs_2bb(int g) { return 6 * (g + 1) - 2; }
inline int min_arcs_1bb(int g) { return 2 * g; }
inline int max_arcs_1bb(int g) { return 6 * g - 2; }

}  // namespace cdg

#endif
