#ifndef CDG_VERIFY_HPP
#define CDG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cdg/genus_tables.hpp"

namespace cdg {

struct VerifyOptions {
    int max_arcs = 5;       // brute-force range for matchings/shadow censuses
    int max_genus = 2;      // recursion depth to cross-check
    std::uint64_t seed = 20240901;
    int threads = 1;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first failing cell, or a short summary
};

/* The oracle web: every recursion against exhaustive enumeration, every
 * printed polynomial against the recursion, and the structural identities
 * (Euler relation, Lemma-1 counts, Theorem-2 bounds, specializations). */
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

/* individual checks, callable from tests */
CheckResult check_euler_convention(std::uint64_t seed, int samples);
CheckResult check_harer_vs_enumeration(int max_arcs, int threads);
CheckResult check_bicellular_vs_enumeration(int max_arcs, int threads);
CheckResult check_irreducible_1bb_vs_enumeration(int max_arcs, int max_genus);
CheckResult check_two_bb_split_vs_enumeration(int max_arcs, int max_genus);
CheckResult check_eabi_identity(int max_genus, int max_arcs);
CheckResult check_theorem4_vs_bicellular(int max_arcs);
CheckResult check_h_gamma_vs_enumeration(int max_gamma, int max_arcs);
CheckResult check_q_gamma_vs_enumeration(int max_gamma, int max_arcs);
CheckResult check_substitution_variants(int max_arcs);
CheckResult check_claim0_layer(int max_arcs);
CheckResult check_shadow_projection(int max_arcs);
CheckResult check_lemma1_counts(int max_arcs, int max_genus);
CheckResult check_theorem2_bounds(int genus_cap, int max_arcs);
CheckResult check_specialization(int max_gamma, int order);
CheckResult check_gamma_monotonicity(int order);
CheckResult check_genus_support(int order);
CheckResult check_shape_gf_vs_enumeration(int max_arcs);
CheckResult check_canonical_vs_enumeration(int max_vertices);
CheckResult check_canonical_slicing_vs_direct(int z_order);
CheckResult check_bullet_product(std::uint64_t seed, int triples);

}  // namespace cdg

#endif
