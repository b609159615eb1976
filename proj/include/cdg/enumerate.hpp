#ifndef CDG_ENUMERATE_HPP
#define CDG_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdg/diagram.hpp"

namespace cdg {

enum class EnumMode { matchings_1bb, matchings_2bb, shadows_1bb, shadows_2bb };

struct EnumFilters {
    std::optional<int> genus;          // keep only this total genus
    std::optional<bool> irreducible;   // require / forbid irreducibility
    std::optional<bool> connected;     // require / forbid connectivity
    std::optional<ShadowClass> ab;     // two-backbone shadows only
    std::optional<int> gamma;          // max irreducible-shadow genus
};

struct ShadowCensus {
    // key: (genus, arcs, class) with class -1 = unsplit, 0 = A, 1 = B
    std::map<std::tuple<int, int, int>, std::int64_t> counts;
    void add(int g, int m, int cls, std::int64_t k = 1) {
        counts[{g, m, cls}] += k;
    }
    std::int64_t get(int g, int m, int cls = -1) const {
        auto it = counts.find({g, m, cls});
        return it == counts.end() ? 0 : it->second;
    }
    void merge(const ShadowCensus& other) {
        for (const auto& [k, v] : other.counts) counts[k] += v;
    }
};

struct EnumLimits {
    int matchings_cap = 8;    // perfect matchings of 2m points
    int two_bb_cap = 6;       // times 2m-1 cut positions
};

/* visit all perfect matchings of {1..2m} (callback gets the arc list) */
void for_each_matching(int m, const std::function<void(const std::vector<Arc>&)>& visit);

/* visit all partial matchings of {1..n} (isolated vertices allowed) */
void for_each_involution(int n, const std::function<void(const std::vector<Arc>&)>& visit);

/* exhaustive census over labelled diagrams; counts keyed by (genus, arcs, A/B).
 * Two-backbone modes enumerate every cut position 1..2m-1 as a distinct object.
 * threads > 1 splits the matching space by the first arc's partner. */
ShadowCensus enumerate_census(EnumMode mode, int max_arcs, const EnumFilters& filters,
                              const EnumLimits& limits = {}, int threads = 1);

/* Backtracking enumerator of two-backbone shadows with a genus cap. Prunes on
 * closed non-crossing arcs, same-type stack pairs and partial-genus overshoot,
 * which is what makes the full genus-1 range (m up to 10-12) reachable. */
ShadowCensus shadow_census_pruned(int max_arcs, int genus_cap, bool connected_only = true);

/* one-backbone variant of the pruned shadow search */
ShadowCensus shadow_census_pruned_1bb(int max_arcs, int genus_cap);

/* gamma-filtered censuses used as oracles for the generating functions:
 * counts[(n, g)] of 1bb matchings / connected 2bb matchings with every
 * irreducible shadow of genus <= gamma, by arc count n and total genus g */
std::map<std::pair<int, int>, std::int64_t> gamma_matching_census_1bb(int gamma, int max_arcs);
std::map<std::pair<int, int>, std::int64_t> gamma_matching_census_2bb(int gamma, int max_arcs);

/* counts[(n_vertices, g)] of tau-canonical gamma-interaction structures:
 * connected two-backbone diagrams with isolated vertices allowed, no interior
 * arcs of length one, every stack of length >= tau, irreducible shadows of
 * genus <= gamma */
std::map<std::pair<int, int>, std::int64_t> canonical_structure_census(int gamma, int tau,
                                                                       int max_vertices);

/* counts[(arcs, one_arcs, g)] of shapes (connected 2bb matchings, all stacks
 * length one) with irreducible shadows of genus <= gamma */
std::map<std::tuple<int, int, int>, std::int64_t> shape_census(int gamma, int max_arcs);

}  // namespace cdg

#endif
