#include "cdg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cdg {

namespace {

void matchings_rec(std::vector<int>& pts, std::vector<Arc>& acc,
                   const std::function<void(const std::vector<Arc>&)>& visit) {
    if (pts.empty()) {
        visit(acc);
        return;
    }
    int a = pts.front();
    for (size_t i = 1; i < pts.size(); ++i) {
        int b = pts[i];
        std::vector<int> rest;
        rest.reserve(pts.size() - 2);
        for (size_t j = 1; j < pts.size(); ++j)
            if (j != i) rest.push_back(pts[j]);
        acc.emplace_back(a, b);
        matchings_rec(rest, acc, visit);
        acc.pop_back();
    }
}

void involutions_rec(std::vector<int>& pts, std::vector<Arc>& acc,
                     const std::function<void(const std::vector<Arc>&)>& visit) {
    if (pts.empty()) {
        visit(acc);
        return;
    }
    int a = pts.front();
    {
        std::vector<int> rest(pts.begin() + 1, pts.end());
        involutions_rec(rest, acc, visit);  // a isolated
    }
    for (size_t i = 1; i < pts.size(); ++i) {
        int b = pts[i];
        std::vector<int> rest;
        rest.reserve(pts.size() - 2);
        for (size_t j = 1; j < pts.size(); ++j)
            if (j != i) rest.push_back(pts[j]);
        acc.emplace_back(a, b);
        involutions_rec(rest, acc, visit);
        acc.pop_back();
    }
}

}  // namespace

void for_each_matching(int m, const std::function<void(const std::vector<Arc>&)>& visit) {
    std::vector<int> pts(static_cast<size_t>(2 * m));
    for (int i = 0; i < 2 * m; ++i) pts[static_cast<size_t>(i)] = i + 1;
    std::vector<Arc> acc;
    acc.reserve(static_cast<size_t>(m));
    matchings_rec(pts, acc, visit);
}

void for_each_involution(int n, const std::function<void(const std::vector<Arc>&)>& visit) {
    std::vector<int> pts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pts[static_cast<size_t>(i)] = i + 1;
    std::vector<Arc> acc;
    involutions_rec(pts, acc, visit);
}

namespace {

bool passes(const Diagram& d, const EnumFilters& f, bool want_shadow, int* genus_out, int* cls_out) {
    bool conn = is_connected(d);
    if (f.connected && *f.connected != conn) return false;
    if (want_shadow && !is_shadow(d)) return false;
    if (f.irreducible && *f.irreducible != is_irreducible(d)) return false;
    if (!conn && f.ab) return false;  // classification needs one surface
    int g = conn ? topology(d).genus : total_genus(d);
    if (f.genus && g != *f.genus) return false;
    if (f.gamma && max_component_genus(d) > *f.gamma) return false;
    int cls = -1;
    if (f.ab) {
        if (d.backbone_count() != 2) return false;
        ShadowClass c = classify_AB(d);
        if (c != *f.ab) return false;
        cls = (c == ShadowClass::A) ? 0 : 1;
    } else if (d.backbone_count() == 2 && conn && want_shadow) {
        cls = (classify_AB(d) == ShadowClass::A) ? 0 : 1;
    }
    *genus_out = g;
    *cls_out = cls;
    return true;
}

/* enumerate matchings of {1..2m} whose first arc is (1, first_partner) */
void matchings_fixed_first(int m, int first_partner,
                           const std::function<void(const std::vector<Arc>&)>& visit) {
    std::vector<int> rest;
    rest.reserve(static_cast<size_t>(2 * m - 2));
    for (int v = 2; v <= 2 * m; ++v)
        if (v != first_partner) rest.push_back(v);
    std::vector<Arc> acc;
    acc.emplace_back(1, first_partner);
    matchings_rec(rest, acc, visit);
}

}  // namespace

ShadowCensus enumerate_census(EnumMode mode, int max_arcs, const EnumFilters& filters,
                              const EnumLimits& limits, int threads) {
    bool two_bb = (mode == EnumMode::matchings_2bb || mode == EnumMode::shadows_2bb);
    bool want_shadow = (mode == EnumMode::shadows_1bb || mode == EnumMode::shadows_2bb);
    int cap = two_bb ? limits.two_bb_cap : limits.matchings_cap;
    if (max_arcs > cap)
        throw CapExceeded("requested " + std::to_string(max_arcs) + " arcs, cap is " +
                          std::to_string(cap));
    ShadowCensus census;
    for (int m = 1; m <= max_arcs; ++m) {
        auto handle_matching = [&](ShadowCensus& local, const std::vector<Arc>& arcs) {
            int lo = two_bb ? 1 : 0;
            int hi = two_bb ? 2 * m - 1 : 0;
            for (int cut = lo; cut <= hi; ++cut) {
                std::vector<int> cuts;
                if (two_bb) cuts.push_back(cut);
                Diagram d(2 * m, cuts, arcs);
                int g = -1, cls = -1;
                if (passes(d, filters, want_shadow, &g, &cls)) {
                    local.add(g, m, -1);
                    if (cls >= 0) local.add(g, m, cls);
                }
            }
        };
        int branches = 2 * m - 1;
        int nthreads = std::min(threads, branches);
        if (nthreads <= 1) {
            for_each_matching(m, [&](const std::vector<Arc>& arcs) { handle_matching(census, arcs); });
        } else {
            std::vector<ShadowCensus> partial(static_cast<size_t>(branches));
            std::vector<std::thread> pool;
            std::atomic<int> next{0};
            for (int t = 0; t < nthreads; ++t) {
                pool.emplace_back([&, m]() {
                    for (;;) {
                        int b = next.fetch_add(1);
                        if (b >= branches) return;
                        matchings_fixed_first(m, b + 2, [&](const std::vector<Arc>& arcs) {
                            handle_matching(partial[static_cast<size_t>(b)], arcs);
                        });
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (const auto& p : partial) census.merge(p);
        }
    }
    return census;
}

namespace {

/* state for the pruned left-to-right shadow search over 2m points */
struct ShadowSearch {
    int two_m = 0;
    int cut = 0;  // 0 = one backbone
    int genus_cap = 0;
    bool connected_only = true;
    std::vector<Arc> arcs;
    std::vector<int> partner;
    ShadowCensus* out = nullptr;

    bool exterior(int i, int j) const { return cut > 0 && i <= cut && j > cut; }

    bool closes_clean(int pos) const {
        // every arc ending strictly before `pos` must cross something placed
        for (const Arc& a : arcs) {
            if (a.second >= pos) continue;
            bool crosses = false;
            for (const Arc& b : arcs)
                if (!(a == b) && arcs_cross(a, b)) { crosses = true; break; }
            if (!crosses) return false;
        }
        return true;
    }

    int partial_genus() const {
        if (arcs.empty()) return 0;
        std::vector<int> cuts;
        if (cut > 0) cuts.push_back(cut);
        Diagram d(two_m, cuts, arcs);
        return total_genus(d);
    }

    void rec(int pos) {
        while (pos <= two_m && partner[static_cast<size_t>(pos)] != 0) ++pos;
        if (pos > two_m) {
            std::vector<int> cuts;
            if (cut > 0) cuts.push_back(cut);
            Diagram d(two_m, cuts, arcs);
            if (!is_shadow(d)) return;
            bool conn = is_connected(d);
            if (connected_only && !conn) return;
            int g = conn ? topology(d).genus : total_genus(d);
            if (g > genus_cap) return;
            int cls = -1;
            if (cut > 0 && conn) cls = (classify_AB(d) == ShadowClass::A) ? 0 : 1;
            out->add(g, two_m / 2, -1);
            if (cls >= 0) out->add(g, two_m / 2, cls);
            return;
        }
        for (int q = pos + 1; q <= two_m; ++q) {
            if (partner[static_cast<size_t>(q)] != 0) continue;
            // stack prune: (pos-1, q+1) parallel of the same type
            if (pos >= 2 && q + 1 <= two_m) {
                int pp = partner[static_cast<size_t>(pos - 1)];
                if (pp == q + 1) {
                    bool e1 = exterior(pos - 1, q + 1), e2 = exterior(pos, q);
                    if (e1 == e2) continue;
                }
            }
            partner[static_cast<size_t>(pos)] = q;
            partner[static_cast<size_t>(q)] = pos;
            arcs.emplace_back(pos, q);
            if (closes_clean(pos + 1) && partial_genus() <= genus_cap) rec(pos + 1);
            arcs.pop_back();
            partner[static_cast<size_t>(pos)] = 0;
            partner[static_cast<size_t>(q)] = 0;
        }
    }
};

}  // namespace

ShadowCensus shadow_census_pruned(int max_arcs, int genus_cap, bool connected_only) {
    ShadowCensus census;
    for (int m = 2; m <= max_arcs; ++m) {
        for (int cut = 1; cut <= 2 * m - 1; ++cut) {
            ShadowSearch s;
            s.two_m = 2 * m;
            s.cut = cut;
            s.genus_cap = genus_cap;
            s.connected_only = connected_only;
            s.partner.assign(static_cast<size_t>(2 * m) + 1, 0);
            s.out = &census;
            s.rec(1);
        }
    }
    return census;
}

ShadowCensus shadow_census_pruned_1bb(int max_arcs, int genus_cap) {
    ShadowCensus census;
    for (int m = 2; m <= max_arcs; ++m) {
        ShadowSearch s;
        s.two_m = 2 * m;
        s.cut = 0;
        s.genus_cap = genus_cap;
        s.connected_only = true;  // one backbone is always connected
        s.partner.assign(static_cast<size_t>(2 * m) + 1, 0);
        s.out = &census;
        s.rec(1);
    }
    return census;
}

std::map<std::pair<int, int>, std::int64_t> gamma_matching_census_1bb(int gamma, int max_arcs) {
    std::map<std::pair<int, int>, std::int64_t> out;
    out[{0, 0}] = 1;  // the empty matching
    for (int m = 1; m <= max_arcs; ++m) {
        for_each_matching(m, [&](const std::vector<Arc>& arcs) {
            Diagram d(2 * m, {}, arcs);
            if (max_component_genus(d) > gamma) return;
            ++out[{m, topology(d).genus}];
        });
    }
    return out;
}

std::map<std::pair<int, int>, std::int64_t> gamma_matching_census_2bb(int gamma, int max_arcs) {
    std::map<std::pair<int, int>, std::int64_t> out;
    for (int m = 1; m <= max_arcs; ++m) {
        for_each_matching(m, [&](const std::vector<Arc>& arcs) {
            for (int cut = 1; cut <= 2 * m - 1; ++cut) {
                Diagram d(2 * m, {cut}, arcs);
                if (!is_connected(d)) continue;
                if (max_component_genus(d) > gamma) continue;
                ++out[{m, topology(d).genus}];
            }
        });
    }
    return out;
}

std::map<std::pair<int, int>, std::int64_t> canonical_structure_census(int gamma, int tau,
                                                                       int max_vertices) {
    std::map<std::pair<int, int>, std::int64_t> out;
    for (int n = 2; n <= max_vertices; ++n) {
        for_each_involution(n, [&](const std::vector<Arc>& arcs) {
            if (arcs.empty()) return;
            for (int cut = 1; cut <= n - 1; ++cut) {
                Diagram d(n, {cut}, arcs);
                if (!is_connected(d)) continue;
                bool has_one_arc = false;
                for (const Arc& a : d.arcs())
                    if (a.second == a.first + 1 && !d.exterior(a)) { has_one_arc = true; break; }
                if (has_one_arc) continue;
                bool canonical = true;
                for (const auto& run : stacks(d))
                    if (static_cast<int>(run.size()) < tau) { canonical = false; break; }
                if (!canonical) continue;
                if (max_component_genus(d) > gamma) continue;
                ++out[{n, topology(d).genus}];
            }
        });
    }
    return out;
}

std::map<std::tuple<int, int, int>, std::int64_t> shape_census(int gamma, int max_arcs) {
    std::map<std::tuple<int, int, int>, std::int64_t> out;
    for (int m = 1; m <= max_arcs; ++m) {
        for_each_matching(m, [&](const std::vector<Arc>& arcs) {
            for (int cut = 1; cut <= 2 * m - 1; ++cut) {
                Diagram d(2 * m, {cut}, arcs);
                if (!is_shape(d)) continue;
                if (max_component_genus(d) > gamma) continue;
                ++out[{m, count_one_arcs(d), topology(d).genus}];
            }
        });
    }
    return out;
}

}  // namespace cdg
