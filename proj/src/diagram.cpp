#include "cdg/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace cdg {

Diagram::Diagram(int n, std::vector<int> cuts, std::vector<Arc> arcs)
    : n_(n), cuts_(std::move(cuts)), arcs_(std::move(arcs)) {
    if (n_ < 0) throw BadInput("negative vertex count");
    int prev = 0;
    for (int c : cuts_) {
        if (c < prev || c > n_) throw BadInput("cut positions must be nondecreasing within [0,n]");
        prev = c;
    }
    for (Arc& a : arcs_)
        if (a.first > a.second) std::swap(a.first, a.second);
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<char> used(static_cast<size_t>(n_) + 1, 0);
    for (const Arc& a : arcs_) {
        if (a.first < 1 || a.second > n_ || a.first == a.second)
            throw BadInput("arc endpoints out of range");
        if (used[static_cast<size_t>(a.first)] || used[static_cast<size_t>(a.second)])
            throw BadInput("vertex " + std::to_string(used[static_cast<size_t>(a.first)] ? a.first : a.second) +
                           " used by two arcs");
        used[static_cast<size_t>(a.first)] = used[static_cast<size_t>(a.second)] = 1;
    }
    bb_of_.assign(static_cast<size_t>(n_) + 1, 0);
    size_t bi = 0;
    for (int v = 1; v <= n_; ++v) {
        while (bi < cuts_.size() && v > cuts_[bi]) ++bi;
        bb_of_[static_cast<size_t>(v)] = static_cast<int>(bi);
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

bool is_connected(const Diagram& d) {
    int b = d.backbone_count();
    if (b == 1) return true;  // backbone arcs join everything on one strand
    UnionFind uf(b);
    for (const Arc& a : d.arcs()) uf.unite(d.backbone_of(a.first), d.backbone_of(a.second));
    int root = uf.find(0);
    for (int i = 1; i < b; ++i)
        if (uf.find(i) != root) return false;
    return true;
}

int boundary_components(const Diagram& d) {
    // half-edges live at arc endpoints; sigma advances cyclically along the
    // arc endpoints of the collapsed backbone vertex, alpha jumps across the arc
    std::vector<int> partner(static_cast<size_t>(d.n()) + 1, 0);
    for (const Arc& a : d.arcs()) {
        partner[static_cast<size_t>(a.first)] = a.second;
        partner[static_cast<size_t>(a.second)] = a.first;
    }
    std::vector<int> sigma(static_cast<size_t>(d.n()) + 1, 0);
    int empty_backbones = 0;
    int b = d.backbone_count();
    std::vector<int> lo(static_cast<size_t>(b)), hi(static_cast<size_t>(b));
    for (int k = 0; k < b; ++k) {
        lo[static_cast<size_t>(k)] = (k == 0) ? 1 : d.cuts()[static_cast<size_t>(k - 1)] + 1;
        hi[static_cast<size_t>(k)] = (k + 1 == b) ? d.n() : d.cuts()[static_cast<size_t>(k)];
    }
    for (int k = 0; k < b; ++k) {
        int first = 0, prev = 0;
        for (int v = lo[static_cast<size_t>(k)]; v <= hi[static_cast<size_t>(k)]; ++v) {
            if (!partner[static_cast<size_t>(v)]) continue;
            if (!first)
                first = v;
            else
                sigma[static_cast<size_t>(prev)] = v;
            prev = v;
        }
        if (!first)
            ++empty_backbones;
        else
            sigma[static_cast<size_t>(prev)] = first;
    }
    std::vector<char> seen(static_cast<size_t>(d.n()) + 1, 0);
    int r = empty_backbones;
    for (int v = 1; v <= d.n(); ++v) {
        if (!partner[static_cast<size_t>(v)] || seen[static_cast<size_t>(v)]) continue;
        ++r;
        int x = v;
        while (!seen[static_cast<size_t>(x)]) {
            seen[static_cast<size_t>(x)] = 1;
            x = sigma[static_cast<size_t>(partner[static_cast<size_t>(x)])];
        }
    }
    return r;
}

TopologyReport topology(const Diagram& d) {
    TopologyReport rep;
    rep.connected = is_connected(d);
    rep.boundary_components = boundary_components(d);
    if (!rep.connected)
        throw Disconnected("genus is undefined for a disconnected diagram");
    int twice_genus = 2 - rep.boundary_components - d.backbone_count() + d.arc_count();
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw InconsistentSystem("Euler relation violated; boundary walk convention broken");
    rep.genus = twice_genus / 2;
    return rep;
}

std::vector<std::vector<Arc>> crossing_components(const Diagram& d) {
    const auto& arcs = d.arcs();
    int m = static_cast<int>(arcs.size());
    UnionFind uf(std::max(m, 1));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (arcs_cross(arcs[static_cast<size_t>(i)], arcs[static_cast<size_t>(j)])) uf.unite(i, j);
    std::vector<std::vector<Arc>> comps;
    std::vector<int> comp_of(static_cast<size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        if (comp_of[static_cast<size_t>(r)] < 0) {
            comp_of[static_cast<size_t>(r)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<size_t>(comp_of[static_cast<size_t>(r)])].push_back(arcs[static_cast<size_t>(i)]);
    }
    return comps;
}

Diagram subdiagram(const Diagram& d, const std::vector<Arc>& arcs) {
    std::set<int> verts;
    for (const Arc& a : arcs) {
        verts.insert(a.first);
        verts.insert(a.second);
    }
    std::vector<int> order(verts.begin(), verts.end());
    std::vector<int> relabel(static_cast<size_t>(d.n()) + 1, 0);
    for (size_t i = 0; i < order.size(); ++i) relabel[static_cast<size_t>(order[i])] = static_cast<int>(i) + 1;
    // backbone boundaries: keep a cut wherever the original backbone changes
    std::vector<int> cuts;
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (d.backbone_of(order[i]) != d.backbone_of(order[i + 1]))
            cuts.push_back(static_cast<int>(i) + 1);
    std::vector<Arc> new_arcs;
    new_arcs.reserve(arcs.size());
    for (const Arc& a : arcs)
        new_arcs.emplace_back(relabel[static_cast<size_t>(a.first)], relabel[static_cast<size_t>(a.second)]);
    return Diagram(static_cast<int>(order.size()), std::move(cuts), std::move(new_arcs));
}

std::vector<int> irreducible_shadow_genera(const Diagram& d) {
    std::vector<int> out;
    for (const auto& comp : crossing_components(d)) {
        if (comp.size() == 1) {
            out.push_back(0);
            continue;
        }
        out.push_back(topology(subdiagram(d, comp)).genus);
    }
    return out;
}

int max_component_genus(const Diagram& d) {
    int g = 0;
    for (int c : irreducible_shadow_genera(d)) g = std::max(g, c);
    return g;
}

bool is_irreducible(const Diagram& d) {
    if (d.arcs().empty()) return false;
    if (!is_connected(d)) return false;
    return crossing_components(d).size() == 1;
}

namespace {

/* (i,j) and (i+1,j-1) collapse only when they are the same kind of stack */
bool stack_pair(const Diagram& d, const Arc& outer) {
    bool ext_outer = d.exterior(outer);
    bool ext_inner = d.backbone_of(outer.first + 1) != d.backbone_of(outer.second - 1);
    return ext_outer == ext_inner;
}

}  // namespace

bool is_shadow(const Diagram& d) {
    const auto& arcs = d.arcs();
    std::set<Arc> aset(arcs.begin(), arcs.end());
    std::vector<char> covered(static_cast<size_t>(d.n()) + 1, 0);
    for (const Arc& a : arcs) {
        bool crosses = false;
        for (const Arc& b : arcs)
            if (!(a == b) && arcs_cross(a, b)) { crosses = true; break; }
        if (!crosses) return false;
        if (aset.count(Arc(a.first + 1, a.second - 1)) && stack_pair(d, a)) return false;
        covered[static_cast<size_t>(a.first)] = covered[static_cast<size_t>(a.second)] = 1;
    }
    for (int v = 1; v <= d.n(); ++v)
        if (!covered[static_cast<size_t>(v)]) return false;
    return true;
}

Diagram shadow(const Diagram& d) {
    int n = d.n();
    std::vector<int> cuts = d.cuts();
    std::vector<Arc> arcs = d.arcs();
    for (;;) {
        bool changed = false;
        // remove arcs that cross nothing
        {
            std::vector<Arc> keep;
            for (const Arc& a : arcs) {
                bool crosses = false;
                for (const Arc& b : arcs)
                    if (!(a == b) && arcs_cross(a, b)) { crosses = true; break; }
                if (crosses) keep.push_back(a);
            }
            if (keep.size() != arcs.size()) {
                arcs = std::move(keep);
                changed = true;
            }
        }
        // drop isolated vertices, then relabel (empty backbones stay)
        {
            std::vector<char> used(static_cast<size_t>(n) + 1, 0);
            for (const Arc& a : arcs) used[static_cast<size_t>(a.first)] = used[static_cast<size_t>(a.second)] = 1;
            int kept = 0;
            for (int v = 1; v <= n; ++v) kept += used[static_cast<size_t>(v)];
            if (kept != n) {
                std::vector<int> relabel(static_cast<size_t>(n) + 1, 0);
                int next = 0;
                for (int v = 1; v <= n; ++v)
                    if (used[static_cast<size_t>(v)]) relabel[static_cast<size_t>(v)] = ++next;
                std::vector<int> newcuts;
                newcuts.reserve(cuts.size());
                for (int c : cuts) {
                    int cnt = 0;
                    for (int v = 1; v <= c; ++v) cnt += used[static_cast<size_t>(v)];
                    newcuts.push_back(cnt);
                }
                for (Arc& a : arcs)
                    a = Arc(relabel[static_cast<size_t>(a.first)], relabel[static_cast<size_t>(a.second)]);
                n = next;
                cuts = std::move(newcuts);
                changed = true;
            }
        }
        // collapse one stack pair (the inner arc goes; its vertices become isolated)
        {
            Diagram tmp(n, cuts, arcs);
            const Arc* inner = nullptr;
            std::set<Arc> aset(tmp.arcs().begin(), tmp.arcs().end());
            for (const Arc& a : tmp.arcs()) {
                Arc in(a.first + 1, a.second - 1);
                if (in.first < in.second && aset.count(in) && stack_pair(tmp, a)) {
                    inner = &*aset.find(in);
                    break;
                }
            }
            if (inner) {
                Arc victim = *inner;
                arcs.erase(std::remove(arcs.begin(), arcs.end(), victim), arcs.end());
                changed = true;
            }
        }
        if (!changed) return Diagram(n, std::move(cuts), std::move(arcs));
    }
}

int total_genus(const Diagram& d) {
    int b = d.backbone_count();
    UnionFind uf(b);
    for (const Arc& a : d.arcs()) uf.unite(d.backbone_of(a.first), d.backbone_of(a.second));
    // genus adds over connected pieces; each piece keeps its backbones and arcs
    int total = 0;
    for (int root = 0; root < b; ++root) {
        if (uf.find(root) != root) continue;
        std::vector<Arc> arcs;
        for (const Arc& a : d.arcs())
            if (uf.find(d.backbone_of(a.first)) == root) arcs.push_back(a);
        if (arcs.empty()) continue;  // bare backbone piece: a sphere
        Diagram sub = subdiagram(d, arcs);
        int r = boundary_components(sub);
        int twice = 2 - r - sub.backbone_count() + static_cast<int>(arcs.size());
        if (twice < 0 || twice % 2 != 0) throw InconsistentSystem("piece genus ill-formed");
        total += twice / 2;
    }
    return total;
}

Diagram glue_alpha(const Diagram& d) {
    if (d.backbone_count() != 2)
        throw WrongBackboneCount("glue_alpha needs exactly two backbones, got " +
                                 std::to_string(d.backbone_count()));
    return Diagram(d.n(), {}, d.arcs());
}

ShadowClass classify_AB(const Diagram& d) {
    if (d.backbone_count() != 2)
        throw WrongBackboneCount("classify_AB needs exactly two backbones");
    if (!is_connected(d)) throw NotConnected("classify_AB needs a connected diagram");
    int g = topology(d).genus;
    int g_glued = topology(glue_alpha(d)).genus;
    if (g_glued == g) return ShadowClass::A;
    if (g_glued == g + 1) return ShadowClass::B;
    throw InconsistentSystem("gluing changed genus by " + std::to_string(g_glued - g));
}

Diagram bullet_product(const Diagram& e1, const Diagram& e2) {
    if (e1.backbone_count() != 2 || e2.backbone_count() != 2)
        throw WrongBackboneCount("bullet product needs two two-backbone diagrams");
    int c1 = e1.cuts()[0], c2 = e2.cuts()[0];
    int n1 = e1.n(), n2 = e2.n();
    // R1 [1..c1], then R2, then S2, then S1
    std::vector<Arc> arcs;
    arcs.reserve(e1.arcs().size() + e2.arcs().size());
    for (const Arc& a : e1.arcs()) {
        int i = a.first <= c1 ? a.first : a.first + n2;
        int j = a.second <= c1 ? a.second : a.second + n2;
        arcs.emplace_back(i, j);
    }
    for (const Arc& a : e2.arcs()) arcs.emplace_back(a.first + c1, a.second + c1);
    return Diagram(n1 + n2, {c1 + c2}, std::move(arcs));
}

std::vector<std::vector<Arc>> stacks(const Diagram& d) {
    std::set<Arc> aset(d.arcs().begin(), d.arcs().end());
    std::vector<std::vector<Arc>> out;
    for (const Arc& a : d.arcs()) {
        // skip arcs continuing a same-type run
        Arc prev(a.first - 1, a.second + 1);
        if (prev.first >= 1 && prev.second <= d.n() && aset.count(prev) && stack_pair(d, prev)) continue;
        std::vector<Arc> run{a};
        Arc cur = a;
        for (;;) {
            Arc nxt(cur.first + 1, cur.second - 1);
            if (nxt.first >= nxt.second || !aset.count(nxt) || !stack_pair(d, cur)) break;
            run.push_back(nxt);
            cur = nxt;
        }
        out.push_back(std::move(run));
    }
    return out;
}

int count_one_arcs(const Diagram& d) {
    int m = 0;
    for (const Arc& a : d.arcs())
        if (a.second == a.first + 1 && !d.exterior(a)) ++m;
    return m;
}

bool is_shape(const Diagram& d) {
    if (!is_connected(d)) return false;
    std::vector<char> covered(static_cast<size_t>(d.n()) + 1, 0);
    for (const Arc& a : d.arcs())
        covered[static_cast<size_t>(a.first)] = covered[static_cast<size_t>(a.second)] = 1;
    for (int v = 1; v <= d.n(); ++v)
        if (!covered[static_cast<size_t>(v)]) return false;
    for (const auto& run : stacks(d))
        if (run.size() != 1) return false;
    return true;
}

}  // namespace cdg
