#ifndef CDG_DIAGRAM_HPP
#define CDG_DIAGRAM_HPP

#include <utility>
#include <vector>

#include "cdg/errors.hpp"

namespace cdg {

using Arc = std::pair<int, int>;  // (i, j) with 1 <= i < j <= n

/* Labelled chord diagram over vertices 1..n split into consecutive backbones.
 * cuts[k] = last vertex of backbone k (so backbones are (cut[k-1], cut[k]]);
 * the final backbone ends at n and is implicit. Empty backbones are allowed
 * and matter: each contributes one boundary component. */
class Diagram {
public:
    Diagram(int n, std::vector<int> cuts, std::vector<Arc> arcs);

    int n() const { return n_; }
    int backbone_count() const { return static_cast<int>(cuts_.size()) + 1; }
    const std::vector<int>& cuts() const { return cuts_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    int backbone_of(int v) const { return bb_of_[static_cast<size_t>(v)]; }
    bool exterior(const Arc& a) const { return backbone_of(a.first) != backbone_of(a.second); }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.n_ == b.n_ && a.cuts_ == b.cuts_ && a.arcs_ == b.arcs_;
    }

private:
    int n_;
    std::vector<int> cuts_;
    std::vector<Arc> arcs_;
    std::vector<int> bb_of_;  // index 1..n
};

struct TopologyReport {
    bool connected = false;
    int boundary_components = 0;  // r; valid whether or not connected
    int genus = -1;               // only meaningful when connected
};

inline bool arcs_cross(const Arc& a, const Arc& b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

bool is_connected(const Diagram& d);

/* Boundary components of the polygonal model: collapse each backbone to one
 * vertex, orient half-edges by backbone order, and count cycles of the face
 * permutation sigma∘alpha (alpha = arc involution, applied first). Empty
 * backbones contribute one boundary component apiece. */
int boundary_components(const Diagram& d);

/* Genus from 2 - 2g - r = b - n on the connected diagram; throws Disconnected
 * when the diagram is not connected (the Euler relation needs one surface). */
TopologyReport topology(const Diagram& d);

/* Shadow projection: drop non-crossing arcs, drop isolated vertices, collapse
 * stacks (type-segregated: interior stacks hold interior arcs, exterior
 * stacks exterior arcs; a parallel pair of mixed type is two stacks of length
 * one and survives). Idempotent and genus-preserving on connected inputs. */
Diagram shadow(const Diagram& d);

bool is_shadow(const Diagram& d);

/* connected and with a connected crossing graph on the arcs */
bool is_irreducible(const Diagram& d);

/* crossing-graph components as arc sets, each sorted */
std::vector<std::vector<Arc>> crossing_components(const Diagram& d);

/* the sub-diagram induced by a set of arcs (relabelled, backbone membership kept) */
Diagram subdiagram(const Diagram& d, const std::vector<Arc>& arcs);

/* genus of every irreducible shadow of d (= every crossing component; single
 * non-crossing arcs count as genus-0 components) */
std::vector<int> irreducible_shadow_genera(const Diagram& d);

/* largest irreducible-shadow genus, 0 for an arcless diagram */
int max_component_genus(const Diagram& d);

/* genus summed over connected pieces (equals topology().genus when connected);
 * lets shadow-projection checks handle inputs whose shadow disconnects */
int total_genus(const Diagram& d);

/* glue the two backbones into one (keep arcs, forget the cut) */
Diagram glue_alpha(const Diagram& d);

enum class ShadowClass { A, B };

/* A iff gluing preserves genus, B iff it raises it by one (no other outcome) */
ShadowClass classify_AB(const Diagram& d);

/* insert e2 into the gap of e1: vertex order R1 R2 S2 S1, backbones R1R2 | S2S1 */
Diagram bullet_product(const Diagram& e1, const Diagram& e2);

/* maximal stacks (type-segregated parallel runs), each as a run of arcs */
std::vector<std::vector<Arc>> stacks(const Diagram& d);

/* interior arcs (i, i+1); these are the 1-arcs of the shape layer */
int count_one_arcs(const Diagram& d);

bool is_shape(const Diagram& d);

}  // namespace cdg

#endif
