#pragma once

#include "orbicell/algebra.hpp" // StructuralError, ResourceError

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbicell {

// Vertex decoration: a compact oriented surface with boundary, stored
// combinatorially as (genus, boundary cycles). Each cycle lists the incident
// half-edges in their cyclic boundary order; empty cycles are boundary
// circles carrying no half-edges.
struct VertexSurface {
    int genus = 0;
    std::vector<std::vector<int>> cycles;

    int valency() const {
        int v = 0;
        for (const auto& c : cycles) v += (int)c.size();
        return v;
    }
    bool is_disk() const { return genus == 0 && cycles.size() == 1; }
};

// Half-edge combinatorics of a stable ribbon graph. Half-edges are
// 0..half_edges-1; edges form a perfect matching (no legs); every half-edge
// sits in exactly one vertex cycle.
struct StableRibbonGraph {
    int half_edges = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexSurface> vertices;
    std::vector<std::uint8_t> white; // per-edge color flag

    std::size_t edge_count() const { return edges.size(); }
    bool is_white(std::size_t e) const { return e < white.size() && white[e]; }
    std::vector<int> black_edges() const;
};

// Ordering of the black edges modulo even permutations, tracked as an
// explicit ordering plus a sign relative to it.
struct Orientation {
    std::vector<int> ordering; // black edge ids, each exactly once
    int sign = 1;
};

Orientation default_orientation(const StableRibbonGraph& g);

// Sign of an orientation relative to the ascending black-edge order.
int orientation_sign(const StableRibbonGraph& g, const Orientation& o);

// Structural sanity of the half-edge data plus the stability condition
// (no disk vertex of valency < 3) and connectivity.
void validate_graph(const StableRibbonGraph& g);
bool is_connected(const StableRibbonGraph& g);

// Location of each half-edge, built once per graph where needed.
struct HalfEdgeIndex {
    std::vector<int> partner;
    std::vector<int> edge_of;
    std::vector<int> vertex_of;
    std::vector<int> cycle_of;
    std::vector<int> pos_of;

    explicit HalfEdgeIndex(const StableRibbonGraph& g);
};

// (genus, number of boundary components) of the thickened surface, via the
// boundary walk and the Euler characteristic.
std::pair<int, int> surface_invariants(const StableRibbonGraph& g);

struct EdgeOpResult {
    StableRibbonGraph graph;
    Orientation orientation;
    std::vector<int> edge_map; // old edge id -> new edge id (-1 for the removed edge)
};

// Contract a black edge: non-loops merge the two vertex surfaces along a
// band (genera add, the incident cycles splice); a loop with both feet on
// one cycle splits that cycle; a loop joining two cycles of one vertex
// merges them and raises the genus. Sign: (-1)^{position of e} in the
// orientation ordering, then e is deleted.
EdgeOpResult contract_edge(const StableRibbonGraph& g, int e, const Orientation& o);

// Mark a black edge as white (infinite length); same sign rule.
EdgeOpResult whiten_edge(const StableRibbonGraph& g, int e, const Orientation& o);

// Automorphisms as half-edge bijections preserving edges, vertices, genus,
// coloring and the cycle structure up to rotations and cycle permutations.
std::vector<std::vector<int>> automorphisms(const StableRibbonGraph& g);

struct CanonicalForm {
    StableRibbonGraph graph; // canonical presentation
    std::string key;
    std::vector<int> half_edge_map; // original half-edge -> canonical half-edge
    std::vector<int> edge_map;      // original edge -> canonical edge
    std::size_t aut_order = 1;
    bool orientation_reversible = false; // an automorphism permutes black edges oddly
};

// Canonical labeling by minimizing a structured encoding over admissible
// relabelings; isomorphic graphs get identical keys.
CanonicalForm canonical_form(const StableRibbonGraph& g);

// Sign transporting an orientation through an edge relabeling onto the
// ascending order of the target presentation.
int transported_orientation_sign(const Orientation& o, const std::vector<int>& edge_map,
                                 const StableRibbonGraph& target);

StableRibbonGraph graph_from_json(const std::string& text);
std::string graph_to_json(const StableRibbonGraph& g, const Orientation* o = nullptr);

} // namespace orbicell
