#include "orbicell/graph.hpp"
#include "orbicell/tensor.hpp" // permutation_parity

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <tuple>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace orbicell {

using nlohmann::json;

std::vector<int> StableRibbonGraph::black_edges() const {
    std::vector<int> r;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!is_white(e)) r.push_back((int)e);
    return r;
}

Orientation default_orientation(const StableRibbonGraph& g) {
    return Orientation{g.black_edges(), 1};
}

int orientation_sign(const StableRibbonGraph& g, const Orientation& o) {
    auto blacks = g.black_edges();
    if (o.ordering.size() != blacks.size())
        throw StructuralError("orientation must list every black edge exactly once");
    std::vector<int> positions;
    positions.reserve(o.ordering.size());
    for (int e : o.ordering) {
        auto it = std::lower_bound(blacks.begin(), blacks.end(), e);
        if (it == blacks.end() || *it != e)
            throw StructuralError("orientation lists a non-black or unknown edge");
        positions.push_back((int)(it - blacks.begin()));
    }
    std::set<int> dedup(positions.begin(), positions.end());
    if (dedup.size() != positions.size())
        throw StructuralError("orientation repeats an edge");
    return o.sign * permutation_parity(positions);
}

HalfEdgeIndex::HalfEdgeIndex(const StableRibbonGraph& g)
    : partner(g.half_edges, -1), edge_of(g.half_edges, -1), vertex_of(g.half_edges, -1),
      cycle_of(g.half_edges, -1), pos_of(g.half_edges, -1) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [a, b] = g.edges[e];
        partner[a] = b;
        partner[b] = a;
        edge_of[a] = edge_of[b] = (int)e;
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (std::size_t c = 0; c < g.vertices[v].cycles.size(); ++c) {
            const auto& cyc = g.vertices[v].cycles[c];
            for (std::size_t p = 0; p < cyc.size(); ++p) {
                vertex_of[cyc[p]] = (int)v;
                cycle_of[cyc[p]] = (int)c;
                pos_of[cyc[p]] = (int)p;
            }
        }
}

bool is_connected(const StableRibbonGraph& g) {
    if (g.vertices.empty()) return false;
    if (g.vertices.size() == 1) return true;
    HalfEdgeIndex ix(g);
    std::vector<int> comp(g.vertices.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (auto [a, b] : g.edges) comp[find(ix.vertex_of[a])] = find(ix.vertex_of[b]);
    int root = find(0);
    for (std::size_t v = 1; v < g.vertices.size(); ++v)
        if (find((int)v) != root) return false;
    return true;
}

void validate_graph(const StableRibbonGraph& g) {
    if (g.half_edges < 0) throw StructuralError("negative half-edge count");
    std::vector<int> edge_seen(g.half_edges, 0), vertex_seen(g.half_edges, 0);
    for (auto [a, b] : g.edges) {
        if (a < 0 || b < 0 || a >= g.half_edges || b >= g.half_edges || a == b)
            throw StructuralError("edge endpoints out of range");
        ++edge_seen[a];
        ++edge_seen[b];
    }
    for (const auto& v : g.vertices) {
        if (v.genus < 0) throw StructuralError("negative genus");
        if (v.cycles.empty()) throw StructuralError("vertex surface needs at least one boundary cycle");
        for (const auto& c : v.cycles)
            for (int h : c) {
                if (h < 0 || h >= g.half_edges) throw StructuralError("half-edge out of range");
                ++vertex_seen[h];
            }
        if (v.is_disk() && v.valency() < 3)
            throw StructuralError("disk vertex of valency < 3 violates stability");
    }
    for (int h = 0; h < g.half_edges; ++h) {
        if (edge_seen[h] != 1) throw StructuralError("half-edges must form a perfect matching");
        if (vertex_seen[h] != 1) throw StructuralError("half-edges must partition into vertex cycles");
    }
    if (!g.white.empty() && g.white.size() != g.edges.size())
        throw StructuralError("coloring size mismatch");
    if (!is_connected(g)) throw StructuralError("graph must be connected");
}

std::pair<int, int> surface_invariants(const StableRibbonGraph& g) {
    if (!is_connected(g)) throw StructuralError("surface invariants need a connected graph");
    HalfEdgeIndex ix(g);

    // next half-edge within its cycle
    std::vector<int> next(g.half_edges, -1);
    int empty_cycles = 0;
    for (const auto& v : g.vertices)
        for (const auto& c : v.cycles) {
            if (c.empty()) {
                ++empty_cycles;
                continue;
            }
            for (std::size_t p = 0; p < c.size(); ++p) next[c[p]] = c[(p + 1) % c.size()];
        }

    // boundary components of the thickening: orbits of h -> partner(next(h))
    std::vector<char> seen(g.half_edges, 0);
    int faces = 0;
    for (int h = 0; h < g.half_edges; ++h) {
        if (seen[h]) continue;
        ++faces;
        int cur = h;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = ix.partner[next[cur]];
        }
    }

    int chi = -(int)g.edges.size();
    int n = faces + empty_cycles;
    for (const auto& v : g.vertices) chi += 2 - 2 * v.genus - (int)v.cycles.size();
    int twice_genus = 2 - n - chi;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw StructuralError("inconsistent surface data (non-orientable bookkeeping?)");
    return {twice_genus / 2, n};
}

namespace {

std::vector<int> rotate_to_front(const std::vector<int>& cycle, int h) {
    auto it = std::find(cycle.begin(), cycle.end(), h);
    std::vector<int> r(it, cycle.end());
    r.insert(r.end(), cycle.begin(), it);
    return r;
}

// Remove half-edges h1, h2 and compact ids; rewrites cycles and edges.
void compact_half_edges(StableRibbonGraph& g, int h1, int h2) {
    std::vector<int> remap(g.half_edges, -1);
    int next_id = 0;
    for (int h = 0; h < g.half_edges; ++h)
        if (h != h1 && h != h2) remap[h] = next_id++;
    for (auto& v : g.vertices)
        for (auto& c : v.cycles)
            for (auto& h : c) h = remap[h];
    for (auto& [a, b] : g.edges) {
        a = remap[a];
        b = remap[b];
    }
    g.half_edges = next_id;
}

Orientation remove_edge_from_orientation(const Orientation& o, int e,
                                         const std::vector<int>& edge_map) {
    auto it = std::find(o.ordering.begin(), o.ordering.end(), e);
    if (it == o.ordering.end())
        throw StructuralError("edge missing from orientation ordering");
    int idx = (int)(it - o.ordering.begin());
    Orientation r;
    r.sign = o.sign * ((idx % 2) ? -1 : 1);
    for (int f : o.ordering)
        if (f != e) r.ordering.push_back(edge_map[f]);
    return r;
}

} // namespace

EdgeOpResult contract_edge(const StableRibbonGraph& g, int e, const Orientation& o) {
    if (e < 0 || (std::size_t)e >= g.edges.size()) throw StructuralError("unknown edge id");
    if (g.is_white(e)) throw StructuralError("only black edges can be contracted");
    HalfEdgeIndex ix(g);
    auto [h1, h2] = g.edges[e];
    int v1 = ix.vertex_of[h1], v2 = ix.vertex_of[h2];
    int c1 = ix.cycle_of[h1], c2 = ix.cycle_of[h2];

    StableRibbonGraph r = g;
    if (v1 != v2) {
        // merge the two vertex surfaces along a band at the feet
        VertexSurface merged;
        merged.genus = g.vertices[v1].genus + g.vertices[v2].genus;
        auto a = rotate_to_front(g.vertices[v1].cycles[c1], h1); // [h1, a...]
        auto b = rotate_to_front(g.vertices[v2].cycles[c2], h2); // [h2, b...]
        std::vector<int> spliced(a.begin() + 1, a.end());
        spliced.insert(spliced.end(), b.begin() + 1, b.end());
        for (std::size_t c = 0; c < g.vertices[v1].cycles.size(); ++c)
            merged.cycles.push_back((int)c == c1 ? spliced : g.vertices[v1].cycles[c]);
        for (std::size_t c = 0; c < g.vertices[v2].cycles.size(); ++c)
            if ((int)c != c2) merged.cycles.push_back(g.vertices[v2].cycles[c]);
        r.vertices[std::min(v1, v2)] = merged;
        r.vertices.erase(r.vertices.begin() + std::max(v1, v2));
    } else if (c1 == c2) {
        // loop with both feet on one cycle: the cycle splits at the feet
        auto cyc = rotate_to_front(g.vertices[v1].cycles[c1], h1); // [h1, x...]
        auto it = std::find(cyc.begin() + 1, cyc.end(), h2);
        std::vector<int> part1(cyc.begin() + 1, it);
        std::vector<int> part2(it + 1, cyc.end());
        auto& vs = r.vertices[v1];
        vs.cycles[c1] = part1;
        vs.cycles.insert(vs.cycles.begin() + c1 + 1, part2);
    } else {
        // loop joining two cycles of one vertex: they merge, genus grows
        auto a = rotate_to_front(g.vertices[v1].cycles[c1], h1);
        auto b = rotate_to_front(g.vertices[v1].cycles[c2], h2);
        std::vector<int> merged_cycle(a.begin() + 1, a.end());
        merged_cycle.insert(merged_cycle.end(), b.begin() + 1, b.end());
        auto& vs = r.vertices[v1];
        vs.genus += 1;
        vs.cycles[c1] = merged_cycle;
        vs.cycles.erase(vs.cycles.begin() + c2);
    }

    std::vector<int> edge_map(g.edges.size());
    for (std::size_t f = 0; f < g.edges.size(); ++f)
        edge_map[f] = (int)f < e ? (int)f : ((int)f == e ? -1 : (int)f - 1);
    r.edges.erase(r.edges.begin() + e);
    if (!r.white.empty()) r.white.erase(r.white.begin() + e);
    compact_half_edges(r, h1, h2);

    EdgeOpResult out;
    out.orientation = remove_edge_from_orientation(o, e, edge_map);
    out.graph = std::move(r);
    out.edge_map = std::move(edge_map);
    return out;
}

EdgeOpResult whiten_edge(const StableRibbonGraph& g, int e, const Orientation& o) {
    if (e < 0 || (std::size_t)e >= g.edges.size()) throw StructuralError("unknown edge id");
    if (g.is_white(e)) throw StructuralError("edge is already white");
    StableRibbonGraph r = g;
    if (r.white.empty()) r.white.assign(r.edges.size(), 0);
    r.white[e] = 1;
    std::vector<int> edge_map(g.edges.size());
    std::iota(edge_map.begin(), edge_map.end(), 0);
    EdgeOpResult out;
    out.orientation = remove_edge_from_orientation(o, e, edge_map);
    out.graph = std::move(r);
    out.edge_map = std::move(edge_map);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical labeling and automorphisms
// ---------------------------------------------------------------------------

namespace {

struct VertexProfile {
    int genus;
    std::vector<int> cycle_lengths; // ascending
    bool operator<(const VertexProfile& o) const {
        return std::tie(genus, cycle_lengths) < std::tie(o.genus, o.cycle_lengths);
    }
    bool operator==(const VertexProfile& o) const {
        return genus == o.genus && cycle_lengths == o.cycle_lengths;
    }
};

VertexProfile profile_of(const VertexSurface& v) {
    VertexProfile p;
    p.genus = v.genus;
    for (const auto& c : v.cycles) p.cycle_lengths.push_back((int)c.size());
    std::sort(p.cycle_lengths.begin(), p.cycle_lengths.end());
    return p;
}

// A labeling assigns new half-edge ids by traversal order for one choice of
// vertex order, cycle order and rotations. The encoding compared for
// canonicity is (profiles, edge pairs, white set) over the new ids.
struct Labeling {
    std::vector<int> half_edge_map; // old id -> new id
};

struct Encoding {
    std::vector<int> data;
    bool operator<(const Encoding& o) const { return data < o.data; }
    bool operator==(const Encoding& o) const { return data == o.data; }
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const StableRibbonGraph& g) : g_(g), ix_(g) {
        for (const auto& v : g.vertices) profiles_.push_back(profile_of(v));
        order_.resize(g.vertices.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(),
                  [&](int a, int b) { return profiles_[a] < profiles_[b]; });
    }

    void run() {
        permute_equal_profiles(0);
        if (best_maps_.empty()) { // no vertices at all cannot happen (validated)
            throw StructuralError("canonical search on empty graph");
        }
    }

    Encoding best_encoding_;
    std::vector<std::vector<int>> best_maps_; // distinct minimal half-edge maps

private:
    const StableRibbonGraph& g_;
    HalfEdgeIndex ix_;
    std::vector<VertexProfile> profiles_;
    std::vector<int> order_;

    void permute_equal_profiles(std::size_t group_start) {
        if (group_start >= order_.size()) {
            descend_cycles();
            return;
        }
        std::size_t group_end = group_start;
        while (group_end < order_.size() &&
               profiles_[order_[group_end]] == profiles_[order_[group_start]])
            ++group_end;
        std::vector<int> group(order_.begin() + group_start, order_.begin() + group_end);
        std::sort(group.begin(), group.end());
        do {
            std::copy(group.begin(), group.end(), order_.begin() + group_start);
            permute_equal_profiles(group_end);
        } while (std::next_permutation(group.begin(), group.end()));
    }

    // For the fixed vertex order, enumerate cycle orders (ascending lengths,
    // equal lengths permuting freely, empty cycles pinned) and rotations.
    std::vector<std::vector<std::vector<int>>> vertex_cycle_choices_;

    void descend_cycles() {
        vertex_cycle_choices_.assign(order_.size(), {});
        choose_vertex(0);
    }

    void choose_vertex(std::size_t vi) {
        if (vi == order_.size()) {
            emit();
            return;
        }
        const auto& v = g_.vertices[order_[vi]];
        // group cycles by length, ascending
        std::vector<int> idx(v.cycles.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return v.cycles[a].size() < v.cycles[b].size();
        });
        std::vector<std::vector<int>> arrangement(v.cycles.size());
        choose_cycle_order(vi, v, idx, 0, arrangement);
    }

    void choose_cycle_order(std::size_t vi, const VertexSurface& v, std::vector<int> idx,
                            std::size_t pos, std::vector<std::vector<int>>& arrangement) {
        if (pos == idx.size()) {
            choose_rotation(vi, v, idx, 0, arrangement);
            return;
        }
        std::size_t end = pos;
        while (end < idx.size() && v.cycles[idx[end]].size() == v.cycles[idx[pos]].size()) ++end;
        if (v.cycles[idx[pos]].empty()) {
            // empty cycles are indistinguishable; one arrangement suffices
            choose_cycle_order(vi, v, idx, end, arrangement);
            return;
        }
        std::vector<int> block(idx.begin() + pos, idx.begin() + end);
        std::sort(block.begin(), block.end());
        do {
            std::copy(block.begin(), block.end(), idx.begin() + pos);
            choose_cycle_order(vi, v, idx, end, arrangement);
        } while (std::next_permutation(block.begin(), block.end()));
    }

    void choose_rotation(std::size_t vi, const VertexSurface& v, const std::vector<int>& idx,
                         std::size_t ci, std::vector<std::vector<int>>& arrangement) {
        if (ci == idx.size()) {
            vertex_cycle_choices_[vi] = arrangement;
            choose_vertex(vi + 1);
            return;
        }
        const auto& cyc = v.cycles[idx[ci]];
        if (cyc.empty()) {
            arrangement[ci] = {};
            choose_rotation(vi, v, idx, ci + 1, arrangement);
            return;
        }
        for (std::size_t start = 0; start < cyc.size(); ++start) {
            std::vector<int> rotated(cyc.size());
            for (std::size_t k = 0; k < cyc.size(); ++k)
                rotated[k] = cyc[(start + k) % cyc.size()];
            arrangement[ci] = std::move(rotated);
            choose_rotation(vi, v, idx, ci + 1, arrangement);
        }
    }

    void emit() {
        std::vector<int> map(g_.half_edges, -1);
        int next_id = 0;
        for (std::size_t vi = 0; vi < order_.size(); ++vi)
            for (const auto& cyc : vertex_cycle_choices_[vi])
                for (int h : cyc) map[h] = next_id++;

        Encoding enc;
        for (std::size_t vi = 0; vi < order_.size(); ++vi) {
            const auto& prof = profiles_[order_[vi]];
            enc.data.push_back(prof.genus);
            enc.data.push_back(-1);
            for (int len : prof.cycle_lengths) enc.data.push_back(len);
            enc.data.push_back(-2);
        }
        std::vector<std::pair<int, int>> pairs;
        std::vector<std::pair<std::pair<int, int>, int>> pairs_with_edge;
        for (std::size_t e = 0; e < g_.edges.size(); ++e) {
            int a = map[g_.edges[e].first], b = map[g_.edges[e].second];
            pairs_with_edge.push_back({{std::min(a, b), std::max(a, b)}, (int)e});
        }
        std::sort(pairs_with_edge.begin(), pairs_with_edge.end());
        for (const auto& [p, e] : pairs_with_edge) {
            enc.data.push_back(p.first);
            enc.data.push_back(p.second);
        }
        enc.data.push_back(-3);
        for (std::size_t pos = 0; pos < pairs_with_edge.size(); ++pos)
            if (g_.is_white(pairs_with_edge[pos].second)) enc.data.push_back((int)pos);

        if (best_maps_.empty() || enc < best_encoding_) {
            best_encoding_ = enc;
            best_maps_.clear();
            best_maps_.push_back(std::move(map));
        } else if (enc == best_encoding_) {
            if (std::find(best_maps_.begin(), best_maps_.end(), map) == best_maps_.end())
                best_maps_.push_back(std::move(map));
        }
    }
};

StableRibbonGraph rebuild_from_map(const StableRibbonGraph& g, const std::vector<int>& map,
                                   std::vector<int>& edge_map_out) {
    StableRibbonGraph r;
    r.half_edges = g.half_edges;

    // vertices sorted by their smallest new label block: reconstruct by
    // applying the map and sorting structures canonically
    struct VtxTmp {
        int genus;
        std::vector<std::vector<int>> cycles;
        int min_label;
    };
    std::vector<VtxTmp> vtx;
    for (const auto& v : g.vertices) {
        VtxTmp t;
        t.genus = v.genus;
        t.min_label = 1 << 30;
        for (const auto& c : v.cycles) {
            std::vector<int> nc(c.size());
            for (std::size_t k = 0; k < c.size(); ++k) {
                nc[k] = map[c[k]];
                t.min_label = std::min(t.min_label, nc[k]);
            }
            if (!nc.empty()) {
                // rotate so the smallest label leads
                auto it = std::min_element(nc.begin(), nc.end());
                std::rotate(nc.begin(), it, nc.end());
            }
            t.cycles.push_back(std::move(nc));
        }
        std::stable_sort(t.cycles.begin(), t.cycles.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            if (a.empty()) return false;
            return a[0] < b[0];
        });
        vtx.push_back(std::move(t));
    }
    std::stable_sort(vtx.begin(), vtx.end(),
                     [](const VtxTmp& a, const VtxTmp& b) { return a.min_label < b.min_label; });
    for (auto& t : vtx) r.vertices.push_back({t.genus, std::move(t.cycles)});

    std::vector<std::pair<std::pair<int, int>, int>> pairs_with_edge;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int a = map[g.edges[e].first], b = map[g.edges[e].second];
        pairs_with_edge.push_back({{std::min(a, b), std::max(a, b)}, (int)e});
    }
    std::sort(pairs_with_edge.begin(), pairs_with_edge.end());
    edge_map_out.assign(g.edges.size(), -1);
    r.white.assign(g.edges.size(), 0);
    for (std::size_t pos = 0; pos < pairs_with_edge.size(); ++pos) {
        r.edges.push_back(pairs_with_edge[pos].first);
        edge_map_out[pairs_with_edge[pos].second] = (int)pos;
        r.white[pos] = g.is_white(pairs_with_edge[pos].second);
    }
    if (std::none_of(r.white.begin(), r.white.end(), [](auto w) { return w; })) r.white.clear();
    return r;
}

std::string encode_key(const StableRibbonGraph& canonical) {
    std::ostringstream os;
    for (const auto& v : canonical.vertices) {
        os << "v" << v.genus << "(";
        for (std::size_t c = 0; c < v.cycles.size(); ++c) {
            if (c) os << "|";
            for (std::size_t k = 0; k < v.cycles[c].size(); ++k)
                os << (k ? "," : "") << v.cycles[c][k];
        }
        os << ")";
    }
    os << "#";
    for (const auto& [a, b] : canonical.edges) os << "(" << a << "," << b << ")";
    os << "#w";
    for (std::size_t e = 0; e < canonical.edges.size(); ++e)
        if (canonical.is_white(e)) os << e << ",";
    return os.str();
}

} // namespace

CanonicalForm canonical_form(const StableRibbonGraph& g) {
    CanonicalForm cf;
    if (g.half_edges == 0 && g.vertices.size() == 1) {
        // no labeling freedom beyond the trivial one
        cf.graph = g;
        cf.graph.white.clear();
        // normalize empty cycles deterministically (all are empty anyway)
        cf.key = encode_key(cf.graph);
        cf.aut_order = 1;
        cf.orientation_reversible = false;
        return cf;
    }

    CanonicalSearch search(g);
    search.run();
    cf.half_edge_map = search.best_maps_.front();
    cf.graph = rebuild_from_map(g, cf.half_edge_map, cf.edge_map);
    cf.key = encode_key(cf.graph);
    cf.aut_order = search.best_maps_.size();

    // orientation reversibility: some automorphism induces an odd
    // permutation of the black edges
    auto blacks = g.black_edges();
    std::vector<int> black_pos(g.edges.size(), -1);
    for (std::size_t k = 0; k < blacks.size(); ++k) black_pos[blacks[k]] = (int)k;
    HalfEdgeIndex ix(g);
    const auto& ref = search.best_maps_.front();
    std::vector<int> ref_inv(g.half_edges);
    for (int h = 0; h < g.half_edges; ++h) ref_inv[ref[h]] = h;
    for (const auto& m : search.best_maps_) {
        // automorphism sigma = ref^{-1} o m
        std::vector<int> perm;
        perm.reserve(blacks.size());
        for (int e : blacks) {
            int h = g.edges[e].first;
            int sigma_h = ref_inv[m[h]];
            perm.push_back(black_pos[ix.edge_of[sigma_h]]);
        }
        if (permutation_parity(perm) < 0) {
            cf.orientation_reversible = true;
            break;
        }
    }
    return cf;
}

std::vector<std::vector<int>> automorphisms(const StableRibbonGraph& g) {
    if (g.half_edges == 0) return {{}};
    CanonicalSearch search(g);
    search.run();
    const auto& ref = search.best_maps_.front();
    std::vector<int> ref_inv(g.half_edges);
    for (int h = 0; h < g.half_edges; ++h) ref_inv[ref[h]] = h;
    std::vector<std::vector<int>> auts;
    for (const auto& m : search.best_maps_) {
        std::vector<int> sigma(g.half_edges);
        for (int h = 0; h < g.half_edges; ++h) sigma[h] = ref_inv[m[h]];
        auts.push_back(std::move(sigma));
    }
    return auts;
}

int transported_orientation_sign(const Orientation& o, const std::vector<int>& edge_map,
                                 const StableRibbonGraph& target) {
    Orientation mapped;
    mapped.sign = o.sign;
    for (int e : o.ordering) {
        if (e < 0 || (std::size_t)e >= edge_map.size() || edge_map[e] < 0)
            throw StructuralError("orientation transport through an incomplete edge map");
        mapped.ordering.push_back(edge_map[e]);
    }
    return orientation_sign(target, mapped);
}

StableRibbonGraph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw StructuralError(std::string("graph JSON parse error: ") + e.what());
    }
    StableRibbonGraph g;
    try {
        g.half_edges = j.at("half_edges").get<int>();
        for (const auto& e : j.at("edges"))
            g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        for (const auto& v : j.at("vertices")) {
            VertexSurface vs;
            vs.genus = v.at("genus").get<int>();
            for (const auto& c : v.at("cycles")) vs.cycles.push_back(c.get<std::vector<int>>());
            g.vertices.push_back(std::move(vs));
        }
        if (j.contains("coloring") && j.at("coloring").contains("white")) {
            g.white.assign(g.edges.size(), 0);
            for (const auto& e : j.at("coloring").at("white")) {
                std::size_t idx = e.get<std::size_t>();
                if (idx >= g.edges.size()) throw StructuralError("white edge index out of range");
                g.white[idx] = 1;
            }
        }
    } catch (const json::exception& e) {
        throw StructuralError(std::string("graph JSON: ") + e.what());
    }
    validate_graph(g);
    return g;
}

std::string graph_to_json(const StableRibbonGraph& g, const Orientation* o) {
    json j;
    j["half_edges"] = g.half_edges;
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    j["edges"] = edges;
    json vertices = json::array();
    for (const auto& v : g.vertices) {
        json jv;
        jv["genus"] = v.genus;
        jv["cycles"] = v.cycles;
        vertices.push_back(jv);
    }
    j["vertices"] = vertices;
    json white = json::array();
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (g.is_white(e)) white.push_back(e);
    j["coloring"] = {{"white", white}};
    if (o) j["orientation"] = o->ordering;
    return j.dump(2);
}

} // namespace orbicell
