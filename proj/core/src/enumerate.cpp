#include "orbicell/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <deque>
#include <set>

namespace orbicell {

namespace {

// Non-increasing valency profiles: parts >= 3 summing to total.
void valency_profiles(int total, int parts, int max_part, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int p = std::min(total - 3 * (parts - 1), max_part); p >= 3; --p) {
        cur.push_back(p);
        valency_profiles(total - p, parts - 1, p, cur, out);
        cur.pop_back();
    }
}

// All perfect matchings of 0..2E-1, built by always pairing the smallest
// free half-edge.
void matchings(std::vector<int>& free, std::vector<std::pair<int, int>>& cur,
               const std::function<void(const std::vector<std::pair<int, int>>&)>& sink) {
    if (free.empty()) {
        sink(cur);
        return;
    }
    int a = free.front();
    for (std::size_t k = 1; k < free.size(); ++k) {
        int b = free[k];
        std::vector<int> rest;
        for (std::size_t t = 1; t < free.size(); ++t)
            if (t != k) rest.push_back(free[t]);
        cur.push_back({a, b});
        matchings(rest, cur, sink);
        cur.pop_back();
    }
}

GraphClass make_class(const StableRibbonGraph& g) {
    CanonicalForm cf = canonical_form(g);
    GraphClass cls;
    cls.graph = std::move(cf.graph);
    cls.key = std::move(cf.key);
    cls.aut_order = cf.aut_order;
    cls.killed = cf.orientation_reversible;
    auto [gg, nn] = surface_invariants(cls.graph);
    cls.genus = gg;
    cls.n_marked = nn;
    return cls;
}

// Pure ribbon graphs of type (g, n): disk vertices, valency >= 3. The
// vertex rotation is pinned to consecutive blocks; running over all
// matchings reaches every isomorphism class.
std::map<std::string, GraphClass> enumerate_pure(int g, int n) {
    std::map<std::string, GraphClass> classes;
    int top_edges = 6 * g - 6 + 3 * n;
    if (top_edges > kMaxEdges)
        throw ResourceError("edge bound of the desk-scale envelope exceeded");
    for (int E = 1; E <= top_edges; ++E) {
        int V = E + 2 - 2 * g - n;
        if (V < 1 || 3 * V > 2 * E) continue;
        std::vector<std::vector<int>> profiles;
        std::vector<int> cur;
        valency_profiles(2 * E, V, 2 * E, cur, profiles);
        for (const auto& profile : profiles) {
            StableRibbonGraph base;
            base.half_edges = 2 * E;
            int next = 0;
            for (int val : profile) {
                VertexSurface v;
                v.cycles.push_back({});
                for (int k = 0; k < val; ++k) v.cycles[0].push_back(next++);
                base.vertices.push_back(std::move(v));
            }
            std::vector<int> free(2 * E);
            for (int h = 0; h < 2 * E; ++h) free[h] = h;
            std::vector<std::pair<int, int>> pairs;
            matchings(free, pairs, [&](const std::vector<std::pair<int, int>>& m) {
                StableRibbonGraph cand = base;
                cand.edges = m;
                if (!is_connected(cand)) return;
                auto [gg, nn] = surface_invariants(cand);
                if (gg != g || nn != n) return;
                GraphClass cls = make_class(cand);
                classes.emplace(cls.key, std::move(cls));
            });
        }
    }
    return classes;
}

} // namespace

std::vector<GraphClass> enumerate_graphs(int g, int n, int max_edges,
                                         const EnumerateOptions& opts) {
    if (n < 1 || g < 0 || 2 * g + n - 2 <= 0)
        throw StructuralError("unstable surface type: need 2g + n - 2 > 0 and n >= 1");
    if (max_edges < 0 || max_edges > kMaxEdges)
        throw ResourceError("edge bound of the desk-scale envelope exceeded");

    std::map<std::string, GraphClass> classes = enumerate_pure(g, n);

    if (!opts.pure_only) {
        // close under contraction of every edge
        std::deque<std::string> work;
        for (const auto& [key, cls] : classes) work.push_back(key);
        while (!work.empty()) {
            GraphClass cls = classes.at(work.front());
            work.pop_front();
            for (int e = 0; e < (int)cls.graph.edge_count(); ++e) {
                auto child = contract_edge(cls.graph, e, default_orientation(cls.graph));
                GraphClass ccls = make_class(child.graph);
                if (classes.emplace(ccls.key, ccls).second) work.push_back(ccls.key);
            }
        }
    }

    if (opts.colored) {
        // every black/white coloring of every class, deduped by canonical key
        std::map<std::string, GraphClass> colored;
        for (const auto& [key, cls] : classes) {
            std::size_t E = cls.graph.edge_count();
            for (std::size_t mask = 0; mask < (std::size_t(1) << E); ++mask) {
                StableRibbonGraph cand = cls.graph;
                cand.white.assign(E, 0);
                for (std::size_t e = 0; e < E; ++e)
                    if (mask & (std::size_t(1) << e)) cand.white[e] = 1;
                if (cand.white.empty() || mask == 0) cand.white.clear();
                GraphClass ccls = make_class(cand);
                colored.emplace(ccls.key, std::move(ccls));
            }
        }
        classes = std::move(colored);
    }

    std::vector<GraphClass> out;
    for (auto& [key, cls] : classes)
        if ((int)cls.graph.edge_count() <= max_edges) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(), [](const GraphClass& a, const GraphClass& b) {
        if (a.graph.edge_count() != b.graph.edge_count())
            return a.graph.edge_count() < b.graph.edge_count();
        return a.key < b.key;
    });
    return out;
}

Rational euler_cell_sum(const std::vector<GraphClass>& classes) {
    Rational sum;
    for (const auto& cls : classes) {
        Rational term(1, (unsigned long)cls.aut_order);
        if (cls.graph.edge_count() % 2) term = -term;
        sum += term;
    }
    return sum;
}

void GraphChain::add(const std::string& key, const Rational& c) {
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        if (sgn(c) != 0) coeffs.emplace(key, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) coeffs.erase(it);
}

void GraphChain::prune() {
    for (auto it = coeffs.begin(); it != coeffs.end();)
        it = sgn(it->second) == 0 ? coeffs.erase(it) : std::next(it);
}

bool GraphChain::is_zero() const {
    for (const auto& [k, c] : coeffs)
        if (sgn(c) != 0) return false;
    return true;
}

const GraphClass& GraphRegistry::intern(const StableRibbonGraph& g) {
    GraphClass cls = make_class(g);
    auto [it, inserted] = by_key_.emplace(cls.key, std::move(cls));
    return it->second;
}

const GraphClass* GraphRegistry::find(const std::string& key) const {
    auto it = by_key_.find(key);
    return it == by_key_.end() ? nullptr : &it->second;
}

const GraphClass& GraphRegistry::require(const std::string& key) const {
    const GraphClass* cls = find(key);
    if (!cls) throw StructuralError("unknown generator key: " + key);
    return *cls;
}

void GraphRegistry::put(const GraphClass& cls) { by_key_.emplace(cls.key, cls); }

GraphChain boundary_generator(const GraphClass& cls, Complex cx, GraphRegistry& reg,
                              const BoundaryOptions& opts) {
    GraphChain out;
    const StableRibbonGraph& g = cls.graph;
    Orientation base = default_orientation(g);
    for (std::size_t idx = 0; idx < base.ordering.size(); ++idx) {
        int e = base.ordering[idx];
        auto handle = [&](const EdgeOpResult& res) {
            CanonicalForm cf = canonical_form(res.graph);
            if (cf.orientation_reversible) return;
            int sign = transported_orientation_sign(res.orientation, cf.edge_map, cf.graph);
            if (opts.mutated_signs) sign = 1; // deliberate sign-convention mutation
            reg.put(make_class(res.graph));
            out.add(cf.key, Rational(sign));
        };
        handle(contract_edge(g, e, base));
        if (cx == Complex::Linf) handle(whiten_edge(g, e, base));
    }
    out.prune();
    return out;
}

GraphChain boundary(const GraphChain& chain, Complex cx, GraphRegistry& reg,
                    const BoundaryOptions& opts) {
    GraphChain out;
    for (const auto& [key, coeff] : chain.coeffs) {
        if (key == kAtomPointAtInfinity || key == kAtomZeroPerimeter) continue;
        GraphChain part = boundary_generator(reg.require(key), cx, reg, opts);
        for (const auto& [k, c] : part.coeffs) out.add(k, coeff * c);
    }
    out.prune();
    return out;
}

} // namespace orbicell
