#pragma once

#include "orbicell/graph.hpp"
#include "orbicell/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbicell {

// One isomorphism class of stable ribbon graphs, i.e. one orbi-cell.
struct GraphClass {
    StableRibbonGraph graph; // canonical presentation
    std::string key;
    std::size_t aut_order = 1;
    bool killed = false; // an orientation-reversing automorphism exists
    int genus = 0;
    int n_marked = 0;
};

struct EnumerateOptions {
    bool pure_only = false; // ribbon graphs with disk vertices only
    bool colored = false;   // include black/white colorings (cells at infinity)
};

// Hard resource bound of the desk-scale design envelope.
constexpr int kMaxEdges = 8;

// Every isomorphism class with the given surface invariants and at most
// max_edges edges: pure ribbon graphs are generated over a fixed vertex
// permutation by running through all matchings, and the remaining cells are
// their iterated contractions (and colorings). Deterministic order.
std::vector<GraphClass> enumerate_graphs(int g, int n, int max_edges,
                                         const EnumerateOptions& opts = {});

// Sum of (-1)^{|E|} / |Aut| over the given classes. For pure ribbon graphs
// at n = 1 its negative is the orbifold Euler characteristic of the moduli
// space (the projectivized cells have dimension |E| - 1).
Rational euler_cell_sum(const std::vector<GraphClass>& classes);

// Formal Q-linear combination of canonical generators; keys with
// orientation-reversing automorphisms are identified with zero. The two
// extra 0-cells of the one-point compactification live as distinguished
// atoms with zero boundary.
struct GraphChain {
    std::map<std::string, Rational> coeffs;

    void add(const std::string& key, const Rational& c);
    void prune();
    bool is_zero() const;
    bool operator==(const GraphChain& o) const { return coeffs == o.coeffs; }
};

inline const char* kAtomPointAtInfinity = "atom:point-at-infinity";
inline const char* kAtomZeroPerimeter = "atom:zero-perimeter-class";

// Interning registry mapping canonical keys to classes, fed lazily by the
// boundary operator.
class GraphRegistry {
public:
    const GraphClass& intern(const StableRibbonGraph& g);
    const GraphClass* find(const std::string& key) const;
    const GraphClass& require(const std::string& key) const;
    void put(const GraphClass& cls);

private:
    std::map<std::string, GraphClass> by_key_;
};

enum class Complex { Lcirc, Linf };

struct BoundaryOptions {
    bool mutated_signs = false; // negative control: drop the position signs
};

GraphChain boundary_generator(const GraphClass& cls, Complex cx, GraphRegistry& reg,
                              const BoundaryOptions& opts = {});
GraphChain boundary(const GraphChain& chain, Complex cx, GraphRegistry& reg,
                    const BoundaryOptions& opts = {});

} // namespace orbicell
