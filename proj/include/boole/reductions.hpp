#pragma once

#include <string>
#include <utility>
#include <vector>

#include "boole/instance.hpp"
#include "boole/rat.hpp"

namespace boole {

// Simple graph on vertices 1..n; edges stored as (u, v) with u < v, sorted.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool adjacent(int u, int v) const;
};

struct WeightedGraph {
    Graph graph;
    std::vector<Rat> w;  // aligned with graph.edges, nonnegative
};

void validate_graph(const Graph& g);
void validate_weighted_graph(const WeightedGraph& gw);

// Graph documents: {"n": int, "edges": [[u,v]...]}; the weighted variant adds
// "w": "p/q" per edge.
Graph parse_graph(const std::string& document);
WeightedGraph parse_weighted_graph(const std::string& document);

// All nonempty cliques / independent sets as vertex masks, by expansion in
// increasing vertex order. Guarded to n <= 12.
std::vector<SubsetMask> all_cliques(const Graph& g);
std::vector<SubsetMask> independent_sets(const Graph& g);

// The coloring gadget: family = singletons + edges, b = 1/n on singletons and
// 0 on edges. Feasible by construction; its minimum union probability equals
// fractional_chromatic(g) / n.
BooleInstance color_gadget(const Graph& g);

// Optimum of the covering LP: minimize total weight over nonempty independent
// sets subject to weight >= 1 across every vertex. Guarded to n <= 12.
Rat fractional_chromatic(const Graph& g);

// Optimum of: maximize sum_e w_e y_e subject to, for every clique T,
// sum_{e inside T} y_e <= |T| - 1. The y_e range over all rationals.
Rat clique_lp(const WeightedGraph& gw);

// Requires weights in [0, 1/n^2], n >= 2, at least one edge. Builds the
// instance b_{u} = 1/n over singletons, b_{u,v} = w on edges and 0 on
// non-edge pairs, and returns its maximum union probability; by duality this
// always equals 1 - clique_lp(gw).
Rat max_union_via_dual(const WeightedGraph& gw);

// Whether y (aligned with g.edges) satisfies every clique constraint
// sum_{e inside T} y_e <= |T| - 1.
bool phi_membership(const Graph& g, const std::vector<Rat>& y);

// The constant vector 2/(k-1) violates some clique constraint exactly when
// the graph has a clique of size >= k.
bool has_k_clique(const Graph& g, int k);

}  // namespace boole
