#include "boole/reductions.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "boole/errors.hpp"
#include "boole/hailperin.hpp"
#include "boole/lp.hpp"

namespace boole {

using nlohmann::json;

namespace {

constexpr int kCliqueGuard = 12;

void check_guard(const Graph& g, const char* what) {
    if (g.n > kCliqueGuard) {
        throw DomainError(std::string(what) + ": guard exceeded (n <= " +
                          std::to_string(kCliqueGuard) + ")");
    }
}

std::vector<SubsetMask> adjacency_masks(const Graph& g) {
    std::vector<SubsetMask> adj(static_cast<std::size_t>(g.n) + 1, 0);
    for (const auto& [u, v] : g.edges) {
        adj[u] |= SubsetMask{1} << (v - 1);
        adj[v] |= SubsetMask{1} << (u - 1);
    }
    return adj;
}

// Expands sets vertex by vertex; keep(mask, v) decides whether v may extend
// the current set. Emits every nonempty set reachable this way.
template <typename Keep>
std::vector<SubsetMask> expand_sets(const Graph& g, Keep keep) {
    std::vector<SubsetMask> out;
    std::vector<std::pair<SubsetMask, int>> stack;
    for (int v = g.n; v >= 1; --v) stack.push_back({0, v});
    while (!stack.empty()) {
        const auto [mask, v] = stack.back();
        stack.pop_back();
        const SubsetMask grown = mask | (SubsetMask{1} << (v - 1));
        out.push_back(grown);
        for (int next = g.n; next > v; --next) {
            if (keep(grown, next)) stack.push_back({grown, next});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool Graph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

void validate_graph(const Graph& g) {
    if (g.n < 1 || g.n > kGroundSetCap) {
        throw DomainError("vertex count outside [1, " + std::to_string(kGroundSetCap) + "]");
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& [u, v] = g.edges[i];
        if (u < 1 || v < 1 || u > g.n || v > g.n) throw DomainError("edge endpoint outside [n]");
        if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
        if (u > v) throw DomainError("edge endpoints must be ordered");
        for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
            if (g.edges[j] == g.edges[i]) throw DomainError("duplicate edge");
        }
    }
}

void validate_weighted_graph(const WeightedGraph& gw) {
    validate_graph(gw.graph);
    if (gw.w.size() != gw.graph.edges.size()) {
        throw DomainError("weight count does not match edge count");
    }
    for (const auto& w : gw.w) {
        if (w < 0) throw DomainError("negative edge weight " + rat_str(w));
    }
}

namespace {

Graph graph_from_json(const json& doc, std::vector<Rat>* weights) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
        throw ParseError("graph document needs an integer field \"n\"");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw ParseError("graph document needs an array field \"edges\"");
    }
    Graph g;
    g.n = doc["n"].get<int>();
    for (const auto& e : doc["edges"]) {
        if (weights != nullptr) {
            if (!e.is_object() || !e.contains("uv") || !e.contains("w") || !e["w"].is_string()) {
                throw ParseError("weighted edge needs \"uv\" and string \"w\"");
            }
            const auto& uv = e["uv"];
            if (!uv.is_array() || uv.size() != 2 || !uv[0].is_number_integer() ||
                !uv[1].is_number_integer()) {
                throw ParseError("edge must be a pair of integers");
            }
            int u = uv[0].get<int>();
            int v = uv[1].get<int>();
            if (u > v) std::swap(u, v);
            g.edges.emplace_back(u, v);
            weights->push_back(rat_parse(e["w"].get<std::string>()));
        } else {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer()) {
                throw ParseError("edge must be a pair of integers");
            }
            int u = e[0].get<int>();
            int v = e[1].get<int>();
            if (u > v) std::swap(u, v);
            g.edges.emplace_back(u, v);
        }
    }
    return g;
}

}  // namespace

Graph parse_graph(const std::string& document) {
    json doc = json::parse(document, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON document");
    Graph g = graph_from_json(doc, nullptr);
    validate_graph(g);
    return g;
}

WeightedGraph parse_weighted_graph(const std::string& document) {
    json doc = json::parse(document, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON document");
    WeightedGraph gw;
    gw.graph = graph_from_json(doc, &gw.w);
    validate_weighted_graph(gw);
    return gw;
}

std::vector<SubsetMask> all_cliques(const Graph& g) {
    validate_graph(g);
    check_guard(g, "all_cliques");
    const auto adj = adjacency_masks(g);
    return expand_sets(g, [&](SubsetMask mask, int v) {
        return (mask & ~adj[v]) == 0;  // v adjacent to everything so far
    });
}

std::vector<SubsetMask> independent_sets(const Graph& g) {
    validate_graph(g);
    check_guard(g, "independent_sets");
    const auto adj = adjacency_masks(g);
    return expand_sets(g, [&](SubsetMask mask, int v) {
        return (mask & adj[v]) == 0;
    });
}

BooleInstance color_gadget(const Graph& g) {
    validate_graph(g);
    BooleInstance inst;
    inst.family.n = g.n;
    const Rat uniform(1, static_cast<unsigned long>(g.n));
    for (int u = 1; u <= g.n; ++u) {
        inst.family.members.push_back(SubsetMask{1} << (u - 1));
        inst.b.push_back(uniform);
    }
    for (const auto& [u, v] : g.edges) {
        inst.family.members.push_back((SubsetMask{1} << (u - 1)) | (SubsetMask{1} << (v - 1)));
        inst.b.push_back(Rat(0));
    }
    return inst;
}

Rat fractional_chromatic(const Graph& g) {
    const auto sets = independent_sets(g);
    LinearProgram lp = LinearProgram::with_vars(sets.size());
    lp.objective.assign(sets.size(), Rat(1));
    for (int u = 1; u <= g.n; ++u) {
        const SubsetMask bit = SubsetMask{1} << (u - 1);
        auto& row = lp.add_row(Rel::Ge, Rat(1));
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (sets[i] & bit) row.coeffs[i] = 1;
        }
    }
    const auto outcome = lp_solve(lp, Sense::Min);
    const auto* opt = as_optimal(outcome);
    if (opt == nullptr) throw std::logic_error("covering LP must have an optimum");
    return opt->value;
}

Rat clique_lp(const WeightedGraph& gw) {
    validate_weighted_graph(gw);
    const auto cliques = all_cliques(gw.graph);
    LinearProgram lp = LinearProgram::with_vars(gw.graph.edges.size());
    lp.objective = gw.w;
    lp.var_signs.assign(gw.graph.edges.size(), VarSign::Free);
    for (const SubsetMask t : cliques) {
        auto& row = lp.add_row(Rel::Le, Rat(mask_size(t) - 1));
        for (std::size_t e = 0; e < gw.graph.edges.size(); ++e) {
            const auto& [u, v] = gw.graph.edges[e];
            const SubsetMask edge_mask =
                (SubsetMask{1} << (u - 1)) | (SubsetMask{1} << (v - 1));
            if ((edge_mask & t) == edge_mask) row.coeffs[e] = 1;
        }
    }
    const auto outcome = lp_solve(lp, Sense::Max);
    const auto* opt = as_optimal(outcome);
    if (opt == nullptr) throw std::logic_error("clique LP must have an optimum");
    return opt->value;
}

Rat max_union_via_dual(const WeightedGraph& gw) {
    validate_weighted_graph(gw);
    const Graph& g = gw.graph;
    if (g.n < 2 || g.edges.empty()) {
        throw DomainError("max_union_via_dual needs n >= 2 and at least one edge");
    }
    const Rat cap(1, static_cast<unsigned long>(g.n) * static_cast<unsigned long>(g.n));
    for (const auto& w : gw.w) {
        if (w > cap) {
            throw DomainError("edge weight " + rat_str(w) + " exceeds 1/n^2 = " + rat_str(cap));
        }
    }
    BooleInstance inst;
    inst.family.n = g.n;
    const Rat uniform(1, static_cast<unsigned long>(g.n));
    for (int u = 1; u <= g.n; ++u) {
        inst.family.members.push_back(SubsetMask{1} << (u - 1));
        inst.b.push_back(uniform);
    }
    for (int u = 1; u <= g.n; ++u) {
        for (int v = u + 1; v <= g.n; ++v) {
            const SubsetMask pair = (SubsetMask{1} << (u - 1)) | (SubsetMask{1} << (v - 1));
            inst.family.members.push_back(pair);
            const auto it = std::find(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
            if (it == g.edges.end()) {
                inst.b.push_back(Rat(0));
            } else {
                inst.b.push_back(gw.w[static_cast<std::size_t>(it - g.edges.begin())]);
            }
        }
    }
    return union_bounds(inst).interval.hi;
}

bool phi_membership(const Graph& g, const std::vector<Rat>& y) {
    validate_graph(g);
    if (y.size() != g.edges.size()) {
        throw std::invalid_argument("phi_membership: y must have one entry per edge");
    }
    const auto cliques = all_cliques(g);
    for (const SubsetMask t : cliques) {
        Rat total = 0;
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto& [u, v] = g.edges[e];
            const SubsetMask edge_mask =
                (SubsetMask{1} << (u - 1)) | (SubsetMask{1} << (v - 1));
            if ((edge_mask & t) == edge_mask) total += y[e];
        }
        if (total > mask_size(t) - 1) return false;
    }
    return true;
}

bool has_k_clique(const Graph& g, int k) {
    validate_graph(g);
    if (k < 2) throw DomainError("has_k_clique needs k >= 2");
    const Rat kappa = make_rat(2, static_cast<unsigned long>(k - 1));
    std::vector<Rat> y(g.edges.size(), kappa);
    return !phi_membership(g, y);
}

}  // namespace boole
