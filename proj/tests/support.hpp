#pragma once

// Deterministic generators and brute-force oracles shared by the unit and
// acceptance suites. Everything here must stay independent of the library's
// solving paths: oracles enumerate, they never pivot.

#include <algorithm>
#include <random>
#include <vector>

#include "boole/instance.hpp"
#include "boole/lp.hpp"
#include "boole/miner.hpp"
#include "boole/reductions.hpp"

namespace testsupport {

using boole::Rat;
using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Uniform numerator over a bounded denominator, in [0, max_value].
inline Rat rand_rat(Rng& rng, int max_den = 16, const Rat& max_value = Rat(1)) {
    const int den = rand_int(rng, 1, max_den);
    const Rat step = max_value / den;
    return step * rand_int(rng, 0, den);
}

// Random distribution on the 2^n atoms: nonnegative integer mass per atom,
// normalized by the total.
inline boole::AtomDistribution rand_distribution(Rng& rng, int n) {
    const std::size_t atoms = std::size_t{1} << n;
    std::vector<long> mass(atoms);
    long total = 0;
    for (auto& m : mass) {
        m = rand_int(rng, 0, 6);
        total += m;
    }
    if (total == 0) {
        mass[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(atoms) - 1))] = 1;
        total = 1;
    }
    boole::AtomDistribution x;
    x.n = n;
    for (std::size_t mask = 0; mask < atoms; ++mask) {
        if (mass[mask] != 0) {
            x.weights[static_cast<boole::SubsetMask>(mask)] =
                boole::make_rat(mass[mask], static_cast<unsigned long>(total));
        }
    }
    return x;
}

// Random family of distinct nonempty subsets of [n]; optionally forced to
// contain all singletons or all sets of size <= min_complete_size.
inline boole::SetFamily rand_family(Rng& rng, int n, bool with_singletons = false,
                                    int min_complete_size = 0) {
    const boole::SubsetMask full = (boole::SubsetMask{1} << n) - 1;
    std::vector<boole::SubsetMask> pool;
    for (boole::SubsetMask m = 1; m <= full; ++m) pool.push_back(m);

    boole::SetFamily family;
    family.n = n;
    for (const auto m : pool) {
        const bool forced = (with_singletons && boole::mask_size(m) == 1) ||
                            boole::mask_size(m) <= min_complete_size;
        if (forced || rand_int(rng, 0, 2) == 0) family.members.push_back(m);
    }
    if (family.members.empty()) {
        family.members.push_back(pool[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(pool.size()) - 1))]);
    }
    return family;
}

// Feasible by construction: b is the marginal vector of a random atom
// distribution over the chosen family.
inline boole::BooleInstance rand_feasible_instance(Rng& rng, int n,
                                                   bool with_singletons = false,
                                                   int min_complete_size = 0) {
    const auto x = rand_distribution(rng, n);
    boole::BooleInstance inst;
    inst.family = rand_family(rng, n, with_singletons, min_complete_size);
    for (const auto s : inst.family.members) {
        inst.b.push_back(boole::marginal_of(x, s));
    }
    return inst;
}

// Random small LP for solver/oracle cross-checks; stays within the
// lp_enumerate_basic size guard.
inline boole::LinearProgram rand_lp(Rng& rng, bool allow_free = true) {
    const int n = rand_int(rng, 1, 4);
    const int m = rand_int(rng, 1, 3);
    auto lp = boole::LinearProgram::with_vars(static_cast<std::size_t>(n));
    for (auto& c : lp.objective) c = rand_int(rng, -3, 3);
    if (allow_free) {
        for (auto& s : lp.var_signs) {
            if (rand_int(rng, 0, 3) == 0) s = boole::VarSign::Free;
        }
    }
    for (int i = 0; i < m; ++i) {
        const int rel = rand_int(rng, 0, 2);
        auto& row = lp.add_row(rel == 0   ? boole::Rel::Eq
                               : rel == 1 ? boole::Rel::Le
                                          : boole::Rel::Ge,
                               Rat(rand_int(rng, -4, 4)));
        for (auto& c : row.coeffs) c = rand_int(rng, -3, 3);
    }
    return lp;
}

// Symmetric-form dual of max{c.x : Ax <= b, x >= 0}.
inline boole::LinearProgram symmetric_dual(const boole::LinearProgram& primal) {
    auto dual = boole::LinearProgram::with_vars(primal.rows.size());
    for (std::size_t i = 0; i < primal.rows.size(); ++i) {
        dual.objective[i] = primal.rows[i].rhs;
    }
    for (std::size_t j = 0; j < primal.num_vars; ++j) {
        auto& row = dual.add_row(boole::Rel::Ge, primal.objective[j]);
        for (std::size_t i = 0; i < primal.rows.size(); ++i) {
            row.coeffs[i] = primal.rows[i].coeffs[j];
        }
    }
    return dual;
}

// Dual of a maximization LP in general mixed form: <= rows give y >= 0,
// >= rows give y <= 0 (encoded by splitting), = rows give free y; columns of
// nonnegative variables dualize to >= rows, free variables to = rows.
inline boole::LinearProgram general_dual(const boole::LinearProgram& primal) {
    auto dual = boole::LinearProgram::with_vars(primal.rows.size());
    for (std::size_t i = 0; i < primal.rows.size(); ++i) {
        dual.objective[i] = primal.rows[i].rhs;
        switch (primal.rows[i].rel) {
            case boole::Rel::Le:
                break;  // y_i >= 0, the default sign
            case boole::Rel::Ge: {
                // y_i <= 0: negate the column so the stored variable is >= 0
                dual.objective[i] = -dual.objective[i];
                break;
            }
            case boole::Rel::Eq:
                dual.var_signs[i] = boole::VarSign::Free;
                break;
        }
    }
    for (std::size_t j = 0; j < primal.num_vars; ++j) {
        auto& row = dual.add_row(
            primal.var_signs[j] == boole::VarSign::Free ? boole::Rel::Eq : boole::Rel::Ge,
            primal.objective[j]);
        for (std::size_t i = 0; i < primal.rows.size(); ++i) {
            row.coeffs[i] = primal.rows[i].rel == boole::Rel::Ge
                                ? Rat(-primal.rows[i].coeffs[j])
                                : primal.rows[i].coeffs[j];
        }
    }
    return dual;
}

// Random graph on vertices 1..n with the given edge probability (percent).
inline boole::Graph rand_graph(Rng& rng, int n, int edge_percent = 50) {
    boole::Graph g;
    g.n = n;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (rand_int(rng, 0, 99) < edge_percent) g.edges.emplace_back(u, v);
        }
    }
    return g;
}

inline boole::Graph path_graph(int n) {
    boole::Graph g;
    g.n = n;
    for (int u = 1; u < n; ++u) g.edges.emplace_back(u, u + 1);
    return g;
}

inline boole::Graph cycle_graph(int n) {
    boole::Graph g = path_graph(n);
    if (n >= 3) g.edges.emplace_back(1, n);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline boole::Graph complete_graph(int n) {
    boole::Graph g;
    g.n = n;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) g.edges.emplace_back(u, v);
    }
    return g;
}

// Outer 5-cycle 1..5, inner 5-cycle 6..10 stepping by two, spokes i -- i+5.
inline boole::Graph petersen_graph() {
    boole::Graph g;
    g.n = 10;
    g.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5},  {1, 5},
               {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9},
               {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}};
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Brute-force clique number by scanning every vertex subset.
inline int max_clique_brute_force(const boole::Graph& g) {
    const boole::SubsetMask full = (boole::SubsetMask{1} << g.n) - 1;
    int best = 0;
    for (boole::SubsetMask mask = 1; mask <= full; ++mask) {
        bool clique = true;
        const auto elems = boole::elements_from_mask(mask);
        for (std::size_t i = 0; i < elems.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < elems.size() && clique; ++j) {
                if (!g.adjacent(elems[i], elems[j])) clique = false;
            }
        }
        if (clique) best = std::max(best, boole::mask_size(mask));
    }
    return best;
}

// Random 0/1 matrix with the given one-density (percent).
inline boole::BinaryMatrix rand_matrix(Rng& rng, int rows, int cols, int one_percent) {
    boole::BinaryMatrix d;
    d.rows = rows;
    d.cols = cols;
    for (int i = 0; i < rows; ++i) {
        std::uint32_t mask = 0;
        for (int j = 0; j < cols; ++j) {
            if (rand_int(rng, 0, 99) < one_percent) mask |= std::uint32_t{1} << j;
        }
        d.row_masks.push_back(mask);
    }
    return d;
}

}  // namespace testsupport
