#include "doctest.h"

#include <algorithm>

#include "boole/errors.hpp"
#include "boole/hailperin.hpp"
#include "boole/reductions.hpp"
#include "support.hpp"

using namespace boole;
using testsupport::Rng;

TEST_CASE("graph documents parse and validate") {
    const auto g = parse_graph(R"({"n":3,"edges":[[2,1],[2,3]]})");
    CHECK(g.n == 3);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(1, 3));

    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[1,1]]})"), DomainError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[1,3]]})"), DomainError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[1,2],[2,1]]})"), DomainError);
    CHECK_THROWS_AS(parse_graph(R"({"edges":[]})"), ParseError);

    const auto gw = parse_weighted_graph(
        R"({"n":2,"edges":[{"uv":[1,2],"w":"1/8"}]})");
    CHECK(gw.w == std::vector<Rat>{Rat(1, 8)});
}

TEST_CASE("clique and independent-set expansion") {
    const auto k3 = testsupport::complete_graph(3);
    const auto cliques = all_cliques(k3);
    CHECK(cliques == std::vector<SubsetMask>{0b001, 0b010, 0b011, 0b100, 0b101, 0b110, 0b111});
    CHECK(independent_sets(k3) == std::vector<SubsetMask>{0b001, 0b010, 0b100});

    const auto p3 = testsupport::path_graph(3);
    CHECK(all_cliques(p3) == std::vector<SubsetMask>{0b001, 0b010, 0b011, 0b100, 0b110});
    // {1,3} is independent in the path
    const auto ind = independent_sets(p3);
    CHECK(std::find(ind.begin(), ind.end(), SubsetMask{0b101}) != ind.end());

    Graph big;
    big.n = 13;
    CHECK_THROWS_AS(all_cliques(big), DomainError);
}

TEST_CASE("coloring gadget instance") {
    const auto c5 = color_gadget(testsupport::cycle_graph(5));
    REQUIRE(c5.family.members.size() == 10);
    for (int i = 0; i < 5; ++i) CHECK(c5.b[static_cast<std::size_t>(i)] == Rat(1, 5));
    for (int i = 5; i < 10; ++i) CHECK(c5.b[static_cast<std::size_t>(i)] == 0);
    CHECK(is_feasible(c5).feasible);

    const auto k2 = color_gadget(testsupport::complete_graph(2));
    CHECK(k2.b == std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(0)});

    Graph edgeless;
    edgeless.n = 3;
    const auto e3 = color_gadget(edgeless);
    CHECK(e3.family.members.size() == 3);
    CHECK(e3.b == std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
}

TEST_CASE("fractional chromatic number via the covering LP") {
    CHECK(fractional_chromatic(testsupport::complete_graph(3)) == 3);
    CHECK(fractional_chromatic(testsupport::cycle_graph(5)) == Rat(5, 2));
    Graph edgeless;
    edgeless.n = 4;
    CHECK(fractional_chromatic(edgeless) == 1);
    CHECK(fractional_chromatic(testsupport::complete_graph(4)) == 4);
    CHECK(fractional_chromatic(testsupport::cycle_graph(7)) == Rat(7, 3));
    CHECK(fractional_chromatic(testsupport::petersen_graph()) == Rat(5, 2));
}

namespace {

// The clique LP rebuilt inline so the enumeration oracle can price it
// without touching the production path.
LinearProgram triangle_clique_lp_by_hand(const Rat& w) {
    auto lp = LinearProgram::with_vars(3);
    lp.objective = {w, w, w};
    lp.var_signs.assign(3, VarSign::Free);
    for (int e = 0; e < 3; ++e) lp.add_row(Rel::Le, Rat(1)).coeffs[e] = 1;
    auto& all = lp.add_row(Rel::Le, Rat(2));
    all.coeffs = {Rat(1), Rat(1), Rat(1)};
    return lp;
}

}  // namespace

TEST_CASE("clique-constrained edge LP") {
    WeightedGraph edge{testsupport::complete_graph(2), {Rat(1)}};
    CHECK(clique_lp(edge) == 1);

    WeightedGraph triangle{testsupport::complete_graph(3), {Rat(1), Rat(1), Rat(1)}};
    CHECK(clique_lp(triangle) == 2);
    const auto oracle = lp_enumerate_basic(triangle_clique_lp_by_hand(Rat(1)), Sense::Max);
    CHECK(as_optimal(oracle)->value == 2);

    WeightedGraph path{testsupport::path_graph(4), {Rat(1), Rat(1), Rat(1)}};
    CHECK(clique_lp(path) == 3);  // only edge cliques bind
}

TEST_CASE("max union probability equals one minus the clique LP") {
    WeightedGraph edge{testsupport::complete_graph(2), {Rat(1, 8)}};
    CHECK(clique_lp(edge) == Rat(1, 8));
    CHECK(max_union_via_dual(edge) == Rat(7, 8));

    WeightedGraph triangle{testsupport::complete_graph(3),
                           {Rat(1, 18), Rat(1, 18), Rat(1, 18)}};
    CHECK(max_union_via_dual(triangle) == 1 - clique_lp(triangle));
    CHECK(clique_lp(triangle) == Rat(1, 9));

    WeightedGraph zero{testsupport::path_graph(3), {Rat(0), Rat(0)}};
    CHECK(clique_lp(zero) == 0);
    CHECK(max_union_via_dual(zero) == 1);

    WeightedGraph heavy{testsupport::complete_graph(2), {Rat(1, 2)}};
    CHECK_THROWS_AS(max_union_via_dual(heavy), DomainError);
}

TEST_CASE("clique polyhedron membership") {
    const auto triangle = testsupport::complete_graph(3);
    CHECK(!phi_membership(triangle, {Rat(1), Rat(1), Rat(1)}));  // 3 > 2 on the 3-clique
    CHECK(phi_membership(triangle, {Rat(0), Rat(0), Rat(0)}));
    // the recession cone contains the nonpositive orthant
    CHECK(phi_membership(triangle, {Rat(-5), Rat(0), Rat(0)}));
    CHECK(phi_membership(triangle, {Rat(2, 3), Rat(2, 3), Rat(2, 3)}));
}

TEST_CASE("constant-vector clique test") {
    CHECK(has_k_clique(testsupport::complete_graph(3), 3));
    CHECK(!has_k_clique(testsupport::path_graph(4), 3));
    CHECK(has_k_clique(testsupport::complete_graph(4), 2));
    CHECK(!has_k_clique(testsupport::cycle_graph(5), 3));
    CHECK_THROWS_AS(has_k_clique(testsupport::complete_graph(3), 1), DomainError);
}

TEST_CASE("minimum union probability of the gadget is chi_f over n") {
    Rng rng(9001);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = testsupport::rand_int(rng, 1, 5);
        const auto g = testsupport::rand_graph(rng, n);
        const auto inst = color_gadget(g);
        const auto lo = union_bounds(inst).interval.lo;
        CHECK(lo == fractional_chromatic(g) / n);
    }
    const auto c5 = testsupport::cycle_graph(5);
    CHECK(union_bounds(color_gadget(c5)).interval.lo == Rat(1, 2));
}

TEST_CASE("dual-chain identity on random weighted graphs") {
    Rng rng(9002);
    int tested = 0;
    for (int trial = 0; trial < 30 && tested < 12; ++trial) {
        const int n = testsupport::rand_int(rng, 2, 5);
        auto g = testsupport::rand_graph(rng, n, 60);
        if (g.edges.empty()) continue;
        ++tested;
        WeightedGraph gw{g, {}};
        const Rat cap = Rat(1, n) / n;
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            gw.w.push_back(testsupport::rand_rat(rng, 8, cap));
        }
        CHECK(max_union_via_dual(gw) == 1 - clique_lp(gw));
    }
    CHECK(tested == 12);
}

TEST_CASE("kappa test agrees with brute-force clique search") {
    Rng rng(9003);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = testsupport::rand_int(rng, 2, 6);
        const auto g = testsupport::rand_graph(rng, n);
        const int omega = testsupport::max_clique_brute_force(g);
        for (int k = 2; k <= n; ++k) {
            CHECK(has_k_clique(g, k) == (omega >= k));
        }
    }
}

TEST_CASE("clique LP optimum is monotone in the weights") {
    Rng rng(9004);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = testsupport::rand_int(rng, 2, 4);
        auto g = testsupport::rand_graph(rng, n, 70);
        if (g.edges.empty()) continue;
        WeightedGraph gw{g, std::vector<Rat>(g.edges.size(), Rat(0))};
        for (auto& w : gw.w) w = testsupport::rand_rat(rng, 6);
        WeightedGraph raised = gw;
        const auto e = static_cast<std::size_t>(
            testsupport::rand_int(rng, 0, static_cast<int>(g.edges.size()) - 1));
        raised.w[e] += testsupport::rand_rat(rng, 6, Rat(2));
        CHECK(clique_lp(raised) >= clique_lp(gw));
    }
}

TEST_CASE("phi membership is antitone on nonnegative vectors") {
    Rng rng(9005);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = testsupport::rand_int(rng, 2, 5);
        const auto g = testsupport::rand_graph(rng, n, 60);
        if (g.edges.empty()) continue;
        std::vector<Rat> y;
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            y.push_back(testsupport::rand_rat(rng, 4));
        }
        if (!phi_membership(g, y)) continue;
        auto smaller = y;
        for (auto& v : smaller) v /= testsupport::rand_int(rng, 1, 3);
        CHECK(phi_membership(g, smaller));
    }
}
