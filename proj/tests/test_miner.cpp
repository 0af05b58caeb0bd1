#include "doctest.h"

#include <algorithm>

#include "boole/errors.hpp"
#include "boole/hailperin.hpp"
#include "boole/miner.hpp"
#include "support.hpp"

using namespace boole;
using testsupport::Rng;

TEST_CASE("matrix loading") {
    const auto d = load_matrix("1,0\n0,1\n");
    CHECK(d.rows == 2);
    CHECK(d.cols == 2);
    CHECK(d.row_masks == std::vector<std::uint32_t>{0b01, 0b10});

    const auto wide = load_matrix("1 1 1\n");
    CHECK(wide.rows == 1);
    CHECK(wide.cols == 3);

    CHECK_THROWS_AS(load_matrix("1,2\n"), ParseError);
    CHECK_THROWS_AS(load_matrix("1,0\n1\n"), ParseError);
    CHECK_THROWS_AS(load_matrix(""), DomainError);

    const auto with_header = load_matrix("a,b\n1,0\n", true);
    CHECK(with_header.rows == 1);
    CHECK(with_header.row_masks == std::vector<std::uint32_t>{0b01});
}

TEST_CASE("empirical probabilities are exact row fractions") {
    SetFamily family;
    family.n = 2;
    family.members = {0b01, 0b10, 0b11};

    const auto identity = load_matrix("1,0\n0,1\n");
    CHECK(empirical_b(identity, family).b == std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(0)});

    const auto ones = load_matrix("1,1\n1,1\n1,1\n");
    CHECK(empirical_b(ones, family).b == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});

    const auto mixed = load_matrix("1,1\n1,0\n0,0\n");
    CHECK(empirical_b(mixed, family).b == std::vector<Rat>{Rat(2, 3), Rat(1, 3), Rat(1, 3)});

    SetFamily wrong;
    wrong.n = 3;
    wrong.members = {0b1};
    CHECK_THROWS_AS(empirical_b(identity, wrong), DomainError);
}

TEST_CASE("level-wise discovery on handcrafted matrices") {
    const auto identity = load_matrix("1,0\n0,1\n");
    const auto f1 = apriori(identity, Rat(1, 2), 2);
    CHECK(f1.members == std::vector<SubsetMask>{0b01, 0b10});  // the pair has support 0

    const auto ones = load_matrix("1,1,1\n1,1,1\n");
    const auto f2 = apriori(ones, Rat(1), 2);
    CHECK(f2.members ==
          std::vector<SubsetMask>{0b001, 0b010, 0b100, 0b011, 0b101, 0b110});

    // threshold just above the best singleton: nothing survives
    const auto f3 = apriori(identity, Rat(3, 4), 2);
    CHECK(f3.members.empty());
    CHECK_THROWS_AS(validate_family(f3), DomainError);
}

TEST_CASE("empirical instances are feasible by construction") {
    Rng rng(111);
    for (int trial = 0; trial < 10; ++trial) {
        const int cols = testsupport::rand_int(rng, 1, 4);
        const auto d = testsupport::rand_matrix(rng, testsupport::rand_int(rng, 1, 12), cols,
                                                testsupport::rand_int(rng, 20, 90));
        const auto family = apriori(d, Rat(1, 4), cols);
        if (family.members.empty()) continue;
        const auto feas = is_feasible(empirical_b(d, family));
        CHECK(feas.feasible);
    }
}

TEST_CASE("output is downward closed and equals the brute-force filter") {
    Rng rng(112);
    for (int trial = 0; trial < 20; ++trial) {
        const int cols = testsupport::rand_int(rng, 1, 5);
        const int max_size = testsupport::rand_int(rng, 0, cols);
        const Rat eps(1, testsupport::rand_int(rng, 1, 4));
        const auto d = testsupport::rand_matrix(rng, testsupport::rand_int(rng, 1, 16), cols,
                                                testsupport::rand_int(rng, 20, 90));
        const auto family = apriori(d, eps, max_size);

        // brute force over all nonempty subsets
        std::vector<SubsetMask> expected;
        const SubsetMask full = (SubsetMask{1} << cols) - 1;
        for (SubsetMask s = 1; s <= full; ++s) {
            if (mask_size(s) <= max_size && support(d, s) >= eps) expected.push_back(s);
        }
        auto got = family.members;
        std::sort(got.begin(), got.end());
        CHECK(got == expected);

        // downward closure
        for (const auto s : family.members) {
            for (SubsetMask sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s) {
                CHECK(std::find(family.members.begin(), family.members.end(), sub) !=
                      family.members.end());
            }
        }
    }
}
