#pragma once

#include <vector>

#include "boole/instance.hpp"

namespace boole {

// Alternating sum over the whole family; requires every nonempty subset of
// [n] to be present. Throws DomainError otherwise.
Rat inclusion_exclusion(const BooleInstance& inst);

// [max_i b_{i}, min(1, sum_i b_{i})] from the singleton values; requires all
// singletons present.
Interval boole_frechet(const BooleInstance& inst);

// Truncated alternating sum over sets of size <= k; requires all such sets
// present. Values are reported raw (they may leave [0, 1]): odd k gives an
// upper bound on the union probability, even k gives a lower bound.
Rat bonferroni(const BooleInstance& inst, int k);

struct BonferroniEntry {
    int k = 0;
    Rat value;
    bool is_upper = false;  // k odd
};

// Entries for every k whose size-<=-k sets are all present.
std::vector<BonferroniEntry> bonferroni_report(const BooleInstance& inst);

}  // namespace boole
