#pragma once

#include <vector>

#include "boole/instance.hpp"
#include "boole/lp.hpp"

namespace boole {

struct BoundsResult {
    Interval interval;
    AtomDistribution min_witness;  // realization attaining interval.lo
    AtomDistribution max_witness;  // realization attaining interval.hi
};

struct FeasibilityResult {
    bool feasible = false;
    AtomDistribution realization;  // valid when feasible
    std::vector<Rat> farkas;       // valid when infeasible; per LP row
};

// The atom LP: one variable x_T >= 0 per T subseteq [n] in increasing mask
// order, the normalization row sum_T x_T = 1 first, then one marginal row
// sum_{T >= S} x_T = b_S per family member in family order. The objective
// selects the union probability sum_{T != {}} x_T.
LinearProgram build_hailperin_lp(const BooleInstance& inst);

FeasibilityResult is_feasible(const BooleInstance& inst);

// Tight closed interval of the union probability, with realizations
// attaining both endpoints. Throws InfeasibleInstance.
BoundsResult union_bounds(const BooleInstance& inst);

// A realization with union probability exactly u. Throws NotInUnionPolytope
// when u is outside the tight interval, InfeasibleInstance when no
// realization exists at all.
AtomDistribution realize_at(const BooleInstance& inst, const Rat& u);

// Exact witness check: x realizes every b_S of the instance and sums to 1.
bool realizes(const BooleInstance& inst, const AtomDistribution& x);

}  // namespace boole
