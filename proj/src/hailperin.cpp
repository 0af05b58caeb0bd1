#include "boole/hailperin.hpp"

#include <stdexcept>
#include <utility>

#include "boole/errors.hpp"

namespace boole {

namespace {

AtomDistribution point_to_distribution(int n, const std::vector<Rat>& point) {
    AtomDistribution x;
    x.n = n;
    for (std::size_t mask = 0; mask < point.size(); ++mask) {
        if (point[mask] != 0) x.weights[static_cast<SubsetMask>(mask)] = point[mask];
    }
    return x;
}

}  // namespace

LinearProgram build_hailperin_lp(const BooleInstance& inst) {
    validate_instance(inst);
    const int n = inst.family.n;
    const std::size_t atoms = std::size_t{1} << n;

    LinearProgram lp = LinearProgram::with_vars(atoms);
    for (std::size_t mask = 1; mask < atoms; ++mask) lp.objective[mask] = 1;

    auto& normalization = lp.add_row(Rel::Eq, Rat(1));
    for (std::size_t mask = 0; mask < atoms; ++mask) normalization.coeffs[mask] = 1;

    for (std::size_t i = 0; i < inst.family.members.size(); ++i) {
        const SubsetMask s = inst.family.members[i];
        auto& row = lp.add_row(Rel::Eq, inst.b[i]);
        for (std::size_t mask = 0; mask < atoms; ++mask) {
            if ((static_cast<SubsetMask>(mask) & s) == s) row.coeffs[mask] = 1;
        }
    }
    return lp;
}

FeasibilityResult is_feasible(const BooleInstance& inst) {
    LinearProgram lp = build_hailperin_lp(inst);
    lp.objective.assign(lp.num_vars, Rat(0));
    const LpOutcome outcome = lp_solve(lp, Sense::Min);
    FeasibilityResult result;
    if (const auto* opt = as_optimal(outcome)) {
        result.feasible = true;
        result.realization = point_to_distribution(inst.family.n, opt->point);
    } else if (const auto* inf = as_infeasible(outcome)) {
        result.farkas = inf->farkas;
    }
    return result;
}

BoundsResult union_bounds(const BooleInstance& inst) {
    const LinearProgram lp = build_hailperin_lp(inst);
    const LpOutcome lo = lp_solve(lp, Sense::Min);
    const auto* lo_opt = as_optimal(lo);
    if (lo_opt == nullptr) {
        throw InfeasibleInstance("no realization exists for the given probabilities");
    }
    // Feasible and confined to the probability simplex, so the max exists.
    const LpOutcome hi = lp_solve(lp, Sense::Max);
    const auto* hi_opt = as_optimal(hi);
    if (hi_opt == nullptr) throw std::logic_error("atom LP must be bounded");

    BoundsResult result;
    result.interval = {lo_opt->value, hi_opt->value};
    result.min_witness = point_to_distribution(inst.family.n, lo_opt->point);
    result.max_witness = point_to_distribution(inst.family.n, hi_opt->point);
    return result;
}

AtomDistribution realize_at(const BooleInstance& inst, const Rat& u) {
    LinearProgram lp = build_hailperin_lp(inst);
    auto union_row = lp.rows[0];  // same coefficient pattern as the objective
    union_row.coeffs[0] = 0;
    union_row.rhs = u;
    lp.rows.push_back(std::move(union_row));
    lp.objective.assign(lp.num_vars, Rat(0));

    const LpOutcome outcome = lp_solve(lp, Sense::Min);
    if (const auto* opt = as_optimal(outcome)) {
        return point_to_distribution(inst.family.n, opt->point);
    }
    if (!is_feasible(inst).feasible) {
        throw InfeasibleInstance("no realization exists for the given probabilities");
    }
    throw NotInUnionPolytope("no realization has union probability " + rat_str(u));
}

bool realizes(const BooleInstance& inst, const AtomDistribution& x) {
    if (x.n != inst.family.n || !is_distribution(x)) return false;
    for (std::size_t i = 0; i < inst.family.members.size(); ++i) {
        if (marginal_of(x, inst.family.members[i]) != inst.b[i]) return false;
    }
    return true;
}

}  // namespace boole
