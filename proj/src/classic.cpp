#include "boole/classic.hpp"

#include <string>

#include "boole/errors.hpp"

namespace boole {

namespace {

bool has_all_sets_up_to(const BooleInstance& inst, int k) {
    const std::size_t atoms = std::size_t{1} << inst.family.n;
    for (std::size_t mask = 1; mask < atoms; ++mask) {
        if (mask_size(static_cast<SubsetMask>(mask)) <= k &&
            !inst.family.contains(static_cast<SubsetMask>(mask))) {
            return false;
        }
    }
    return true;
}

Rat alternating_sum(const BooleInstance& inst, int max_size) {
    Rat total = 0;
    for (std::size_t i = 0; i < inst.family.members.size(); ++i) {
        const int size = mask_size(inst.family.members[i]);
        if (size > max_size) continue;
        total += size % 2 == 1 ? inst.b[i] : Rat(-inst.b[i]);
    }
    return total;
}

}  // namespace

Rat inclusion_exclusion(const BooleInstance& inst) {
    validate_instance(inst);
    if (!inst.family.is_complete()) {
        throw DomainError("inclusion_exclusion needs every nonempty subset of [n]");
    }
    return alternating_sum(inst, inst.family.n);
}

Interval boole_frechet(const BooleInstance& inst) {
    validate_instance(inst);
    if (!inst.family.has_all_singletons()) {
        throw DomainError("boole_frechet needs all singleton probabilities");
    }
    Rat lo = 0;
    Rat sum = 0;
    for (int e = 0; e < inst.family.n; ++e) {
        const Rat& p = inst.b_of(SubsetMask{1} << e);
        if (p > lo) lo = p;
        sum += p;
    }
    return {lo, sum < 1 ? sum : Rat(1)};
}

Rat bonferroni(const BooleInstance& inst, int k) {
    validate_instance(inst);
    if (k < 1 || k > inst.family.n) {
        throw DomainError("bonferroni order k must be in [1, n]");
    }
    if (!has_all_sets_up_to(inst, k)) {
        throw DomainError("bonferroni order " + std::to_string(k) +
                          " needs all sets of size <= " + std::to_string(k));
    }
    return alternating_sum(inst, k);
}

std::vector<BonferroniEntry> bonferroni_report(const BooleInstance& inst) {
    validate_instance(inst);
    std::vector<BonferroniEntry> report;
    for (int k = 1; k <= inst.family.n && has_all_sets_up_to(inst, k); ++k) {
        report.push_back({k, alternating_sum(inst, k), k % 2 == 1});
    }
    return report;
}

}  // namespace boole
