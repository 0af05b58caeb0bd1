#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "boole/rat.hpp"

namespace boole {

enum class Rel { Eq, Le, Ge };
enum class Sense { Min, Max };
enum class VarSign { NonNeg, Free };

struct LpRow {
    std::vector<Rat> coeffs;  // exactly num_vars entries
    Rel rel = Rel::Eq;
    Rat rhs = Rat(0);
};

struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<Rat> objective;      // exactly num_vars entries
    std::vector<LpRow> rows;
    std::vector<VarSign> var_signs;  // exactly num_vars entries

    static LinearProgram with_vars(std::size_t n) {
        LinearProgram lp;
        lp.num_vars = n;
        lp.objective.assign(n, Rat(0));
        lp.var_signs.assign(n, VarSign::NonNeg);
        return lp;
    }
    LpRow& add_row(Rel rel, Rat rhs) {
        rows.push_back({std::vector<Rat>(num_vars, Rat(0)), rel, std::move(rhs)});
        return rows.back();
    }
};

struct LpOptimal {
    Rat value;
    std::vector<Rat> point;  // one entry per variable
};

struct LpInfeasible {
    // One multiplier per row; combining the rows with these multipliers
    // yields a row that forces 0 >= 1 over the variable domain (sign
    // conventions in farkas_valid), normalized so that y.rhs = 1. Empty when
    // infeasibility was certified by exhaustion instead (enumeration path).
    std::vector<Rat> farkas;
};

struct LpUnbounded {
    std::vector<Rat> ray;  // improving recession direction, original variables
};

using LpOutcome = std::variant<LpOptimal, LpInfeasible, LpUnbounded>;

// Exact two-phase simplex with Bland's rule (dense rational tableau, free
// variables split into differences of nonnegative pairs). Terminates on every
// well-formed input.
LpOutcome lp_solve(const LinearProgram& lp, Sense sense);

// Independent oracle: enumerates all basic solutions of the constraint
// system (and all extreme recession directions), filters feasible, takes the
// best. Guarded to num_vars <= 12 and rows <= 12. Test use only.
LpOutcome lp_enumerate_basic(const LinearProgram& lp, Sense sense);

// Exact checks, used by tests and by the CLI --check flag.
bool point_satisfies(const LinearProgram& lp, const std::vector<Rat>& x);
bool farkas_valid(const LinearProgram& lp, const std::vector<Rat>& y);
bool ray_valid(const LinearProgram& lp, Sense sense, const std::vector<Rat>& d);

// Lvalue-only: the pointer aliases the outcome, so binding a temporary would
// dangle past the end of the statement.
inline const LpOptimal* as_optimal(const LpOutcome& o) { return std::get_if<LpOptimal>(&o); }
inline const LpInfeasible* as_infeasible(const LpOutcome& o) { return std::get_if<LpInfeasible>(&o); }
inline const LpUnbounded* as_unbounded(const LpOutcome& o) { return std::get_if<LpUnbounded>(&o); }
const LpOptimal* as_optimal(LpOutcome&&) = delete;
const LpInfeasible* as_infeasible(LpOutcome&&) = delete;
const LpUnbounded* as_unbounded(LpOutcome&&) = delete;

}  // namespace boole
