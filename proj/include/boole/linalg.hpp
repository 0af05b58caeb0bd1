#pragma once

#include <cstddef>
#include <vector>

#include "boole/rat.hpp"

namespace boole {

// Exact dense Gaussian elimination, small systems only.

std::size_t matrix_rank(std::vector<std::vector<Rat>> m);

enum class SolveKind { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveKind kind;
    std::vector<Rat> x;  // valid only when kind == Unique
};

// Solves m x = rhs where m may be rectangular (any number of rows).
SolveResult solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs);

// Basis of {x : m x = 0}.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m,
                                        std::size_t num_cols);

}  // namespace boole
