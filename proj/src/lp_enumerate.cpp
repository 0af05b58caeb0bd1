#include <algorithm>
#include <functional>
#include <utility>

#include "boole/errors.hpp"
#include "boole/linalg.hpp"
#include "boole/lp.hpp"

// Brute-force LP oracle, independent of the simplex path: every vertex of the
// feasible region is the unique solution of some full-rank active subsystem,
// and every extreme recession direction spans the nullspace of a rank n-1
// active subsystem. At guarded sizes both families can be enumerated whole.

namespace boole {

namespace {

struct SplitLp {
    std::size_t cols = 0;                      // after splitting free vars
    std::vector<Rat> objective;                // on split columns
    std::vector<std::vector<Rat>> eq;          // a.x = eq_rhs
    std::vector<Rat> eq_rhs;
    std::vector<std::vector<Rat>> le;          // a.x <= le_rhs (bounds included)
    std::vector<Rat> le_rhs;
    std::vector<int> pos_col, neg_col;
};

SplitLp split(const LinearProgram& lp) {
    SplitLp s;
    s.pos_col.resize(lp.num_vars);
    s.neg_col.assign(lp.num_vars, -1);
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        s.pos_col[j] = static_cast<int>(s.cols++);
        if (lp.var_signs[j] == VarSign::Free) s.neg_col[j] = static_cast<int>(s.cols++);
    }
    s.objective.assign(s.cols, Rat(0));
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        s.objective[s.pos_col[j]] = lp.objective[j];
        if (s.neg_col[j] >= 0) s.objective[s.neg_col[j]] = -lp.objective[j];
    }
    auto expand = [&](const std::vector<Rat>& coeffs, int sign) {
        std::vector<Rat> a(s.cols, Rat(0));
        for (std::size_t j = 0; j < lp.num_vars; ++j) {
            a[s.pos_col[j]] = Rat(sign) * coeffs[j];
            if (s.neg_col[j] >= 0) a[s.neg_col[j]] = Rat(-sign) * coeffs[j];
        }
        return a;
    };
    for (const auto& row : lp.rows) {
        if (row.rel == Rel::Eq) {
            s.eq.push_back(expand(row.coeffs, 1));
            s.eq_rhs.push_back(row.rhs);
        } else {
            const int sign = row.rel == Rel::Le ? 1 : -1;
            s.le.push_back(expand(row.coeffs, sign));
            s.le_rhs.push_back(Rat(sign) * row.rhs);
        }
    }
    for (std::size_t c = 0; c < s.cols; ++c) {
        std::vector<Rat> a(s.cols, Rat(0));
        a[c] = -1;  // x_c >= 0
        s.le.push_back(std::move(a));
        s.le_rhs.push_back(Rat(0));
    }
    return s;
}

bool feasible_point(const SplitLp& s, const std::vector<Rat>& z) {
    for (std::size_t i = 0; i < s.eq.size(); ++i) {
        Rat lhs = 0;
        for (std::size_t j = 0; j < s.cols; ++j) lhs += s.eq[i][j] * z[j];
        if (lhs != s.eq_rhs[i]) return false;
    }
    for (std::size_t i = 0; i < s.le.size(); ++i) {
        Rat lhs = 0;
        for (std::size_t j = 0; j < s.cols; ++j) lhs += s.le[i][j] * z[j];
        if (lhs > s.le_rhs[i]) return false;
    }
    return true;
}

bool recession_direction(const SplitLp& s, const std::vector<Rat>& d) {
    for (std::size_t i = 0; i < s.eq.size(); ++i) {
        Rat lhs = 0;
        for (std::size_t j = 0; j < s.cols; ++j) lhs += s.eq[i][j] * d[j];
        if (lhs != 0) return false;
    }
    for (std::size_t i = 0; i < s.le.size(); ++i) {
        Rat lhs = 0;
        for (std::size_t j = 0; j < s.cols; ++j) lhs += s.le[i][j] * d[j];
        if (lhs > 0) return false;
    }
    return true;
}

// Visits every k-subset of {0, ..., pool-1}.
void for_each_subset(std::size_t pool, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    if (k > pool) return;
    for (;;) {
        fn(pick);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == pool - k + i - 1) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::vector<Rat> map_back(const SplitLp& s, std::size_t num_vars,
                          const std::vector<Rat>& z) {
    std::vector<Rat> x(num_vars, Rat(0));
    for (std::size_t j = 0; j < num_vars; ++j) {
        x[j] = z[s.pos_col[j]];
        if (s.neg_col[j] >= 0) x[j] -= z[s.neg_col[j]];
    }
    return x;
}

}  // namespace

LpOutcome lp_enumerate_basic(const LinearProgram& lp, Sense sense) {
    if (lp.num_vars > 12 || lp.rows.size() > 12) {
        throw DomainError("lp_enumerate_basic: size guard exceeded (12 vars / 12 rows)");
    }
    const SplitLp s = split(lp);
    const std::size_t rank_eq = s.eq.empty() ? 0 : matrix_rank(s.eq);
    const std::size_t slack = s.cols - rank_eq;

    // Vertices: equality rows are always active; pick `slack` more.
    std::vector<std::vector<Rat>> points;
    for_each_subset(s.le.size(), slack, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::vector<Rat>> m = s.eq;
        std::vector<Rat> rhs = s.eq_rhs;
        for (auto i : pick) {
            m.push_back(s.le[i]);
            rhs.push_back(s.le_rhs[i]);
        }
        const auto sol = solve_linear(std::move(m), std::move(rhs));
        if (sol.kind != SolveKind::Unique) return;
        if (!feasible_point(s, sol.x)) return;
        if (std::find(points.begin(), points.end(), sol.x) == points.end()) {
            points.push_back(sol.x);
        }
    });
    if (points.empty()) {
        // With all split columns nonnegative the region is pointed, so a
        // nonempty region always has a vertex. Certified by exhaustion.
        return LpInfeasible{{}};
    }

    // Extreme recession directions: active subsystems of rank cols-1.
    std::vector<Rat> improving_ray;
    if (slack >= 1) {
        for_each_subset(s.le.size(), slack - 1, [&](const std::vector<std::size_t>& pick) {
            if (!improving_ray.empty()) return;
            std::vector<std::vector<Rat>> m = s.eq;
            for (auto i : pick) m.push_back(s.le[i]);
            if (m.empty()) m.push_back(std::vector<Rat>(s.cols, Rat(0)));
            auto basis = nullspace(std::move(m), s.cols);
            if (basis.size() != 1) return;
            for (int orient : {1, -1}) {
                std::vector<Rat> d = basis[0];
                if (orient < 0) {
                    for (auto& v : d) v = -v;
                }
                if (!recession_direction(s, d)) continue;
                Rat gain = 0;
                for (std::size_t j = 0; j < s.cols; ++j) gain += s.objective[j] * d[j];
                if (sense == Sense::Max ? gain > 0 : gain < 0) {
                    improving_ray = std::move(d);
                    break;
                }
            }
        });
    }
    if (!improving_ray.empty()) {
        return LpUnbounded{map_back(s, lp.num_vars, improving_ray)};
    }

    std::size_t best = 0;
    Rat best_value;
    bool have_best = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Rat v = 0;
        for (std::size_t j = 0; j < s.cols; ++j) v += s.objective[j] * points[i][j];
        if (!have_best || (sense == Sense::Max ? v > best_value : v < best_value)) {
            best_value = v;
            best = i;
            have_best = true;
        }
    }
    return LpOptimal{best_value, map_back(s, lp.num_vars, points[best])};
}

}  // namespace boole
