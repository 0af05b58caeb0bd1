#include "boole/lp.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "boole/errors.hpp"

namespace boole {

namespace {

void check_shape(const LinearProgram& lp) {
    if (lp.objective.size() != lp.num_vars || lp.var_signs.size() != lp.num_vars) {
        throw std::invalid_argument("LinearProgram: objective/var_signs size mismatch");
    }
    for (const auto& row : lp.rows) {
        if (row.coeffs.size() != lp.num_vars) {
            throw std::invalid_argument("LinearProgram: row width mismatch");
        }
    }
}

// Standard form: min c.z subject to A z = b, z >= 0, with b >= 0.
// Columns are laid out as [per-variable columns][slack columns]; a free
// variable occupies two adjacent columns (positive and negative part).
struct StdForm {
    std::size_t cols = 0;
    std::vector<std::vector<Rat>> a;  // m rows, cols entries each
    std::vector<Rat> b;
    std::vector<Rat> c;
    std::vector<int> pos_col;   // per original variable
    std::vector<int> neg_col;   // -1 unless the variable is free
    std::vector<int> row_sign;  // +1, or -1 when the row was negated
};

StdForm to_standard(const LinearProgram& lp, Sense sense) {
    StdForm sf;
    sf.pos_col.resize(lp.num_vars);
    sf.neg_col.assign(lp.num_vars, -1);
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        sf.pos_col[j] = static_cast<int>(sf.cols++);
        if (lp.var_signs[j] == VarSign::Free) sf.neg_col[j] = static_cast<int>(sf.cols++);
    }
    const std::size_t var_cols = sf.cols;
    std::size_t num_slacks = 0;
    for (const auto& row : lp.rows) {
        if (row.rel != Rel::Eq) ++num_slacks;
    }
    sf.cols += num_slacks;

    sf.c.assign(sf.cols, Rat(0));
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        const Rat cj = sense == Sense::Max ? Rat(-lp.objective[j]) : lp.objective[j];
        sf.c[sf.pos_col[j]] = cj;
        if (sf.neg_col[j] >= 0) sf.c[sf.neg_col[j]] = -cj;
    }

    std::size_t next_slack = var_cols;
    for (const auto& row : lp.rows) {
        const bool negate = row.rhs < 0;
        sf.row_sign.push_back(negate ? -1 : 1);
        Rel rel = row.rel;
        if (negate && rel != Rel::Eq) rel = rel == Rel::Le ? Rel::Ge : Rel::Le;

        std::vector<Rat> a(sf.cols, Rat(0));
        for (std::size_t j = 0; j < lp.num_vars; ++j) {
            const Rat v = negate ? Rat(-row.coeffs[j]) : row.coeffs[j];
            a[sf.pos_col[j]] = v;
            if (sf.neg_col[j] >= 0) a[sf.neg_col[j]] = -v;
        }
        if (rel != Rel::Eq) {
            a[next_slack++] = rel == Rel::Le ? Rat(1) : Rat(-1);
        }
        sf.a.push_back(std::move(a));
        sf.b.push_back(negate ? Rat(-row.rhs) : row.rhs);
    }
    return sf;
}

// Dense tableau. row[i] has ncols coefficient entries plus the rhs; rc holds
// the reduced costs of the current basis for the active objective.
struct Tableau {
    std::size_t ncols = 0;
    std::vector<std::vector<Rat>> row;
    std::vector<Rat> rc;
    std::vector<int> basis;       // column basic in each row
    std::vector<bool> enterable;  // non-candidates for entering the basis

    void pivot(std::size_t r, std::size_t col) {
        const Rat inv = 1 / row[r][col];
        for (auto& v : row[r]) {
            if (v != 0) v *= inv;
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i == r || row[i][col] == 0) continue;
            const Rat f = row[i][col];
            for (std::size_t j = 0; j <= ncols; ++j) {
                if (row[r][j] != 0) row[i][j] -= f * row[r][j];
            }
        }
        if (rc[col] != 0) {
            const Rat f = rc[col];
            for (std::size_t j = 0; j <= ncols; ++j) {
                if (row[r][j] != 0) rc[j] -= f * row[r][j];
            }
        }
        basis[r] = static_cast<int>(col);
    }

    // Moves the rhs column left and forgets the columns past new_ncols.
    void shrink_to(std::size_t new_ncols) {
        for (auto& r : row) {
            r[new_ncols] = r[ncols];
            r.resize(new_ncols + 1);
        }
        ncols = new_ncols;
        enterable.resize(new_ncols);
    }

    enum class Step { Optimal, Unbounded };

    // Bland's rule: entering = lowest-index enterable column with rc < 0,
    // leaving = min-ratio row, ties broken by lowest basic column index.
    Step run(std::size_t* unbounded_col) {
        for (;;) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (enterable[j] && rc[j] < 0) { enter = j; break; }
            }
            if (enter == ncols) return Step::Optimal;
            std::size_t leave = row.size();
            Rat best;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (row[i][enter] <= 0) continue;
                const Rat ratio = row[i][ncols] / row[i][enter];
                if (leave == row.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == row.size()) {
                if (unbounded_col) *unbounded_col = enter;
                return Step::Unbounded;
            }
            pivot(leave, enter);
        }
    }
};

std::vector<Rat> map_point_back(const LinearProgram& lp, const StdForm& sf,
                                const std::vector<Rat>& z) {
    std::vector<Rat> x(lp.num_vars, Rat(0));
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        x[j] = z[sf.pos_col[j]];
        if (sf.neg_col[j] >= 0) x[j] -= z[sf.neg_col[j]];
    }
    return x;
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp, Sense sense) {
    check_shape(lp);
    const StdForm sf = to_standard(lp, sense);
    const std::size_t m = sf.a.size();

    Tableau t;
    t.ncols = sf.cols + m;  // one artificial per row
    t.row.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        t.row[i].assign(t.ncols + 1, Rat(0));
        for (std::size_t j = 0; j < sf.cols; ++j) t.row[i][j] = sf.a[i][j];
        t.row[i][sf.cols + i] = 1;
        t.row[i][t.ncols] = sf.b[i];
        t.basis.push_back(static_cast<int>(sf.cols + i));
    }
    t.enterable.assign(t.ncols, true);

    // Phase 1: minimize the sum of artificials. With the all-artificial
    // starting basis the reduced cost of column j is -sum_i a_ij.
    t.rc.assign(t.ncols + 1, Rat(0));
    for (std::size_t j = 0; j < sf.cols; ++j) {
        for (std::size_t i = 0; i < m; ++i) t.rc[j] -= t.row[i][j];
    }
    if (t.run(nullptr) != Tableau::Step::Optimal) {
        throw std::logic_error("phase 1 cannot be unbounded");
    }

    Rat phase1 = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] >= static_cast<int>(sf.cols)) phase1 += t.row[i][t.ncols];
    }
    if (phase1 > 0) {
        // Farkas multipliers from the phase-1 duals: y_i = 1 - rc(artificial_i),
        // mapped through row negations and scaled so that y.b = 1.
        std::vector<Rat> y(m);
        Rat yb = 0;
        for (std::size_t i = 0; i < m; ++i) {
            y[i] = Rat(sf.row_sign[i]) * (1 - t.rc[sf.cols + i]);
            yb += y[i] * lp.rows[i].rhs;
        }
        for (auto& v : y) v /= yb;
        return LpInfeasible{std::move(y)};
    }

    // Drive any degenerate artificial out of the basis; a row with no
    // structural entry left is redundant and gets dropped.
    for (std::size_t i = 0; i < t.row.size();) {
        if (t.basis[i] < static_cast<int>(sf.cols)) { ++i; continue; }
        std::size_t col = sf.cols;
        for (std::size_t j = 0; j < sf.cols; ++j) {
            if (t.row[i][j] != 0) { col = j; break; }
        }
        if (col < sf.cols) {
            t.pivot(i, col);
            ++i;
        } else {
            t.row.erase(t.row.begin() + static_cast<long>(i));
            t.basis.erase(t.basis.begin() + static_cast<long>(i));
        }
    }
    t.shrink_to(sf.cols);  // artificial columns are never needed again

    // Phase 2: reduced costs of the real objective under the current basis.
    t.rc.assign(t.ncols + 1, Rat(0));
    for (std::size_t j = 0; j < sf.cols; ++j) t.rc[j] = sf.c[j];
    for (std::size_t i = 0; i < t.row.size(); ++i) {
        const Rat cb = sf.c[t.basis[i]];
        if (cb == 0) continue;
        for (std::size_t j = 0; j <= t.ncols; ++j) t.rc[j] -= cb * t.row[i][j];
    }

    std::size_t unbounded_col = 0;
    if (t.run(&unbounded_col) == Tableau::Step::Unbounded) {
        std::vector<Rat> z(sf.cols, Rat(0));
        z[unbounded_col] = 1;
        for (std::size_t i = 0; i < t.row.size(); ++i) {
            if (t.basis[i] < static_cast<int>(sf.cols)) {
                z[t.basis[i]] = -t.row[i][unbounded_col];
            }
        }
        return LpUnbounded{map_point_back(lp, sf, z)};
    }

    std::vector<Rat> z(sf.cols, Rat(0));
    for (std::size_t i = 0; i < t.row.size(); ++i) {
        if (t.basis[i] < static_cast<int>(sf.cols)) z[t.basis[i]] = t.row[i][t.ncols];
    }
    std::vector<Rat> x = map_point_back(lp, sf, z);
    Rat value = 0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) value += lp.objective[j] * x[j];
    return LpOptimal{std::move(value), std::move(x)};
}

bool point_satisfies(const LinearProgram& lp, const std::vector<Rat>& x) {
    if (x.size() != lp.num_vars) return false;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        if (lp.var_signs[j] == VarSign::NonNeg && x[j] < 0) return false;
    }
    for (const auto& row : lp.rows) {
        Rat lhs = 0;
        for (std::size_t j = 0; j < lp.num_vars; ++j) lhs += row.coeffs[j] * x[j];
        switch (row.rel) {
            case Rel::Eq: if (lhs != row.rhs) return false; break;
            case Rel::Le: if (lhs > row.rhs) return false; break;
            case Rel::Ge: if (lhs < row.rhs) return false; break;
        }
    }
    return true;
}

// y is a valid certificate when the sign pattern matches the row relations,
// the combined coefficient of every variable is <= 0 (= 0 for free ones),
// and y.b > 0: summing y_i * row_i then yields 0 <= lhs and lhs >= y.b > 0.
bool farkas_valid(const LinearProgram& lp, const std::vector<Rat>& y) {
    if (y.size() != lp.rows.size()) return false;
    Rat yb = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (lp.rows[i].rel == Rel::Le && y[i] > 0) return false;
        if (lp.rows[i].rel == Rel::Ge && y[i] < 0) return false;
        yb += y[i] * lp.rows[i].rhs;
    }
    if (yb <= 0) return false;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        Rat col = 0;
        for (std::size_t i = 0; i < y.size(); ++i) col += y[i] * lp.rows[i].coeffs[j];
        if (lp.var_signs[j] == VarSign::Free ? col != 0 : col > 0) return false;
    }
    return true;
}

bool ray_valid(const LinearProgram& lp, Sense sense, const std::vector<Rat>& d) {
    if (d.size() != lp.num_vars) return false;
    bool nonzero = false;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        if (d[j] != 0) nonzero = true;
        if (lp.var_signs[j] == VarSign::NonNeg && d[j] < 0) return false;
    }
    if (!nonzero) return false;
    for (const auto& row : lp.rows) {
        Rat lhs = 0;
        for (std::size_t j = 0; j < lp.num_vars; ++j) lhs += row.coeffs[j] * d[j];
        switch (row.rel) {
            case Rel::Eq: if (lhs != 0) return false; break;
            case Rel::Le: if (lhs > 0) return false; break;
            case Rel::Ge: if (lhs < 0) return false; break;
        }
    }
    Rat gain = 0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) gain += lp.objective[j] * d[j];
    return sense == Sense::Max ? gain > 0 : gain < 0;
}

}  // namespace boole
