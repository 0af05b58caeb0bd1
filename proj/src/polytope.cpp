#include "boole/polytope.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "boole/errors.hpp"
#include "boole/linalg.hpp"
#include "boole/lp.hpp"

namespace boole {

std::vector<Rat> indicator_vector(const SetFamily& family, SubsetMask t) {
    std::vector<Rat> v;
    v.reserve(family.members.size());
    for (const SubsetMask s : family.members) {
        v.emplace_back((s & t) == s ? 1 : 0);
    }
    return v;
}

namespace {

void append_unique(std::vector<std::vector<Rat>>& vertices, std::vector<Rat> v) {
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) {
        vertices.push_back(std::move(v));
    }
}

std::vector<std::string> b_labels(const SetFamily& family) {
    std::vector<std::string> labels;
    for (const SubsetMask s : family.members) labels.push_back("b" + set_label(s));
    return labels;
}

}  // namespace

VPolytope venn_vertices(const SetFamily& family) {
    validate_family(family);
    const std::size_t atoms = std::size_t{1} << family.n;
    VPolytope p;
    p.coord_labels = b_labels(family);
    for (std::size_t mask = 0; mask < atoms; ++mask) {
        p.coord_labels.push_back("x" + set_label(static_cast<SubsetMask>(mask)));
    }
    for (std::size_t t = 0; t < atoms; ++t) {
        std::vector<Rat> v = indicator_vector(family, static_cast<SubsetMask>(t));
        for (std::size_t mask = 0; mask < atoms; ++mask) {
            v.emplace_back(mask == t ? 1 : 0);
        }
        p.vertices.push_back(std::move(v));  // unit parts make every v distinct
    }
    return p;
}

VPolytope correlation_vertices(const SetFamily& family) {
    validate_family(family);
    VPolytope p;
    p.coord_labels = b_labels(family);
    const std::size_t atoms = std::size_t{1} << family.n;
    for (std::size_t t = 0; t < atoms; ++t) {
        append_unique(p.vertices, indicator_vector(family, static_cast<SubsetMask>(t)));
    }
    return p;
}

VPolytope union_vertices(const SetFamily& family) {
    validate_family(family);
    VPolytope p;
    p.coord_labels = b_labels(family);
    p.coord_labels.push_back("x{}");
    const std::size_t atoms = std::size_t{1} << family.n;
    for (std::size_t t = 0; t < atoms; ++t) {
        std::vector<Rat> v = indicator_vector(family, static_cast<SubsetMask>(t));
        v.emplace_back(t == 0 ? 1 : 0);
        append_unique(p.vertices, std::move(v));
    }
    return p;
}

VertexCounts vertex_count_formula(const SetFamily& family) {
    validate_family(family);
    const std::size_t atoms = std::size_t{1} << family.n;
    std::vector<std::vector<bool>> signatures;
    bool empty_cell_shared = false;
    std::vector<bool> empty_signature(family.members.size(), false);
    for (std::size_t t = 0; t < atoms; ++t) {
        std::vector<bool> sig;
        sig.reserve(family.members.size());
        for (const SubsetMask s : family.members) {
            sig.push_back((s & static_cast<SubsetMask>(t)) == s);
        }
        if (t != 0 && sig == empty_signature) empty_cell_shared = true;
        if (std::find(signatures.begin(), signatures.end(), sig) == signatures.end()) {
            signatures.push_back(std::move(sig));
        }
    }
    VertexCounts counts;
    counts.rho = static_cast<long>(signatures.size());
    counts.sigma = counts.rho + (empty_cell_shared ? 1 : 0);
    return counts;
}

int affine_dim(const VPolytope& p) {
    if (p.vertices.empty()) {
        throw std::invalid_argument("affine_dim: empty vertex list");
    }
    std::vector<std::vector<Rat>> diffs;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        std::vector<Rat> d(p.vertices[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) {
            d[j] = p.vertices[i][j] - p.vertices[0][j];
        }
        diffs.push_back(std::move(d));
    }
    return static_cast<int>(matrix_rank(std::move(diffs)));
}

bool hull_membership(const VPolytope& p, const std::vector<Rat>& point) {
    if (point.size() != p.coord_labels.size()) {
        throw std::invalid_argument("hull_membership: point dimension mismatch");
    }
    // point = sum_i lambda_i vertex_i with lambda a convex combination
    LinearProgram lp = LinearProgram::with_vars(p.vertices.size());
    for (std::size_t d = 0; d < point.size(); ++d) {
        auto& row = lp.add_row(Rel::Eq, point[d]);
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            row.coeffs[i] = p.vertices[i][d];
        }
    }
    auto& normalization = lp.add_row(Rel::Eq, Rat(1));
    for (auto& c : normalization.coeffs) c = 1;
    const LpOutcome outcome = lp_solve(lp, Sense::Min);
    return as_optimal(outcome) != nullptr;
}

std::string vertex_table(const VPolytope& p) {
    std::string out;
    for (std::size_t j = 0; j < p.coord_labels.size(); ++j) {
        if (j > 0) out += " ";
        out += p.coord_labels[j];
    }
    out += "\n";
    for (const auto& v : p.vertices) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j > 0) out += " ";
            out += rat_str(v[j]);
        }
        out += "\n";
    }
    return out;
}

}  // namespace boole
