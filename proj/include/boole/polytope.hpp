#pragma once

#include <string>
#include <vector>

#include "boole/instance.hpp"
#include "boole/rat.hpp"

namespace boole {

// Polytope in vertex representation. Facet enumeration is deliberately out of
// scope; membership queries go through an exact LP over the vertex hull.
struct VPolytope {
    std::vector<std::string> coord_labels;
    std::vector<std::vector<Rat>> vertices;
};

struct VertexCounts {
    long rho = 0;    // correlation polytope
    long sigma = 0;  // union polytope
};

// Set-inclusion indicator of a generating set T: one 0/1 entry [S <= T] per
// family member S, in family order.
std::vector<Rat> indicator_vector(const SetFamily& family, SubsetMask t);

// Vertices generated by the set-inclusion indicators zeta(F,T)_S = [S <= T]:
//   venn:        (zeta(F,T), unit vector of T), one vertex per T <= [n]
//   correlation: zeta(F,T), deduplicated
//   union:       (zeta(F,T), [T = {}]), deduplicated
// Coordinates are b_S in family order, then x_{} (union), then x_T in
// increasing mask order (venn). Vertices are listed by first generating T.
VPolytope venn_vertices(const SetFamily& family);
VPolytope correlation_vertices(const SetFamily& family);
VPolytope union_vertices(const SetFamily& family);

// Vertex counts without enumeration: the family partitions 2^[n] by the
// signatures T -> ([S <= T] : S in F); rho counts the cells, and sigma adds
// one exactly when some nonempty T shares the signature of the empty set
// (equivalently, some singleton is missing from F).
VertexCounts vertex_count_formula(const SetFamily& family);

// Rank of the vertex differences from the first vertex.
int affine_dim(const VPolytope& p);

// Exact convex-hull membership via LP.
bool hull_membership(const VPolytope& p, const std::vector<Rat>& point);

// Header of coordinate labels, then one "0"/"1" line per vertex.
std::string vertex_table(const VPolytope& p);

}  // namespace boole
