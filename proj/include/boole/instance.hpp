#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "boole/rat.hpp"

namespace boole {

// Subsets of the ground set [n] as bitmasks: bit i-1 <=> element i.
using SubsetMask = std::uint32_t;

// Global ground-set cap. The atom LP has 2^n variables, so this is the
// documented limit for full enumeration.
inline constexpr int kGroundSetCap = 20;

SubsetMask mask_from_elements(const std::vector<int>& elements, int n);
std::vector<int> elements_from_mask(SubsetMask mask);
std::string set_label(SubsetMask mask);  // "{1,3}", "{}" for the empty set
int mask_size(SubsetMask mask);

// Ordered list of distinct nonempty subsets of [n]. Instances require a
// nonempty list (mining may legitimately discover an empty family; the
// instance boundary is where nonemptiness is enforced).
struct SetFamily {
    int n = 0;
    std::vector<SubsetMask> members;

    bool contains(SubsetMask mask) const;
    int index_of(SubsetMask mask) const;  // -1 when absent
    bool has_all_singletons() const;
    bool is_complete() const;  // members = 2^[n] \ {{}}
};

struct BooleInstance {
    SetFamily family;
    std::vector<Rat> b;  // aligned with family.members

    const Rat& b_of(SubsetMask mask) const;
};

// Sparse atom distribution; absent masks carry weight zero.
struct AtomDistribution {
    int n = 0;
    std::map<SubsetMask, Rat> weights;

    Rat weight(SubsetMask mask) const;
};

struct Interval {
    Rat lo;
    Rat hi;
};

// Validation helpers. validate_* throw DomainError on violations.
void validate_family(const SetFamily& family, bool require_nonempty = true);
void validate_instance(const BooleInstance& inst);
bool is_distribution(const AtomDistribution& x);

// Instance documents: {"n": int, "constraints": [{"set": [int...], "p": "p/q"}...]}.
BooleInstance parse_instance(const std::string& document);
std::string serialize_instance(const BooleInstance& inst);

// Family documents: {"n": int, "sets": [[int...]...]}; instance documents are
// accepted too (their b values are ignored).
SetFamily parse_family(const std::string& document);

// Atom documents: {"n": int, "atoms": [{"set": [int...], "x": "p/q"}...]},
// nonzero atoms only, increasing mask order.
AtomDistribution parse_atoms(const std::string& document);
std::string serialize_atoms(const AtomDistribution& x);

// All pairs (S, T) of family members with S strictly contained in T and
// b_S < b_T; any such pair rules out a realization. Advisory check only.
std::vector<std::pair<SubsetMask, SubsetMask>> check_monotone(const BooleInstance& inst);

// Sum of x_T over supersets T of S.
Rat marginal_of(const AtomDistribution& x, SubsetMask s);

}  // namespace boole
