#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boole/instance.hpp"

namespace boole {

// Zero-one data matrix; each row stored as a column mask.
struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> row_masks;
};

// Comma- or whitespace-delimited 0/1 rows; optionally skips a header line.
BinaryMatrix load_matrix(const std::string& text, bool skip_header = false);

// Empirical instance: b_S = (rows with a 1 in every column of S) / rows.
// Always feasible, since the rows themselves form a realization.
BooleInstance empirical_b(const BinaryMatrix& d, const SetFamily& family);

// Frequency of a single column set.
Rat support(const BinaryMatrix& d, SubsetMask s);

// Level-wise frequent-set discovery: all S with |S| <= max_size and
// b_S >= eps. Size-(k+1) candidates are joined from frequent size-k sets
// sharing a (k-1)-prefix, in lexicographic order. The result may be empty;
// instance construction downstream rejects empty families.
SetFamily apriori(const BinaryMatrix& d, const Rat& eps, int max_size);

}  // namespace boole
