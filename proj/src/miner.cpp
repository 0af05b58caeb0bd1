#include "boole/miner.hpp"

#include <algorithm>
#include <sstream>

#include "boole/errors.hpp"

namespace boole {

BinaryMatrix load_matrix(const std::string& text, bool skip_header) {
    BinaryMatrix d;
    std::istringstream lines(text);
    std::string line;
    bool skipped = !skip_header;
    while (std::getline(lines, line)) {
        if (!skipped) {
            skipped = true;
            continue;
        }
        for (auto& c : line) {
            if (c == ',' || c == '\t' || c == '\r') c = ' ';
        }
        std::istringstream cells(line);
        std::vector<int> row;
        std::string cell;
        while (cells >> cell) {
            if (cell == "0") {
                row.push_back(0);
            } else if (cell == "1") {
                row.push_back(1);
            } else {
                throw ParseError("matrix entry \"" + cell + "\" is not 0 or 1");
            }
        }
        if (row.empty()) continue;
        if (d.cols == 0) {
            d.cols = static_cast<int>(row.size());
            if (d.cols > kGroundSetCap) {
                throw DomainError("matrix has more than " +
                                  std::to_string(kGroundSetCap) + " columns");
            }
        } else if (static_cast<int>(row.size()) != d.cols) {
            throw ParseError("ragged matrix row");
        }
        std::uint32_t mask = 0;
        for (int j = 0; j < d.cols; ++j) {
            if (row[static_cast<std::size_t>(j)]) mask |= std::uint32_t{1} << j;
        }
        d.row_masks.push_back(mask);
        ++d.rows;
    }
    if (d.rows < 1) throw DomainError("matrix has no rows");
    return d;
}

Rat support(const BinaryMatrix& d, SubsetMask s) {
    long count = 0;
    for (const auto row : d.row_masks) {
        if ((row & s) == s) ++count;
    }
    return make_rat(count, static_cast<unsigned long>(d.rows));
}

BooleInstance empirical_b(const BinaryMatrix& d, const SetFamily& family) {
    validate_family(family);
    if (family.n != d.cols) {
        throw DomainError("family ground set does not match matrix columns");
    }
    BooleInstance inst;
    inst.family = family;
    for (const SubsetMask s : family.members) inst.b.push_back(support(d, s));
    return inst;
}

namespace {

// Lexicographic order on the sorted element lists, the join order of the
// level-wise search.
bool lex_less(SubsetMask a, SubsetMask b) {
    return elements_from_mask(a) < elements_from_mask(b);
}

}  // namespace

SetFamily apriori(const BinaryMatrix& d, const Rat& eps, int max_size) {
    if (eps <= 0 || eps > 1) throw DomainError("eps must lie in (0, 1]");
    if (max_size < 0) throw DomainError("max_size must be nonnegative");
    SetFamily family;
    family.n = d.cols;

    std::vector<SubsetMask> level;
    for (int j = 0; j < d.cols && max_size >= 1; ++j) {
        const SubsetMask s = SubsetMask{1} << j;
        if (support(d, s) >= eps) level.push_back(s);
    }
    family.members = level;

    for (int k = 1; k < max_size && !level.empty(); ++k) {
        std::vector<SubsetMask> next;
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (std::size_t j = i + 1; j < level.size(); ++j) {
                // Join two k-sets sharing a (k-1)-prefix.
                const auto a = elements_from_mask(level[i]);
                const auto b = elements_from_mask(level[j]);
                if (!std::equal(a.begin(), a.end() - 1, b.begin())) continue;
                const SubsetMask candidate = level[i] | level[j];
                // Downward closure: every k-subset must be frequent.
                bool all_frequent = true;
                for (int e = 0; e < d.cols && all_frequent; ++e) {
                    const SubsetMask bit = SubsetMask{1} << e;
                    if ((candidate & bit) == 0) continue;
                    const SubsetMask sub = candidate & ~bit;
                    if (std::find(level.begin(), level.end(), sub) == level.end()) {
                        all_frequent = false;
                    }
                }
                if (all_frequent && support(d, candidate) >= eps) {
                    next.push_back(candidate);
                }
            }
        }
        std::sort(next.begin(), next.end(), lex_less);
        next.erase(std::unique(next.begin(), next.end()), next.end());
        family.members.insert(family.members.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return family;
}

}  // namespace boole
