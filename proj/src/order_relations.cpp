#include "nuindex/order_relations.hpp"

#include <algorithm>

namespace nuindex {

PaddedPair pad_pair(const CitationVector& x, const CitationVector& y) {
    const std::size_t len = std::max(x.m(), y.m());
    std::vector<Count> left = x.counts();
    std::vector<Count> right = y.counts();
    left.resize(len, 0);   // appending zeros keeps the descending order
    right.resize(len, 0);
    return PaddedPair{CitationVector(std::move(left)), CitationVector(std::move(right))};
}

bool dominates(const CitationVector& x, const CitationVector& y) {
    const std::size_t len = std::max(x.m(), y.m());
    for (std::size_t i = 0; i < len; ++i) {
        const Count xi = i < x.m() ? x[i] : 0;
        const Count yi = i < y.m() ? y[i] : 0;
        if (xi > yi) return false;
    }
    return true;
}

bool weakly_majorized(const CitationVector& x, const CitationVector& y) {
    const std::size_t len = std::max(x.m(), y.m());
    Count sum_x = 0;
    Count sum_y = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sum_x += i < x.m() ? x[i] : 0;
        sum_y += i < y.m() ? y[i] : 0;
        if (sum_x > sum_y) return false;
    }
    return true;
}

}  // namespace nuindex
