#include "nuindex/citation_vector.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nuindex {

CitationVector::CitationVector(std::vector<Count> raw) : counts_(std::move(raw)) {
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] < 0) {
            throw NegativeCitationError("negative citation count " + std::to_string(counts_[i]) +
                                        " at position " + std::to_string(i + 1));
        }
    }
    std::sort(counts_.begin(), counts_.end(), std::greater<Count>());
}

std::vector<Count> prefix_sums(const CitationVector& x) {
    std::vector<Count> sums;
    sums.reserve(x.m());
    Count running = 0;
    for (Count c : x.counts()) {
        running += c;
        sums.push_back(running);
    }
    return sums;
}

Count total_citations(const CitationVector& x) {
    return std::accumulate(x.counts().begin(), x.counts().end(), Count{0});
}

Count extended_prefix_sum(const CitationVector& x, Count k) {
    if (k <= 0) return 0;
    const auto& c = x.counts();
    const std::size_t upto = std::min<std::size_t>(static_cast<std::size_t>(k), c.size());
    return std::accumulate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(upto), Count{0});
}

std::size_t m_star(const CitationVector& x, Count j) {
    if (j < 1) {
        throw InvalidThresholdError("threshold must be >= 1, got " + std::to_string(j));
    }
    // counts are descending: the entries >= j form a prefix.
    const auto& c = x.counts();
    auto it = std::upper_bound(c.begin(), c.end(), j, std::greater<Count>());
    return static_cast<std::size_t>(it - c.begin());
}

}  // namespace nuindex
