#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nuindex/errors.hpp"

namespace nuindex {

/// Citation counts and all derived index values. 64-bit throughout; sums of
/// realistic citation data never approach the limit.
using Count = std::int64_t;

/// One author's per-paper citation counts, held in descending order.
///
/// Invariants: every entry is >= 0 and counts[i] >= counts[i+1]. The number
/// of entries is the paper count m; the empty vector (m = 0) is valid and
/// every index of it is 0.
class CitationVector {
public:
    CitationVector() = default;

    /// Accepts counts in any order, sorts them descending.
    /// Throws NegativeCitationError if any entry is < 0.
    explicit CitationVector(std::vector<Count> raw);

    const std::vector<Count>& counts() const noexcept { return counts_; }
    std::size_t m() const noexcept { return counts_.size(); }
    bool empty() const noexcept { return counts_.empty(); }

    /// Top citation x_1, or 0 for the empty vector.
    Count top() const noexcept { return counts_.empty() ? 0 : counts_.front(); }

    Count operator[](std::size_t i) const { return counts_[i]; }

    bool operator==(const CitationVector&) const = default;

private:
    std::vector<Count> counts_;
};

/// Convenience alias for the validating constructor.
inline CitationVector make_citation_vector(std::vector<Count> raw) {
    return CitationVector(std::move(raw));
}

/// Running sums S_1..S_m of the descending counts; S_m is the total
/// citation count n. Empty vector yields an empty list.
std::vector<Count> prefix_sums(const CitationVector& x);

/// Total citations S_m (0 for the empty vector).
Count total_citations(const CitationVector& x);

/// S_k under the extension convention: S_0 = 0 and S_k = S_m for k >= m.
Count extended_prefix_sum(const CitationVector& x, Count k);

/// Number of papers with at least j citations. Non-increasing in j.
/// Throws InvalidThresholdError if j < 1.
std::size_t m_star(const CitationVector& x, Count j);

}  // namespace nuindex
