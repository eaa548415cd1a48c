#pragma once

#include "nuindex/citation_vector.hpp"

namespace nuindex {

/// Two citation vectors zero-padded to a common length. Padding never
/// mutates the inputs; both members stay valid descending vectors.
struct PaddedPair {
    CitationVector left;
    CitationVector right;
};

/// Pads the shorter of x, y with zero-citation entries so both have
/// max(m_x, m_y) papers.
PaddedPair pad_pair(const CitationVector& x, const CitationVector& y);

/// Component-wise dominance: true iff x is dominated by y after
/// zero-padding to equal length (x_i <= y_i for all i).
bool dominates(const CitationVector& x, const CitationVector& y);

/// Weak majorization: true iff every prefix sum of x is <= the
/// corresponding prefix sum of y after zero-padding.
bool weakly_majorized(const CitationVector& x, const CitationVector& y);

}  // namespace nuindex
