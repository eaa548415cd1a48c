#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuindex/dataset.hpp"
#include "nuindex/indexes.hpp"

namespace nuindex {

/// Per-author index values with m-normalized variants. When m = 0 the
/// normalized values are reported as 0 and normalized_defined is false.
struct AuthorIndexRow {
    std::string author_id;
    Count m = 0;
    Count h = 0;
    Count nu = 0;
    Count nu_bar = 0;
    Count g = 0;
    Count g_star = 0;
    double h_over_m = 0.0;
    double nu_over_m = 0.0;
    double nu_bar_over_m = 0.0;
    double g_over_m = 0.0;
    double g_star_over_m = 0.0;
    bool normalized_defined = false;
};

enum class CorrelationMethod { pearson, spearman };

/// Pairwise correlations over the columns h, nu, nu_bar, g, g_star, m.
/// Entries whose column has zero variance are undefined: value NaN,
/// defined flag cleared. Row-major storage.
struct CorrelationMatrix {
    std::vector<std::string> labels;
    std::vector<double> values;
    std::vector<std::uint8_t> defined;
    std::size_t rows_used = 0;
    std::size_t rows_excluded = 0;  // m = 0 rows, excluded and flagged

    std::size_t order() const noexcept { return labels.size(); }
    double at(std::size_t r, std::size_t c) const { return values[r * labels.size() + c]; }
    bool is_defined(std::size_t r, std::size_t c) const {
        return defined[r * labels.size() + c] != 0;
    }
};

/// One AuthorIndexRow per dataset record, in record order.
std::vector<AuthorIndexRow> compute_rows(const Dataset& dataset);

/// Correlation matrix over >= 2 usable (m > 0) rows; otherwise throws
/// InsufficientDataError. Spearman uses average ranks for ties.
CorrelationMatrix correlation_matrix(const std::vector<AuthorIndexRow>& rows,
                                     CorrelationMethod method);

/// Samples nu_alpha over an ascending grid and attaches nu_infinity.
/// Throws InvalidAlphaError on a negative, non-finite or unsorted grid.
AlphaCurve alpha_curve(const CitationVector& x, const std::vector<double>& alphas);

/// Stable ascending sort by h/m with ties broken by author_id. Returns a
/// permutation of the input rows.
std::vector<AuthorIndexRow> rank_rows(std::vector<AuthorIndexRow> rows);

}  // namespace nuindex
