#pragma once

#include <string>
#include <vector>

#include "nuindex/analytics.hpp"
#include "nuindex/dataset.hpp"
#include "nuindex/indexes.hpp"

namespace nuindex::cli {

/// Fixed-point formatting used for every real value in text output.
std::string format_fixed(double value, int decimals = 4);

/// The two-line text report:
///   x = ( 12 3 1 );
///   h = 2 nu.bar = 3 nu = 3 g = 3 g.star = 4
std::string render_index_text(const CitationVector& x, const IndexReport& report);

std::string render_index_json(const CitationVector& x, const IndexReport& report);

/// CSV with a leading "# nu_infinity = N" comment and alpha,nu_alpha rows.
std::string render_alpha_csv(const AlphaCurve& curve);

std::string render_rows_csv(const std::vector<AuthorIndexRow>& rows);

std::string render_rows_json(const std::vector<AuthorIndexRow>& rows);

std::string render_summary(const DatasetSummary& summary);

/// Labeled 6x6 matrix, 4-decimal entries, "NA" where undefined.
std::string render_correlation_text(const CorrelationMatrix& matrix, CorrelationMethod method);

/// rank,author_id,m and the five normalized columns, in ranked order.
std::string render_ranking_csv(const std::vector<AuthorIndexRow>& ranked);

}  // namespace nuindex::cli
