#pragma once

#include <cstdint>
#include <vector>

#include "nuindex/citation_vector.hpp"

namespace nuindex {

/// All index values for one citation vector, plus the paper count m and the
/// total citation count S_m.
///
/// The values always satisfy h <= nu <= g_star, h <= nu_bar <= g <= g_star,
/// h <= m, g <= m, and nu_bar = min(nu, m).
struct IndexReport {
    Count h = 0;
    Count g = 0;
    Count g_star = 0;
    Count nu = 0;
    Count nu_bar = 0;
    Count m = 0;
    Count total_citations = 0;

    bool operator==(const IndexReport&) const = default;
};

/// Sampled nu_alpha values over an ascending alpha grid, with the alpha->inf
/// limit attached. values is non-decreasing along alphas and bounded by the
/// top citation x_1.
struct AlphaCurve {
    std::vector<double> alphas;
    std::vector<Count> values;
    Count nu_infinity = 0;
};

/// Largest h such that at least h papers have >= h citations each.
/// 0 when no such h exists (zero or empty vector). Always <= m.
Count h_index(const CitationVector& x);

/// Largest k <= m whose top-k citation sum S_k is >= k^2. 0 for the zero
/// vector. Sensitive to appended zero-citation papers.
Count g_index(const CitationVector& x);

/// g computed as if the vector were padded with unlimited zero-citation
/// papers (S_k = S_m beyond m). Equals floor(sqrt(S_m)) when S_m >= m^2,
/// otherwise equals g. Insensitive to appended zeros; always >= g.
Count g_star_index(const CitationVector& x);

/// Largest j such that the papers with >= j citations each hold >= j^2
/// citations in total. May exceed m. Insensitive to appended zeros.
Count nu_index(const CitationVector& x);

/// nu capped at the paper count: min(nu, m).
Count nu_bar_index(const CitationVector& x);

/// Member of the parametric family: largest j with
///   sum_{x_i >= j} (x_i / j)^alpha >= j.
/// alpha = 0 gives h, alpha = 1 gives nu; non-decreasing in alpha.
/// Integer alpha is evaluated in exact integer arithmetic, fractional alpha
/// in double precision with a logarithmic overflow short-circuit.
/// Throws InvalidAlphaError for negative or non-finite alpha.
Count nu_alpha_index(const CitationVector& x, double alpha);

/// Limit of nu_alpha as alpha -> inf: x_1 - 1 if the top citation's
/// multiplicity is < x_1, else x_1. 0 for the zero or empty vector.
Count nu_infinity_index(const CitationVector& x);

/// All five indexes plus m and S_m.
IndexReport full_report(const CitationVector& x);

/// Exact floor(sqrt(n)) in integer arithmetic.
std::uint64_t integer_sqrt(std::uint64_t n);

}  // namespace nuindex
