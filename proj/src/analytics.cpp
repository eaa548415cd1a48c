#include "nuindex/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace nuindex {

namespace {

constexpr std::size_t kColumns = 6;
const char* const kLabels[kColumns] = {"h", "nu", "nu.bar", "g", "g.star", "m"};

std::vector<double> column_values(const std::vector<const AuthorIndexRow*>& rows, std::size_t col) {
    std::vector<double> values;
    values.reserve(rows.size());
    for (const auto* row : rows) {
        switch (col) {
            case 0: values.push_back(static_cast<double>(row->h)); break;
            case 1: values.push_back(static_cast<double>(row->nu)); break;
            case 2: values.push_back(static_cast<double>(row->nu_bar)); break;
            case 3: values.push_back(static_cast<double>(row->g)); break;
            case 4: values.push_back(static_cast<double>(row->g_star)); break;
            default: values.push_back(static_cast<double>(row->m)); break;
        }
    }
    return values;
}

// Average ranks (1-based) with ties sharing the mean of their rank range.
std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    const double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

}  // namespace

std::vector<AuthorIndexRow> compute_rows(const Dataset& dataset) {
    std::vector<AuthorIndexRow> rows;
    rows.reserve(dataset.records.size());
    for (const auto& record : dataset.records) {
        const CitationVector x(record.citations);
        const IndexReport report = full_report(x);

        AuthorIndexRow row;
        row.author_id = record.author_id;
        row.m = report.m;
        row.h = report.h;
        row.nu = report.nu;
        row.nu_bar = report.nu_bar;
        row.g = report.g;
        row.g_star = report.g_star;
        if (report.m > 0) {
            const double m = static_cast<double>(report.m);
            row.h_over_m = static_cast<double>(report.h) / m;
            row.nu_over_m = static_cast<double>(report.nu) / m;
            row.nu_bar_over_m = static_cast<double>(report.nu_bar) / m;
            row.g_over_m = static_cast<double>(report.g) / m;
            row.g_star_over_m = static_cast<double>(report.g_star) / m;
            row.normalized_defined = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CorrelationMatrix correlation_matrix(const std::vector<AuthorIndexRow>& rows,
                                     CorrelationMethod method) {
    std::vector<const AuthorIndexRow*> usable;
    usable.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.m > 0) usable.push_back(&row);
    }

    CorrelationMatrix matrix;
    matrix.rows_used = usable.size();
    matrix.rows_excluded = rows.size() - usable.size();
    if (usable.size() < 2) {
        throw InsufficientDataError("correlation needs at least 2 authors with papers, got " +
                                    std::to_string(usable.size()));
    }

    matrix.labels.assign(kLabels, kLabels + kColumns);
    matrix.values.assign(kColumns * kColumns, std::numeric_limits<double>::quiet_NaN());
    matrix.defined.assign(kColumns * kColumns, 0);

    std::vector<std::vector<double>> columns(kColumns);
    std::vector<bool> has_variance(kColumns);
    for (std::size_t col = 0; col < kColumns; ++col) {
        columns[col] = column_values(usable, col);
        if (method == CorrelationMethod::spearman) columns[col] = average_ranks(columns[col]);
        const auto [lo, hi] = std::minmax_element(columns[col].begin(), columns[col].end());
        has_variance[col] = *lo != *hi;
    }

    for (std::size_t r = 0; r < kColumns; ++r) {
        for (std::size_t c = r; c < kColumns; ++c) {
            if (!has_variance[r] || !has_variance[c]) continue;  // undefined, stays flagged
            const double value = r == c ? 1.0 : pearson(columns[r], columns[c]);
            matrix.values[r * kColumns + c] = value;
            matrix.values[c * kColumns + r] = value;
            matrix.defined[r * kColumns + c] = 1;
            matrix.defined[c * kColumns + r] = 1;
        }
    }
    return matrix;
}

AlphaCurve alpha_curve(const CitationVector& x, const std::vector<double>& alphas) {
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!std::isfinite(alphas[i]) || alphas[i] < 0.0) {
            throw InvalidAlphaError("alpha grid entries must be finite and >= 0");
        }
        if (i > 0 && alphas[i] < alphas[i - 1]) {
            throw InvalidAlphaError("alpha grid must be sorted ascending");
        }
    }

    AlphaCurve curve;
    curve.alphas = alphas;
    curve.values.reserve(alphas.size());
    for (double alpha : alphas) curve.values.push_back(nu_alpha_index(x, alpha));
    curve.nu_infinity = nu_infinity_index(x);
    return curve;
}

std::vector<AuthorIndexRow> rank_rows(std::vector<AuthorIndexRow> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const AuthorIndexRow& a, const AuthorIndexRow& b) {
        if (a.h_over_m != b.h_over_m) return a.h_over_m < b.h_over_m;
        return a.author_id < b.author_id;
    });
    return rows;
}

}  // namespace nuindex
