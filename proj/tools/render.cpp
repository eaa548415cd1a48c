#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace nuindex::cli {

namespace {

std::string pad_left(const std::string& text, std::size_t width) {
    return text.size() >= width ? text : std::string(width - text.size(), ' ') + text;
}

std::string pad_right(const std::string& text, std::size_t width) {
    return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
}

nlohmann::ordered_json row_to_json(const AuthorIndexRow& row) {
    nlohmann::ordered_json object;
    object["author_id"] = row.author_id;
    object["m"] = row.m;
    object["h"] = row.h;
    object["nu"] = row.nu;
    object["nu_bar"] = row.nu_bar;
    object["g"] = row.g;
    object["g_star"] = row.g_star;
    if (row.normalized_defined) {
        object["h_m"] = row.h_over_m;
        object["nu_m"] = row.nu_over_m;
        object["nu_bar_m"] = row.nu_bar_over_m;
        object["g_m"] = row.g_over_m;
        object["g_star_m"] = row.g_star_over_m;
    } else {
        object["normalized_defined"] = false;
    }
    return object;
}

}  // namespace

std::string format_fixed(double value, int decimals) {
    if (std::isnan(value)) return "NA";
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

std::string render_index_text(const CitationVector& x, const IndexReport& report) {
    std::ostringstream out;
    out << "x = (";
    for (Count c : x.counts()) out << ' ' << c;
    out << " );\n";
    out << "h = " << report.h << " nu.bar = " << report.nu_bar << " nu = " << report.nu
        << " g = " << report.g << " g.star = " << report.g_star << "\n";
    return out.str();
}

std::string render_index_json(const CitationVector& x, const IndexReport& report) {
    nlohmann::ordered_json object;
    object["x"] = x.counts();
    object["m"] = report.m;
    object["total_citations"] = report.total_citations;
    object["h"] = report.h;
    object["nu_bar"] = report.nu_bar;
    object["nu"] = report.nu;
    object["g"] = report.g;
    object["g_star"] = report.g_star;
    return object.dump() + "\n";
}

std::string render_alpha_csv(const AlphaCurve& curve) {
    std::ostringstream out;
    out << "# nu_infinity = " << curve.nu_infinity << "\n";
    out << "alpha,nu_alpha\n";
    for (std::size_t i = 0; i < curve.alphas.size(); ++i) {
        out << format_fixed(curve.alphas[i]) << ',' << curve.values[i] << "\n";
    }
    return out.str();
}

std::string render_rows_csv(const std::vector<AuthorIndexRow>& rows) {
    std::ostringstream out;
    out << "author_id,m,h,nu,nu_bar,g,g_star,h_m,nu_m,nu_bar_m,g_m,g_star_m,flags\n";
    for (const auto& row : rows) {
        out << row.author_id << ',' << row.m << ',' << row.h << ',' << row.nu << ',' << row.nu_bar
            << ',' << row.g << ',' << row.g_star << ',' << format_fixed(row.h_over_m) << ','
            << format_fixed(row.nu_over_m) << ',' << format_fixed(row.nu_bar_over_m) << ','
            << format_fixed(row.g_over_m) << ',' << format_fixed(row.g_star_over_m) << ','
            << (row.normalized_defined ? "" : "m=0") << "\n";
    }
    return out.str();
}

std::string render_rows_json(const std::vector<AuthorIndexRow>& rows) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const auto& row : rows) array.push_back(row_to_json(row));
    return array.dump() + "\n";
}

std::string render_summary(const DatasetSummary& summary) {
    std::ostringstream out;
    out << "# summary: authors=" << summary.authors << " papers=" << summary.papers
        << " citations=" << summary.citations << "\n";
    return out.str();
}

std::string render_correlation_text(const CorrelationMatrix& matrix, CorrelationMethod method) {
    constexpr std::size_t kLabelWidth = 8;
    constexpr std::size_t kCellWidth = 9;

    std::ostringstream out;
    out << "# method=" << (method == CorrelationMethod::pearson ? "pearson" : "spearman")
        << " rows_used=" << matrix.rows_used << " rows_excluded=" << matrix.rows_excluded << "\n";
    out << pad_right("index", kLabelWidth);
    for (const auto& label : matrix.labels) out << pad_left(label, kCellWidth);
    out << "\n";
    for (std::size_t r = 0; r < matrix.order(); ++r) {
        out << pad_right(matrix.labels[r], kLabelWidth);
        for (std::size_t c = 0; c < matrix.order(); ++c) {
            out << pad_left(matrix.is_defined(r, c) ? format_fixed(matrix.at(r, c)) : "NA",
                            kCellWidth);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_ranking_csv(const std::vector<AuthorIndexRow>& ranked) {
    std::ostringstream out;
    out << "rank,author_id,m,h_m,nu_m,nu_bar_m,g_m,g_star_m\n";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto& row = ranked[i];
        out << (i + 1) << ',' << row.author_id << ',' << row.m << ',' << format_fixed(row.h_over_m)
            << ',' << format_fixed(row.nu_over_m) << ',' << format_fixed(row.nu_bar_over_m) << ','
            << format_fixed(row.g_over_m) << ',' << format_fixed(row.g_star_over_m) << "\n";
    }
    return out.str();
}

}  // namespace nuindex::cli
