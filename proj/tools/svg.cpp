#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "render.hpp"

namespace nuindex::cli {

namespace {

constexpr double kPanelWidth = 800.0;
constexpr double kPanelHeight = 500.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 36.0;
constexpr double kMarginBottom = 48.0;

std::string num(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

void open_svg(std::ostringstream& out, double height) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 " << num(height)
        << "\" width=\"800\" height=\"" << num(height) << "\" font-family=\"monospace\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"" << num(height) << "\" fill=\"white\"/>\n";
}

void draw_frame(std::ostringstream& out, double top, const std::string& title) {
    const double x0 = kMarginLeft;
    const double x1 = kPanelWidth - kMarginRight;
    const double y0 = top + kMarginTop;
    const double y1 = top + kPanelHeight - kMarginBottom;
    out << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(x1 - x0)
        << "\" height=\"" << num(y1 - y0) << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(x0) << "\" y=\"" << num(top + 22.0) << "\" font-size=\"14\">" << title
        << "</text>\n";
}

struct Scale {
    double domain_min = 0.0;
    double domain_max = 1.0;
    double range_min = 0.0;
    double range_max = 1.0;

    double operator()(double v) const {
        return range_min + (v - domain_min) / (domain_max - domain_min) * (range_max - range_min);
    }
};

void draw_y_ticks(std::ostringstream& out, const Scale& y, double x0) {
    for (int k = 0; k <= 4; ++k) {
        const double value = y.domain_min + (y.domain_max - y.domain_min) * k / 4.0;
        const double py = y(value);
        out << "<line x1=\"" << num(x0 - 4.0) << "\" y1=\"" << num(py) << "\" x2=\"" << num(x0)
            << "\" y2=\"" << num(py) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(x0 - 8.0) << "\" y=\"" << num(py + 4.0)
            << "\" font-size=\"11\" text-anchor=\"end\">" << format_fixed(value, 4) << "</text>\n";
    }
}

}  // namespace

std::string svg_alpha_curve(const AlphaCurve& curve, const std::string& title) {
    std::ostringstream out;
    open_svg(out, kPanelHeight);
    draw_frame(out, 0.0, title);

    if (curve.alphas.empty()) {
        out << "<text x=\"400\" y=\"250\" font-size=\"14\" text-anchor=\"middle\">no samples</text>\n";
        out << "</svg>\n";
        return out.str();
    }

    double a_min = curve.alphas.front();
    double a_max = curve.alphas.back();
    if (a_max == a_min) a_max = a_min + 1.0;
    double v_max = static_cast<double>(curve.nu_infinity);
    for (Count v : curve.values) v_max = std::max(v_max, static_cast<double>(v));
    v_max = std::max(v_max, 1.0) * 1.05;  // headroom so flat curves clear the frame

    const Scale x{a_min, a_max, kMarginLeft, kPanelWidth - kMarginRight};
    const Scale y{0.0, v_max, kPanelHeight - kMarginBottom, kMarginTop};

    draw_y_ticks(out, y, kMarginLeft);
    for (int k = 0; k <= 4; ++k) {
        const double value = a_min + (a_max - a_min) * k / 4.0;
        const double px = x(value);
        out << "<line x1=\"" << num(px) << "\" y1=\"" << num(kPanelHeight - kMarginBottom)
            << "\" x2=\"" << num(px) << "\" y2=\"" << num(kPanelHeight - kMarginBottom + 4.0)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(px) << "\" y=\"" << num(kPanelHeight - kMarginBottom + 18.0)
            << "\" font-size=\"11\" text-anchor=\"middle\">" << format_fixed(value, 4)
            << "</text>\n";
    }
    out << "<text x=\"" << num((kMarginLeft + kPanelWidth - kMarginRight) / 2.0) << "\" y=\""
        << num(kPanelHeight - 8.0) << "\" font-size=\"12\" text-anchor=\"middle\">alpha</text>\n";

    // nu_alpha is integer-valued, so the curve is a step function.
    out << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < curve.alphas.size(); ++i) {
        if (i > 0) {
            out << ' ' << num(x(curve.alphas[i])) << ',' << num(y(static_cast<double>(curve.values[i - 1])));
        }
        if (i > 0) out << ' ';
        out << num(x(curve.alphas[i])) << ',' << num(y(static_cast<double>(curve.values[i])));
    }
    out << "\"/>\n";
    for (std::size_t i = 0; i < curve.alphas.size(); ++i) {
        out << "<circle cx=\"" << num(x(curve.alphas[i])) << "\" cy=\""
            << num(y(static_cast<double>(curve.values[i]))) << "\" r=\"2.5\" fill=\"#d62728\"/>\n";
    }

    const double py_inf = y(static_cast<double>(curve.nu_infinity));
    out << "<line x1=\"" << num(kMarginLeft) << "\" y1=\"" << num(py_inf) << "\" x2=\""
        << num(kPanelWidth - kMarginRight) << "\" y2=\"" << num(py_inf)
        << "\" stroke=\"#555555\" stroke-dasharray=\"6,4\"/>\n";
    out << "<text x=\"" << num(kPanelWidth - kMarginRight - 4.0) << "\" y=\"" << num(py_inf - 5.0)
        << "\" font-size=\"11\" text-anchor=\"end\">nu_inf = " << curve.nu_infinity << "</text>\n";

    out << "</svg>\n";
    return out.str();
}

namespace {

struct Series {
    const char* label;
    const char* color;
    double (*value)(const AuthorIndexRow&);
};

void draw_panel(std::ostringstream& out, const std::vector<AuthorIndexRow>& ranked, double top,
                const std::string& title, const Series (&series)[3]) {
    draw_frame(out, top, title);

    double v_max = 0.0;
    for (const auto& row : ranked) {
        for (const auto& s : series) v_max = std::max(v_max, s.value(row));
    }
    if (v_max <= 0.0) v_max = 1.0;
    v_max *= 1.05;

    const double x0 = kMarginLeft;
    const double x1 = kPanelWidth - kMarginRight;
    const Scale y{0.0, v_max, top + kPanelHeight - kMarginBottom, top + kMarginTop};
    draw_y_ticks(out, y, x0);

    const double n = static_cast<double>(ranked.size());
    for (std::size_t s = 0; s < 3; ++s) {
        out << "<g fill=\"" << series[s].color << "\">\n";
        for (std::size_t i = 0; i < ranked.size(); ++i) {
            const double px = x0 + (static_cast<double>(i) + 0.5) / n * (x1 - x0);
            out << "<circle cx=\"" << num(px) << "\" cy=\"" << num(y(series[s].value(ranked[i])))
                << "\" r=\"3\"/>\n";
        }
        out << "</g>\n";
        const double lx = x1 - 150.0 + static_cast<double>(s) * 50.0;
        out << "<circle cx=\"" << num(lx) << "\" cy=\"" << num(top + 18.0) << "\" r=\"3\" fill=\""
            << series[s].color << "\"/>\n";
        out << "<text x=\"" << num(lx + 6.0) << "\" y=\"" << num(top + 22.0) << "\" font-size=\"11\">"
            << series[s].label << "</text>\n";
    }
    out << "<text x=\"" << num((x0 + x1) / 2.0) << "\" y=\"" << num(top + kPanelHeight - 8.0)
        << "\" font-size=\"12\" text-anchor=\"middle\">authors, ranked by h/m</text>\n";
}

}  // namespace

std::string svg_ranking(const std::vector<AuthorIndexRow>& ranked) {
    std::ostringstream out;
    open_svg(out, 2.0 * kPanelHeight);

    if (ranked.empty()) {
        draw_frame(out, 0.0, "normalized index triplets");
        out << "<text x=\"400\" y=\"250\" font-size=\"14\" text-anchor=\"middle\">no data</text>\n";
        out << "</svg>\n";
        return out.str();
    }

    static const Series upper[3] = {
        {"h/m", "#1f77b4", [](const AuthorIndexRow& r) { return r.h_over_m; }},
        {"nu/m", "#ff7f0e", [](const AuthorIndexRow& r) { return r.nu_over_m; }},
        {"g*/m", "#2ca02c", [](const AuthorIndexRow& r) { return r.g_star_over_m; }},
    };
    static const Series lower[3] = {
        {"h/m", "#1f77b4", [](const AuthorIndexRow& r) { return r.h_over_m; }},
        {"nu-/m", "#ff7f0e", [](const AuthorIndexRow& r) { return r.nu_bar_over_m; }},
        {"g/m", "#2ca02c", [](const AuthorIndexRow& r) { return r.g_over_m; }},
    };
    draw_panel(out, ranked, 0.0, "h/m, nu/m, g*/m per author", upper);
    draw_panel(out, ranked, kPanelHeight, "h/m, nu.bar/m, g/m per author", lower);

    out << "</svg>\n";
    return out.str();
}

}  // namespace nuindex::cli
