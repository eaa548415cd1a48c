#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nuindex/analytics.hpp"
#include "nuindex/dataset.hpp"
#include "nuindex/indexes.hpp"
#include "render.hpp"
#include "svg.hpp"

namespace {

using namespace nuindex;

std::vector<Count> parse_vector_tokens(const std::vector<std::string>& tokens) {
    std::vector<Count> counts;
    counts.reserve(tokens.size());
    std::size_t field = 0;
    for (const auto& token : tokens) {
        ++field;
        std::string cleaned = token;
        std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
        std::istringstream pieces(cleaned);
        std::string piece;
        while (pieces >> piece) counts.push_back(parse_citation_token(piece, 0, field));
    }
    return counts;
}

std::vector<Count> read_vector_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
    std::vector<std::string> tokens;
    std::string token;
    while (in >> token) tokens.push_back(token);
    return parse_vector_tokens(tokens);
}

// Grid syntax "start:stop:step", endpoints inclusive; a final overshooting
// step is clamped to stop.
std::vector<double> parse_grid(const std::string& spec) {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    char sep1 = 0;
    char sep2 = 0;
    std::istringstream in(spec);
    if (!(in >> start >> sep1 >> stop >> sep2 >> step) || sep1 != ':' || sep2 != ':' ||
        !in.eof()) {
        throw InvalidAlphaError("grid must be start:stop:step, got '" + spec + "'");
    }
    if (!(step > 0.0) || stop < start) {
        throw InvalidAlphaError("grid needs step > 0 and stop >= start, got '" + spec + "'");
    }
    if ((stop - start) / step > 1e6) {
        throw InvalidAlphaError("grid '" + spec + "' has more than 1e6 samples");
    }
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double value = start + static_cast<double>(k) * step;
        if (value > stop) {
            if (grid.empty() || grid.back() < stop) grid.push_back(stop);
            break;
        }
        grid.push_back(value);
        if (value == stop) break;
    }
    return grid;
}

std::vector<double> parse_alpha_list(const std::string& spec) {
    std::string cleaned = spec;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<double> alphas;
    double value = 0.0;
    while (in >> value) alphas.push_back(value);
    if (!in.eof()) throw InvalidAlphaError("could not parse alpha list '" + spec + "'");
    if (alphas.empty()) throw InvalidAlphaError("empty alpha list");
    return alphas;
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + out_path + "'", 0);
    out << content;
}

DatasetFormat parse_format(const std::string& name) {
    return name == "jsonl" ? DatasetFormat::jsonl : DatasetFormat::csv;
}

struct DatasetArgs {
    std::string path;
    std::string format = "csv";
    CsvMapping mapping;

    Dataset load() const { return read_dataset(path, parse_format(format), mapping); }
};

void add_dataset_options(CLI::App* cmd, DatasetArgs& args) {
    cmd->add_option("path", args.path, "dataset file")->required();
    cmd->add_option("--format", args.format, "input format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    cmd->add_option("--id-col", args.mapping.id_column, "0-based author id column (csv)");
    cmd->add_option("--cit-col", args.mapping.citations_start,
                    "0-based first citation column (csv)");
    cmd->add_option_function<std::string>(
        "--delimiter",
        [&args](const std::string& value) {
            if (value.size() != 1) throw CLI::ValidationError("--delimiter must be one character");
            args.mapping.delimiter = value[0];
        },
        "csv field delimiter (default ';')");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"citation index toolkit: h, g, g*, nu, nu.bar and the nu_alpha family"};
    app.require_subcommand(1);

    // index
    auto* cmd_index = app.add_subcommand("index", "compute all indexes for one citation vector");
    std::vector<std::string> index_tokens;
    std::string index_file;
    bool index_json = false;
    std::string index_out;
    cmd_index->add_option("counts", index_tokens, "citation counts");
    cmd_index->add_option("--file", index_file, "read counts from file")->excludes("counts");
    cmd_index->add_flag("--json", index_json, "machine-readable output");
    cmd_index->add_option("--out", index_out, "write to file instead of stdout");

    // alpha
    auto* cmd_alpha = app.add_subcommand("alpha", "sample the nu_alpha family over an alpha grid");
    std::vector<std::string> alpha_tokens;
    std::string alpha_grid;
    std::string alpha_list;
    bool alpha_svg = false;
    std::string alpha_out;
    cmd_alpha->add_option("counts", alpha_tokens, "citation counts")->required();
    auto* grid_opt = cmd_alpha->add_option("--grid", alpha_grid, "alpha grid start:stop:step");
    auto* list_opt = cmd_alpha->add_option("--alphas", alpha_list, "explicit ascending alpha list");
    grid_opt->excludes(list_opt);
    cmd_alpha->add_flag("--svg", alpha_svg, "emit an SVG step plot instead of CSV");
    cmd_alpha->add_option("--out", alpha_out, "write to file instead of stdout");

    // dataset
    auto* cmd_dataset = app.add_subcommand("dataset", "per-author index table for a dataset file");
    DatasetArgs dataset_args;
    bool dataset_json = false;
    std::string dataset_out;
    add_dataset_options(cmd_dataset, dataset_args);
    cmd_dataset->add_flag("--json", dataset_json, "JSON table instead of CSV");
    cmd_dataset->add_option("--out", dataset_out, "write the table to a file");

    // correlate
    auto* cmd_correlate = app.add_subcommand("correlate", "pairwise index correlation matrix");
    DatasetArgs correlate_args;
    std::string correlate_method = "pearson";
    std::string correlate_out;
    add_dataset_options(cmd_correlate, correlate_args);
    cmd_correlate->add_option("--method", correlate_method, "correlation method")
        ->check(CLI::IsMember({"pearson", "spearman"}))
        ->capture_default_str();
    cmd_correlate->add_option("--out", correlate_out, "write to file instead of stdout");

    // plot-ranking
    auto* cmd_plot = app.add_subcommand(
        "plot-ranking", "two-panel SVG of normalized index triplets, authors ranked by h/m");
    DatasetArgs plot_args;
    std::string plot_out;
    add_dataset_options(cmd_plot, plot_args);
    cmd_plot->add_option("--out", plot_out, "output SVG path (a .csv sibling is written too)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmd_index)) {
            const std::vector<Count> counts =
                index_file.empty() ? parse_vector_tokens(index_tokens) : read_vector_file(index_file);
            const CitationVector x(counts);
            const IndexReport report = full_report(x);
            write_output(index_json ? cli::render_index_json(x, report)
                                    : cli::render_index_text(x, report),
                         index_out);
        } else if (app.got_subcommand(cmd_alpha)) {
            if (alpha_grid.empty() && alpha_list.empty()) {
                throw InvalidAlphaError("one of --grid or --alphas is required");
            }
            const CitationVector x(parse_vector_tokens(alpha_tokens));
            const std::vector<double> alphas =
                alpha_grid.empty() ? parse_alpha_list(alpha_list) : parse_grid(alpha_grid);
            const AlphaCurve curve = alpha_curve(x, alphas);
            std::string title = "nu_alpha for x = (";
            for (std::size_t i = 0; i < x.m(); ++i) title += (i ? " " : "") + std::to_string(x[i]);
            title += ")";
            write_output(alpha_svg ? cli::svg_alpha_curve(curve, title)
                                   : cli::render_alpha_csv(curve),
                         alpha_out);
        } else if (app.got_subcommand(cmd_dataset)) {
            const Dataset dataset = dataset_args.load();
            if (dataset.records.empty()) {
                std::cerr << "warning: dataset '" << dataset_args.path << "' has no records\n";
            }
            const auto rows = compute_rows(dataset);
            write_output(dataset_json ? cli::render_rows_json(rows) : cli::render_rows_csv(rows),
                         dataset_out);
            std::cout << cli::render_summary(dataset_summary(dataset));
        } else if (app.got_subcommand(cmd_correlate)) {
            const Dataset dataset = correlate_args.load();
            const auto rows = compute_rows(dataset);
            const CorrelationMethod method = correlate_method == "spearman"
                                                 ? CorrelationMethod::spearman
                                                 : CorrelationMethod::pearson;
            const CorrelationMatrix matrix = correlation_matrix(rows, method);
            write_output(cli::render_correlation_text(matrix, method), correlate_out);
        } else if (app.got_subcommand(cmd_plot)) {
            const Dataset dataset = plot_args.load();
            if (dataset.records.empty()) {
                std::cerr << "warning: dataset '" << plot_args.path
                          << "' has no records, writing placeholder plot\n";
            }
            const auto ranked = rank_rows(compute_rows(dataset));
            write_output(cli::svg_ranking(ranked), plot_out);
            std::filesystem::path csv_path(plot_out);
            csv_path.replace_extension(".csv");
            // never clobber the input dataset or the SVG itself
            const bool collides =
                csv_path == std::filesystem::path(plot_out) ||
                (std::filesystem::exists(csv_path) &&
                 std::filesystem::equivalent(csv_path, std::filesystem::path(plot_args.path)));
            if (collides) csv_path = std::filesystem::path(plot_out + ".data.csv");
            write_output(cli::render_ranking_csv(ranked), csv_path.string());
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
