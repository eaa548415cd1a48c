#include "nuindex/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace nuindex {

namespace {

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

bool looks_numeric(std::string_view token) {
    double value = 0.0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

AuthorRecord parse_csv_record(std::string_view line, std::size_t line_no, const CsvMapping& mapping) {
    const auto fields = split_fields(line, mapping.delimiter);
    if (mapping.id_column >= fields.size()) {
        throw ParseError("missing author id field (expected in field " +
                             std::to_string(mapping.id_column + 1) + ", line has " +
                             std::to_string(fields.size()) + ")",
                         line_no, mapping.id_column + 1);
    }

    AuthorRecord record;
    record.source_line = line_no;
    record.author_id = std::string(fields[mapping.id_column]);
    if (record.author_id.empty()) {
        throw ParseError("empty author id", line_no, mapping.id_column + 1);
    }

    for (std::size_t f = mapping.citations_start; f < fields.size(); ++f) {
        if (f == mapping.id_column) continue;
        record.citations.push_back(parse_citation_token(fields[f], line_no, f + 1));
    }
    return record;
}

AuthorRecord parse_jsonl_record(const std::string& line, std::size_t line_no) {
    nlohmann::json object;
    try {
        object = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what(), line_no);
    }

    if (!object.is_object() || !object.contains("author") || !object["author"].is_string()) {
        throw ParseError("expected an object with a string \"author\" key", line_no);
    }

    AuthorRecord record;
    record.source_line = line_no;
    record.author_id = object["author"].get<std::string>();
    if (record.author_id.empty()) throw ParseError("empty author id", line_no);

    if (object.contains("citations")) {
        const auto& citations = object["citations"];
        if (!citations.is_array()) throw ParseError("\"citations\" must be an array", line_no);
        std::size_t field = 0;
        for (const auto& value : citations) {
            ++field;
            if (value.is_number_integer()) {
                const Count count = value.get<Count>();
                if (count < 0) {
                    throw NegativeCitationError("line " + std::to_string(line_no) +
                                                ": negative citation count " + std::to_string(count));
                }
                record.citations.push_back(count);
            } else if (value.is_number()) {
                throw NonIntegerCitationError("line " + std::to_string(line_no) +
                                              ": non-integer citation count " + value.dump());
            } else {
                throw ParseError("citation entries must be integers, got " + value.dump(), line_no,
                                 field);
            }
        }
    }
    return record;
}

}  // namespace

Count parse_citation_token(std::string_view token, std::size_t line, std::size_t field) {
    Count value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec == std::errc{} && ptr == end) {
        if (value < 0) {
            throw NegativeCitationError("line " + std::to_string(line) + ", field " +
                                        std::to_string(field) + ": negative citation count " +
                                        std::to_string(value));
        }
        return value;
    }
    if (looks_numeric(token)) {
        throw NonIntegerCitationError("line " + std::to_string(line) + ", field " +
                                      std::to_string(field) + ": non-integer citation count '" +
                                      std::string(token) + "'");
    }
    throw ParseError("expected a citation count, got '" + std::string(token) + "'", line, field);
}

Dataset read_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const CsvMapping& mapping) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'", 0);
    }

    Dataset dataset;
    dataset.provenance = path.string();

    std::unordered_map<std::string, std::size_t> seen;  // id -> first line
    std::string line;
    std::size_t line_no = 0;
    bool provenance_captured = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (!provenance_captured) {
                std::string_view text = std::string_view(line).substr(1);
                while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
                if (!text.empty()) {
                    dataset.provenance += "; ";
                    dataset.provenance += text;
                    provenance_captured = true;
                }
            }
            continue;
        }

        AuthorRecord record = format == DatasetFormat::csv
                                  ? parse_csv_record(line, line_no, mapping)
                                  : parse_jsonl_record(line, line_no);

        auto [it, inserted] = seen.emplace(record.author_id, line_no);
        if (!inserted) {
            throw DuplicateAuthorError(record.author_id, line_no, it->second);
        }
        dataset.records.push_back(std::move(record));
    }
    return dataset;
}

void write_dataset_csv(const Dataset& dataset, std::ostream& out) {
    for (const auto& record : dataset.records) {
        out << record.author_id;
        for (Count count : record.citations) out << ';' << count;
        out << '\n';
    }
}

std::string write_dataset_csv(const Dataset& dataset) {
    std::ostringstream out;
    write_dataset_csv(dataset, out);
    return out.str();
}

DatasetSummary dataset_summary(const Dataset& dataset) {
    DatasetSummary summary;
    summary.authors = dataset.records.size();
    for (const auto& record : dataset.records) {
        summary.papers += record.citations.size();
        for (Count count : record.citations) summary.citations += count;
    }
    return summary;
}

}  // namespace nuindex
