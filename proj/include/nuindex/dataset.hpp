#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nuindex/citation_vector.hpp"

namespace nuindex {

/// One author's raw ingested record. citations keeps the file order
/// (unsorted is fine; index computation normalizes). source_line is the
/// 1-based input line for diagnostics.
struct AuthorRecord {
    std::string author_id;
    std::vector<Count> citations;
    std::size_t source_line = 0;
};

/// An ingested collection with pairwise-distinct author ids, in file order.
struct Dataset {
    std::vector<AuthorRecord> records;
    std::string provenance;
};

struct DatasetSummary {
    std::size_t authors = 0;
    std::size_t papers = 0;
    Count citations = 0;

    bool operator==(const DatasetSummary&) const = default;
};

enum class DatasetFormat { csv, jsonl };

/// Column mapping for delimited files: the id lives in id_column, citation
/// counts are every column from citations_start on (id_column excluded).
/// The native dialect is id_column = 0, citations_start = 1, ';' delimiter.
struct CsvMapping {
    std::size_t id_column = 0;
    std::size_t citations_start = 1;
    char delimiter = ';';
};

/// Parses one citation-count token. Negative values raise
/// NegativeCitationError, fractional numbers NonIntegerCitationError,
/// anything else ParseError (both carry line/field positions).
Count parse_citation_token(std::string_view token, std::size_t line, std::size_t field);

/// Reads a dataset file.
///
/// csv: one author per line, delimited fields per the mapping; blank lines
/// and lines starting with '#' are skipped (the first '#' line is kept as
/// provenance). jsonl: one object per line with keys "author" and
/// "citations". Duplicate author ids are rejected; an author with no
/// citation fields is legal and has zero papers.
Dataset read_dataset(const std::filesystem::path& path, DatasetFormat format,
                     const CsvMapping& mapping = {});

/// Writes the canonical CSV dialect: "id;c1;...;cn" per record, LF line
/// endings, no header. read_dataset(write_dataset_csv(d)) reproduces d's
/// records byte-for-byte.
void write_dataset_csv(const Dataset& dataset, std::ostream& out);
std::string write_dataset_csv(const Dataset& dataset);

/// Author count, total paper count and total citation count.
DatasetSummary dataset_summary(const Dataset& dataset);

}  // namespace nuindex
