#pragma once

#include "dqbench/dataset.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace dqbench {

struct CsvDialect {
    char delimiter = ',';
};

// Declared schema of a CSV file. There is deliberately no type inference:
// column kinds and missing-value placeholders must be spelled out.
struct ManifestColumn {
    std::string name;
    std::string kind;                      // "categorical" | "numerical" | "date"
    ValueBase base = ValueBase::text;      // categorical value base
    std::optional<std::string> placeholder; // raw text, parsed per kind
};

struct DatasetManifest {
    std::vector<ManifestColumn> columns;
    std::string target;
    std::optional<double> bin_step; // regression target discretization
    CsvDialect dialect;

    ColumnMeta column_meta(const ManifestColumn& col) const;
    void validate() const;
};

DatasetManifest parse_manifest(const std::string& json_text);
DatasetManifest load_manifest(const std::filesystem::path& path);
std::string manifest_to_json(const DatasetManifest& manifest);

} // namespace dqbench
