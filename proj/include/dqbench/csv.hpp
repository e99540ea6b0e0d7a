#pragma once

#include "dqbench/dataset.hpp"
#include "dqbench/manifest.hpp"

#include <filesystem>
#include <string>

namespace dqbench {

/// Parse one text field into a typed cell; errors name the column.
Cell parse_cell_text(const std::string& text, const FeatureKind& kind,
                     const std::string& column_name);

/// Split delimited text into rows of fields (quotes escape as "").
std::vector<std::vector<std::string>> parse_delimited(const std::string& text,
                                                      char delimiter);

/// Load a CSV (header row required) under the manifest's schema. Cells equal
/// to a column's declared placeholder are stored as that placeholder;
/// categorical domains are computed from the observed non-missing values.
Dataset load_csv(const std::filesystem::path& path, const DatasetManifest& manifest);
Dataset parse_csv(const std::string& text, const DatasetManifest& manifest);

/// Write a dataset back to CSV. Deterministic: the same dataset always
/// produces the same bytes, and loading the output under the same manifest
/// reproduces the dataset bit-identically (doubles use shortest round-trip
/// formatting).
void save_csv(const Dataset& ds, const std::filesystem::path& path,
              const CsvDialect& dialect = {});
std::string write_csv(const Dataset& ds, const CsvDialect& dialect = {});

} // namespace dqbench
