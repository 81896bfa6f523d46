#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "xsom/errors.hpp"

namespace xsom {

enum class ColumnKind { Numeric, Categorical, Label };

struct ColumnSpec {
    std::string name;
    ColumnKind kind;
};

// Column-kind declaration plus the raw-label -> {0,1} mapping.
struct Schema {
    std::vector<ColumnSpec> columns;
    std::map<std::string, int> label_mapping;

    const ColumnSpec* find(const std::string& name) const;
    // exactly one label column required
    void validate() const;
};

struct RawDataset {
    std::vector<ColumnSpec> columns;        // in file order
    std::vector<std::vector<std::string>> rows;
    std::map<std::string, int> label_mapping;
    std::size_t label_column = 0;           // index into columns
};

// Parses a comma-delimited UTF-8 file with a mandatory header row. Columns
// are matched against the schema by name; a header column the schema does
// not declare is rejected. Numeric cells must parse as floating point.
RawDataset load_csv(const std::string& path, const Schema& schema);

// Same, from an in-memory string (used by tests).
RawDataset load_csv_text(const std::string& text, const Schema& schema);

} // namespace xsom
