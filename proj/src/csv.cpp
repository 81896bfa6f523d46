#include "xsom/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace xsom {

const ColumnSpec* Schema::find(const std::string& name) const {
    for (const auto& c : columns) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

void Schema::validate() const {
    int label_count = 0;
    for (const auto& c : columns) {
        if (c.kind == ColumnKind::Label) ++label_count;
    }
    if (label_count != 1) {
        throw MissingLabelColumn("schema must declare exactly one label column, got " +
                                 std::to_string(label_count));
    }
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(std::move(cur));
    return cells;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parses_as_number(const std::string& s) {
    const std::string t = trim(s);
    if (t.empty()) return false;
    double value;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    return ec == std::errc{} && ptr == t.data() + t.size();
}

RawDataset parse_stream(std::istream& in, const Schema& schema) {
    schema.validate();

    std::string line;
    if (!std::getline(in, line)) {
        throw DataError("empty input: no header row");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();

    RawDataset ds;
    ds.label_mapping = schema.label_mapping;
    for (const auto& name : split_line(line)) {
        const std::string clean = trim(name);
        const ColumnSpec* spec = schema.find(clean);
        if (spec == nullptr) {
            throw ConfigError("column '" + clean + "' is not declared in the schema");
        }
        ds.columns.push_back(*spec);
    }

    bool has_label = false;
    for (std::size_t i = 0; i < ds.columns.size(); ++i) {
        if (ds.columns[i].kind == ColumnKind::Label) {
            ds.label_column = i;
            has_label = true;
        }
    }
    if (!has_label) {
        throw MissingLabelColumn("label column missing from header");
    }

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split_line(line);
        if (cells.size() != ds.columns.size()) {
            throw RaggedRow(lineno, "line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(ds.columns.size()) + " cells, got " +
                                        std::to_string(cells.size()));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            cells[c] = trim(cells[c]);
            if (ds.columns[c].kind == ColumnKind::Numeric && !parses_as_number(cells[c])) {
                throw UnparseableNumeric(lineno, ds.columns[c].name,
                                         "line " + std::to_string(lineno) + ", column '" +
                                             ds.columns[c].name + "': '" + cells[c] +
                                             "' is not numeric");
            }
        }
        ds.rows.push_back(std::move(cells));
    }
    return ds;
}

} // namespace

RawDataset load_csv(const std::string& path, const Schema& schema) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path + "'");
    }
    return parse_stream(in, schema);
}

RawDataset load_csv_text(const std::string& text, const Schema& schema) {
    std::istringstream in(text);
    return parse_stream(in, schema);
}

} // namespace xsom
