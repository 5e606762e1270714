#pragma once

#include "curvlab/graph.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace curvlab {

enum class CellKind { Exact, Float };

struct TableCell {
    std::string column;
    std::string expected;  // golden; "p/q" for numeric cells
    std::string actual;
    CellKind kind = CellKind::Exact;
    double tolerance = 0.0;
    std::string note;  // e.g. a corrected misprint
    bool matches = false;
};

struct TableRow {
    std::string graph_id;
    std::vector<TableCell> cells;
};

struct Table {
    int id = 0;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;

    bool all_match() const;
    std::vector<std::string> mismatches() const;  // "row / column: expected X, got Y"
};

// $CURVLAB_FIXTURES, else the source-tree fixtures directory.
std::filesystem::path fixtures_dir();

// Recomputes every cell from scratch and compares it with the golden value.
// Throws BadParam for an unknown id, Parse when a fixture cannot be read.
Table reproduce_table(int id, const std::filesystem::path& fixtures, int jobs = 1);

std::string render(const Table& t);
nlohmann::json to_json(const Table& t);

}  // namespace curvlab
