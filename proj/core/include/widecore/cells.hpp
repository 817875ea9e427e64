#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "widecore/partition.hpp"

namespace wide {

/// A cell of a (possibly skew) diagram. Stored 0-based; the text format is 1-based.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Subset of cells inside an ambient bounding box; rows/cols record the box so
/// degree tables and flow networks are well defined even for skew diagrams.
class CellSet {
public:
    CellSet() = default;
    CellSet(int rows, int cols, std::vector<Cell> cells);

    /// Full Young diagram of lambda.
    static CellSet diagram(const IntegerPartition& lambda);

    /// Skew diagram outer/inner. Throws std::invalid_argument unless inner fits in outer.
    static CellSet skew(const IntegerPartition& outer, const IntegerPartition& inner);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Cell>& cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }

    bool contains(Cell c) const;
    bool contains_all(const CellSet& other) const;

    std::vector<int> row_degrees() const;
    std::vector<int> col_degrees() const;
    int max_degree() const;

    /// Set difference restricted to the same ambient box.
    CellSet minus(const CellSet& other) const;
    CellSet unioned(const CellSet& other) const;

    /// One "r,c" pair per line, 1-based.
    std::string to_text() const;
    static std::optional<CellSet> from_text(int rows, int cols, std::string_view text);

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cell> cells_;  // sorted row-major, no duplicates
};

}  // namespace wide
