#include "widecore/cells.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace wide {

CellSet::CellSet(int rows, int cols, std::vector<Cell> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (const Cell& c : cells_)
        if (c.row < 0 || c.row >= rows_ || c.col < 0 || c.col >= cols_)
            throw std::invalid_argument("CellSet: cell outside ambient box");
}

CellSet CellSet::diagram(const IntegerPartition& lambda) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(lambda.weight()));
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) cells.push_back({i, j});
    return CellSet(lambda.length(), lambda.first_part(), std::move(cells));
}

CellSet CellSet::skew(const IntegerPartition& outer, const IntegerPartition& inner) {
    if (inner.length() > outer.length())
        throw std::invalid_argument("skew: inner has more parts than outer");
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > outer.part(i))
            throw std::invalid_argument("skew: inner does not fit inside outer");
    std::vector<Cell> cells;
    for (int i = 0; i < outer.length(); ++i)
        for (int j = inner.part(i); j < outer.part(i); ++j) cells.push_back({i, j});
    return CellSet(outer.length(), outer.first_part(), std::move(cells));
}

bool CellSet::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool CellSet::contains_all(const CellSet& other) const {
    return std::includes(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end());
}

std::vector<int> CellSet::row_degrees() const {
    std::vector<int> deg(static_cast<size_t>(rows_), 0);
    for (const Cell& c : cells_) ++deg[static_cast<size_t>(c.row)];
    return deg;
}

std::vector<int> CellSet::col_degrees() const {
    std::vector<int> deg(static_cast<size_t>(cols_), 0);
    for (const Cell& c : cells_) ++deg[static_cast<size_t>(c.col)];
    return deg;
}

int CellSet::max_degree() const {
    int best = 0;
    for (int d : row_degrees()) best = std::max(best, d);
    for (int d : col_degrees()) best = std::max(best, d);
    return best;
}

CellSet CellSet::minus(const CellSet& other) const {
    std::vector<Cell> diff;
    std::set_difference(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                        std::back_inserter(diff));
    return CellSet(rows_, cols_, std::move(diff));
}

CellSet CellSet::unioned(const CellSet& other) const {
    std::vector<Cell> merged;
    std::set_union(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                   std::back_inserter(merged));
    return CellSet(std::max(rows_, other.rows_), std::max(cols_, other.cols_), std::move(merged));
}

std::string CellSet::to_text() const {
    std::string out;
    for (const Cell& c : cells_) {
        out += std::to_string(c.row + 1);
        out += ',';
        out += std::to_string(c.col + 1);
        out += '\n';
    }
    return out;
}

std::optional<CellSet> CellSet::from_text(int rows, int cols, std::string_view text) {
    std::vector<Cell> cells;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
        if (line.empty()) continue;
        size_t comma = line.find(',');
        if (comma == std::string_view::npos) return std::nullopt;
        int r = 0, c = 0;
        auto [p1, e1] = std::from_chars(line.data(), line.data() + comma, r);
        auto [p2, e2] = std::from_chars(line.data() + comma + 1, line.data() + line.size(), c);
        if (e1 != std::errc{} || e2 != std::errc{}) return std::nullopt;
        cells.push_back({r - 1, c - 1});
    }
    try {
        return CellSet(rows, cols, std::move(cells));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace wide
