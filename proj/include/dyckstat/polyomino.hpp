#pragma once

#include "dyckstat/composition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dyck {

/// Column-convex polyomino given by its columns, left to right, each a
/// half-open vertical cell range [bottom, top) in absolute coordinates.
/// Adjacent columns must overlap in at least one row.
class ColumnPolyomino {
public:
    struct Column {
        int bottom;
        int top;
        friend bool operator==(const Column&, const Column&) = default;
    };

    explicit ColumnPolyomino(std::vector<Column> columns);

    int column_count() const { return static_cast<int>(cols_.size()); }
    const Column& column(int i) const { return cols_.at(static_cast<std::size_t>(i)); }
    const std::vector<Column>& columns() const { return cols_; }

    long long area() const;
    std::vector<int> column_heights() const;
    int min_row() const;
    int max_row() const; ///< one past the highest occupied row
    /// columns + number of distinct occupied unit rows
    int semiperimeter() const;
    Composition rows_top_to_bottom() const;

    bool contains_cell(int col, int row) const;

    /// One line per column: "col k: [bottom, top)".
    std::string to_text() const;
    /// Compact single-line form "b1:t1,b2:t2,..." (accepted by parse).
    std::string to_compact() const;
    static ColumnPolyomino parse_compact(std::string_view text);

    friend bool operator==(const ColumnPolyomino&, const ColumnPolyomino&) = default;

private:
    std::vector<Column> cols_;
};

struct PolyominoClass {
    bool column_convex = true;
    bool row_convex = false;
    bool convex = false;
    bool parallelogram = false; ///< staircase: bottoms and tops both weakly increase
    bool directed = false;      ///< growable right/up from the bottom cell of column 1
    long long area = 0;
    int semiperimeter = 0;
    Composition rows_top_to_bottom;
};

PolyominoClass classify_polyomino(const ColumnPolyomino& p);

} // namespace dyck
