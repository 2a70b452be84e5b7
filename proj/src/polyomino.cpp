#include "dyckstat/polyomino.hpp"

#include "dyckstat/errors.hpp"

#include <algorithm>

namespace dyck {

ColumnPolyomino::ColumnPolyomino(std::vector<Column> columns) : cols_(std::move(columns)) {
    if (cols_.empty()) throw MalformedPolyomino("a polyomino needs at least one column");
    for (const Column& c : cols_)
        if (c.top <= c.bottom) throw MalformedPolyomino("empty column");
    for (std::size_t i = 1; i < cols_.size(); ++i) {
        int lo = std::max(cols_[i - 1].bottom, cols_[i].bottom);
        int hi = std::min(cols_[i - 1].top, cols_[i].top);
        if (lo >= hi) throw MalformedPolyomino("adjacent columns do not overlap");
    }
}

long long ColumnPolyomino::area() const {
    long long a = 0;
    for (const Column& c : cols_) a += c.top - c.bottom;
    return a;
}

std::vector<int> ColumnPolyomino::column_heights() const {
    std::vector<int> hs;
    hs.reserve(cols_.size());
    for (const Column& c : cols_) hs.push_back(c.top - c.bottom);
    return hs;
}

int ColumnPolyomino::min_row() const {
    int m = cols_[0].bottom;
    for (const Column& c : cols_) m = std::min(m, c.bottom);
    return m;
}

int ColumnPolyomino::max_row() const {
    int m = cols_[0].top;
    for (const Column& c : cols_) m = std::max(m, c.top);
    return m;
}

int ColumnPolyomino::semiperimeter() const {
    // Overlapping-chain columns cover every row between the extremes.
    return column_count() + (max_row() - min_row());
}

Composition ColumnPolyomino::rows_top_to_bottom() const {
    std::vector<int> lens;
    for (int y = max_row() - 1; y >= min_row(); --y) {
        int len = 0;
        for (const Column& c : cols_)
            if (c.bottom <= y && y < c.top) ++len;
        lens.push_back(len);
    }
    return Composition(std::move(lens));
}

bool ColumnPolyomino::contains_cell(int col, int row) const {
    if (col < 0 || col >= column_count()) return false;
    const Column& c = cols_[static_cast<std::size_t>(col)];
    return c.bottom <= row && row < c.top;
}

std::string ColumnPolyomino::to_text() const {
    std::string out;
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        out += "col " + std::to_string(i + 1) + ": [" + std::to_string(cols_[i].bottom) + ", " +
               std::to_string(cols_[i].top) + ")\n";
    }
    return out;
}

std::string ColumnPolyomino::to_compact() const {
    std::string out;
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(cols_[i].bottom) + ":" + std::to_string(cols_[i].top);
    }
    return out;
}

ColumnPolyomino ColumnPolyomino::parse_compact(std::string_view text) {
    std::vector<Column> cols;
    std::size_t i = 0;
    auto read_int = [&]() {
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = (text[i++] == '-');
        std::size_t start = i;
        int v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
        if (i == start) throw InvalidArgument("bad polyomino text '" + std::string(text) + "'");
        return neg ? -v : v;
    };
    while (i < text.size()) {
        int bottom = read_int();
        if (i >= text.size() || text[i] != ':')
            throw InvalidArgument("bad polyomino text '" + std::string(text) + "'");
        ++i;
        int top = read_int();
        cols.push_back({bottom, top});
        if (i < text.size()) {
            if (text[i] != ',')
                throw InvalidArgument("bad polyomino text '" + std::string(text) + "'");
            ++i;
        }
    }
    return ColumnPolyomino(std::move(cols));
}

PolyominoClass classify_polyomino(const ColumnPolyomino& p) {
    PolyominoClass out;
    out.area = p.area();
    out.semiperimeter = p.semiperimeter();
    out.rows_top_to_bottom = p.rows_top_to_bottom();

    const auto& cols = p.columns();
    const int k = p.column_count();

    out.row_convex = true;
    for (int y = p.min_row(); y < p.max_row() && out.row_convex; ++y) {
        int first = -1, last = -1;
        for (int c = 0; c < k; ++c) {
            if (p.contains_cell(c, y)) {
                if (first < 0) first = c;
                last = c;
            }
        }
        for (int c = first; c <= last; ++c)
            if (!p.contains_cell(c, y)) {
                out.row_convex = false;
                break;
            }
    }
    out.convex = out.column_convex && out.row_convex;

    out.parallelogram = true;
    for (int c = 1; c < k; ++c) {
        if (cols[c].bottom < cols[c - 1].bottom || cols[c].top < cols[c - 1].top) {
            out.parallelogram = false;
            break;
        }
    }

    // Directed: every cell reachable from the bottom cell of column 1 by
    // moves up within a column or right into the next column.  The
    // reachable part of each column is an up-closed range [reach, top).
    out.directed = true;
    int reach = cols[0].bottom;
    for (int c = 1; c < k; ++c) {
        if (cols[c].bottom < reach || cols[c].bottom >= cols[c - 1].top) {
            out.directed = false;
            break;
        }
        reach = cols[c].bottom;
    }
    return out;
}

} // namespace dyck
