#pragma once

#include <homcost/digraph.hpp>

#include <algorithm>
#include <initializer_list>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace homcost {

using Cost = std::int64_t;

/// Dense row-major integer matrix; row u, column i holds c_i(u).
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(int rows, int cols, Cost fill = 0) :
        _rows(rows),
        _cols(cols),
        _data(static_cast<std::size_t>(rows) * cols, fill)
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("negative matrix dimension");
    }

    IntMatrix(std::initializer_list<std::initializer_list<Cost>> rows)
    {
        _rows = static_cast<int>(rows.size());
        _cols = rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size());
        for (const auto & row : rows) {
            if (static_cast<int>(row.size()) != _cols)
                throw std::invalid_argument("ragged matrix rows");
            _data.insert(_data.end(), row.begin(), row.end());
        }
    }

    auto rows() const -> int { return _rows; }
    auto cols() const -> int { return _cols; }

    auto operator()(int row, int col) const -> Cost { return _data[index(row, col)]; }
    auto operator()(int row, int col) -> Cost & { return _data[index(row, col)]; }

    auto max_entry() const -> Cost
    {
        return _data.empty() ? 0 : *std::max_element(_data.begin(), _data.end());
    }

    auto min_entry() const -> Cost
    {
        return _data.empty() ? 0 : *std::min_element(_data.begin(), _data.end());
    }

    friend auto operator==(const IntMatrix &, const IntMatrix &) -> bool = default;

private:
    auto index(int row, int col) const -> std::size_t
    {
        if (row < 0 || col < 0 || row >= _rows || col >= _cols)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(row) * _cols + col;
    }

    int _rows = 0;
    int _cols = 0;
    std::vector<Cost> _data;
};

/// An IntMatrix whose entries are all at least 1.
class CostMatrix {
public:
    CostMatrix() = default;

    explicit CostMatrix(IntMatrix entries) :
        _entries(std::move(entries))
    {
        for (int u = 0; u < _entries.rows(); ++u)
            for (int i = 0; i < _entries.cols(); ++i)
                if (_entries(u, i) < 1)
                    throw std::invalid_argument("cost entry (" + std::to_string(u) + ", " + std::to_string(i)
                        + ") is not positive");
    }

    CostMatrix(std::initializer_list<std::initializer_list<Cost>> rows) :
        CostMatrix(IntMatrix(rows))
    {
    }

    static auto constant(int rows, int cols, Cost value) -> CostMatrix
    {
        return CostMatrix(IntMatrix(rows, cols, value));
    }

    auto rows() const -> int { return _entries.rows(); }
    auto cols() const -> int { return _entries.cols(); }
    auto operator()(int u, int i) const -> Cost { return _entries(u, i); }
    auto max_entry() const -> Cost { return _entries.max_entry(); }
    auto entries() const -> const IntMatrix & { return _entries; }

    friend auto operator==(const CostMatrix &, const CostMatrix &) -> bool = default;

private:
    IntMatrix _entries;
};

inline void check_dimensions(const CostMatrix & c, int source_size, int target_size)
{
    if (c.rows() != source_size || c.cols() != target_size)
        throw std::invalid_argument("cost matrix is " + std::to_string(c.rows()) + "x" + std::to_string(c.cols())
            + ", expected " + std::to_string(source_size) + "x" + std::to_string(target_size));
}

/// Admissible colors per source vertex; each list sorted and duplicate-free.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    ListAssignment() = default;

    explicit ListAssignment(std::vector<std::vector<int>> l) :
        lists(std::move(l))
    {
        for (auto & list : lists) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    ListAssignment(std::initializer_list<std::vector<int>> l) :
        ListAssignment(std::vector<std::vector<int>>(l))
    {
    }

    static auto full(int source_size, int target_size) -> ListAssignment
    {
        std::vector<int> all(target_size);
        for (int i = 0; i < target_size; ++i)
            all[i] = i;
        return ListAssignment(std::vector<std::vector<int>>(source_size, all));
    }

    auto size() const -> int { return static_cast<int>(lists.size()); }

    auto allows(int v, int color) const -> bool
    {
        return std::binary_search(lists[v].begin(), lists[v].end(), color);
    }

    void check(int source_size, int target_size) const
    {
        if (size() != source_size)
            throw std::invalid_argument("list assignment covers " + std::to_string(size()) + " vertices, expected "
                + std::to_string(source_size));
        for (int v = 0; v < size(); ++v)
            for (int color : lists[v])
                if (color < 0 || color >= target_size)
                    throw std::invalid_argument("list of vertex " + std::to_string(v) + " names color "
                        + std::to_string(color) + " outside the target");
    }

    auto has_empty_list() const -> bool
    {
        return std::any_of(lists.begin(), lists.end(), [](const auto & l) { return l.empty(); });
    }
};

/// A total arc-preserving map V(D) -> V(H) together with its cost.
struct Homomorphism {
    std::vector<int> image;
    Cost cost = 0;

    friend auto operator==(const Homomorphism &, const Homomorphism &) -> bool = default;
};

inline auto is_homomorphism(const Digraph & source, const Digraph & target, const std::vector<int> & image) -> bool
{
    if (static_cast<int>(image.size()) != source.size())
        return false;
    for (int c : image)
        if (c < 0 || c >= target.size())
            return false;
    for (auto [u, v] : source.arcs())
        if (! target.has_arc(image[u], image[v]))
            return false;
    return true;
}

inline auto respects_lists(const ListAssignment & lists, const std::vector<int> & image) -> bool
{
    if (lists.size() != static_cast<int>(image.size()))
        return false;
    for (int v = 0; v < lists.size(); ++v)
        if (! lists.allows(v, image[v]))
            return false;
    return true;
}

inline auto mapping_cost(const CostMatrix & c, const std::vector<int> & image) -> Cost
{
    Cost total = 0;
    for (int u = 0; u < static_cast<int>(image.size()); ++u)
        total += c(u, image[u]);
    return total;
}

/// Validates `image` as a homomorphism and attaches its cost under `c`.
inline auto make_homomorphism(const Digraph & source, const Digraph & target, std::vector<int> image,
    const CostMatrix & c) -> Homomorphism
{
    check_dimensions(c, source.size(), target.size());
    if (! is_homomorphism(source, target, image))
        throw std::invalid_argument("mapping is not a homomorphism");
    Cost cost = mapping_cost(c, image);
    return Homomorphism{std::move(image), cost};
}

/// Costs file: one row per source vertex, one column per target vertex.
/// Blank lines and '#' comments are skipped.
inline auto parse_int_matrix(std::istream & in, int rows, int cols) -> IntMatrix
{
    IntMatrix result(rows, cols);
    std::string line;
    std::size_t line_no = 0;
    int row = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_blank_or_comment(line))
            continue;
        auto values = detail::parse_int_line(line, line_no);
        if (row == rows)
            throw ParseError(line_no, "more than " + std::to_string(rows) + " cost rows");
        if (static_cast<int>(values.size()) != cols)
            throw ParseError(line_no, "expected " + std::to_string(cols) + " costs, found " + std::to_string(values.size()));
        for (int i = 0; i < cols; ++i)
            result(row, i) = values[i];
        ++row;
    }
    if (row != rows)
        throw ParseError(0, "expected " + std::to_string(rows) + " cost rows, found " + std::to_string(row));
    return result;
}

inline auto parse_costs(std::istream & in, int rows, int cols) -> CostMatrix
{
    auto matrix = parse_int_matrix(in, rows, cols);
    for (int u = 0; u < rows; ++u)
        for (int i = 0; i < cols; ++i)
            if (matrix(u, i) < 1)
                throw ParseError(0, "cost for vertex " + std::to_string(u) + " color " + std::to_string(i)
                    + " is not positive");
    return CostMatrix(std::move(matrix));
}

/// Lists file: exactly one line per source vertex; an empty line is an empty
/// list. Lines starting with '#' are comments.
inline auto parse_lists(std::istream & in, int source_size, int target_size) -> ListAssignment
{
    std::vector<std::vector<int>> lists;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#')
            continue;
        if (static_cast<int>(lists.size()) == source_size) {
            if (first == std::string::npos)
                continue;
            throw ParseError(line_no, "more than " + std::to_string(source_size) + " lists");
        }
        std::vector<int> list;
        for (auto value : detail::parse_int_line(line, line_no)) {
            if (value < 0 || value >= target_size)
                throw ParseError(line_no, "color " + std::to_string(value) + " out of range");
            list.push_back(static_cast<int>(value));
        }
        lists.push_back(std::move(list));
    }
    if (static_cast<int>(lists.size()) != source_size)
        throw ParseError(0, "expected " + std::to_string(source_size) + " lists, found " + std::to_string(lists.size()));
    return ListAssignment(std::move(lists));
}

inline void write_matrix(std::ostream & out, const IntMatrix & m)
{
    for (int u = 0; u < m.rows(); ++u) {
        for (int i = 0; i < m.cols(); ++i)
            out << (i ? " " : "") << m(u, i);
        out << '\n';
    }
}

inline void write_solution(std::ostream & out, const Homomorphism & h)
{
    for (std::size_t u = 0; u < h.image.size(); ++u)
        out << u << ' ' << h.image[u] << '\n';
    out << "cost " << h.cost << '\n';
}

}
