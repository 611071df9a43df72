#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "constraint_class.hpp"
#include "enumerate.hpp"
#include "partition.hpp"

namespace hookcomb {

/// Rows of one perimeter block; each row holds one partition per column.
struct TableGroup {
    std::string label;  // empty for single-block tables
    std::vector<std::vector<Partition>> rows;
};

struct PairingTable {
    int id = 0;
    std::string caption;
    std::vector<std::string> headers;
    std::vector<TableGroup> groups;

    std::size_t row_count() const {
        std::size_t n = 0;
        for (const auto& g : groups) n += g.rows.size();
        return n;
    }

    /// All partitions in one column, in emitted order.
    std::vector<Partition> column(std::size_t i) const {
        std::vector<Partition> out;
        for (const auto& g : groups)
            for (const auto& row : g.rows) out.push_back(row.at(i));
        return out;
    }
};

namespace detail {

using Filter = std::function<bool(const Partition&)>;

struct ColumnSpec {
    ConstraintClass cls;
    Filter keep;
};

inline TableGroup make_group(Part perimeter, const std::vector<ColumnSpec>& columns, std::string label) {
    std::vector<std::vector<Partition>> cols;
    for (const auto& c : columns) {
        std::vector<Partition> col;
        for (const auto& p : enumerate_by_perimeter(perimeter, c.cls))
            if (c.keep(p)) col.push_back(p);
        cols.push_back(std::move(col));
    }
    for (const auto& col : cols)
        if (col.size() != cols.front().size())
            throw std::logic_error("table columns differ in length at perimeter " + std::to_string(perimeter));

    TableGroup g{std::move(label), {}};
    for (std::size_t r = 0; r < cols.front().size(); ++r) {
        std::vector<Partition> row;
        for (const auto& col : cols) row.push_back(col[r]);
        g.rows.push_back(std::move(row));
    }
    return g;
}

}  // namespace detail

/// The four pairing tables: 1-3 pair distinct and odd partitions of a fixed
/// perimeter under one refinement each, 4 lists the three d=2 classes for
/// perimeters 1..7. Columns are filled in enumeration order and must have
/// equal length.
inline PairingTable make_table(int id) {
    const auto D = ConstraintClass::distinct();
    const auto O = ConstraintClass::odd();
    auto len_is = [](std::size_t k) { return [k](const Partition& p) { return p.length() == k; }; };
    auto top_is = [](Part k) { return [k](const Partition& p) { return p.largest() == k; }; };

    switch (id) {
    case 1:
        return {1, "perimeter 9: distinct with 4 parts | odd with largest part 7",
                {"distinct", "odd"}, {detail::make_group(9, {{D, len_is(4)}, {O, top_is(7)}}, "")}};
    case 2:
        return {2, "perimeter 8: distinct with largest part 6 | odd with largest part + 2*length = 13",
                {"distinct", "odd"},
                {detail::make_group(8,
                                    {{D, top_is(6)},
                                     {O, [](const Partition& p) {
                                          return p.largest() + 2 * static_cast<Part>(p.length()) == 13;
                                      }}},
                                    "")}};
    case 3:
        return {3, "perimeter 7: distinct with rank 2 | odd with 3 parts",
                {"distinct", "odd"},
                {detail::make_group(7, {{D, [](const Partition& p) { return p.rank() == 2; }}, {O, len_is(3)}},
                                    "")}};
    case 4: {
        PairingTable t{4, "perimeters 1..7: 2-distinct | parts = 1 mod 3 | G_2",
                       {"ddistinct:2", "modone:2", "gclass:2"}, {}};
        auto all = [](const Partition&) { return true; };
        for (Part n = 1; n <= 7; ++n)
            t.groups.push_back(detail::make_group(n,
                                                  {{ConstraintClass::d_distinct(2), all},
                                                   {ConstraintClass::mod_one(2), all},
                                                   {ConstraintClass::g_class(2), all}},
                                                  "perimeter " + std::to_string(n)));
        return t;
    }
    default: throw std::invalid_argument("table id must be 1, 2, 3 or 4");
    }
}

}  // namespace hookcomb
