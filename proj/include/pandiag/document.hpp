#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pandiag/lattice.hpp"

namespace pandiag {

// On-disk form of an array. JSON layout, one line, keys sorted, newline-terminated:
//   {"dimension":3,"kind":"latin","order":11,"params":[1,2,7],"values":[...]}
// values are flat, row-major, first index slowest (see Grid). params is a flat
// list for a latin array and a list of lists for a composed magic array.
struct ArrayDocument {
    int dimension = 2;
    int order = 1;
    std::vector<std::int32_t> values;
    std::optional<std::vector<std::vector<int>>> params;
    bool nested_params = false;
    std::optional<std::string> kind;  // "latin" or "magic"

    Grid grid() const { return Grid(dimension, order, values); }

    friend bool operator==(const ArrayDocument&, const ArrayDocument&) = default;
};

ArrayDocument make_document(const Grid& g);

std::string to_json(const ArrayDocument& doc);

// Space-separated rows, one n x n block per leading index combination, blocks
// separated by a blank line. `offset` is added to every printed value.
std::string to_grid(const Grid& g, int offset = 0);
// Same layout with comma separators.
std::string to_csv(const Grid& g, int offset = 0);
std::string to_grid(const std::vector<std::vector<std::int32_t>>& rows, int offset = 0);
std::string to_csv(const std::vector<std::vector<std::int32_t>>& rows, int offset = 0);

// Accepts JSON (text starting with '{') or the grid/csv layout. For the plain
// layouts the order is the row width and the dimension follows from the row count.
ArrayDocument parse_document(std::string_view text);

}  // namespace pandiag
