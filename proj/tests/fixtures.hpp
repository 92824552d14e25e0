#pragma once

// Reference arrays, transcribed cell for cell. Rows top to bottom.

#include <cstdint>
#include <vector>

#include "pandiag/lattice.hpp"

namespace fixtures {

using Rows = std::vector<std::vector<std::int32_t>>;

inline pandiag::Grid to_grid(const Rows& rows) {
    std::vector<std::int32_t> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return pandiag::Grid(2, static_cast<int>(rows.size()), flat);
}

// Order-4 magic square, sum 30; not pandiagonal.
inline const Rows magic4_plain{
    {0, 10, 15, 5},
    {7, 13, 8, 2},
    {9, 3, 6, 12},
    {14, 4, 1, 11},
};

// Order-5 pandiagonal magic square, sum 60.
inline const Rows magic5_pandiagonal{
    {13, 19, 20, 1, 7},
    {21, 2, 8, 14, 15},
    {9, 10, 16, 22, 3},
    {17, 23, 4, 5, 11},
    {0, 6, 12, 18, 24},
};

// Latin, not diagonal.
inline const Rows latin3_plain{
    {0, 1, 2},
    {2, 0, 1},
    {1, 2, 0},
};

// Diagonal latin, not pandiagonal.
inline const Rows latin4_diagonal{
    {0, 1, 2, 3},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
    {1, 0, 3, 2},
};

inline const Rows latin5_pandiagonal{
    {3, 4, 0, 1, 2},
    {1, 2, 3, 4, 0},
    {4, 0, 1, 2, 3},
    {2, 3, 4, 0, 1},
    {0, 1, 2, 3, 4},
};

// latin5_pandiagonal under v -> v + 1 mod 5.
inline const Rows latin5_pandiagonal_shifted{
    {4, 0, 1, 2, 3},
    {2, 3, 4, 0, 1},
    {0, 1, 2, 3, 4},
    {3, 4, 0, 1, 2},
    {1, 2, 3, 4, 0},
};

// Section k = 2 of <1,2,7>, n = 11.
inline const Rows section_k2{
    {3, 5, 7, 9, 0, 2, 4, 6, 8, 10, 1},
    {4, 6, 8, 10, 1, 3, 5, 7, 9, 0, 2},
    {5, 7, 9, 0, 2, 4, 6, 8, 10, 1, 3},
    {6, 8, 10, 1, 3, 5, 7, 9, 0, 2, 4},
    {7, 9, 0, 2, 4, 6, 8, 10, 1, 3, 5},
    {8, 10, 1, 3, 5, 7, 9, 0, 2, 4, 6},
    {9, 0, 2, 4, 6, 8, 10, 1, 3, 5, 7},
    {10, 1, 3, 5, 7, 9, 0, 2, 4, 6, 8},
    {0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9},
    {1, 3, 5, 7, 9, 0, 2, 4, 6, 8, 10},
    {2, 4, 6, 8, 10, 1, 3, 5, 7, 9, 0},
};

// Diagonal section i = j of <1,2,7>, n = 11; rows over i, columns over k.
inline const Rows section_i_eq_j{
    {0, 7, 3, 10, 6, 2, 9, 5, 1, 8, 4},
    {3, 10, 6, 2, 9, 5, 1, 8, 4, 0, 7},
    {6, 2, 9, 5, 1, 8, 4, 0, 7, 3, 10},
    {9, 5, 1, 8, 4, 0, 7, 3, 10, 6, 2},
    {1, 8, 4, 0, 7, 3, 10, 6, 2, 9, 5},
    {4, 0, 7, 3, 10, 6, 2, 9, 5, 1, 8},
    {7, 3, 10, 6, 2, 9, 5, 1, 8, 4, 0},
    {10, 6, 2, 9, 5, 1, 8, 4, 0, 7, 3},
    {2, 9, 5, 1, 8, 4, 0, 7, 3, 10, 6},
    {5, 1, 8, 4, 0, 7, 3, 10, 6, 2, 9},
    {8, 4, 0, 7, 3, 10, 6, 2, 9, 5, 1},
};

// Section i = 2, j + k = 16 of <1,2,4,9>, n = 17; rows over k, columns over l.
inline const Rows section_i2_jk16{
    {0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8},
    {2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10},
    {4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12},
    {6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14},
    {8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16},
    {10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1},
    {12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3},
    {14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5},
    {16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7},
    {1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9},
    {3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11},
    {5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13},
    {7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15},
    {9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0},
    {11, 3, 12, 4, 13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2},
    {13, 5, 14, 6, 15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4},
    {15, 7, 16, 8, 0, 9, 1, 10, 2, 11, 3, 12, 4, 13, 5, 14, 6},
};

}  // namespace fixtures
