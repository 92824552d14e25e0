#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pandiag/lattice.hpp"
#include "pandiag/magic.hpp"

namespace pandiag {

// One constituent square: a planar section of the array, with a readable label
// such as "k=2", "i=j" or "l=3, j+k=16".
struct SquareDescriptor {
    std::string label;
    PlaneMap plane;
};

// d = 2: the array itself. d = 3: 3n axis-parallel squares, then for each axis
// pair {a, b} the squares x_a = x_b and x_a + x_b = n - 1. d = 4: the 4n + 12
// constituent cubes in the same order, each expanded into its 3n + 6 squares.
std::vector<SquareDescriptor> enumerate_squares(int dimension, int order);

std::size_t square_count(int dimension, int order);

enum class LineKind { row, column, diagonal_plus, diagonal_minus };

std::string_view to_string(LineKind k);

struct Line {
    std::vector<Coord> cells;
    LineKind kind;
    int offset;               // row/column index, or wrap offset for diagonals (0 = main)
    std::size_t square;       // index into enumerate_squares
    std::string square_label;
};

// The 4n lines of one square: n rows, n columns, then the n wrapped diagonals of
// slope +1 (cells (r, r + t)) and of slope -1 (cells (r, n - 1 - r + t)), t = 0..n-1.
std::vector<Line> enumerate_lines(const SquareDescriptor& square, int order, std::size_t square_index = 0);

enum class Property { latin, diagonal_latin, pandiagonal_latin, pandiagonal_magic };

std::string_view to_string(Property p);

enum class FailureKind { symbol_missing, out_of_range, repeat, wrong_sum };

struct Failure {
    FailureKind kind;
    std::optional<Line> line;  // absent for whole-array failures such as repeats
    std::string reason;
};

// Which line families passed across every constituent square.
struct Grades {
    bool rows_columns = true;
    bool main_diagonals = true;
    bool broken_diagonals = true;
};

struct VerificationReport {
    Property property;  // the property that was tested
    bool passed = false;
    std::size_t squares_checked = 0;
    std::size_t lines_checked = 0;
    std::optional<Failure> first_failure;
    std::optional<std::int64_t> magic_sum;
    Grades grades;

    // Whether a weaker or equal grade holds; latin grades for latin reports,
    // rows-only / with-main-diagonals / pandiagonal for magic reports.
    bool holds(Property p) const;
};

// Every line of every constituent square must contain each symbol 0..n-1 once.
// Reads the values only.
VerificationReport verify_latin_pandiagonal(const Grid& g);
VerificationReport verify_latin_pandiagonal(const LatinArray& a);

// Values must be exactly 0..n^d-1 and every line must sum to sigma(d, n).
VerificationReport verify_magic_pandiagonal(const Grid& g);
VerificationReport verify_magic_pandiagonal(const MagicArray& m);

}  // namespace pandiag
