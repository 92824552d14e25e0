#include "pandiag/verify.hpp"

#include <algorithm>
#include <array>

namespace pandiag {

namespace {

// Affine embedding of a `source`-dimensional box into the full array.
struct Embedding {
    int source = 0;
    Coord origin{};
    std::array<Coord, kMaxDimension> step{};  // step[local axis] = displacement in the full array
};

struct Face {
    std::string label;
    Embedding embedding;                    // (k-1) -> k, in the parent's local coordinates
    std::array<char, kMaxDimension> names;  // real axis name for each local axis of the face
};

// The (k-1)-dimensional constituent boxes of a k-dimensional box: k*n axis-fixed
// faces in axis order, then for every axis pair a < b the tie x_a = x_b and the
// tie x_a + x_b = n - 1. In a tie the lower axis follows the higher one.
std::vector<Face> faces(int k, int n, const std::array<char, kMaxDimension>& names) {
    std::vector<Face> out;
    auto local_axes_without = [k](int skip) {
        std::vector<int> axes;
        for (int a = 0; a < k; ++a) {
            if (a != skip) axes.push_back(a);
        }
        return axes;
    };
    auto make = [&](int skip) {
        Face f;
        f.embedding.source = k - 1;
        f.names = {};
        const auto axes = local_axes_without(skip);
        for (std::size_t l = 0; l < axes.size(); ++l) {
            f.embedding.step[l][axes[l]] = 1;
            f.names[l] = names[axes[l]];
        }
        return f;
    };

    for (int a = 0; a < k; ++a) {
        for (int t = 0; t < n; ++t) {
            Face f = make(a);
            f.embedding.origin[a] = t;
            f.label = std::string(1, names[a]) + "=" + std::to_string(t);
            out.push_back(std::move(f));
        }
    }
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            const auto axes = local_axes_without(a);
            const std::size_t lb = static_cast<std::size_t>(std::find(axes.begin(), axes.end(), b) - axes.begin());

            Face equal = make(a);
            equal.embedding.step[lb][a] = 1;
            equal.label = std::string(1, names[a]) + "=" + names[b];
            out.push_back(std::move(equal));

            Face anti = make(a);
            anti.embedding.origin[a] = n - 1;
            anti.embedding.step[lb][a] = -1;
            anti.label = std::string(1, names[a]) + "+" + names[b] + "=" + std::to_string(n - 1);
            out.push_back(std::move(anti));
        }
    }
    return out;
}

Embedding compose(const Embedding& outer, const Embedding& inner) {
    Embedding e;
    e.source = inner.source;
    e.origin = outer.origin;
    for (int a = 0; a < outer.source; ++a) {
        for (std::size_t x = 0; x < e.origin.size(); ++x) e.origin[x] += inner.origin[a] * outer.step[a][x];
    }
    for (int b = 0; b < inner.source; ++b) {
        for (int a = 0; a < outer.source; ++a) {
            for (std::size_t x = 0; x < e.origin.size(); ++x) e.step[b][x] += inner.step[b][a] * outer.step[a][x];
        }
    }
    return e;
}

PlaneMap to_plane(const Embedding& e) { return PlaneMap{e.origin, e.step[0], e.step[1]}; }

constexpr std::array<char, kMaxDimension> kAxisNames{'i', 'j', 'k', 'l'};

void require_supported(int dimension, int order) {
    if (dimension < kMinDimension || dimension > kMaxDimension) {
        throw Error("unsupported dimension " + std::to_string(dimension));
    }
    if (order < 1) throw Error("order must be positive");
}

// Cell (row, col) of line `offset` of the given kind.
inline std::pair<int, int> line_cell(LineKind kind, int offset, int r, int n) {
    switch (kind) {
        case LineKind::row: return {offset, r};
        case LineKind::column: return {r, offset};
        case LineKind::diagonal_plus: return {r, (r + offset) % n};
        case LineKind::diagonal_minus: return {r, (2 * n - 1 - r + offset) % n};
    }
    return {0, 0};
}

constexpr std::array<LineKind, 4> kKinds{LineKind::row, LineKind::column, LineKind::diagonal_plus, LineKind::diagonal_minus};

Line make_line(const SquareDescriptor& sq, std::size_t square_index, LineKind kind, int offset, int n) {
    Line line{{}, kind, offset, square_index, sq.label};
    line.cells.reserve(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        const auto [row, col] = line_cell(kind, offset, r, n);
        line.cells.push_back(sq.plane.at(row, col));
    }
    return line;
}

enum class Mode { latin, magic };

VerificationReport run(const Grid& g, Mode mode) {
    const int d = g.dimension();
    const int n = g.order();
    const auto squares = enumerate_squares(d, n);
    const auto values = g.values();

    VerificationReport report;
    report.property = mode == Mode::latin ? Property::pandiagonal_latin : Property::pandiagonal_magic;
    report.squares_checked = squares.size();

    std::int64_t target = 0;
    if (mode == Mode::magic) {
        target = sigma(d, n);
        report.magic_sum = target;
        std::vector<char> seen(values.size(), 0);
        for (std::size_t flat = 0; flat < values.size() && !report.first_failure; ++flat) {
            const std::int32_t v = values[flat];
            if (v < 0 || static_cast<std::size_t>(v) >= values.size()) {
                report.first_failure = Failure{FailureKind::out_of_range, std::nullopt,
                                               "value " + std::to_string(v) + " outside [0, " +
                                                   std::to_string(values.size() - 1) + "]"};
            } else if (seen[static_cast<std::size_t>(v)]) {
                report.first_failure = Failure{FailureKind::repeat, std::nullopt,
                                               "repeat: value " + std::to_string(v) + " appears more than once"};
            } else {
                seen[static_cast<std::size_t>(v)] = 1;
            }
        }
    }

    // Flat index is affine in (row, col) on any square.
    std::array<std::int64_t, kMaxDimension> axis_stride{};
    {
        std::int64_t s = 1;
        for (int a = d - 1; a >= 0; --a) {
            axis_stride[a] = s;
            s *= n;
        }
    }

    std::vector<std::uint32_t> stamp(static_cast<std::size_t>(n), 0);
    std::uint32_t epoch = 0;

    for (std::size_t s = 0; s < squares.size(); ++s) {
        const PlaneMap& p = squares[s].plane;
        std::int64_t base = 0, row_stride = 0, col_stride = 0;
        for (int a = 0; a < d; ++a) {
            base += p.origin[a] * axis_stride[a];
            row_stride += p.row_step[a] * axis_stride[a];
            col_stride += p.col_step[a] * axis_stride[a];
        }

        for (LineKind kind : kKinds) {
            for (int t = 0; t < n; ++t) {
                ++report.lines_checked;
                bool ok = true;
                FailureKind fk = mode == Mode::latin ? FailureKind::symbol_missing : FailureKind::wrong_sum;
                std::string reason;
                if (mode == Mode::latin) {
                    ++epoch;
                    for (int r = 0; r < n && ok; ++r) {
                        const auto [row, col] = line_cell(kind, t, r, n);
                        const std::int32_t v = values[static_cast<std::size_t>(base + row * row_stride + col * col_stride)];
                        if (v < 0 || v >= n) {
                            ok = false;
                            fk = FailureKind::out_of_range;
                            reason = "symbol " + std::to_string(v) + " out of range";
                        } else if (stamp[static_cast<std::size_t>(v)] == epoch) {
                            ok = false;
                            reason = "symbol " + std::to_string(v) + " appears twice";
                        } else {
                            stamp[static_cast<std::size_t>(v)] = epoch;
                        }
                    }
                } else {
                    std::int64_t sum = 0;
                    for (int r = 0; r < n; ++r) {
                        const auto [row, col] = line_cell(kind, t, r, n);
                        sum += values[static_cast<std::size_t>(base + row * row_stride + col * col_stride)];
                    }
                    if (sum != target) {
                        ok = false;
                        reason = "sum " + std::to_string(sum) + " != " + std::to_string(target);
                    }
                }
                if (ok) continue;

                if (kind == LineKind::row || kind == LineKind::column) {
                    report.grades.rows_columns = false;
                } else if (t == 0) {
                    report.grades.main_diagonals = false;
                } else {
                    report.grades.broken_diagonals = false;
                }
                if (!report.first_failure) {
                    report.first_failure = Failure{fk, make_line(squares[s], s, kind, t, n), reason};
                }
            }
        }
    }
    report.passed = !report.first_failure.has_value();
    return report;
}

}  // namespace

std::vector<SquareDescriptor> enumerate_squares(int dimension, int order) {
    require_supported(dimension, order);
    std::vector<SquareDescriptor> out;
    if (dimension == 2) {
        Embedding id;
        id.source = 2;
        id.step[0][0] = 1;
        id.step[1][1] = 1;
        out.push_back({"square", to_plane(id)});
        return out;
    }
    if (dimension == 3) {
        for (auto& f : faces(3, order, kAxisNames)) out.push_back({std::move(f.label), to_plane(f.embedding)});
        return out;
    }
    for (const auto& cube : faces(4, order, kAxisNames)) {
        for (const auto& sq : faces(3, order, cube.names)) {
            out.push_back({cube.label + ", " + sq.label, to_plane(compose(cube.embedding, sq.embedding))});
        }
    }
    return out;
}

std::size_t square_count(int dimension, int order) {
    require_supported(dimension, order);
    const std::size_t n = static_cast<std::size_t>(order);
    switch (dimension) {
        case 2: return 1;
        case 3: return 3 * n + 6;
        default: return (4 * n + 12) * (3 * n + 6);
    }
}

std::string_view to_string(LineKind k) {
    switch (k) {
        case LineKind::row: return "row";
        case LineKind::column: return "column";
        case LineKind::diagonal_plus: return "diagonal+";
        case LineKind::diagonal_minus: return "diagonal-";
    }
    return "unknown";
}

std::vector<Line> enumerate_lines(const SquareDescriptor& square, int order, std::size_t square_index) {
    std::vector<Line> lines;
    lines.reserve(4 * static_cast<std::size_t>(order));
    for (LineKind kind : kKinds) {
        for (int t = 0; t < order; ++t) lines.push_back(make_line(square, square_index, kind, t, order));
    }
    return lines;
}

std::string_view to_string(Property p) {
    switch (p) {
        case Property::latin: return "latin";
        case Property::diagonal_latin: return "diagonal-latin";
        case Property::pandiagonal_latin: return "pandiagonal-latin";
        case Property::pandiagonal_magic: return "pandiagonal-magic";
    }
    return "unknown";
}

bool VerificationReport::holds(Property p) const {
    switch (p) {
        case Property::latin: return grades.rows_columns;
        case Property::diagonal_latin: return grades.rows_columns && grades.main_diagonals;
        case Property::pandiagonal_latin: return property == Property::pandiagonal_latin && passed;
        case Property::pandiagonal_magic: return property == Property::pandiagonal_magic && passed;
    }
    return false;
}

VerificationReport verify_latin_pandiagonal(const Grid& g) { return run(g, Mode::latin); }
VerificationReport verify_latin_pandiagonal(const LatinArray& a) { return run(a.grid(), Mode::latin); }
VerificationReport verify_magic_pandiagonal(const Grid& g) { return run(g, Mode::magic); }
VerificationReport verify_magic_pandiagonal(const MagicArray& m) { return run(m.grid(), Mode::magic); }

}  // namespace pandiag
