#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pandiag/params.hpp"

namespace pandiag {

// Arrays larger than this are refused; 101^4 cells is the worst case.
inline constexpr int kMaxLatticeOrder = 101;

// Up to four coordinates (i, j, k, l); entries past the dimension are zero.
using Coord = std::array<int, kMaxDimension>;

// Dense d-dimensional order-n array, row-major with the first index slowest:
// flat = ((i * n + j) * n + k) * n + l.
class Grid {
public:
    Grid(int dimension, int order, std::vector<std::int32_t> values);
    static Grid filled(int dimension, int order, std::int32_t value = 0);

    int dimension() const noexcept { return dimension_; }
    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return values_.size(); }

    std::span<const std::int32_t> values() const noexcept { return values_; }
    std::span<std::int32_t> mutable_values() noexcept { return values_; }

    std::size_t index(const Coord& c) const noexcept {
        std::size_t flat = 0;
        for (int a = 0; a < dimension_; ++a) flat = flat * static_cast<std::size_t>(order_) + static_cast<std::size_t>(c[a]);
        return flat;
    }
    Coord coord(std::size_t flat) const noexcept;

    std::int32_t operator[](std::size_t flat) const { return values_[flat]; }
    std::int32_t at(const Coord& c) const { return values_[index(c)]; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    int dimension_;
    int order_;
    std::vector<std::int32_t> values_;
};

// A bijection on {0..n-1}.
class SymbolPermutation {
public:
    explicit SymbolPermutation(std::vector<int> images);

    static SymbolPermutation identity(int n);
    static SymbolPermutation shift(int n, int amount);     // v -> v + amount mod n
    static SymbolPermutation multiply(int n, int factor);  // v -> factor * v mod n, factor a unit

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int v) const { return images_.at(static_cast<std::size_t>(v)); }
    std::span<const int> images() const noexcept { return images_; }

    // (this after first)(v) = this(first(v))
    SymbolPermutation after(const SymbolPermutation& first) const;

    friend bool operator==(const SymbolPermutation&, const SymbolPermutation&) = default;

private:
    std::vector<int> images_;
};

SymbolPermutation parse_permutation(std::string_view text);  // "1,2,3,4,0"

// An order-n array over symbols {0..n-1}. Carries the vector it was built from, if any.
class LatinArray {
public:
    explicit LatinArray(Grid grid, std::optional<ParamVector> provenance = std::nullopt);

    const Grid& grid() const noexcept { return grid_; }
    int dimension() const noexcept { return grid_.dimension(); }
    int order() const noexcept { return grid_.order(); }
    const std::optional<ParamVector>& provenance() const noexcept { return provenance_; }

    friend bool operator==(const LatinArray& a, const LatinArray& b) { return a.grid_ == b.grid_; }

private:
    Grid grid_;
    std::optional<ParamVector> provenance_;
};

// Affine embedding of an n x n plane into the array: the cell at (row, col) has
// coordinates origin + row * row_step + col * col_step. Steps are -1, 0 or +1 per
// axis and never leave the array.
struct PlaneMap {
    Coord origin{};
    Coord row_step{};
    Coord col_step{};

    Coord at(int row, int col) const noexcept {
        Coord c{};
        for (std::size_t a = 0; a < c.size(); ++a) c[a] = origin[a] + row * row_step[a] + col * col_step[a];
        return c;
    }
};

// Per-axis binding for a planar section. Axes are numbered 0..3 and named i, j, k, l.
struct AxisBinding {
    enum class Kind { free, fixed, equal, anti };
    Kind kind = Kind::free;
    int value = 0;  // coordinate for fixed, partner axis for equal/anti (x + partner = n - 1)
};

struct SliceSpec {
    std::array<AxisBinding, kMaxDimension> axes{};
    // Free axes default to the two unbound axes in ascending order.
    std::optional<int> row_axis;
    std::optional<int> col_axis;
};

// Parses comma-separated terms over axis names i, j, k, l:
//   "k=2"     fixes k
//   "i=j"     ties i to j (the lower-numbered axis follows the higher one)
//   "j+k=16"  ties j + k = n - 1 (the value must equal n - 1)
// An empty string binds nothing.
SliceSpec parse_slice_spec(std::string_view text, int dimension, int order);

// Validates the spec against the shape and returns the embedding of the section.
PlaneMap plane_for(const SliceSpec& spec, int dimension, int order);

char axis_name(int axis);

LatinArray build(const ParamVector& v);

// n x n section; rows run over the first free axis, columns over the second.
std::vector<std::vector<std::int32_t>> slice(const Grid& g, const SliceSpec& spec);
std::vector<std::vector<std::int32_t>> slice(const LatinArray& a, const SliceSpec& spec);

LatinArray permute_symbols(const LatinArray& a, const SymbolPermutation& perm);

// new(x) = old(x with coordinate `axis` advanced by `amount` mod n).
Grid shift_axis(const Grid& g, int axis, int amount);
LatinArray shift_axis(const LatinArray& a, int axis, int amount);

}  // namespace pandiag
