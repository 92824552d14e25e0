#include "pandiag/orthogonal.hpp"

#include <array>
#include <cstdlib>

namespace pandiag {

ParamMatrix::ParamMatrix(std::vector<ParamVector> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw Error("empty parameter matrix");
    const int d = rows_.front().dimension();
    const int n = rows_.front().order();
    if (static_cast<int>(rows_.size()) != d) {
        throw Error("a family of " + std::to_string(d) + "-dimensional arrays needs " + std::to_string(d) +
                    " vectors, got " + std::to_string(rows_.size()));
    }
    for (const auto& r : rows_) {
        if (r.dimension() != d || r.order() != n) throw Error("parameter vectors disagree on shape: " + r.to_string());
    }
}

namespace {

using Matrix = std::array<std::array<std::int64_t, kMaxDimension>, kMaxDimension>;

// Laplace expansion along the first row; d <= 4 keeps this at 24 products.
std::int64_t det(const Matrix& a, int size) {
    if (size == 1) return a[0][0];
    if (size == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    std::int64_t total = 0;
    for (int col = 0; col < size; ++col) {
        Matrix minor{};
        for (int r = 1; r < size; ++r) {
            int mc = 0;
            for (int c = 0; c < size; ++c) {
                if (c == col) continue;
                minor[r - 1][mc++] = a[r][c];
            }
        }
        const std::int64_t term = a[0][col] * det(minor, size - 1);
        total += (col % 2 == 0) ? term : -term;
    }
    return total;
}

}  // namespace

Determinant determinant_mod(const ParamMatrix& m) {
    const int d = m.dimension();
    Matrix a{};
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) a[r][c] = m.rows()[r][static_cast<std::size_t>(c)];
    }
    const std::int64_t value = det(a, d);
    return Determinant{value, Residue(value, m.order())};
}

bool check_orthogonal_fast(const ParamMatrix& m) {
    for (const auto& row : m.rows()) {
        if (!check(row).feasible) {
            throw Error("not a pandiagonal family: " + row.to_string() + " is infeasible mod " + std::to_string(m.order()));
        }
    }
    const std::int64_t d = std::llabs(determinant_mod(m).value);
    return gcd(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(m.order())) == 1;
}

bool verify_orthogonal_brute(std::span<const LatinArray> arrays) {
    if (arrays.empty()) throw Error("no arrays to superpose");
    const int d = arrays.front().dimension();
    const int n = arrays.front().order();
    if (static_cast<int>(arrays.size()) != d) {
        throw Error("superposition needs exactly " + std::to_string(d) + " arrays, got " + std::to_string(arrays.size()));
    }
    for (const auto& a : arrays) {
        if (a.dimension() != d || a.order() != n) throw Error("arrays disagree on shape");
    }
    const std::size_t cells = arrays.front().grid().size();
    // The tuple (v1..vd) read as a base-n number is itself a cell index, so
    // distinctness is a bijection test on [0, n^d).
    std::vector<char> seen(cells, 0);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        std::size_t key = 0;
        for (const auto& a : arrays) key = key * static_cast<std::size_t>(n) + static_cast<std::size_t>(a.grid()[flat]);
        if (seen[key]) return false;
        seen[key] = 1;
    }
    return true;
}

}  // namespace pandiag
