#pragma once

// Test-only reference computations. Each one works straight from a definition
// and shares no code path with the library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<std::int64_t>>;

// The 4n lines of an n x n square by definition: rows, columns and all wrapped
// diagonals of both slopes.
inline std::vector<std::vector<std::int64_t>> all_lines(const Rows& sq) {
    const int n = static_cast<int>(sq.size());
    std::vector<std::vector<std::int64_t>> lines;
    for (int r = 0; r < n; ++r) lines.push_back(sq[r]);
    for (int c = 0; c < n; ++c) {
        std::vector<std::int64_t> col;
        for (int r = 0; r < n; ++r) col.push_back(sq[r][c]);
        lines.push_back(col);
    }
    for (int t = 0; t < n; ++t) {
        std::vector<std::int64_t> down, up;
        for (int r = 0; r < n; ++r) {
            down.push_back(sq[r][(r + t) % n]);
            up.push_back(sq[r][((t - r) % n + n) % n]);
        }
        lines.push_back(down);
        lines.push_back(up);
    }
    return lines;
}

inline bool pandiagonal_latin_square(const Rows& sq) {
    const std::int64_t n = static_cast<std::int64_t>(sq.size());
    for (auto line : all_lines(sq)) {
        std::sort(line.begin(), line.end());
        for (std::int64_t s = 0; s < n; ++s) {
            if (line[static_cast<std::size_t>(s)] != s) return false;
        }
    }
    return true;
}

inline bool pandiagonal_magic_square(const Rows& sq) {
    const std::int64_t n = static_cast<std::int64_t>(sq.size());
    std::set<std::int64_t> values;
    for (const auto& r : sq) values.insert(r.begin(), r.end());
    if (static_cast<std::int64_t>(values.size()) != n * n || *values.begin() != 0 || *values.rbegin() != n * n - 1) {
        return false;
    }
    const std::int64_t target = n * (n * n - 1) / 2;
    for (const auto& line : all_lines(sq)) {
        if (std::accumulate(line.begin(), line.end(), std::int64_t{0}) != target) return false;
    }
    return true;
}

// Pandiagonality of a cube given as a cell function, checking each of the 3n + 6
// squares with explicitly written coordinate formulas.
inline bool pandiagonal_latin_cube(int n, const std::function<std::int64_t(int, int, int)>& cell) {
    auto square = [n](auto&& f) {
        Rows sq(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) sq[r][c] = f(r, c);
        }
        return sq;
    };
    for (int t = 0; t < n; ++t) {
        if (!pandiagonal_latin_square(square([&](int r, int c) { return cell(t, r, c); }))) return false;
        if (!pandiagonal_latin_square(square([&](int r, int c) { return cell(r, t, c); }))) return false;
        if (!pandiagonal_latin_square(square([&](int r, int c) { return cell(r, c, t); }))) return false;
    }
    const std::vector<Rows> diagonal{
        square([&](int r, int c) { return cell(r, r, c); }),
        square([&](int r, int c) { return cell(n - 1 - r, r, c); }),
        square([&](int r, int c) { return cell(r, c, r); }),
        square([&](int r, int c) { return cell(n - 1 - r, c, r); }),
        square([&](int r, int c) { return cell(c, r, r); }),
        square([&](int r, int c) { return cell(c, n - 1 - r, r); }),
    };
    return std::all_of(diagonal.begin(), diagonal.end(), pandiagonal_latin_square);
}

// Determinant by the permutation (Leibniz) expansion.
inline std::int64_t leibniz_det(const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t d = m.size();
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t total = 0;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = a + 1; b < d; ++b) inversions += perm[a] > perm[b];
        }
        std::int64_t term = inversions % 2 ? -1 : 1;
        for (std::size_t r = 0; r < d; ++r) term *= m[r][perm[r]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Superposes arrays given as flat value lists; true iff every tuple is new.
inline bool superposition_distinct(const std::vector<std::vector<std::int32_t>>& arrays) {
    std::set<std::vector<std::int32_t>> tuples;
    for (std::size_t cell = 0; cell < arrays.front().size(); ++cell) {
        std::vector<std::int32_t> t;
        for (const auto& a : arrays) t.push_back(a[cell]);
        if (!tuples.insert(t).second) return false;
    }
    return true;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace oracle
