#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pandiag/lattice.hpp"
#include "pandiag/orthogonal.hpp"

namespace pandiag {

struct MagicProvenance {
    std::vector<ParamVector> vectors;
    std::vector<SymbolPermutation> permutations;
};

// Candidate magic array over 0..n^d-1. Nothing about its values is assumed;
// verify_magic_pandiagonal decides.
class MagicArray {
public:
    explicit MagicArray(Grid grid, std::optional<MagicProvenance> provenance = std::nullopt)
        : grid_(std::move(grid)), provenance_(std::move(provenance)) {}

    const Grid& grid() const noexcept { return grid_; }
    int dimension() const noexcept { return grid_.dimension(); }
    int order() const noexcept { return grid_.order(); }
    const std::optional<MagicProvenance>& provenance() const noexcept { return provenance_; }

    friend bool operator==(const MagicArray& a, const MagicArray& b) { return a.grid_ == b.grid_; }

private:
    Grid grid_;
    std::optional<MagicProvenance> provenance_;
};

// Common line sum n(n^d - 1)/2 of a magic array over 0..n^d-1.
std::int64_t sigma(int dimension, std::int64_t order);

// cell = sum over q of n^(d-q) * arrays[q-1](cell); array 1 is the most significant digit.
MagicArray compose(std::span<const LatinArray> arrays);

// Base-n digit q (1-based, most significant first) of every cell.
Grid extract_digit(const MagicArray& m, int q);

MagicArray shift_axis(const MagicArray& m, int axis, int amount);

enum class Hypothesis { shape, feasibility, orthogonality };

class HypothesisError : public Error {
public:
    HypothesisError(Hypothesis h, const std::string& what) : Error(what), hypothesis_(h) {}
    Hypothesis hypothesis() const noexcept { return hypothesis_; }

private:
    Hypothesis hypothesis_;
};

// Checks feasibility of every vector and orthogonality of the family, then
// builds, permutes symbols (permutations[q] applies to array q) and composes.
MagicArray compose_checked(const std::vector<ParamVector>& vectors,
                           const std::optional<std::vector<SymbolPermutation>>& permutations = std::nullopt);

struct ConstructionCount {
    std::uint64_t families = 0;            // ordered d-tuples of canonical feasible vectors with gcd(det, n) = 1
    std::uint64_t permutation_factor = 0;  // (n!)^d
    std::uint64_t product = 0;             // families * permutation_factor
    std::optional<std::uint64_t> distinct; // distinct value grids, when materialised
};

// distinct = false: families * (n!)^d, throwing if the product overflows 64 bits.
// distinct = true: materialises every (family, permutations) array and counts
// distinct grids; supported for d = 2, n <= 5 only.
ConstructionCount count_constructed(int dimension, int order, bool distinct);

}  // namespace pandiag
