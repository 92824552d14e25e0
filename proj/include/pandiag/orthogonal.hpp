#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pandiag/lattice.hpp"
#include "pandiag/modarith.hpp"
#include "pandiag/params.hpp"

namespace pandiag {

// d parameter vectors of one shape; row q holds the coefficients of array q.
class ParamMatrix {
public:
    explicit ParamMatrix(std::vector<ParamVector> rows);

    int dimension() const noexcept { return rows_.front().dimension(); }
    int order() const noexcept { return rows_.front().order(); }
    std::span<const ParamVector> rows() const noexcept { return rows_; }

private:
    std::vector<ParamVector> rows_;
};

struct Determinant {
    std::int64_t value;  // exact integer determinant
    Residue residue;     // value mod n
};

Determinant determinant_mod(const ParamMatrix& m);

// True iff gcd(det, n) = 1. Throws Error("not a pandiagonal family: ...") when a
// row fails its feasibility check.
bool check_orthogonal_fast(const ParamMatrix& m);

// Superposes the arrays cell by cell and reports whether all n^d tuples are distinct.
// Requires exactly d arrays of one shape.
bool verify_orthogonal_brute(std::span<const LatinArray> arrays);

}  // namespace pandiag
