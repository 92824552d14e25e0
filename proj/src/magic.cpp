#include "pandiag/magic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace pandiag {

std::int64_t sigma(int dimension, std::int64_t order) {
    if (order < 1) throw Error("order must be positive");
    if (dimension < 1 || dimension > kMaxDimension) throw Error("unsupported dimension " + std::to_string(dimension));
    std::int64_t power = 1;
    for (int a = 0; a < dimension; ++a) power *= order;
    return order * (power - 1) / 2;
}

MagicArray compose(std::span<const LatinArray> arrays) {
    if (arrays.empty()) throw Error("nothing to compose");
    const int d = arrays.front().dimension();
    const int n = arrays.front().order();
    if (static_cast<int>(arrays.size()) != d) {
        throw Error("composing a " + std::to_string(d) + "-dimensional array needs " + std::to_string(d) + " digit arrays");
    }
    for (const auto& a : arrays) {
        if (a.dimension() != d || a.order() != n) throw Error("digit arrays disagree on shape");
    }
    Grid out = Grid::filled(d, n);
    auto dst = out.mutable_values();
    for (std::size_t flat = 0; flat < dst.size(); ++flat) {
        std::int64_t value = 0;
        for (const auto& a : arrays) value = value * n + a.grid()[flat];
        dst[flat] = static_cast<std::int32_t>(value);
    }
    return MagicArray(std::move(out));
}

Grid extract_digit(const MagicArray& m, int q) {
    const int d = m.dimension();
    if (q < 1 || q > d) throw Error("digit index " + std::to_string(q) + " outside [1, " + std::to_string(d) + "]");
    const std::int64_t n = m.order();
    std::int64_t place = 1;
    for (int a = 0; a < d - q; ++a) place *= n;
    Grid out = m.grid();
    for (std::int32_t& v : out.mutable_values()) {
        std::int64_t digit = (std::int64_t{v} / place) % n;
        v = static_cast<std::int32_t>(digit < 0 ? digit + n : digit);
    }
    return out;
}

MagicArray shift_axis(const MagicArray& m, int axis, int amount) {
    return MagicArray(shift_axis(m.grid(), axis, amount), m.provenance());
}

MagicArray compose_checked(const std::vector<ParamVector>& vectors,
                           const std::optional<std::vector<SymbolPermutation>>& permutations) {
    std::optional<ParamMatrix> matrix;
    try {
        matrix.emplace(vectors);
    } catch (const Error& e) {
        throw HypothesisError(Hypothesis::shape, std::string("shape: ") + e.what());
    }
    for (const auto& v : vectors) {
        const ConstraintReport report = check(v);
        if (!report.feasible) {
            const Violation& first = report.violations.front();
            throw HypothesisError(Hypothesis::feasibility, "feasibility: " + v.to_string() + " violates " +
                                                               std::string(to_string(first.constraint)) + " mod " +
                                                               std::to_string(v.order()));
        }
    }
    if (!check_orthogonal_fast(*matrix)) {
        const Determinant det = determinant_mod(*matrix);
        throw HypothesisError(Hypothesis::orthogonality, "orthogonality: determinant " + std::to_string(det.value) +
                                                             " is not coprime to " + std::to_string(matrix->order()));
    }

    const int n = matrix->order();
    std::vector<SymbolPermutation> perms;
    if (permutations) {
        if (permutations->size() != vectors.size()) {
            throw HypothesisError(Hypothesis::shape, "shape: expected " + std::to_string(vectors.size()) + " permutations");
        }
        for (const auto& p : *permutations) {
            if (p.size() != n) throw HypothesisError(Hypothesis::shape, "shape: permutation size differs from order");
        }
        perms = *permutations;
    } else {
        perms.assign(vectors.size(), SymbolPermutation::identity(n));
    }

    std::vector<LatinArray> digits;
    digits.reserve(vectors.size());
    for (std::size_t q = 0; q < vectors.size(); ++q) digits.push_back(permute_symbols(build(vectors[q]), perms[q]));
    MagicArray composed = compose(digits);
    return MagicArray(composed.grid(), MagicProvenance{vectors, std::move(perms)});
}

namespace {

std::vector<std::vector<ParamVector>> orthogonal_families(int d, int n) {
    const std::vector<ParamVector> canonical = enumerate(d, n, true);
    std::vector<std::vector<ParamVector>> families;
    std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
    if (canonical.empty()) return families;
    // Odometer over canonical^d.
    while (true) {
        std::vector<ParamVector> rows;
        rows.reserve(pick.size());
        for (std::size_t p : pick) rows.push_back(canonical[p]);
        ParamMatrix m(rows);
        if (check_orthogonal_fast(m)) families.push_back(std::move(rows));
        std::size_t a = pick.size();
        while (a > 0) {
            --a;
            if (++pick[a] < canonical.size()) break;
            pick[a] = 0;
            if (a == 0) return families;
        }
    }
}

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
    return __builtin_mul_overflow(a, b, &out);
}

}  // namespace

ConstructionCount count_constructed(int dimension, int order, bool distinct) {
    if (dimension < kMinDimension || dimension > kMaxDimension) {
        throw Error("unsupported dimension " + std::to_string(dimension));
    }
    if (order < 2 || order > kMaxLatticeOrder) throw Error("order out of supported range");
    if (distinct && (dimension != 2 || order > 5)) {
        throw Error("distinct counting is supported for d = 2, n <= 5 only");
    }

    ConstructionCount count;
    std::uint64_t factorial = 1;
    for (int k = 2; k <= order; ++k) {
        if (mul_overflows(factorial, static_cast<std::uint64_t>(k), factorial)) throw Error("n! overflows 64 bits");
    }
    count.permutation_factor = 1;
    for (int q = 0; q < dimension; ++q) {
        if (mul_overflows(count.permutation_factor, factorial, count.permutation_factor)) {
            throw Error("(n!)^d overflows 64 bits; order out of supported range");
        }
    }

    const auto families = orthogonal_families(dimension, order);
    count.families = families.size();
    if (mul_overflows(count.families, count.permutation_factor, count.product)) {
        throw Error("construction count overflows 64 bits");
    }

    if (distinct) {
        const std::size_t n = static_cast<std::size_t>(order);
        std::vector<int> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        // A composed square is determined by its value string; order-5 values fit in a byte.
        std::set<std::string> seen;
        for (const auto& family : families) {
            const LatinArray first = build(family[0]);
            const LatinArray second = build(family[1]);
            std::vector<int> p1 = identity;
            do {
                std::vector<int> p2 = identity;
                do {
                    std::string key(first.grid().size(), '\0');
                    for (std::size_t flat = 0; flat < key.size(); ++flat) {
                        const int value = static_cast<int>(n) * p1[static_cast<std::size_t>(first.grid()[flat])] +
                                          p2[static_cast<std::size_t>(second.grid()[flat])];
                        key[flat] = static_cast<char>(value);
                    }
                    seen.insert(std::move(key));
                } while (std::next_permutation(p2.begin(), p2.end()));
            } while (std::next_permutation(p1.begin(), p1.end()));
        }
        count.distinct = seen.size();
    }
    return count;
}

}  // namespace pandiag
