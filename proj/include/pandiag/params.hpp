#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pandiag/error.hpp"

namespace pandiag {

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 4;

// Coefficients (a1..ad) of the linear form a1*i1 + ... + ad*id (mod n).
// Every coefficient lies in [1, n-1].
class ParamVector {
public:
    ParamVector(int order, std::vector<int> alphas);

    int dimension() const noexcept { return static_cast<int>(alphas_.size()); }
    int order() const noexcept { return order_; }
    std::span<const int> alphas() const noexcept { return alphas_; }
    int operator[](std::size_t m) const { return alphas_.at(m); }

    std::string to_string() const;  // "<1,2,7>"

    friend bool operator==(const ParamVector&, const ParamVector&) = default;
    friend auto operator<=>(const ParamVector&, const ParamVector&) = default;

private:
    int order_;
    std::vector<int> alphas_;
};

// Parses "1,2,7" into a vector of the given order.
ParamVector parse_param_vector(std::string_view text, int order);

// Each kind names one family of coprimality conditions. S is the sum of all
// coefficients; m, m' are distinct component indices.
enum class Constraint {
    component,                // gcd(a_m, n) = 1
    pair_sum,                 // gcd(a_m + a_m', n) = 1
    pair_difference,          // gcd(a_m - a_m', n) = 1
    total_minus_component,    // gcd(S - a_m, n) = 1               (d = 4)
    total,                    // gcd(S, n) = 1                     (d >= 3)
    total_minus_twice,        // gcd(S - 2 a_m, n) = 1             (d >= 3)
    total_minus_one_twice,    // gcd(S - a_m' - 2 a_m, n) = 1      (d = 4, ordered)
    total_minus_twice_pair,   // gcd(S - 2 a_m' - 2 a_m, n) = 1    (d = 4)
};

std::string_view to_string(Constraint c);

struct Violation {
    Constraint constraint;
    std::vector<int> components;  // 1-based indices involved, in the order used by the expression
    std::int64_t value;           // offending expression reduced mod n
    std::uint64_t gcd;            // gcd(value, n), always > 1

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ConstraintReport {
    bool feasible = true;
    std::vector<Violation> violations;

    bool violates(Constraint c) const;
};

ConstraintReport check_pair(const ParamVector& v);
ConstraintReport check_triple(const ParamVector& v);
ConstraintReport check_quad(const ParamVector& v);
// Dispatches on v.dimension().
ConstraintReport check(const ParamVector& v);

// Multiplies every component by a1^-1 mod n, giving a vector that starts with 1.
ParamVector canonicalize(const ParamVector& v);

// Multiplies every component by k mod n. Requires k in [1, n-1] and gcd(k, n) = 1.
ParamVector scale(const ParamVector& v, int k);

// All feasible vectors in lexicographic order; canonical_only restricts to a1 = 1.
std::vector<ParamVector> enumerate(int dimension, int order, bool canonical_only);

// Smallest n in [2, n_max] with at least one feasible vector of this dimension.
std::optional<int> minimal_order(int dimension, int n_max);

}  // namespace pandiag
