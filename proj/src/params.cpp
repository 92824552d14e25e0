#include "pandiag/params.hpp"

#include <charconv>
#include <numeric>

#include "pandiag/modarith.hpp"

namespace pandiag {

ParamVector::ParamVector(int order, std::vector<int> alphas) : order_(order), alphas_(std::move(alphas)) {
    if (order < 2 || order > kMaxModulus) {
        throw Error("order " + std::to_string(order) + " outside [2, " + std::to_string(kMaxModulus) + "]");
    }
    if (dimension() < kMinDimension || dimension() > kMaxDimension) {
        throw Error("parameter vector must have 2, 3 or 4 components, got " + std::to_string(dimension()));
    }
    for (int a : alphas_) {
        if (a < 1 || a >= order) {
            throw Error("parameter " + std::to_string(a) + " outside [1, " + std::to_string(order - 1) + "]");
        }
    }
}

std::string ParamVector::to_string() const {
    std::string s = "<";
    for (std::size_t m = 0; m < alphas_.size(); ++m) {
        if (m != 0) s += ',';
        s += std::to_string(alphas_[m]);
    }
    return s + ">";
}

ParamVector parse_param_vector(std::string_view text, int order) {
    std::vector<int> alphas;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
            throw Error("malformed parameter list '" + std::string(text) + "'");
        }
        alphas.push_back(value);
        pos = comma + 1;
    }
    return ParamVector(order, std::move(alphas));
}

std::string_view to_string(Constraint c) {
    switch (c) {
        case Constraint::component: return "component";
        case Constraint::pair_sum: return "pair-sum";
        case Constraint::pair_difference: return "pair-difference";
        case Constraint::total_minus_component: return "total-minus-component";
        case Constraint::total: return "total";
        case Constraint::total_minus_twice: return "total-minus-twice";
        case Constraint::total_minus_one_twice: return "total-minus-one-twice";
        case Constraint::total_minus_twice_pair: return "total-minus-twice-pair";
    }
    return "unknown";
}

bool ConstraintReport::violates(Constraint c) const {
    for (const auto& v : violations) {
        if (v.constraint == c) return true;
    }
    return false;
}

namespace {

// Calls visit(constraint, components, value) for every condition of the system
// for this dimension. Stops early when visit returns false.
template <class Visit>
void visit_conditions(std::span<const int> a, Visit&& visit) {
    const int d = static_cast<int>(a.size());
    const std::int64_t total = std::accumulate(a.begin(), a.end(), std::int64_t{0});

    for (int m = 0; m < d; ++m) {
        if (!visit(Constraint::component, {m + 1}, std::int64_t{a[m]})) return;
    }
    for (int m = 0; m < d; ++m) {
        for (int q = m + 1; q < d; ++q) {
            if (!visit(Constraint::pair_sum, {m + 1, q + 1}, std::int64_t{a[m]} + a[q])) return;
        }
    }
    for (int m = 0; m < d; ++m) {
        for (int q = m + 1; q < d; ++q) {
            if (!visit(Constraint::pair_difference, {m + 1, q + 1}, std::int64_t{a[m]} - a[q])) return;
        }
    }
    if (d == 2) return;

    if (d == 4) {
        for (int m = 0; m < d; ++m) {
            if (!visit(Constraint::total_minus_component, {m + 1}, total - a[m])) return;
        }
    }
    if (!visit(Constraint::total, {}, total)) return;
    for (int m = 0; m < d; ++m) {
        if (!visit(Constraint::total_minus_twice, {m + 1}, total - 2 * std::int64_t{a[m]})) return;
    }
    if (d == 3) return;

    for (int m = 0; m < d; ++m) {
        for (int q = 0; q < d; ++q) {
            if (q == m) continue;
            if (!visit(Constraint::total_minus_one_twice, {m + 1, q + 1}, total - a[q] - 2 * std::int64_t{a[m]})) {
                return;
            }
        }
    }
    for (int m = 0; m < d; ++m) {
        for (int q = m + 1; q < d; ++q) {
            if (!visit(Constraint::total_minus_twice_pair, {m + 1, q + 1},
                       total - 2 * std::int64_t{a[q]} - 2 * std::int64_t{a[m]})) {
                return;
            }
        }
    }
}

ConstraintReport check_impl(const ParamVector& v) {
    ConstraintReport report;
    const std::int64_t n = v.order();
    visit_conditions(v.alphas(), [&](Constraint c, std::initializer_list<int> comps, std::int64_t value) {
        const std::int64_t r = reduce(value, n);
        const std::uint64_t g = gcd(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(n));
        if (g != 1) {
            report.violations.push_back(Violation{c, std::vector<int>(comps), r, g});
        }
        return true;
    });
    report.feasible = report.violations.empty();
    return report;
}

void require_dimension(const ParamVector& v, int d) {
    if (v.dimension() != d) {
        throw Error("expected a " + std::to_string(d) + "-component vector, got " + v.to_string());
    }
}

}  // namespace

ConstraintReport check_pair(const ParamVector& v) {
    require_dimension(v, 2);
    return check_impl(v);
}

ConstraintReport check_triple(const ParamVector& v) {
    require_dimension(v, 3);
    return check_impl(v);
}

ConstraintReport check_quad(const ParamVector& v) {
    require_dimension(v, 4);
    return check_impl(v);
}

ConstraintReport check(const ParamVector& v) { return check_impl(v); }

ParamVector canonicalize(const ParamVector& v) {
    const std::int64_t n = v.order();
    const std::int64_t inv = mod_inverse(v[0], n).value();
    std::vector<int> out;
    out.reserve(v.alphas().size());
    for (int a : v.alphas()) out.push_back(static_cast<int>(reduce(inv * a, n)));
    return ParamVector(v.order(), std::move(out));
}

ParamVector scale(const ParamVector& v, int k) {
    const std::int64_t n = v.order();
    if (k < 1 || k >= n || !coprime(k, n)) {
        throw Error("scale factor " + std::to_string(k) + " is not a unit mod " + std::to_string(n));
    }
    std::vector<int> out;
    out.reserve(v.alphas().size());
    for (int a : v.alphas()) out.push_back(static_cast<int>(reduce(std::int64_t{k} * a, n)));
    return ParamVector(v.order(), std::move(out));
}

namespace {

struct Enumerator {
    int d;
    int n;
    bool canonical_only;
    std::vector<char> unit;  // unit[r] == 1 iff gcd(r, n) == 1, for r in [0, n)
    std::vector<int> prefix;
    std::vector<ParamVector> out;

    bool is_unit(std::int64_t value) const {
        std::int64_t r = value % n;
        if (r < 0) r += n;
        return unit[static_cast<std::size_t>(r)] != 0;
    }

    // Rejects a new last component against the earlier ones using only the
    // pairwise conditions; the full system runs at the leaf.
    bool prefix_ok() const {
        const int m = static_cast<int>(prefix.size()) - 1;
        if (!is_unit(prefix[m])) return false;
        for (int q = 0; q < m; ++q) {
            if (!is_unit(prefix[q] + prefix[m]) || !is_unit(prefix[q] - prefix[m])) return false;
        }
        return true;
    }

    void run() {
        if (static_cast<int>(prefix.size()) == d) {
            bool ok = true;
            visit_conditions(prefix, [&](Constraint, std::initializer_list<int>, std::int64_t value) {
                ok = is_unit(value);
                return ok;
            });
            if (ok) out.emplace_back(n, prefix);
            return;
        }
        const int hi = (prefix.empty() && canonical_only) ? 1 : n - 1;
        for (int a = 1; a <= hi; ++a) {
            prefix.push_back(a);
            if (prefix_ok()) run();
            prefix.pop_back();
        }
    }
};

}  // namespace

std::vector<ParamVector> enumerate(int dimension, int order, bool canonical_only) {
    if (dimension < kMinDimension || dimension > kMaxDimension) {
        throw Error("unsupported dimension " + std::to_string(dimension));
    }
    if (order < 2 || order > kMaxModulus) {
        throw Error("order " + std::to_string(order) + " outside [2, " + std::to_string(kMaxModulus) + "]");
    }
    Enumerator e{dimension, order, canonical_only, std::vector<char>(static_cast<std::size_t>(order)), {}, {}};
    for (int r = 0; r < order; ++r) {
        e.unit[static_cast<std::size_t>(r)] = gcd(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(order)) == 1;
    }
    e.run();
    return std::move(e.out);
}

std::optional<int> minimal_order(int dimension, int n_max) {
    if (n_max < 2) {
        throw Error("n_max must be at least 2");
    }
    for (int n = 2; n <= n_max; ++n) {
        if (!enumerate(dimension, n, true).empty()) return n;
    }
    return std::nullopt;
}

}  // namespace pandiag
