#include "pandiag/lattice.hpp"

#include <charconv>

#include "pandiag/modarith.hpp"

namespace pandiag {

namespace {

std::size_t cell_count(int dimension, int order) {
    std::size_t count = 1;
    for (int a = 0; a < dimension; ++a) count *= static_cast<std::size_t>(order);
    return count;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view token, std::string_view context) {
    token = trim(token);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
        throw Error("malformed integer '" + std::string(token) + "' in '" + std::string(context) + "'");
    }
    return value;
}

}  // namespace

Grid::Grid(int dimension, int order, std::vector<std::int32_t> values)
    : dimension_(dimension), order_(order), values_(std::move(values)) {
    if (dimension < kMinDimension || dimension > kMaxDimension) {
        throw Error("unsupported dimension " + std::to_string(dimension));
    }
    if (order < 1 || order > kMaxLatticeOrder) {
        throw Error("order " + std::to_string(order) + " outside [1, " + std::to_string(kMaxLatticeOrder) + "]");
    }
    if (values_.size() != cell_count(dimension, order)) {
        throw Error("expected " + std::to_string(cell_count(dimension, order)) + " values, got " +
                    std::to_string(values_.size()));
    }
}

Grid Grid::filled(int dimension, int order, std::int32_t value) {
    if (dimension < kMinDimension || dimension > kMaxDimension || order < 1 || order > kMaxLatticeOrder) {
        throw Error("unsupported shape");
    }
    return Grid(dimension, order, std::vector<std::int32_t>(cell_count(dimension, order), value));
}

Coord Grid::coord(std::size_t flat) const noexcept {
    Coord c{};
    for (int a = dimension_ - 1; a >= 0; --a) {
        c[a] = static_cast<int>(flat % static_cast<std::size_t>(order_));
        flat /= static_cast<std::size_t>(order_);
    }
    return c;
}

SymbolPermutation::SymbolPermutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    if (n == 0) throw Error("empty permutation");
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= n) throw Error("permutation image " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v)]) throw Error("permutation is not a bijection: " + std::to_string(v) + " repeats");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

SymbolPermutation SymbolPermutation::identity(int n) { return shift(n, 0); }

SymbolPermutation SymbolPermutation::shift(int n, int amount) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) images[static_cast<std::size_t>(v)] = static_cast<int>(reduce(std::int64_t{v} + amount, n));
    return SymbolPermutation(std::move(images));
}

SymbolPermutation SymbolPermutation::multiply(int n, int factor) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) images[static_cast<std::size_t>(v)] = static_cast<int>(reduce(std::int64_t{v} * factor, n));
    return SymbolPermutation(std::move(images));
}

SymbolPermutation SymbolPermutation::after(const SymbolPermutation& first) const {
    if (first.size() != size()) throw Error("permutation sizes differ");
    std::vector<int> images(images_.size());
    for (std::size_t v = 0; v < images.size(); ++v) images[v] = (*this)(first(static_cast<int>(v)));
    return SymbolPermutation(std::move(images));
}

SymbolPermutation parse_permutation(std::string_view text) {
    std::vector<int> images;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        images.push_back(parse_int(text.substr(pos, comma - pos), text));
        pos = comma + 1;
    }
    return SymbolPermutation(std::move(images));
}

LatinArray::LatinArray(Grid grid, std::optional<ParamVector> provenance)
    : grid_(std::move(grid)), provenance_(std::move(provenance)) {
    const int n = grid_.order();
    for (std::int32_t v : grid_.values()) {
        if (v < 0 || v >= n) throw Error("symbol " + std::to_string(v) + " outside [0, " + std::to_string(n - 1) + "]");
    }
    if (provenance_ && (provenance_->order() != n || provenance_->dimension() != grid_.dimension())) {
        throw Error("provenance " + provenance_->to_string() + " does not match the array shape");
    }
}

char axis_name(int axis) {
    static constexpr char names[] = {'i', 'j', 'k', 'l'};
    if (axis < 0 || axis >= kMaxDimension) throw Error("axis out of range");
    return names[axis];
}

namespace {

int parse_axis(std::string_view s, std::string_view context) {
    s = trim(s);
    if (s.size() == 1) {
        for (int a = 0; a < kMaxDimension; ++a) {
            if (s[0] == axis_name(a)) return a;
        }
    }
    throw Error("unknown axis '" + std::string(s) + "' in slice term '" + std::string(context) + "'");
}

void bind(SliceSpec& spec, int axis, AxisBinding b, std::string_view term) {
    if (spec.axes[axis].kind != AxisBinding::Kind::free) {
        throw Error("axis " + std::string(1, axis_name(axis)) + " bound twice (term '" + std::string(term) + "')");
    }
    spec.axes[axis] = b;
}

}  // namespace

SliceSpec parse_slice_spec(std::string_view text, int dimension, int order) {
    SliceSpec spec;
    text = trim(text);
    if (text.empty()) return spec;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view term = trim(text.substr(pos, comma - pos));
        pos = comma + 1;

        const std::size_t eq = term.find('=');
        if (eq == std::string_view::npos) throw Error("slice term '" + std::string(term) + "' has no '='");
        const std::string_view lhs = trim(term.substr(0, eq));
        const std::string_view rhs = trim(term.substr(eq + 1));

        if (const std::size_t plus = lhs.find('+'); plus != std::string_view::npos) {
            int a = parse_axis(lhs.substr(0, plus), term);
            int b = parse_axis(lhs.substr(plus + 1), term);
            if (parse_int(rhs, term) != order - 1) {
                throw Error("anti-diagonal tie '" + std::string(term) + "' must sum to n - 1 = " + std::to_string(order - 1));
            }
            if (a == b) throw Error("tie '" + std::string(term) + "' references one axis twice");
            if (a > b) std::swap(a, b);
            bind(spec, a, {AxisBinding::Kind::anti, b}, term);
        } else if (!rhs.empty() && (rhs[0] == '-' || (rhs[0] >= '0' && rhs[0] <= '9'))) {
            const int a = parse_axis(lhs, term);
            bind(spec, a, {AxisBinding::Kind::fixed, parse_int(rhs, term)}, term);
        } else {
            int a = parse_axis(lhs, term);
            int b = parse_axis(rhs, term);
            if (a == b) throw Error("tie '" + std::string(term) + "' references one axis twice");
            if (a > b) std::swap(a, b);
            bind(spec, a, {AxisBinding::Kind::equal, b}, term);
        }
    }
    // Shape checks happen in plane_for; reject obviously foreign axes early.
    for (int a = dimension; a < kMaxDimension; ++a) {
        if (spec.axes[a].kind != AxisBinding::Kind::free) {
            throw Error("axis " + std::string(1, axis_name(a)) + " does not exist in dimension " + std::to_string(dimension));
        }
    }
    return spec;
}

PlaneMap plane_for(const SliceSpec& spec, int dimension, int order) {
    using Kind = AxisBinding::Kind;
    std::vector<int> free_axes;
    for (int a = 0; a < kMaxDimension; ++a) {
        const AxisBinding& b = spec.axes[a];
        if (a >= dimension) {
            if (b.kind != Kind::free) throw Error("binding on nonexistent axis " + std::string(1, axis_name(a)));
            continue;
        }
        switch (b.kind) {
            case Kind::free:
                free_axes.push_back(a);
                break;
            case Kind::fixed:
                if (b.value < 0 || b.value >= order) throw Error("fixed coordinate out of range");
                break;
            case Kind::equal:
            case Kind::anti:
                if (b.value < 0 || b.value >= dimension || b.value == a) throw Error("tie references an invalid axis");
                if (spec.axes[b.value].kind != Kind::free) throw Error("tie must reference a free axis");
                break;
        }
    }
    int row = 0, col = 0;
    if (spec.row_axis || spec.col_axis) {
        if (!spec.row_axis || !spec.col_axis || *spec.row_axis == *spec.col_axis) {
            throw Error("explicit free axes must name two distinct axes");
        }
        row = *spec.row_axis;
        col = *spec.col_axis;
        if (free_axes.size() != 2 || !((free_axes[0] == row && free_axes[1] == col) || (free_axes[0] == col && free_axes[1] == row))) {
            throw Error("explicit free axes must be the two unbound axes");
        }
    } else {
        if (free_axes.size() < 2) throw Error("slice is over-constrained: " + std::to_string(free_axes.size()) + " free axes");
        if (free_axes.size() > 2) throw Error("slice is under-constrained: " + std::to_string(free_axes.size()) + " free axes");
        row = free_axes[0];
        col = free_axes[1];
    }

    PlaneMap p;
    p.row_step[row] = 1;
    p.col_step[col] = 1;
    for (int a = 0; a < dimension; ++a) {
        const AxisBinding& b = spec.axes[a];
        if (b.kind == Kind::fixed) {
            p.origin[a] = b.value;
        } else if (b.kind == Kind::equal) {
            p.row_step[a] = p.row_step[b.value];
            p.col_step[a] = p.col_step[b.value];
        } else if (b.kind == Kind::anti) {
            p.origin[a] = order - 1;
            p.row_step[a] = -p.row_step[b.value];
            p.col_step[a] = -p.col_step[b.value];
        }
    }
    return p;
}

LatinArray build(const ParamVector& v) {
    const int d = v.dimension();
    const int n = v.order();
    if (n > kMaxLatticeOrder) throw Error("order " + std::to_string(n) + " too large to materialise");
    Grid g = Grid::filled(d, n);
    auto out = g.mutable_values();
    Coord c{};
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        std::int64_t sum = 0;
        for (int a = 0; a < d; ++a) sum += std::int64_t{v[static_cast<std::size_t>(a)]} * c[a];
        out[flat] = static_cast<std::int32_t>(sum % n);
        // Odometer increment, last axis fastest.
        for (int a = d - 1; a >= 0; --a) {
            if (++c[a] < n) break;
            c[a] = 0;
        }
    }
    return LatinArray(std::move(g), v);
}

std::vector<std::vector<std::int32_t>> slice(const Grid& g, const SliceSpec& spec) {
    const int n = g.order();
    const PlaneMap p = plane_for(spec, g.dimension(), n);
    std::vector<std::vector<std::int32_t>> out(static_cast<std::size_t>(n), std::vector<std::int32_t>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = g.at(p.at(r, c));
    }
    return out;
}

std::vector<std::vector<std::int32_t>> slice(const LatinArray& a, const SliceSpec& spec) { return slice(a.grid(), spec); }

LatinArray permute_symbols(const LatinArray& a, const SymbolPermutation& perm) {
    if (perm.size() != a.order()) throw Error("permutation size does not match the array order");
    Grid g = a.grid();
    for (std::int32_t& v : g.mutable_values()) v = perm(v);
    return LatinArray(std::move(g));
}

Grid shift_axis(const Grid& g, int axis, int amount) {
    if (axis < 0 || axis >= g.dimension()) throw Error("axis " + std::to_string(axis) + " out of range");
    const int n = g.order();
    const int step = static_cast<int>(reduce(amount, n));
    Grid out = g;
    auto dst = out.mutable_values();
    for (std::size_t flat = 0; flat < dst.size(); ++flat) {
        Coord c = g.coord(flat);
        c[axis] = (c[axis] + step) % n;
        dst[flat] = g.at(c);
    }
    return out;
}

LatinArray shift_axis(const LatinArray& a, int axis, int amount) { return LatinArray(shift_axis(a.grid(), axis, amount)); }

}  // namespace pandiag
