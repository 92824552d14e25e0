#include "pandiag/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pandiag/document.hpp"
#include "pandiag/lattice.hpp"
#include "pandiag/magic.hpp"
#include "pandiag/orthogonal.hpp"
#include "pandiag/params.hpp"
#include "pandiag/verify.hpp"

namespace pandiag::cli {

namespace {

// Raised for negative answers on well-formed input.
class Negative : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kDefaultCap3 = 101;
constexpr int kDefaultCap4 = 41;

void enforce_cap(int dimension, int order, bool force) {
    if (dimension < kMinDimension || dimension > kMaxDimension) {
        throw Error("unsupported dimension " + std::to_string(dimension));
    }
    if (order < 2) throw Error("order must be at least 2");
    if (order > kMaxLatticeOrder) {
        throw Error("order " + std::to_string(order) + " exceeds the hard limit " + std::to_string(kMaxLatticeOrder));
    }
    const int cap = dimension == 4 ? kDefaultCap4 : kDefaultCap3;
    if (order > cap && !force) {
        throw Error("order " + std::to_string(order) + " exceeds the default limit " + std::to_string(cap) +
                    " for dimension " + std::to_string(dimension) + "; pass --force to override");
    }
}

std::string read_text(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw Error("cannot open '" + path + "'");
        buf << file.rdbuf();
    }
    return buf.str();
}

void write_text(const std::string& path, std::ostream& out, const std::string& text) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error("cannot write '" + path + "'");
    file << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        parts.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return parts;
}

std::vector<ParamVector> parse_param_list(const std::string& text, int order) {
    std::vector<ParamVector> vectors;
    for (const auto& part : split(text, ';')) vectors.push_back(parse_param_vector(part, order));
    return vectors;
}

std::vector<SymbolPermutation> parse_perm_list(const std::string& text, int order) {
    std::vector<SymbolPermutation> perms;
    for (const auto& part : split(text, ';')) {
        if (part == "id" || part.empty()) {
            perms.push_back(SymbolPermutation::identity(order));
        } else {
            perms.push_back(parse_permutation(part));
        }
    }
    return perms;
}

std::string format_coord(const Coord& c, int dimension) {
    std::string s = "(";
    for (int a = 0; a < dimension; ++a) {
        if (a != 0) s += ',';
        s += std::to_string(c[a]);
    }
    return s + ")";
}

void print_report(std::ostream& os, const VerificationReport& r, int dimension) {
    os << to_string(r.property) << ": " << (r.passed ? "PASS" : "FAIL") << " (";
    if (r.magic_sum) os << "sum=" << *r.magic_sum << ", ";
    os << "lines=" << r.lines_checked << ", squares=" << r.squares_checked << ")\n";
    auto word = [](bool ok) { return ok ? "pass" : "fail"; };
    os << "grades: rows/columns=" << word(r.grades.rows_columns) << " main-diagonals=" << word(r.grades.main_diagonals)
       << " broken-diagonals=" << word(r.grades.broken_diagonals) << "\n";
    if (r.first_failure) {
        const Failure& f = *r.first_failure;
        os << "first failure: ";
        if (f.line) {
            os << "[" << f.line->square_label << "] " << to_string(f.line->kind) << " " << f.line->offset << ": "
               << f.reason << "; cells";
            for (const auto& c : f.line->cells) os << ' ' << format_coord(c, dimension);
        } else {
            os << f.reason;
        }
        os << "\n";
    }
}

std::string render(const Grid& g, const std::string& format, int offset) {
    if (format == "grid") return to_grid(g, offset);
    if (format == "csv") return to_csv(g, offset);
    throw Error("unknown format '" + format + "'");
}

struct Options {
    int dim = 0;
    int order = 0;
    std::string params;
    std::string params_list;
    std::string perms;
    std::string format = "json";
    std::string slice_spec;
    std::string input = "-";
    std::string output = "-";
    std::string expect;
    bool check = false;
    bool force = false;
    bool canonical = false;
    std::size_t limit = 0;
    int minimal_order_max = 0;
    bool fast = false;
    bool brute = false;
    bool one_based = false;
    bool distinct = false;
};

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
    const ParamVector v = parse_param_vector(o.params, o.order);
    if (v.dimension() != o.dim) {
        throw Error("--params has " + std::to_string(v.dimension()) + " components but --dim is " + std::to_string(o.dim));
    }
    enforce_cap(o.dim, o.order, o.force);
    const LatinArray a = build(v);

    std::string text;
    if (!o.slice_spec.empty()) {
        if (o.format == "json") throw Error("--slice needs --format grid or csv");
        const auto rows = slice(a, parse_slice_spec(o.slice_spec, o.dim, o.order));
        text = o.format == "csv" ? to_csv(rows) : to_grid(rows);
    } else if (o.format == "json") {
        ArrayDocument doc = make_document(a.grid());
        doc.kind = "latin";
        doc.params = std::vector<std::vector<int>>{std::vector<int>(v.alphas().begin(), v.alphas().end())};
        text = to_json(doc);
    } else {
        text = render(a.grid(), o.format, 0);
    }
    write_text(o.output, out, text);

    if (o.check) {
        const VerificationReport r = verify_latin_pandiagonal(a);
        print_report(err, r, o.dim);
        if (!r.passed) return kNegative;
    }
    return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    const ArrayDocument doc = parse_document(read_text(o.input, in));
    std::string expect = o.expect;
    if (expect.empty()) expect = doc.kind == std::optional<std::string>("magic") ? "magic-pandiagonal" : "latin-pandiagonal";
    const Grid g = doc.grid();
    VerificationReport r;
    if (expect == "latin-pandiagonal") {
        r = verify_latin_pandiagonal(g);
    } else if (expect == "magic-pandiagonal") {
        r = verify_magic_pandiagonal(g);
    } else {
        throw Error("--expect must be latin-pandiagonal or magic-pandiagonal");
    }
    print_report(out, r, g.dimension());
    return r.passed ? kOk : kNegative;
}

int cmd_search(const Options& o, std::ostream& out) {
    if (o.minimal_order_max > 0) {
        const auto n = minimal_order(o.dim, o.minimal_order_max);
        if (!n) {
            out << "no feasible order <= " << o.minimal_order_max << "\n";
            return kNegative;
        }
        out << "minimal order: " << *n << "\n";
        return kOk;
    }
    if (o.order == 0) throw Error("search needs --order or --minimal-order");
    enforce_cap(o.dim, o.order, o.force);
    const auto vectors = enumerate(o.dim, o.order, o.canonical);
    std::size_t shown = 0;
    for (const auto& v : vectors) {
        if (o.limit != 0 && shown == o.limit) break;
        for (std::size_t m = 0; m < v.alphas().size(); ++m) out << (m ? "," : "") << v.alphas()[m];
        out << "\n";
        ++shown;
    }
    out << vectors.size() << " feasible vectors\n";
    return vectors.empty() ? kNegative : kOk;
}

int cmd_orthogonal(const Options& o, std::ostream& out) {
    const auto vectors = parse_param_list(o.params_list, o.order);
    const ParamMatrix m(vectors);
    const bool want_fast = o.fast || !o.brute;
    const bool want_brute = o.brute || !o.fast;
    const Determinant det = determinant_mod(m);
    out << "determinant=" << det.value << " residue=" << det.residue.value() << "\n";

    bool all = true;
    std::optional<bool> fast, brute;
    if (want_fast) {
        try {
            fast = check_orthogonal_fast(m);
            out << "fast: " << (*fast ? "orthogonal" : "not orthogonal") << "\n";
        } catch (const Error& e) {
            out << "fast: " << e.what() << "\n";
            all = false;
        }
        if (fast) all = all && *fast;
    }
    if (want_brute) {
        enforce_cap(m.dimension(), m.order(), o.force);
        std::vector<LatinArray> arrays;
        for (const auto& v : vectors) arrays.push_back(build(v));
        brute = verify_orthogonal_brute(arrays);
        out << "brute: " << (*brute ? "orthogonal" : "not orthogonal") << "\n";
        all = all && *brute;
    }
    if (fast && brute && *fast != *brute) out << "warning: fast and brute-force checks disagree\n";
    return all ? kOk : kNegative;
}

int cmd_magic(const Options& o, std::ostream& out, std::ostream& err) {
    const auto vectors = parse_param_list(o.params_list, o.order);
    enforce_cap(vectors.front().dimension(), o.order, o.force);
    std::optional<std::vector<SymbolPermutation>> perms;
    if (!o.perms.empty()) perms = parse_perm_list(o.perms, o.order);

    MagicArray m = [&] {
        try {
            return compose_checked(vectors, perms);
        } catch (const HypothesisError& e) {
            if (e.hypothesis() == Hypothesis::shape) throw Error(e.what());
            throw Negative(e.what());
        }
    }();

    std::string text;
    if (o.format == "json") {
        ArrayDocument doc = make_document(m.grid());
        doc.kind = "magic";
        std::vector<std::vector<int>> params;
        for (const auto& v : vectors) params.emplace_back(v.alphas().begin(), v.alphas().end());
        doc.params = std::move(params);
        doc.nested_params = true;
        text = to_json(doc);
    } else {
        text = render(m.grid(), o.format, o.one_based ? 1 : 0);
    }
    write_text(o.output, out, text);

    if (o.check) {
        const VerificationReport r = verify_magic_pandiagonal(m);
        print_report(err, r, m.dimension());
        if (!r.passed) return kNegative;
    }
    return kOk;
}

int cmd_slice(const Options& o, std::istream& in, std::ostream& out) {
    const ArrayDocument doc = parse_document(read_text(o.input, in));
    const Grid g = doc.grid();
    const auto rows = slice(g, parse_slice_spec(o.slice_spec, g.dimension(), g.order()));
    const int offset = o.one_based ? 1 : 0;
    if (o.format == "csv") {
        write_text(o.output, out, to_csv(rows, offset));
    } else if (o.format == "grid" || o.format == "json") {
        write_text(o.output, out, to_grid(rows, offset));
    } else {
        throw Error("unknown format '" + o.format + "'");
    }
    return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
    const ConstructionCount c = count_constructed(o.dim, o.order, o.distinct);
    out << "families=" << c.families << " permutations=" << c.permutation_factor << " product=" << c.product;
    if (c.distinct) out << " distinct=" << *c.distinct;
    out << "\n";
    return c.families == 0 ? kNegative : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pandiagonal latin and magic squares, cubes and 4-D hypercubes from linear forms", "pandiag"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("generate", "Build the array of a parameter vector");
    gen->add_option("--dim", o.dim, "Dimension (2, 3 or 4)")->required();
    gen->add_option("--order", o.order, "Order n")->required();
    gen->add_option("--params", o.params, "Comma-separated coefficients, e.g. 1,2,7")->required();
    gen->add_option("--format", o.format, "json, grid or csv")->check(CLI::IsMember({"json", "grid", "csv"}));
    gen->add_option("--slice", o.slice_spec, "Planar section, e.g. k=2 or i=j or i=2,j+k=16");
    gen->add_option("-o,--output", o.output, "Output file ('-' for stdout)");
    gen->add_flag("--check", o.check, "Verify pandiagonality; report goes to stderr");
    gen->add_flag("--force", o.force, "Lift the default size limits");

    auto* ver = app.add_subcommand("verify", "Verify a document by exhaustive line enumeration");
    ver->add_option("input", o.input, "Document file ('-' for stdin)");
    ver->add_option("--expect", o.expect, "latin-pandiagonal or magic-pandiagonal")
        ->check(CLI::IsMember({"latin-pandiagonal", "magic-pandiagonal"}));

    auto* sea = app.add_subcommand("search", "Enumerate feasible parameter vectors");
    sea->add_option("--dim", o.dim, "Dimension (2, 3 or 4)")->required();
    sea->add_option("--order", o.order, "Order n");
    sea->add_flag("--canonical", o.canonical, "Only vectors whose first component is 1");
    sea->add_option("--limit", o.limit, "Print at most this many vectors (0 = all)");
    sea->add_option("--minimal-order", o.minimal_order_max, "Report the smallest feasible order up to this bound");
    sea->add_flag("--force", o.force, "Lift the default size limits");

    auto* ort = app.add_subcommand("orthogonal", "Test a family of vectors for orthogonality");
    ort->add_option("--order", o.order, "Order n")->required();
    ort->add_option("--params-list", o.params_list, "Vectors separated by ';', e.g. 1,2;1,3")->required();
    ort->add_flag("--fast", o.fast, "Determinant test");
    ort->add_flag("--brute", o.brute, "Superposition test");
    ort->add_flag("--force", o.force, "Lift the default size limits");

    auto* mag = app.add_subcommand("magic", "Compose an orthogonal family into a magic array");
    mag->add_option("--order", o.order, "Order n")->required();
    mag->add_option("--params-list", o.params_list, "Vectors separated by ';', most significant digit first")->required();
    mag->add_option("--perms", o.perms, "Symbol permutations per digit array, ';'-separated images or 'id'");
    mag->add_option("--format", o.format, "json, grid or csv")->check(CLI::IsMember({"json", "grid", "csv"}));
    mag->add_flag("--one-based", o.one_based, "Add 1 to every printed value (grid and csv only)");
    mag->add_option("-o,--output", o.output, "Output file ('-' for stdout)");
    mag->add_flag("--check", o.check, "Verify the composed array; report goes to stderr");
    mag->add_flag("--force", o.force, "Lift the default size limits");

    auto* sli = app.add_subcommand("slice", "Print a planar section of a document");
    sli->add_option("input", o.input, "Document file ('-' for stdin)");
    sli->add_option("--spec", o.slice_spec, "Section, e.g. k=2 or i=j or i=2,j+k=16")->required();
    sli->add_option("--format", o.format, "grid or csv")->check(CLI::IsMember({"json", "grid", "csv"}));
    sli->add_flag("--one-based", o.one_based, "Add 1 to every printed value");
    sli->add_option("-o,--output", o.output, "Output file ('-' for stdout)");

    auto* cnt = app.add_subcommand("count", "Count arrays obtainable by the construction");
    cnt->add_option("--dim", o.dim, "Dimension")->required();
    cnt->add_option("--order", o.order, "Order n")->required();
    cnt->add_flag("--distinct", o.distinct, "Materialise and deduplicate (d = 2, n <= 5)");

    std::vector<std::string> argv_storage{"pandiag"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(o, out, err);
        if (ver->parsed()) return cmd_verify(o, in, out);
        if (sea->parsed()) return cmd_search(o, out);
        if (ort->parsed()) return cmd_orthogonal(o, out);
        if (mag->parsed()) return cmd_magic(o, out, err);
        if (sli->parsed()) {
            if (o.format == "json") o.format = "grid";
            return cmd_slice(o, in, out);
        }
        if (cnt->parsed()) return cmd_count(o, out);
    } catch (const Negative& e) {
        err << "pandiag: " << e.what() << "\n";
        return kNegative;
    } catch (const std::exception& e) {
        err << "pandiag: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace pandiag::cli
