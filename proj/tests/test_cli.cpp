#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "pandiag/cli.hpp"
#include "pandiag/document.hpp"

using namespace pandiag;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("generate prints a section") {
    const Result r = run({"generate", "--dim", "3", "--order", "11", "--params", "1,2,7", "--format", "grid", "--slice", "k=2"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.rfind("3 5 7 9 0 2 4 6 8 10 1\n4 6 8", 0) == 0);
}

TEST_CASE("generate --check reports to stderr") {
    const Result ok = run({"generate", "--dim", "2", "--order", "5", "--params", "1,2", "--check"});
    CHECK(ok.code == cli::kOk);
    CHECK(contains(ok.err, "pandiagonal-latin: PASS"));
    CHECK(parse_document(ok.out).kind == std::optional<std::string>("latin"));

    const Result bad = run({"generate", "--dim", "2", "--order", "5", "--params", "1,4", "--check"});
    CHECK(bad.code == cli::kNegative);
    CHECK(contains(bad.err, "first failure:"));
}

TEST_CASE("generate usage errors") {
    CHECK(run({"generate", "--dim", "3", "--order", "11", "--params", "1,2"}).code == cli::kUsage);
    CHECK(run({"generate", "--dim", "2", "--order", "5", "--params", "1,x"}).code == cli::kUsage);
    CHECK(run({"generate", "--dim", "2", "--order", "5"}).code == cli::kUsage);
    CHECK(run({"generate", "--dim", "2", "--order", "5", "--params", "1,2", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"generate", "--dim", "4", "--order", "43", "--params", "1,2,4,8"}).code == cli::kUsage);
    CHECK(run({"generate", "--dim", "2", "--order", "103", "--params", "1,2", "--force"}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("verify reads documents from stdin") {
    const std::string square = "13 19 20 1 7\n21 2 8 14 15\n9 10 16 22 3\n17 23 4 5 11\n0 6 12 18 24\n";
    const Result r = run({"verify", "--expect", "magic-pandiagonal"}, square);
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "pandiagonal-magic: PASS (sum=60, lines=20, squares=1)"));

    const Result latin = run({"verify"}, square);
    CHECK(latin.code == cli::kNegative);
    CHECK(contains(latin.out, "out of range"));

    const std::string order4 = "0 10 15 5\n7 13 8 2\n9 3 6 12\n14 4 1 11\n";
    const Result four = run({"verify", "--expect", "magic-pandiagonal"}, order4);
    CHECK(four.code == cli::kNegative);
    CHECK(contains(four.out, "grades: rows/columns=pass main-diagonals=pass broken-diagonals=fail"));

    CHECK(run({"verify"}, "0 1\n1\n").code == cli::kUsage);
    CHECK(run({"verify", "/nonexistent/file"}).code == cli::kUsage);
}

TEST_CASE("generated documents verify") {
    const Result g = run({"generate", "--dim", "3", "--order", "11", "--params", "1,2,7"});
    REQUIRE(g.code == cli::kOk);
    const Result v = run({"verify"}, g.out);
    CHECK(v.code == cli::kOk);
    CHECK(contains(v.out, "pandiagonal-latin: PASS (lines=1716, squares=39)"));
}

TEST_CASE("search") {
    const Result none = run({"search", "--dim", "4", "--order", "13"});
    CHECK(none.code == cli::kNegative);
    CHECK(none.out == "0 feasible vectors\n");

    const Result pairs = run({"search", "--dim", "2", "--order", "5", "--canonical"});
    CHECK(pairs.code == cli::kOk);
    CHECK(pairs.out == "1,2\n1,3\n2 feasible vectors\n");

    const Result limited = run({"search", "--dim", "3", "--order", "11", "--limit", "1"});
    CHECK(limited.code == cli::kOk);
    CHECK(std::count(limited.out.begin(), limited.out.end(), '\n') == 2);

    const Result minimal = run({"search", "--dim", "4", "--minimal-order", "20"});
    CHECK(minimal.code == cli::kOk);
    CHECK(minimal.out == "minimal order: 17\n");

    CHECK(run({"search", "--dim", "4", "--minimal-order", "16"}).code == cli::kNegative);
    CHECK(run({"search", "--dim", "5", "--order", "13"}).code == cli::kUsage);
}

TEST_CASE("orthogonal") {
    const Result yes = run({"orthogonal", "--order", "17", "--params-list", "1,2,4,8;1,2,4,9;1,2,8,4;1,4,9,2"});
    CHECK(yes.code == cli::kOk);
    CHECK(contains(yes.out, "determinant=-8 residue=9"));
    CHECK(contains(yes.out, "fast: orthogonal"));

    const Result no = run({"orthogonal", "--order", "11", "--params-list", "1,2,5;1,2,6;1,2,7", "--fast", "--brute"});
    CHECK(no.code == cli::kNegative);
    CHECK(contains(no.out, "fast: not orthogonal"));
    CHECK(contains(no.out, "brute: not orthogonal"));

    CHECK(run({"orthogonal", "--order", "5", "--params-list", "1,2;1,3,4"}).code == cli::kUsage);
}

TEST_CASE("magic") {
    const Result m = run({"magic", "--order", "5", "--params-list", "1,2;1,3", "--format", "grid", "--check"});
    CHECK(m.code == cli::kOk);
    CHECK(contains(m.err, "pandiagonal-magic: PASS (sum=60"));
    CHECK(run({"verify", "--expect", "magic-pandiagonal"}, m.out).code == cli::kOk);

    const Result one = run({"magic", "--order", "5", "--params-list", "1,2;1,3", "--format", "grid", "--one-based"});
    CHECK(one.code == cli::kOk);
    CHECK(!contains(one.out, " 0 "));

    const Result json = run({"magic", "--order", "5", "--params-list", "1,2;1,3", "--perms", "1,2,3,4,0;id"});
    CHECK(json.code == cli::kOk);
    const ArrayDocument doc = parse_document(json.out);
    CHECK(doc.kind == std::optional<std::string>("magic"));
    CHECK(doc.nested_params);
    CHECK(run({"verify"}, json.out).code == cli::kOk);

    const Result bad = run({"magic", "--order", "5", "--params-list", "1,2;2,4"});
    CHECK(bad.code == cli::kNegative);
    CHECK(contains(bad.err, "orthogonality"));
    CHECK(run({"magic", "--order", "5", "--params-list", "1,2;1,4"}).code == cli::kNegative);
    CHECK(run({"magic", "--order", "5", "--params-list", "1,2"}).code == cli::kUsage);
    CHECK(run({"magic", "--order", "5", "--params-list", "1,2;1,3", "--perms", "0,0,1,2,3;id"}).code == cli::kUsage);
}

TEST_CASE("slice") {
    const Result g = run({"generate", "--dim", "4", "--order", "17", "--params", "1,2,4,9"});
    REQUIRE(g.code == cli::kOk);
    const Result s = run({"slice", "--spec", "i=2,j+k=16"}, g.out);
    CHECK(s.code == cli::kOk);
    CHECK(s.out.rfind("0 9 1 10 2 11 3 12 4 13 5 14 6 15 7 16 8\n2 11 3", 0) == 0);
    CHECK(run({"slice", "--spec", "i=2"}, g.out).code == cli::kUsage);
}

TEST_CASE("count") {
    const Result c = run({"count", "--dim", "2", "--order", "5"});
    CHECK(c.code == cli::kOk);
    CHECK(c.out == "families=2 permutations=14400 product=28800\n");
    CHECK(run({"count", "--dim", "3", "--order", "7"}).code == cli::kNegative);
    CHECK(run({"count", "--dim", "2", "--order", "7", "--distinct"}).code == cli::kUsage);
}

TEST_CASE("help exits cleanly") {
    const Result h = run({"--help"});
    CHECK(h.code == cli::kOk);
    CHECK(contains(h.out, "generate"));
}
