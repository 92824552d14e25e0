#include "pandiag/document.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pandiag {

using nlohmann::json;

ArrayDocument make_document(const Grid& g) {
    ArrayDocument doc;
    doc.dimension = g.dimension();
    doc.order = g.order();
    doc.values.assign(g.values().begin(), g.values().end());
    return doc;
}

std::string to_json(const ArrayDocument& doc) {
    json j;
    j["dimension"] = doc.dimension;
    j["order"] = doc.order;
    j["values"] = doc.values;
    if (doc.kind) j["kind"] = *doc.kind;
    if (doc.params) {
        if (doc.nested_params) {
            j["params"] = *doc.params;
        } else if (doc.params->size() == 1) {
            j["params"] = doc.params->front();
        } else {
            throw Error("flat params must hold exactly one vector");
        }
    }
    return j.dump() + "\n";
}

namespace {

std::string render_rows(const std::vector<std::vector<std::int32_t>>& rows, char sep, int offset) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) out += sep;
            out += std::to_string(std::int64_t{row[c]} + offset);
        }
        out += '\n';
    }
    return out;
}

std::string render_blocks(const Grid& g, char sep, int offset) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    const std::size_t block = n * n;
    std::string out;
    for (std::size_t start = 0; start < g.size(); start += block) {
        if (start != 0) out += '\n';
        std::vector<std::vector<std::int32_t>> rows(n, std::vector<std::int32_t>(n));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) rows[r][c] = g[start + r * n + c];
        }
        out += render_rows(rows, sep, offset);
    }
    return out;
}

int as_int(const json& j, const char* key) {
    if (!j.is_number_integer()) throw Error(std::string("field '") + key + "' must be an integer");
    return j.get<int>();
}

ArrayDocument parse_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(std::string("malformed JSON document: ") + e.what());
    }
    if (!j.is_object()) throw Error("document must be a JSON object");
    static const std::set<std::string> known{"dimension", "order", "values", "params", "kind"};
    for (const auto& [key, _] : j.items()) {
        if (!known.contains(key)) throw Error("unknown document field '" + key + "'");
    }
    for (const char* key : {"dimension", "order", "values"}) {
        if (!j.contains(key)) throw Error(std::string("document lacks '") + key + "'");
    }

    ArrayDocument doc;
    doc.dimension = as_int(j["dimension"], "dimension");
    doc.order = as_int(j["order"], "order");
    if (!j["values"].is_array()) throw Error("field 'values' must be an array");
    doc.values.reserve(j["values"].size());
    for (const auto& v : j["values"]) {
        if (!v.is_number_integer()) throw Error("field 'values' must hold integers");
        const auto x = v.get<std::int64_t>();
        if (x < INT32_MIN || x > INT32_MAX) throw Error("value out of 32-bit range");
        doc.values.push_back(static_cast<std::int32_t>(x));
    }
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) throw Error("field 'kind' must be a string");
        doc.kind = j["kind"].get<std::string>();
        if (*doc.kind != "latin" && *doc.kind != "magic") throw Error("kind must be 'latin' or 'magic'");
    }
    if (j.contains("params")) {
        const json& p = j["params"];
        if (!p.is_array() || p.empty()) throw Error("field 'params' must be a non-empty array");
        std::vector<std::vector<int>> params;
        if (p.front().is_array()) {
            doc.nested_params = true;
            for (const auto& row : p) {
                if (!row.is_array()) throw Error("field 'params' mixes lists and integers");
                std::vector<int> r;
                for (const auto& x : row) r.push_back(as_int(x, "params"));
                params.push_back(std::move(r));
            }
        } else {
            std::vector<int> r;
            for (const auto& x : p) r.push_back(as_int(x, "params"));
            params.push_back(std::move(r));
        }
        doc.params = std::move(params);
    }
    (void)doc.grid();  // shape validation
    return doc;
}

ArrayDocument parse_plain(std::string_view text) {
    std::vector<std::vector<std::int32_t>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::int32_t> row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',' || line[pos] == '\r')) ++pos;
            if (pos >= line.size()) break;
            std::int32_t v = 0;
            auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
            if (ec != std::errc{}) throw Error("malformed value in line '" + line + "'");
            pos = static_cast<std::size_t>(end - line.data());
            if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != ',' && line[pos] != '\r') {
                throw Error("malformed value in line '" + line + "'");
            }
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error("empty document");
    const std::size_t n = rows.front().size();
    ArrayDocument doc;
    doc.order = static_cast<int>(n);
    std::size_t expected = n;
    doc.dimension = 0;
    for (int d = 2; d <= kMaxDimension; ++d) {
        if (rows.size() == expected) {
            doc.dimension = d;
            break;
        }
        expected *= n;
    }
    if (doc.dimension == 0) throw Error("row count " + std::to_string(rows.size()) + " does not match any n^(d-1)");
    for (auto& r : rows) {
        if (r.size() != n) throw Error("ragged rows: expected " + std::to_string(n) + " values per row");
        doc.values.insert(doc.values.end(), r.begin(), r.end());
    }
    (void)doc.grid();
    return doc;
}

}  // namespace

std::string to_grid(const Grid& g, int offset) { return render_blocks(g, ' ', offset); }
std::string to_csv(const Grid& g, int offset) { return render_blocks(g, ',', offset); }
std::string to_grid(const std::vector<std::vector<std::int32_t>>& rows, int offset) { return render_rows(rows, ' ', offset); }
std::string to_csv(const std::vector<std::vector<std::int32_t>>& rows, int offset) { return render_rows(rows, ',', offset); }

ArrayDocument parse_document(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw Error("empty document");
    return text[first] == '{' ? parse_json(text) : parse_plain(text);
}

}  // namespace pandiag
