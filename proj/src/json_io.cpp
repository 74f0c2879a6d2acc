#include "ivif/json_io.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ivif {

namespace {

using ordered_json = nlohmann::ordered_json;

// 0 and 1 print as integers; everything else keeps the shortest decimal
// form that parses back to the same double
ordered_json bound_json(double v) {
    if (v == 0.0)
        return ordered_json(0);
    if (v == 1.0)
        return ordered_json(1);
    return ordered_json(v);
}

ordered_json interval_json(const UnitInterval& u) {
    return ordered_json::array({bound_json(u.lo()), bound_json(u.hi())});
}

ordered_json value_json(const Value& v) {
    ordered_json o;
    o["mu"] = interval_json(v.mu());
    o["nu"] = interval_json(v.nu());
    return o;
}

ordered_json parse_document(std::string_view doc) {
    try {
        return ordered_json::parse(doc);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
}

void require_keys(const ordered_json& obj, std::initializer_list<const char*> keys,
                  const char* what) {
    for (const char* key : keys)
        if (!obj.contains(key))
            throw ParseError(std::string(what) + " is missing \"" + key + "\"");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : keys)
            known = known || item.key() == key;
        if (!known)
            throw ParseError(std::string(what) + " has an unknown key \"" + item.key() + "\"");
    }
}

std::size_t read_extent(const ordered_json& doc, const char* key) {
    const auto& v = doc.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
        throw ParseError(std::string("\"") + key + "\" must be a positive integer");
    return v.get<std::size_t>();
}

double read_bound(const ordered_json& v) {
    if (!v.is_number())
        throw ParseError("interval bounds must be numbers");
    return v.get<double>();
}

UnitInterval read_interval(const ordered_json& v, const char* key) {
    if (!v.is_array() || v.size() != 2)
        throw ParseError(std::string("\"") + key + "\" must be a [lo, hi] pair");
    return UnitInterval(read_bound(v[0]), read_bound(v[1]));
}

Value read_value(const ordered_json& v) {
    if (!v.is_object())
        throw ParseError("entries must be objects");
    require_keys(v, {"mu", "nu"}, "an entry");
    return Value(read_interval(v.at("mu"), "mu"), read_interval(v.at("nu"), "nu"));
}

} // namespace

std::string write_matrix(const Matrix& a) {
    ordered_json doc;
    doc["rows"] = a.rows();
    doc["cols"] = a.cols();
    auto rows = ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = ordered_json::array();
        for (std::size_t j = 0; j < a.cols(); ++j)
            row.push_back(value_json(a(i, j)));
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc.dump();
}

Matrix read_matrix(std::string_view doc_text) {
    const ordered_json doc = parse_document(doc_text);
    if (!doc.is_object())
        throw ParseError("the document must be a JSON object");
    require_keys(doc, {"rows", "cols", "entries"}, "the document");
    const std::size_t rows = read_extent(doc, "rows");
    const std::size_t cols = read_extent(doc, "cols");
    if (rows > 4096 || cols > 4096)
        throw ParseError("matrix extents beyond 4096 are not supported");

    const auto& entries = doc.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("\"entries\" must be an array of " + std::to_string(rows) + " rows");
    std::vector<Value> cells;
    cells.reserve(rows * cols);
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != cols)
            throw ParseError("every row must be an array of " + std::to_string(cols) +
                             " entries");
        for (const auto& cell : row)
            cells.push_back(read_value(cell));
    }
    return Matrix(rows, cols, std::move(cells));
}

std::string write_value(const Value& v) {
    return value_json(v).dump();
}

} // namespace ivif
