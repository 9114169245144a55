#pragma once

#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace alphadet {

using json = nlohmann::json;

/// Constant term first, rationals as strings.
inline json to_json(const PolyA& p)
{
    json arr = json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(to_string(c));
    return arr;
}

/// Row i holds the coefficients of alpha^i beta^0, alpha^i beta^1, ...
inline json to_json(const PolyAB& p)
{
    json rows = json::array();
    for (const auto& row : p.grid()) {
        json r = json::array();
        for (const auto& c : row)
            r.push_back(to_string(c));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline json to_json(const RatMatrix& m)
{
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline PolyA poly_from_json(const json& j)
{
    if (!j.is_array())
        throw error(errc::parse_error, "polynomial must be a JSON array");
    std::vector<Rational> c;
    for (const auto& x : j) {
        if (!x.is_string())
            throw error(errc::parse_error, "polynomial coefficients must be rational strings");
        c.push_back(parse_rational(x.get<std::string>()));
    }
    return PolyA(std::move(c));
}

/// {"rows": R, "cols": C, "entries": [[...], ...]}. Entries may be rational
/// strings or JSON integers.
inline RatMatrix matrix_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw error(errc::parse_error, "matrix JSON needs rows, cols and entries");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() || !j["entries"].is_array())
        throw error(errc::parse_error, "matrix JSON has malformed fields");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    const auto& entries = j["entries"];
    if (rows < 0 || cols < 0 || static_cast<int>(entries.size()) != rows)
        throw error(errc::dimension_mismatch, "matrix JSON: entry rows do not match 'rows'");
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = entries[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw error(errc::dimension_mismatch, "matrix JSON: row " + std::to_string(i) + " does not match 'cols'");
        for (int c = 0; c < cols; ++c) {
            const auto& x = row[static_cast<std::size_t>(c)];
            if (x.is_string())
                m(i, c) = parse_rational(x.get<std::string>());
            else if (x.is_number_integer())
                m(i, c) = Rational(x.get<long>());
            else
                throw error(errc::parse_error, "matrix entries must be rational strings or integers");
        }
    }
    return m;
}

} // namespace alphadet
