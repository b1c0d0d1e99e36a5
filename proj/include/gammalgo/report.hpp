#pragma once

#include "gammalgo/gamma_engine.hpp"
#include "gammalgo/renyi_oracle.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gammalgo {

using Json = nlohmann::ordered_json;

inline const char *classification_name(GammaClass cls)
{
    switch (cls) {
    case GammaClass::Zero: return "zero";
    case GammaClass::One: return "one";
    case GammaClass::Interior: return "interior";
    case GammaClass::Undecided: return "undecided";
    }
    return "?";
}

inline const char *method_name(GammaMethod method)
{
    switch (method) {
    case GammaMethod::ClosedFormA: return "closed-form-A";
    case GammaMethod::ClassificationAbZ: return "abZ-classification";
    case GammaMethod::EngineGamma0: return "engine-gamma0";
    case GammaMethod::EngineGeneral: return "engine-general";
    }
    return "?";
}

/// Exact rational from "p/q", "123", "0.25" or "-3.5".
inline Rational parse_rational(const std::string &text)
{
    if (text.empty()) {
        throw std::invalid_argument("parse_rational: empty input");
    }
    std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("parse_rational: zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    }
    std::size_t dot = text.find('.');
    if (dot == std::string::npos) {
        return Rational(Integer(text));
    }
    bool negative = text[0] == '-';
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.empty()) {
        throw std::invalid_argument("parse_rational: trailing dot");
    }
    Integer scale = pow10(static_cast<unsigned>(tail.size()));
    Integer intpart(head.empty() || head == "-" ? "0" : head);
    Integer frac(tail);
    if (frac < 0) {
        throw std::invalid_argument("parse_rational: malformed number");
    }
    Integer total = abs(intpart) * scale + frac;
    if (negative) {
        total = -total;
    }
    return Rational(total, scale);
}

struct GammaDocument
{
    long long a = 0;
    long long b = 0;
    std::string classification;
    std::string method;
    std::string gamma_lo;
    std::string gamma_hi;
    unsigned digits = 0;
    long long depth = 0;
    std::string witness_prefix;
};

inline GammaDocument make_gamma_document(const GammaResult &result, unsigned digits)
{
    GammaDocument doc;
    doc.a = result.base.a().convert_to<long long>();
    doc.b = result.base.b().convert_to<long long>();
    doc.classification = classification_name(result.classification);
    doc.method = method_name(result.method);
    doc.gamma_lo = to_decimal(result.gamma_enclosure.lo, digits);
    doc.gamma_hi = to_decimal(result.gamma_enclosure.hi, digits);
    doc.digits = digits;
    doc.depth = static_cast<long long>(result.depth_used);
    doc.witness_prefix = result.witness_prefix.str();
    return doc;
}

inline Json gamma_document_json(const GammaDocument &doc)
{
    Json j;
    j["a"] = doc.a;
    j["b"] = doc.b;
    j["classification"] = doc.classification;
    j["method"] = doc.method;
    j["gamma_lo"] = doc.gamma_lo;
    j["gamma_hi"] = doc.gamma_hi;
    j["digits"] = doc.digits;
    j["depth"] = doc.depth;
    j["witness_prefix"] = doc.witness_prefix;
    return j;
}

inline std::string gamma_document_text(const GammaDocument &doc)
{
    std::ostringstream out;
    if (doc.classification == "interior") {
        out << "interior " << doc.gamma_lo << "\n";
    } else if (doc.classification == "undecided") {
        out << "undecided [" << doc.gamma_lo << ", " << doc.gamma_hi << "]\n";
    } else {
        out << doc.classification << " (exact, " << doc.method << ")\n";
    }
    out << "method: " << doc.method << "\n";
    out << "gamma_lo: " << doc.gamma_lo << "\n";
    out << "gamma_hi: " << doc.gamma_hi << "\n";
    out << "depth: " << doc.depth << "\n";
    out << "witness: " << doc.witness_prefix << "\n";
    return out.str();
}

inline char table_cell_char(TableCell cell)
{
    switch (cell) {
    case TableCell::Zero: return '0';
    case TableCell::One: return '1';
    case TableCell::Star: return '*';
    }
    return '?';
}

/// The reference grid for b <= 12, a/b <= 15 (0 / 1 / strictly-interior).
inline const std::array<const char *, 12> &reference_table_12x15()
{
    static const std::array<const char *, 12> rows = {
        "111111111111111", // b = 1
        "*11111111111111", // b = 2
        "0*1111111111111", // b = 3
        "0**111111111111", // b = 4
        "0***11111111111", // b = 5
        "0**111111111111", // b = 6
        "0*****111111111", // b = 7
        "0******11111111", // b = 8
        "0*******1111111", // b = 9
        "0********111111", // b = 10
        "00********11111", // b = 11
        "00*********1111", // b = 12
    };
    return rows;
}

inline std::string render_table_text(const TableGrid &grid)
{
    std::ostringstream out;
    out << "b\\c";
    for (std::size_t c = 1; c <= grid.ratio_max; ++c) {
        out << ' ' << (c < 10 ? " " : "") << c;
    }
    out << '\n';
    for (std::size_t b = 1; b <= grid.b_max; ++b) {
        out << (b < 10 ? " " : "") << b << ' ';
        for (TableCell cell : grid.cells[b - 1]) {
            out << "  " << table_cell_char(cell);
        }
        out << '\n';
    }
    return out.str();
}

inline Json render_table_json(const TableGrid &grid)
{
    Json j;
    j["b_max"] = grid.b_max;
    j["ratio_max"] = grid.ratio_max;
    Json rows = Json::array();
    for (std::size_t b = 1; b <= grid.b_max; ++b) {
        Json row;
        row["b"] = b;
        Json cells = Json::array();
        for (TableCell cell : grid.cells[b - 1]) {
            cells.push_back(std::string(1, table_cell_char(cell)));
        }
        row["cells"] = std::move(cells);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

/// Mismatches between a computed grid and the embedded reference, as
/// "(a,b): got X want Y" strings; empty when the grids agree on the
/// reference's 12x15 window.
inline std::vector<std::string> diff_against_reference(const TableGrid &grid)
{
    std::vector<std::string> mismatches;
    const auto &ref = reference_table_12x15();
    std::size_t bmax = std::min<std::size_t>(grid.b_max, 12);
    std::size_t cmax = std::min<std::size_t>(grid.ratio_max, 15);
    for (std::size_t b = 1; b <= bmax; ++b) {
        for (std::size_t c = 1; c <= cmax; ++c) {
            char got = table_cell_char(grid.cells[b - 1][c - 1]);
            char want = ref[b - 1][c - 1];
            if (got != want) {
                std::ostringstream msg;
                msg << "(" << b * c << "," << b << "): got " << got << " want " << want;
                mismatches.push_back(msg.str());
            }
        }
    }
    return mismatches;
}

} // namespace gammalgo
