#ifndef ILPSPACE_IO_HPP
#define ILPSPACE_IO_HPP

// Text instance files and JSON result documents.
//
// Instance grammar (whitespace separated, '#' lines ignored):
//
//     m n
//     A row 1 (n integers)
//     ...
//     A row m
//     b (m integers)
//     c (n integers)
//     [delta D]            optional; default max(2, max |A_ij|)

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ilpspace/core.hpp"
#include "ilpspace/pipeline.hpp"

namespace ilpspace {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_integer_token(const std::string& tok) {
    std::size_t start = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (start == tok.size()) return false;
    for (std::size_t i = start; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    return true;
}

inline BigInt parse_integer(const std::string& tok, std::size_t line) {
    if (!is_integer_token(tok))
        throw ParseError("line " + std::to_string(line) + ": '" + tok + "' is not a base-10 integer");
    return BigInt(tok[0] == '+' ? tok.substr(1) : tok);
}

struct TextLine {
    std::size_t number;
    std::vector<std::string> tokens;
};

}  // namespace detail

inline Instance<BigInt> parse_instance(std::istream& in) {
    std::vector<detail::TextLine> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::istringstream ss(raw);
        detail::TextLine line{number, {}};
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        lines.push_back(std::move(line));
    }
    if (lines.empty()) throw ParseError("empty instance file");

    auto expect = [](const detail::TextLine& line, std::size_t count, const std::string& what) {
        if (line.tokens.size() != count)
            throw ParseError("line " + std::to_string(line.number) + ": " + what + ": expected " +
                             std::to_string(count) + " entries, found " + std::to_string(line.tokens.size()));
    };

    expect(lines[0], 2, "header");
    BigInt m_big = detail::parse_integer(lines[0].tokens[0], lines[0].number);
    BigInt n_big = detail::parse_integer(lines[0].tokens[1], lines[0].number);
    if (m_big < 1 || n_big < 1) throw ParseError("line " + std::to_string(lines[0].number) + ": m and n must be positive");
    const auto m = static_cast<std::size_t>(m_big);
    const auto n = static_cast<std::size_t>(n_big);

    if (lines.size() < m + 3)
        throw ParseError("expected " + std::to_string(m + 3) + " data lines, found " + std::to_string(lines.size()));
    Instance<BigInt> inst(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& line = lines[1 + i];
        expect(line, n, "row " + std::to_string(i + 1));
        for (std::size_t j = 0; j < n; ++j) inst.at(i, j) = detail::parse_integer(line.tokens[j], line.number);
    }
    expect(lines[1 + m], m, "b");
    for (std::size_t i = 0; i < m; ++i) inst.b[i] = detail::parse_integer(lines[1 + m].tokens[i], lines[1 + m].number);
    expect(lines[2 + m], n, "c");
    for (std::size_t j = 0; j < n; ++j) inst.c[j] = detail::parse_integer(lines[2 + m].tokens[j], lines[2 + m].number);

    inst.delta = std::max(BigInt(2), inst.max_abs_entry());
    std::size_t next = 3 + m;
    if (next < lines.size()) {
        const auto& line = lines[next];
        if (line.tokens.size() != 2 || line.tokens[0] != "delta")
            throw ParseError("line " + std::to_string(line.number) + ": expected 'delta D' or end of file");
        BigInt d = detail::parse_integer(line.tokens[1], line.number);
        if (d < inst.max_abs_entry())
            throw ParseError("line " + std::to_string(line.number) + ": delta " + d.str() +
                             " is smaller than the largest |A[i][j]| " + inst.max_abs_entry().str());
        if (d < 2) throw ParseError("line " + std::to_string(line.number) + ": delta must be at least 2");
        inst.delta = d;
        ++next;
    }
    if (next < lines.size())
        throw ParseError("line " + std::to_string(lines[next].number) + ": unexpected trailing data");
    return inst;
}

inline Instance<BigInt> parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

inline Instance<BigInt> parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_instance(in);
}

inline std::string format_instance(const Instance<BigInt>& inst, const std::string& comment = {}) {
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << "\n";
    out << inst.m << " " << inst.n << "\n";
    auto row = [&out](auto begin, auto end) {
        for (auto it = begin; it != end; ++it) out << (it == begin ? "" : " ") << *it;
        out << "\n";
    };
    for (std::size_t i = 0; i < inst.m; ++i) row(inst.a.begin() + i * inst.n, inst.a.begin() + (i + 1) * inst.n);
    row(inst.b.begin(), inst.b.end());
    row(inst.c.begin(), inst.c.end());
    if (inst.delta != std::max(BigInt(2), inst.max_abs_entry())) out << "delta " << inst.delta << "\n";
    return out.str();
}

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones strings.
inline Json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline BigInt from_json(const Json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

struct DocumentOptions {
    bool include_elapsed = false;
};

inline Json result_document(const Instance<BigInt>& inst, const SolveReport<BigInt>& report,
                            const DocumentOptions& options = {}) {
    Json doc;
    doc["status"] = to_string(report.result.status);
    if (report.result.solution) {
        Json x = Json::array();
        for (const auto& v : report.result.solution->x) x.push_back(to_json(v));
        doc["x"] = x;
        doc["objective"] = to_json(report.result.solution->objective);
    }
    Json metrics;
    metrics["nodes_expanded"] = report.metrics.nodes_expanded;
    metrics["max_depth"] = report.metrics.max_depth;
    metrics["peak_live_words"] = report.metrics.peak_live_words;
    if (options.include_elapsed) metrics["elapsed_ms"] = report.metrics.elapsed_ms;
    doc["metrics"] = metrics;
    doc["m"] = inst.m;
    doc["n"] = inst.n;
    doc["delta"] = to_json(inst.delta);
    doc["gamma"] = gamma_bound(inst.m, inst.delta);
    return doc;
}

/// Re-checks A x = b, x >= 0 from a result document.
inline bool document_is_consistent(const Instance<BigInt>& inst, const Json& doc) {
    const std::string status = doc.at("status").get<std::string>();
    if (status != "OPTIMAL") return status == "INFEASIBLE" || status == "UNBOUNDED";
    std::vector<BigInt> x;
    for (const auto& v : doc.at("x")) x.push_back(from_json(v));
    if (!check_solution<BigInt>(inst, x)) return false;
    return dot<BigInt>(x, inst.c) == from_json(doc.at("objective"));
}

}  // namespace ilpspace

#endif  // ILPSPACE_IO_HPP
