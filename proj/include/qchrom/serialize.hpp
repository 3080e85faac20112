#pragma once

// Report and graph serialization: JSON (nlohmann), CSV, DOT, edge lists, and
// the one-bit-word-per-line connection-set format.  Exact values are emitted
// as decimal strings, floats with 12 significant digits; field order is
// fixed, so identical inputs serialize byte-identically.

#include <json.hpp>

#include <iomanip>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "qchrom/chromatic.hpp"
#include "qchrom/dense_oracle.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/products.hpp"
#include "qchrom/spectrum.hpp"
#include "qchrom/strategy.hpp"

namespace qchrom {

using ordered_json = nlohmann::ordered_json;

inline std::string fmt_sig(double value, int digits = 12) {
    std::ostringstream os;
    os << std::setprecision(digits) << value;
    return os.str();
}

// Round-trips a double through its 12-significant-digit form so JSON numbers
// print with the documented precision.
inline ordered_json json_float(double value) { return ordered_json::parse(fmt_sig(value)); }

// ---- spectra ---------------------------------------------------------------

inline ordered_json spectrum_json(const Spectrum& s, const std::string& source) {
    ordered_json entries = ordered_json::array();
    for (const auto& [v, m] : s.entries) entries.push_back({{"value", std::to_string(v)}, {"mult", m}});
    return ordered_json{{"entries", entries}, {"source", source}};
}

inline ordered_json spectrum_json(const FloatSpectrum& s, const std::string& source) {
    ordered_json entries = ordered_json::array();
    for (const auto& [v, m] : s.entries) entries.push_back({{"value", fmt_sig(v)}, {"mult", m}});
    return ordered_json{{"entries", entries}, {"source", source}};
}

inline std::string spectrum_csv(const Spectrum& s) {
    std::string out = "value,mult\n";
    for (const auto& [v, m] : s.entries) out += std::to_string(v) + "," + std::to_string(m) + "\n";
    return out;
}

inline std::string spectrum_csv(const FloatSpectrum& s) {
    std::string out = "value,mult\n";
    for (const auto& [v, m] : s.entries) out += fmt_sig(v) + "," + std::to_string(m) + "\n";
    return out;
}

inline std::string spectrum_text(const Spectrum& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s.entries[i].first) + ":" + std::to_string(s.entries[i].second);
    }
    return out + "}";
}

inline std::string spectrum_text(const FloatSpectrum& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) out += ", ";
        out += fmt_sig(s.entries[i].first) + ":" + std::to_string(s.entries[i].second);
    }
    return out + "}";
}

// ---- Hoffman reports -------------------------------------------------------

inline ordered_json hoffman_json(const HoffmanReport& r) {
    return ordered_json{{"lambda_max", std::to_string(r.lambda_max)},
                        {"lambda_min", std::to_string(r.lambda_min)},
                        {"ratio", r.ratio.to_string()},
                        {"ratio_value", json_float(r.ratio.to_double())},
                        {"integer_bound", r.integer_bound}};
}

inline std::string hoffman_csv(const HoffmanReport& r) {
    return "lambda_max,lambda_min,ratio,integer_bound\n" + std::to_string(r.lambda_max) + "," +
           std::to_string(r.lambda_min) + "," + r.ratio.to_string() + "," +
           std::to_string(r.integer_bound) + "\n";
}

inline std::string hoffman_text(const HoffmanReport& r) {
    return "lambda_max = " + std::to_string(r.lambda_max) +
           ", lambda_min = " + std::to_string(r.lambda_min) + ", ratio = " + r.ratio.to_string() +
           ", integer bound = " + std::to_string(r.integer_bound);
}

// ---- strategy reports ------------------------------------------------------

inline ordered_json strategy_json(const StrategyReport& r) {
    return ordered_json{{"n", r.n},
                        {"sampling", r.sampling.exhaustive ? "exhaustive" : "sampled"},
                        {"samples", r.sampling.count},
                        {"seed", r.sampling.seed},
                        {"tolerance", json_float(r.tolerance)},
                        {"max_completeness_residual", json_float(r.max_completeness_residual)},
                        {"max_projection_residual", json_float(r.max_projection_residual)},
                        {"max_adjacent_violation", json_float(r.max_adjacent_violation)},
                        {"max_synchronous_violation", json_float(r.max_synchronous_violation)},
                        {"pairs_checked", r.pairs_checked},
                        {"verdict", r.pass ? "PASS" : "FAIL"}};
}

inline std::string strategy_csv(const StrategyReport& r) {
    return "n,sampling,samples,seed,tolerance,completeness,projection,adjacent,synchronous,pairs_"
           "checked,verdict\n" +
           std::to_string(r.n) + "," + (r.sampling.exhaustive ? "exhaustive" : "sampled") + "," +
           std::to_string(r.sampling.count) + "," + std::to_string(r.sampling.seed) + "," +
           fmt_sig(r.tolerance) + "," + fmt_sig(r.max_completeness_residual) + "," +
           fmt_sig(r.max_projection_residual) + "," + fmt_sig(r.max_adjacent_violation) + "," +
           fmt_sig(r.max_synchronous_violation) + "," + std::to_string(r.pairs_checked) + "," +
           (r.pass ? "PASS" : "FAIL") + "\n";
}

inline std::string strategy_text(const StrategyReport& r) {
    std::string out = "strategy verification n=" + std::to_string(r.n) + " [" +
                      (r.sampling.exhaustive
                           ? std::string("exhaustive")
                           : "sampled count=" + std::to_string(r.sampling.count) +
                                 " seed=" + std::to_string(r.sampling.seed)) +
                      "]\n";
    out += "  completeness residual: " + fmt_sig(r.max_completeness_residual) + "\n";
    out += "  projection residual:   " + fmt_sig(r.max_projection_residual) + "\n";
    out += "  adjacent violation:    " + fmt_sig(r.max_adjacent_violation) + "\n";
    out += "  synchronous violation: " + fmt_sig(r.max_synchronous_violation) + "\n";
    out += "  pairs checked: " + std::to_string(r.pairs_checked) +
           ", tolerance: " + fmt_sig(r.tolerance) + "\n";
    out += std::string("  verdict: ") + (r.pass ? "PASS" : "FAIL");
    return out;
}

// ---- chromatic reports -----------------------------------------------------

inline ordered_json chromatic_json(const ChromaticReport& r) {
    return ordered_json{{"n", r.n},
                        {"chi_q", r.chi_q},
                        {"lower_bound", r.lower_bound},
                        {"upper_bound", r.upper_bound},
                        {"hoffman", hoffman_json(r.hoffman)},
                        {"strategy", strategy_json(r.strategy)}};
}

inline std::string chromatic_text(const ChromaticReport& r) {
    return "chi_q(H_" + std::to_string(r.n) + ") = " + std::to_string(r.chi_q) +
           " (lower: Hoffman bound " + std::to_string(r.lower_bound) +
           ", upper: coloring-strategy witness " + std::to_string(r.upper_bound) +
           (r.strategy.pass ? ", verified" : ", VERIFICATION FAILED") + ")";
}

// ---- product reports -------------------------------------------------------

inline ordered_json cited_json(const CitedValue& c) {
    return ordered_json{{"value", c.value}, {"tag", c.tag}};
}

inline ordered_json product_bound_json(const ProductBoundReport& r) {
    ordered_json j{{"kind", to_string(r.kind)},
                   {"lambda_max", std::to_string(r.lambda_max)},
                   {"lambda_min", std::to_string(r.lambda_min)},
                   {"ratio", r.ratio.to_string()},
                   {"ratio_value", json_float(r.ratio.to_double())},
                   {"integer_bound", r.integer_bound},
                   {"factor_g", spectrum_json(r.spec_g, "factor")},
                   {"factor_h", spectrum_json(r.spec_h, "factor")},
                   {"product_spectrum", spectrum_json(r.product, "combination")}};
    if (r.cited_upper) j["cited_upper"] = cited_json(*r.cited_upper);
    return j;
}

inline ordered_json hadamard_product_json(const HadamardProductReport& r) {
    ordered_json j{{"kind", to_string(r.kind)},
                   {"n", r.n},
                   {"m", r.m},
                   {"lower_bound", r.lower_bound},
                   {"bound", product_bound_json(r.bound)}};
    if (r.cited_lower) j["cited_lower"] = cited_json(*r.cited_lower);
    if (r.cited_upper) j["cited_upper"] = cited_json(*r.cited_upper);
    if (r.exact) j["exact"] = *r.exact;
    return j;
}

inline std::string hadamard_product_csv(const HadamardProductReport& r) {
    return "kind,n,m,lambda_max,lambda_min,ratio,integer_bound,lower_bound,exact\n" +
           std::string(to_string(r.kind)) + "," + std::to_string(r.n) + "," + std::to_string(r.m) +
           "," + std::to_string(r.bound.lambda_max) + "," + std::to_string(r.bound.lambda_min) +
           "," + r.bound.ratio.to_string() + "," + std::to_string(r.bound.integer_bound) + "," +
           std::to_string(r.lower_bound) + "," + (r.exact ? std::to_string(*r.exact) : "") + "\n";
}

inline std::string hadamard_product_text(const HadamardProductReport& r) {
    std::string out = std::string(to_string(r.kind)) + " product of H_" + std::to_string(r.n) +
                      " and H_" + std::to_string(r.m) + ": ";
    if (r.exact)
        out += "chi_q = " + std::to_string(*r.exact);
    else
        out += "chi_q >= " + std::to_string(r.lower_bound);
    out += " (spectral ratio " + r.bound.ratio.to_string() + ", lambda_max " +
           std::to_string(r.bound.lambda_max) + ", lambda_min " +
           std::to_string(r.bound.lambda_min) + ")";
    return out;
}

// ---- graphs ----------------------------------------------------------------

inline std::string graph_edgelist(const DenseGraph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline std::string graph_dot(const DenseGraph& g) {
    std::string out = "graph g {\n";
    for (int v = 0; v < g.size(); ++v) {
        out += "  " + std::to_string(v);
        if (g.has_labels())
            out += " [label=\"" +
                   to_string(g.labels()[static_cast<std::size_t>(v)], g.label_convention()) + "\"]";
        out += ";\n";
    }
    for (const auto& [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

inline ordered_json graph_json(const DenseGraph& g) {
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    ordered_json j{{"n", g.size()}, {"edges", edges}};
    if (g.has_labels()) {
        ordered_json labels = ordered_json::array();
        for (const GroupElement& l : g.labels())
            labels.push_back(to_string(l, g.label_convention()));
        j["labels"] = labels;
    }
    return j;
}

// Edge list ingestion: one "u v" pair per line; blank lines and '#' comments
// skipped. Vertex count is max index + 1 unless a larger count is forced.
inline DenseGraph parse_edgelist(std::istream& in, int vertex_count = 0) {
    std::vector<std::pair<int, int>> edges;
    int max_index = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u = -1, v = -1;
        if (!(ls >> u >> v)) throw std::invalid_argument("edge list: malformed line: " + line);
        if (u < 0 || v < 0 || u == v)
            throw std::invalid_argument("edge list: invalid edge " + line);
        edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    const int n = std::max(vertex_count, max_index + 1);
    if (n < 1) throw std::invalid_argument("edge list: no vertices");
    DenseGraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Connection-set text format: one word per line; character position i is
// coordinate i ('0'/'1').
inline std::string connection_set_lines(const ConnectionSet& c) {
    std::string out;
    for (const std::uint64_t w : c.elements) {
        for (int i = 0; i < c.length; ++i) out += ((w >> i) & 1) ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline ConnectionSet parse_connection_set(std::istream& in, int expected_length = 0) {
    std::vector<std::uint64_t> elems;
    int length = expected_length;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (length == 0) length = static_cast<int>(line.size());
        if (static_cast<int>(line.size()) != length)
            throw std::invalid_argument("connection set: inconsistent word length: " + line);
        std::uint64_t w = 0;
        for (int i = 0; i < length; ++i) {
            const char ch = line[static_cast<std::size_t>(i)];
            if (ch == '1')
                w |= std::uint64_t{1} << i;
            else if (ch != '0')
                throw std::invalid_argument("connection set: expected 0/1 word, got: " + line);
        }
        elems.push_back(w);
    }
    if (length == 0) throw std::invalid_argument("connection set: empty input");
    return make_connection_set(std::move(elems), length);
}

}  // namespace qchrom
