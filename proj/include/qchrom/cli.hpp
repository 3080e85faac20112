#pragma once

// Command dispatch for the qchrom tool.  A CommandRequest carries the parsed
// flag map; run_command validates it, computes, and writes one serialized
// report to the output stream.  Exit codes: 0 success, 2 parameter error,
// 3 verification FAIL (verify-strategy only).

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "qchrom/chromatic.hpp"
#include "qchrom/dense_oracle.hpp"
#include "qchrom/products.hpp"
#include "qchrom/serialize.hpp"

namespace qchrom {

enum class Command { build, spectrum, bound, chromatic, verify_strategy, product };

enum class OutputFormat { json, csv, dot, edgelist, text };

inline OutputFormat output_format_from_string(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "dot") return OutputFormat::dot;
    if (s == "edgelist") return OutputFormat::edgelist;
    if (s == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown output format: " + s);
}

struct CommandRequest {
    Command command = Command::build;
    std::map<std::string, std::string> params;
    OutputFormat output = OutputFormat::json;
};

namespace cli_detail {

inline void check_keys(const CommandRequest& req, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : req.params) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw std::invalid_argument("unknown parameter: " + key);
    }
}

inline std::optional<std::string> get(const CommandRequest& req, const std::string& key) {
    const auto it = req.params.find(key);
    if (it == req.params.end()) return std::nullopt;
    return it->second;
}

inline std::optional<long long> get_int(const CommandRequest& req, const std::string& key) {
    const auto raw = get(req, key);
    if (!raw) return std::nullopt;
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(*raw, &pos);
        if (pos != raw->size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("parameter " + key + " expects an integer, got: " + *raw);
    }
}

inline std::optional<double> get_double(const CommandRequest& req, const std::string& key) {
    const auto raw = get(req, key);
    if (!raw) return std::nullopt;
    try {
        std::size_t pos = 0;
        const double v = std::stod(*raw, &pos);
        if (pos != raw->size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("parameter " + key + " expects a number, got: " + *raw);
    }
}

inline bool get_flag(const CommandRequest& req, const std::string& key) {
    const auto raw = get(req, key);
    if (!raw) return false;
    if (*raw == "true" || *raw == "1" || raw->empty()) return true;
    if (*raw == "false" || *raw == "0") return false;
    throw std::invalid_argument("parameter " + key + " expects a boolean");
}

inline Component component_from(const CommandRequest& req) {
    const std::string c = get(req, "component").value_or("full");
    if (c == "full") return Component::full;
    if (c == "even") return Component::even_component;
    throw std::invalid_argument("component must be 'full' or 'even', got: " + c);
}

inline Convention convention_from(const CommandRequest& req) {
    const std::string c = get(req, "convention").value_or("pm");
    if (c == "pm") return Convention::plus_minus_one;
    if (c == "01") return Convention::zero_one;
    throw std::invalid_argument("convention must be 'pm' or '01', got: " + c);
}

inline void require_format(const CommandRequest& req, std::initializer_list<OutputFormat> allowed) {
    for (const OutputFormat f : allowed)
        if (req.output == f) return;
    throw std::invalid_argument("output format not supported for this command");
}

inline ConnectionSet load_connection_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open connection file: " + path);
    return parse_connection_set(in);
}

inline DenseGraph load_edgelist(const CommandRequest& req, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open edge list file: " + path);
    const int vertices = static_cast<int>(get_int(req, "vertices").value_or(0));
    return parse_edgelist(in, vertices);
}

// Exactly one graph source: --n, --connection-file, or --edgelist-file.
enum class GraphSource { hadamard, connection, edgelist };

inline GraphSource graph_source(const CommandRequest& req) {
    const int given = (get(req, "n") ? 1 : 0) + (get(req, "connection-file") ? 1 : 0) +
                      (get(req, "edgelist-file") ? 1 : 0);
    if (given != 1)
        throw std::invalid_argument(
            "specify exactly one of --n, --connection-file, --edgelist-file");
    if (get(req, "n")) return GraphSource::hadamard;
    if (get(req, "connection-file")) return GraphSource::connection;
    return GraphSource::edgelist;
}

inline void check_dense_budget(long long vertices, bool allow_slow) {
    if (vertices > 1024 && !allow_slow)
        throw std::invalid_argument("dense computation on " + std::to_string(vertices) +
                                    " vertices needs --allow-slow");
}

inline std::string emit_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace cli_detail

inline int run_build(const CommandRequest& req, std::ostream& out) {
    using namespace cli_detail;
    check_keys(req, {"n", "component", "convention", "connection-file", "edgelist-file", "vertices"});
    require_format(req, {OutputFormat::edgelist, OutputFormat::dot, OutputFormat::json});

    DenseGraph g;
    const GraphSource source = graph_source(req);
    switch (source) {
        case GraphSource::hadamard:
            g = build_hadamard({static_cast<int>(*get_int(req, "n")), component_from(req),
                                convention_from(req)});
            break;
        case GraphSource::connection: {
            const ConnectionSet c = load_connection_set(*get(req, "connection-file"));
            g = build_cayley(CayleyGraphSpec{c.length, c});
            if (get(req, "convention")) g = convert_convention(g, convention_from(req));
            break;
        }
        case GraphSource::edgelist:
            if (get(req, "convention"))
                throw std::invalid_argument("--convention needs labeled vertices");
            g = load_edgelist(req, *get(req, "edgelist-file"));
            break;
    }

    switch (req.output) {
        case OutputFormat::edgelist: out << graph_edgelist(g); break;
        case OutputFormat::dot: out << graph_dot(g); break;
        default: out << emit_json(graph_json(g)); break;
    }
    return 0;
}

namespace cli_detail {

struct SpectrumResult {
    std::optional<Spectrum> exact;
    std::optional<FloatSpectrum> floating;
    std::string source;
};

inline SpectrumResult compute_spectrum(const CommandRequest& req) {
    const std::string method = get(req, "method").value_or("character");
    if (method != "character" && method != "closed-form" && method != "dense")
        throw std::invalid_argument("method must be character, closed-form, or dense");
    const bool allow_slow = get_flag(req, "allow-slow");
    const double tol = get_double(req, "tol").value_or(0.0);

    SpectrumResult res;
    switch (graph_source(req)) {
        case GraphSource::hadamard: {
            const int n = static_cast<int>(*get_int(req, "n"));
            const Component comp = component_from(req);
            const bool even = comp == Component::even_component;
            if (method == "character") {
                res.exact = spectrum_by_characters(even ? hadamard_even_cayley_spec(n)
                                                        : hadamard_full_cayley_spec(n));
                res.source = "character-transform hadamard n=" + std::to_string(n) +
                             (even ? " even" : " full");
            } else if (method == "closed-form") {
                res.exact = even ? hadamard_even_spectrum(n) : hadamard_full_spectrum(n);
                res.source =
                    "closed-form hadamard n=" + std::to_string(n) + (even ? " even" : " full");
            } else {
                if (n < 2 || n > 12)
                    throw std::invalid_argument("dense hadamard construction capped at n = 12");
                const long long vertices = even ? (1LL << (n - 1)) : (1LL << n);
                check_dense_budget(vertices, allow_slow);
                res.floating =
                    dense_spectrum(build_hadamard({n, comp, Convention::plus_minus_one}), tol);
                res.source =
                    "dense-oracle hadamard n=" + std::to_string(n) + (even ? " even" : " full");
            }
            break;
        }
        case GraphSource::connection: {
            const ConnectionSet c = load_connection_set(*get(req, "connection-file"));
            if (method == "closed-form")
                throw std::invalid_argument("closed-form method applies to --n only");
            if (method == "character") {
                res.exact = spectrum_by_characters(CayleyGraphSpec{c.length, c});
                res.source = "character-transform cayley dim=" + std::to_string(c.length);
            } else {
                if (c.length > 12)
                    throw std::invalid_argument(
                        "dense Cayley construction capped at group dimension 12");
                check_dense_budget(1LL << c.length, allow_slow);
                res.floating = dense_spectrum(build_cayley(CayleyGraphSpec{c.length, c}), tol);
                res.source = "dense-oracle cayley dim=" + std::to_string(c.length);
            }
            break;
        }
        case GraphSource::edgelist: {
            if (method != "dense")
                throw std::invalid_argument("edge-list graphs support the dense method only");
            const DenseGraph g = load_edgelist(req, *get(req, "edgelist-file"));
            check_dense_budget(g.size(), allow_slow);
            res.floating = dense_spectrum(g, tol);
            res.source = "dense-oracle edgelist n=" + std::to_string(g.size());
            break;
        }
    }
    return res;
}

}  // namespace cli_detail

inline int run_spectrum(const CommandRequest& req, std::ostream& out) {
    using namespace cli_detail;
    check_keys(req, {"n", "component", "method", "tol", "allow-slow", "connection-file",
                     "edgelist-file", "vertices"});
    require_format(req, {OutputFormat::json, OutputFormat::csv, OutputFormat::text});

    const SpectrumResult res = compute_spectrum(req);
    switch (req.output) {
        case OutputFormat::json:
            out << emit_json(res.exact ? spectrum_json(*res.exact, res.source)
                                       : spectrum_json(*res.floating, res.source));
            break;
        case OutputFormat::csv:
            out << (res.exact ? spectrum_csv(*res.exact) : spectrum_csv(*res.floating));
            break;
        default:
            out << (res.exact ? spectrum_text(*res.exact) : spectrum_text(*res.floating)) << "\n";
            break;
    }
    return 0;
}

inline int run_bound(const CommandRequest& req, std::ostream& out) {
    using namespace cli_detail;
    check_keys(req, {"n", "component", "method", "tol", "allow-slow", "connection-file",
                     "edgelist-file", "vertices"});
    require_format(req, {OutputFormat::json, OutputFormat::csv, OutputFormat::text});

    const SpectrumResult res = compute_spectrum(req);

    // Exact spectra (and dense clusters that sit on integers) go through the
    // rational report; genuinely non-integral spectra get a floating report
    // so the ratio is never silently rounded.
    std::optional<Spectrum> exact = res.exact;
    if (!exact) {
        bool integral = true;
        std::map<std::int64_t, std::int64_t> hist;
        for (const auto& [v, m] : res.floating->entries) {
            if (std::abs(v - std::llround(v)) > 1e-6) {
                integral = false;
                break;
            }
            hist[static_cast<std::int64_t>(std::llround(v))] += m;
        }
        if (integral) exact = make_spectrum(hist);
    }

    if (exact) {
        const HoffmanReport rep = hoffman_bound(*exact);
        switch (req.output) {
            case OutputFormat::json: {
                ordered_json j = hoffman_json(rep);
                j["source"] = res.source;
                out << emit_json(j);
                break;
            }
            case OutputFormat::csv: out << hoffman_csv(rep); break;
            default: out << hoffman_text(rep) << "\n"; break;
        }
        return 0;
    }

    const double lmax = res.floating->entries.front().first;
    const double lmin = res.floating->entries.back().first;
    if (lmax <= 0.0 || lmin >= 0.0)
        throw std::invalid_argument(
            "hoffman bound undefined: spectrum must have a positive maximum and a negative minimum");
    const double ratio = 1.0 + lmax / -lmin;
    const std::int64_t integer_bound = static_cast<std::int64_t>(std::ceil(ratio - 1e-9));
    switch (req.output) {
        case OutputFormat::json:
            out << emit_json(ordered_json{{"lambda_max", fmt_sig(lmax)},
                                          {"lambda_min", fmt_sig(lmin)},
                                          {"ratio", fmt_sig(ratio)},
                                          {"ratio_value", json_float(ratio)},
                                          {"integer_bound", integer_bound},
                                          {"source", res.source}});
            break;
        case OutputFormat::csv:
            out << "lambda_max,lambda_min,ratio,integer_bound\n" + fmt_sig(lmax) + "," +
                       fmt_sig(lmin) + "," + fmt_sig(ratio) + "," + std::to_string(integer_bound) +
                       "\n";
            break;
        default:
            out << "lambda_max = " + fmt_sig(lmax) + ", lambda_min = " + fmt_sig(lmin) +
                       ", ratio = " + fmt_sig(ratio) +
                       ", integer bound = " + std::to_string(integer_bound)
                << "\n";
            break;
    }
    return 0;
}

inline int run_chromatic(const CommandRequest& req, std::ostream& out) {
    using namespace cli_detail;
    check_keys(req, {"n", "sample", "seed"});
    require_format(req, {OutputFormat::json, OutputFormat::text});
    const auto n = get_int(req, "n");
    if (!n) throw std::invalid_argument("chromatic requires --n");

    std::optional<Sampling> sampling;
    if (*n > 8) {
        const long long count = get_int(req, "sample").value_or(100000);
        const std::uint64_t seed =
            static_cast<std::uint64_t>(get_int(req, "seed").value_or(42));
        sampling = Sampling::sampled(count, seed);
    }
    const ChromaticReport rep = hadamard_quantum_chromatic(static_cast<int>(*n), sampling);
    if (req.output == OutputFormat::json)
        out << emit_json(chromatic_json(rep));
    else
        out << chromatic_text(rep) << "\n";
    return 0;
}

inline int run_verify_strategy(const CommandRequest& req, std::ostream& out) {
    using namespace cli_detail;
    check_keys(req, {"n", "sample", "seed", "tol", "exhaustive"});
    require_format(req, {OutputFormat::json, OutputFormat::csv, OutputFormat::text});
    const auto n = get_int(req, "n");
    if (!n) throw std::invalid_argument("verify-strategy requires --n");

    const bool force_exhaustive = get_flag(req, "exhaustive");
    const bool has_sample = get_int(req, "sample").has_value();
    if (force_exhaustive && has_sample)
        throw std::invalid_argument("--exhaustive and --sample are mutually exclusive");

    Sampling sampling = Sampling::exhaustive_mode();
    if (has_sample || (!force_exhaustive && *n > 8)) {
        const long long count = get_int(req, "sample").value_or(100000);
        const std::uint64_t seed =
            static_cast<std::uint64_t>(get_int(req, "seed").value_or(42));
        sampling = Sampling::sampled(count, seed);
    }
    StrategyOptions opt;
    opt.tolerance = get_double(req, "tol").value_or(1e-9);

    const StrategyReport rep = verify_strategy(static_cast<int>(*n), sampling, opt);
    switch (req.output) {
        case OutputFormat::json: out << emit_json(strategy_json(rep)); break;
        case OutputFormat::csv: out << strategy_csv(rep); break;
        default: out << strategy_text(rep) << "\n"; break;
    }
    return rep.pass ? 0 : 3;
}

inline int run_product(const CommandRequest& req, std::ostream& out) {
    using namespace cli_detail;
    check_keys(req, {"kind", "n", "m"});
    require_format(req, {OutputFormat::json, OutputFormat::csv, OutputFormat::text});
    const auto kind = get(req, "kind");
    const auto n = get_int(req, "n");
    const auto m = get_int(req, "m");
    if (!kind || !n || !m) throw std::invalid_argument("product requires --kind, --n, --m");

    const HadamardProductReport rep = hadamard_product_chromatic(
        static_cast<int>(*n), static_cast<int>(*m), product_kind_from_string(*kind));
    switch (req.output) {
        case OutputFormat::json: out << emit_json(hadamard_product_json(rep)); break;
        case OutputFormat::csv: out << hadamard_product_csv(rep); break;
        default: out << hadamard_product_text(rep) << "\n"; break;
    }
    return 0;
}

// Validates, computes, serializes. Parameter problems come back as exit
// code 2 with a one-line diagnostic on err.
inline int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    try {
        switch (req.command) {
            case Command::build: return run_build(req, out);
            case Command::spectrum: return run_spectrum(req, out);
            case Command::bound: return run_bound(req, out);
            case Command::chromatic: return run_chromatic(req, out);
            case Command::verify_strategy: return run_verify_strategy(req, out);
            case Command::product: return run_product(req, out);
        }
        err << "error: unknown command\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qchrom
