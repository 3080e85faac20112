// qchrom: exact spectra, Hoffman bounds, quantum-coloring verification, and
// graph-product reports for Hadamard graphs and Cayley graphs of 2-groups.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qchrom/cli.hpp"

namespace {

struct SubcommandBinding {
    CLI::App* app = nullptr;
    qchrom::Command command = qchrom::Command::build;
    std::map<std::string, std::string> params;
    std::string output;
};

void add_value_option(SubcommandBinding& bind, const std::string& flag, const std::string& key,
                      const std::string& help) {
    bind.app->add_option_function<std::string>(
        flag, [&bind, key](const std::string& v) { bind.params[key] = v; }, help);
}

void add_flag_option(SubcommandBinding& bind, const std::string& flag, const std::string& key,
                     const std::string& help) {
    bind.app->add_flag_callback(flag, [&bind, key] { bind.params[key] = "true"; }, help);
}

void add_graph_source_options(SubcommandBinding& bind) {
    add_value_option(bind, "--n", "n", "Hadamard order N");
    add_value_option(bind, "--component", "component", "full|even (default full)");
    add_value_option(bind, "--connection-file", "connection-file",
                     "Cayley connection set, one 0/1 word per line");
    add_value_option(bind, "--edgelist-file", "edgelist-file", "edge list, one 'u v' per line");
    add_value_option(bind, "--vertices", "vertices", "vertex count override for edge lists");
}

void add_method_options(SubcommandBinding& bind) {
    add_value_option(bind, "--method", "method", "character|closed-form|dense (default character)");
    add_value_option(bind, "--tol", "tol", "eigenvalue clustering tolerance for the dense method");
    add_flag_option(bind, "--allow-slow", "allow-slow", "permit dense runs above 1024 vertices");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hadamard graph spectra and quantum-coloring bounds"};
    app.require_subcommand(1);

    std::vector<std::unique_ptr<SubcommandBinding>> bindings;
    const auto make = [&](const std::string& name, qchrom::Command cmd, const std::string& help,
                          const std::string& default_output) -> SubcommandBinding& {
        auto bind = std::make_unique<SubcommandBinding>();
        bind->app = app.add_subcommand(name, help);
        bind->command = cmd;
        bind->output = default_output;
        bind->app->add_option("--output", bind->output, "output format: json|csv|dot|edgelist|text");
        bindings.push_back(std::move(bind));
        return *bindings.back();
    };

    SubcommandBinding& build =
        make("build", qchrom::Command::build, "construct a graph and export it", "edgelist");
    add_graph_source_options(build);
    add_value_option(build, "--convention", "convention", "vertex label convention: pm|01");

    SubcommandBinding& spectrum =
        make("spectrum", qchrom::Command::spectrum, "compute a graph spectrum", "json");
    add_graph_source_options(spectrum);
    add_method_options(spectrum);

    SubcommandBinding& bound =
        make("bound", qchrom::Command::bound, "Hoffman lower bound from a spectrum", "json");
    add_graph_source_options(bound);
    add_method_options(bound);

    SubcommandBinding& chromatic = make("chromatic", qchrom::Command::chromatic,
                                        "quantum chromatic number of H_N with witnesses", "text");
    add_value_option(chromatic, "--n", "n", "Hadamard order N (multiple of 4)");
    add_value_option(chromatic, "--sample", "sample", "sampled tuples for the strategy witness");
    add_value_option(chromatic, "--seed", "seed", "sampling seed");

    SubcommandBinding& verify = make("verify-strategy", qchrom::Command::verify_strategy,
                                     "verify the N-color strategy; exit 3 on FAIL", "json");
    add_value_option(verify, "--n", "n", "Hadamard order N (multiple of 4)");
    add_value_option(verify, "--sample", "sample", "sampled tuple count");
    add_value_option(verify, "--seed", "seed", "sampling seed");
    add_value_option(verify, "--tol", "tol", "verification tolerance (default 1e-9)");
    add_flag_option(verify, "--exhaustive", "exhaustive", "force exhaustive enumeration (N <= 8)");

    SubcommandBinding& product = make("product", qchrom::Command::product,
                                      "bound reports for products of Hadamard graphs", "json");
    add_value_option(product, "--kind", "kind", "categorical|cartesian|strong|lexicographic");
    add_value_option(product, "--n", "n", "first factor order");
    add_value_option(product, "--m", "m", "second factor order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (const auto& bind : bindings) {
        if (!bind->app->parsed()) continue;
        qchrom::CommandRequest req;
        req.command = bind->command;
        req.params = bind->params;
        try {
            req.output = qchrom::output_format_from_string(bind->output);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        return qchrom::run_command(req, std::cout, std::cerr);
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
