// Command-line surface over the cubicfolds C API: classification of
// singularity configurations on cubic threefolds, deformation closures,
// lattice obstructions, Picard arithmetic on F2, and table verification.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 data error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cubicfolds.h"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

[[noreturn]] void die(cf_status status) {
    std::cerr << "error: " << cf_last_error() << "\n";
    std::exit(status == CF_ERROR_INVALID ? kExitUsage : kExitData);
}

void check(cf_status status) {
    if (status != CF_OK) die(status);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    cf_string_free(s);
    return out;
}

struct GraphHandle {
    cf_graph* g = nullptr;
    ~GraphHandle() { cf_graph_free(g); }
};

struct ConfigHandle {
    cf_config* c = nullptr;
    ~ConfigHandle() { cf_config_free(c); }
};

struct LatticeHandle {
    cf_lattice* l = nullptr;
    ~LatticeHandle() { cf_lattice_free(l); }
};

// "--graph" accepts builtin:gamma / builtin:delta / builtin:e6tilde or a path
// to an edge-list file.
void load_graph(const std::string& spec, GraphHandle& out) {
    if (spec.rfind("builtin:", 0) == 0) {
        check(cf_graph_builtin(spec.substr(8).c_str(), &out.g));
        return;
    }
    std::ifstream in(spec);
    if (!in) {
        std::cerr << "error: cannot open graph file '" << spec << "'\n";
        std::exit(kExitData);
    }
    std::ostringstream text;
    text << in.rdbuf();
    check(cf_graph_from_edge_list(text.str().c_str(), &out.g));
}

// Parses "a,b" into a divisor class coefficient pair.
std::pair<long long, long long> parse_class(const std::string& text) {
    size_t comma = text.find(',');
    if (comma == std::string::npos) {
        std::cerr << "error: expected 'a,b' for a divisor class, got '" << text << "'\n";
        std::exit(kExitUsage);
    }
    try {
        return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    } catch (const std::exception&) {
        std::cerr << "error: bad divisor class '" << text << "'\n";
        std::exit(kExitUsage);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification engine for singular cubic threefolds"};
    app.require_subcommand(1);

    // classify
    std::string classify_graph, classify_subset;
    auto* classify = app.add_subcommand("classify", "classify a graph as an ADE configuration");
    classify->add_option("--graph", classify_graph, "builtin:<name> or edge-list file")->required();
    classify->add_option("--subset", classify_subset, "comma-separated vertex labels to keep");

    // embed
    std::string embed_pattern, embed_host;
    auto* embed = app.add_subcommand("embed", "test induced-subgraph embedding of diagrams");
    embed->add_option("--pattern", embed_pattern, "configuration")->required();
    embed->add_option("--host", embed_host, "configuration or builtin:<graph>")->required();

    // closure
    std::string closure_seeds;
    bool closure_maximal = false;
    auto* closure_cmd = app.add_subcommand("closure", "downward deformation closure of seeds");
    closure_cmd->add_option("--seeds", closure_seeds, "comma-separated configurations")->required();
    closure_cmd->add_flag("--maximal-only", closure_maximal, "print only maximal elements");

    // enumerate
    std::string enum_host, enum_format = "text";
    auto* enumerate = app.add_subcommand("enumerate", "all ADE configurations on a host graph");
    enumerate->add_option("--host", enum_host, "builtin:<name> or edge-list file")->required();
    enumerate->add_option("--format", enum_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // lattice
    std::string lattice_op, lattice_type, lattice_host = "T";
    auto* lattice = app.add_subcommand("lattice", "signature, discriminant, and obstructions");
    lattice->add_option("op", lattice_op, "signature|discriminant|obstruction")
        ->required()
        ->check(CLI::IsMember({"signature", "discriminant", "obstruction"}));
    lattice->add_option("--type", lattice_type, "ADE configuration, U, or T")->required();
    lattice->add_option("--host", lattice_host, "host lattice for obstruction (default T)");

    // picard
    std::string picard_op, picard_class, picard_class2;
    int picard_parts = 2;
    auto* picard = app.add_subcommand("picard", "divisor-class arithmetic on F2");
    picard->add_option("op", picard_op, "intersect|genus|split|solve-genus")
        ->required()
        ->check(CLI::IsMember({"intersect", "genus", "split", "solve-genus"}));
    picard->add_option("--class", picard_class, "a,b  (for solve-genus: b,g)")->required();
    picard->add_option("--class2", picard_class2, "a,b for intersect");
    picard->add_option("--parts", picard_parts, "part count for split (1..6)");

    // verify
    std::string verify_only, verify_format = "text";
    auto* verify = app.add_subcommand("verify", "run the table verification checks");
    verify->add_option("--only", verify_only, "run a single check id");
    verify->add_option("--format", verify_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // export-dot
    std::string export_graph, export_poset;
    auto* export_dot = app.add_subcommand("export-dot", "DOT export of a graph or Hasse diagram");
    export_dot->add_option("--graph", export_graph, "builtin:<name> or edge-list file");
    export_dot->add_option("--poset", export_poset, "comma-separated configurations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (classify->parsed()) {
        GraphHandle g;
        load_graph(classify_graph, g);
        char* text = nullptr;
        if (!classify_subset.empty()) {
            GraphHandle sub;
            check(cf_graph_induced_by_labels(g.g, classify_subset.c_str(), &sub.g));
            check(cf_graph_classify(sub.g, &text));
        } else {
            check(cf_graph_classify(g.g, &text));
        }
        std::cout << take_string(text) << "\n";
        return 0;
    }

    if (embed->parsed()) {
        ConfigHandle pattern;
        check(cf_config_parse(embed_pattern.c_str(), &pattern.c));
        GraphHandle pattern_graph;
        check(cf_graph_config_diagram(pattern.c, &pattern_graph.g));
        GraphHandle host_graph;
        if (embed_host.rfind("builtin:", 0) == 0) {
            load_graph(embed_host, host_graph);
        } else {
            ConfigHandle host;
            check(cf_config_parse(embed_host.c_str(), &host.c));
            check(cf_graph_config_diagram(host.c, &host_graph.g));
        }
        int ok = 0;
        check(cf_graph_is_induced_subgraph(pattern_graph.g, host_graph.g, &ok));
        std::cout << (ok ? "true" : "false") << "\n";
        return 0;
    }

    if (closure_cmd->parsed()) {
        char* text = nullptr;
        check(cf_closure(closure_seeds.c_str(), closure_maximal ? 1 : 0, &text));
        std::cout << take_string(text);
        return 0;
    }

    if (enumerate->parsed()) {
        GraphHandle g;
        load_graph(enum_host, g);
        char* text = nullptr;
        check(cf_graph_enumerate_ade(g.g, &text));
        std::string lines = take_string(text);
        if (enum_format == "json") {
            std::cout << "{\n  \"schema\": \"v1\",\n  \"host\": \"" << enum_host
                      << "\",\n  \"configurations\": [";
            std::istringstream in(lines);
            std::string line;
            bool first = true;
            size_t count = 0;
            std::ostringstream items;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                items << (first ? "" : ", ") << '"' << line << '"';
                first = false;
                ++count;
            }
            std::cout << items.str() << "],\n  \"count\": " << count << "\n}\n";
        } else {
            std::cout << lines;
        }
        return 0;
    }

    if (lattice->parsed()) {
        LatticeHandle l;
        check(cf_lattice_create(lattice_type.c_str(), &l.l));
        if (lattice_op == "signature") {
            int plus = 0, minus = 0;
            check(cf_lattice_signature(l.l, &plus, &minus));
            std::cout << plus << "," << minus << "\n";
        } else if (lattice_op == "discriminant") {
            char* text = nullptr;
            check(cf_lattice_discriminant(l.l, &text));
            std::cout << take_string(text) << "\n";
        } else {
            LatticeHandle host;
            check(cf_lattice_create(lattice_host.c_str(), &host.l));
            char* text = nullptr;
            check(cf_lattice_obstruction_json(l.l, host.l, &text));
            std::cout << take_string(text) << "\n";
        }
        return 0;
    }

    if (picard->parsed()) {
        auto [a, b] = parse_class(picard_class);
        if (picard_op == "intersect") {
            if (picard_class2.empty()) {
                std::cerr << "error: intersect needs --class2\n";
                return kExitUsage;
            }
            auto [a2, b2] = parse_class(picard_class2);
            long long result = 0;
            check(cf_picard_intersect(a, b, a2, b2, &result));
            std::cout << result << "\n";
        } else if (picard_op == "genus") {
            char* text = nullptr;
            check(cf_picard_genus(a, b, &text));
            std::cout << take_string(text) << "\n";
        } else if (picard_op == "solve-genus") {
            char* text = nullptr;
            check(cf_picard_solve_genus(a, b, &text));
            std::cout << take_string(text) << "\n";
        } else {
            char* text = nullptr;
            check(cf_picard_splittings_json(a, b, picard_parts, &text));
            std::cout << take_string(text) << "\n";
        }
        return 0;
    }

    if (verify->parsed()) {
        char* report = nullptr;
        int ok = 0;
        check(cf_verify(verify_only.empty() ? nullptr : verify_only.c_str(),
                        verify_format == "json" ? 1 : 0, &report, &ok));
        std::cout << take_string(report);
        return ok ? 0 : kExitCheckFailure;
    }

    if (export_dot->parsed()) {
        if (export_graph.empty() == export_poset.empty()) {
            std::cerr << "error: export-dot needs exactly one of --graph / --poset\n";
            return kExitUsage;
        }
        char* text = nullptr;
        if (!export_graph.empty()) {
            GraphHandle g;
            load_graph(export_graph, g);
            check(cf_graph_to_dot(g.g, &text));
        } else {
            check(cf_poset_dot(export_poset.c_str(), &text));
        }
        std::cout << take_string(text);
        return 0;
    }

    return kExitUsage;
}
