#include "cubicfolds.h"

#include <cstdlib>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/deformation.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/lattice.hpp"
#include "core/picard.hpp"
#include "core/types.hpp"
#include "core/verify.hpp"

using namespace cubicfolds;

struct cf_config {
    Configuration value;
};
struct cf_graph {
    SimpleGraph value;
};
struct cf_lattice {
    IntLattice value;
};

namespace {

thread_local std::string g_last_error;

cf_status fail(cf_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
cf_status guarded(Fn&& fn) {
    try {
        fn();
        return CF_OK;
    } catch (const ParseError& e) {
        return fail(CF_ERROR_PARSE, e.what());
    } catch (const GateError& e) {
        return fail(CF_ERROR_GATE, e.what());
    } catch (const LimitError& e) {
        return fail(CF_ERROR_LIMIT, e.what());
    } catch (const DataError& e) {
        return fail(CF_ERROR_DATA, e.what());
    } catch (const DomainError& e) {
        return fail(CF_ERROR_DOMAIN, e.what());
    } catch (const std::exception& e) {
        return fail(CF_ERROR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cf_status require(bool ok, const char* what) {
    return ok ? CF_OK : fail(CF_ERROR_INVALID, what);
}

std::vector<Configuration> parse_config_list(const char* text) {
    std::vector<Configuration> out;
    std::string s(text ? text : "");
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(',', pos);
        std::string item = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (!item.empty()) out.push_back(Configuration::parse(item));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (out.empty()) throw ParseError("expected a comma-separated configuration list");
    return out;
}

std::string join_lines(const std::set<Configuration>& configs) {
    std::string out;
    for (const auto& c : configs) {
        out += c.format();
        out += '\n';
    }
    return out;
}

}  // namespace

extern "C" {

const char* cf_version(void) { return "1.0.0"; }

const char* cf_last_error(void) { return g_last_error.c_str(); }

void cf_string_free(char* s) { std::free(s); }

/* ---------------- configurations ---------------- */

cf_status cf_config_parse(const char* text, cf_config** out) {
    if (cf_status s = require(text && out, "cf_config_parse: null argument")) return s;
    return guarded([&] { *out = new cf_config{Configuration::parse(text)}; });
}

void cf_config_free(cf_config* c) { delete c; }

cf_status cf_config_format(const cf_config* c, char** out) {
    if (cf_status s = require(c && out, "cf_config_format: null argument")) return s;
    return guarded([&] { *out = dup_string(c->value.format()); });
}

cf_status cf_config_mu(const cf_config* c, int* out) {
    if (cf_status s = require(c && out, "cf_config_mu: null argument")) return s;
    *out = c->value.mu();
    return CF_OK;
}

cf_status cf_config_count(const cf_config* c, int* out) {
    if (cf_status s = require(c && out, "cf_config_count: null argument")) return s;
    *out = c->value.count();
    return CF_OK;
}

cf_status cf_config_is_ade(const cf_config* c, int* out) {
    if (cf_status s = require(c && out, "cf_config_is_ade: null argument")) return s;
    *out = c->value.all_ade() ? 1 : 0;
    return CF_OK;
}

/* ---------------- graphs ---------------- */

cf_status cf_graph_builtin(const char* name, cf_graph** out) {
    if (cf_status s = require(name && out, "cf_graph_builtin: null argument")) return s;
    return guarded([&] {
        std::string n = name;
        if (n == "gamma")
            *out = new cf_graph{catalog::gamma()};
        else if (n == "delta")
            *out = new cf_graph{catalog::delta()};
        else if (n == "e6tilde")
            *out = new cf_graph{catalog::e6_tilde()};
        else
            throw DomainError("unknown builtin graph '" + n + "' (gamma, delta, e6tilde)");
    });
}

cf_status cf_graph_from_edge_list(const char* text, cf_graph** out) {
    if (cf_status s = require(text && out, "cf_graph_from_edge_list: null argument")) return s;
    return guarded([&] { *out = new cf_graph{SimpleGraph::from_edge_list_text(text)}; });
}

void cf_graph_free(cf_graph* g) { delete g; }

cf_status cf_graph_vertex_count(const cf_graph* g, int* out) {
    if (cf_status s = require(g && out, "cf_graph_vertex_count: null argument")) return s;
    *out = g->value.vertex_count();
    return CF_OK;
}

cf_status cf_graph_edge_count(const cf_graph* g, int* out) {
    if (cf_status s = require(g && out, "cf_graph_edge_count: null argument")) return s;
    *out = g->value.edge_count();
    return CF_OK;
}

cf_status cf_graph_induced_by_labels(const cf_graph* g, const char* labels, cf_graph** out) {
    if (cf_status s = require(g && labels && out, "cf_graph_induced_by_labels: null argument"))
        return s;
    return guarded([&] {
        std::vector<int> keep;
        std::string text = labels;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            std::string item = text.substr(pos, next == std::string::npos ? next : next - pos);
            if (!item.empty()) {
                auto v = g->value.vertex_by_label(item);
                if (!v) throw DomainError("no vertex labeled '" + item + "'");
                keep.push_back(*v);
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        *out = new cf_graph{g->value.induced(keep)};
    });
}

cf_status cf_graph_config_diagram(const cf_config* c, cf_graph** out) {
    if (cf_status s = require(c && out, "cf_graph_config_diagram: null argument")) return s;
    return guarded([&] { *out = new cf_graph{config_diagram(c->value)}; });
}

cf_status cf_graph_classify(const cf_graph* g, char** out) {
    if (cf_status s = require(g && out, "cf_graph_classify: null argument")) return s;
    return guarded([&] {
        auto cfg = classify_ade(g->value);
        *out = dup_string(cfg ? cfg->format() : "not-ADE");
    });
}

cf_status cf_graph_is_induced_subgraph(const cf_graph* pattern, const cf_graph* host, int* out) {
    if (cf_status s = require(pattern && host && out, "cf_graph_is_induced_subgraph: null argument"))
        return s;
    return guarded([&] { *out = is_induced_embeddable(pattern->value, host->value) ? 1 : 0; });
}

cf_status cf_graph_enumerate_ade(const cf_graph* host, char** out) {
    if (cf_status s = require(host && out, "cf_graph_enumerate_ade: null argument")) return s;
    return guarded([&] { *out = dup_string(join_lines(enumerate_induced_ade(host->value))); });
}

cf_status cf_graph_are_isomorphic(const cf_graph* a, const cf_graph* b, int* out) {
    if (cf_status s = require(a && b && out, "cf_graph_are_isomorphic: null argument")) return s;
    return guarded([&] { *out = are_isomorphic(a->value, b->value) ? 1 : 0; });
}

cf_status cf_graph_automorphism_count(const cf_graph* g, uint64_t* out) {
    if (cf_status s = require(g && out, "cf_graph_automorphism_count: null argument")) return s;
    return guarded([&] { *out = automorphisms(g->value).size(); });
}

cf_status cf_graph_to_dot(const cf_graph* g, char** out) {
    if (cf_status s = require(g && out, "cf_graph_to_dot: null argument")) return s;
    return guarded([&] { *out = dup_string(g->value.to_dot()); });
}

/* ---------------- deformation order ---------------- */

cf_status cf_versality_gate(const cf_config* c, int* out) {
    if (cf_status s = require(c && out, "cf_versality_gate: null argument")) return s;
    *out = versality_gate(c->value) ? 1 : 0;
    return CF_OK;
}

cf_status cf_deforms_to(const cf_config* big, const cf_config* small, int override_gate,
                        int* out) {
    if (cf_status s = require(big && small && out, "cf_deforms_to: null argument")) return s;
    return guarded(
        [&] { *out = deforms_to(big->value, small->value, override_gate != 0) ? 1 : 0; });
}

cf_status cf_closure(const char* seeds, int maximal_only, char** out) {
    if (cf_status s = require(seeds && out, "cf_closure: null argument")) return s;
    return guarded([&] {
        auto list = parse_config_list(seeds);
        std::set<Configuration> seed_set(list.begin(), list.end());
        auto closed = closure(seed_set);
        *out = dup_string(join_lines(maximal_only ? maximal_elements(closed) : closed));
    });
}

cf_status cf_unimodal_reachable(const char* type_token, char** out) {
    if (cf_status s = require(type_token && out, "cf_unimodal_reachable: null argument")) return s;
    return guarded([&] {
        auto reachable = unimodal_reachable(SingularityType::parse(type_token));
        std::string text;
        for (const auto& t : reachable) {
            if (!text.empty()) text += ',';
            text += t.name();
        }
        *out = dup_string(text);
    });
}

cf_status cf_poset_dot(const char* configs, char** out) {
    if (cf_status s = require(configs && out, "cf_poset_dot: null argument")) return s;
    return guarded([&] { *out = dup_string(poset_dot(parse_config_list(configs))); });
}

cf_status cf_poset_edges(const char* configs, char** out) {
    if (cf_status s = require(configs && out, "cf_poset_edges: null argument")) return s;
    return guarded([&] { *out = dup_string(poset_edge_list(parse_config_list(configs))); });
}

/* ---------------- lattices ---------------- */

cf_status cf_lattice_create(const char* spec, cf_lattice** out) {
    if (cf_status s = require(spec && out, "cf_lattice_create: null argument")) return s;
    return guarded([&] {
        std::string text = spec;
        if (text == "T")
            *out = new cf_lattice{IntLattice::o16_milnor()};
        else if (text == "U")
            *out = new cf_lattice{IntLattice::hyperbolic_u()};
        else
            *out = new cf_lattice{IntLattice::of_config(Configuration::parse(text))};
    });
}

cf_status cf_lattice_from_text(const char* text, cf_lattice** out) {
    if (cf_status s = require(text && out, "cf_lattice_from_text: null argument")) return s;
    return guarded([&] { *out = new cf_lattice{IntLattice::from_text(text)}; });
}

void cf_lattice_free(cf_lattice* l) { delete l; }

cf_status cf_lattice_rank(const cf_lattice* l, int* out) {
    if (cf_status s = require(l && out, "cf_lattice_rank: null argument")) return s;
    *out = l->value.rank();
    return CF_OK;
}

cf_status cf_lattice_to_text(const cf_lattice* l, char** out) {
    if (cf_status s = require(l && out, "cf_lattice_to_text: null argument")) return s;
    return guarded([&] { *out = dup_string(l->value.to_text()); });
}

cf_status cf_lattice_signature(const cf_lattice* l, int* n_plus, int* n_minus) {
    if (cf_status s = require(l && n_plus && n_minus, "cf_lattice_signature: null argument"))
        return s;
    return guarded([&] {
        auto [p, m] = l->value.signature();
        *n_plus = p;
        *n_minus = m;
    });
}

cf_status cf_lattice_discriminant(const cf_lattice* l, char** out) {
    if (cf_status s = require(l && out, "cf_lattice_discriminant: null argument")) return s;
    return guarded([&] { *out = dup_string(discriminant_group(l->value).to_string()); });
}

cf_status cf_lattice_obstruction_json(const cf_lattice* s, const cf_lattice* host, char** out) {
    if (cf_status st = require(s && host && out, "cf_lattice_obstruction_json: null argument"))
        return st;
    return guarded([&] { *out = dup_string(obstruction_json(s->value, host->value)); });
}

/* ---------------- Picard arithmetic ---------------- */

cf_status cf_picard_intersect(long long a1, long long b1, long long a2, long long b2,
                              long long* out) {
    if (cf_status s = require(out != nullptr, "cf_picard_intersect: null argument")) return s;
    *out = intersect(DivisorClass{a1, b1}, DivisorClass{a2, b2});
    return CF_OK;
}

cf_status cf_picard_genus(long long a, long long b, char** out) {
    if (cf_status s = require(out != nullptr, "cf_picard_genus: null argument")) return s;
    return guarded([&] { *out = dup_string(genus(DivisorClass{a, b}).to_string()); });
}

cf_status cf_picard_solve_genus(long long b, long long g, char** out) {
    if (cf_status s = require(out != nullptr, "cf_picard_solve_genus: null argument")) return s;
    return guarded([&] {
        std::string text;
        for (long long root : solve_genus(b, g)) {
            if (!text.empty()) text += ',';
            text += std::to_string(root);
        }
        *out = dup_string(text);
    });
}

cf_status cf_picard_splittings_json(long long a, long long b, int parts, char** out) {
    if (cf_status s = require(out != nullptr, "cf_picard_splittings_json: null argument")) return s;
    return guarded([&] { *out = dup_string(splittings_json(DivisorClass{a, b}, parts)); });
}

/* ---------------- verification ---------------- */

cf_status cf_verify(const char* check_id, int format, char** report, int* all_passed_out) {
    if (cf_status s = require(report && all_passed_out, "cf_verify: null argument")) return s;
    return guarded([&] {
        std::vector<CheckResult> results;
        if (check_id && *check_id)
            results.push_back(run_check(check_id));
        else
            results = run_all();
        *report = dup_string(format == 1 ? report_json(results) : report_text(results));
        *all_passed_out = all_passed(results) ? 1 : 0;
    });
}

cf_status cf_verify_check_ids(char** out) {
    if (cf_status s = require(out != nullptr, "cf_verify_check_ids: null argument")) return s;
    return guarded([&] {
        std::string text;
        for (const auto& id : check_ids()) {
            if (!text.empty()) text += ',';
            text += id;
        }
        *out = dup_string(text);
    });
}

}  // extern "C"
