/* Exercises the shared-library surface from plain C: handles, error codes,
 * and string ownership. */

#include <stdio.h>
#include <string.h>

#include "cubicfolds.h"

static int g_failures = 0;

#define EXPECT(cond, what)                                        \
    do {                                                          \
        if (!(cond)) {                                            \
            ++g_failures;                                         \
            fprintf(stderr, "FAIL %s:%d %s\n", __FILE__, __LINE__, what); \
        }                                                         \
    } while (0)

static void test_configs(void) {
    cf_config* c = NULL;
    EXPECT(cf_config_parse("A1+2A5", &c) == CF_OK, "parse");
    char* text = NULL;
    EXPECT(cf_config_format(c, &text) == CF_OK, "format");
    EXPECT(text && strcmp(text, "2A5+A1") == 0, "canonical text");
    cf_string_free(text);
    int mu = 0, k = 0, ade = 0;
    EXPECT(cf_config_mu(c, &mu) == CF_OK && mu == 11, "mu");
    EXPECT(cf_config_count(c, &k) == CF_OK && k == 3, "count");
    EXPECT(cf_config_is_ade(c, &ade) == CF_OK && ade == 1, "ade");
    cf_config_free(c);

    c = NULL;
    EXPECT(cf_config_parse("D3", &c) == CF_ERROR_DOMAIN, "D3 rejected");
    EXPECT(strlen(cf_last_error()) > 0, "error message set");
    EXPECT(cf_config_parse("A1+", &c) == CF_ERROR_PARSE, "syntax error code");
    EXPECT(cf_config_parse(NULL, &c) == CF_ERROR_INVALID, "null rejected");
}

static void test_graphs(void) {
    cf_graph* gamma = NULL;
    EXPECT(cf_graph_builtin("gamma", &gamma) == CF_OK, "builtin gamma");
    int n = 0, e = 0;
    EXPECT(cf_graph_vertex_count(gamma, &n) == CF_OK && n == 15, "gamma order");
    EXPECT(cf_graph_edge_count(gamma, &e) == CF_OK && e == 18, "gamma size");

    cf_graph* sub = NULL;
    EXPECT(cf_graph_induced_by_labels(gamma, "1,7,2,10,3,11,4,14,5,15,6", &sub) == CF_OK,
           "induced");
    char* cls = NULL;
    EXPECT(cf_graph_classify(sub, &cls) == CF_OK, "classify");
    EXPECT(cls && strcmp(cls, "A11") == 0, "A11 path");
    cf_string_free(cls);
    cf_graph_free(sub);

    uint64_t auts = 0;
    EXPECT(cf_graph_automorphism_count(gamma, &auts) == CF_OK && auts == 72, "Aut(Gamma)");

    char* dot = NULL;
    EXPECT(cf_graph_to_dot(gamma, &dot) == CF_OK, "dot");
    EXPECT(dot && strncmp(dot, "graph", 5) == 0, "dot prefix");
    cf_string_free(dot);
    cf_graph_free(gamma);

    cf_graph* bad = NULL;
    EXPECT(cf_graph_builtin("nachos", &bad) == CF_ERROR_DOMAIN, "unknown builtin");
    EXPECT(cf_graph_from_edge_list("nonsense", &bad) == CF_ERROR_PARSE, "edge list parse");

    cf_graph* wide = NULL;
    char* none = NULL;
    EXPECT(cf_graph_from_edge_list("n 25\n", &wide) == CF_OK, "25 isolated vertices");
    EXPECT(cf_graph_enumerate_ade(wide, &none) == CF_ERROR_LIMIT, "enumeration size limit");
    cf_graph_free(wide);
}

static void test_deformation(void) {
    cf_config* big = NULL;
    cf_config* small = NULL;
    EXPECT(cf_config_parse("A11", &big) == CF_OK, "parse big");
    EXPECT(cf_config_parse("A9+A1", &small) == CF_OK, "parse small");
    int yes = 0;
    EXPECT(cf_deforms_to(big, small, 0, &yes) == CF_OK && yes == 1, "A11 -> A9+A1");
    cf_config_free(big);
    cf_config_free(small);

    cf_config* over = NULL;
    cf_config* a1 = NULL;
    EXPECT(cf_config_parse("2A8", &over) == CF_OK, "parse 2A8");
    EXPECT(cf_config_parse("A1", &a1) == CF_OK, "parse A1");
    EXPECT(cf_deforms_to(over, a1, 0, &yes) == CF_ERROR_GATE, "gate error code");
    EXPECT(cf_deforms_to(over, a1, 1, &yes) == CF_OK && yes == 1, "gate override");
    cf_config_free(over);
    cf_config_free(a1);

    char* lines = NULL;
    EXPECT(cf_closure("2A1", 0, &lines) == CF_OK, "closure");
    EXPECT(lines && strstr(lines, "2A1") && strstr(lines, "A1"), "closure contents");
    cf_string_free(lines);

    char* reach = NULL;
    EXPECT(cf_unimodal_reachable("J10", &reach) == CF_OK, "reachable");
    EXPECT(reach && strstr(reach, "E8") && strstr(reach, "E6"), "J10 reaches E8, E6");
    cf_string_free(reach);
}

static void test_lattices(void) {
    cf_lattice* t = NULL;
    EXPECT(cf_lattice_create("T", &t) == CF_OK, "lattice T");
    int rank = 0, plus = 0, minus = 0;
    EXPECT(cf_lattice_rank(t, &rank) == CF_OK && rank == 16, "rank 16");
    EXPECT(cf_lattice_signature(t, &plus, &minus) == CF_OK && plus == 14 && minus == 2,
           "signature (14,2)");
    char* disc = NULL;
    EXPECT(cf_lattice_discriminant(t, &disc) == CF_OK, "discriminant");
    EXPECT(disc && strcmp(disc, "2,2,2,2,2,2") == 0, "(Z/2)^6");
    cf_string_free(disc);

    cf_lattice* a12 = NULL;
    EXPECT(cf_lattice_create("A12", &a12) == CF_OK, "lattice A12");
    char* json = NULL;
    EXPECT(cf_lattice_obstruction_json(a12, t, &json) == CF_OK, "obstruction json");
    EXPECT(json && strstr(json, "\"fires\": true"), "A12 obstructed");
    cf_string_free(json);

    char* text = NULL;
    EXPECT(cf_lattice_to_text(t, &text) == CF_OK, "to text");
    cf_lattice* back = NULL;
    EXPECT(cf_lattice_from_text(text, &back) == CF_OK, "from text");
    int rank2 = 0;
    EXPECT(cf_lattice_rank(back, &rank2) == CF_OK && rank2 == 16, "round trip rank");
    cf_string_free(text);
    cf_lattice_free(back);
    cf_lattice_free(a12);
    cf_lattice_free(t);
}

static void test_picard(void) {
    long long x = 0;
    EXPECT(cf_picard_intersect(1, 0, 1, 0, &x) == CF_OK && x == -2, "sigma^2");
    char* g = NULL;
    EXPECT(cf_picard_genus(2, 6, &g) == CF_OK && strcmp(g, "3") == 0, "genus 3");
    cf_string_free(g);
    char* roots = NULL;
    EXPECT(cf_picard_solve_genus(6, 3, &roots) == CF_OK && strcmp(roots, "2,4") == 0,
           "roots 2,4");
    cf_string_free(roots);
    char* split = NULL;
    EXPECT(cf_picard_splittings_json(2, 6, 2, &split) == CF_OK, "splittings");
    EXPECT(split && strstr(split, "2*s+5*f"), "f + 2s+5f present");
    cf_string_free(split);
}

static void test_verify_surface(void) {
    char* ids = NULL;
    EXPECT(cf_verify_check_ids(&ids) == CF_OK, "check ids");
    EXPECT(ids && strstr(ids, "mu_k_columns"), "ids content");
    cf_string_free(ids);

    char* report = NULL;
    int ok = 0;
    EXPECT(cf_verify("mu_k_columns", 1, &report, &ok) == CF_OK, "verify one");
    EXPECT(ok == 1, "mu_k check passes");
    EXPECT(report && strstr(report, "\"passed\": true"), "json report");
    cf_string_free(report);
}

int main(void) {
    EXPECT(strcmp(cf_version(), "1.0.0") == 0, "version");
    test_configs();
    test_graphs();
    test_deformation();
    test_lattices();
    test_picard();
    test_verify_surface();
    if (g_failures) {
        fprintf(stderr, "%d C API failures\n", g_failures);
        return 1;
    }
    printf("C API surface OK\n");
    return 0;
}
