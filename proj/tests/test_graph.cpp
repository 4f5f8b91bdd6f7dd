#include "core/graph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "core/catalog.hpp"
#include "core/errors.hpp"
#include "doctest.h"

using namespace cubicfolds;

namespace {

SimpleGraph path(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// Classification by direct isomorphism against the Dynkin trees, independent
// of the arm-signature recognizer.
std::optional<Configuration> classify_by_isomorphism(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    std::vector<SingularityType> parts;
    for (uint64_t comp : g.components()) {
        SimpleGraph sub = g.induced(comp);
        std::optional<SingularityType> found;
        int m = sub.vertex_count();
        std::vector<SingularityType> candidates;
        candidates.push_back(SingularityType::A(m));
        if (m >= 4) candidates.push_back(SingularityType::D(m));
        if (m >= 6 && m <= 8) candidates.push_back(SingularityType::E(m));
        for (const auto& t : candidates)
            if (are_isomorphic(sub, dynkin_diagram(t))) {
                found = t;
                break;
            }
        if (!found) return std::nullopt;
        parts.push_back(*found);
    }
    return Configuration(parts);
}

}  // namespace

TEST_CASE("dynkin diagrams have the right shapes") {
    CHECK(are_isomorphic(dynkin_diagram(SingularityType::A(3)), path(3)));

    SimpleGraph star(4);  // K_{1,3}
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(are_isomorphic(dynkin_diagram(SingularityType::D(4)), star));

    SimpleGraph e8 = dynkin_diagram(SingularityType::E(8));
    CHECK(e8.vertex_count() == 8);
    std::multiset<int> degrees;
    for (int v = 0; v < 8; ++v) degrees.insert(e8.degree(v));
    CHECK(degrees == std::multiset<int>({1, 1, 1, 2, 2, 2, 2, 3}));

    CHECK_THROWS_AS(dynkin_diagram(SingularityType::Q10()), DomainError);
}

TEST_CASE("diagram vertex count equals the Milnor number for every ADE type") {
    for (int n = 1; n <= 16; ++n)
        CHECK(dynkin_diagram(SingularityType::A(n)).vertex_count() == n);
    for (int n = 4; n <= 16; ++n)
        CHECK(dynkin_diagram(SingularityType::D(n)).vertex_count() == n);
    for (int n = 6; n <= 8; ++n)
        CHECK(dynkin_diagram(SingularityType::E(n)).vertex_count() == n);
}

TEST_CASE("config diagrams are disjoint unions") {
    SimpleGraph two_points = config_diagram(Configuration::parse("2A1"));
    CHECK(two_points.vertex_count() == 2);
    CHECK(two_points.edge_count() == 0);

    SimpleGraph d4x3 = config_diagram(Configuration::parse("3D4"));
    CHECK(d4x3.vertex_count() == 12);
    CHECK(d4x3.components().size() == 3);

    SimpleGraph mixed = config_diagram(Configuration::parse("E6+2A2"));
    CHECK(mixed.vertex_count() == 10);
    CHECK(mixed.components().size() == 3);

    CHECK_THROWS_AS(config_diagram(Configuration::parse("J10+A2")), DomainError);
}

TEST_CASE("induced subgraphs") {
    SimpleGraph p3 = path(3);
    SimpleGraph ends = p3.induced(std::vector<int>{0, 2});
    CHECK(ends.vertex_count() == 2);
    CHECK(ends.edge_count() == 0);

    // Removing 3, 8, 12, 13 from Gamma leaves an 11-vertex path.
    const SimpleGraph& gamma = catalog::gamma();
    std::vector<int> keep;
    for (int v = 0; v < 15; ++v) {
        int label = v + 1;
        if (label != 3 && label != 8 && label != 12 && label != 13) keep.push_back(v);
    }
    SimpleGraph sub = gamma.induced(keep);
    CHECK(are_isomorphic(sub, path(11)));
    auto cfg = classify_ade(sub);
    REQUIRE(cfg.has_value());
    CHECK(cfg->format() == "A11");

    CHECK_THROWS_AS(p3.induced(std::vector<int>{0, 5}), DomainError);
}

TEST_CASE("classification of components") {
    auto a11 = classify_ade(path(11));
    REQUIRE(a11.has_value());
    CHECK(a11->format() == "A11");

    CHECK(!classify_ade(catalog::e6_tilde()).has_value());

    SimpleGraph stars(0);
    for (int i = 0; i < 3; ++i) {
        SimpleGraph star(4);
        star.add_edge(0, 1);
        star.add_edge(0, 2);
        star.add_edge(0, 3);
        stars = stars.disjoint_union(star);
    }
    auto d4s = classify_ade(stars);
    REQUIRE(d4s.has_value());
    CHECK(d4s->format() == "3D4");

    CHECK(!classify_ade(SimpleGraph(0)).has_value());

    SimpleGraph cycle(5);
    for (int v = 0; v < 5; ++v) cycle.add_edge(v, (v + 1) % 5);
    CHECK(!classify_ade(cycle).has_value());

    SimpleGraph k14(5);
    for (int v = 1; v < 5; ++v) k14.add_edge(0, v);
    CHECK(!classify_ade(k14).has_value());
}

TEST_CASE("classification distributes over disjoint union") {
    SimpleGraph a = config_diagram(Configuration::parse("D4+A2"));
    SimpleGraph b = config_diagram(Configuration::parse("E6+A1"));
    auto whole = classify_ade(a.disjoint_union(b));
    REQUIRE(whole.has_value());
    CHECK(*whole == Configuration::parse("D4+A2").merged(Configuration::parse("E6+A1")));
}

TEST_CASE("induced embedding decisions") {
    CHECK(is_induced_embeddable(config_diagram(Configuration::parse("A3+A2")), path(6)));
    CHECK(!is_induced_embeddable(config_diagram(Configuration::parse("2A1")), path(2)));

    const SimpleGraph& gamma = catalog::gamma();
    CHECK(!is_induced_embeddable(SimpleGraph(10), gamma));  // no 10 independent vertices
    CHECK(is_induced_embeddable(SimpleGraph(9), gamma));    // but 9 exist

    // Reflexivity and transitivity spot checks.
    CHECK(is_induced_embeddable(gamma, gamma));
    SimpleGraph p5 = path(5);
    CHECK(is_induced_embeddable(path(3), p5));
    CHECK(is_induced_embeddable(p5, path(7)));
    CHECK(is_induced_embeddable(path(3), path(7)));
}

TEST_CASE("embeddability is antisymmetric up to isomorphism on random graphs") {
    std::mt19937 rng(404);
    auto random_graph = [&]() {
        int n = 2 + static_cast<int>(rng() % 6);
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        return g;
    };
    for (int i = 0; i < 200; ++i) {
        SimpleGraph a = random_graph(), b = random_graph();
        bool ab = is_induced_embeddable(a, b);
        bool ba = is_induced_embeddable(b, a);
        if (ab && ba) CHECK(are_isomorphic(a, b));
        // Transitivity against a third sample.
        SimpleGraph c = random_graph();
        if (ab && is_induced_embeddable(b, c)) CHECK(is_induced_embeddable(a, c));
    }
}

TEST_CASE("enumerate_induced_ade on small hosts") {
    auto on_a2 = enumerate_induced_ade(path(2));
    CHECK(on_a2.size() == 2);
    CHECK(on_a2.count(Configuration::parse("A1")) == 1);
    CHECK(on_a2.count(Configuration::parse("A2")) == 1);

    CHECK_THROWS_AS(enumerate_induced_ade(SimpleGraph(25)), LimitError);
}

TEST_CASE("enumeration on the affine E6 tree agrees with the isomorphism oracle") {
    const SimpleGraph& host = catalog::e6_tilde();
    std::set<Configuration> oracle;
    for (uint64_t mask = 1; mask < (1ull << 7); ++mask) {
        auto cfg = classify_by_isomorphism(host.induced(mask));
        if (cfg) oracle.insert(*cfg);
    }
    auto fast = enumerate_induced_ade(host);
    CHECK(fast == oracle);
    CHECK(fast.size() == 20);
    CHECK(fast.count(Configuration::parse("A5+A1")) == 1);
    CHECK(fast.count(Configuration::parse("3A2")) == 1);
    CHECK(fast.count(Configuration::parse("4A1")) == 1);
    CHECK(fast.count(Configuration::parse("E6")) == 1);
    CHECK(fast.count(Configuration::parse("E6+A1")) == 0);
}

TEST_CASE("isomorphisms and automorphisms") {
    SimpleGraph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(automorphisms(star).size() == 6);

    CHECK(automorphisms(catalog::gamma()).size() == 72);

    // Gamma minus {1,3} is Delta.
    std::vector<int> keep;
    for (int v = 0; v < 15; ++v)
        if (v != 0 && v != 2) keep.push_back(v);
    CHECK(are_isomorphic(catalog::gamma().induced(keep), catalog::delta()));

    CHECK_THROWS_AS(automorphisms(SimpleGraph(21)), LimitError);
    CHECK(!are_isomorphic(path(4), star));
}

TEST_CASE("edge list and DOT round trips") {
    SimpleGraph g = SimpleGraph::from_edge_list_text("# comment\nn 4\n0 1\n1 2\n2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(are_isomorphic(g, path(4)));

    CHECK_THROWS_AS(SimpleGraph::from_edge_list_text("0 1\n"), ParseError);
    CHECK_THROWS_AS(SimpleGraph::from_edge_list_text("n 2\n0 2\n"), DomainError);
    CHECK_THROWS_AS(SimpleGraph::from_edge_list_text("n 2\n0 0\n"), DomainError);

    std::string dot = catalog::gamma().to_dot("gamma");
    CHECK(dot.find("graph gamma {") == 0);
    CHECK(dot.find("label=\"15\"") != std::string::npos);
    CHECK(dot.find(" -- ") != std::string::npos);
}
