#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "types.hpp"

namespace cubicfolds {

// Undirected simple graph on at most 64 labeled vertices, adjacency stored as
// per-vertex neighbor bitmasks.  A stable label map to external names (e.g.
// the 1..15 numbering of Gamma) travels with the graph through induced
// subgraphs.  Immutable once built.
class SimpleGraph {
public:
    explicit SimpleGraph(int n);
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    // Plain edge-list format: header "n <count>", then one "u v" pair per
    // line; vertices are 0..n-1.  Lines starting with '#' are ignored.
    static SimpleGraph from_edge_list_text(std::string_view text);

    void add_edge(int u, int v);
    void set_label(int v, std::string label);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    uint64_t neighbors(int v) const;
    int degree(int v) const;
    const std::string& label(int v) const;
    std::optional<int> vertex_by_label(std::string_view label) const;

    SimpleGraph induced(uint64_t keep_mask) const;
    SimpleGraph induced(std::span<const int> keep) const;
    SimpleGraph disjoint_union(const SimpleGraph& o) const;

    // Connected components as vertex bitmasks, lowest vertex first.
    std::vector<uint64_t> components() const;

    std::string to_dot(std::string_view name = "G") const;

private:
    int n_ = 0;
    std::vector<uint64_t> adj_;
    std::vector<std::string> labels_;
    void check_vertex(int v) const;
};

// Standard ADE Dynkin diagram of t: A_n is the path on n vertices; D_n is the
// path on n-1 vertices with one extra leaf on the second vertex from one end;
// E_n likewise with the leaf on the third vertex.  Throws DomainError for
// non-ADE types.
SimpleGraph dynkin_diagram(const SingularityType& t);

// Disjoint union of the part diagrams; vertex count equals mu(c).
SimpleGraph config_diagram(const Configuration& c);

// If every connected component of g is an ADE diagram, the configuration of
// the component types; otherwise (including the empty graph) nullopt.
std::optional<Configuration> classify_ade(const SimpleGraph& g);

// Whether some injective vertex map sends pattern onto an induced subgraph of
// host, preserving both edges and non-edges.
bool is_induced_embeddable(const SimpleGraph& pattern, const SimpleGraph& host);

// All distinct ADE configurations realized by induced subgraphs of host.
// Exhaustive over the 2^n vertex subsets; host must have at most 24 vertices.
std::set<Configuration> enumerate_induced_ade(const SimpleGraph& host);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// The full automorphism group as a list of vertex permutations; at most 20
// vertices.
std::vector<std::vector<int>> automorphisms(const SimpleGraph& g);

}  // namespace cubicfolds
