#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "errors.hpp"

namespace cubicfolds {

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0 || n > 64) throw DomainError("graph must have 0..64 vertices");
    adj_.assign(static_cast<size_t>(n), 0);
    labels_.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) labels_[v] = std::to_string(v);
}

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range 0.." +
                          std::to_string(n_ - 1));
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

void SimpleGraph::set_label(int v, std::string label) {
    check_vertex(v);
    labels_[v] = std::move(label);
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (uint64_t m : adj_) total += std::popcount(m);
    return total / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

uint64_t SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int SimpleGraph::degree(int v) const { return std::popcount(neighbors(v)); }

const std::string& SimpleGraph::label(int v) const {
    check_vertex(v);
    return labels_[v];
}

std::optional<int> SimpleGraph::vertex_by_label(std::string_view label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

SimpleGraph SimpleGraph::induced(uint64_t keep_mask) const {
    if (n_ < 64 && (keep_mask >> n_) != 0) throw DomainError("induced: vertex out of range");
    std::vector<int> order;
    for (int v = 0; v < n_; ++v)
        if ((keep_mask >> v) & 1u) order.push_back(v);
    SimpleGraph out(static_cast<int>(order.size()));
    for (size_t i = 0; i < order.size(); ++i) {
        out.labels_[i] = labels_[order[i]];
        for (size_t j = i + 1; j < order.size(); ++j)
            if (has_edge(order[i], order[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return out;
}

SimpleGraph SimpleGraph::induced(std::span<const int> keep) const {
    uint64_t mask = 0;
    for (int v : keep) {
        check_vertex(v);
        mask |= 1ull << v;
    }
    return induced(mask);
}

SimpleGraph SimpleGraph::disjoint_union(const SimpleGraph& o) const {
    if (n_ + o.n_ > 64) throw DomainError("disjoint union exceeds 64 vertices");
    SimpleGraph out(n_ + o.n_);
    out.labels_ = labels_;
    out.labels_.insert(out.labels_.end(), o.labels_.begin(), o.labels_.end());
    for (int v = 0; v < n_; ++v) out.adj_[v] = adj_[v];
    for (int v = 0; v < o.n_; ++v) out.adj_[n_ + v] = o.adj_[v] << n_;
    return out;
}

std::vector<uint64_t> SimpleGraph::components() const {
    std::vector<uint64_t> out;
    uint64_t seen = 0;
    for (int v = 0; v < n_; ++v) {
        if ((seen >> v) & 1u) continue;
        uint64_t comp = 0, frontier = 1ull << v;
        while (frontier) {
            comp |= frontier;
            uint64_t next = 0;
            for (uint64_t f = frontier; f;) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[u];
            }
            frontier = next & ~comp;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

SimpleGraph SimpleGraph::from_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag >> n) || tag != "n" || n < 0 || n > 64)
                throw ParseError("edge list must start with header 'n <count>'");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) throw ParseError("bad edge line: '" + line + "'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("edge list missing header");
    return SimpleGraph(n, std::move(edges));
}

std::string SimpleGraph::to_dot(std::string_view name) const {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < n_; ++v)
        out << "  v" << v << " [label=\"" << labels_[v] << "\"];\n";
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------- diagrams

SimpleGraph dynkin_diagram(const SingularityType& t) {
    if (!t.is_ade())
        throw DomainError("no ADE Dynkin diagram for type " + t.name());
    int n = t.ade_index();
    SimpleGraph g(n);
    switch (t.kind()) {
        case SingKind::A:
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            break;
        case SingKind::D:
            for (int v = 0; v + 2 < n; ++v) g.add_edge(v, v + 1);
            g.add_edge(n - 3, n - 1);
            break;
        case SingKind::E:
            for (int v = 0; v + 2 < n; ++v) g.add_edge(v, v + 1);
            g.add_edge(2, n - 1);
            break;
        default:
            break;
    }
    return g;
}

SimpleGraph config_diagram(const Configuration& c) {
    if (!c.all_ade())
        throw DomainError("config_diagram requires a pure ADE configuration, got " + c.format());
    SimpleGraph g(0);
    for (const auto& part : c.parts()) g = g.disjoint_union(dynkin_diagram(part));
    return g;
}

// ---------------------------------------------------------------- classify

namespace {

// Recognizes a connected component (given as a vertex mask) by arm-length
// signature: no branch vertex -> A_n; arms (1,1,k) -> D_{k+3};
// (1,2,2)/(1,2,3)/(1,2,4) -> E6/E7/E8.
std::optional<SingularityType> recognize_component(const SimpleGraph& g, uint64_t comp) {
    int m = std::popcount(comp);
    int edges = 0;
    int branch = -1;
    for (uint64_t f = comp; f;) {
        int v = std::countr_zero(f);
        f &= f - 1;
        int deg = std::popcount(g.neighbors(v) & comp);
        edges += deg;
        if (deg >= 4) return std::nullopt;
        if (deg == 3) {
            if (branch >= 0) return std::nullopt;  // two branch vertices
            branch = v;
        }
    }
    edges /= 2;
    if (edges != m - 1) return std::nullopt;  // connected, so this means a cycle
    if (branch < 0) return SingularityType::A(m);
    // Arm lengths from the unique branch vertex.
    std::array<int, 3> arms{};
    int i = 0;
    for (uint64_t f = g.neighbors(branch) & comp; f;) {
        int v = std::countr_zero(f);
        f &= f - 1;
        int len = 1, prev = branch, cur = v;
        while (true) {
            uint64_t next = g.neighbors(cur) & comp & ~(1ull << prev);
            if (!next) break;
            prev = cur;
            cur = std::countr_zero(next);
            ++len;
        }
        arms[i++] = len;
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return SingularityType::D(m);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return SingularityType::E(m);
    return std::nullopt;
}

}  // namespace

std::optional<Configuration> classify_ade(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    std::vector<SingularityType> parts;
    for (uint64_t comp : g.components()) {
        auto t = recognize_component(g, comp);
        if (!t) return std::nullopt;
        parts.push_back(*t);
    }
    return Configuration(std::move(parts));
}

// ---------------------------------------------------------------- embedding

namespace {

// Backtracking over pattern vertices sorted by descending degree, with
// bitmask candidate pruning.  Hosts here have at most 16 vertices.
struct Embedder {
    const SimpleGraph& pattern;
    const SimpleGraph& host;
    std::vector<int> order;      // pattern vertices, most-constrained first
    std::vector<int> assign;     // pattern vertex -> host vertex
    uint64_t used = 0;

    bool search(size_t depth) {
        if (depth == order.size()) return true;
        int pv = order[depth];
        for (int hv = 0; hv < host.vertex_count(); ++hv) {
            if ((used >> hv) & 1u) continue;
            if (host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (size_t j = 0; j < depth && ok; ++j) {
                bool pe = pattern.has_edge(pv, order[j]);
                bool he = host.has_edge(hv, assign[order[j]]);
                ok = pe == he;  // induced: edges and non-edges both preserved
            }
            if (!ok) continue;
            assign[pv] = hv;
            used |= 1ull << hv;
            if (search(depth + 1)) return true;
            used &= ~(1ull << hv);
        }
        return false;
    }
};

}  // namespace

bool is_induced_embeddable(const SimpleGraph& pattern, const SimpleGraph& host) {
    if (pattern.vertex_count() > host.vertex_count()) return false;
    if (pattern.edge_count() > host.edge_count()) return false;
    Embedder e{pattern, host, {}, std::vector<int>(pattern.vertex_count(), -1)};
    e.order.resize(pattern.vertex_count());
    for (int v = 0; v < pattern.vertex_count(); ++v) e.order[v] = v;
    std::sort(e.order.begin(), e.order.end(),
              [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    // Placing connected-to-previous vertices early sharpens the pruning.
    for (size_t i = 1; i < e.order.size(); ++i) {
        size_t j = i;
        while (j < e.order.size()) {
            bool linked = false;
            for (size_t k = 0; k < i && !linked; ++k)
                linked = pattern.has_edge(e.order[j], e.order[k]);
            if (linked) break;
            ++j;
        }
        if (j < e.order.size() && j != i) std::swap(e.order[i], e.order[j]);
    }
    return e.search(0);
}

std::set<Configuration> enumerate_induced_ade(const SimpleGraph& host) {
    int n = host.vertex_count();
    if (n > 24) throw LimitError("enumerate_induced_ade is exhaustive; host must have <= 24 vertices");
    std::set<Configuration> out;
    for (uint64_t mask = 1; mask < (1ull << n); ++mask) {
        auto cfg = classify_ade(host.induced(mask));
        if (cfg) out.insert(std::move(*cfg));
    }
    return out;
}

// ---------------------------------------------------------------- isomorphism

namespace {

bool iso_search(const SimpleGraph& a, const SimpleGraph& b, std::vector<int>& map,
                uint64_t& used, int depth) {
    int n = a.vertex_count();
    if (depth == n) return true;
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        if (b.degree(w) != a.degree(depth)) continue;
        bool ok = true;
        for (int u = 0; u < depth && ok; ++u) ok = a.has_edge(depth, u) == b.has_edge(w, map[u]);
        if (!ok) continue;
        map[depth] = w;
        used |= 1ull << w;
        if (iso_search(a, b, map, used, depth + 1)) return true;
        used &= ~(1ull << w);
    }
    return false;
}

}  // namespace

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.vertex_count(), -1);
    uint64_t used = 0;
    return iso_search(a, b, map, used, 0);
}

namespace {

void aut_search(const SimpleGraph& g, std::vector<int>& map, uint64_t& used, int depth,
                std::vector<std::vector<int>>& out) {
    int n = g.vertex_count();
    if (depth == n) {
        out.push_back(map);
        return;
    }
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        if (g.degree(w) != g.degree(depth)) continue;
        bool ok = true;
        for (int u = 0; u < depth && ok; ++u) ok = g.has_edge(depth, u) == g.has_edge(w, map[u]);
        if (!ok) continue;
        map[depth] = w;
        used |= 1ull << w;
        aut_search(g, map, used, depth + 1, out);
        used &= ~(1ull << w);
    }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const SimpleGraph& g) {
    if (g.vertex_count() > 20)
        throw LimitError("automorphism search limited to graphs with <= 20 vertices");
    std::vector<std::vector<int>> out;
    std::vector<int> map(g.vertex_count(), -1);
    uint64_t used = 0;
    aut_search(g, map, used, 0, out);
    return out;
}

}  // namespace cubicfolds
