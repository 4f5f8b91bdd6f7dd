#include "deformation.hpp"

#include <algorithm>
#include <sstream>

#include "catalog.hpp"
#include "errors.hpp"

namespace cubicfolds {

bool versality_gate(const Configuration& c) { return c.mu() <= 15; }

bool deforms_to(const Configuration& big, const Configuration& small, bool override_gate) {
    if (!big.all_ade() || !small.all_ade())
        throw DomainError("deforms_to is defined for pure ADE configurations");
    if (!override_gate && !versality_gate(big))
        throw GateError("mu(" + big.format() + ") = " + std::to_string(big.mu()) +
                        " > 15: global deformations need not be versal");
    if (small.mu() > big.mu()) return false;
    return is_induced_embeddable(config_diagram(small), config_diagram(big));
}

std::set<Configuration> closure(const std::set<Configuration>& seeds) {
    std::set<Configuration> out;
    for (const auto& seed : seeds) {
        if (!seed.all_ade())
            throw DomainError("closure seeds must be pure ADE: " + seed.format());
        if (!versality_gate(seed))
            throw GateError("closure seed " + seed.format() + " has mu > 15");
        // Every ADE configuration below a seed is realized by an induced
        // subgraph of the seed's diagram, and conversely.
        out.insert(seed);
        for (auto& cfg : enumerate_induced_ade(config_diagram(seed))) out.insert(cfg);
    }
    return out;
}

std::set<Configuration> maximal_elements(const std::set<Configuration>& s) {
    std::set<Configuration> out;
    for (const auto& c : s) {
        bool dominated = false;
        for (const auto& other : s) {
            if (other == c) continue;
            if (deforms_to(other, c)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.insert(c);
    }
    return out;
}

namespace {

// The hyperbolic rule: both types T_pqr with componentwise ordered indices.
bool t_dominates(const SingularityType& a, const SingularityType& b) {
    if (a.kind() != SingKind::T || b.kind() != SingKind::T) return false;
    auto ia = a.t_indices(), ib = b.t_indices();
    return ib[0] <= ia[0] && ib[1] <= ia[1] && ib[2] <= ia[2];
}

// All T types dominated by `a` componentwise (indices are single digits in
// every table, so the 2..9 box is exhaustive).
std::vector<SingularityType> t_below(const SingularityType& a) {
    std::vector<SingularityType> out;
    auto ia = a.t_indices();
    for (int p = 2; p <= ia[0]; ++p)
        for (int q = p; q <= ia[1]; ++q)
            for (int r = q; r <= ia[2]; ++r) {
                long long tot = static_cast<long long>(q) * r + static_cast<long long>(p) * r +
                                static_cast<long long>(p) * q;
                if (tot > static_cast<long long>(p) * q * r) continue;  // spherical
                out.push_back(SingularityType::T(p, q, r));
            }
    return out;
}

}  // namespace

std::set<SingularityType> unimodal_reachable(const SingularityType& from) {
    const auto& edges = catalog::unimodal_adjacency();
    bool known = from.kind() == SingKind::T;
    for (const auto& e : edges) known = known || e.from == from || e.to == from;
    if (!known) throw DomainError("no adjacency data for type " + from.name());

    std::set<SingularityType> out;
    std::vector<SingularityType> frontier{from};
    out.insert(from);
    while (!frontier.empty()) {
        SingularityType cur = frontier.back();
        frontier.pop_back();
        std::vector<SingularityType> next;
        for (const auto& e : edges)
            if (e.from == cur) next.push_back(e.to);
        if (cur.kind() == SingKind::T)
            for (auto& t : t_below(cur)) next.push_back(t);
        for (auto& t : next)
            if (out.insert(t).second) frontier.push_back(t);
    }
    return out;
}

namespace {

// Cover relations of the deforms_to order restricted to `configs`.
std::vector<std::pair<Configuration, Configuration>> cover_relations(
    const std::vector<Configuration>& configs) {
    std::vector<Configuration> nodes(configs.begin(), configs.end());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto below = [&](const Configuration& big, const Configuration& small) {
        return big != small && deforms_to(big, small);
    };
    std::vector<std::pair<Configuration, Configuration>> covers;
    for (const auto& big : nodes)
        for (const auto& small : nodes) {
            if (!below(big, small)) continue;
            bool direct = true;
            for (const auto& mid : nodes)
                if (below(big, mid) && below(mid, small)) {
                    direct = false;
                    break;
                }
            if (direct) covers.emplace_back(big, small);
        }
    return covers;
}

}  // namespace

std::string poset_dot(const std::vector<Configuration>& configs) {
    std::ostringstream out;
    out << "digraph deformation {\n  rankdir=TB;\n";
    std::vector<Configuration> nodes(configs.begin(), configs.end());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (const auto& c : nodes) out << "  \"" << c.format() << "\";\n";
    for (const auto& [big, small] : cover_relations(configs))
        out << "  \"" << big.format() << "\" -> \"" << small.format() << "\";\n";
    out << "}\n";
    return out.str();
}

std::string poset_edge_list(const std::vector<Configuration>& configs) {
    std::ostringstream out;
    for (const auto& [big, small] : cover_relations(configs))
        out << big.format() << " -> " << small.format() << "\n";
    return out.str();
}

}  // namespace cubicfolds
