#pragma once

#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "types.hpp"

namespace cubicfolds {

// Whether the family of cubic threefolds induces a simultaneous versal
// deformation of all singularities of a threefold with this configuration:
// total Milnor number at most 15.
bool versality_gate(const Configuration& c);

// Whether a cubic threefold with configuration `big` deforms to one with
// configuration `small`: the diagram of `small` is an induced subgraph of the
// diagram of `big`.  Both configurations must be pure ADE.  Throws GateError
// when versality_gate(big) fails, unless override_gate is set.
bool deforms_to(const Configuration& big, const Configuration& small,
                bool override_gate = false);

// All ADE configurations reachable from some seed under deforms_to, seeds
// included.  Every seed must be pure ADE with mu <= 15.
std::set<Configuration> closure(const std::set<Configuration>& seeds);

// Elements of s not strictly below any other element of s under deforms_to.
std::set<Configuration> maximal_elements(const std::set<Configuration>& s);

// Types reachable from `from` through the unimodal adjacency arrows together
// with the hyperbolic rule T(p,q,r) -> T(p',q',r') for componentwise
// p' <= p, q' <= q, r' <= r.  Reflexively and transitively closed.
std::set<SingularityType> unimodal_reachable(const SingularityType& from);

// Hasse diagram (cover relations only) of the deforms_to order on the given
// configurations, as DOT.
std::string poset_dot(const std::vector<Configuration>& configs);

// The same cover relations as an edge list over canonical configuration text,
// one "big -> small" pair per line.
std::string poset_edge_list(const std::vector<Configuration>& configs);

}  // namespace cubicfolds
