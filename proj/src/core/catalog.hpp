#pragma once

#include <string_view>
#include <vector>

#include "graph.hpp"
#include "types.hpp"

namespace cubicfolds::catalog {

// One row of the classification tables: 204 rows, indices 1..204.
// Table 'A' (1..18): worst singularity of corank >= 3.
// Table 'B' (19..95): worst singularity of corank 2 with nonzero third jet.
// Table 'C' (96..204): constellations of A_n singularities.
struct GoldenRow {
    int index;
    int mu;
    int k;
    Configuration config;
    char table;
};

// A directed adjacency arrow between unimodal / E_n singularity types.
struct AdjacencyEdge {
    SingularityType from;
    SingularityType to;
};

struct Table5Row {
    Configuration config;
    std::vector<int> remove;  // vertex labels of Gamma to delete
};

// One row of the du Plessis-Wall tables for 1-symmetric cubic threefolds;
// tag is the bracketed weight 5-tuple in the semisimple case, "unipotent"
// otherwise.
struct DpwRow {
    std::string tag;
    Configuration config;
    int mu;
};

// The 15-vertex carrier graph: K_{3,3} on parts {1,3,5} x {2,4,6} with every
// edge subdivided once.  Subdivision vertices: 7 on 1-2, 8 on 1-4, 9 on 1-6,
// 10 on 2-3, 11 on 3-4, 12 on 3-6, 13 on 2-5, 14 on 4-5, 15 on 5-6.
// Labels carry this 1..15 numbering.
const SimpleGraph& gamma();

// Gamma minus the degree-three vertices 1 and 3: one central vertex joined to
// three D4 stars.  13 vertices.
const SimpleGraph& delta();

// The affine E6 tree: a central vertex with three arms of length two.
const SimpleGraph& e6_tilde();

const std::vector<GoldenRow>& golden_rows();
const GoldenRow& golden_row(int index);  // 1..204

// The 12 maximal ADE configurations and the 8 maximal A_n constellations.
const std::vector<Configuration>& maximal_ade();
const std::vector<Configuration>& maximal_an();

const std::vector<Table5Row>& table5();
const std::vector<AdjacencyEdge>& unimodal_adjacency();
const std::vector<DpwRow>& dpw_tables();

// Local-model tables for the worst singularity of a threefold.  These are
// reference data: nothing downstream computes from the geometry columns.

// Corank >= 3: the plane cubic C determines the type at the projection point,
// which is then the only singularity.
struct Corank3Row {
    int mu;
    SingularityType type;
    std::string curve_geometry;        // diffeomorphism type of the plane cubic
    std::string curve_singularities;   // its singularities, or "-"
};
const std::vector<Corank3Row>& corank3_table();

// Corank 2 with nonzero third jet: the type at the projection point together
// with the configurations the residual plane cubic C1 may carry.
struct Corank2Row {
    int mu;
    SingularityType type;
    std::string other_singularities;   // options for C1 away from the axis
    std::string along_axis;            // singularity of C1 on the axis, or "-"
};
const std::vector<Corank2Row>& corank2_table();

// Cubic surfaces: the type at the projection point against the singular
// locus of the quadric Q and the singularities of C inside it.
struct SurfaceProjectionRow {
    SingularityType type;
    std::string q_singular_locus;      // "-", "a point", or "a line"
    std::string c_singularities;       // singularities of C in Sing(Q), or "-"
};
const std::vector<SurfaceProjectionRow>& cubic_surface_table();

// Raw embedded table texts, byte-identical to the files shipped under data/.
std::string_view golden_204_text();
std::string_view table5_text();
std::string_view table8_edges_text();
std::string_view dpw_semisimple_text();
std::string_view dpw_unipotent_text();

}  // namespace cubicfolds::catalog
