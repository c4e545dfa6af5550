#ifndef TRISPECTRA_QUEENS_DECOMP_HPP
#define TRISPECTRA_QUEENS_DECOMP_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "trispectra/graph.hpp"

namespace trispectra {

/// Five-part edge partition of the n-Queens graph. All parts live on the full
/// n^2 vertex set; blue cells are the lower-left triangle including the main
/// diagonal (c <= r), red the rest.
struct Decomposition {
    int n = 0;
    std::vector<char> color;  // per vertex, 'B' or 'R'
    LabeledGraph queens;
    LabeledGraph g1;    // blue-blue row/column/difference-diagonal edges, iso T(n)
    LabeledGraph g2;    // red-red counterparts, iso T(n-1)
    LabeledGraph g13;   // all anti-diagonal edges (cliques K_1..K_n..K_1)
    LabeledGraph g3h;   // blue-red row edges (K_{r,n-r} per row)
    LabeledGraph g3v;   // blue-red column edges (K_{n-c+1,c-1} per column)
};

Decomposition decompose(int n);

struct DecompositionReport {
    bool ok = false;
    bool matrix_identity = false;
    bool edges_disjoint = false;
    bool g1_isomorphic = false;
    bool g2_isomorphic = false;
    bool g13_census = false;
    bool g3h_census = false;
    bool g3v_census = false;
    std::vector<std::string> details;  // populated on failures

    nlohmann::ordered_json to_json() const;
};

/// Exact verification: adjacency matrix identity, pairwise edge-disjointness,
/// the two triangular-graph isomorphisms under the stated coordinate maps, and
/// the component censuses of G13, G3H and G3V.
DecompositionReport verify_decomposition(const Decomposition& d);

/// Per-part edge lists plus the coloring.
nlohmann::ordered_json decomposition_to_json(const Decomposition& d);

}  // namespace trispectra

#endif
