#ifndef TRISPECTRA_GRAPH_HPP
#define TRISPECTRA_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace trispectra {

/// Per-vertex metadata: a board coordinate plus an optional color tag used by
/// the queens decomposition ('B'/'R', ' ' when unset).
struct VertexTag {
    int a = 0;
    int b = 0;
    char color = ' ';
};

enum class GraphKind { Generic, Triangular, Queens, Clique, CompleteBipartite };

/// Symmetric 0/1 adjacency structure with named vertices. Immutable once built
/// by one of the build_* functions (or via the edge-list constructor).
class LabeledGraph {
  public:
    LabeledGraph() = default;
    explicit LabeledGraph(int vertex_count, GraphKind kind = GraphKind::Generic, int param = 0);

    int vertex_count() const { return n_; }
    GraphKind kind() const { return kind_; }
    int param() const { return param_; }

    bool has_edge(int u, int v) const { return adj_[idx(u, v)] != 0; }
    void add_edge(int u, int v);
    long long edge_count() const;
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    const VertexTag& tag(int v) const { return tags_[static_cast<size_t>(v)]; }
    VertexTag& tag(int v) { return tags_[static_cast<size_t>(v)]; }

    /// Whether `other` has exactly the edges of this graph under the vertex
    /// map `image` (image[v] = vertex of `other`).
    bool edge_preserving_bijection(const LabeledGraph& other, const std::vector<int>& image) const;

    std::string to_dot(const std::string& name = "G") const;
    std::string to_matrix_market() const;

  private:
    size_t idx(int u, int v) const;

    int n_ = 0;
    GraphKind kind_ = GraphKind::Generic;
    int param_ = 0;
    std::vector<uint8_t> adj_;
    std::vector<VertexTag> tags_;
};

/// Triangular graph on T(n) vertices: cells of the triangular board, adjacent
/// iff same row, column or diagonal. Vertices in label order, tagged (i,j).
LabeledGraph build_triangular(int n);

/// n-Queens graph on n^2 vertices tagged (r,c), row-major order.
LabeledGraph build_queens(int n);

LabeledGraph build_clique(int k);

/// K_{a,b}; a+b >= 1. K_{a,0} is the edgeless graph on a vertices.
LabeledGraph build_complete_bipartite(int a, int b);

/// Edge clique partition: each part induces a complete subgraph and every
/// edge lies in exactly one part.
struct EdgeCliquePartition {
    std::vector<std::vector<int>> parts;
    std::vector<int> clique_degree;  // m_v per vertex
    int max_clique_degree = 0;       // m
};

/// The rows/columns/diagonals ECP of a triangular graph (2n singleton lines
/// kept as K_1 parts so every vertex has clique degree 3).
EdgeCliquePartition ecp_lines(const LabeledGraph& g);

}  // namespace trispectra

#endif
