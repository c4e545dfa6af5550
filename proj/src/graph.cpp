#include "trispectra/graph.hpp"

#include <sstream>
#include <stdexcept>

#include "trispectra/tri_board.hpp"

namespace trispectra {

LabeledGraph::LabeledGraph(int vertex_count, GraphKind kind, int param)
    : n_(vertex_count), kind_(kind), param_(param),
      adj_(static_cast<size_t>(vertex_count) * static_cast<size_t>(vertex_count), 0),
      tags_(static_cast<size_t>(vertex_count)) {
    if (vertex_count < 0) throw std::invalid_argument("LabeledGraph: negative vertex count");
}

size_t LabeledGraph::idx(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::out_of_range("LabeledGraph: vertex out of range");
    return static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v);
}

void LabeledGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("LabeledGraph: self-loop");
    adj_[idx(u, v)] = 1;
    adj_[idx(v, u)] = 1;
}

long long LabeledGraph::edge_count() const {
    long long twice = 0;
    for (uint8_t b : adj_) twice += b;
    return twice / 2;
}

int LabeledGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[idx(v, u)];
    return d;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool LabeledGraph::edge_preserving_bijection(const LabeledGraph& other,
                                             const std::vector<int>& image) const {
    if (static_cast<int>(image.size()) != n_) return false;
    std::vector<uint8_t> hit(static_cast<size_t>(other.vertex_count()), 0);
    for (int v = 0; v < n_; ++v) {
        const int w = image[static_cast<size_t>(v)];
        if (w < 0 || w >= other.vertex_count() || hit[static_cast<size_t>(w)]) return false;
        hit[static_cast<size_t>(w)] = 1;
    }
    if (other.vertex_count() != n_) return false;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v) != other.has_edge(image[u], image[v])) return false;
    return true;
}

std::string LabeledGraph::to_dot(const std::string& name) const {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < n_; ++v) {
        const VertexTag& t = tag(v);
        out << "  v" << v << " [label=\"(" << t.a << "," << t.b << ")\"";
        if (t.color == 'B') out << ", style=filled, fillcolor=lightblue";
        if (t.color == 'R') out << ", style=filled, fillcolor=lightcoral";
        out << "];\n";
    }
    for (const auto& [u, v] : edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string LabeledGraph::to_matrix_market() const {
    std::ostringstream out;
    out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
    const auto es = edges();
    out << n_ << ' ' << n_ << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << v + 1 << ' ' << u + 1 << '\n';  // lower triangle
    return out.str();
}

LabeledGraph build_triangular(int n) {
    if (n < 1) throw std::invalid_argument("build_triangular: n must be >= 1");
    const int size = static_cast<int>(tri_number(n));
    LabeledGraph g(size, GraphKind::Triangular, n);
    std::vector<TriCoord> coords(static_cast<size_t>(size));
    for (long long l = 1; l <= size; ++l) {
        coords[static_cast<size_t>(l - 1)] = label_to_coord(l, n);
        g.tag(static_cast<int>(l - 1)) = {coords[l - 1].i, coords[l - 1].j, ' '};
    }
    for (int u = 0; u < size; ++u) {
        for (int v = u + 1; v < size; ++v) {
            const TriCoord& a = coords[u];
            const TriCoord& b = coords[v];
            if (a.i == b.i || a.j == b.j || a.i - a.j == b.i - b.j) g.add_edge(u, v);
        }
    }
    return g;
}

LabeledGraph build_queens(int n) {
    if (n < 1) throw std::invalid_argument("build_queens: n must be >= 1");
    LabeledGraph g(n * n, GraphKind::Queens, n);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) g.tag((r - 1) * n + (c - 1)) = {r, c, ' '};
    for (int u = 0; u < n * n; ++u) {
        for (int v = u + 1; v < n * n; ++v) {
            const int r1 = u / n + 1, c1 = u % n + 1, r2 = v / n + 1, c2 = v % n + 1;
            if (r1 == r2 || c1 == c2 || r1 - c1 == r2 - c2 || r1 + c1 == r2 + c2) g.add_edge(u, v);
        }
    }
    return g;
}

LabeledGraph build_clique(int k) {
    if (k < 1) throw std::invalid_argument("build_clique: k must be >= 1");
    LabeledGraph g(k, GraphKind::Clique, k);
    for (int v = 0; v < k; ++v) g.tag(v) = {v + 1, 0, ' '};
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

LabeledGraph build_complete_bipartite(int a, int b) {
    if (a < 0 || b < 0 || a + b < 1)
        throw std::invalid_argument("build_complete_bipartite: need a,b >= 0 and a+b >= 1");
    LabeledGraph g(a + b, GraphKind::CompleteBipartite, a);
    for (int v = 0; v < a + b; ++v) g.tag(v) = {v < a ? 1 : 2, v < a ? v + 1 : v - a + 1, ' '};
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

EdgeCliquePartition ecp_lines(const LabeledGraph& g) {
    if (g.kind() != GraphKind::Triangular)
        throw std::invalid_argument("ecp_lines: expected a triangular graph");
    const int n = g.param();
    EdgeCliquePartition p;
    p.clique_degree.assign(static_cast<size_t>(g.vertex_count()), 0);
    auto push_line = [&](LineKind kind, int index) {
        std::vector<int> part;
        for (int v = 0; v < g.vertex_count(); ++v) {
            const VertexTag& t = g.tag(v);
            const int line = kind == LineKind::Row ? t.a : kind == LineKind::Col ? t.b : t.a - t.b;
            if (line == index) {
                part.push_back(v);
                p.clique_degree[static_cast<size_t>(v)]++;
            }
        }
        p.parts.push_back(std::move(part));
    };
    for (int r = 1; r <= n; ++r) push_line(LineKind::Row, r);
    for (int c = 1; c <= n; ++c) push_line(LineKind::Col, c);
    for (int d = 0; d <= n - 1; ++d) push_line(LineKind::Diag, d);
    p.max_clique_degree = 0;
    for (int m : p.clique_degree) p.max_clique_degree = std::max(p.max_clique_degree, m);
    return p;
}

}  // namespace trispectra
