#include "trispectra/queens_decomp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "trispectra/tri_board.hpp"

namespace trispectra {

namespace {

int vertex_of(int n, int r, int c) { return (r - 1) * n + (c - 1); }

}  // namespace

Decomposition decompose(int n) {
    if (n < 4) throw std::invalid_argument("decompose: the decomposition is stated for n >= 4");
    Decomposition d;
    d.n = n;
    d.queens = build_queens(n);
    d.color.assign(static_cast<size_t>(n) * n, 'R');
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= r; ++c) d.color[static_cast<size_t>(vertex_of(n, r, c))] = 'B';

    auto blank = [&](LabeledGraph& g) {
        g = LabeledGraph(n * n, GraphKind::Generic, n);
        for (int v = 0; v < n * n; ++v) {
            g.tag(v) = d.queens.tag(v);
            g.tag(v).color = d.color[static_cast<size_t>(v)];
        }
    };
    blank(d.g1);
    blank(d.g2);
    blank(d.g13);
    blank(d.g3h);
    blank(d.g3v);
    for (int v = 0; v < n * n; ++v) d.queens.tag(v).color = d.color[static_cast<size_t>(v)];

    for (const auto& [u, v] : d.queens.edges()) {
        const int r1 = u / n + 1, c1 = u % n + 1, r2 = v / n + 1, c2 = v % n + 1;
        const bool blue1 = d.color[static_cast<size_t>(u)] == 'B';
        const bool blue2 = d.color[static_cast<size_t>(v)] == 'B';
        if (r1 + c1 == r2 + c2) {
            d.g13.add_edge(u, v);
        } else if (blue1 && blue2) {
            d.g1.add_edge(u, v);
        } else if (!blue1 && !blue2) {
            d.g2.add_edge(u, v);
        } else if (r1 == r2) {
            d.g3h.add_edge(u, v);
        } else if (c1 == c2) {
            d.g3v.add_edge(u, v);
        } else {
            // difference diagonals never mix colors: r-c >= 0 is blue, < 0 red
            throw std::logic_error("decompose: blue-red difference-diagonal edge");
        }
    }
    return d;
}

namespace {

std::vector<std::vector<int>> components(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w = 0; w < n; ++w) {
                if (g.has_edge(u, w) && comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = static_cast<int>(out.size());
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(members));
    }
    return out;
}

bool is_clique(const LabeledGraph& g, const std::vector<int>& vs) {
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b)
            if (!g.has_edge(vs[a], vs[b])) return false;
    return true;
}

/// Checks the component is complete bipartite between its blue and red
/// vertices and returns {blue count, red count}.
bool bipartite_shape(const LabeledGraph& g, const Decomposition& d, const std::vector<int>& vs,
                     std::pair<int, int>& shape) {
    std::vector<int> blue, red;
    for (int v : vs) (d.color[static_cast<size_t>(v)] == 'B' ? blue : red).push_back(v);
    for (int b : blue)
        for (int r : red)
            if (!g.has_edge(b, r)) return false;
    for (size_t a = 0; a < blue.size(); ++a)
        for (size_t b = a + 1; b < blue.size(); ++b)
            if (g.has_edge(blue[a], blue[b])) return false;
    for (size_t a = 0; a < red.size(); ++a)
        for (size_t b = a + 1; b < red.size(); ++b)
            if (g.has_edge(red[a], red[b])) return false;
    shape = {static_cast<int>(blue.size()), static_cast<int>(red.size())};
    return true;
}

}  // namespace

DecompositionReport verify_decomposition(const Decomposition& d) {
    const int n = d.n;
    DecompositionReport rep;
    const LabeledGraph* parts[] = {&d.g1, &d.g2, &d.g13, &d.g3h, &d.g3v};

    // (a) exact matrix identity and (b) disjointness, cell by cell
    rep.matrix_identity = true;
    rep.edges_disjoint = true;
    for (int u = 0; u < n * n; ++u) {
        for (int v = u + 1; v < n * n; ++v) {
            int sum = 0;
            for (const LabeledGraph* g : parts) sum += g->has_edge(u, v) ? 1 : 0;
            const int want = d.queens.has_edge(u, v) ? 1 : 0;
            if (sum > 1) {
                rep.edges_disjoint = false;
                rep.details.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                      ") covered " + std::to_string(sum) + " times");
            }
            if (sum != want) {
                rep.matrix_identity = false;
                rep.details.push_back("matrix identity fails at (" + std::to_string(u) + "," +
                                      std::to_string(v) + "): parts sum " + std::to_string(sum) +
                                      ", queens " + std::to_string(want));
            }
        }
    }

    // (c) isomorphisms under the stated coordinate maps; non-part vertices map
    // to themselves is not applicable since the triangular graphs live on
    // their own vertex sets -- build the map part-vertex -> triangular label.
    {
        const LabeledGraph tri_n = build_triangular(n);
        bool ok = d.g1.edge_count() == tri_n.edge_count();
        // blue (r,c) -> (i,j) = (r,c)
        std::vector<int> blue_vertices;
        for (int v = 0; v < n * n; ++v)
            if (d.color[static_cast<size_t>(v)] == 'B') blue_vertices.push_back(v);
        long long mapped = 0;
        for (size_t a = 0; a < blue_vertices.size() && ok; ++a) {
            for (size_t b = a + 1; b < blue_vertices.size(); ++b) {
                const int u = blue_vertices[a], v = blue_vertices[b];
                const int r1 = u / n + 1, c1 = u % n + 1, r2 = v / n + 1, c2 = v % n + 1;
                const int lu = static_cast<int>(coord_label({r1, c1, n}));
                const int lv = static_cast<int>(coord_label({r2, c2, n}));
                const bool e1 = d.g1.has_edge(u, v);
                const bool e2 = tri_n.has_edge(lu - 1, lv - 1);
                if (e1 != e2) {
                    ok = false;
                    rep.details.push_back("g1/T(n) mismatch at blue cells (" + std::to_string(r1) +
                                          "," + std::to_string(c1) + ")-(" + std::to_string(r2) +
                                          "," + std::to_string(c2) + ")");
                    break;
                }
                if (e1) ++mapped;
            }
        }
        rep.g1_isomorphic = ok && mapped == tri_n.edge_count();
    }
    {
        const LabeledGraph tri_m = build_triangular(n - 1);
        bool ok = d.g2.edge_count() == tri_m.edge_count();
        std::vector<int> red_vertices;
        for (int v = 0; v < n * n; ++v)
            if (d.color[static_cast<size_t>(v)] == 'R') red_vertices.push_back(v);
        long long mapped = 0;
        for (size_t a = 0; a < red_vertices.size() && ok; ++a) {
            for (size_t b = a + 1; b < red_vertices.size(); ++b) {
                const int u = red_vertices[a], v = red_vertices[b];
                const int r1 = u / n + 1, c1 = u % n + 1, r2 = v / n + 1, c2 = v % n + 1;
                // red (r,c) -> (i,j) = (c-1, r)
                const int lu = static_cast<int>(coord_label({c1 - 1, r1, n - 1}));
                const int lv = static_cast<int>(coord_label({c2 - 1, r2, n - 1}));
                const bool e1 = d.g2.has_edge(u, v);
                const bool e2 = tri_m.has_edge(lu - 1, lv - 1);
                if (e1 != e2) {
                    ok = false;
                    rep.details.push_back("g2/T(n-1) mismatch at red cells (" + std::to_string(r1) +
                                          "," + std::to_string(c1) + ")-(" + std::to_string(r2) +
                                          "," + std::to_string(c2) + ")");
                    break;
                }
                if (e1) ++mapped;
            }
        }
        rep.g2_isomorphic = ok && mapped == tri_m.edge_count();
    }

    // (d) component censuses
    {
        auto comps = components(d.g13);
        std::multiset<int> sizes, expected;
        bool cliques_ok = true;
        for (const auto& comp : comps) {
            if (!is_clique(d.g13, comp)) {
                cliques_ok = false;
                rep.details.push_back("g13 component of size " + std::to_string(comp.size()) +
                                      " is not a clique");
            }
            sizes.insert(static_cast<int>(comp.size()));
        }
        for (int k = 1; k <= n; ++k) expected.insert(k);
        for (int k = 1; k <= n - 1; ++k) expected.insert(k);
        rep.g13_census = cliques_ok && sizes == expected;
        if (sizes != expected) rep.details.push_back("g13 clique sizes differ from 1..n..1");
    }
    for (int layer = 0; layer < 2; ++layer) {
        const LabeledGraph& g = layer == 0 ? d.g3h : d.g3v;
        auto comps = components(g);
        std::multiset<std::pair<int, int>> shapes, expected;
        bool ok = true;
        for (const auto& comp : comps) {
            std::pair<int, int> shape;
            if (!bipartite_shape(g, d, comp, shape)) {
                ok = false;
                rep.details.push_back(std::string(layer == 0 ? "g3h" : "g3v") +
                                      " component is not complete bipartite");
                continue;
            }
            if (comp.size() == 1) continue;  // collected as isolated below
            shapes.insert(shape);
        }
        // isolated vertices of the layer form K_{n,0}
        int isolated = 0;
        for (int v = 0; v < n * n; ++v)
            if (g.degree(v) == 0) ++isolated;
        for (int i = 1; i <= n - 1; ++i) expected.insert({i, n - i});
        ok = ok && shapes == expected && isolated == n;
        if (shapes != expected)
            rep.details.push_back(std::string(layer == 0 ? "g3h" : "g3v") +
                                  " bipartition census differs from K_{i,n-i}, i=1..n-1");
        if (isolated != n)
            rep.details.push_back(std::string(layer == 0 ? "g3h" : "g3v") + " has " +
                                  std::to_string(isolated) + " isolated vertices, expected K_{n,0}");
        (layer == 0 ? rep.g3h_census : rep.g3v_census) = ok;
    }

    rep.ok = rep.matrix_identity && rep.edges_disjoint && rep.g1_isomorphic && rep.g2_isomorphic &&
             rep.g13_census && rep.g3h_census && rep.g3v_census;
    return rep;
}

nlohmann::ordered_json DecompositionReport::to_json() const {
    nlohmann::ordered_json j;
    j["ok"] = ok;
    j["matrix_identity"] = matrix_identity;
    j["edges_disjoint"] = edges_disjoint;
    j["g1_isomorphic_to_tri_n"] = g1_isomorphic;
    j["g2_isomorphic_to_tri_n_minus_1"] = g2_isomorphic;
    j["g13_clique_census"] = g13_census;
    j["g3h_bipartite_census"] = g3h_census;
    j["g3v_bipartite_census"] = g3v_census;
    j["details"] = details;
    return j;
}

namespace {

nlohmann::ordered_json edges_json(const LabeledGraph& g) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) {
        const VertexTag& a = g.tag(u);
        const VertexTag& b = g.tag(v);
        arr.push_back({{"from", {a.a, a.b}}, {"to", {b.a, b.b}}});
    }
    return arr;
}

}  // namespace

nlohmann::ordered_json decomposition_to_json(const Decomposition& d) {
    nlohmann::ordered_json j;
    j["n"] = d.n;
    auto colors = nlohmann::ordered_json::array();
    for (int r = 1; r <= d.n; ++r) {
        std::string row;
        for (int c = 1; c <= d.n; ++c) row += d.color[static_cast<size_t>((r - 1) * d.n + c - 1)];
        colors.push_back(row);
    }
    j["coloring"] = colors;
    j["g1_edges"] = edges_json(d.g1);
    j["g2_edges"] = edges_json(d.g2);
    j["g13_edges"] = edges_json(d.g13);
    j["g3h_edges"] = edges_json(d.g3h);
    j["g3v_edges"] = edges_json(d.g3v);
    return j;
}

}  // namespace trispectra
