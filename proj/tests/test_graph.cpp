#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "trispectra/graph.hpp"
#include "trispectra/tri_board.hpp"

using namespace trispectra;

TEST_CASE("triangular graph basics") {
    const LabeledGraph g = build_triangular(4);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 30);
    for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 6);

    // neighborhood of vertex 1 from the labeled drawing
    std::set<int> nbrs;
    for (int v = 1; v < 10; ++v)
        if (g.has_edge(0, v)) nbrs.insert(v + 1);
    CHECK(nbrs == std::set<int>{2, 3, 4, 6, 7, 10});
}

TEST_CASE("triangular graph small orders") {
    CHECK(build_triangular(1).vertex_count() == 1);
    CHECK(build_triangular(1).edge_count() == 0);
    const LabeledGraph k3 = build_triangular(2);  // complete on T(2) = 3 vertices
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    const LabeledGraph t3 = build_triangular(3);
    CHECK(t3.vertex_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(t3.degree(v) == 4);
    CHECK_THROWS_AS(build_triangular(0), std::invalid_argument);
}

TEST_CASE("triangular regularity and size across n") {
    for (int n = 1; n <= 16; ++n) {
        const LabeledGraph g = build_triangular(n);
        CHECK(g.edge_count() == (static_cast<long long>(n) * n * n - n) / 2);
        for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 2 * n - 2);
    }
}

TEST_CASE("queens graph") {
    CHECK(build_queens(1).edge_count() == 0);
    const LabeledGraph q2 = build_queens(2);
    CHECK(q2.vertex_count() == 4);
    CHECK(q2.edge_count() == 6);  // K_4: every two cells attack

    // degree equals an independent line enumeration
    for (int n = 1; n <= 12; ++n) {
        const LabeledGraph q = build_queens(n);
        for (int v = 0; v < n * n; ++v) {
            const int r = v / n + 1, c = v % n + 1;
            const int diag_len = n - std::abs(r - c);
            const int anti_len = std::min({r + c - 1, n, 2 * n + 1 - r - c});
            const int expect = (n - 1) + (n - 1) + (diag_len - 1) + (anti_len - 1);
            CHECK(q.degree(v) == expect);
        }
    }
}

TEST_CASE("clique and complete bipartite") {
    const LabeledGraph k4 = build_clique(4);
    CHECK(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

    CHECK(build_complete_bipartite(2, 2).edge_count() == 4);
    const LabeledGraph k40 = build_complete_bipartite(4, 0);
    CHECK(k40.vertex_count() == 4);
    CHECK(k40.edge_count() == 0);
    CHECK_THROWS_AS(build_clique(0), std::invalid_argument);
    CHECK_THROWS_AS(build_complete_bipartite(0, 0), std::invalid_argument);
}

TEST_CASE("line edge clique partition") {
    const LabeledGraph g4 = build_triangular(4);
    const EdgeCliquePartition p4 = ecp_lines(g4);
    CHECK(p4.parts.size() == 12);
    CHECK(p4.max_clique_degree == 3);
    for (int m : p4.clique_degree) CHECK(m == 3);

    // row 4 part holds exactly the four cells of row 4
    bool found = false;
    for (const auto& part : p4.parts) {
        if (part.size() == 4) {
            std::set<std::pair<int, int>> cells;
            for (int v : part) cells.insert({g4.tag(v).a, g4.tag(v).b});
            if (cells == std::set<std::pair<int, int>>{{4, 1}, {4, 2}, {4, 3}, {4, 4}}) found = true;
        }
    }
    CHECK(found);

    CHECK_THROWS_AS(ecp_lines(build_queens(4)), std::invalid_argument);
}

TEST_CASE("ecp covers every edge exactly once") {
    for (int n : {3, 4, 6}) {
        const LabeledGraph g = build_triangular(n);
        const EdgeCliquePartition p = ecp_lines(g);
        std::map<std::pair<int, int>, int> cover;
        for (const auto& part : p.parts) {
            for (size_t a = 0; a < part.size(); ++a) {
                for (size_t b = a + 1; b < part.size(); ++b) {
                    CHECK(g.has_edge(part[a], part[b]));  // each part induces a clique
                    cover[{std::min(part[a], part[b]), std::max(part[a], part[b])}]++;
                }
            }
        }
        CHECK(static_cast<long long>(cover.size()) == g.edge_count());
        for (const auto& [e, c] : cover) CHECK(c == 1);
        for (int m : p.clique_degree) CHECK(m == 3);
    }
}

TEST_CASE("exports") {
    const LabeledGraph g = build_triangular(3);
    const std::string dot = g.to_dot("tri3");
    CHECK(dot.find("graph tri3") != std::string::npos);
    CHECK(dot.find("(1,1)") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);

    const std::string mm = g.to_matrix_market();
    CHECK(mm.find("%%MatrixMarket matrix coordinate pattern symmetric") == 0);
    CHECK(mm.find("6 6 12") != std::string::npos);
}
