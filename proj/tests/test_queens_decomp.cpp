#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "trispectra/numeric_eigen.hpp"
#include "trispectra/queens_decomp.hpp"
#include "trispectra/spectrum.hpp"

using namespace trispectra;

namespace {

long long queen_edges_by_lines(int n) {
    auto choose2 = [](long long k) { return k * (k - 1) / 2; };
    long long total = 2 * n * choose2(n);  // rows and columns
    for (int len = 1; len <= n; ++len) {
        const int copies = (len == n) ? 1 : 2;
        total += 2 * copies * choose2(len);  // both diagonal directions
    }
    return total;
}

}  // namespace

TEST_CASE("decompose splits every queen edge exactly once") {
    for (int n = 4; n <= 9; ++n) {
        const Decomposition d = decompose(n);
        const long long sum = d.g1.edge_count() + d.g2.edge_count() + d.g13.edge_count() +
                              d.g3h.edge_count() + d.g3v.edge_count();
        CHECK(sum == d.queens.edge_count());
        CHECK(d.queens.edge_count() == queen_edges_by_lines(n));
        CHECK(d.g13.edge_count() == [&] {
            long long e = 0;
            for (int len = 1; len <= n; ++len) e += (len == n ? 1 : 2) * len * (len - 1) / 2;
            return e;
        }());
    }
    CHECK_THROWS_AS(decompose(3), std::invalid_argument);
}

TEST_CASE("example board n=4") {
    const Decomposition d = decompose(4);

    // anti-diagonal cliques of sizes 1,2,3,4,3,2,1
    std::multiset<long long> got;
    for (int s = 2; s <= 8; ++s) {
        long long count = 0;
        for (int v = 0; v < 16; ++v) {
            const int r = v / 4 + 1, c = v % 4 + 1;
            if (r + c == s) ++count;
        }
        got.insert(count);
    }
    CHECK(got == std::multiset<long long>{1, 2, 3, 4, 3, 2, 1});

    // G3H row bipartitions from the worked example: K_{1,3}, K_{2,2}, K_{3,1}, K_{4,0}
    auto row_vertices = [&](int r) {
        std::pair<std::set<int>, std::set<int>> parts;  // blue, red
        for (int c = 1; c <= 4; ++c) {
            const int v = (r - 1) * 4 + (c - 1);
            (d.color[static_cast<size_t>(v)] == 'B' ? parts.first : parts.second).insert(v);
        }
        return parts;
    };
    for (int r = 1; r <= 4; ++r) {
        const auto [blue, red] = row_vertices(r);
        CHECK(blue.size() == static_cast<size_t>(r));
        CHECK(red.size() == static_cast<size_t>(4 - r));
        for (int b : blue)
            for (int x : red) CHECK(d.g3h.has_edge(b, x));
    }
    // row 4 is K_{4,0}: all blue, no horizontal blue-red edges
    for (int c = 1; c <= 4; ++c) CHECK(d.color[static_cast<size_t>(12 + c - 1)] == 'B');
}

TEST_CASE("verification passes") {
    for (int n = 4; n <= 10; ++n) {
        const DecompositionReport rep = verify_decomposition(decompose(n));
        INFO("n = " << n);
        for (const auto& detail : rep.details) INFO(detail);
        CHECK(rep.ok);
        CHECK(rep.matrix_identity);
        CHECK(rep.edges_disjoint);
        CHECK(rep.g1_isomorphic);
        CHECK(rep.g2_isomorphic);
        CHECK(rep.g13_census);
        CHECK(rep.g3h_census);
        CHECK(rep.g3v_census);
    }
}

TEST_CASE("corrupting one edge breaks the identity at two cells") {
    Decomposition d = decompose(5);
    // move one edge of g1: drop (0,1)-(1,1) [cells (1,1),(2,1) share a column]
    // and insert a bogus pair instead
    REQUIRE(d.g1.has_edge(0, 5));
    LabeledGraph replacement(25);
    for (const auto& [u, v] : d.g1.edges())
        if (!(u == 0 && v == 5)) replacement.add_edge(u, v);
    replacement.add_edge(0, 7);  // (1,1)-(2,3): not a queen move at all
    for (int v = 0; v < 25; ++v) replacement.tag(v) = d.g1.tag(v);
    d.g1 = replacement;
    const DecompositionReport rep = verify_decomposition(d);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.matrix_identity);
    long long identity_failures = 0;
    for (const auto& detail : rep.details)
        if (detail.find("matrix identity fails") != std::string::npos) ++identity_failures;
    CHECK(identity_failures == 2);
}

TEST_CASE("restriction to the smaller board reproduces the decomposition") {
    for (int n = 4; n <= 7; ++n) {
        const Decomposition small = decompose(n);
        const Decomposition big = decompose(n + 1);
        // top-left n x n block: vertex (r,c) maps to (r-1)*(n+1)+(c-1) in big
        auto big_vertex = [&](int v) {
            const int r = v / n, c = v % n;
            return r * (n + 1) + c;
        };
        const LabeledGraph* small_parts[] = {&small.g1, &small.g2, &small.g13, &small.g3h,
                                             &small.g3v};
        const LabeledGraph* big_parts[] = {&big.g1, &big.g2, &big.g13, &big.g3h, &big.g3v};
        for (int p = 0; p < 5; ++p) {
            for (int u = 0; u < n * n; ++u) {
                for (int v = u + 1; v < n * n; ++v) {
                    CHECK(small_parts[p]->has_edge(u, v) ==
                          big_parts[p]->has_edge(big_vertex(u), big_vertex(v)));
                }
            }
        }
    }
}

TEST_CASE("degree accounting per vertex") {
    for (int n : {4, 6, 8}) {
        const Decomposition d = decompose(n);
        for (int v = 0; v < n * n; ++v) {
            const int total = d.g1.degree(v) + d.g2.degree(v) + d.g13.degree(v) +
                              d.g3h.degree(v) + d.g3v.degree(v);
            CHECK(total == d.queens.degree(v));
        }
    }
}

TEST_CASE("bipartite layers realize the closed-form spectrum") {
    const int n = 5;
    const Decomposition d = decompose(n);
    const auto closed = spectrum_g23x(n).expanded();
    for (const LabeledGraph* layer : {&d.g3h, &d.g3v}) {
        const auto numeric = symmetric_eigenvalues(DenseMatrix::adjacency(*layer), 1e-11);
        REQUIRE(numeric.values.size() == closed.size());
        for (size_t i = 0; i < closed.size(); ++i)
            CHECK(std::abs(numeric.values[i] - closed[i].to_double()) < 1e-9);
    }
}

TEST_CASE("decomposition json") {
    const auto j = decomposition_to_json(decompose(4));
    CHECK(j["n"] == 4);
    CHECK(j["coloring"].size() == 4);
    CHECK(j["coloring"][0] == "BRRR");
    CHECK(j["coloring"][3] == "BBBB");
    CHECK(j["g1_edges"].size() == 30);
    CHECK(j["g2_edges"].size() == 12);
}
