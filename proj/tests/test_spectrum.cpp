#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trispectra/graph.hpp"
#include "trispectra/linalg_exact.hpp"
#include "trispectra/spectrum.hpp"

using namespace trispectra;

namespace {

Spectrum ints(std::vector<std::pair<long long, long long>> pairs) {
    std::vector<std::pair<ExactValue, long long>> entries;
    for (auto [v, m] : pairs) entries.emplace_back(ExactValue(v), m);
    return Spectrum(std::move(entries));
}

}  // namespace

TEST_CASE("triangular spectra closed forms") {
    CHECK(spectrum_triangular(1) == ints({{0, 1}}));
    CHECK(spectrum_triangular(2) == ints({{2, 1}, {-1, 2}}));
    CHECK(spectrum_triangular(3) == ints({{4, 1}, {0, 3}, {-2, 2}}));
    CHECK(spectrum_triangular(4) == ints({{6, 1}, {1, 3}, {0, 2}, {-2, 3}, {-3, 1}}));
    CHECK(spectrum_triangular(10).total() == 55);
    for (int n = 1; n <= 16; ++n) CHECK(spectrum_triangular(n).total() == tri_number(n));
}

TEST_CASE("closed forms match exact multiplicities") {
    for (int n = 4; n <= 9; ++n) {
        const LabeledGraph g = build_triangular(n);
        const Spectrum s = spectrum_triangular(n);
        long long total = 0;
        for (const auto& [value, mult] : s.entries()) {
            REQUIRE(value.is_integer());
            CHECK(exact_multiplicity(g, value.integer_part()) == mult);
            total += mult;
        }
        CHECK(total == tri_number(n));
    }
}

TEST_CASE("trace identities") {
    for (int n = 4; n <= 10; ++n) {
        const Spectrum s = spectrum_triangular(n);
        Int trace(0), square(0);
        for (const auto& [value, mult] : s.entries()) {
            trace += value.integer_part() * make_int(mult);
            square += value.integer_part() * value.integer_part() * make_int(mult);
        }
        CHECK(trace == 0);
        CHECK(square == make_int(static_cast<long long>(n) * n * n - n));  // 2|E|
    }
}

TEST_CASE("clique and bipartite spectra") {
    CHECK(spectrum_clique(4) == ints({{3, 1}, {-1, 3}}));
    CHECK(spectrum_clique(1) == ints({{0, 1}}));
    const Spectrum k13 = spectrum_bipartite(1, 3);
    CHECK(k13.entries().size() == 3);
    CHECK(k13.kth(1) == ExactValue::surd(Int(1), 3));
    CHECK(k13.kth(2) == ExactValue(0));
    CHECK(k13.kth(4) == ExactValue::surd(Int(-1), 3));
    CHECK(spectrum_bipartite(2, 2) == ints({{2, 1}, {0, 2}, {-2, 1}}));
    CHECK(spectrum_bipartite(4, 0) == ints({{0, 4}}));
}

TEST_CASE("spectrum union") {
    const Spectrum got = spectrum_union(spectrum_triangular(4), spectrum_triangular(3));
    CHECK(got == ints({{6, 1}, {4, 1}, {1, 3}, {0, 5}, {-2, 5}, {-3, 1}}));
    CHECK(spectrum_union(got, Spectrum()) == got);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> val(-4, 4), mult(1, 3);
    auto random_spectrum = [&] {
        std::vector<std::pair<ExactValue, long long>> e;
        const int k = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) e.emplace_back(ExactValue(val(rng)), mult(rng));
        return Spectrum(std::move(e));
    };
    for (int trial = 0; trial < 50; ++trial) {
        const Spectrum a = random_spectrum(), b = random_spectrum(), c = random_spectrum();
        CHECK(spectrum_union(a, b) == spectrum_union(b, a));
        CHECK(spectrum_union(spectrum_union(a, b), c) == spectrum_union(a, spectrum_union(b, c)));
        CHECK(spectrum_union(a, b).total() == a.total() + b.total());
    }
}

TEST_CASE("decomposition component spectra") {
    CHECK(spectrum_g13(4) == ints({{3, 1}, {2, 2}, {1, 2}, {0, 2}, {-1, 9}}));
    const Spectrum g23 = spectrum_g23x(4);
    CHECK(g23 == Spectrum({{ExactValue(2), 1},
                           {ExactValue::surd(Int(1), 3), 2},
                           {ExactValue(0), 10},
                           {ExactValue::surd(Int(-1), 3), 2},
                           {ExactValue(-2), 1}}));
    for (int n = 4; n <= 10; ++n) {
        const long long nn = static_cast<long long>(n) * n;
        CHECK(spectrum_g12(n).total() == nn);
        CHECK(spectrum_g13(n).total() == nn);
        CHECK(spectrum_g23x(n).total() == nn);
    }
}

TEST_CASE("g12 closed form equals exact multiplicities of the union graph") {
    const int n = 5;
    // disjoint union of T(5) and T(4)
    const LabeledGraph t5 = build_triangular(n), t4 = build_triangular(n - 1);
    LabeledGraph g12(t5.vertex_count() + t4.vertex_count());
    for (const auto& [u, v] : t5.edges()) g12.add_edge(u, v);
    for (const auto& [u, v] : t4.edges()) g12.add_edge(t5.vertex_count() + u, t5.vertex_count() + v);
    const Spectrum s = spectrum_g12(n);
    long long total = 0;
    for (const auto& [value, mult] : s.entries()) {
        REQUIRE(value.is_integer());
        CHECK(exact_multiplicity(g12, value.integer_part()) == mult);
        total += mult;
    }
    CHECK(total == n * n);
}

TEST_CASE("kth eigenvalue") {
    CHECK(spectrum_g12(4).kth(3) == ExactValue(1));
    CHECK(spectrum_g13(4).kth(16) == ExactValue(-1));
    CHECK(spectrum_bipartite(2, 2).kth(1) == ExactValue(2));
    CHECK_THROWS_AS(spectrum_bipartite(2, 2).kth(5), std::out_of_range);
    CHECK_THROWS_AS(spectrum_bipartite(2, 2).kth(0), std::out_of_range);
}

TEST_CASE("expanded order is numerically non-increasing") {
    const auto xs = spectrum_g23x(10).expanded();
    for (size_t i = 1; i < xs.size(); ++i) {
        CHECK(xs[i - 1] >= xs[i]);
        CHECK(xs[i - 1].to_double() >= xs[i].to_double() - 1e-12);
    }
}

TEST_CASE("serialization") {
    const Spectrum s = spectrum_g23x(4);
    const auto j = s.to_json();
    CHECK(j.size() == 5);
    CHECK(j[0]["value"]["int"] == 2);
    CHECK(j[1]["value"]["surd"]["radicand"] == 3);
    CHECK(j[1]["mult"] == 2);
    const std::string csv = s.to_csv();
    CHECK(csv.find("value,mult,decimal,note") == 0);
    CHECK(csv.find("approx") != std::string::npos);
    CHECK(csv.find("exact") != std::string::npos);
}
