#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trispectra/linalg_exact.hpp"
#include "trispectra/numeric_eigen.hpp"
#include "trispectra/spectrum.hpp"

using namespace trispectra;

TEST_CASE("known spectra") {
    const auto k4 = symmetric_eigenvalues(DenseMatrix::adjacency(build_clique(4)), 1e-11, true);
    REQUIRE(k4.values.size() == 4);
    CHECK(std::abs(k4.values[0] - 3.0) < 1e-10);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(k4.values[i] + 1.0) < 1e-10);
    CHECK(k4.residual < 1e-9);

    const auto t4 = symmetric_eigenvalues(DenseMatrix::adjacency(build_triangular(4)), 1e-11);
    const double expect[] = {6, 1, 1, 1, 0, 0, -2, -2, -2, -3};
    REQUIRE(t4.values.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK(std::abs(t4.values[i] - expect[i]) < 1e-9);

    const auto k22 = symmetric_eigenvalues(DenseMatrix::adjacency(build_complete_bipartite(2, 2)),
                                           1e-11);
    const double expect22[] = {2, 0, 0, -2};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(k22.values[i] - expect22[i]) < 1e-10);
}

TEST_CASE("input validation") {
    DenseMatrix bad(2);
    bad.at(0, 1) = 1.0;
    bad.at(1, 0) = 0.5;
    CHECK_THROWS_AS(symmetric_eigenvalues(bad, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_eigenvalues(DenseMatrix(2), 0.0), std::invalid_argument);
}

TEST_CASE("trace and power sums are preserved") {
    for (int n : {5, 8}) {
        const LabeledGraph q = build_queens(n);
        const auto s = symmetric_eigenvalues(DenseMatrix::adjacency(q), 1e-11);
        double trace = 0, square = 0;
        for (double v : s.values) {
            trace += v;
            square += v * v;
        }
        CHECK(std::abs(trace) < n * n * 1e-10);
        CHECK(std::abs(square - 2.0 * static_cast<double>(q.edge_count())) < n * n * 1e-8);
    }
}

TEST_CASE("integer snapping") {
    NumericSpectrum s;
    s.values = {2.0000000001, -0.9999999998};
    const auto snapped = integer_snap(s, 1e-6);
    REQUIRE(snapped.integers.size() == 2);
    CHECK(snapped.integers[0] == std::pair<long long, int>{2, 1});
    CHECK(snapped.integers[1] == std::pair<long long, int>{-1, 1});
    CHECK(snapped.residue.empty());

    s.values = {1.4, 0.3};
    CHECK(integer_snap(s, 1e-6).integers.empty());
    CHECK(integer_snap(s, 1e-6).residue.size() == 2);
    CHECK_THROWS_AS(integer_snap(s, 0.5), std::invalid_argument);
}

TEST_CASE("queens integer eigenvalues found by snapping") {
    const auto q4 = symmetric_eigenvalues(DenseMatrix::adjacency(build_queens(4)), 1e-11);
    const auto s4 = integer_snap(q4, 1e-6);
    bool found = false;
    for (const auto& [v, c] : s4.integers)
        if (v == -4 && c == 1) found = true;
    CHECK(found);

    const auto q5 = symmetric_eigenvalues(DenseMatrix::adjacency(build_queens(5)), 1e-11);
    const auto s5 = integer_snap(q5, 1e-6);
    found = false;
    for (const auto& [v, c] : s5.integers)
        if (v == 1 && c == 3) found = true;  // n-4 with multiplicity (n+1)/2
    CHECK(found);
}

TEST_CASE("conjecture monitor") {
    const auto r4 = check_conjecture(4, 1e-6);
    CHECK(r4.verdict == ConjectureVerdict::Confirmed);
    bool minus4 = false, zero = false;
    for (const auto& e : r4.matched) {
        if (e.value == -4) {
            minus4 = true;
            CHECK(e.exact_multiplicity == 1);
        }
        if (e.value == 0) {
            zero = true;
            CHECK(e.exact_multiplicity == 1);  // (n-2)/2 = 1
        }
    }
    CHECK(minus4);
    CHECK(zero);

    const auto r5 = check_conjecture(5, 1e-6);
    CHECK(r5.verdict == ConjectureVerdict::Confirmed);
    for (const auto& e : r5.matched) {
        if (e.value == -4) CHECK(e.exact_multiplicity == 4);
        if (e.value == 1) CHECK(e.exact_multiplicity == 3);
        if (e.value == 0) CHECK(e.exact_multiplicity == 1);
        if (e.value == -3) CHECK(e.exact_multiplicity == 1);
    }
    CHECK(r5.missing.empty());
    CHECK(r5.unexpected.empty());

    for (int n = 6; n <= 9; ++n) {
        const auto rep = check_conjecture(n, 1e-6);
        CHECK(rep.verdict == ConjectureVerdict::Confirmed);
        CHECK(rep.missing.empty());
        CHECK(rep.unexpected.empty());
    }
    CHECK_THROWS_AS(check_conjecture(3, 1e-6), std::invalid_argument);
}

TEST_CASE("snapped counts agree with exact multiplicities") {
    for (int n = 4; n <= 8; ++n) {
        const LabeledGraph q = build_queens(n);
        const auto snapped = integer_snap(symmetric_eigenvalues(DenseMatrix::adjacency(q), 1e-11),
                                          1e-6);
        for (const auto& [value, count] : snapped.integers)
            CHECK(exact_multiplicity(q, make_int(value)) == count);
    }
}

TEST_CASE("conjecture report json") {
    const auto j = check_conjecture(5, 1e-6).to_json();
    CHECK(j["n"] == 5);
    CHECK(j["verdict"] == "confirmed");
    CHECK(j["matched"].size() >= 3);
    CHECK(j["missing"].empty());
}
