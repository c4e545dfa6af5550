#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trispectra/numeric_eigen.hpp"
#include "trispectra/weyl.hpp"

using namespace trispectra;

TEST_CASE("weyl primitives") {
    const Spectrum a = spectrum_g23x(4);
    const Spectrum b = spectrum_g23x(4);
    // top-eigenvalue subadditivity: i = j = 1
    CHECK(weyl_upper(a, b, 1, 1) == ExactValue(4));
    // bottom specialization: r = s = n^2
    CHECK(weyl_lower(a, b, 16, 16) == ExactValue(-4));
    CHECK_THROWS_AS(weyl_upper(a, b, 16, 2), std::out_of_range);
    CHECK_THROWS_AS(weyl_lower(a, b, 1, 1), std::out_of_range);
    CHECK_THROWS_AS(weyl_upper(a, b, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(weyl_upper(a, spectrum_g23x(5), 1, 1), std::invalid_argument);
}

TEST_CASE("worked bound chains for lambda_9 of Q(4)") {
    const auto upper = chained_bound(4, {3, 1, 4, 4}, BoundDirection::Upper);
    CHECK(upper.k == 9);
    CHECK(upper.value == ExactValue(4));  // 1 + 3

    const auto lower = chained_bound(4, {15, 16, 13, 13}, BoundDirection::Lower);
    CHECK(lower.k == 9);
    CHECK(lower.value == ExactValue(-3));  // -2 - 1

    CHECK_THROWS_AS(chained_bound(4, {3, 1, 16, 16}, BoundDirection::Upper), std::out_of_range);
    CHECK_THROWS_AS(chained_bound(4, {1, 1, 1, 1}, BoundDirection::Lower), std::out_of_range);
}

TEST_CASE("best bounds reproduce and pin the example") {
    const BoundEntry e = best_bounds(4, 9);
    CHECK(e.lower >= ExactValue(-3));
    CHECK(e.upper <= ExactValue(4));
    // the search is exact over all chains; for this index the worked chains
    // are already optimal
    CHECK(e.lower == ExactValue(-3));
    CHECK(e.upper == ExactValue(4));
}

TEST_CASE("frozen corner bounds at n=4") {
    const BoundEntry top = best_bounds(4, 1);
    CHECK(top.upper == ExactValue(13));  // 6 + 3 + 2 + 2
    CHECK(top.lower == ExactValue(1));

    // the all-minima lower chain shows at k = n^2
    const BoundEntry bottom = best_bounds(4, 16);
    const ExactValue mins = spectrum_g12(4).kth(16) + spectrum_g13(4).kth(16) +
                            spectrum_g23x(4).kth(16) + spectrum_g23x(4).kth(16);
    CHECK(bottom.lower >= mins);
    CHECK(bottom.lower == ExactValue(-8));
    CHECK(mins == ExactValue(-8));
}

TEST_CASE("witness replay") {
    for (int n : {4, 5}) {
        const WeylTables tables(n);
        for (long long k = 1; k <= static_cast<long long>(n) * n; ++k) {
            const BoundEntry e = tables.best_bounds(k);
            const auto up = chained_bound(n, e.upper_witness, BoundDirection::Upper);
            CHECK(up.k == k);
            CHECK(up.value == e.upper);
            const auto lo = chained_bound(n, e.lower_witness, BoundDirection::Lower);
            CHECK(lo.k == k);
            CHECK(lo.value == e.lower);
            CHECK(e.lower <= e.upper);
        }
    }
}

TEST_CASE("bounds contain the numeric eigenvalues") {
    for (int n = 4; n <= 7; ++n) {
        const auto table = bound_table(n);
        REQUIRE(table.size() == static_cast<size_t>(n) * n);
        const auto numeric =
            symmetric_eigenvalues(DenseMatrix::adjacency(build_queens(n)), 1e-11);
        for (size_t i = 0; i < table.size(); ++i) {
            const double lam = numeric.values[i];
            CHECK(table[i].lower.to_double() <= lam + 1e-9);
            CHECK(table[i].upper.to_double() >= lam - 1e-9);
        }
    }
}

TEST_CASE("bound entry json") {
    const auto j = best_bounds(4, 9).to_json();
    CHECK(j["k"] == 9);
    CHECK(j["lower"]["decimal"] == -3.0);
    CHECK(j["upper"]["decimal"] == 4.0);
    CHECK(j["upper_witness"].contains("i1"));
    CHECK(j["lower_witness"].contains("r3"));
}
