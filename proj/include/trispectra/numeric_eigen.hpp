#ifndef TRISPECTRA_NUMERIC_EIGEN_HPP
#define TRISPECTRA_NUMERIC_EIGEN_HPP

#include <vector>

#include <json.hpp>

#include "trispectra/graph.hpp"

namespace trispectra {

/// Dense symmetric matrix of doubles, row-major.
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    explicit DenseMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, 0.0) {}
    double& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    double at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

    static DenseMatrix adjacency(const LabeledGraph& g);
};

struct NumericSpectrum {
    std::vector<double> values;  // non-increasing
    double residual = 0.0;       // max |A v - lambda v| when vectors were kept
};

/// Cyclic (row-wise) Jacobi sweeps until the largest off-diagonal magnitude
/// drops below tol. Deterministic. When with_residual is set the rotations are
/// accumulated so the final residual can be reported.
NumericSpectrum symmetric_eigenvalues(DenseMatrix m, double tol, bool with_residual = false);

struct SnappedIntegers {
    std::vector<std::pair<long long, int>> integers;  // value, count (descending)
    std::vector<double> residue;                      // values not near an integer
};

/// Clusters eigenvalues within eps of an integer; eps must be < 0.5.
SnappedIntegers integer_snap(const NumericSpectrum& s, double eps);

enum class ConjectureVerdict { Confirmed, Violated };

struct ConjectureEntry {
    long long value = 0;
    long long predicted_multiplicity = 0;  // 0 = not predicted
    long long exact_multiplicity = 0;
    bool gap_value = false;  // ambiguous boundary value of the odd-n list
};

struct ConjectureReport {
    int n = 0;
    ConjectureVerdict verdict = ConjectureVerdict::Violated;
    std::vector<ConjectureEntry> matched;
    std::vector<ConjectureEntry> missing;     // predicted but absent or wrong multiplicity
    std::vector<ConjectureEntry> unexpected;  // observed, neither predicted nor gap
    std::vector<ConjectureEntry> gap_observed;
    std::vector<double> non_integer_sample;   // a few residue values for context

    nlohmann::ordered_json to_json() const;
};

/// Compares the integer eigenvalues of Q(n) against the predicted set: -4 with
/// multiplicity (n-3)^2, n-4 with multiplicity (n-2)/2 or (n+1)/2, and for odd
/// n the simple values n-5..(n-5)/2 and (n-11)/2..-3. The numeric pass only
/// proposes candidates; every multiplicity is confirmed by exact nullity.
ConjectureReport check_conjecture(int n, double eps);

}  // namespace trispectra

#endif
