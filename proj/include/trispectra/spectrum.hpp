#ifndef TRISPECTRA_SPECTRUM_HPP
#define TRISPECTRA_SPECTRUM_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "trispectra/exact_value.hpp"

namespace trispectra {

/// Multiset of exact eigenvalues, kept sorted non-increasingly under exact
/// comparison.
class Spectrum {
  public:
    Spectrum() = default;
    explicit Spectrum(std::vector<std::pair<ExactValue, long long>> entries);

    const std::vector<std::pair<ExactValue, long long>>& entries() const { return entries_; }
    long long total() const;

    /// Multiplicity of an exact value (0 if absent).
    long long multiplicity(const ExactValue& v) const;

    /// k-th largest eigenvalue, 1-based, with multiplicity expansion.
    const ExactValue& kth(long long k) const;

    /// All eigenvalues expanded by multiplicity, non-increasing.
    std::vector<ExactValue> expanded() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;

  private:
    std::vector<std::pair<ExactValue, long long>> entries_;
};

/// Multiset union (multiplicities add), as used for disconnected graphs.
Spectrum spectrum_union(const Spectrum& a, const Spectrum& b);

/// Closed-form spectrum of the triangular graph. n in {1,2}: complete graph
/// on T(n) vertices; n = 3: {4, 0^3, -2^2}; n >= 4: the odd/even forms with
/// -3 of multiplicity T(n-3), 2n-2 simple, one doubled interior value and the
/// rest of multiplicity 3.
Spectrum spectrum_triangular(int n);

/// sigma(K_k) = {k-1, (-1)^[k-1]}.
Spectrum spectrum_clique(int k);

/// sigma(K_{a,b}) = {sqrt(ab), 0^[a+b-2], -sqrt(ab)} for a,b >= 1;
/// K_{a,0} is edgeless, {0^[a]}.
Spectrum spectrum_bipartite(int a, int b);

/// Component spectra of the queens decomposition, each of total n^2.
Spectrum spectrum_g12(int n);
Spectrum spectrum_g13(int n);
Spectrum spectrum_g23x(int n);

}  // namespace trispectra

#endif
