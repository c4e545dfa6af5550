#include "trispectra/spectrum.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace trispectra {

namespace {

void normalize(std::vector<std::pair<ExactValue, long long>>& entries) {
    for (const auto& [v, m] : entries) {
        if (m < 1) throw std::invalid_argument("Spectrum: multiplicities must be >= 1");
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::pair<ExactValue, long long>> merged;
    for (auto& e : entries) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(std::move(e));
    }
    entries = std::move(merged);
}

}  // namespace

Spectrum::Spectrum(std::vector<std::pair<ExactValue, long long>> entries)
    : entries_(std::move(entries)) {
    normalize(entries_);
}

long long Spectrum::total() const {
    long long t = 0;
    for (const auto& [v, m] : entries_) t += m;
    return t;
}

long long Spectrum::multiplicity(const ExactValue& v) const {
    for (const auto& [w, m] : entries_)
        if (w == v) return m;
    return 0;
}

const ExactValue& Spectrum::kth(long long k) const {
    if (k < 1 || k > total()) throw std::out_of_range("Spectrum::kth: index out of range");
    long long seen = 0;
    for (const auto& [v, m] : entries_) {
        seen += m;
        if (k <= seen) return v;
    }
    throw std::logic_error("Spectrum::kth: unreachable");
}

std::vector<ExactValue> Spectrum::expanded() const {
    std::vector<ExactValue> out;
    out.reserve(static_cast<size_t>(total()));
    for (const auto& [v, m] : entries_)
        for (long long k = 0; k < m; ++k) out.push_back(v);
    return out;
}

nlohmann::ordered_json Spectrum::to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [v, m] : entries_) {
        nlohmann::ordered_json e;
        e["value"] = v.eigen_json();
        e["mult"] = m;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string Spectrum::to_csv() const {
    std::ostringstream out;
    out << "value,mult,decimal,note\n";
    for (const auto& [v, m] : entries_) {
        out << '"' << v.to_string() << "\"," << m << ',' << std::setprecision(12) << std::fixed
            << v.to_double() << ',' << (v.is_integer() ? "exact" : "approx") << '\n';
    }
    return out.str();
}

Spectrum spectrum_union(const Spectrum& a, const Spectrum& b) {
    auto entries = a.entries();
    for (const auto& e : b.entries()) entries.push_back(e);
    return Spectrum(std::move(entries));
}

Spectrum spectrum_triangular(int n) {
    if (n < 1) throw std::invalid_argument("spectrum_triangular: n must be >= 1");
    std::vector<std::pair<ExactValue, long long>> e;
    if (n <= 3) {
        if (n == 1) e = {{ExactValue(0), 1}};
        if (n == 2) e = {{ExactValue(2), 1}, {ExactValue(-1), 2}};  // K_3 on T(2) vertices
        if (n == 3) e = {{ExactValue(4), 1}, {ExactValue(0), 3}, {ExactValue(-2), 2}};
        return Spectrum(std::move(e));
    }
    e.emplace_back(ExactValue(2LL * n - 2), 1);
    e.emplace_back(ExactValue(-3), tri_number(n - 3));
    // Two integer runs of multiplicity 3 flank one doubled value; the value
    // between the runs ((n-5)/2 odd, (n-6)/2 even) is not an eigenvalue.
    const long long doubled = (n % 2 == 1) ? (n - 7) / 2 : (n - 4) / 2;
    const long long upper_lo = (n % 2 == 1) ? (n - 3) / 2 : (n - 2) / 2;
    const long long lower_hi = (n % 2 == 1) ? (n - 9) / 2 : (n - 8) / 2;
    e.emplace_back(ExactValue(doubled), 2);
    for (long long lam = upper_lo; lam <= n - 3; ++lam) e.emplace_back(ExactValue(lam), 3);
    for (long long lam = -2; lam <= lower_hi; ++lam) e.emplace_back(ExactValue(lam), 3);
    return Spectrum(std::move(e));
}

Spectrum spectrum_clique(int k) {
    if (k < 1) throw std::invalid_argument("spectrum_clique: k must be >= 1");
    std::vector<std::pair<ExactValue, long long>> e{{ExactValue(k - 1), 1}};
    if (k > 1) e.emplace_back(ExactValue(-1), k - 1);
    return Spectrum(std::move(e));
}

Spectrum spectrum_bipartite(int a, int b) {
    if (a < 0 || b < 0 || a + b < 1)
        throw std::invalid_argument("spectrum_bipartite: need a,b >= 0 and a+b >= 1");
    std::vector<std::pair<ExactValue, long long>> e;
    if (a == 0 || b == 0) {
        e.emplace_back(ExactValue(0), a + b);
        return Spectrum(std::move(e));
    }
    e.emplace_back(ExactValue::surd(Int(1), 1LL * a * b), 1);
    e.emplace_back(ExactValue::surd(Int(-1), 1LL * a * b), 1);
    if (a + b > 2) e.emplace_back(ExactValue(0), a + b - 2);
    return Spectrum(std::move(e));
}

Spectrum spectrum_g12(int n) {
    if (n < 4) throw std::invalid_argument("spectrum_g12: n must be >= 4");
    return spectrum_union(spectrum_triangular(n), spectrum_triangular(n - 1));
}

Spectrum spectrum_g13(int n) {
    if (n < 4) throw std::invalid_argument("spectrum_g13: n must be >= 4");
    // cliques K_1, ..., K_{n-1}, K_n, K_{n-1}, ..., K_1 along the anti-diagonals
    Spectrum s = spectrum_clique(n);
    for (int k = 1; k <= n - 1; ++k) {
        s = spectrum_union(s, spectrum_clique(k));
        s = spectrum_union(s, spectrum_clique(k));
    }
    return s;
}

Spectrum spectrum_g23x(int n) {
    if (n < 4) throw std::invalid_argument("spectrum_g23x: n must be >= 4");
    Spectrum s = spectrum_bipartite(n, 0);
    for (int i = 1; i <= n - 1; ++i) s = spectrum_union(s, spectrum_bipartite(i, n - i));
    return s;
}

}  // namespace trispectra
