#include "trispectra/weyl.hpp"

#include <stdexcept>
#include <string>

namespace trispectra {

namespace {

void check_index(long long i, long long total, const char* name) {
    if (i < 1 || i > total)
        throw std::out_of_range(std::string("weyl: index ") + name + "=" + std::to_string(i) +
                                " outside [1, " + std::to_string(total) + "]");
}

}  // namespace

ExactValue weyl_upper(const Spectrum& a, const Spectrum& b, long long i, long long j) {
    const long long total = a.total();
    if (b.total() != total) throw std::invalid_argument("weyl_upper: spectra of different totals");
    check_index(i, total, "i");
    check_index(j, total, "j");
    if (i + j > total + 1)
        throw std::out_of_range("weyl_upper: side condition i+j <= n^2+1 violated");
    return a.kth(i) + b.kth(j);
}

ExactValue weyl_lower(const Spectrum& a, const Spectrum& b, long long r, long long s) {
    const long long total = a.total();
    if (b.total() != total) throw std::invalid_argument("weyl_lower: spectra of different totals");
    check_index(r, total, "r");
    check_index(s, total, "s");
    if (r + s < total + 1)
        throw std::out_of_range("weyl_lower: side condition r+s >= n^2+1 violated");
    return a.kth(r) + b.kth(s);
}

ChainedBound chained_bound(int n, const BoundChain& chain, BoundDirection direction) {
    const Spectrum g12 = spectrum_g12(n);
    const Spectrum g13 = spectrum_g13(n);
    const Spectrum g23 = spectrum_g23x(n);
    const long long total = static_cast<long long>(n) * n;
    auto in_range = [&](long long v, const char* name, const char* step) {
        if (v < 1 || v > total)
            throw std::out_of_range(std::string("chained_bound: ") + step + ": derived index " +
                                    name + "=" + std::to_string(v) + " outside [1, n^2]");
    };
    ChainedBound out;
    if (direction == BoundDirection::Upper) {
        const long long j2 = chain.inner_a + chain.inner_b - 1;
        in_range(j2, "j2", "step 1 (G2_3)");
        const ExactValue b2 = weyl_upper(g23, g23, chain.inner_a, chain.inner_b);
        const long long j1 = chain.mid + j2 - 1;
        in_range(j1, "j1", "step 2 (G_3)");
        check_index(chain.mid, total, "i2");
        const ExactValue b1 = g13.kth(chain.mid) + b2;
        out.k = chain.outer + j1 - 1;
        in_range(out.k, "k", "step 3 (Q(n))");
        check_index(chain.outer, total, "i1");
        out.value = g12.kth(chain.outer) + b1;
    } else {
        const long long s2 = chain.inner_a + chain.inner_b - total;
        in_range(s2, "s2", "step 1 (G2_3)");
        const ExactValue b2 = weyl_lower(g23, g23, chain.inner_a, chain.inner_b);
        const long long s1 = chain.mid + s2 - total;
        in_range(s1, "s1", "step 2 (G_3)");
        check_index(chain.mid, total, "r2");
        const ExactValue b1 = g13.kth(chain.mid) + b2;
        out.k = chain.outer + s1 - total;
        in_range(out.k, "k", "step 3 (Q(n))");
        check_index(chain.outer, total, "r1");
        out.value = g12.kth(chain.outer) + b1;
    }
    return out;
}

WeylTables::WeylTables(int n) : n_(n), total_(static_cast<long long>(n) * n) {
    if (n < 4) throw std::invalid_argument("WeylTables: n must be >= 4");
    g12_ = spectrum_g12(n).expanded();
    g13_ = spectrum_g13(n).expanded();
    g23_ = spectrum_g23x(n).expanded();
    const long long N = total_;

    auto at = [](const std::vector<ExactValue>& v, long long k) -> const ExactValue& {
        return v[static_cast<size_t>(k - 1)];
    };

    // Level 2: lambda_m(G2_3) bounded through sigma(G2_3,H) + sigma(G2_3,V).
    level2_.upper.resize(static_cast<size_t>(N));
    level2_.lower.resize(static_cast<size_t>(N));
    level2_.upper_split.resize(static_cast<size_t>(N));
    level2_.lower_split.resize(static_cast<size_t>(N));
    for (long long m = 1; m <= N; ++m) {
        bool first = true;
        ExactValue best;
        long long split = 0;
        for (long long i = std::max(1LL, m + 1 - N); i <= std::min(N, m); ++i) {
            const long long j = m + 1 - i;
            ExactValue cand = at(g23_, i) + at(g23_, j);
            if (first || cand < best) {
                best = cand;
                split = i;
                first = false;
            }
        }
        level2_.upper[static_cast<size_t>(m - 1)] = best;
        level2_.upper_split[static_cast<size_t>(m - 1)] = split;
        first = true;
        for (long long r = std::max(1LL, m); r <= N; ++r) {
            const long long s = m + N - r;
            if (s < 1 || s > N) continue;
            ExactValue cand = at(g23_, r) + at(g23_, s);
            if (first || cand > best) {
                best = cand;
                split = r;
                first = false;
            }
        }
        level2_.lower[static_cast<size_t>(m - 1)] = best;
        level2_.lower_split[static_cast<size_t>(m - 1)] = split;
    }

    // Level 1: lambda_m(G_3) through sigma(G1_3) + bounds on lambda(G2_3).
    level1_.upper.resize(static_cast<size_t>(N));
    level1_.lower.resize(static_cast<size_t>(N));
    level1_.upper_split.resize(static_cast<size_t>(N));
    level1_.lower_split.resize(static_cast<size_t>(N));
    for (long long m = 1; m <= N; ++m) {
        bool first = true;
        ExactValue best;
        long long split = 0;
        for (long long i = std::max(1LL, m + 1 - N); i <= std::min(N, m); ++i) {
            const long long j = m + 1 - i;
            ExactValue cand = at(g13_, i) + level2_.upper[static_cast<size_t>(j - 1)];
            if (first || cand < best) {
                best = cand;
                split = i;
                first = false;
            }
        }
        level1_.upper[static_cast<size_t>(m - 1)] = best;
        level1_.upper_split[static_cast<size_t>(m - 1)] = split;
        first = true;
        for (long long r = 1; r <= N; ++r) {
            const long long s = m + N - r;
            if (s < 1 || s > N) continue;
            ExactValue cand = at(g13_, r) + level2_.lower[static_cast<size_t>(s - 1)];
            if (first || cand > best) {
                best = cand;
                split = r;
                first = false;
            }
        }
        level1_.lower[static_cast<size_t>(m - 1)] = best;
        level1_.lower_split[static_cast<size_t>(m - 1)] = split;
    }
}

BoundEntry WeylTables::best_bounds(long long k) const {
    const long long N = total_;
    if (k < 1 || k > N) throw std::out_of_range("best_bounds: k outside [1, n^2]");
    BoundEntry entry;
    entry.k = k;
    bool first = true;
    for (long long i = std::max(1LL, k + 1 - N); i <= std::min(N, k); ++i) {
        const long long j = k + 1 - i;
        ExactValue cand = g12_[static_cast<size_t>(i - 1)] + level1_.upper[static_cast<size_t>(j - 1)];
        if (first || cand < entry.upper) {
            entry.upper = cand;
            const long long j1 = j;
            const long long i2 = level1_.upper_split[static_cast<size_t>(j1 - 1)];
            const long long j2 = j1 + 1 - i2;
            const long long i3 = level2_.upper_split[static_cast<size_t>(j2 - 1)];
            entry.upper_witness = {i, i2, i3, j2 + 1 - i3};
            first = false;
        }
    }
    first = true;
    for (long long r = 1; r <= N; ++r) {
        const long long s = k + N - r;
        if (s < 1 || s > N) continue;
        ExactValue cand = g12_[static_cast<size_t>(r - 1)] + level1_.lower[static_cast<size_t>(s - 1)];
        if (first || cand > entry.lower) {
            entry.lower = cand;
            const long long s1 = s;
            const long long r2 = level1_.lower_split[static_cast<size_t>(s1 - 1)];
            const long long s2 = s1 + N - r2;
            const long long r3 = level2_.lower_split[static_cast<size_t>(s2 - 1)];
            entry.lower_witness = {r, r2, r3, s2 + N - r3};
            first = false;
        }
    }
    return entry;
}

BoundEntry best_bounds(int n, long long k) { return WeylTables(n).best_bounds(k); }

std::vector<BoundEntry> bound_table(int n) {
    WeylTables tables(n);
    std::vector<BoundEntry> out;
    const long long N = static_cast<long long>(n) * n;
    out.reserve(static_cast<size_t>(N));
    for (long long k = 1; k <= N; ++k) out.push_back(tables.best_bounds(k));
    return out;
}

nlohmann::ordered_json BoundEntry::to_json() const {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["lower"] = lower.terms_json();
    j["upper"] = upper.terms_json();
    j["lower_witness"] = {{"r1", lower_witness.outer},
                          {"r2", lower_witness.mid},
                          {"r3", lower_witness.inner_a},
                          {"s3", lower_witness.inner_b}};
    j["upper_witness"] = {{"i1", upper_witness.outer},
                          {"i2", upper_witness.mid},
                          {"i3", upper_witness.inner_a},
                          {"j3", upper_witness.inner_b}};
    return j;
}

}  // namespace trispectra
