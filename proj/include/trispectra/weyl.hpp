#ifndef TRISPECTRA_WEYL_HPP
#define TRISPECTRA_WEYL_HPP

#include <vector>

#include <json.hpp>

#include "trispectra/spectrum.hpp"

namespace trispectra {

/// lambda_i(A) + lambda_j(B) as an upper bound on lambda_{i+j-1}(A+B);
/// requires i+j <= N+1 where N is the common total.
ExactValue weyl_upper(const Spectrum& a, const Spectrum& b, long long i, long long j);

/// lambda_r(A) + lambda_s(B) as a lower bound on lambda_{r+s-N}(A+B);
/// requires r+s >= N+1.
ExactValue weyl_lower(const Spectrum& a, const Spectrum& b, long long r, long long s);

enum class BoundDirection { Lower, Upper };

/// Free indices of a three-level chain through the decomposition spectra:
/// outer is i1 (r1), mid is i2 (r2), the inner pair is (i3, j3) ((r3, s3)).
/// The dependent indices follow from the nesting: j2 = i3+j3-1, j1 = i2+j2-1
/// for upper chains, s2 = r3+s3-n^2, s1 = r2+s2-n^2 for lower chains.
struct BoundChain {
    long long outer = 1;
    long long mid = 1;
    long long inner_a = 1;
    long long inner_b = 1;
};

struct ChainedBound {
    ExactValue value;
    long long k = 0;  // target index into sigma(Q(n))
};

/// Composes the three Weyl steps of the chain exactly; throws when a nesting
/// or side condition fails, naming the failing step.
ChainedBound chained_bound(int n, const BoundChain& chain, BoundDirection direction);

struct BoundEntry {
    long long k = 0;
    ExactValue lower;
    ExactValue upper;
    BoundChain lower_witness;
    BoundChain upper_witness;

    nlohmann::ordered_json to_json() const;
};

/// Dynamic program over the three chain levels: per intermediate index the
/// best (tightest) Weyl bound, composed conservatively level by level. Exact
/// optimum over all homogeneous chains per direction.
class WeylTables {
  public:
    explicit WeylTables(int n);

    int n() const { return n_; }
    BoundEntry best_bounds(long long k) const;

  private:
    int n_;
    long long total_;
    std::vector<ExactValue> g12_, g13_, g23_;  // expanded, non-increasing
    struct Level {
        std::vector<ExactValue> upper, lower;
        std::vector<long long> upper_split, lower_split;  // chosen first index
    };
    Level level2_;  // bounds on lambda_m(G2_3)
    Level level1_;  // bounds on lambda_m(G_3)
};

BoundEntry best_bounds(int n, long long k);
std::vector<BoundEntry> bound_table(int n);

}  // namespace trispectra

#endif
