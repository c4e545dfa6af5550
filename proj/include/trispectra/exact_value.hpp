#ifndef TRISPECTRA_EXACT_VALUE_HPP
#define TRISPECTRA_EXACT_VALUE_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "trispectra/tri_board.hpp"

namespace trispectra {

/// Element of Z[sqrt(m1), sqrt(m2), ...]: an integer plus a sum of integer
/// multiples of square roots of squarefree integers > 1. Covers every
/// eigenvalue in the closed-form spectra (integers and +-sqrt(ab)) as well as
/// the Weyl bound sums. Comparison is exact (no floating point).
class ExactValue {
  public:
    ExactValue() = default;
    ExactValue(long long q) : ExactValue(make_int(q)) {}  // NOLINT: implicit by design
    explicit ExactValue(Int q);

    /// scale * sqrt(radicand), canonicalized: square parts of the radicand
    /// are folded into the scale, perfect squares become integers.
    static ExactValue surd(Int scale, long long radicand);

    bool is_zero() const { return terms_.empty(); }
    bool is_integer() const;
    const Int& integer_part() const;

    /// If the value is a single term c*sqrt(m), returns {c, m} (m = 1 for
    /// integers). Throws otherwise.
    std::pair<Int, long long> single_term() const;

    ExactValue& operator+=(const ExactValue& o);
    ExactValue& operator-=(const ExactValue& o);
    friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
    friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a -= b; }
    ExactValue operator-() const;
    friend ExactValue operator*(const ExactValue& a, const ExactValue& b);

    /// Exact sign: -1, 0 or +1.
    int sign() const;

    friend bool operator==(const ExactValue& a, const ExactValue& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const ExactValue& a, const ExactValue& b) { return (a - b).sign() < 0; }
    friend bool operator>(const ExactValue& a, const ExactValue& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const ExactValue& a, const ExactValue& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const ExactValue& a, const ExactValue& b) { return (a - b).sign() >= 0; }

    double to_double() const;
    std::string to_string() const;

    /// {"int": q} for integers, {"surd": {"scale": s, "radicand": m}} for a
    /// single surd term. Throws for general sums (use terms_json for those).
    nlohmann::ordered_json eigen_json() const;
    nlohmann::ordered_json terms_json() const;

  private:
    void add_term(long long radicand, const Int& coeff);

    // radicand (squarefree, >= 1; 1 = rational part) -> nonzero coefficient
    std::map<long long, Int> terms_;
};

}  // namespace trispectra

#endif
