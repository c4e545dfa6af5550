#include "trispectra/exact_value.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace trispectra {

namespace {

/// Splits m > 0 as s^2 * r with r squarefree; returns {s, r}.
std::pair<long long, long long> squarefree_split(long long m) {
    long long s = 1, r = 1;
    for (long long p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) s *= p;
        if (e % 2) r *= p;
    }
    r *= m;  // leftover prime
    return {s, r};
}

long long smallest_prime_factor(long long m) {
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) return p;
    return m;
}

}  // namespace

ExactValue::ExactValue(Int q) {
    if (q != 0) terms_[1] = std::move(q);
}

ExactValue ExactValue::surd(Int scale, long long radicand) {
    if (radicand <= 0) throw std::invalid_argument("ExactValue::surd: radicand must be positive");
    auto [s, r] = squarefree_split(radicand);
    ExactValue v;
    v.add_term(r, scale * make_int(s));
    return v;
}

void ExactValue::add_term(long long radicand, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(radicand);
    if (it == terms_.end()) {
        terms_[radicand] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool ExactValue::is_integer() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

const Int& ExactValue::integer_part() const {
    static const Int zero(0);
    auto it = terms_.find(1);
    return it == terms_.end() ? zero : it->second;
}

std::pair<Int, long long> ExactValue::single_term() const {
    if (terms_.empty()) return {Int(0), 1};
    if (terms_.size() != 1) throw std::logic_error("ExactValue: not a single term");
    return {terms_.begin()->second, terms_.begin()->first};
}

ExactValue& ExactValue::operator+=(const ExactValue& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ExactValue ExactValue::operator-() const {
    ExactValue v;
    for (const auto& [m, c] : terms_) v.terms_[m] = -c;
    return v;
}

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
    ExactValue v;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [s, r] = squarefree_split(ma * mb);
            v.add_term(r, ca * cb * make_int(s));
        }
    }
    return v;
}

int ExactValue::sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return sgn(terms_.begin()->second);
    // Split on a prime p of some radicand: value = A + B*sqrt(p) with A, B in
    // the subring free of p; recurse on A^2 - p*B^2 when the signs disagree.
    long long p = 0;
    for (const auto& [m, c] : terms_)
        if (m > 1) {
            p = smallest_prime_factor(m);
            break;
        }
    ExactValue a, b;
    for (const auto& [m, c] : terms_) {
        if (m % p == 0)
            b.add_term(m / p, c);
        else
            a.add_term(m, c);
    }
    const int sa = a.sign(), sb = b.sign();
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    const int sd = (a * a - ExactValue(p) * b * b).sign();
    return sa > 0 ? sd : -sd;
}

double ExactValue::to_double() const {
    double x = 0;
    for (const auto& [m, c] : terms_) x += c.get_d() * std::sqrt(static_cast<double>(m));
    return x;
}

std::string ExactValue::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        const Int mag = first ? c : Int(abs(c));
        if (m == 1)
            out << mag.get_str();
        else if (mag == 1)
            out << "sqrt(" << m << ")";
        else if (mag == -1)
            out << "-sqrt(" << m << ")";
        else
            out << mag.get_str() << "*sqrt(" << m << ")";
        first = false;
    }
    return out.str();
}

nlohmann::ordered_json ExactValue::eigen_json() const {
    auto [c, m] = single_term();
    nlohmann::ordered_json j;
    if (m == 1) {
        if (!c.fits_slong_p()) throw std::range_error("ExactValue json: out of 64-bit range");
        j["int"] = c.get_si();
    } else {
        if (!c.fits_slong_p()) throw std::range_error("ExactValue json: out of 64-bit range");
        j["surd"] = {{"scale", c.get_si()}, {"radicand", m}};
    }
    return j;
}

nlohmann::ordered_json ExactValue::terms_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [m, c] : terms_) {
        if (!c.fits_slong_p()) throw std::range_error("ExactValue json: out of 64-bit range");
        arr.push_back({{"coeff", c.get_si()}, {"radicand", m}});
    }
    nlohmann::ordered_json j;
    j["terms"] = arr;
    j["decimal"] = to_double();
    return j;
}

}  // namespace trispectra
