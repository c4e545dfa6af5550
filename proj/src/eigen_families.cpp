#include "trispectra/eigen_families.hpp"

#include <sstream>
#include <stdexcept>

#include "trispectra/linalg_exact.hpp"

namespace trispectra {

std::string family_name(Family f) {
    switch (f) {
        case Family::T: return "t";
        case Family::U: return "u";
        case Family::V: return "v";
        case Family::X: return "x";
        case Family::Y: return "y";
    }
    return "?";
}

LambdaRange lambda_range_first_sequence(int n) {
    // floor((n-7)/2) for possibly negative numerators
    const long long hi = (n - 7) >= 0 ? (n - 7) / 2 : -((-(n - 7) + 1) / 2);
    return {-2, hi};
}

LambdaRange lambda_range_second_sequence(int n) {
    const long long lo = (n - 4) >= 0 ? (n - 4 + 1) / 2 : -((-(n - 4)) / 2);
    return {lo, n - 3};
}

bool vector_v_defined(int n, long long lambda) {
    return !(n % 2 == 1 && 2 * lambda == n - 7);
}

bool vector_y_defined(int n, long long lambda) {
    return !(n % 2 == 0 && 2 * lambda == n - 4);
}

namespace {

void require_first_sequence(int n, long long lambda, const char* who) {
    if (n < 4) throw std::invalid_argument(std::string(who) + ": n must be >= 4");
    const auto range = lambda_range_first_sequence(n);
    if (!range.contains(lambda)) {
        throw std::out_of_range(std::string(who) + ": lambda " + std::to_string(lambda) +
                                " outside [-2, floor((n-7)/2)] for n=" + std::to_string(n));
    }
}

void require_second_sequence(int n, long long lambda, const char* who) {
    if (n < 4) throw std::invalid_argument(std::string(who) + ": n must be >= 4");
    const auto range = lambda_range_second_sequence(n);
    if (!range.contains(lambda)) {
        throw std::out_of_range(std::string(who) + ": lambda " + std::to_string(lambda) +
                                " outside [ceil((n-4)/2), n-3] for n=" + std::to_string(n));
    }
}

/// Accumulates c * (line indicator) into v for index in [lo, hi] (skipped when
/// the range is empty).
void add_lines(TriVector& v, LineKind kind, int lo, int hi, const Int& c) {
    for (int index = lo; index <= hi; ++index) v += c * rcd_vector(kind, v.n(), index);
}

}  // namespace

// ---------------------------------------------------------------------------
// T family
// ---------------------------------------------------------------------------

FamilyVector vector_t(int n, int x, int y) {
    if (n < 4) throw std::invalid_argument("vector_t: n must be >= 4");
    if (x < 1 || x > n - 3 || y < 1 || y > x) {
        throw std::out_of_range("vector_t: placement (" + std::to_string(x) + "," +
                                std::to_string(y) + ") outside x in [1,n-3], y in [1,x]");
    }
    // stencil on the 4-row board, row by row
    static const int stencil[4][4] = {{0, 0, 0, 0}, {1, -1, 0, 0}, {-1, 0, 1, 0}, {0, 1, -1, 0}};
    TriVector v(n);
    for (int di = 0; di < 4; ++di)
        for (int dj = 0; dj <= di; ++dj) v(x + di, y + dj) = stencil[di][dj];
    return {Family::T, n, x, y, -3, std::move(v)};
}

std::vector<FamilyVector> basis_least(int n) {
    if (n < 4)
        throw std::invalid_argument("basis_least: -3 is not an eigenvalue for n < 4");
    std::vector<FamilyVector> out;
    out.reserve(static_cast<size_t>(tri_number(n - 3)));
    for (int x = 1; x <= n - 3; ++x)
        for (int y = 1; y <= x; ++y) out.push_back(vector_t(n, x, y));
    return out;
}

// ---------------------------------------------------------------------------
// u family (first sequence)
// ---------------------------------------------------------------------------

TriVector vector_u_cellwise(int n, long long lambda) {
    require_first_sequence(n, lambda, "vector_u");
    const long long L = lambda;
    TriVector v(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            const long long d = i - j;
            Int val(0);
            // u1: row L+3 dominates the -1 wedge on the same row
            if (i == L + 3)
                val += make_int(n - 6 - 2 * L);
            else if (i >= L + 3 && d <= L + 2)
                val += -1;
            // u2
            if (d == n - L - 3)
                val += make_int(-(n - 6 - 2 * L));
            else if (i >= n - L - 2 && d <= n - L - 4)
                val += 1;
            v(i, j) = val;
        }
    }
    return v;
}

TriVector vector_u_rcd(int n, long long lambda) {
    require_first_sequence(n, lambda, "vector_u");
    const int L = static_cast<int>(lambda);
    TriVector u1(n), u2(n);
    add_lines(u1, LineKind::Diag, 0, L + 2, Int(-1));
    add_lines(u1, LineKind::Row, 1, L + 3, Int(1));
    u1 += Int(n - 6 - 2 * L) * rcd_vector(LineKind::Row, n, L + 3);
    add_lines(u2, LineKind::Row, n - L - 2, n, Int(1));
    add_lines(u2, LineKind::Diag, n - L - 3, n - 1, Int(-1));
    u2 += Int(-(n - 6 - 2 * L)) * rcd_vector(LineKind::Diag, n, n - L - 3);
    return u1 + u2;
}

FamilyVector vector_u(int n, long long lambda) {
    TriVector cellwise = vector_u_cellwise(n, lambda);
    if (cellwise != vector_u_rcd(n, lambda))
        throw std::logic_error("vector_u: cellwise and RCD constructions disagree");
    return {Family::U, n, 0, 0, lambda, std::move(cellwise)};
}

// ---------------------------------------------------------------------------
// v family (first sequence)
// ---------------------------------------------------------------------------

TriVector vector_v3(int n, long long lambda) {
    const long long L = lambda;
    const long long layers = std::min(L + 3, n - 2 * L - 7);
    TriVector v(n);
    for (long long k = 1; k <= layers; ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= i; ++j) {
                const long long d = i - j;
                if (L + 4 + k <= i && i <= n - k && k + 1 <= j && j <= n - (L + 3 + k) &&
                    k <= d && d <= n - (L + 4 + k))
                    v(i, j) += -2;
            }
        }
    }
    return v;
}

FamilyVector vector_v(int n, long long lambda) {
    require_first_sequence(n, lambda, "vector_v");
    if (!vector_v_defined(n, lambda)) {
        throw std::out_of_range("vector_v: v_{n,lambda} is undefined for odd n at lambda=(n-7)/2 "
                                "(hexagon has zero layers)");
    }
    const long long L = lambda;
    TriVector v(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            const long long d = i - j;
            Int val(0);
            if (i == L + 3) {
                val += make_int(-2 * tri_poly(n - 7 - 2 * L));  // v1 and v2 both hit this row
            } else {
                if (i >= L + 4 && j <= L + 3 && d <= n - (L + 4)) val += make_int(n - 7 - 2 * L);
                if (i >= L + 4 && j <= n - (L + 3) && d <= L + 2) val += make_int(n - 7 - 2 * L);
            }
            v(i, j) = val;
        }
    }
    v += vector_v3(n, lambda);
    return {Family::V, n, 0, 0, lambda, std::move(v)};
}

// ---------------------------------------------------------------------------
// x family (second sequence)
// ---------------------------------------------------------------------------

TriVector vector_x_variant(int n, long long lambda, const XVariant& variant) {
    require_second_sequence(n, lambda, "vector_x");
    const int L = static_cast<int>(lambda);
    const auto& d = variant.deltas;
    TriVector x1(n), x2(n);
    add_lines(x1, LineKind::Diag, 0, n - L - 4 + d[0], Int(1));
    add_lines(x1, LineKind::Col, L + 3 + d[1], n, Int(-1));
    x1 += Int(2 * L - n + 6) * rcd_vector(LineKind::Diag, n, n - L - 3 + d[2]);
    add_lines(x2, LineKind::Col, 1, n - L - 3 + d[3], Int(-1));
    add_lines(x2, LineKind::Diag, L + 3 + d[4], n - 1, Int(1));
    x2 += Int(-(2 * L - n + 6)) * rcd_vector(LineKind::Col, n, n - L - 2 + d[5]);
    return x1 + x2;
}

std::string XVariant::describe() const {
    std::ostringstream out;
    out << "x1 = sum D_[0.." << "n-l-4" << (deltas[0] ? (deltas[0] > 0 ? "+1" : "-1") : "")
        << "] - sum C_[l+3" << (deltas[1] ? (deltas[1] > 0 ? "+1" : "-1") : "") << "..n]"
        << " + (2l-n+6) D_{n-l-3" << (deltas[2] ? (deltas[2] > 0 ? "+1" : "-1") : "") << "}; "
        << "x2 = -sum C_[1..n-l-3" << (deltas[3] ? (deltas[3] > 0 ? "+1" : "-1") : "")
        << "] + sum D_[l+3" << (deltas[4] ? (deltas[4] > 0 ? "+1" : "-1") : "") << "..n-1]"
        << " - (2l-n+6) C_{n-l-2" << (deltas[5] ? (deltas[5] > 0 ? "+1" : "-1") : "") << "}";
    return out.str();
}

XVariant shipped_x_variant() {
    // Unique reading passing exact verification: the column range of x1
    // starts one column later than printed.
    return XVariant{{0, 1, 0, 0, 0, 0}};
}

XReconciliation reconcile_x_family(int n_max) {
    XReconciliation rec;
    std::vector<LabeledGraph> graphs;
    for (int n = 4; n <= n_max; ++n) graphs.push_back(build_triangular(n));
    std::array<int, 6> d{};
    for (d[0] = -1; d[0] <= 1; ++d[0])
        for (d[1] = -1; d[1] <= 1; ++d[1])
            for (d[2] = -1; d[2] <= 1; ++d[2])
                for (d[3] = -1; d[3] <= 1; ++d[3])
                    for (d[4] = -1; d[4] <= 1; ++d[4])
                        for (d[5] = -1; d[5] <= 1; ++d[5]) {
                            const XVariant variant{d};
                            bool ok = true;
                            for (int n = 4; ok && n <= n_max; ++n) {
                                const auto range = lambda_range_second_sequence(n);
                                for (long long lam = range.lo; ok && lam <= range.hi; ++lam) {
                                    TriVector x;
                                    try {
                                        x = vector_x_variant(n, lam, variant);
                                    } catch (const std::out_of_range&) {
                                        ok = false;  // variant pushes a line index off the board
                                        break;
                                    }
                                    if (x.is_zero() ||
                                        !verify_eigenvector(graphs[static_cast<size_t>(n - 4)], x,
                                                            make_int(lam))
                                             .ok)
                                        ok = false;
                                }
                            }
                            if (ok) rec.passing.push_back(variant);
                        }
    return rec;
}

TriVector vector_x_rcd(int n, long long lambda) {
    return vector_x_variant(n, lambda, shipped_x_variant());
}

TriVector vector_x_cellwise(int n, long long lambda) {
    require_second_sequence(n, lambda, "vector_x");
    const long long L = lambda;
    TriVector v(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            const long long d = i - j;
            Int val(0);
            // diagonal bands: low wedge +1, the n-L-3 diagonal carries the
            // 2L-n+6 weight, high wedge +1
            if (d <= n - L - 4)
                val += 1;
            else if (d == n - L - 3)
                val += make_int(2 * L - n + 6);
            else if (d >= L + 3)
                val += 1;
            // column bands, mirrored
            if (j <= n - L - 3)
                val -= 1;
            else if (j == n - L - 2)
                val -= make_int(2 * L - n + 6);
            else if (j >= L + 4)
                val -= 1;
            v(i, j) = val;
        }
    }
    return v;
}

FamilyVector vector_x(int n, long long lambda) {
    TriVector cellwise = vector_x_cellwise(n, lambda);
    if (cellwise != vector_x_rcd(n, lambda))
        throw std::logic_error("vector_x: cellwise and RCD constructions disagree");
    return {Family::X, n, 0, 0, lambda, std::move(cellwise)};
}

// ---------------------------------------------------------------------------
// y family (second sequence)
// ---------------------------------------------------------------------------

TriVector vector_y3_hex(int n, long long lambda) {
    // Hexagon layers like v3; the diagonal bound is lam+2-k (the printed
    // n-k-1 breaks the eigenvector equation except at lambda = n-3).
    const long long L = lambda;
    const long long layers = std::min(n - L - 2, -n + 2 * L + 4);
    TriVector v(n);
    for (long long k = 1; k <= layers; ++k) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= i; ++j) {
                const long long d = i - j;
                if (n - L - 2 + k <= i && i <= n - k && k <= j && j <= L + 2 - k && k <= d &&
                    d <= L + 2 - k)
                    v(i, j) += -2;
            }
        }
    }
    return v;
}

TriVector vector_y3_from_v3(int n, long long lambda) {
    // remove the first row and column of v3_{n+1, n-lambda-5}
    TriVector big = vector_v3(n + 1, n - lambda - 5);
    TriVector v(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) v(i, j) = big(i + 1, j + 1);
    return v;
}

FamilyVector vector_y(int n, long long lambda) {
    require_second_sequence(n, lambda, "vector_y");
    if (!vector_y_defined(n, lambda)) {
        throw std::out_of_range("vector_y: y_{n,lambda} is undefined for even n at lambda=(n-4)/2 "
                                "(hexagon has zero layers)");
    }
    const long long L = lambda;
    TriVector v(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= i; ++j) {
            const long long d = i - j;
            // y1, first matching case wins
            Int val(0);
            if (!(j <= n - L - 3 || j >= L + 3)) {
                if ((-n + 2 * L + 5 <= j && j <= L + 2) ||
                    ((n - L - 2 <= j && j <= -n + 2 * L + 4) && (i >= L + 3 || d <= n - L - 3)))
                    val += make_int(n - 2 * L - 6);
                else if (i <= L + 2 && j >= n - L - 2 && d >= n - L - 2)
                    val += make_int(2 * (n - 2 * L - 5));
            }
            // y2: four overlapping triangular pieces, contributions add
            if (j == n - L - 2) val += make_int(2 * tri_poly(n - 2 * L - 6));
            if (i >= n - L - 2 && j <= n - L - 3 && d <= n - L - 3) val += make_int(-n + 2 * L + 4);
            if (i >= L + 3 && j <= n - L - 3 && d <= L + 2) val += make_int(-n + 2 * L + 4);
            if (i >= L + 3 && n - L - 2 <= j && j <= L + 2 && d <= n - L - 3) val += make_int(-n + 2 * L + 4);
            v(i, j) = val;
        }
    }
    TriVector y3 = vector_y3_hex(n, lambda);
    if (y3 != vector_y3_from_v3(n, lambda))
        throw std::logic_error("vector_y: hexagon and v3-derived y3 constructions disagree");
    v += y3;
    return {Family::Y, n, 0, 0, lambda, std::move(v)};
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

EigenCheck verify_eigenvector(const LabeledGraph& g, const TriVector& v, const Int& lambda) {
    if (g.vertex_count() != v.size())
        throw std::invalid_argument("verify_eigenvector: dimension mismatch");
    EigenCheck check;
    check.ok = true;
    for (int u = 0; u < g.vertex_count(); ++u) {
        Int lhs(0);
        for (int w = 0; w < g.vertex_count(); ++w)
            if (g.has_edge(u, w)) lhs += v.at_label(w + 1);
        Int rhs = lambda * v.at_label(u + 1);
        if (lhs != rhs) {
            check.ok = false;
            check.failures.push_back({u + 1, std::move(lhs), std::move(rhs)});
        }
    }
    return check;
}

int check_independent(std::span<const TriVector> vectors) {
    if (vectors.empty()) return 0;
    return exact_rank(IntMatrix::from_rows(std::vector<TriVector>(vectors.begin(), vectors.end())));
}

}  // namespace trispectra
