#ifndef TRISPECTRA_TRI_BOARD_HPP
#define TRISPECTRA_TRI_BOARD_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

#include <json.hpp>

namespace trispectra {

/// Exact integer scalar used for all board vectors and eliminations.
using Int = mpz_class;

/// mpz_class has no long long constructor; this platform's long is 64-bit.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

/// n-th triangular number T(n) = n(n+1)/2. Requires n >= 0 (T(0) = 0 is legal).
long long tri_number(long long n);

/// Polynomial extension m(m+1)/2 without the sign restriction. Several closed
/// forms in the eigenvector families evaluate it at negative arguments.
constexpr long long tri_poly(long long m) { return m * (m + 1) / 2; }

/// Cell (i,j) of the triangular board with side n: 1 <= j <= i <= n.
struct TriCoord {
    int i = 1;
    int j = 1;
    int n = 1;

    bool valid() const { return 1 <= j && j <= i && i <= n; }
    friend bool operator==(const TriCoord&, const TriCoord&) = default;
};

/// Linear label l = T(i-1) + j in [1, T(n)].
long long coord_label(const TriCoord& c);
TriCoord label_to_coord(long long label, int n);

/// Exact integer vector indexed by the cells of the triangular board,
/// stored in label order.
class TriVector {
  public:
    TriVector() = default;
    explicit TriVector(int n) : n_(n), entries_(static_cast<size_t>(tri_number(n))) {}
    TriVector(int n, std::vector<Int> entries);

    int n() const { return n_; }
    long long size() const { return static_cast<long long>(entries_.size()); }

    const Int& operator()(int i, int j) const { return entries_[offset(i, j)]; }
    Int& operator()(int i, int j) { return entries_[offset(i, j)]; }
    const Int& at_label(long long label) const;

    const std::vector<Int>& entries() const { return entries_; }

    bool is_zero() const;

    TriVector& operator+=(const TriVector& other);
    TriVector& operator-=(const TriVector& other);
    TriVector& operator*=(const Int& scalar);
    friend TriVector operator+(TriVector a, const TriVector& b) { return a += b; }
    friend TriVector operator-(TriVector a, const TriVector& b) { return a -= b; }
    friend TriVector operator*(const Int& s, TriVector v) { return v *= s; }
    friend bool operator==(const TriVector&, const TriVector&) = default;

  private:
    size_t offset(int i, int j) const;

    int n_ = 0;
    std::vector<Int> entries_;
};

/// 120-degree board rotations. Order-3 group: rotate_neg(rotate_pos(v)) = v,
/// rotate_pos(rotate_pos(v)) = rotate_neg(v).
TriVector rotate_pos(const TriVector& v);
TriVector rotate_neg(const TriVector& v);

enum class LineKind { Row, Col, Diag };

/// 0/1 indicator of a single row r in [1,n], column c in [1,n] or diagonal
/// with offset d = i-j in [0, n-1].
TriVector rcd_vector(LineKind kind, int n, int index);

/// Line sums S^r, S^c, S^d of a board vector. by_diag[k] holds the sum of the
/// diagonal with offset i-j = k (stored slot k+1 in 1-based terms).
struct SumVectors {
    std::vector<Int> by_row;
    std::vector<Int> by_col;
    std::vector<Int> by_diag;
};

SumVectors sum_vectors(const TriVector& v);

nlohmann::ordered_json to_json(const TriVector& v);
TriVector tri_vector_from_json(const nlohmann::ordered_json& j);

/// Text rendering of the triangle layout, one board row per line.
std::string render_triangle(const TriVector& v);

}  // namespace trispectra

#endif
