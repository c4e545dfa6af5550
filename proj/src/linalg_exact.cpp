#include "trispectra/linalg_exact.hpp"

#include <stdexcept>
#include <utility>

namespace trispectra {

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

IntMatrix IntMatrix::adjacency(const LabeledGraph& g) {
    return adjacency_shifted(g, Int(0));
}

IntMatrix IntMatrix::adjacency_shifted(const LabeledGraph& g, const Int& lambda) {
    const int n = g.vertex_count();
    IntMatrix m(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (g.has_edge(u, v)) m(u, v) = 1;
        }
        m(u, u) -= lambda;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<TriVector>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    const int cols = static_cast<int>(rows.front().size());
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
        for (int c = 0; c < cols; ++c) m(static_cast<int>(r), c) = rows[r].at_label(c + 1);
    }
    return m;
}

std::vector<Int> IntMatrix::multiply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    std::vector<Int> y(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        Int acc(0);
        for (int c = 0; c < cols_; ++c) {
            const Int& a = (*this)(r, c);
            if (a != 0) acc += a * x[static_cast<size_t>(c)];
        }
        y[static_cast<size_t>(r)] = std::move(acc);
    }
    return y;
}

int exact_rank(IntMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    int r = 0;
    Int prev(1);
    for (int c = 0; c < cols && r < rows; ++c) {
        // smallest nonzero pivot keeps the Bareiss growth down
        int piv = -1;
        for (int k = r; k < rows; ++k) {
            if (m(k, c) != 0 && (piv < 0 || mpz_cmpabs(m(k, c).get_mpz_t(), m(piv, c).get_mpz_t()) < 0))
                piv = k;
        }
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        const Int& pivot = m(r, c);
        for (int k = r + 1; k < rows; ++k) {
            for (int j = c + 1; j < cols; ++j) {
                Int t = m(k, j) * pivot - m(k, c) * m(r, j);
                mpz_divexact(m(k, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(k, c) = 0;
        }
        prev = pivot;
        ++r;
        ++rank;
    }
    return rank;
}

int exact_nullity(IntMatrix m) {
    const int cols = m.cols();
    return cols - exact_rank(std::move(m));
}

int exact_multiplicity(const LabeledGraph& g, const Int& lambda) {
    return exact_nullity(IntMatrix::adjacency_shifted(g, lambda));
}

}  // namespace trispectra
