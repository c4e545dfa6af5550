#ifndef TRISPECTRA_LINALG_EXACT_HPP
#define TRISPECTRA_LINALG_EXACT_HPP

#include <vector>

#include "trispectra/graph.hpp"
#include "trispectra/tri_board.hpp"

namespace trispectra {

/// Dense matrix of exact integers, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Int& operator()(int r, int c) const { return data_[pos(r, c)]; }
    Int& operator()(int r, int c) { return data_[pos(r, c)]; }
    void swap_rows(int a, int b);

    static IntMatrix adjacency(const LabeledGraph& g);
    /// A - lambda*I of a graph's adjacency matrix.
    static IntMatrix adjacency_shifted(const LabeledGraph& g, const Int& lambda);
    static IntMatrix from_rows(const std::vector<TriVector>& rows);

    std::vector<Int> multiply(const std::vector<Int>& x) const;

  private:
    size_t pos(int r, int c) const { return static_cast<size_t>(r) * cols_ + static_cast<size_t>(c); }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// Rank over the rationals via fraction-free (Bareiss) elimination. Consumes
/// its argument.
int exact_rank(IntMatrix m);

int exact_nullity(IntMatrix m);

/// Multiplicity of the integer lambda as an eigenvalue of g: the exact
/// nullity of A - lambda*I. Returns 0 when lambda is not an eigenvalue.
int exact_multiplicity(const LabeledGraph& g, const Int& lambda);

}  // namespace trispectra

#endif
