// wrapser: sparse column matrices over Z/p
#pragma once

#include <wrapser/chain.hpp>

#include <vector>

namespace wrapser {

class ElementwiseFiltration;

// Columns are Chains indexed by the same basis as the rows. Filtration
// boundary matrices are strictly upper triangular.
class SparseColumnMatrix {
  public:
    SparseColumnMatrix() = default;
    explicit SparseColumnMatrix(index_t columns) : cols_(static_cast<std::size_t>(columns)) {}

    index_t columns() const { return static_cast<index_t>(cols_.size()); }
    const Chain& column(index_t j) const { return cols_[static_cast<std::size_t>(j)]; }
    Chain& column(index_t j) { return cols_[static_cast<std::size_t>(j)]; }

    coeff_t entry(index_t i, index_t j) const { return column(j).coefficient(i); }
    bool is_strictly_upper_triangular() const;

    // matrix * vector; out_degree = v.degree() - 1 for boundary matrices,
    // v.degree() for changes of basis
    Chain apply(const Chain& v, const PrimeField& F, int out_degree) const;
    // matrix product; column j of the result gets degree
    // other.column(j).degree() + degree_shift (-1 when the left factor is a
    // boundary, 0 for changes of basis)
    SparseColumnMatrix times(const SparseColumnMatrix& other, const PrimeField& F,
                             int degree_shift = 0) const;

    static SparseColumnMatrix identity(index_t n, const std::vector<int>& degrees);

    // inverse of an upper triangular matrix with invertible diagonal
    SparseColumnMatrix upper_triangular_inverse(const PrimeField& F) const;

    bool operator==(const SparseColumnMatrix& other) const { return cols_ == other.cols_; }

  private:
    std::vector<Chain> cols_;
};

// boundary matrix of a filtration: column at position j is the boundary of the
// j-th simplex, in filtration coordinates
SparseColumnMatrix boundary_matrix(const ElementwiseFiltration& filt, const PrimeField& F);

}  // namespace wrapser
