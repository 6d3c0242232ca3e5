#include <wrapser/matrix.hpp>

#include <wrapser/filtration.hpp>

namespace wrapser {

bool SparseColumnMatrix::is_strictly_upper_triangular() const {
    for (index_t j = 0; j < columns(); ++j) {
        auto p = chain_pivot(column(j));
        if (p && *p >= j) return false;
    }
    return true;
}

Chain SparseColumnMatrix::apply(const Chain& v, const PrimeField& F, int out_degree) const {
    Chain out(out_degree);
    for (const auto& e : v.entries()) out.add_scaled(column(e.index), e.value, F);
    return out;
}

SparseColumnMatrix SparseColumnMatrix::times(const SparseColumnMatrix& other, const PrimeField& F,
                                             int degree_shift) const {
    SparseColumnMatrix out(other.columns());
    for (index_t j = 0; j < other.columns(); ++j) {
        Chain c(other.column(j).degree() + degree_shift);
        for (const auto& e : other.column(j).entries()) c.add_scaled(column(e.index), e.value, F);
        out.column(j) = std::move(c);
    }
    return out;
}

SparseColumnMatrix SparseColumnMatrix::identity(index_t n, const std::vector<int>& degrees) {
    SparseColumnMatrix out(n);
    for (index_t j = 0; j < n; ++j)
        out.column(j) = Chain(degrees[static_cast<std::size_t>(j)], {{j, 1}});
    return out;
}

SparseColumnMatrix SparseColumnMatrix::upper_triangular_inverse(const PrimeField& F) const {
    // back substitution per column: solve U x = e_j
    SparseColumnMatrix inv(columns());
    for (index_t j = 0; j < columns(); ++j) {
        Chain rhs(column(j).degree(), {{j, 1}});
        Chain x(column(j).degree());
        while (!rhs.is_zero()) {
            index_t i = *chain_pivot(rhs);
            coeff_t diag = entry(i, i);
            if (diag == 0) throw std::invalid_argument("matrix is not invertible upper triangular");
            coeff_t xi = F.mul(rhs.coefficient(i), F.inv(diag));
            x.set(i, xi);
            rhs.add_scaled(column(i), F.neg(xi), F);
        }
        inv.column(j) = std::move(x);
    }
    return inv;
}

SparseColumnMatrix boundary_matrix(const ElementwiseFiltration& filt, const PrimeField& F) {
    SparseColumnMatrix D(filt.size());
    for (index_t j = 0; j < filt.size(); ++j) D.column(j) = filt.boundary_chain(j, F);
    return D;
}

}  // namespace wrapser
