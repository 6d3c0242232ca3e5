// wrapser: persistence by column reduction (standard and exhaustive variants)
#pragma once

#include <wrapser/filtration.hpp>
#include <wrapser/matrix.hpp>

#include <memory>
#include <optional>

namespace wrapser {

// One persistence pair (positions into the filtration, 0-based).
struct PersistencePair {
    index_t birth;
    index_t death;
};

enum class IndexClass { birth, death, essential };

// R = D * S with S full-rank upper triangular (unit diagonal, homogeneous) and
// R reduced: non-zero columns have pairwise distinct pivots.
struct ReductionResult {
    std::shared_ptr<const ElementwiseFiltration> filtration;
    PrimeField field{2};
    SparseColumnMatrix D, R, S;
    std::vector<PersistencePair> pairs;          // ordered by death position
    std::vector<index_t> essential;              // unpaired positions with zero column
    std::vector<IndexClass> index_class;         // per position
    std::vector<std::optional<index_t>> partner; // birth <-> death, else nullopt

    bool totally_reduced = false;      // R_{pivot(R_i), j} = 0 for all i < j
    bool death_compatible = false;     // death columns of S involve only death indices
    bool apparent_compatible = false;  // S_j = e_j for every apparent pair (sigma_i, sigma_j)

    const Chain& cycle_of_pair(const PersistencePair& p) const { return R.column(p.death); }
};

// Algorithm: add earlier columns while the pivot of R_j collides with the
// pivot of some earlier column. S records the operations.
ReductionResult standard_reduce(std::shared_ptr<const ElementwiseFiltration> filt,
                                const PrimeField& F,
                                bool apparent_shortcut = false);

// Exhaustive variant: additionally eliminates every entry of R_j sitting in a
// pivot row of an earlier column, scanning candidate rows in decreasing order.
// The output is totally reduced.
ReductionResult exhaustive_reduce(std::shared_ptr<const ElementwiseFiltration> filt,
                                  const PrimeField& F,
                                  bool apparent_shortcut = false);

// run the exhaustive elimination on an existing result (in place)
void make_totally_reduced(ReductionResult& res);

struct BarcodeInterval {
    int dim;
    double birth;
    std::optional<double> death;  // nullopt for essential classes
    index_t birth_position;
    std::optional<index_t> death_position;
    bool zero_persistence;  // exact equality of birth and death values
};

// intervals [f(sigma_i), f(sigma_j)) plus essential [f(sigma_i), inf),
// ordered by (dim, birth position)
std::vector<BarcodeInterval> persistence_pairs_and_barcode(const ReductionResult& res);

// Derived algebraic gradients (pairs of basis positions). `reduction` lives on
// the basis tau_i = sigma_i (births/essentials) / S_i (deaths); `decomposition`
// on eta_i = R_j (paired births) / S_i (deaths and essentials).
enum class DerivedBasis { reduction, decomposition };

struct AlgebraicGradient {
    DerivedBasis basis;
    std::vector<std::pair<index_t, index_t>> pairs;
};

AlgebraicGradient reduction_gradient(const ReductionResult& res);
AlgebraicGradient decomposition_gradient(const ReductionResult& res);

// change of basis from the derived basis to filtration coordinates
// (columns are the basis chains tau_i resp. eta_i)
SparseColumnMatrix derived_basis_matrix(const ReductionResult& res, DerivedBasis basis);

struct CompatibilityFlags {
    bool reduced;
    bool totally_reduced;
    bool death_compatible;
    bool apparent_compatible;
    bool factorization_holds;  // R == D * S
};

// recompute all flags by inspection (independent of how res was produced)
CompatibilityFlags compatibility_checks(const ReductionResult& res);

}  // namespace wrapser
