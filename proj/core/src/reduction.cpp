#include <wrapser/reduction.hpp>

#include <wrapser/morse.hpp>

#include <algorithm>

namespace wrapser {

namespace {

constexpr index_t kNoOwner = -1;

// mark death positions of apparent pairs (used by the optional shortcut and by
// the compatibility inspection)
std::vector<char> apparent_death_mask(const ElementwiseFiltration& filt) {
    std::vector<char> mask(static_cast<std::size_t>(filt.size()), 0);
    for (const auto& [birth, death] : apparent_pairs(filt).pairs)
        mask[static_cast<std::size_t>(filt.position_of_id(death))] = 1;
    return mask;
}

// Eliminate entries of column j sitting in pivot rows of earlier columns,
// scanning candidate rows in decreasing order. `owner[s]` is the earlier
// column with pivot s (or kNoOwner). `floor_row`: only rows < floor_row are
// considered (used to skip a pivot already known to be unowned).
void eliminate_owned_rows(SparseColumnMatrix& R, SparseColumnMatrix& S, index_t j,
                          const std::vector<index_t>& owner, const PrimeField& F,
                          index_t floor_row) {
    index_t bound = floor_row;  // exclusive upper bound for candidate rows
    while (true) {
        const auto& entries = R.column(j).entries();
        // largest entry row < bound whose row is an earlier pivot
        index_t found = kNoOwner;
        auto it = std::lower_bound(entries.begin(), entries.end(), bound,
                                   [](const ChainEntry& e, index_t b) { return e.index < b; });
        for (std::size_t k = static_cast<std::size_t>(it - entries.begin()); k-- > 0;) {
            index_t s = entries[k].index;
            if (owner[static_cast<std::size_t>(s)] != kNoOwner &&
                owner[static_cast<std::size_t>(s)] < j) {
                found = s;
                break;
            }
            bound = s;  // unowned; never look at it again
        }
        if (found == kNoOwner) return;
        index_t i = owner[static_cast<std::size_t>(found)];
        coeff_t mu =
            F.neg(F.mul(R.entry(found, j), F.inv(R.entry(found, i))));
        R.column(j).add_scaled(R.column(i), mu, F);
        S.column(j).add_scaled(S.column(i), mu, F);
        bound = found;  // the eliminated row is now zero; continue below it
    }
}

ReductionResult reduce_impl(std::shared_ptr<const ElementwiseFiltration> filt,
                            const PrimeField& F, bool exhaustive, bool apparent_shortcut) {
    ReductionResult res;
    res.filtration = filt;
    res.field = F;
    res.D = boundary_matrix(*filt, F);
    if (!res.D.is_strictly_upper_triangular())
        throw InvariantViolation("boundary matrix is not strictly upper triangular");
    res.R = res.D;
    const index_t l = filt->size();
    std::vector<int> degrees(static_cast<std::size_t>(l));
    for (index_t j = 0; j < l; ++j)
        degrees[static_cast<std::size_t>(j)] = filt->degree_at(j);
    res.S = SparseColumnMatrix::identity(l, degrees);

    std::vector<char> apparent;
    if (apparent_shortcut) apparent = apparent_death_mask(*filt);

    std::vector<index_t> owner(static_cast<std::size_t>(l), kNoOwner);
    for (index_t j = 0; j < l; ++j) {
        index_t floor_row = l;
        if (apparent_shortcut && apparent[static_cast<std::size_t>(j)]) {
            // the column of an apparent pair is born reduced: its pivot row is
            // free, so claim it immediately and skip the pivot handling
            index_t p = *chain_pivot(res.R.column(j));
            if (owner[static_cast<std::size_t>(p)] != kNoOwner)
                throw InvariantViolation("apparent pair column has a contested pivot");
            owner[static_cast<std::size_t>(p)] = j;
            if (!exhaustive) continue;
            floor_row = p;
            eliminate_owned_rows(res.R, res.S, j, owner, F, floor_row);
            continue;
        }
        if (exhaustive) {
            eliminate_owned_rows(res.R, res.S, j, owner, F, floor_row);
            auto p = chain_pivot(res.R.column(j));
            if (p) owner[static_cast<std::size_t>(*p)] = j;
        } else {
            while (true) {
                auto p = chain_pivot(res.R.column(j));
                if (!p) break;
                index_t i = owner[static_cast<std::size_t>(*p)];
                if (i == kNoOwner) {
                    owner[static_cast<std::size_t>(*p)] = j;
                    break;
                }
                coeff_t mu = F.neg(F.mul(res.R.entry(*p, j), F.inv(res.R.entry(*p, i))));
                res.R.column(j).add_scaled(res.R.column(i), mu, F);
                res.S.column(j).add_scaled(res.S.column(i), mu, F);
            }
        }
    }

    res.index_class.assign(static_cast<std::size_t>(l), IndexClass::essential);
    res.partner.assign(static_cast<std::size_t>(l), std::nullopt);
    for (index_t j = 0; j < l; ++j) {
        if (res.R.column(j).is_zero()) continue;
        index_t i = *chain_pivot(res.R.column(j));
        res.pairs.push_back({i, j});
        res.index_class[static_cast<std::size_t>(i)] = IndexClass::birth;
        res.index_class[static_cast<std::size_t>(j)] = IndexClass::death;
        res.partner[static_cast<std::size_t>(i)] = j;
        res.partner[static_cast<std::size_t>(j)] = i;
    }
    for (index_t j = 0; j < l; ++j)
        if (res.index_class[static_cast<std::size_t>(j)] == IndexClass::essential)
            res.essential.push_back(j);

    auto flags = compatibility_checks(res);
    if (!flags.reduced || !flags.factorization_holds)
        throw InvariantViolation("reduction postcondition failed");
    res.totally_reduced = flags.totally_reduced;
    res.death_compatible = flags.death_compatible;
    res.apparent_compatible = flags.apparent_compatible;
    if (exhaustive && !res.totally_reduced)
        throw InvariantViolation("exhaustive reduction is not totally reduced");
    return res;
}

}  // namespace

ReductionResult standard_reduce(std::shared_ptr<const ElementwiseFiltration> filt,
                                const PrimeField& F, bool apparent_shortcut) {
    return reduce_impl(std::move(filt), F, false, apparent_shortcut);
}

ReductionResult exhaustive_reduce(std::shared_ptr<const ElementwiseFiltration> filt,
                                  const PrimeField& F, bool apparent_shortcut) {
    return reduce_impl(std::move(filt), F, true, apparent_shortcut);
}

void make_totally_reduced(ReductionResult& res) {
    const index_t l = res.R.columns();
    std::vector<index_t> owner(static_cast<std::size_t>(l), kNoOwner);
    for (const auto& p : res.pairs) owner[static_cast<std::size_t>(p.birth)] = p.death;
    for (index_t j = 0; j < l; ++j)
        eliminate_owned_rows(res.R, res.S, j, owner, res.field, l);
    auto flags = compatibility_checks(res);
    res.totally_reduced = flags.totally_reduced;
    res.death_compatible = flags.death_compatible;
    res.apparent_compatible = flags.apparent_compatible;
    if (!flags.reduced || !flags.totally_reduced || !flags.factorization_holds)
        throw InvariantViolation("total reduction postcondition failed");
}

std::vector<BarcodeInterval> persistence_pairs_and_barcode(const ReductionResult& res) {
    const auto& filt = *res.filtration;
    std::vector<BarcodeInterval> out;
    for (const auto& p : res.pairs) {
        BarcodeInterval iv;
        iv.dim = filt.degree_at(p.birth);
        iv.birth = filt.display_value_at(p.birth);
        iv.death = filt.display_value_at(p.death);
        iv.birth_position = p.birth;
        iv.death_position = p.death;
        iv.zero_persistence = (filt.value_at(p.birth) == filt.value_at(p.death));
        out.push_back(std::move(iv));
    }
    for (index_t i : res.essential) {
        BarcodeInterval iv;
        iv.dim = filt.degree_at(i);
        iv.birth = filt.display_value_at(i);
        iv.death = std::nullopt;
        iv.birth_position = i;
        iv.death_position = std::nullopt;
        iv.zero_persistence = false;
        out.push_back(std::move(iv));
    }
    std::sort(out.begin(), out.end(), [](const BarcodeInterval& a, const BarcodeInterval& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.birth_position < b.birth_position;
    });
    return out;
}

AlgebraicGradient reduction_gradient(const ReductionResult& res) {
    AlgebraicGradient g;
    g.basis = DerivedBasis::reduction;
    for (const auto& p : res.pairs) g.pairs.push_back({p.birth, p.death});
    return g;
}

AlgebraicGradient decomposition_gradient(const ReductionResult& res) {
    AlgebraicGradient g;
    g.basis = DerivedBasis::decomposition;
    for (const auto& p : res.pairs) g.pairs.push_back({p.birth, p.death});
    return g;
}

SparseColumnMatrix derived_basis_matrix(const ReductionResult& res, DerivedBasis basis) {
    const index_t l = res.R.columns();
    SparseColumnMatrix T(l);
    for (index_t i = 0; i < l; ++i) {
        const auto cls = res.index_class[static_cast<std::size_t>(i)];
        if (basis == DerivedBasis::reduction) {
            // tau_i = sigma_i at births and essentials, S_i at deaths
            if (cls == IndexClass::death)
                T.column(i) = res.S.column(i);
            else
                T.column(i) = Chain(res.filtration->degree_at(i), {{i, 1}});
        } else {
            // eta_i = R_j for the pair (i, j), S_i at deaths and essentials
            if (cls == IndexClass::birth)
                T.column(i) = res.R.column(*res.partner[static_cast<std::size_t>(i)]);
            else
                T.column(i) = res.S.column(i);
        }
    }
    return T;
}

CompatibilityFlags compatibility_checks(const ReductionResult& res) {
    CompatibilityFlags flags{true, true, true, true, false};
    const index_t l = res.R.columns();

    std::vector<index_t> owner(static_cast<std::size_t>(l), kNoOwner);
    for (index_t j = 0; j < l; ++j) {
        auto p = chain_pivot(res.R.column(j));
        if (!p) continue;
        if (owner[static_cast<std::size_t>(*p)] != kNoOwner) flags.reduced = false;
        owner[static_cast<std::size_t>(*p)] = j;
    }

    for (index_t j = 0; j < l && flags.totally_reduced; ++j)
        for (const auto& e : res.R.column(j).entries()) {
            index_t o = owner[static_cast<std::size_t>(e.index)];
            if (o != kNoOwner && o < j) {  // the column's own pivot has owner == j
                flags.totally_reduced = false;
                break;
            }
        }

    for (const auto& p : res.pairs) {
        for (const auto& e : res.S.column(p.death).entries())
            if (res.index_class[static_cast<std::size_t>(e.index)] != IndexClass::death) {
                flags.death_compatible = false;
                break;
            }
        if (!flags.death_compatible) break;
    }

    for (const auto& [birth, death] : apparent_pairs(*res.filtration).pairs) {
        index_t j = res.filtration->position_of_id(death);
        const auto& col = res.S.column(j).entries();
        if (col.size() != 1 || col[0].index != j || col[0].value != 1) {
            flags.apparent_compatible = false;
            break;
        }
    }

    flags.factorization_holds = (res.D.times(res.S, res.field, -1) == res.R);
    return flags;
}

}  // namespace wrapser
