#include <wrapser/filtration.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wrapser {

double ElementwiseFiltration::display_value_at(index_t position) const {
    double v = to_double(value_at(position));
    return squared_ ? std::sqrt(v) : v;
}

index_t ElementwiseFiltration::sublevel_size(const FiltValue& r) const {
    auto it = std::upper_bound(values_.begin(), values_.end(), r);
    return static_cast<index_t>(it - values_.begin());
}

index_t ElementwiseFiltration::strict_sublevel_size(const FiltValue& r) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), r);
    return static_cast<index_t>(it - values_.begin());
}

Chain ElementwiseFiltration::boundary_chain(index_t position, const PrimeField& F) const {
    return boundary_chain(simplex_at(position), F);
}

Chain ElementwiseFiltration::boundary_chain(const Simplex& s, const PrimeField& F) const {
    std::vector<ChainEntry> entries;
    for (const auto& [face, sign] : boundary_faces(s)) {
        auto id = complex_->id_of(face);
        if (!id) throw std::invalid_argument("boundary_chain: simplex is not in the complex");
        coeff_t v = F.from_int(sign);
        if (v != 0) entries.push_back({position_of_id(*id), v});
    }
    return Chain(s.dimension() - 1, std::move(entries));
}

ElementwiseFiltration elementwise_filtration(std::shared_ptr<const SimplicialComplex> K,
                                             const std::function<FiltValue(const Simplex&)>& f,
                                             bool squared_radii) {
    ElementwiseFiltration filt;
    filt.complex_ = std::move(K);
    const SimplicialComplex& C = *filt.complex_;

    std::vector<FiltValue> value_of(static_cast<std::size_t>(C.size()));
    for (index_t id = 0; id < C.size(); ++id)
        value_of[static_cast<std::size_t>(id)] = f(C.simplex(id));

    // monotonicity check, reported on a concrete facet pair
    for (index_t id = 0; id < C.size(); ++id)
        for (index_t cof : C.cofacets(id))
            if (value_of[static_cast<std::size_t>(id)] >
                value_of[static_cast<std::size_t>(cof)]) {
                std::ostringstream msg;
                msg << "filtration function is not monotone: f" << C.simplex(id) << " = "
                    << to_double(value_of[static_cast<std::size_t>(id)]) << " > f"
                    << C.simplex(cof) << " = "
                    << to_double(value_of[static_cast<std::size_t>(cof)]);
                throw DataError(msg.str());
            }

    filt.order_.resize(static_cast<std::size_t>(C.size()));
    for (index_t id = 0; id < C.size(); ++id) filt.order_[static_cast<std::size_t>(id)] = id;
    // value, then dimension, then vertex-lexicographic; complex ids already
    // encode (dimension, lex), so ties fall back to the id
    std::stable_sort(filt.order_.begin(), filt.order_.end(), [&](index_t a, index_t b) {
        int cmp = ::cmp(value_of[static_cast<std::size_t>(a)], value_of[static_cast<std::size_t>(b)]);
        if (cmp != 0) return cmp < 0;
        return a < b;
    });

    filt.position_.assign(static_cast<std::size_t>(C.size()), 0);
    filt.values_.resize(static_cast<std::size_t>(C.size()));
    for (std::size_t pos = 0; pos < filt.order_.size(); ++pos) {
        filt.position_[static_cast<std::size_t>(filt.order_[pos])] = static_cast<index_t>(pos);
        filt.values_[pos] = value_of[static_cast<std::size_t>(filt.order_[pos])];
    }
    filt.squared_ = squared_radii;

    // prefix-closedness: every facet must appear strictly earlier
    for (index_t pos = 0; pos < filt.size(); ++pos)
        for (index_t fid : C.facets(filt.id_at(pos)))
            if (filt.position_of_id(fid) >= pos)
                throw InvariantViolation("filtration prefix is not a subcomplex");

    return filt;
}

}  // namespace wrapser
