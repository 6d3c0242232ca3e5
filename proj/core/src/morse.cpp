#include <wrapser/morse.hpp>

#include <wrapser/geometry.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <sstream>

namespace wrapser {

std::vector<index_t> GradientPartition::critical_simplices() const {
    std::vector<index_t> out;
    for (const auto& iv : intervals_)
        if (iv.is_critical()) out.push_back(iv.lower);
    std::sort(out.begin(), out.end());
    return out;
}

GradientPartition gradient_partition(std::shared_ptr<const SimplicialComplex> K,
                                     const std::vector<FiltValue>& value_by_id) {
    const SimplicialComplex& C = *K;
    if (value_by_id.size() != static_cast<std::size_t>(C.size()))
        throw std::invalid_argument("gradient_partition: one value per simplex required");

    // monotonicity first; the iff condition below presumes it
    for (index_t id = 0; id < C.size(); ++id)
        for (index_t cof : C.cofacets(id))
            if (value_by_id[static_cast<std::size_t>(id)] >
                value_by_id[static_cast<std::size_t>(cof)]) {
                std::ostringstream msg;
                msg << "function is not monotone: f" << C.simplex(id) << " > f" << C.simplex(cof);
                throw DataError(msg.str());
            }

    // group by exact value
    std::map<FiltValue, std::vector<index_t>> groups;
    for (index_t id = 0; id < C.size(); ++id)
        groups[value_by_id[static_cast<std::size_t>(id)]].push_back(id);

    GradientPartition P;
    P.complex_ = K;
    P.interval_index_.assign(static_cast<std::size_t>(C.size()), -1);

    std::vector<char> in_group(static_cast<std::size_t>(C.size()), 0);
    std::vector<char> seen(static_cast<std::size_t>(C.size()), 0);
    for (auto& [value, ids] : groups) {
        for (index_t id : ids) in_group[static_cast<std::size_t>(id)] = 1;

        // facet-connected components within the group
        for (index_t seed : ids) {
            if (seen[static_cast<std::size_t>(seed)]) continue;
            std::vector<index_t> comp;
            std::queue<index_t> q;
            q.push(seed);
            seen[static_cast<std::size_t>(seed)] = 1;
            while (!q.empty()) {
                index_t id = q.front();
                q.pop();
                comp.push_back(id);
                auto visit = [&](index_t other) {
                    if (in_group[static_cast<std::size_t>(other)] &&
                        !seen[static_cast<std::size_t>(other)]) {
                        seen[static_cast<std::size_t>(other)] = 1;
                        q.push(other);
                    }
                };
                for (index_t f : C.facets(id)) visit(f);
                for (index_t c : C.cofacets(id)) visit(c);
            }
            std::sort(comp.begin(), comp.end());

            // the component must be exactly the interval [rho, phi]
            Simplex rho = C.simplex(comp.front());
            Simplex phi = rho;
            for (index_t id : comp) {
                rho = Simplex::intersection(rho, C.simplex(id));
                phi = Simplex::union_of(phi, C.simplex(id));
            }
            auto fail = [&](const std::string& reason) {
                std::ostringstream msg;
                msg << "not a generalized discrete Morse function: value class at f = "
                    << to_double(value) << " has component {";
                for (std::size_t i = 0; i < comp.size() && i < 8; ++i)
                    msg << (i ? "," : "") << C.simplex(comp[i]);
                if (comp.size() > 8) msg << ",...";
                msg << "} which " << reason;
                throw NotMorseError(msg.str());
            };
            if (rho.empty()) fail("has empty intersection");
            int span = phi.dimension() - rho.dimension();
            if (span >= 63 || comp.size() != (std::size_t{1} << span))
                fail("is not a face interval (wrong cardinality)");
            // enumerate [rho, phi] and compare against the component
            std::vector<vertex_t> extra;
            for (vertex_t v : phi.vertices())
                if (!Simplex({v}).is_face_of(rho)) extra.push_back(v);
            std::vector<index_t> interval_ids;
            for (std::size_t mask = 0; mask < (std::size_t{1} << extra.size()); ++mask) {
                Simplex psi = rho;
                for (std::size_t b = 0; b < extra.size(); ++b)
                    if (mask & (std::size_t{1} << b)) psi = psi.with_vertex(extra[b]);
                auto id = C.id_of(psi);
                if (!id) fail("is not a face interval (a member of [rho,phi] is missing)");
                interval_ids.push_back(*id);
            }
            std::sort(interval_ids.begin(), interval_ids.end());
            if (interval_ids != comp) fail("is not the face interval [rho,phi]");

            MorseInterval iv;
            iv.lower = *C.id_of(rho);
            iv.upper = *C.id_of(phi);
            iv.members = comp;
            iv.value = value;
            P.intervals_.push_back(std::move(iv));
        }
        for (index_t id : ids) in_group[static_cast<std::size_t>(id)] = 0;
    }

    // groups (a std::map) are traversed in value order; order components by
    // (value, rho id) for determinism
    std::sort(P.intervals_.begin(), P.intervals_.end(),
              [](const MorseInterval& a, const MorseInterval& b) {
                  int c = ::cmp(a.value, b.value);
                  if (c != 0) return c < 0;
                  return a.lower < b.lower;
              });
    for (std::size_t k = 0; k < P.intervals_.size(); ++k)
        for (index_t id : P.intervals_[k].members)
            P.interval_index_[static_cast<std::size_t>(id)] = static_cast<index_t>(k);
    return P;
}

GradientPartition gradient_partition(std::shared_ptr<const SimplicialComplex> K,
                                     const std::function<FiltValue(const Simplex&)>& f) {
    std::vector<FiltValue> values(static_cast<std::size_t>(K->size()));
    for (index_t id = 0; id < K->size(); ++id)
        values[static_cast<std::size_t>(id)] = f(K->simplex(id));
    return gradient_partition(std::move(K), values);
}

bool DiscretePairing::is_paired(index_t id) const {
    for (const auto& [a, b] : pairs)
        if (a == id || b == id) return true;
    return false;
}

DiscretePairing minimal_vertex_refinement(const GradientPartition& partition) {
    const SimplicialComplex& C = partition.complex();
    DiscretePairing out;
    out.complex = partition.complex_ptr();
    for (const auto& iv : partition.intervals()) {
        if (iv.is_critical()) {
            out.critical.push_back(iv.lower);
            continue;
        }
        // v = minimal vertex of phi \ rho; pair psi (without v) with psi u v
        const Simplex& rho = C.simplex(iv.lower);
        const Simplex& phi = C.simplex(iv.upper);
        vertex_t v = -1;
        for (vertex_t w : phi.vertices())
            if (!Simplex({w}).is_face_of(rho)) {
                v = w;
                break;  // vertices are sorted: first one is minimal
            }
        for (index_t id : iv.members) {
            const Simplex& psi = C.simplex(id);
            if (Simplex({v}).is_face_of(psi)) continue;
            out.pairs.push_back({id, *C.id_of(psi.with_vertex(v))});
        }
    }
    std::sort(out.critical.begin(), out.critical.end());
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

DiscretePairing apparent_pairs(const ElementwiseFiltration& filt) {
    const SimplicialComplex& C = filt.complex();
    DiscretePairing out;
    out.complex = filt.complex_ptr();
    std::vector<char> paired(static_cast<std::size_t>(C.size()), 0);
    for (index_t pos = 0; pos < filt.size(); ++pos) {
        index_t tau = filt.id_at(pos);
        auto facets = C.facets(tau);
        if (facets.empty()) continue;
        index_t sigma = facets.front();  // maximal facet in filtration order
        for (index_t f : facets)
            if (filt.position_of_id(f) > filt.position_of_id(sigma)) sigma = f;
        index_t min_cofacet = -1;  // minimal cofacet of sigma
        for (index_t c : C.cofacets(sigma))
            if (min_cofacet < 0 || filt.position_of_id(c) < filt.position_of_id(min_cofacet))
                min_cofacet = c;
        if (min_cofacet == tau) {
            out.pairs.push_back({sigma, tau});
            paired[static_cast<std::size_t>(sigma)] = 1;
            paired[static_cast<std::size_t>(tau)] = 1;
        }
    }
    for (index_t id = 0; id < C.size(); ++id)
        if (!paired[static_cast<std::size_t>(id)]) out.critical.push_back(id);
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

DiscretePairing zero_persistence_apparent_pairs(const ElementwiseFiltration& filt) {
    DiscretePairing all = apparent_pairs(filt);
    DiscretePairing out;
    out.complex = all.complex;
    std::vector<char> paired(static_cast<std::size_t>(filt.size()), 0);
    for (const auto& [sigma, tau] : all.pairs)
        if (filt.value_at(filt.position_of_id(sigma)) == filt.value_at(filt.position_of_id(tau))) {
            out.pairs.push_back({sigma, tau});
            paired[static_cast<std::size_t>(sigma)] = 1;
            paired[static_cast<std::size_t>(tau)] = 1;
        }
    for (index_t id = 0; id < filt.complex().size(); ++id)
        if (!paired[static_cast<std::size_t>(id)]) out.critical.push_back(id);
    return out;
}

namespace {

SimplicialComplex descending_from_intervals(const GradientPartition& partition,
                                            std::vector<index_t> seed_intervals) {
    const SimplicialComplex& C = partition.complex();
    std::vector<char> visited(partition.intervals().size(), 0);
    std::queue<index_t> q;
    for (index_t k : seed_intervals)
        if (!visited[static_cast<std::size_t>(k)]) {
            visited[static_cast<std::size_t>(k)] = 1;
            q.push(k);
        }
    std::vector<Simplex> simplices;
    while (!q.empty()) {
        index_t k = q.front();
        q.pop();
        for (index_t id : partition.intervals()[static_cast<std::size_t>(k)].members) {
            simplices.push_back(C.simplex(id));
            for (index_t f : C.facets(id)) {
                index_t j = partition.interval_of(f);
                if (!visited[static_cast<std::size_t>(j)]) {
                    visited[static_cast<std::size_t>(j)] = 1;
                    q.push(j);
                }
            }
        }
    }
    try {
        return SimplicialComplex::from_closed_set(std::move(simplices));
    } catch (const DataError&) {
        throw InvariantViolation("descending complex is not closed under faces");
    }
}

}  // namespace

SimplicialComplex descending_complex(const GradientPartition& partition,
                                     const std::vector<index_t>& critical_ids) {
    std::vector<index_t> seeds;
    for (index_t id : critical_ids) {
        index_t k = partition.interval_of(id);
        if (!partition.intervals()[static_cast<std::size_t>(k)].is_critical())
            throw std::invalid_argument("descending_complex: simplex is not critical");
        seeds.push_back(k);
    }
    return descending_from_intervals(partition, std::move(seeds));
}

SimplicialComplex descending_complex(const GradientPartition& partition,
                                     const FiltValue& threshold) {
    std::vector<index_t> seeds;
    for (std::size_t k = 0; k < partition.intervals().size(); ++k) {
        const auto& iv = partition.intervals()[k];
        if (iv.is_critical() && iv.value <= threshold) seeds.push_back(static_cast<index_t>(k));
    }
    return descending_from_intervals(partition, std::move(seeds));
}

SimplicialComplex descending_complex(const GradientPartition& partition,
                                     const std::vector<FiltValue>& g_by_interval,
                                     const FiltValue& threshold) {
    const SimplicialComplex& C = partition.complex();
    if (g_by_interval.size() != partition.intervals().size())
        throw std::invalid_argument("descending_complex: one g value per interval required");
    // compatibility: g must be monotone across the facet relation of intervals
    for (index_t id = 0; id < C.size(); ++id)
        for (index_t cof : C.cofacets(id)) {
            index_t a = partition.interval_of(id), b = partition.interval_of(cof);
            if (g_by_interval[static_cast<std::size_t>(a)] >
                g_by_interval[static_cast<std::size_t>(b)])
                throw std::invalid_argument("descending_complex: g is not compatible with V");
        }
    std::vector<index_t> seeds;
    for (std::size_t k = 0; k < partition.intervals().size(); ++k)
        if (partition.intervals()[k].is_critical() && g_by_interval[k] <= threshold)
            seeds.push_back(static_cast<index_t>(k));
    return descending_from_intervals(partition, std::move(seeds));
}

SimplicialComplex descending_complex(const DiscretePairing& pairing,
                                     const std::vector<index_t>& critical_ids) {
    if (!pairing.complex) throw std::invalid_argument("descending_complex: pairing has no complex");
    const SimplicialComplex& C = *pairing.complex;
    // intervals of a pairing: its pairs plus one singleton per critical simplex
    std::vector<index_t> slot(static_cast<std::size_t>(C.size()), index_t(-1));
    std::vector<std::array<index_t, 2>> members;
    for (const auto& [sigma, tau] : pairing.pairs) {
        slot[static_cast<std::size_t>(sigma)] = static_cast<index_t>(members.size());
        slot[static_cast<std::size_t>(tau)] = static_cast<index_t>(members.size());
        members.push_back({sigma, tau});
    }
    for (index_t id = 0; id < C.size(); ++id)
        if (slot[static_cast<std::size_t>(id)] < 0) {
            slot[static_cast<std::size_t>(id)] = static_cast<index_t>(members.size());
            members.push_back({id, index_t(-1)});
        }
    std::vector<char> visited(members.size(), 0);
    std::queue<index_t> q;
    for (index_t id : critical_ids) {
        if (id < 0 || id >= C.size())
            throw std::invalid_argument("descending_complex: simplex id out of range");
        if (pairing.is_paired(id))
            throw std::invalid_argument("descending_complex: simplex is not critical");
        index_t k = slot[static_cast<std::size_t>(id)];
        if (!visited[static_cast<std::size_t>(k)]) {
            visited[static_cast<std::size_t>(k)] = 1;
            q.push(k);
        }
    }
    std::vector<Simplex> simplices;
    while (!q.empty()) {
        index_t k = q.front();
        q.pop();
        for (index_t id : members[static_cast<std::size_t>(k)]) {
            if (id < 0) continue;
            simplices.push_back(C.simplex(id));
            for (index_t f : C.facets(id)) {
                index_t j = slot[static_cast<std::size_t>(f)];
                if (!visited[static_cast<std::size_t>(j)]) {
                    visited[static_cast<std::size_t>(j)] = 1;
                    q.push(j);
                }
            }
        }
    }
    try {
        return SimplicialComplex::from_closed_set(std::move(simplices));
    } catch (const DataError&) {
        throw InvariantViolation("descending complex is not closed under faces");
    }
}

SimplicialComplex wrap_complex(const PointCloud& X, const FiltValue& r) {
    if (r < 0) return SimplicialComplex();
    auto K = std::make_shared<SimplicialComplex>(delaunay_complex(X));
    auto values = delaunay_radius_values(*K, X);
    GradientPartition P = gradient_partition(K, values);
    return descending_complex(P, FiltValue(r * r));
}

}  // namespace wrapser
