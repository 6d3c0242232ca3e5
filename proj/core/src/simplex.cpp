#include <wrapser/simplex.hpp>

#include <algorithm>
#include <sstream>

namespace wrapser {

Simplex::Simplex(std::vector<vertex_t> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

Simplex::Simplex(std::initializer_list<vertex_t> vertices)
    : Simplex(std::vector<vertex_t>(vertices)) {}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

std::vector<Simplex> Simplex::facet_simplices() const {
    std::vector<Simplex> out;
    if (dimension() < 1) return out;
    out.reserve(vertices_.size());
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        Simplex f;
        f.vertices_.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (i != k) f.vertices_.push_back(vertices_[i]);
        out.push_back(std::move(f));
    }
    return out;
}

Simplex Simplex::with_vertex(vertex_t v) const {
    Simplex s = *this;
    auto it = std::lower_bound(s.vertices_.begin(), s.vertices_.end(), v);
    if (it == s.vertices_.end() || *it != v) s.vertices_.insert(it, v);
    return s;
}

Simplex Simplex::without_vertex(vertex_t v) const {
    Simplex s = *this;
    auto it = std::lower_bound(s.vertices_.begin(), s.vertices_.end(), v);
    if (it != s.vertices_.end() && *it == v) s.vertices_.erase(it);
    return s;
}

Simplex Simplex::intersection(const Simplex& a, const Simplex& b) {
    Simplex s;
    std::set_intersection(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                          b.vertices_.end(), std::back_inserter(s.vertices_));
    return s;
}

Simplex Simplex::union_of(const Simplex& a, const Simplex& b) {
    Simplex s;
    std::set_union(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(), b.vertices_.end(),
                   std::back_inserter(s.vertices_));
    return s;
}

bool Simplex::operator<(const Simplex& other) const {
    if (vertices_.size() != other.vertices_.size()) return vertices_.size() < other.vertices_.size();
    return vertices_ < other.vertices_;
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    os << '{';
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
        if (i) os << ',';
        os << s.vertices()[i];
    }
    return os << '}';
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (vertex_t v : s.vertices()) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<std::pair<Simplex, int>> boundary_faces(const Simplex& s) {
    std::vector<std::pair<Simplex, int>> out;
    if (s.dimension() < 1) return out;
    auto facets = s.facet_simplices();
    for (std::size_t k = 0; k < facets.size(); ++k)
        out.emplace_back(std::move(facets[k]), (k % 2 == 0) ? 1 : -1);
    return out;
}

SimplicialComplex SimplicialComplex::closure_of(const std::vector<Simplex>& generators) {
    std::vector<Simplex> all;
    std::vector<Simplex> stack(generators.begin(), generators.end());
    // collect every face; dedup at the end (simplices are tiny, the sets small)
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (s.empty()) continue;
        all.push_back(s);
        for (auto& f : s.facet_simplices()) stack.push_back(std::move(f));
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    SimplicialComplex K;
    K.simplices_ = std::move(all);
    K.index_and_link();
    return K;
}

SimplicialComplex SimplicialComplex::from_closed_set(std::vector<Simplex> simplices) {
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    SimplicialComplex K;
    K.simplices_ = std::move(simplices);
    K.index_and_link();
    for (const auto& s : K.simplices_)
        for (const auto& f : s.facet_simplices())
            if (!K.contains(f)) {
                std::ostringstream msg;
                msg << "set is not closed under faces: " << s << " present, facet " << f
                    << " missing";
                throw DataError(msg.str());
            }
    return K;
}

void SimplicialComplex::index_and_link() {
    dimension_ = -1;
    cofacets_.assign(simplices_.size(), {});
    for (const auto& s : simplices_) dimension_ = std::max(dimension_, s.dimension());
    for (index_t id = 0; id < size(); ++id)
        for (const auto& f : simplex(id).facet_simplices()) {
            auto fid = id_of(f);
            if (fid) cofacets_[static_cast<std::size_t>(*fid)].push_back(id);
        }
    // closure_of inserts faces before the check above can use them, so missing
    // facets are only possible via from_closed_set, which re-verifies.
}

std::optional<index_t> SimplicialComplex::id_of(const Simplex& s) const {
    auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
    if (it != simplices_.end() && *it == s)
        return static_cast<index_t>(it - simplices_.begin());
    return std::nullopt;
}

std::vector<index_t> SimplicialComplex::facets(index_t id) const {
    std::vector<index_t> out;
    for (const auto& f : simplex(id).facet_simplices()) {
        auto fid = id_of(f);
        if (fid) out.push_back(*fid);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<index_t> SimplicialComplex::simplices_of_dimension(int dim) const {
    std::vector<index_t> out;
    for (index_t id = 0; id < size(); ++id)
        if (simplex(id).dimension() == dim) out.push_back(id);
    return out;
}

}  // namespace wrapser
