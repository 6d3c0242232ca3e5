// wrapser: abstract simplices and finite simplicial complexes
#pragma once

#include <wrapser/common.hpp>

#include <functional>
#include <optional>
#include <ostream>
#include <vector>

namespace wrapser {

// A non-empty finite vertex set, kept strictly increasing.
class Simplex {
  public:
    Simplex() = default;
    explicit Simplex(std::vector<vertex_t> vertices);  // sorts and deduplicates
    Simplex(std::initializer_list<vertex_t> vertices);

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<vertex_t>& vertices() const { return vertices_; }
    bool empty() const { return vertices_.empty(); }

    bool is_face_of(const Simplex& other) const;  // subset test (any codimension)

    // vertex sets obtained by dropping one vertex; position k drops vertices()[k],
    // which pairs with the boundary sign (-1)^k
    std::vector<Simplex> facet_simplices() const;

    Simplex with_vertex(vertex_t v) const;
    Simplex without_vertex(vertex_t v) const;

    // set operations used by interval bookkeeping
    static Simplex intersection(const Simplex& a, const Simplex& b);
    static Simplex union_of(const Simplex& a, const Simplex& b);

    bool operator==(const Simplex& other) const { return vertices_ == other.vertices_; }
    bool operator!=(const Simplex& other) const { return !(*this == other); }
    // dimension first, then lexicographic on the vertex sequence
    bool operator<(const Simplex& other) const;

  private:
    std::vector<vertex_t> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

// A complex closed under taking faces. Simplices get dense ids 0..size-1 in
// (dimension, lexicographic) order, which makes every downstream ordering
// reproducible.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // downward closure of the given generators; duplicates are deduplicated
    static SimplicialComplex closure_of(const std::vector<Simplex>& generators);
    // the given set must already be closed under faces (throws DataError otherwise)
    static SimplicialComplex from_closed_set(std::vector<Simplex> simplices);

    index_t size() const { return static_cast<index_t>(simplices_.size()); }
    int dimension() const { return dimension_; }

    const Simplex& simplex(index_t id) const { return simplices_[static_cast<std::size_t>(id)]; }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::optional<index_t> id_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return id_of(s).has_value(); }

    // ids of codimension-1 cofaces / faces
    const std::vector<index_t>& cofacets(index_t id) const {
        return cofacets_[static_cast<std::size_t>(id)];
    }
    std::vector<index_t> facets(index_t id) const;

    // ids of simplices of one dimension, in id order
    std::vector<index_t> simplices_of_dimension(int dim) const;

    bool operator==(const SimplicialComplex& other) const { return simplices_ == other.simplices_; }

  private:
    void index_and_link();

    std::vector<Simplex> simplices_;  // sorted by (dim, lex); the id of a simplex is its position
    std::vector<std::vector<index_t>> cofacets_;
    int dimension_ = -1;
};

// boundary faces of s with alternating integer signs (+1, -1, ...)
std::vector<std::pair<Simplex, int>> boundary_faces(const Simplex& s);

}  // namespace wrapser
