#include <wrapser/geometry.hpp>

#include <wrapser/predicates.hpp>

#include <algorithm>
#include <map>
#include <vector>

// Incremental Delaunay for d = 2, 3 with exact predicates. Cells carry up to
// d+1 vertex ids where -1 stands for the vertex at infinity; infinite cells
// keep -1 in the last slot and their finite facet oriented so that the
// triangulation interior lies on the positive side. Finite cells are stored
// positively oriented. Any predicate that evaluates to zero is reported as a
// DegeneracyError instead of being resolved silently.

namespace wrapser {

namespace {

constexpr index_t kInfinite = -1;
constexpr index_t kNoCell = -1;

struct Cell {
    std::array<index_t, 4> v{{kNoCell, kNoCell, kNoCell, kNoCell}};
    std::array<index_t, 4> nb{{kNoCell, kNoCell, kNoCell, kNoCell}};
    bool alive = true;
    bool has_ball = false;
    ScaledBall ball;
};

std::string id_list(const std::vector<index_t>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(ids[i]);
    }
    return out;
}

class Builder {
  public:
    Builder(const PointCloud& X, const std::vector<index_t>& seed) : X_(X), d_(X.dimension()) {
        make_first_cell(seed);
    }

    void insert(index_t p) {
        index_t hit = locate(p);
        std::vector<index_t> cavity = conflict_region(hit, p);
        retriangulate(cavity, p);
    }

    std::vector<std::vector<vertex_t>> finite_cells() const {
        std::vector<std::vector<vertex_t>> out;
        for (const Cell& c : cells_) {
            if (!c.alive || is_infinite(c)) continue;
            std::vector<vertex_t> ids;
            for (int k = 0; k <= d_; ++k) ids.push_back(static_cast<vertex_t>(c.v[k]));
            out.push_back(std::move(ids));
        }
        return out;
    }

  private:
    const PointCloud& X_;
    int d_;
    std::vector<Cell> cells_;
    index_t walk_start_ = kNoCell;

    bool is_infinite(const Cell& c) const { return c.v[d_] == kInfinite; }

    std::vector<index_t> facet_of(const Cell& c, int k) const {
        std::vector<index_t> f;
        for (int t = 0; t <= d_; ++t)
            if (t != k) f.push_back(c.v[t]);
        return f;
    }

    int orientation_checked(std::vector<index_t> ids, const char* what) {
        int s = orientation(X_, ids);
        if (s == 0)
            throw DegeneracyError(std::string(what) + ": points " + id_list(ids) +
                                  " are affinely dependent");
        return s;
    }

    const ScaledBall& circumball(Cell& c) {
        if (!c.has_ball) {
            std::vector<index_t> ids(c.v.begin(), c.v.begin() + d_ + 1);
            c.ball = circumball_scaled(X_, ids);
            c.has_ball = true;
        }
        return c.ball;
    }

    bool in_conflict(index_t ci, index_t p) {
        Cell& c = cells_[static_cast<std::size_t>(ci)];
        if (is_infinite(c)) {
            // conflict iff p lies strictly outside the hull facet
            std::vector<index_t> ids(c.v.begin(), c.v.begin() + d_);
            ids.push_back(p);
            return orientation_checked(std::move(ids), "point on convex hull facet") < 0;
        }
        int side = ball_side(X_, circumball(c), p);
        if (side == 0) {
            std::vector<index_t> ids(c.v.begin(), c.v.begin() + d_ + 1);
            ids.push_back(p);
            throw DegeneracyError("cospherical points: " + id_list(ids));
        }
        return side > 0;
    }

    // Visibility walk across finite cells; returns a cell in conflict with p.
    index_t locate(index_t p) {
        index_t ci = walk_start_;
        if (ci == kNoCell || !cells_[static_cast<std::size_t>(ci)].alive ||
            is_infinite(cells_[static_cast<std::size_t>(ci)])) {
            ci = kNoCell;
            for (std::size_t t = 0; t < cells_.size(); ++t)
                if (cells_[t].alive && !is_infinite(cells_[t])) {
                    ci = static_cast<index_t>(t);
                    break;
                }
            if (ci == kNoCell) throw InvariantViolation("no finite cell to start the walk");
        }
        std::size_t steps = 0, limit = 4 * cells_.size() + 16;
        while (true) {
            if (++steps > limit) return locate_by_scan(p);
            const Cell& c = cells_[static_cast<std::size_t>(ci)];
            bool moved = false;
            for (int k = 0; k <= d_; ++k) {
                std::vector<index_t> ids = facet_of(c, k);
                ids.push_back(p);
                int s = orientation_checked(std::move(ids), "point location");
                // cell is positively oriented, so the opposite vertex sees the
                // facet (taken in stored order) with sign (-1)^(d-k)
                int interior = ((d_ - k) % 2 == 0) ? 1 : -1;
                if (s != interior) {
                    index_t next = c.nb[k];
                    if (is_infinite(cells_[static_cast<std::size_t>(next)])) {
                        // crossed the hull: that infinite cell is in conflict
                        return next;
                    }
                    ci = next;
                    moved = true;
                    break;
                }
            }
            if (!moved) return ci;  // p inside cell => inside its circumball
        }
    }

    index_t locate_by_scan(index_t p) {
        for (std::size_t t = 0; t < cells_.size(); ++t)
            if (cells_[t].alive && in_conflict(static_cast<index_t>(t), p))
                return static_cast<index_t>(t);
        throw InvariantViolation("point location failed: no cell in conflict");
    }

    std::vector<index_t> conflict_region(index_t seed, index_t p) {
        if (!in_conflict(seed, p))
            throw InvariantViolation("point location returned a cell not in conflict");
        std::vector<index_t> region{seed};
        std::vector<char> mark(cells_.size(), 0);
        mark[static_cast<std::size_t>(seed)] = 1;
        for (std::size_t head = 0; head < region.size(); ++head) {
            const Cell c = cells_[static_cast<std::size_t>(region[head])];
            for (int k = 0; k <= d_; ++k) {
                index_t o = c.nb[k];
                if (o == kNoCell || mark[static_cast<std::size_t>(o)]) continue;
                mark[static_cast<std::size_t>(o)] = 1;
                if (in_conflict(o, p)) region.push_back(o);
            }
        }
        return region;
    }

    void retriangulate(const std::vector<index_t>& cavity, index_t p) {
        std::vector<char> dead(cells_.size(), 0);
        for (index_t ci : cavity) dead[static_cast<std::size_t>(ci)] = 1;

        // boundary facets: (cavity cell, slot) whose neighbor survives
        struct BoundaryFacet {
            std::vector<index_t> verts;
            index_t outside;
        };
        std::vector<BoundaryFacet> boundary;
        for (index_t ci : cavity) {
            const Cell& c = cells_[static_cast<std::size_t>(ci)];
            for (int k = 0; k <= d_; ++k) {
                index_t o = c.nb[k];
                if (o != kNoCell && dead[static_cast<std::size_t>(o)]) continue;
                boundary.push_back({facet_of(c, k), o});
            }
        }
        for (index_t ci : cavity) cells_[static_cast<std::size_t>(ci)].alive = false;

        // one new cell per boundary facet, glued to the surviving neighbor
        // across it and to its siblings via shared-facet keys
        std::map<std::vector<index_t>, std::pair<index_t, int>> open_facets;
        index_t first_finite = kNoCell;
        for (const BoundaryFacet& bf : boundary) {
            Cell n;
            bool infinite = std::find(bf.verts.begin(), bf.verts.end(), kInfinite) != bf.verts.end();
            std::vector<index_t> verts;
            if (infinite) {
                // finite facet = p plus the finite part, -1 kept last;
                // orient the facet so any interior point is on its + side
                for (index_t v : bf.verts)
                    if (v != kInfinite) verts.push_back(v);
                verts.push_back(p);
                std::sort(verts.begin(), verts.end());
                if (hull_facet_sign(verts) < 0) std::swap(verts[0], verts[1]);
                verts.push_back(kInfinite);
            } else {
                verts = bf.verts;
                verts.push_back(p);
                std::sort(verts.begin(), verts.end());
                if (orientation_checked(verts, "new cell orientation") < 0)
                    std::swap(verts[0], verts[1]);
            }
            for (int k = 0; k <= d_; ++k) n.v[k] = verts[static_cast<std::size_t>(k)];

            index_t ni = static_cast<index_t>(cells_.size());
            cells_.push_back(n);
            if (!infinite && first_finite == kNoCell) first_finite = ni;

            // glue across the boundary facet (slot opposite p / opposite the
            // vertex missing from bf.verts)
            {
                std::vector<index_t> key = bf.verts;
                std::sort(key.begin(), key.end());
                int slot = slot_of_facet(cells_.back(), key);
                cells_[static_cast<std::size_t>(ni)].nb[slot] = bf.outside;
                if (bf.outside != kNoCell) {
                    Cell& oc = cells_[static_cast<std::size_t>(bf.outside)];
                    int oslot = slot_of_facet(oc, key);
                    oc.nb[oslot] = ni;
                }
            }
            // remaining facets all contain p and are shared with siblings
            for (int k = 0; k <= d_; ++k) {
                Cell& me = cells_[static_cast<std::size_t>(ni)];
                if (me.nb[k] != kNoCell) continue;
                std::vector<index_t> key = facet_of(me, k);
                std::sort(key.begin(), key.end());
                auto it = open_facets.find(key);
                if (it == open_facets.end()) {
                    open_facets.emplace(std::move(key), std::make_pair(ni, k));
                } else {
                    auto [oi, ok] = it->second;
                    me.nb[k] = oi;
                    cells_[static_cast<std::size_t>(oi)].nb[ok] = ni;
                    open_facets.erase(it);
                }
            }
        }
        if (!open_facets.empty())
            throw InvariantViolation("cavity boundary did not close up");
        if (first_finite != kNoCell) walk_start_ = first_finite;
    }

    // sign of the hull facet as seen from inside the triangulation: probe
    // with any vertex strictly off the facet plane (one always exists, the
    // seed cell is full-dimensional; vertices on the plane are skipped, they
    // sit on the hull boundary and witness nothing)
    int hull_facet_sign(const std::vector<index_t>& facet) {
        for (const Cell& c : cells_) {
            for (int k = 0; k <= d_; ++k) {
                index_t v = c.v[k];
                if (v == kInfinite) continue;
                if (std::find(facet.begin(), facet.end(), v) != facet.end()) continue;
                std::vector<index_t> probe = facet;
                probe.push_back(v);
                int s = orientation(X_, probe);
                if (s != 0) return s;
            }
        }
        throw InvariantViolation("no interior witness for a hull facet");
    }

    // slots 0..d_ always hold vertices (-1 there is the infinite vertex,
    // which is a legitimate key entry, not a blank)
    int slot_of_facet(const Cell& c, const std::vector<index_t>& sorted_key) const {
        for (int k = 0; k <= d_; ++k)
            if (!std::binary_search(sorted_key.begin(), sorted_key.end(), c.v[k])) return k;
        throw InvariantViolation("facet key does not match cell");
    }

    void make_first_cell(const std::vector<index_t>& seed) {
        std::vector<index_t> verts = seed;
        if (orientation_checked(verts, "initial cell") < 0) std::swap(verts[0], verts[1]);
        Cell c0;
        for (int k = 0; k <= d_; ++k) c0.v[k] = verts[static_cast<std::size_t>(k)];
        cells_.push_back(c0);
        walk_start_ = 0;

        // one infinite cell per facet of the first cell
        std::map<std::vector<index_t>, std::pair<index_t, int>> open_facets;
        for (int k = 0; k <= d_; ++k) {
            std::vector<index_t> f = facet_of(cells_[0], k);
            index_t opposite = cells_[0].v[k];
            std::vector<index_t> probe = f;
            probe.push_back(opposite);
            if (orientation_checked(std::move(probe), "initial hull facet") < 0)
                std::swap(f[0], f[1]);
            Cell inf;
            for (int t = 0; t < d_; ++t) inf.v[t] = f[static_cast<std::size_t>(t)];
            inf.v[d_] = kInfinite;
            index_t ii = static_cast<index_t>(cells_.size());
            cells_.push_back(inf);
            // glue to the first cell across the finite facet
            cells_[static_cast<std::size_t>(ii)].nb[d_] = 0;
            cells_[0].nb[k] = ii;
        }
        // glue infinite cells to each other: facets containing -1
        for (std::size_t t = 1; t < cells_.size(); ++t) {
            Cell& c = cells_[t];
            for (int k = 0; k < d_; ++k) {
                if (c.nb[k] != kNoCell) continue;
                std::vector<index_t> key = facet_of(c, k);
                std::sort(key.begin(), key.end());
                auto it = open_facets.find(key);
                if (it == open_facets.end()) {
                    open_facets.emplace(std::move(key), std::make_pair(static_cast<index_t>(t), k));
                } else {
                    auto [oi, ok] = it->second;
                    c.nb[k] = oi;
                    cells_[static_cast<std::size_t>(oi)].nb[ok] = static_cast<index_t>(t);
                    open_facets.erase(it);
                }
            }
        }
        if (!open_facets.empty())
            throw InvariantViolation("initial triangulation did not close up");
    }
};

// first d+1 affinely independent points, extending greedily; empty result
// means the whole cloud is affinely dependent ("flat")
std::vector<index_t> independent_seed(const PointCloud& X) {
    const int d = X.dimension();
    std::vector<index_t> seed{0};
    for (index_t q = 1; q < X.size() && static_cast<int>(seed.size()) < d + 1; ++q) {
        std::vector<index_t> trial = seed;
        trial.push_back(q);
        if (affinely_independent(X, trial)) seed = std::move(trial);
    }
    if (static_cast<int>(seed.size()) != d + 1) return {};
    return seed;
}

}  // namespace

SimplicialComplex delaunay_complex(const PointCloud& X) {
    const int d = X.dimension();
    const index_t n = X.size();
    if (n == 0) throw DataError("empty point cloud");

    if (n <= d) {
        // fewer points than a full cell: the complex is the single simplex on
        // all of them, provided they are in general position
        std::vector<index_t> all(static_cast<std::size_t>(n));
        for (index_t i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        if (n > 1 && !affinely_independent(X, all))
            throw DegeneracyError("points " + id_list(all) + " are affinely dependent");
        std::vector<vertex_t> vs(all.begin(), all.end());
        return SimplicialComplex::closure_of({Simplex(vs)});
    }

    std::vector<index_t> seed = independent_seed(X);
    if (seed.empty())
        throw DegeneracyError("all points lie in a common hyperplane");

    Builder b(X, seed);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (index_t s : seed) used[static_cast<std::size_t>(s)] = 1;
    for (index_t p = 0; p < n; ++p)
        if (!used[static_cast<std::size_t>(p)]) b.insert(p);

    std::vector<Simplex> top;
    for (const auto& ids : b.finite_cells()) top.emplace_back(ids);
    return SimplicialComplex::closure_of(std::move(top));
}

}  // namespace wrapser
