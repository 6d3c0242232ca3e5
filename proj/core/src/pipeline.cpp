#include <wrapser/pipeline.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace wrapser {

namespace {

std::vector<FiltValue> values_by_complex_id(const ElementwiseFiltration& filt) {
    std::vector<FiltValue> out(static_cast<std::size_t>(filt.size()));
    for (index_t pos = 0; pos < filt.size(); ++pos)
        out[static_cast<std::size_t>(filt.id_at(pos))] = filt.value_at(pos);
    return out;
}

std::vector<Simplex> support_simplices(const Chain& c, const ElementwiseFiltration& filt) {
    std::vector<Simplex> out;
    for (const auto& e : c.entries()) out.push_back(filt.simplex_at(e.index));
    return out;
}

std::string simplex_text(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.vertices()[i]);
    }
    return out + "}";
}

}  // namespace

ReconstructionReport reconstruct(const PointCloud& X, int dim, int field) {
    if (dim < 1 || dim > X.dimension())
        throw std::invalid_argument("reconstruct: homology dimension must lie in 1.." +
                                    std::to_string(X.dimension()));

    auto filt = std::make_shared<ElementwiseFiltration>(delaunay_radius_filtration(X));
    PrimeField F(static_cast<coeff_t>(field));
    auto res = std::make_shared<ReductionResult>(exhaustive_reduce(filt, F));

    // the most persistent feature: largest exact death/birth ratio among
    // finite positive-birth pairs of the requested dimension; pairs come in
    // death order, so a strict comparison keeps the earliest death on ties
    const PersistencePair* best = nullptr;
    mpq_class best_ratio;
    for (const auto& p : res->pairs) {
        if (filt->degree_at(p.birth) != dim) continue;
        const FiltValue& b = filt->value_at(p.birth);
        if (b <= 0) continue;
        mpq_class ratio = filt->value_at(p.death) / b;
        ratio.canonicalize();
        if (!best || ratio > best_ratio) {
            best = &p;
            best_ratio = ratio;
        }
    }
    if (!best)
        throw DataError("no finite feature with positive birth in dimension " +
                        std::to_string(dim));

    ReconstructionReport rep;
    rep.point_count = X.size();
    rep.input_dimension = X.dimension();
    rep.field = field;
    rep.perturbed = X.perturbed();
    rep.dim = dim;
    rep.birth_position = best->birth;
    rep.death_position = best->death;
    rep.birth_value = filt->value_at(best->birth);
    rep.death_value = filt->value_at(best->death);
    rep.birth = filt->display_value_at(best->birth);
    rep.death = filt->display_value_at(best->death);
    rep.ratio = rep.death / rep.birth;
    rep.cycle = res->R.column(best->death);
    rep.cycle_support = support_simplices(rep.cycle, *filt);

    GradientPartition partition = gradient_partition(filt->complex_ptr(), values_by_complex_id(*filt));
    rep.wrap_at_birth = descending_complex(partition, rep.birth_value);

    std::vector<Simplex> escaped;
    for (const Simplex& s : rep.cycle_support)
        if (!rep.wrap_at_birth.id_of(s)) escaped.push_back(s);
    if (!escaped.empty()) {
        std::string msg = "reduced cycle leaves the Wrap complex at its birth radius:";
        for (const auto& s : escaped) msg += " " + simplex_text(s);
        throw InvariantViolation(msg);
    }
    rep.containment = true;

    if (dim == 2 && field == 2) {
        std::map<Simplex, int> edge_degree;
        for (const Simplex& t : rep.cycle_support)
            for (const auto& [e, sign] : boundary_faces(t)) {
                (void)sign;
                ++edge_degree[e];
            }
        rep.watertight = std::all_of(edge_degree.begin(), edge_degree.end(),
                                     [](const auto& kv) { return kv.second == 2; });
    }

    rep.filtration = filt;
    rep.reduction = res;
    return rep;
}

VerificationReport verify_theorems(const PointCloud& X, std::vector<FiltValue> grid_squared,
                                   int field) {
    auto filt = std::make_shared<ElementwiseFiltration>(delaunay_radius_filtration(X));
    PrimeField F(static_cast<coeff_t>(field));
    ReductionResult res = exhaustive_reduce(filt, F);
    GradientPartition partition =
        gradient_partition(filt->complex_ptr(), values_by_complex_id(*filt));

    if (grid_squared.empty()) {
        for (index_t pos = 0; pos < filt->size(); ++pos)
            if (pos == 0 || filt->value_at(pos) != filt->value_at(pos - 1))
                grid_squared.push_back(filt->value_at(pos));
    }
    std::sort(grid_squared.begin(), grid_squared.end());
    grid_squared.erase(std::unique(grid_squared.begin(), grid_squared.end()), grid_squared.end());

    VerificationReport rep;
    rep.point_count = X.size();
    rep.input_dimension = X.dimension();
    rep.field = field;
    rep.perturbed = X.perturbed();

    auto display_radius = [](const FiltValue& v2) { return std::sqrt(to_double(v2)); };

    for (const FiltValue& v : grid_squared) {
        rep.grid.push_back(display_radius(v));
        const index_t m = filt->sublevel_size(v);
        if (m == 0) continue;
        SimplicialComplex wrap = descending_complex(partition, v);

        auto check_cycle = [&](const Chain& z, index_t generator_position) {
            Chain zmin = lex_minimal_cycle(z, res, m);
            std::vector<Simplex> escaped;
            for (const auto& e : zmin.entries()) {
                const Simplex& s = filt->simplex_at(e.index);
                if (!wrap.id_of(s)) escaped.push_back(s);
            }
            ++rep.cycles_checked;
            if (!escaped.empty()) {
                ++rep.checks_failed;
                rep.failures.push_back({"cycle-containment", display_radius(v),
                                        generator_position, std::move(escaped)});
            }
        };

        // classes alive at the prefix: pairs straddling it and essentials inside
        for (const auto& p : res.pairs)
            if (p.birth < m && m <= p.death) check_cycle(res.R.column(p.death), p.birth);
        for (index_t i : res.essential)
            if (i < m) check_cycle(res.S.column(i), i);
    }

    // reduction columns of critical simplices stay inside the descending
    // complex at their own value (criticals = essential or non-zero pair)
    {
        std::map<FiltValue, SimplicialComplex> desc_cache;
        auto descending_at = [&](const FiltValue& v) -> const SimplicialComplex& {
            auto it = desc_cache.find(v);
            if (it == desc_cache.end())
                it = desc_cache.emplace(v, descending_complex(partition, v)).first;
            return it->second;
        };
        std::vector<index_t> critical;
        for (index_t i : res.essential) critical.push_back(i);
        for (const auto& p : res.pairs)
            if (filt->value_at(p.birth) != filt->value_at(p.death)) {
                critical.push_back(p.birth);
                critical.push_back(p.death);
            }
        std::sort(critical.begin(), critical.end());
        for (index_t t : critical) {
            const SimplicialComplex& desc = descending_at(filt->value_at(t));
            std::vector<Simplex> escaped;
            for (const auto& e : res.S.column(t).entries()) {
                const Simplex& s = filt->simplex_at(e.index);
                if (!desc.id_of(s)) escaped.push_back(s);
            }
            ++rep.columns_checked;
            if (!escaped.empty()) {
                ++rep.checks_failed;
                rep.failures.push_back({"reduction-column-support",
                                        display_radius(filt->value_at(t)), t,
                                        std::move(escaped)});
            }
        }
    }
    return rep;
}

namespace {

nlohmann::ordered_json simplex_json(const Simplex& s) {
    return nlohmann::ordered_json(s.vertices());
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw DataError("cannot write '" + p.string() + "'");
    out << text;
    if (!out) throw DataError("write failed for '" + p.string() + "'");
}

// triangles plus the edges and vertices that are maximal in the complex (OFF
// cannot express tetrahedra; higher cells are represented by their 2-skeleton)
std::vector<Simplex> drawable_faces(const SimplicialComplex& K) {
    std::vector<Simplex> faces;
    for (index_t id = 0; id < K.size(); ++id) {
        const Simplex& s = K.simplex(id);
        if (s.dimension() == 2 || (s.dimension() < 2 && K.cofacets(id).empty()))
            faces.push_back(s);
    }
    return faces;
}

}  // namespace

void export_reconstruction(const ReconstructionReport& report, const PointCloud& X,
                           const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::path dir(out_dir);
    fs::create_directories(dir);

    {
        std::ostringstream s;
        write_barcode_json(s, *report.reduction);
        write_text_file(dir / "barcode.json", s.str());
    }
    {
        std::ostringstream s;
        write_off(s, X, report.cycle_support);
        write_text_file(dir / "cycle.off", s.str());
    }
    {
        std::ostringstream s;
        write_obj(s, X, report.cycle_support);
        write_text_file(dir / "cycle.obj", s.str());
    }
    {
        std::ostringstream s;
        write_off(s, X, drawable_faces(report.wrap_at_birth));
        write_text_file(dir / "wrap.off", s.str());
    }

    nlohmann::ordered_json j;
    j["points"] = report.point_count;
    j["input_dimension"] = report.input_dimension;
    j["field"] = report.field;
    j["perturbed"] = report.perturbed;
    nlohmann::ordered_json feature;
    feature["dim"] = report.dim;
    feature["birth"] = report.birth;
    feature["death"] = report.death;
    feature["ratio"] = report.ratio;
    feature["birth_position"] = report.birth_position;
    feature["death_position"] = report.death_position;
    feature["birth_simplex"] = simplex_json(report.filtration->simplex_at(report.birth_position));
    feature["death_simplex"] = simplex_json(report.filtration->simplex_at(report.death_position));
    j["feature"] = std::move(feature);
    nlohmann::ordered_json cyc;
    cyc["simplex_count"] = report.cycle_support.size();
    nlohmann::ordered_json simplices = nlohmann::ordered_json::array();
    for (const auto& s : report.cycle_support) simplices.push_back(simplex_json(s));
    cyc["simplices"] = std::move(simplices);
    j["cycle"] = std::move(cyc);
    nlohmann::ordered_json wrap;
    wrap["simplex_count"] = report.wrap_at_birth.size();
    std::vector<index_t> by_dim(static_cast<std::size_t>(report.wrap_at_birth.dimension() + 1), 0);
    for (index_t id = 0; id < report.wrap_at_birth.size(); ++id)
        ++by_dim[static_cast<std::size_t>(report.wrap_at_birth.simplex(id).dimension())];
    wrap["by_dimension"] = by_dim;
    j["wrap_at_birth"] = std::move(wrap);
    j["containment"] = report.containment;
    j["watertight"] = report.watertight ? nlohmann::ordered_json(*report.watertight)
                                        : nlohmann::ordered_json(nullptr);
    write_text_file(dir / "report.json", j.dump(2) + "\n");
}

void export_verification(const VerificationReport& report, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::path dir(out_dir);
    fs::create_directories(dir);

    nlohmann::ordered_json j;
    j["points"] = report.point_count;
    j["input_dimension"] = report.input_dimension;
    j["field"] = report.field;
    j["perturbed"] = report.perturbed;
    j["grid"] = report.grid;
    j["cycles_checked"] = report.cycles_checked;
    j["columns_checked"] = report.columns_checked;
    j["checks_failed"] = report.checks_failed;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
        nlohmann::ordered_json item;
        item["kind"] = f.kind;
        item["r"] = f.r;
        item["position"] = f.position;
        nlohmann::ordered_json ws = nlohmann::ordered_json::array();
        for (const auto& s : f.witnesses) ws.push_back(simplex_json(s));
        item["witnesses"] = std::move(ws);
        failures.push_back(std::move(item));
    }
    j["failures"] = std::move(failures);
    write_text_file(dir / "report.json", j.dump(2) + "\n");
}

}  // namespace wrapser
