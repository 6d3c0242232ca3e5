// wrapser CLI: reconstruct | verify | barcode on point-cloud files
//
// exit codes: 0 success, 1 usage, 2 bad input data or degenerate geometry,
// 3 violated internal guarantee (indicates a bug, never bad input)

#include <wrapser/pipeline.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

wrapser::PointFormat parse_format(const std::string& name) {
    if (name == "auto") return wrapser::PointFormat::auto_detect;
    if (name == "xyz") return wrapser::PointFormat::xyz;
    if (name == "csv") return wrapser::PointFormat::csv;
    if (name == "off") return wrapser::PointFormat::off;
    throw CLI::ValidationError("--format", "unknown format '" + name + "'");
}

std::string default_out_dir() {
    if (const char* env = std::getenv("WRAPSER_OUT_DIR"); env && *env) return env;
    return "wrapser-out";
}

std::vector<wrapser::FiltValue> parse_r_grid(const std::string& spec) {
    std::vector<wrapser::FiltValue> grid;
    if (spec == "auto") return grid;
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        wrapser::FiltValue r = wrapser::parse_decimal(tok);
        grid.push_back(r * r);  // radii on the command line, squared internally
    }
    if (grid.empty()) throw wrapser::DataError("--r-grid: no radii given");
    return grid;
}

struct CommonOptions {
    std::string input;
    std::string format = "auto";
    std::string out_dir = default_out_dir();
    int field = 2;
    bool perturb = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("input", opt.input, "point cloud file")->required();
    cmd->add_option("--format", opt.format, "input format: auto|xyz|csv|off (default auto)");
    cmd->add_option("--field", opt.field, "coefficient field Z/p, p prime (default 2)");
    cmd->add_flag("--perturb", opt.perturb,
                  "apply the deterministic symbolic perturbation before any geometry");
    cmd->add_option("--out", opt.out_dir,
                    "output directory (default $WRAPSER_OUT_DIR or ./wrapser-out)");
}

wrapser::PointCloud load(const CommonOptions& opt) {
    return wrapser::load_points(opt.input, parse_format(opt.format), opt.perturb);
}

int run_reconstruct(const CommonOptions& opt, int dim) {
    wrapser::PointCloud X = load(opt);
    if (dim < 0) dim = X.dimension() - 1;
    wrapser::ReconstructionReport rep = wrapser::reconstruct(X, dim, opt.field);
    wrapser::export_reconstruction(rep, X, opt.out_dir);

    std::cout << "points: " << rep.point_count << " (" << rep.input_dimension << "D"
              << (rep.perturbed ? ", perturbed" : "") << "), field: Z/" << rep.field << "\n";
    std::cout << "feature: dim " << rep.dim << ", birth r = " << rep.birth
              << ", death r = " << rep.death << ", ratio = " << rep.ratio << "\n";
    std::cout << "cycle: " << rep.cycle_support.size() << " simplices, containment: yes";
    if (rep.watertight) std::cout << ", watertight: " << (*rep.watertight ? "yes" : "no");
    std::cout << "\n";
    std::cout << "wrote " << opt.out_dir
              << "/{barcode.json, cycle.off, cycle.obj, wrap.off, report.json}\n";
    return 0;
}

int run_verify(const CommonOptions& opt, const std::string& r_grid) {
    wrapser::PointCloud X = load(opt);
    wrapser::VerificationReport rep =
        wrapser::verify_theorems(X, parse_r_grid(r_grid), opt.field);
    wrapser::export_verification(rep, opt.out_dir);

    std::cout << "grid: " << rep.grid.size() << " radii, cycles checked: " << rep.cycles_checked
              << ", columns checked: " << rep.columns_checked << "\n";
    if (rep.passed()) {
        std::cout << "all containments hold\n";
        std::cout << "wrote " << opt.out_dir << "/report.json\n";
        return 0;
    }
    std::cerr << rep.checks_failed << " containment check(s) failed:\n";
    for (const auto& f : rep.failures) {
        std::cerr << "  " << f.kind << " at r = " << f.r << ", position " << f.position
                  << ", witnesses:";
        for (const auto& s : f.witnesses) {
            std::cerr << " {";
            for (std::size_t i = 0; i < s.vertices().size(); ++i)
                std::cerr << (i ? "," : "") << s.vertices()[i];
            std::cerr << "}";
        }
        std::cerr << "\n";
    }
    std::cerr << "wrote " << opt.out_dir << "/report.json\n";
    return 3;
}

int run_barcode(const CommonOptions& opt, int dim) {
    wrapser::PointCloud X = load(opt);
    auto filt = std::make_shared<wrapser::ElementwiseFiltration>(
        wrapser::delaunay_radius_filtration(X));
    wrapser::PrimeField F(static_cast<wrapser::coeff_t>(opt.field));
    wrapser::ReductionResult res = wrapser::standard_reduce(filt, F, /*apparent_shortcut=*/true);

    namespace fs = std::filesystem;
    fs::create_directories(opt.out_dir);
    std::ostringstream json;
    wrapser::write_barcode_json(json, res);
    std::ofstream out(fs::path(opt.out_dir) / "barcode.json", std::ios::binary);
    if (!out) throw wrapser::DataError("cannot write '" + opt.out_dir + "/barcode.json'");
    out << json.str();

    for (const auto& iv : wrapser::persistence_pairs_and_barcode(res)) {
        if (dim >= 0 && iv.dim != dim) continue;
        if (iv.zero_persistence) continue;
        std::cout << "dim " << iv.dim << ": [" << iv.birth << ", ";
        if (iv.death) std::cout << *iv.death;
        else std::cout << "inf";
        std::cout << ")\n";
    }
    std::cout << "wrote " << opt.out_dir << "/barcode.json\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistent homology, Wrap complexes, and lexicographically minimal cycles\n"
                 "for 2D/3D point clouds (Delaunay radius filtration, exact arithmetic)"};
    app.require_subcommand(1);

    CommonOptions rec_opt, ver_opt, bar_opt;
    int rec_dim = -1, bar_dim = -1;
    std::string r_grid = "auto";

    CLI::App* rec = app.add_subcommand(
        "reconstruct", "extract the most persistent feature's minimal cycle and Wrap complex");
    add_common(rec, rec_opt);
    rec->add_option("--dim", rec_dim, "homology dimension (default: ambient dimension - 1)");

    CLI::App* ver = app.add_subcommand(
        "verify", "check minimal-cycle and reduction-column containments over a radius grid");
    add_common(ver, ver_opt);
    ver->add_option("--r-grid", r_grid,
                    "radii to check: 'auto' (every critical value) or comma-separated list");

    CLI::App* bar = app.add_subcommand("barcode", "persistence barcode of the radius filtration");
    add_common(bar, bar_opt);
    bar->add_option("--dim", bar_dim, "only print intervals of this dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    bool perturbed = false;
    try {
        if (rec->parsed()) {
            perturbed = rec_opt.perturb;
            return run_reconstruct(rec_opt, rec_dim);
        }
        if (ver->parsed()) {
            perturbed = ver_opt.perturb;
            return run_verify(ver_opt, r_grid);
        }
        perturbed = bar_opt.perturb;
        return run_barcode(bar_opt, bar_dim);
    } catch (const wrapser::DegeneracyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!perturbed) std::cerr << "hint: rerun with --perturb\n";
        return 2;
    } catch (const wrapser::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wrapser::NotMorseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const wrapser::InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
