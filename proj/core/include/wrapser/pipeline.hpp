// wrapser: end-to-end reconstruction and theorem verification
#pragma once

#include <wrapser/flow.hpp>
#include <wrapser/geometry.hpp>
#include <wrapser/io.hpp>
#include <wrapser/morse.hpp>
#include <wrapser/reduction.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wrapser {

// Outcome of the "most persistent feature" heuristic: the finite positive-
// birth interval of the requested dimension with the largest death/birth
// ratio, its reduced cycle, and the Wrap complex at the birth radius.
struct ReconstructionReport {
    index_t point_count = 0;
    int input_dimension = 0;
    int field = 2;
    bool perturbed = false;

    int dim = 0;                    // homology dimension of the chosen feature
    index_t birth_position = 0;
    index_t death_position = 0;
    FiltValue birth_value, death_value;  // exact squared radii
    double birth = 0, death = 0;         // display units (radii)
    double ratio = 0;                    // death/birth in display units

    Chain cycle;                         // the totally reduced column R at the death
    std::vector<Simplex> cycle_support;  // its support, in filtration order
    SimplicialComplex wrap_at_birth;
    bool containment = false;  // support inside the Wrap complex (must hold)
    std::optional<bool> watertight;  // dim-2, Z/2 runs only: every support
                                     // edge lies in exactly two support triangles

    std::shared_ptr<const ElementwiseFiltration> filtration;
    std::shared_ptr<const ReductionResult> reduction;
};

// Delaunay radius filtration, exhaustive reduction, feature selection,
// lex-minimal cycle (the reduced death column), Wrap containment check.
// Throws DataError when no finite positive-birth pair exists in `dim`, and
// InvariantViolation if the containment postcondition fails.
ReconstructionReport reconstruct(const PointCloud& X, int dim, int field = 2);

struct VerificationFailure {
    std::string kind;   // "cycle-containment" or "reduction-column-support"
    double r;           // display-unit radius of the check
    index_t position;   // filtration position of the class generator / column
    std::vector<Simplex> witnesses;  // support simplices outside the target
};

struct VerificationReport {
    index_t point_count = 0;
    int input_dimension = 0;
    int field = 2;
    bool perturbed = false;

    std::vector<double> grid;  // radii actually checked, ascending
    index_t cycles_checked = 0;
    index_t columns_checked = 0;
    index_t checks_failed = 0;
    std::vector<VerificationFailure> failures;

    bool passed() const { return checks_failed == 0; }
};

// For every grid radius r: each class of H_*(Del_r) alive at r gets its
// lex-minimal representative checked for support inside Wrap_r. Additionally,
// every critical simplex tau (essential or in a non-zero pair) has its
// reduction column S_tau checked against the descending complex at f(tau).
// grid_squared empty = auto (every distinct filtration value).
VerificationReport verify_theorems(const PointCloud& X, std::vector<FiltValue> grid_squared,
                                   int field = 2);

// barcode.json, cycle.off, cycle.obj, wrap.off, report.json under out_dir
// (created if missing); byte-deterministic for identical inputs and flags
void export_reconstruction(const ReconstructionReport& report, const PointCloud& X,
                           const std::string& out_dir);

// report.json with grid, counters, and failure witnesses
void export_verification(const VerificationReport& report, const std::string& out_dir);

}  // namespace wrapser
