// wrapser: point-cloud input and mesh/barcode output
#pragma once

#include <wrapser/geometry.hpp>
#include <wrapser/reduction.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace wrapser {

enum class PointFormat { auto_detect, xyz, csv, off };

// XYZ: whitespace-separated decimal coordinates, one point per line ('#'
// comments and blank lines skipped). CSV: comma-separated with an optional
// header line. OFF: standard header; only the vertex block is consumed.
// The ambient dimension (2 or 3) is inferred from the column count.
// auto_detect picks the format from the file extension (.off/.csv, else xyz).
PointCloud load_points(const std::string& path, PointFormat format = PointFormat::auto_detect,
                       bool perturb = false);

// same grammar, from memory; `name` only labels parse errors
PointCloud parse_points(const std::string& text, PointFormat format, bool perturb = false,
                        const std::string& name = "<input>");

// Vertex list = the whole cloud (ids match input order, z = 0 for planar
// clouds), faces = the given simplices: points, segments, and triangles.
void write_off(std::ostream& out, const PointCloud& X, const std::vector<Simplex>& faces);
void write_obj(std::ostream& out, const PointCloud& X, const std::vector<Simplex>& faces);

// array of {dim, birth, death|null, birth_simplex, death_simplex|null} in
// barcode order; values in display units (radii for geometric filtrations)
void write_barcode_json(std::ostream& out, const ReductionResult& res);

}  // namespace wrapser
