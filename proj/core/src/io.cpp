#include <wrapser/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace wrapser {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

[[noreturn]] void parse_fail(const std::string& name, std::size_t line, const std::string& what) {
    throw DataError(name + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_whitespace(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream ss(line);
    while (std::getline(ss, tok, ',')) {
        std::size_t b = tok.find_first_not_of(" \t\r");
        std::size_t e = tok.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string() : tok.substr(b, e - b + 1));
    }
    return out;
}

bool looks_numeric(const std::string& tok) {
    try {
        parse_decimal(tok);
        return true;
    } catch (const DataError&) {
        return false;
    }
}

std::vector<std::vector<std::string>> read_xyz(std::istream& in, const std::string& name) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.front() == '#') continue;
        auto toks = split_whitespace(line);
        if (toks.empty()) continue;
        if (!rows.empty() && toks.size() != rows.front().size())
            parse_fail(name, lineno, "expected " + std::to_string(rows.front().size()) +
                                         " coordinates, got " + std::to_string(toks.size()));
        for (const auto& t : toks)
            if (!looks_numeric(t)) parse_fail(name, lineno, "bad number '" + t + "'");
        rows.push_back(std::move(toks));
    }
    return rows;
}

std::vector<std::vector<std::string>> read_csv(std::istream& in, const std::string& name) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    std::size_t lineno = 0;
    bool header_checked = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.front() == '#') continue;
        auto toks = split_commas(line);
        if (!header_checked) {
            header_checked = true;
            // a first line with any non-numeric cell is a header
            if (!std::all_of(toks.begin(), toks.end(), looks_numeric)) continue;
        }
        if (!rows.empty() && toks.size() != rows.front().size())
            parse_fail(name, lineno, "expected " + std::to_string(rows.front().size()) +
                                         " columns, got " + std::to_string(toks.size()));
        for (const auto& t : toks)
            if (!looks_numeric(t)) parse_fail(name, lineno, "bad number '" + t + "'");
        rows.push_back(std::move(toks));
    }
    return rows;
}

std::vector<std::vector<std::string>> read_off(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t lineno = 0;
    auto next_content = [&]() -> std::vector<std::string> {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.front() == '#') continue;
            auto toks = split_whitespace(line);
            if (!toks.empty()) return toks;
        }
        parse_fail(name, lineno, "unexpected end of OFF file");
    };
    auto header = next_content();
    if (header.size() != 1 || header[0] != "OFF")
        parse_fail(name, lineno, "missing OFF header");
    auto counts = next_content();
    if (counts.size() < 3) parse_fail(name, lineno, "bad OFF count line");
    long nv = 0;
    try {
        nv = std::stol(counts[0]);
    } catch (const std::exception&) {
        parse_fail(name, lineno, "bad OFF vertex count '" + counts[0] + "'");
    }
    if (nv < 0) parse_fail(name, lineno, "negative OFF vertex count");
    std::vector<std::vector<std::string>> rows;
    for (long i = 0; i < nv; ++i) {
        auto toks = next_content();
        if (toks.size() != 3)
            parse_fail(name, lineno, "OFF vertex needs 3 coordinates, got " +
                                         std::to_string(toks.size()));
        for (const auto& t : toks)
            if (!looks_numeric(t)) parse_fail(name, lineno, "bad number '" + t + "'");
        rows.push_back(std::move(toks));
    }
    return rows;  // faces ignored
}

}  // namespace

PointCloud parse_points(const std::string& text, PointFormat format, bool perturb,
                        const std::string& name) {
    std::istringstream in(text);
    std::vector<std::vector<std::string>> rows;
    switch (format) {
        case PointFormat::xyz: rows = read_xyz(in, name); break;
        case PointFormat::csv: rows = read_csv(in, name); break;
        case PointFormat::off: rows = read_off(in, name); break;
        case PointFormat::auto_detect:
            throw std::invalid_argument("parse_points needs an explicit format");
    }
    if (rows.empty()) throw DataError(name + ": no points found");
    return PointCloud::from_rows(rows, perturb);
}

PointCloud load_points(const std::string& path, PointFormat format, bool perturb) {
    if (format == PointFormat::auto_detect) {
        std::string p = lowercase(path);
        if (ends_with(p, ".off")) format = PointFormat::off;
        else if (ends_with(p, ".csv")) format = PointFormat::csv;
        else format = PointFormat::xyz;
    }
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_points(buf.str(), format, perturb, path);
}

namespace {

void print_coord(std::ostream& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

void print_vertex_row(std::ostream& out, const PointCloud& X, index_t i) {
    for (int k = 0; k < X.dimension(); ++k) {
        if (k) out << ' ';
        print_coord(out, X.approx(i, k));
    }
    if (X.dimension() == 2) out << " 0";
}

}  // namespace

void write_off(std::ostream& out, const PointCloud& X, const std::vector<Simplex>& faces) {
    out << "OFF\n" << X.size() << ' ' << faces.size() << " 0\n";
    for (index_t i = 0; i < X.size(); ++i) {
        print_vertex_row(out, X, i);
        out << '\n';
    }
    for (const Simplex& s : faces) {
        out << s.vertices().size();
        for (vertex_t v : s.vertices()) out << ' ' << v;
        out << '\n';
    }
}

void write_obj(std::ostream& out, const PointCloud& X, const std::vector<Simplex>& faces) {
    for (index_t i = 0; i < X.size(); ++i) {
        out << "v ";
        print_vertex_row(out, X, i);
        out << '\n';
    }
    for (const Simplex& s : faces) {
        switch (s.dimension()) {
            case 0: out << 'p'; break;
            case 1: out << 'l'; break;
            default: out << 'f'; break;
        }
        for (vertex_t v : s.vertices()) out << ' ' << v + 1;  // OBJ is 1-based
        out << '\n';
    }
}

void write_barcode_json(std::ostream& out, const ReductionResult& res) {
    const auto& filt = *res.filtration;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& iv : persistence_pairs_and_barcode(res)) {
        nlohmann::ordered_json item;
        item["dim"] = iv.dim;
        item["birth"] = iv.birth;
        item["death"] = iv.death ? nlohmann::ordered_json(*iv.death) : nlohmann::ordered_json(nullptr);
        item["birth_simplex"] = filt.simplex_at(iv.birth_position).vertices();
        item["death_simplex"] = iv.death_position
                                    ? nlohmann::ordered_json(filt.simplex_at(*iv.death_position).vertices())
                                    : nlohmann::ordered_json(nullptr);
        arr.push_back(std::move(item));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace wrapser
