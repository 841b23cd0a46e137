#pragma once

// Point-set import and field-sample export.
//
// Points arrive as CSV with header  id,x,y[,z][,w][,region]  — w is a
// quadrature weight, region one of fluid|solid|interface. Field samples leave
// as CSV with header  id,t,field,c1[,c2[,c3]]  — one row per (point, time,
// field), %.17g formatting so values round-trip exactly, rows ordered by
// (time, point id, field name).

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "solution.hpp"

namespace fsib {

enum class Region { Fluid, Solid, Interface };

struct PointSet {
    int dim = 0;  // 2 or 3
    std::vector<Vec3> coords;
    std::optional<std::vector<double>> weights;
    std::optional<std::vector<Region>> regions;

    std::size_t size() const { return coords.size(); }
};

struct FieldRow {
    long id = 0;
    double t = 0.0;
    std::string field;
    int components = 0;
    Vec3 value{};
};

struct FieldTable {
    int dim = 0;
    std::vector<FieldRow> rows;

    void sort_rows() {
        std::sort(rows.begin(), rows.end(), [](const FieldRow& a, const FieldRow& b) {
            if (a.t != b.t) return a.t < b.t;
            if (a.id != b.id) return a.id < b.id;
            return a.field < b.field;
        });
    }
};

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

inline double parse_csv_number(const std::string& cell, int lineno, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument(cell);
        if (!std::isfinite(v)) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        throw io_error("row " + std::to_string(lineno) + ": bad " + what + " value '" +
                       cell + "'");
    }
}

inline Region parse_region(const std::string& cell, int lineno) {
    const std::string r = lower(cell);
    if (r == "fluid") return Region::Fluid;
    if (r == "solid") return Region::Solid;
    if (r == "interface") return Region::Interface;
    throw io_error("row " + std::to_string(lineno) + ": unknown region '" + cell + "'");
}

}  // namespace detail

/// Reads a point set; expect_dim (2 or 3), when given, rejects files whose
/// coordinate columns do not match the case dimension.
inline PointSet load_points(std::istream& in, int expect_dim = 0) {
    std::string line;
    if (!std::getline(in, line)) throw io_error("point file: missing header");
    auto header = detail::split_csv(line);
    std::size_t col = 0;
    auto expect = [&](const char* name) {
        if (col >= header.size() || detail::lower(header[col]) != name)
            throw io_error("point file: header must start id,x,y");
        ++col;
    };
    expect("id");
    expect("x");
    expect("y");
    PointSet ps;
    ps.dim = 2;
    bool has_w = false, has_region = false;
    while (col < header.size()) {
        const std::string h = detail::lower(header[col]);
        if (h == "z" && ps.dim == 2 && !has_w && !has_region) {
            ps.dim = 3;
        } else if (h == "w" && !has_w && !has_region) {
            has_w = true;
            ps.weights.emplace();
        } else if (h == "region" && !has_region) {
            has_region = true;
            ps.regions.emplace();
        } else {
            throw io_error("point file: unexpected header column '" + header[col] + "'");
        }
        ++col;
    }
    if (expect_dim != 0 && ps.dim != expect_dim)
        throw io_error("point file: " + std::to_string(ps.dim) +
                       "D coordinates, case needs " + std::to_string(expect_dim) + "D");

    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        const auto cells = detail::split_csv(line);
        if (cells.size() != header.size())
            throw io_error("row " + std::to_string(lineno) + ": expected " +
                           std::to_string(header.size()) + " columns, found " +
                           std::to_string(cells.size()));
        std::size_t c = 0;
        (void)detail::parse_csv_number(cells[c++], lineno, "id");
        Vec3 x{};
        x[0] = detail::parse_csv_number(cells[c++], lineno, "x");
        x[1] = detail::parse_csv_number(cells[c++], lineno, "y");
        if (ps.dim == 3) x[2] = detail::parse_csv_number(cells[c++], lineno, "z");
        ps.coords.push_back(x);
        if (has_w) {
            const double w = detail::parse_csv_number(cells[c++], lineno, "weight");
            if (w < 0.0)
                throw io_error("row " + std::to_string(lineno) + ": negative weight");
            ps.weights->push_back(w);
        }
        if (has_region) ps.regions->push_back(detail::parse_region(cells[c++], lineno));
    }
    return ps;
}

inline PointSet load_points(const std::string& path, int expect_dim = 0) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open point file: " + path);
    return load_points(in, expect_dim);
}

namespace detail {

inline int field_components(const std::string& field, int dim) {
    if (field == "v_f" || field == "u_s" || field == "v_s" || field == "t_f" ||
        field == "t_s")
        return dim;
    if (field == "p_f" || field == "p_s") return 1;
    throw param_error("unknown field name: " + field);
}

// Interface points need a normal to evaluate tractions; the convention is the
// outward fluid normal (toward the solid).
inline Vec3 interface_normal(const CaseSpec& c, const Vec3& x) {
    if (!c.is3d()) return {0.0, x[1] >= 0.0 ? 1.0 : -1.0, 0.0};
    const double r = std::hypot(x[0], x[1]);
    if (r == 0.0) throw domain_error("interface normal undefined on the axis");
    return {x[0] / r, x[1] / r, 0.0};
}

inline Vec3 eval_field(const AnalyticSolution& sol, const std::string& field,
                       const Vec3& x, double t) {
    if (field == "v_f") return eval_fluid_velocity(sol, x, t);
    if (field == "u_s") return eval_solid_displacement(sol, x, t);
    if (field == "v_s") return eval_solid_velocity(sol, x, t);
    if (field == "p_f") return {eval_fluid_pressure(sol, x, t), 0.0, 0.0};
    if (field == "p_s") return {eval_solid_pressure(sol, x, t), 0.0, 0.0};
    const Vec3 n = interface_normal(sol.spec(), x);
    if (field == "t_f") return eval_traction(sol, Side::Fluid, x, t, n);
    if (field == "t_s")
        return eval_traction(sol, Side::Solid, x, t, {-n[0], -n[1], -n[2]});
    throw param_error("unknown field name: " + field);
}

}  // namespace detail

/// Evaluates the selected fields at every (point, time) pair. Fluid fields
/// require fluid- or interface-tagged points, solid fields solid/interface
/// ones; untagged points must satisfy the domain predicate of the field.
inline FieldTable sample_fields(const AnalyticSolution& sol, const PointSet& points,
                                const std::vector<double>& times,
                                const std::vector<std::string>& fields) {
    const int dim = sol.spec().is3d() ? 3 : 2;
    if (points.dim != dim)
        throw param_error("point set dimension does not match the case");
    FieldTable table;
    table.dim = dim;
    for (double t : times) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            const bool fluid_ok =
                !points.regions || (*points.regions)[i] != Region::Solid;
            const bool solid_ok =
                !points.regions || (*points.regions)[i] != Region::Fluid;
            for (const std::string& f : fields) {
                const bool is_fluid_field = f == "v_f" || f == "p_f" || f == "t_f";
                if (is_fluid_field ? !fluid_ok : !solid_ok) continue;
                FieldRow row;
                row.id = static_cast<long>(i);
                row.t = t;
                row.field = f;
                row.components = detail::field_components(f, dim);
                row.value = detail::eval_field(sol, f, points.coords[i], t);
                table.rows.push_back(std::move(row));
            }
        }
    }
    table.sort_rows();
    return table;
}

inline void write_fields(const FieldTable& table, std::ostream& out) {
    out << "id,t,field";
    for (int cidx = 1; cidx <= table.dim; ++cidx) out << ",c" << cidx;
    out << "\n";
    char buf[64];
    for (const FieldRow& r : table.rows) {
        out << r.id << ',';
        std::snprintf(buf, sizeof buf, "%.17g", r.t);
        out << buf << ',' << r.field;
        for (int cidx = 0; cidx < r.components; ++cidx) {
            std::snprintf(buf, sizeof buf, "%.17g", r.value[cidx]);
            out << ',' << buf;
        }
        for (int cidx = r.components; cidx < table.dim; ++cidx) out << ',';
        out << "\n";
    }
}

/// Evaluates and writes in one step; the on-disk format round-trips doubles
/// exactly and is byte-stable for identical inputs.
inline FieldTable export_fields(const AnalyticSolution& sol, const PointSet& points,
                                const std::vector<double>& times,
                                const std::vector<std::string>& fields,
                                const std::string& path) {
    FieldTable table = sample_fields(sol, points, times, fields);
    std::ofstream out(path);
    if (!out) throw io_error("cannot open output file: " + path);
    write_fields(table, out);
    return table;
}

/// Reads a FieldTable CSV (the export format above).
inline FieldTable load_fields(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw io_error("field file: missing header");
    const auto header = detail::split_csv(line);
    if (header.size() < 4 || detail::lower(header[0]) != "id" ||
        detail::lower(header[1]) != "t" || detail::lower(header[2]) != "field")
        throw io_error("field file: header must be id,t,field,c1[,c2[,c3]]");
    FieldTable table;
    table.dim = static_cast<int>(header.size()) - 3;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        const auto cells = detail::split_csv(line);
        if (cells.size() != header.size())
            throw io_error("row " + std::to_string(lineno) + ": expected " +
                           std::to_string(header.size()) + " columns");
        FieldRow r;
        r.id = static_cast<long>(detail::parse_csv_number(cells[0], lineno, "id"));
        r.t = detail::parse_csv_number(cells[1], lineno, "t");
        r.field = cells[2];
        for (std::size_t c = 3; c < cells.size(); ++c) {
            if (cells[c].empty()) break;
            r.value[r.components++] =
                detail::parse_csv_number(cells[c], lineno, "component");
        }
        table.rows.push_back(std::move(r));
    }
    return table;
}

inline FieldTable load_fields(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open field file: " + path);
    return load_fields(in);
}

/// Uniform profile samples along the transverse axis for plotting: fluid
/// fields over [0, H_i], solid fields over [H_i, H_o]. Returns the table and
/// the sampled points (ids shared between the two).
inline std::pair<FieldTable, PointSet> profile_table(
    const AnalyticSolution& sol, int axis_samples, const std::vector<double>& times,
    const std::vector<std::string>& fields) {
    if (axis_samples < 2) throw param_error("profile_table needs >= 2 samples");
    const ProblemParams& p = sol.params();
    const bool is3d = sol.spec().is3d();
    PointSet ps;
    ps.dim = is3d ? 3 : 2;
    ps.regions.emplace();

    std::vector<std::string> fluid_fields, solid_fields;
    for (const auto& f : fields)
        (f == "v_f" || f == "p_f" ? fluid_fields : solid_fields).push_back(f);

    auto add_points = [&](double lo, double hi, Region reg) {
        for (int i = 0; i < axis_samples; ++i) {
            const double s = lo + (hi - lo) * double(i) / double(axis_samples - 1);
            // profiles run along the y-axis in both geometries
            ps.coords.push_back(is3d ? Vec3{0.0, s, 0.0} : Vec3{0.0, s, 0.0});
            ps.regions->push_back(reg);
        }
    };
    if (!fluid_fields.empty()) add_points(0.0, p.H_i, Region::Fluid);
    if (!solid_fields.empty()) add_points(p.H_i, p.H_o, Region::Solid);

    FieldTable table = sample_fields(sol, ps, times, fields);
    return {std::move(table), std::move(ps)};
}

inline void write_points(const PointSet& ps, std::ostream& out) {
    out << "id,x,y";
    if (ps.dim == 3) out << ",z";
    if (ps.weights) out << ",w";
    if (ps.regions) out << ",region";
    out << "\n";
    char buf[64];
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out << i;
        for (int c = 0; c < ps.dim; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", ps.coords[i][c]);
            out << ',' << buf;
        }
        if (ps.weights) {
            std::snprintf(buf, sizeof buf, "%.17g", (*ps.weights)[i]);
            out << ',' << buf;
        }
        if (ps.regions) {
            const Region r = (*ps.regions)[i];
            out << ','
                << (r == Region::Fluid ? "fluid"
                                       : r == Region::Solid ? "solid" : "interface");
        }
        out << "\n";
    }
}

}  // namespace fsib
