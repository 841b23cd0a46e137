#pragma once

// Space-time error norms between imported numerical fields and the analytic
// solution, plus observed-order estimation. The spatial norm is a weighted
// discrete L2 over supplied quadrature weights; the space-time norm is the
// trapezoidal time integral of the squared spatial norms.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "meshio.hpp"

namespace fsib {

struct ErrorReport {
    std::string field;
    std::vector<double> times;
    std::vector<double> spatial_norms;  // one per time sample
    double space_time = 0.0;

    std::string key_values() const {
        std::string out;
        char line[128];
        std::snprintf(line, sizeof line, "error.%s.space_time = %.17g\n",
                      field.c_str(), space_time);
        out += line;
        for (std::size_t k = 0; k < times.size(); ++k) {
            std::snprintf(line, sizeof line, "error.%s.spatial.%zu.time = %.17g\n",
                          field.c_str(), k, times[k]);
            out += line;
            std::snprintf(line, sizeof line, "error.%s.spatial.%zu.norm = %.17g\n",
                          field.c_str(), k, spatial_norms[k]);
            out += line;
        }
        return out;
    }
};

/// Weighted spatial L2 norm of (numeric - analytic) for one field at one
/// time: sqrt(sum_i w_i |e_i|^2). The rows must all carry the same time and
/// field name; weights come from the point set unless uniform weighting was
/// explicitly requested.
inline double l2_space(const std::vector<FieldRow>& slice, const AnalyticSolution& sol,
                       const PointSet& points, bool allow_uniform_weights = false) {
    if (!points.weights && !allow_uniform_weights)
        throw param_error(
            "quadrature weights required (or opt in to uniform weights)");
    double acc = 0.0;
    for (const FieldRow& row : slice) {
        if (row.id < 0 || static_cast<std::size_t>(row.id) >= points.size())
            throw param_error("field row references unknown point id " +
                              std::to_string(row.id));
        const double w =
            points.weights ? (*points.weights)[static_cast<std::size_t>(row.id)]
                           : 1.0 / double(points.size());
        const Vec3 a =
            detail::eval_field(sol, row.field, points.coords[static_cast<std::size_t>(row.id)],
                               row.t);
        double e2 = 0.0;
        for (int c = 0; c < row.components; ++c) {
            const double d = row.value[c] - a[c];
            e2 += d * d;
        }
        acc += w * e2;
    }
    return std::sqrt(acc);
}

/// Space-time norm: sqrt of the trapezoidal integral of norm^2 over the time
/// window spanned by `times` (ascending, at least two samples).
inline double l2_space_time(const std::vector<double>& spatial_norms,
                            const std::vector<double>& times) {
    if (times.size() < 2) throw param_error("space-time norm needs >= 2 time samples");
    if (times.size() != spatial_norms.size())
        throw param_error("times/norms length mismatch");
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        const double dt = times[k + 1] - times[k];
        if (dt <= 0.0) throw param_error("times must be strictly increasing");
        const double a = spatial_norms[k] * spatial_norms[k];
        const double b = spatial_norms[k + 1] * spatial_norms[k + 1];
        acc += 0.5 * dt * (a + b);
    }
    return std::sqrt(acc);
}

/// Splits a table by field name and evaluates the spatial and space-time
/// norms against the analytic solution.
inline std::vector<ErrorReport> error_norms(const FieldTable& numeric,
                                            const AnalyticSolution& sol,
                                            const PointSet& points,
                                            bool allow_uniform_weights = false) {
    // group rows by field, then by time (rows are kept in table order)
    std::map<std::string, std::map<double, std::vector<FieldRow>>> groups;
    for (const FieldRow& r : numeric.rows) groups[r.field][r.t].push_back(r);

    std::vector<ErrorReport> reports;
    for (auto& [field, by_time] : groups) {
        ErrorReport rep;
        rep.field = field;
        for (auto& [t, slice] : by_time) {
            rep.times.push_back(t);
            rep.spatial_norms.push_back(
                l2_space(slice, sol, points, allow_uniform_weights));
        }
        rep.space_time = rep.times.size() >= 2
                             ? l2_space_time(rep.spatial_norms, rep.times)
                             : rep.spatial_norms.empty() ? 0.0 : rep.spatial_norms[0];
        reports.push_back(std::move(rep));
    }
    return reports;
}

/// Least-squares slope of log(error) against log(delta).
inline double observed_order(const std::vector<std::pair<double, double>>& pairs) {
    if (pairs.size() < 2) throw param_error("observed_order needs >= 2 refinements");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [delta, error] : pairs) {
        if (!(delta > 0.0) || !(error > 0.0))
            throw param_error("observed_order needs positive (delta, error) pairs");
        const double x = std::log(delta), y = std::log(error);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = double(pairs.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw param_error("observed_order: all deltas equal");
    return (n * sxy - sx * sy) / denom;
}

}  // namespace fsib
