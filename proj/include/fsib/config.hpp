#pragma once

// Flat key = value configuration files (UTF-8, '#' comments) naming the case
// and its parameters:
//   dimension, solid_law, fluid_regime, solid_regime,
//   rho_f, mu_f, rho_s, mu_s, H_i, H_o, L, T, P_re, P_im

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "params.hpp"

namespace fsib {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CaseConfig {
    CaseSpec spec;
    ProblemParams params;
};

namespace detail {

inline std::string trim(std::string s) {
    auto issp = [](unsigned char ch) { return std::isspace(ch); };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
}

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    return s;
}

inline double parse_number(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw param_error("config: bad numeric value for '" + key + "': " + value);
    }
    if (pos != value.size())
        throw param_error("config: trailing characters in value for '" + key + "'");
    return v;
}

}  // namespace detail

/// Applies one `key = value` assignment to a config under construction.
/// Shared by file parsing and by command-line --param overrides.
inline void apply_config_entry(CaseConfig& cfg, const std::string& rawkey,
                               const std::string& rawvalue) {
    const std::string key = detail::trim(rawkey);
    const std::string value = detail::trim(rawvalue);
    const std::string lv = detail::lower(value);
    if (key == "dimension") {
        if (lv == "channel2d")
            cfg.spec.dimension = Dimension::Channel2D;
        else if (lv == "tube3d")
            cfg.spec.dimension = Dimension::Tube3D;
        else
            throw param_error("config: dimension must be channel2d or tube3d");
    } else if (key == "solid_law") {
        if (lv == "linear")
            cfg.spec.solid_law = SolidLaw::Linear;
        else if (lv == "nonlinear")
            cfg.spec.solid_law = SolidLaw::Nonlinear;
        else
            throw param_error("config: solid_law must be linear or nonlinear");
    } else if (key == "fluid_regime" || key == "solid_regime") {
        Regime r;
        if (lv == "transient")
            r = Regime::Transient;
        else if (lv == "quasistatic" || lv == "quasi-static")
            r = Regime::QuasiStatic;
        else
            throw param_error("config: " + key + " must be quasistatic or transient");
        (key == "fluid_regime" ? cfg.spec.fluid_regime : cfg.spec.solid_regime) = r;
    } else if (key == "rho_f") {
        cfg.params.rho_f = detail::parse_number(key, value);
    } else if (key == "mu_f") {
        cfg.params.mu_f = detail::parse_number(key, value);
    } else if (key == "rho_s") {
        cfg.params.rho_s = detail::parse_number(key, value);
    } else if (key == "mu_s") {
        cfg.params.mu_s = detail::parse_number(key, value);
    } else if (key == "H_i") {
        cfg.params.H_i = detail::parse_number(key, value);
    } else if (key == "H_o") {
        cfg.params.H_o = detail::parse_number(key, value);
    } else if (key == "L") {
        cfg.params.L = detail::parse_number(key, value);
    } else if (key == "T") {
        cfg.params.T = detail::parse_number(key, value);
    } else if (key == "P_re") {
        cfg.params.P = cplx(detail::parse_number(key, value), cfg.params.P.imag());
    } else if (key == "P_im") {
        cfg.params.P = cplx(cfg.params.P.real(), detail::parse_number(key, value));
    } else {
        throw param_error("config: unknown key '" + key + "'");
    }
}

/// Parses a config from a stream. Missing keys keep their zero defaults and
/// are caught later by ProblemParams::validate.
inline CaseConfig read_config(std::istream& in) {
    CaseConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw param_error("config line " + std::to_string(lineno) +
                              ": expected key = value");
        apply_config_entry(cfg, line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

inline CaseConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file: " + path);
    return read_config(in);
}

}  // namespace fsib
