#pragma once

#include <string>
#include <vector>

#include "cll/adm.hpp"
#include "cll/errors.hpp"
#include "cll/field.hpp"
#include "cll/reference.hpp"

namespace cll {

// Parsed and resolved run configuration. The file format is a flat sectioned
// key = value text; '#' and ';' start comments. Unknown keys are rejected.
struct RunConfig {
    // [model]
    std::string preset = "eq3";  // eq1 | eq3 | custom
    double a = 0.0;              // eq1/eq3 presets
    double b = 0.0;
    ModelParams params = ModelParams::from_eq3(1.0, 0.0);  // resolved coefficients

    // [grid]
    GridSpec grid;

    // [initial]
    bool has_initial = false;
    std::string profile;  // constant | plane_wave | sech_profile | soliton | file
    double const_re = 0.0, const_im = 0.0;
    double pw_amplitude = 1.0;
    int pw_mode = 1;
    double sp_gamma = 0.0, sp_eta = 0.0, sp_lambda = 1.0, sp_k = 0.0;
    int sp_sign = +1;
    std::string file_path;

    // [series]
    bool has_series = false;
    int order = 0;

    // [integrator]
    bool has_integrator = false;
    IntegratorConfig integrator;

    // [analysis]
    std::vector<double> times{0.1, 0.3, 0.5};
    std::vector<int> orders;  // empty -> full series order only
    int tail_window = 4;

    // [oracle]
    double dt_fd = 1e-3;
    int oracle_max_order = 4;

    // [soliton]
    bool has_soliton = false;
    SolitonSpec soliton;
    std::string theta_form = "constant";  // constant | linear | spline
    double theta_c0 = 0.0, theta_c1 = 0.0;
    std::string theta_file;
    double residual_t = 0.0;
    double residual_dt_fd = 1e-4;
};

// Parses and validates a configuration file. Throws ConfigError with the
// offending section/key on any problem.
RunConfig load_config(const std::string& path);

// Deterministic echo of every resolved section, one "key = value" line each,
// used verbatim as the provenance header of every output file.
std::string render_config(const RunConfig& cfg);

// Builds the initial condition selected by [initial] on the configured grid.
ComplexField make_initial_condition(const RunConfig& cfg);

}  // namespace cll
