#pragma once

#include <vector>

#include "cll/adm.hpp"
#include "cll/errors.hpp"
#include "cll/field.hpp"

namespace cll {

// Phase theta(s) of the travelling variable s = x - nu*t. Constant, linear,
// or a natural cubic spline through tabulated (s, theta) pairs; the spline
// extends linearly with its end slopes outside the table.
class PhaseFunction {
public:
    static PhaseFunction constant(double c);
    static PhaseFunction linear(double c0, double c1);  // c0 + c1*s
    static PhaseFunction spline(std::vector<double> s, std::vector<double> theta);

    double operator()(double s) const;
    const char* kind() const;

private:
    PhaseFunction() = default;
    enum class Kind { kConstant, kLinear, kSpline } kind_ = Kind::kConstant;
    double c0_ = 0.0;
    double c1_ = 0.0;
    std::vector<double> knots_;
    std::vector<double> vals_;
    std::vector<double> second_;  // spline second derivatives at the knots
};

// Travelling-envelope candidate solution
//
//     u(x,t) = sqrt(gamma + sign*eta*sech[lambda(x - nu t)])
//              * exp(i [omega t - k x + theta(x - nu t)]) .
//
// All parameters are caller-supplied; validity against a given model is
// decided solely by the PDE residual.
struct SolitonSpec {
    double gamma = 0.0;
    double eta = 0.0;
    double lambda = 1.0;
    double nu = 0.0;     // travelling speed
    double omega = 0.0;  // temporal frequency
    double k = 0.0;      // carrier wavenumber; k*length must be a multiple of 2*pi
    int sign = +1;
    PhaseFunction theta = PhaseFunction::constant(0.0);
    double B = 0.0;  // auxiliary constant, stored for provenance only
};

// Pointwise evaluation on a grid. Throws SqrtDomainError (with the offending
// grid point) when the square-root argument goes negative, and
// std::invalid_argument when k is not commensurate with the grid.
ComplexField soliton_eval(const SolitonSpec& spec, const GridSpec& grid, double t);

// sup-norm of r = u_t - alpha u_xx - beta |u|^2 u_x at time t, with u_t by a
// centered difference of soliton_eval over +-dt_fd. A parameter set is
// considered valid when this stays below 1e-6.
double residual(const SolitonSpec& spec, const ModelParams& params, const GridSpec& grid,
                double t, double dt_fd);

inline constexpr double kResidualThreshold = 1e-6;

struct IntegratorConfig {
    double dt = 1e-3;
    double t_end = 1.0;
    int store_every = 1;
    double c_stab = 0.2;  // stability requirement: dt <= c_stab * h^2 / |alpha|
};

struct Snapshot {
    double t;
    ComplexField u;
};

// Classical RK4 on the semi-discrete system du/dt = alpha*diff(u,2) +
// beta*|u|^2*diff(u,1). Snapshots every store_every steps, t_end included.
// Throws BlowUpError with the failure time if the state leaves the finite
// range.
std::vector<Snapshot> integrate_mol(const ComplexField& u0, const ModelParams& params,
                                    const IntegratorConfig& cfg);

// Advances u0 from time t0 by duration T using steps of at most dt_max
// (step count chosen so the endpoint is hit exactly).
ComplexField advance_to(const ComplexField& u0, const ModelParams& params, double dt_max,
                        double T, double t0 = 0.0, double c_stab = 0.2);

// Independent estimate of the j-th series coefficient v_j = d^j_t u(x,0)/j!
// from centered differences of integrator snapshots at t = m*dt_fd. Negative
// times come from integrating the time-reversed system (alpha, beta -> -alpha,
// -beta). Supported orders: 1 <= j <= 4 (conditioning limit).
ComplexField taylor_oracle(const ComplexField& u0, const ModelParams& params, int j,
                           double dt_fd);

}  // namespace cll
