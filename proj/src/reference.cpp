#include "cll/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cll {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ComplexField rhs(const ComplexField& u, const ModelParams& p) {
    return p.alpha * diff(u, 2) + p.beta * (abs2(u) * diff(u, 1));
}

ComplexField rk4_step(const ComplexField& u, const ModelParams& p, double dt) {
    const ComplexField k1 = rhs(u, p);
    const ComplexField k2 = rhs(u + (0.5 * dt) * k1, p);
    const ComplexField k3 = rhs(u + (0.5 * dt) * k2, p);
    const ComplexField k4 = rhs(u + dt * k3, p);
    return u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double stability_limit(const GridSpec& g, const ModelParams& p, double c_stab) {
    return c_stab * g.h() * g.h() / std::abs(p.alpha);
}

}  // namespace

PhaseFunction PhaseFunction::constant(double c) {
    PhaseFunction f;
    f.kind_ = Kind::kConstant;
    f.c0_ = c;
    return f;
}

PhaseFunction PhaseFunction::linear(double c0, double c1) {
    PhaseFunction f;
    f.kind_ = Kind::kLinear;
    f.c0_ = c0;
    f.c1_ = c1;
    return f;
}

PhaseFunction PhaseFunction::spline(std::vector<double> s, std::vector<double> theta) {
    if (s.size() != theta.size() || s.size() < 3) {
        throw std::invalid_argument("PhaseFunction::spline: need >= 3 matching knots");
    }
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw std::invalid_argument("PhaseFunction::spline: knots must be strictly increasing");
    }
    PhaseFunction f;
    f.kind_ = Kind::kSpline;
    f.knots_ = std::move(s);
    f.vals_ = std::move(theta);

    // Natural cubic spline: tridiagonal solve for the second derivatives.
    const std::size_t n = f.knots_.size();
    f.second_.assign(n, 0.0);
    std::vector<double> scratch(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double hl = f.knots_[i] - f.knots_[i - 1];
        const double hr = f.knots_[i + 1] - f.knots_[i];
        const double sig = hl / (hl + hr);
        const double denom = sig * f.second_[i - 1] + 2.0;
        f.second_[i] = (sig - 1.0) / denom;
        const double d =
            (f.vals_[i + 1] - f.vals_[i]) / hr - (f.vals_[i] - f.vals_[i - 1]) / hl;
        scratch[i] = (6.0 * d / (hl + hr) - sig * scratch[i - 1]) / denom;
    }
    f.second_[n - 1] = 0.0;
    for (std::size_t i = n - 1; i-- > 0;) {
        f.second_[i] = f.second_[i] * f.second_[i + 1] + scratch[i];
    }
    return f;
}

double PhaseFunction::operator()(double s) const {
    switch (kind_) {
        case Kind::kConstant:
            return c0_;
        case Kind::kLinear:
            return c0_ + c1_ * s;
        case Kind::kSpline:
            break;
    }
    const std::size_t n = knots_.size();
    if (s <= knots_.front()) {
        const double h = knots_[1] - knots_[0];
        const double slope = (vals_[1] - vals_[0]) / h - h * second_[1] / 6.0;
        return vals_.front() + slope * (s - knots_.front());
    }
    if (s >= knots_.back()) {
        const double h = knots_[n - 1] - knots_[n - 2];
        const double slope = (vals_[n - 1] - vals_[n - 2]) / h + h * second_[n - 2] / 6.0;
        return vals_.back() + slope * (s - knots_.back());
    }
    const auto hi_it = std::upper_bound(knots_.begin(), knots_.end(), s);
    const std::size_t hi = static_cast<std::size_t>(hi_it - knots_.begin());
    const std::size_t lo = hi - 1;
    const double h = knots_[hi] - knots_[lo];
    const double a = (knots_[hi] - s) / h;
    const double b = (s - knots_[lo]) / h;
    return a * vals_[lo] + b * vals_[hi] +
           ((a * a * a - a) * second_[lo] + (b * b * b - b) * second_[hi]) * h * h / 6.0;
}

const char* PhaseFunction::kind() const {
    switch (kind_) {
        case Kind::kConstant:
            return "constant";
        case Kind::kLinear:
            return "linear";
        case Kind::kSpline:
            return "spline";
    }
    return "?";
}

ComplexField soliton_eval(const SolitonSpec& spec, const GridSpec& grid, double t) {
    if (spec.sign != 1 && spec.sign != -1) {
        throw std::invalid_argument("soliton_eval: sign must be +1 or -1");
    }
    // The carrier exp(-ikx) must be periodic on the grid.
    const double cycles = spec.k * grid.length / (2.0 * std::numbers::pi);
    if (std::abs(cycles - std::round(cycles)) > 1e-9) {
        throw std::invalid_argument(
            "soliton_eval: carrier wavenumber k = " + fmt_double(spec.k) +
            " is not commensurate with the grid (k*length must be a multiple of 2*pi)");
    }
    ComplexField u(grid);
    for (int m = 0; m < grid.n; ++m) {
        const double x = grid.point(m);
        const double s = x - spec.nu * t;
        const double radicand = spec.gamma + spec.sign * spec.eta / std::cosh(spec.lambda * s);
        if (radicand < 0.0) {
            throw SqrtDomainError("soliton_eval: negative square-root argument " +
                                      fmt_double(radicand) + " at x = " + fmt_double(x),
                                  x, m);
        }
        const double phase = spec.omega * t - spec.k * x + spec.theta(s);
        u[m] = std::polar(std::sqrt(radicand), phase);
    }
    return u;
}

double residual(const SolitonSpec& spec, const ModelParams& params, const GridSpec& grid,
                double t, double dt_fd) {
    if (dt_fd <= 0.0) throw std::invalid_argument("residual: dt_fd must be positive");
    const ComplexField u = soliton_eval(spec, grid, t);
    const ComplexField u_plus = soliton_eval(spec, grid, t + dt_fd);
    const ComplexField u_minus = soliton_eval(spec, grid, t - dt_fd);
    const ComplexField u_t = (1.0 / (2.0 * dt_fd)) * (u_plus - u_minus);
    return sup_norm(u_t - rhs(u, params));
}

std::vector<Snapshot> integrate_mol(const ComplexField& u0, const ModelParams& params,
                                    const IntegratorConfig& cfg) {
    if (cfg.dt <= 0.0) throw std::invalid_argument("integrate_mol: dt must be positive");
    if (cfg.t_end < 0.0) throw std::invalid_argument("integrate_mol: t_end must be nonnegative");
    if (cfg.store_every < 1) {
        throw std::invalid_argument("integrate_mol: store_every must be >= 1");
    }
    const double limit = stability_limit(u0.grid, params, cfg.c_stab);
    if (cfg.dt > limit) {
        throw std::invalid_argument("integrate_mol: dt = " + fmt_double(cfg.dt) +
                                    " violates the stability bound " + fmt_double(limit));
    }
    if (!is_finite(u0)) throw std::invalid_argument("integrate_mol: initial data is not finite");

    std::vector<Snapshot> out;
    out.push_back(Snapshot{0.0, u0});
    if (cfg.t_end == 0.0) return out;

    const long nsteps = std::max<long>(1, static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-12)));
    const double dt = cfg.t_end / static_cast<double>(nsteps);
    ComplexField u = u0;
    for (long step = 1; step <= nsteps; ++step) {
        u = rk4_step(u, params, dt);
        const double t = cfg.t_end * static_cast<double>(step) / static_cast<double>(nsteps);
        if (!is_finite(u)) {
            throw BlowUpError("integrate_mol: non-finite state at t = " + fmt_double(t), t);
        }
        if (step % cfg.store_every == 0 || step == nsteps) out.push_back(Snapshot{t, u});
    }
    return out;
}

ComplexField advance_to(const ComplexField& u0, const ModelParams& params, double dt_max,
                        double T, double t0, double c_stab) {
    if (dt_max <= 0.0) throw std::invalid_argument("advance_to: dt_max must be positive");
    if (T < 0.0) throw std::invalid_argument("advance_to: duration must be nonnegative");
    if (T == 0.0) return u0;
    const double limit = stability_limit(u0.grid, params, c_stab);
    const double dt_cap = std::min(dt_max, limit);
    const long nsteps = std::max<long>(1, static_cast<long>(std::ceil(T / dt_cap - 1e-12)));
    const double dt = T / static_cast<double>(nsteps);
    ComplexField u = u0;
    for (long step = 1; step <= nsteps; ++step) {
        u = rk4_step(u, params, dt);
        if (!is_finite(u)) {
            const double t = t0 + T * static_cast<double>(step) / static_cast<double>(nsteps);
            throw BlowUpError("advance_to: non-finite state at t = " + fmt_double(t), t);
        }
    }
    return u;
}

ComplexField taylor_oracle(const ComplexField& u0, const ModelParams& params, int j,
                           double dt_fd) {
    if (j < 1 || j > 4) {
        throw std::invalid_argument("taylor_oracle: unsupported order j = " + std::to_string(j) +
                                    " (valid range 1..4)");
    }
    if (dt_fd <= 0.0) throw std::invalid_argument("taylor_oracle: dt_fd must be positive");

    // Centered stencils over m in [-M..M]; the wider high-order variants keep
    // the truncation error at O(dt_fd^4) where cancellation allows it.
    struct Stencil {
        int halfwidth;
        double w[7];
    };
    static const Stencil kStencil[4] = {
        {1, {-0.5, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0}},
        {2, {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12, 0.0, 0.0}},
        {3, {1.0 / 8, -1.0, 13.0 / 8, 0.0, -13.0 / 8, 1.0, -1.0 / 8}},
        {3, {-1.0 / 6, 2.0, -13.0 / 2, 28.0 / 3, -13.0 / 2, 2.0, -1.0 / 6}},
    };
    static const double kFactorial[5] = {1.0, 1.0, 2.0, 6.0, 24.0};
    const Stencil& st = kStencil[j - 1];
    const int M = st.halfwidth;

    // Integrate well inside the stability region and subdivide dt_fd exactly.
    const double limit = stability_limit(u0.grid, params, 0.2);
    long n_sub = 4;
    while (dt_fd / static_cast<double>(n_sub) > 0.5 * limit) n_sub *= 2;
    const double dt_int = dt_fd / static_cast<double>(n_sub);

    std::vector<ComplexField> snaps(static_cast<std::size_t>(2 * M + 1), ComplexField(u0.grid));
    snaps[static_cast<std::size_t>(M)] = u0;
    ComplexField fwd = u0;
    // Time reversal maps the evolution onto itself with negated coefficients.
    const ModelParams reversed = ModelParams::custom(-params.alpha, -params.beta);
    ComplexField bwd = u0;
    for (int m = 1; m <= M; ++m) {
        for (long s = 0; s < n_sub; ++s) fwd = rk4_step(fwd, params, dt_int);
        for (long s = 0; s < n_sub; ++s) bwd = rk4_step(bwd, reversed, dt_int);
        if (!is_finite(fwd) || !is_finite(bwd)) {
            throw BlowUpError("taylor_oracle: non-finite state at |t| = " + fmt_double(m * dt_fd),
                              m * dt_fd);
        }
        snaps[static_cast<std::size_t>(M + m)] = fwd;
        snaps[static_cast<std::size_t>(M - m)] = bwd;
    }

    ComplexField acc(u0.grid);
    for (int m = -M; m <= M; ++m) {
        const double w = st.w[m + M];
        if (w != 0.0) acc += w * snaps[static_cast<std::size_t>(M + m)];
    }
    const double scale = 1.0 / (std::pow(dt_fd, j) * kFactorial[j]);
    return scale * acc;
}

}  // namespace cll
