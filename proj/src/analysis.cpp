#include "cll/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cll {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const Snapshot& find_snapshot(const std::vector<Snapshot>& oracle, double t) {
    const double tol = 1e-9 * std::max(1.0, std::abs(t));
    for (const Snapshot& s : oracle) {
        if (std::abs(s.t - t) <= tol) return s;
    }
    throw std::invalid_argument("error_table: requested time t = " + fmt_double(t) +
                                " not present in the reference snapshots");
}

ErrorRow make_row(const TaylorSeries& s, const Snapshot& ref, int order) {
    const ComplexField approx = evaluate(s, ref.t, order);
    const ComplexField d = approx - ref.u;
    double abs_u = 0.0;
    double abs_u2 = 0.0;
    for (int m = 0; m < approx.size(); ++m) {
        const double ma = std::abs(approx[m]);
        const double mr = std::abs(ref.u[m]);
        abs_u = std::max(abs_u, std::abs(ma - mr));
        abs_u2 = std::max(abs_u2, std::abs(ma * ma - mr * mr));
    }
    return ErrorRow{ref.t, order, sup_norm(d), l2_norm(d), abs_u, abs_u2};
}

}  // namespace

std::vector<ErrorRow> error_table(const TaylorSeries& s, const std::vector<Snapshot>& oracle,
                                  const std::vector<int>& orders,
                                  const std::vector<double>& times) {
    if (orders.empty()) throw std::invalid_argument("error_table: no truncation orders given");
    for (int order : orders) {
        if (order < 0 || order > s.order()) {
            throw std::invalid_argument("error_table: order " + std::to_string(order) +
                                        " outside series range");
        }
    }
    std::vector<ErrorRow> rows;
    if (times.empty()) {
        for (const Snapshot& snap : oracle) {
            for (int order : orders) rows.push_back(make_row(s, snap, order));
        }
    } else {
        for (double t : times) {
            const Snapshot& snap = find_snapshot(oracle, t);
            for (int order : orders) rows.push_back(make_row(s, snap, order));
        }
    }
    return rows;
}

RadiusReport radius_estimate(const TaylorSeries& s, int tail_window) {
    if (tail_window < 3) throw std::invalid_argument("radius_estimate: tail_window must be >= 3");
    if (s.order() < tail_window) {
        throw std::invalid_argument("radius_estimate: series order " + std::to_string(s.order()) +
                                    " too short for tail_window " + std::to_string(tail_window));
    }
    const GridSpec& g = s.grid();
    RealField per_point(g);
    double global = std::numeric_limits<double>::infinity();
    const int j_lo = s.order() - tail_window + 1;
    for (int m = 0; m < g.n; ++m) {
        double root = 0.0;
        for (int j = j_lo; j <= s.order(); ++j) {
            const double a = std::abs(s.coeffs[static_cast<std::size_t>(j)][m]);
            if (a < 1e-300) continue;
            root = std::max(root, std::pow(a, 1.0 / j));
        }
        const double r = root == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / root;
        per_point[m] = r;
        global = std::min(global, r);
    }
    return RadiusReport{std::move(per_point), global, tail_window};
}

DivergenceVerdict divergence_report(const TaylorSeries& s, const ModelParams& params,
                                    const RadiusReport& radius, const IntegratorConfig& cfg) {
    const double r = radius.global;
    const ComplexField& u0 = s.coeffs.front();
    const double scale = sup_norm(u0);

    DivergenceVerdict verdict{};
    verdict.radius = r;
    verdict.t_inside = std::isfinite(r) ? std::min(0.25 * r, cfg.t_end) : cfg.t_end;

    ComplexField ref_inside(u0.grid);
    try {
        ref_inside = advance_to(u0, params, cfg.dt, verdict.t_inside, 0.0, cfg.c_stab);
    } catch (const BlowUpError& e) {
        verdict.err_inside = std::numeric_limits<double>::infinity();
        verdict.inside_ok = false;
        verdict.tail_status = TailStatus::kBlowUp;
        verdict.blowup_time = e.blowup_time;
        return verdict;
    }
    verdict.err_inside = sup_norm(evaluate(s, verdict.t_inside) - ref_inside);
    verdict.inside_ok = verdict.err_inside <= kInsideRelTol * scale;

    const double t_out = 2.0 * r;
    if (!std::isfinite(r) || t_out > cfg.t_end) {
        verdict.tail_status = TailStatus::kSkippedHorizon;
        return verdict;
    }
    verdict.t_outside = t_out;
    try {
        const ComplexField ref_outside =
            advance_to(ref_inside, params, cfg.dt, t_out - verdict.t_inside, verdict.t_inside,
                       cfg.c_stab);
        verdict.err_outside = sup_norm(evaluate(s, t_out) - ref_outside);
        verdict.tail_status = *verdict.err_outside >= kOutsideGrowthFactor * verdict.err_inside
                                  ? TailStatus::kPass
                                  : TailStatus::kFail;
    } catch (const BlowUpError& e) {
        verdict.tail_status = TailStatus::kBlowUp;
        verdict.blowup_time = e.blowup_time;
    }
    return verdict;
}

}  // namespace cll
