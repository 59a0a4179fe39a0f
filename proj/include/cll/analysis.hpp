#pragma once

#include <optional>
#include <vector>

#include "cll/adm.hpp"
#include "cll/field.hpp"
#include "cll/reference.hpp"

namespace cll {

// One comparison of a truncated series against the reference at time t.
// err_abs_u and err_abs_u2 are the sup errors of |u| and |u|^2, emitted so
// either modulus-based reading of an error plot is covered.
struct ErrorRow {
    double t;
    int order;
    double sup_err;
    double l2_err;
    double err_abs_u;
    double err_abs_u2;
};

// One row per (t, order) pair. Times default to every snapshot time; each
// requested time must match a snapshot (tolerance 1e-9), otherwise an
// std::invalid_argument names the missing time.
std::vector<ErrorRow> error_table(const TaylorSeries& s, const std::vector<Snapshot>& oracle,
                                  const std::vector<int>& orders,
                                  const std::vector<double>& times = {});

// Per-point Cauchy root estimate of the series' t-radius of convergence:
// R(x) = 1 / max_{j in tail} |v_j(x)|^{1/j} over the last tail_window orders.
// Points whose tail coefficients all vanish report +infinity.
struct RadiusReport {
    RealField per_point;
    double global;  // min over x
    int tail_window;
};

RadiusReport radius_estimate(const TaylorSeries& s, int tail_window);

// Outcome of clause (b) of the divergence check.
enum class TailStatus {
    kPass,            // error at 2R at least 10x the error at R/4
    kFail,            // reference reachable but growth factor below 10
    kSkippedHorizon,  // 2R beyond the configured integration horizon
    kBlowUp,          // reference integrator blew up before 2R
};

// Verdict of the small-t validity check: (a) the full series tracks the
// reference at t = R/4 within 1e-2 relative error; (b) by t = 2R the error
// has grown by at least 10x (or the reference itself is gone).
struct DivergenceVerdict {
    double radius;
    double t_inside;
    double err_inside;
    bool inside_ok;
    std::optional<double> t_outside;
    std::optional<double> err_outside;
    TailStatus tail_status;
    std::optional<double> blowup_time;

    // Blow-up of the reference before 2R counts as divergence evidence.
    bool divergence_demonstrated() const {
        return inside_ok && (tail_status == TailStatus::kPass || tail_status == TailStatus::kBlowUp);
    }
};

inline constexpr double kInsideRelTol = 1e-2;
inline constexpr double kOutsideGrowthFactor = 10.0;

DivergenceVerdict divergence_report(const TaylorSeries& s, const ModelParams& params,
                                    const RadiusReport& radius, const IntegratorConfig& cfg);

}  // namespace cll
