#pragma once

#include <vector>

#include "cll/adm.hpp"
#include "cll/field.hpp"

namespace cll {

// Real form of u_t = alpha u_xx + beta |u|^2 u_x under u = p + i q:
//
//     d/dt [p]   [d00 d01] [p_xx]              [a00 a01] [p_x]
//          [q] = [d10 d11] [q_xx] + (p^2+q^2) *[a10 a11] [q_x]
//
// with disp = [[Re a, -Im a], [Im a, Re a]] and adv likewise from beta.
struct RealCouplingTable {
    double disp[2][2];
    double adv[2][2];
};

RealCouplingTable split_real_system(const ModelParams& params);

// t-power-series coefficients of the real and imaginary parts of u.
struct RealSeriesPair {
    ModelParams params;
    std::vector<RealField> series1;  // Re u
    std::vector<RealField> series2;  // Im u

    int order() const { return static_cast<int>(series1.size()) - 1; }
};

// Runs the decomposition recurrence on the coupled real system in pure real
// arithmetic. Same failure contract as build_series.
RealSeriesPair iadm_build(const ComplexField& u0, const ModelParams& params, int order);

// v_j = series1[j] + i * series2[j].
TaylorSeries recombine(const RealSeriesPair& pair);

}  // namespace cll
