#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "cll/field.hpp"

namespace testutil {

// Uniform in [-1, 1) from the raw engine stream, so values do not depend on
// the standard library's distribution implementations.
inline double uniform_pm1(std::mt19937& rng) {
    return static_cast<double>(rng()) / 2147483648.0 - 1.0;
}

// Band-limited random field: modes -M..M with exponentially damped random
// complex coefficients. Smooth and periodic by construction.
inline cll::ComplexField random_smooth(const cll::GridSpec& g, std::mt19937& rng, int modes,
                                       double scale) {
    std::vector<cll::Complex> c(static_cast<std::size_t>(2 * modes + 1));
    for (auto& z : c) {
        const double re = uniform_pm1(rng);
        const double im = uniform_pm1(rng);
        z = cll::Complex{re, im};
    }
    const double dk = g.fundamental_wavenumber();
    return cll::sample_complex(g, [&](double x) {
        cll::Complex acc{0.0, 0.0};
        for (int m = -modes; m <= modes; ++m) {
            acc += c[static_cast<std::size_t>(m + modes)] * std::exp(-0.7 * std::abs(m)) *
                   std::polar(1.0, m * dk * x);
        }
        return scale * acc;
    });
}

inline cll::RealField random_smooth_real(const cll::GridSpec& g, std::mt19937& rng, int modes,
                                         double scale) {
    return cll::real_part(random_smooth(g, rng, modes, scale));
}

inline cll::ComplexField plane_wave(const cll::GridSpec& g, int mode, double amplitude = 1.0) {
    const double kappa = mode * g.fundamental_wavenumber();
    return cll::sample_complex(g, [&](double x) { return std::polar(amplitude, kappa * x); });
}

// sup|got - want| / sup|want|, plain sup error when want vanishes.
inline double rel_err(const cll::ComplexField& got, const cll::ComplexField& want) {
    const double denom = cll::sup_norm(want);
    const double d = cll::sup_norm(got - want);
    return denom == 0.0 ? d : d / denom;
}

inline double rel_err(const cll::RealField& got, const cll::RealField& want) {
    const double denom = cll::sup_norm(want);
    const double d = cll::sup_norm(got - want);
    return denom == 0.0 ? d : d / denom;
}

}  // namespace testutil
