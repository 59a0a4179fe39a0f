#include "cll/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cll {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 transform, in place. Forward uses e^{-2pi i jm/n};
// the inverse divides by n. Twiddles come straight from std::polar per
// butterfly so no recurrence error accumulates.
void fft_inplace(std::vector<Complex>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const Complex w = std::polar(1.0, ang * static_cast<double>(j));
                const Complex u = a[i + j];
                const Complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (auto& z : a) z *= inv;
    }
}

}  // namespace

double GridSpec::fundamental_wavenumber() const { return 2.0 * std::numbers::pi / length; }

GridSpec make_grid(double x0, double length, int n) {
    if (!std::isfinite(x0) || !std::isfinite(length)) {
        throw std::invalid_argument("make_grid: endpoints must be finite");
    }
    if (length <= 0.0) {
        throw std::invalid_argument("make_grid: length must be positive, got " +
                                    std::to_string(length));
    }
    if (n < 8 || !power_of_two(n)) {
        throw std::invalid_argument("make_grid: n must be a power of two >= 8, got " +
                                    std::to_string(n));
    }
    return GridSpec{x0, length, n};
}

ComplexField::ComplexField(const GridSpec& g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != g.n) {
        throw std::invalid_argument("ComplexField: sample count does not match grid");
    }
}

RealField::RealField(const GridSpec& g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != g.n) {
        throw std::invalid_argument("RealField: sample count does not match grid");
    }
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(where) + ": fields live on different grids");
    }
}

ComplexField diff(const ComplexField& f, int order) {
    if (order != 1 && order != 2) {
        throw std::invalid_argument("diff: order must be 1 or 2, got " + std::to_string(order));
    }
    std::vector<Complex> spectrum = f.values;
    fft_inplace(spectrum, false);
    const int n = f.grid.n;
    const double dk = f.grid.fundamental_wavenumber();
    for (int m = 0; m < n; ++m) {
        const int signed_m = (m <= n / 2) ? m : m - n;
        const double k = dk * signed_m;
        if (order == 1) {
            spectrum[static_cast<std::size_t>(m)] *=
                (m == n / 2) ? Complex{0.0, 0.0} : Complex{0.0, k};
        } else {
            spectrum[static_cast<std::size_t>(m)] *= -k * k;
        }
    }
    fft_inplace(spectrum, true);
    return ComplexField(f.grid, std::move(spectrum));
}

RealField diff(const RealField& f, int order) {
    const ComplexField d = diff(to_complex(f), order);
    RealField out(f.grid);
    for (int m = 0; m < f.grid.n; ++m) out[m] = d[m].real();
    return out;
}

double sup_norm(const ComplexField& f) {
    double s = 0.0;
    for (const Complex& z : f.values) s = std::max(s, std::abs(z));
    return s;
}

double sup_norm(const RealField& f) {
    double s = 0.0;
    for (double v : f.values) s = std::max(s, std::abs(v));
    return s;
}

double l2_norm(const ComplexField& f) {
    double s = 0.0;
    for (const Complex& z : f.values) s += std::norm(z);
    return std::sqrt(f.grid.h() * s);
}

double l2_norm(const RealField& f) {
    double s = 0.0;
    for (double v : f.values) s += v * v;
    return std::sqrt(f.grid.h() * s);
}

bool is_finite(const ComplexField& f) {
    for (const Complex& z : f.values) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

bool is_finite(const RealField& f) {
    for (double v : f.values) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
    require_same_grid(a.grid, b.grid, "field add");
    ComplexField out(a.grid);
    for (int m = 0; m < a.size(); ++m) out[m] = a[m] + b[m];
    return out;
}

ComplexField operator-(const ComplexField& a, const ComplexField& b) {
    require_same_grid(a.grid, b.grid, "field sub");
    ComplexField out(a.grid);
    for (int m = 0; m < a.size(); ++m) out[m] = a[m] - b[m];
    return out;
}

ComplexField operator*(const ComplexField& a, const ComplexField& b) {
    require_same_grid(a.grid, b.grid, "field mul");
    ComplexField out(a.grid);
    for (int m = 0; m < a.size(); ++m) out[m] = a[m] * b[m];
    return out;
}

ComplexField operator*(Complex c, const ComplexField& f) {
    ComplexField out(f.grid);
    for (int m = 0; m < f.size(); ++m) out[m] = c * f[m];
    return out;
}

ComplexField operator*(double c, const ComplexField& f) {
    ComplexField out(f.grid);
    for (int m = 0; m < f.size(); ++m) out[m] = c * f[m];
    return out;
}

ComplexField& operator+=(ComplexField& a, const ComplexField& b) {
    require_same_grid(a.grid, b.grid, "field add");
    for (int m = 0; m < a.size(); ++m) a[m] += b[m];
    return a;
}

RealField operator+(const RealField& a, const RealField& b) {
    require_same_grid(a.grid, b.grid, "field add");
    RealField out(a.grid);
    for (int m = 0; m < a.size(); ++m) out[m] = a[m] + b[m];
    return out;
}

RealField operator-(const RealField& a, const RealField& b) {
    require_same_grid(a.grid, b.grid, "field sub");
    RealField out(a.grid);
    for (int m = 0; m < a.size(); ++m) out[m] = a[m] - b[m];
    return out;
}

RealField operator*(const RealField& a, const RealField& b) {
    require_same_grid(a.grid, b.grid, "field mul");
    RealField out(a.grid);
    for (int m = 0; m < a.size(); ++m) out[m] = a[m] * b[m];
    return out;
}

RealField operator*(double c, const RealField& f) {
    RealField out(f.grid);
    for (int m = 0; m < f.size(); ++m) out[m] = c * f[m];
    return out;
}

RealField& operator+=(RealField& a, const RealField& b) {
    require_same_grid(a.grid, b.grid, "field add");
    for (int m = 0; m < a.size(); ++m) a[m] += b[m];
    return a;
}

ComplexField operator*(const RealField& a, const ComplexField& b) {
    require_same_grid(a.grid, b.grid, "field mul");
    ComplexField out(a.grid);
    for (int m = 0; m < a.size(); ++m) out[m] = a[m] * b[m];
    return out;
}

ComplexField conj(const ComplexField& f) {
    ComplexField out(f.grid);
    for (int m = 0; m < f.size(); ++m) out[m] = std::conj(f[m]);
    return out;
}

RealField abs2(const ComplexField& f) {
    RealField out(f.grid);
    for (int m = 0; m < f.size(); ++m) out[m] = std::norm(f[m]);
    return out;
}

RealField real_part(const ComplexField& f) {
    RealField out(f.grid);
    for (int m = 0; m < f.size(); ++m) out[m] = f[m].real();
    return out;
}

RealField imag_part(const ComplexField& f) {
    RealField out(f.grid);
    for (int m = 0; m < f.size(); ++m) out[m] = f[m].imag();
    return out;
}

ComplexField combine(const RealField& re, const RealField& im) {
    require_same_grid(re.grid, im.grid, "combine");
    ComplexField out(re.grid);
    for (int m = 0; m < re.size(); ++m) out[m] = Complex{re[m], im[m]};
    return out;
}

ComplexField to_complex(const RealField& f) {
    ComplexField out(f.grid);
    for (int m = 0; m < f.size(); ++m) out[m] = Complex{f[m], 0.0};
    return out;
}

}  // namespace cll
