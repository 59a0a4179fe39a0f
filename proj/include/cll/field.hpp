#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace cll {

using Complex = std::complex<double>;

// Periodic 1-D sample grid: points x_m = x0 + m*h, m = 0..n-1, h = length/n.
// The point at x0 + length identifies with x0. n is a power of two so the
// transform kernels stay radix-2.
struct GridSpec {
    double x0 = 0.0;
    double length = 0.0;
    int n = 0;

    double h() const { return length / n; }
    double point(int m) const { return x0 + m * h(); }
    double fundamental_wavenumber() const;  // 2*pi/length

    bool operator==(const GridSpec&) const = default;
};

// Validates and returns a grid. Throws std::invalid_argument unless
// length > 0 and n is a power of two with n >= 8.
GridSpec make_grid(double x0, double length, int n);

// Complex samples of a function on a grid.
struct ComplexField {
    GridSpec grid;
    std::vector<Complex> values;

    ComplexField() = default;
    explicit ComplexField(const GridSpec& g, Complex fill = Complex{})
        : grid(g), values(static_cast<std::size_t>(g.n), fill) {}
    ComplexField(const GridSpec& g, std::vector<Complex> v);

    int size() const { return grid.n; }
    Complex& operator[](int m) { return values[static_cast<std::size_t>(m)]; }
    Complex operator[](int m) const { return values[static_cast<std::size_t>(m)]; }
};

// Real samples on a grid.
struct RealField {
    GridSpec grid;
    std::vector<double> values;

    RealField() = default;
    explicit RealField(const GridSpec& g, double fill = 0.0)
        : grid(g), values(static_cast<std::size_t>(g.n), fill) {}
    RealField(const GridSpec& g, std::vector<double> v);

    int size() const { return grid.n; }
    double& operator[](int m) { return values[static_cast<std::size_t>(m)]; }
    double operator[](int m) const { return values[static_cast<std::size_t>(m)]; }
};

// Throws std::invalid_argument when two fields do not share a grid.
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where);

// Spectral derivative of the periodic extension of f; order 1 or 2. Exact for
// band-limited data up to round-off. The Nyquist mode is zeroed for order 1
// (its sign is ambiguous) and kept at |k| = pi/h for order 2.
ComplexField diff(const ComplexField& f, int order);
RealField diff(const RealField& f, int order);

double sup_norm(const ComplexField& f);  // max_m |f(x_m)|
double sup_norm(const RealField& f);
double l2_norm(const ComplexField& f);  // sqrt(h * sum |f|^2)
double l2_norm(const RealField& f);

bool is_finite(const ComplexField& f);
bool is_finite(const RealField& f);

// Pointwise algebra. All binary ops require a shared grid.
ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(const ComplexField& a, const ComplexField& b);
ComplexField operator*(Complex c, const ComplexField& f);
ComplexField operator*(double c, const ComplexField& f);
ComplexField& operator+=(ComplexField& a, const ComplexField& b);

RealField operator+(const RealField& a, const RealField& b);
RealField operator-(const RealField& a, const RealField& b);
RealField operator*(const RealField& a, const RealField& b);
RealField operator*(double c, const RealField& f);
RealField& operator+=(RealField& a, const RealField& b);
ComplexField operator*(const RealField& a, const ComplexField& b);

ComplexField conj(const ComplexField& f);
RealField abs2(const ComplexField& f);  // |f|^2
RealField real_part(const ComplexField& f);
RealField imag_part(const ComplexField& f);
ComplexField combine(const RealField& re, const RealField& im);  // re + i*im
ComplexField to_complex(const RealField& f);

// Sample a callable x -> Complex (resp. double) on the grid.
template <class F>
ComplexField sample_complex(const GridSpec& g, F&& f) {
    ComplexField out(g);
    for (int m = 0; m < g.n; ++m) out[m] = f(g.point(m));
    return out;
}

template <class F>
RealField sample_real(const GridSpec& g, F&& f) {
    RealField out(g);
    for (int m = 0; m < g.n; ++m) out[m] = f(g.point(m));
    return out;
}

}  // namespace cll
