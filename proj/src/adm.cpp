#include "cll/adm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cll/errors.hpp"

namespace cll {

namespace {

constexpr double kSparseDrop = 1e-300;

// B_n assembled from cached derivatives dv[j] = v_j' and inner convolutions
// conv[j] = sum_{k<=j} v_k conj(v_{j-k}). Shared by the one-shot entry point
// and build_series so both sum in the same order.
ComplexField adomian_from_caches(std::span<const ComplexField> dv,
                                 std::span<const ComplexField> conv, int n) {
    ComplexField b(dv[0].grid);
    for (int j = 0; j <= n; ++j) b += dv[static_cast<std::size_t>(n - j)] * conv[static_cast<std::size_t>(j)];
    return b;
}

ComplexField inner_convolution(std::span<const ComplexField> v, int j) {
    ComplexField c(v[0].grid);
    for (int k = 0; k <= j; ++k) c += v[static_cast<std::size_t>(k)] * conj(v[static_cast<std::size_t>(j - k)]);
    return c;
}

}  // namespace

ModelParams ModelParams::from_eq1(double a, double b) {
    return custom(Complex{0.0, a}, Complex{-b, 0.0});
}

ModelParams ModelParams::from_eq3(double a, double b) {
    return custom(Complex{0.0, -a}, Complex{b, 0.0});
}

ModelParams ModelParams::custom(Complex alpha, Complex beta) {
    if (alpha == Complex{}) {
        throw std::invalid_argument("ModelParams: alpha must be nonzero (degenerate dispersion)");
    }
    return ModelParams{alpha, beta};
}

TPolynomial TPolynomial::monomial(int degree, const ComplexField& coeff) {
    TPolynomial p(coeff.grid);
    p.add_term(degree, coeff);
    return p;
}

ComplexField TPolynomial::coefficient(int degree) const {
    auto it = terms_.find(degree);
    return it != terms_.end() ? it->second : ComplexField(grid_);
}

void TPolynomial::add_term(int degree, const ComplexField& w) {
    if (degree < 0) throw std::invalid_argument("TPolynomial: negative degree");
    require_same_grid(grid_, w.grid, "TPolynomial::add_term");
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
        if (sup_norm(w) > kSparseDrop) terms_.emplace(degree, w);
        return;
    }
    it->second += w;
    if (sup_norm(it->second) <= kSparseDrop) terms_.erase(it);
}

TPolynomial operator+(const TPolynomial& a, const TPolynomial& b) {
    require_same_grid(a.grid(), b.grid(), "TPolynomial add");
    TPolynomial out = a;
    for (const auto& [deg, w] : b.terms()) out.add_term(deg, w);
    return out;
}

TPolynomial operator*(Complex c, const TPolynomial& p) {
    TPolynomial out(p.grid());
    for (const auto& [deg, w] : p.terms()) out.add_term(deg, c * w);
    return out;
}

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
    require_same_grid(a.grid(), b.grid(), "TPolynomial mul");
    TPolynomial out(a.grid());
    for (const auto& [da, wa] : a.terms()) {
        for (const auto& [db, wb] : b.terms()) out.add_term(da + db, wa * wb);
    }
    return out;
}

TPolynomial conj(const TPolynomial& p) {
    TPolynomial out(p.grid());
    for (const auto& [deg, w] : p.terms()) out.add_term(deg, conj(w));
    return out;
}

TPolynomial diff_x(const TPolynomial& p, int order) {
    TPolynomial out(p.grid());
    for (const auto& [deg, w] : p.terms()) out.add_term(deg, diff(w, order));
    return out;
}

TPolynomial integrate_t(const TPolynomial& p) {
    TPolynomial out(p.grid());
    for (const auto& [deg, w] : p.terms()) out.add_term(deg + 1, 1.0 / (deg + 1) * w);
    return out;
}

ComplexField adomian_polynomial(std::span<const ComplexField> v, int n) {
    if (n < 0) throw std::invalid_argument("adomian_polynomial: n must be nonnegative");
    if (static_cast<int>(v.size()) < n + 1) {
        throw std::invalid_argument("adomian_polynomial: need " + std::to_string(n + 1) +
                                    " coefficients, got " + std::to_string(v.size()));
    }
    std::vector<ComplexField> dv, conv;
    dv.reserve(static_cast<std::size_t>(n) + 1);
    conv.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        require_same_grid(v[0].grid, v[static_cast<std::size_t>(j)].grid, "adomian_polynomial");
        dv.push_back(diff(v[static_cast<std::size_t>(j)], 1));
        conv.push_back(inner_convolution(v, j));
    }
    return adomian_from_caches(dv, conv, n);
}

TPolynomial adomian_polynomial_t(std::span<const TPolynomial> u_terms, int n) {
    if (n < 0) throw std::invalid_argument("adomian_polynomial_t: n must be nonnegative");
    if (static_cast<int>(u_terms.size()) < n + 1) {
        throw std::invalid_argument("adomian_polynomial_t: insufficient terms");
    }
    const GridSpec& g = u_terms[0].grid();
    TPolynomial a(g);
    for (int j = 0; j <= n; ++j) {
        TPolynomial c(g);
        for (int k = 0; k <= j; ++k) {
            c = c + u_terms[static_cast<std::size_t>(k)] * conj(u_terms[static_cast<std::size_t>(j - k)]);
        }
        a = a + diff_x(u_terms[static_cast<std::size_t>(n - j)], 1) * c;
    }
    return a;
}

TPolynomial adm_step_integral(std::span<const TPolynomial> u_terms, const TPolynomial& a_k,
                              const ModelParams& params) {
    if (u_terms.empty()) throw std::invalid_argument("adm_step_integral: no terms");
    const TPolynomial& u_k = u_terms.back();
    require_same_grid(u_k.grid(), a_k.grid(), "adm_step_integral");
    return integrate_t(params.alpha * diff_x(u_k, 2) + params.beta * a_k);
}

ComplexField taylor_step(const ComplexField& v_k, const ComplexField& b_k, int k,
                         const ModelParams& params) {
    if (k < 0) throw std::invalid_argument("taylor_step: k must be nonnegative");
    require_same_grid(v_k.grid, b_k.grid, "taylor_step");
    return 1.0 / (k + 1) * (params.alpha * diff(v_k, 2) + params.beta * b_k);
}

TaylorSeries build_series(const ComplexField& u0, const ModelParams& params, int order) {
    if (order < 0) throw std::invalid_argument("build_series: order must be nonnegative");
    if (!is_finite(u0)) throw std::invalid_argument("build_series: initial data is not finite");

    std::vector<ComplexField> v{u0};
    std::vector<ComplexField> dv{diff(u0, 1)};
    std::vector<ComplexField> conv{u0 * conj(u0)};
    v.reserve(static_cast<std::size_t>(order) + 1);

    for (int k = 0; k < order; ++k) {
        const ComplexField b_k = adomian_from_caches(dv, conv, k);
        ComplexField next = taylor_step(v.back(), b_k, k, params);
        if (!is_finite(next)) {
            throw NumericalError("build_series: non-finite coefficient at order " +
                                 std::to_string(k + 1));
        }
        v.push_back(std::move(next));
        dv.push_back(diff(v.back(), 1));
        conv.push_back(inner_convolution(v, k + 1));
    }
    return TaylorSeries{params, std::move(v)};
}

std::vector<TPolynomial> integral_pipeline(const ComplexField& u0, const ModelParams& params,
                                           int max_order) {
    if (max_order < 0) throw std::invalid_argument("integral_pipeline: order must be nonnegative");
    std::vector<TPolynomial> u;
    u.reserve(static_cast<std::size_t>(max_order) + 1);
    u.push_back(TPolynomial::monomial(0, u0));
    for (int k = 0; k < max_order; ++k) {
        const TPolynomial a_k = adomian_polynomial_t(u, k);
        u.push_back(adm_step_integral(u, a_k, params));
    }
    return u;
}

ComplexField evaluate(const TaylorSeries& s, double t, int upto) {
    if (upto < 0 || upto > s.order()) {
        throw std::invalid_argument("evaluate: truncation order " + std::to_string(upto) +
                                    " outside series range 0.." + std::to_string(s.order()));
    }
    ComplexField acc = s.coeffs[static_cast<std::size_t>(upto)];
    for (int j = upto - 1; j >= 0; --j) acc = t * acc + s.coeffs[static_cast<std::size_t>(j)];
    return acc;
}

ComplexField evaluate(const TaylorSeries& s, double t) { return evaluate(s, t, s.order()); }

double monomial_check(const TPolynomial& u_k, int k) {
    if (u_k.is_zero()) return 0.0;
    double on = 0.0;
    double off = 0.0;
    for (const auto& [deg, w] : u_k.terms()) {
        const double s = sup_norm(w);
        if (deg == k) {
            on = s;
        } else {
            off = std::max(off, s);
        }
    }
    if (on == 0.0) return std::numeric_limits<double>::infinity();
    return off / on;
}

}  // namespace cll
