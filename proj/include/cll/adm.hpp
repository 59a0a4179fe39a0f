#pragma once

#include <map>
#include <span>
#include <vector>

#include "cll/field.hpp"

namespace cll {

// Coefficients of the explicit evolution form
//
//     u_t = alpha * u_xx + beta * |u|^2 u_x .
//
// The two preset constructors rearrange the standard implicit forms of the
// Chen-Lee-Liu family into this one, so no sign convention leaks past here.
struct ModelParams {
    Complex alpha;  // dispersion coefficient, must be nonzero
    Complex beta;   // nonlinear coefficient

    // i u_t + a u_xx + i b |u|^2 u_x = 0  ->  alpha = i a, beta = -b
    static ModelParams from_eq1(double a, double b);
    // u_t + i a u_xx - b |u|^2 u_x = 0    ->  alpha = -i a, beta = b
    static ModelParams from_eq3(double a, double b);
    static ModelParams custom(Complex alpha, Complex beta);

    bool operator==(const ModelParams&) const = default;
};

// Ordered t-power-series coefficients v_0(x)..v_N(x) of a solution about t=0.
struct TaylorSeries {
    ModelParams params;
    std::vector<ComplexField> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const GridSpec& grid() const { return coeffs.front().grid; }
};

// Sparse polynomial in t whose coefficients are fields: sum_m w_m(x) t^m.
// Canonical form: a term is stored only while its sup-norm exceeds 1e-300.
class TPolynomial {
public:
    explicit TPolynomial(const GridSpec& g) : grid_(g) {}
    static TPolynomial monomial(int degree, const ComplexField& coeff);

    const GridSpec& grid() const { return grid_; }
    const std::map<int, ComplexField>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    // Zero field when no term of that degree is stored.
    ComplexField coefficient(int degree) const;

    // Accumulates w(x) t^degree, re-canonicalizing the touched term.
    void add_term(int degree, const ComplexField& w);

private:
    GridSpec grid_;
    std::map<int, ComplexField> terms_;
};

TPolynomial operator+(const TPolynomial& a, const TPolynomial& b);
TPolynomial operator*(Complex c, const TPolynomial& p);
TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);  // Cauchy product in t
TPolynomial conj(const TPolynomial& p);                             // valid for real t
TPolynomial diff_x(const TPolynomial& p, int order);
TPolynomial integrate_t(const TPolynomial& p);  // t^m -> t^{m+1}/(m+1)

// n-th coefficient B_n of the t-expansion of |S|^2 S_x for S = sum v_j t^j:
//
//     B_n = sum_{j=0..n} v'_{n-j} * sum_{k=0..j} v_k * conj(v_{j-k}) .
//
// O(n^2) field products; the derivatives v'_j are formed once per call.
ComplexField adomian_polynomial(std::span<const ComplexField> v, int n);

// Same expansion at the level of t-polynomials: the n-th term A_n of
// |U|^2 U_x for U = sum_j u_j(x,t). Used by the integral-form pipeline.
TPolynomial adomian_polynomial_t(std::span<const TPolynomial> u_terms, int n);

// One integral-form correction: u_{k+1} = integral_0^t [alpha * u_k,xx + beta * A_k] dt'.
// u_terms holds u_0..u_k; a_k must be built from them degree-by-degree.
TPolynomial adm_step_integral(std::span<const TPolynomial> u_terms, const TPolynomial& a_k,
                              const ModelParams& params);

// One coefficient-level correction: v_{k+1} = (alpha * v_k'' + beta * B_k) / (k+1).
ComplexField taylor_step(const ComplexField& v_k, const ComplexField& b_k, int k,
                         const ModelParams& params);

// v_0 = u0, then taylor_step with cached derivatives and inner convolutions.
// Throws NumericalError naming the first order whose coefficient overflows.
TaylorSeries build_series(const ComplexField& u0, const ModelParams& params, int order);

// The integral-form pipeline: u_0 = u0 t^0, then adm_step_integral up to
// u_{max_order}. Returns u_0..u_{max_order}.
std::vector<TPolynomial> integral_pipeline(const ComplexField& u0, const ModelParams& params,
                                           int max_order);

// Horner evaluation of sum_{j<=upto} v_j t^j.
ComplexField evaluate(const TaylorSeries& s, double t, int upto);
ComplexField evaluate(const TaylorSeries& s, double t);

// Largest off-degree contamination of u_k relative to its degree-k term:
// max_{m != k} sup|coeff_m| / sup|coeff_k|. Zero polynomial reports 0,
// a missing degree-k term with other terms present reports +infinity.
double monomial_check(const TPolynomial& u_k, int k);

}  // namespace cll
