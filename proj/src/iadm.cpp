#include "cll/iadm.hpp"

#include <stdexcept>
#include <string>

#include "cll/errors.hpp"

namespace cll {

RealCouplingTable split_real_system(const ModelParams& params) {
    const double ar = params.alpha.real();
    const double ai = params.alpha.imag();
    const double br = params.beta.real();
    const double bi = params.beta.imag();
    return RealCouplingTable{{{ar, -ai}, {ai, ar}}, {{br, -bi}, {bi, br}}};
}

namespace {

// Derivatives of a (p, q) pair of real fields via one complex transform:
// diff is C-linear, so diff(p + iq) = diff(p) + i diff(q). Halves the
// transform count and keeps the two components' rounding in lockstep.
// A component that is identically zero stays exactly zero (the joint
// transform would leak round-off into it).
std::pair<RealField, RealField> diff_pair(const RealField& p, const RealField& q, int order) {
    if (sup_norm(q) == 0.0) return {diff(p, order), RealField(q.grid)};
    if (sup_norm(p) == 0.0) return {RealField(p.grid), diff(q, order)};
    const ComplexField d = diff(combine(p, q), order);
    return {real_part(d), imag_part(d)};
}

}  // namespace

RealSeriesPair iadm_build(const ComplexField& u0, const ModelParams& params, int order) {
    if (order < 0) throw std::invalid_argument("iadm_build: order must be nonnegative");
    if (!is_finite(u0)) throw std::invalid_argument("iadm_build: initial data is not finite");
    const RealCouplingTable c = split_real_system(params);
    const GridSpec& g = u0.grid;

    std::vector<RealField> p{real_part(u0)};
    std::vector<RealField> q{imag_part(u0)};
    std::vector<RealField> dp;
    std::vector<RealField> dq;
    {
        auto [dp0, dq0] = diff_pair(p[0], q[0], 1);
        dp.push_back(std::move(dp0));
        dq.push_back(std::move(dq0));
    }
    // s[j] = t^j coefficient of p^2 + q^2
    std::vector<RealField> s{p[0] * p[0] + q[0] * q[0]};

    for (int k = 0; k < order; ++k) {
        // t^k coefficient of (p^2+q^2) * (adv . grad), componentwise
        RealField n1(g);
        RealField n2(g);
        for (int j = 0; j <= k; ++j) {
            const RealField& sj = s[static_cast<std::size_t>(j)];
            const RealField& dpj = dp[static_cast<std::size_t>(k - j)];
            const RealField& dqj = dq[static_cast<std::size_t>(k - j)];
            n1 += sj * (c.adv[0][0] * dpj + c.adv[0][1] * dqj);
            n2 += sj * (c.adv[1][0] * dpj + c.adv[1][1] * dqj);
        }
        const auto [ppk, qqk] = diff_pair(p.back(), q.back(), 2);
        const double inv = 1.0 / (k + 1);
        RealField pk1 = inv * (c.disp[0][0] * ppk + c.disp[0][1] * qqk + n1);
        RealField qk1 = inv * (c.disp[1][0] * ppk + c.disp[1][1] * qqk + n2);
        if (!is_finite(pk1) || !is_finite(qk1)) {
            throw NumericalError("iadm_build: non-finite coefficient at order " +
                                 std::to_string(k + 1));
        }
        p.push_back(std::move(pk1));
        q.push_back(std::move(qk1));
        {
            auto [dpk, dqk] = diff_pair(p.back(), q.back(), 1);
            dp.push_back(std::move(dpk));
            dq.push_back(std::move(dqk));
        }

        RealField sk(g);
        for (int i = 0; i <= k + 1; ++i) {
            sk += p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k + 1 - i)] +
                  q[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(k + 1 - i)];
        }
        s.push_back(std::move(sk));
    }
    return RealSeriesPair{params, std::move(p), std::move(q)};
}

TaylorSeries recombine(const RealSeriesPair& pair) {
    if (pair.series1.size() != pair.series2.size() || pair.series1.empty()) {
        throw std::invalid_argument("recombine: component series lengths differ or are empty");
    }
    std::vector<ComplexField> coeffs;
    coeffs.reserve(pair.series1.size());
    for (std::size_t j = 0; j < pair.series1.size(); ++j) {
        coeffs.push_back(combine(pair.series1[j], pair.series2[j]));
    }
    return TaylorSeries{pair.params, std::move(coeffs)};
}

}  // namespace cll
