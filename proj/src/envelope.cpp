#include "cmsdisc/envelope.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cmsdisc/linalg.hpp"

namespace cmsdisc {

namespace {

constexpr int kMaxOrder = 64;  // Hermite systems stay well conditioned up to here

void check_indices(int n0, int k0) {
    if (n0 < 1 || n0 > kMaxOrder)
        throw std::out_of_range("envelope: n0 must be in 1..64");
    if (k0 < 1 || k0 > n0) throw std::out_of_range("envelope: k0 must be in 1..n0");
}

}  // namespace

ChebSeries build_r(ChebKind kind, int n0, int k0) {
    check_indices(n0, k0);
    const std::vector<double> nodes = cheb_zeros(kind, n0);
    const double xk = nodes[k0 - 1];
    std::vector<double> unit(n0 + 1, 0.0);
    unit[n0] = 1.0;
    const ChebSeries s_n0(kind, std::move(unit));
    const ChebSeries deflated = deflate_root(s_n0, xk);
    const double dval = cheb_eval_deriv(kind, n0, xk).second;
    return series_scale(deflated, 1.0 / dval);
}

CmsEnvelope build_envelope(ChebKind kind, int n0, int k0) {
    check_indices(n0, k0);
    CmsEnvelope env;
    env.kind = kind;
    env.n0 = n0;
    env.k0 = k0;
    env.nodes = cheb_zeros(kind, n0);
    env.gauss_weights = gauss_rule(kind, n0).weights;
    env.R = build_r(kind, n0, k0);

    if (n0 == 1) {
        env.Q = ChebSeries(kind, {0.0});
        env.P = ChebSeries(kind, {1.0});
        env.p = {1.0};
        env.q = {0.0};
        return env;
    }

    // Q solves the 2n0-1 Hermite conditions: values at all nodes, zero
    // derivative at nodes k != k0. Unknowns are the basis coefficients.
    const int dim = 2 * n0 - 1;
    std::vector<double> A(static_cast<size_t>(dim) * dim);
    std::vector<double> b(dim, 0.0);
    int row = 0;
    for (int k = 1; k <= n0; ++k, ++row) {
        const double x = env.nodes[k - 1];
        for (int j = 0; j < dim; ++j) A[row * dim + j] = cheb_eval(kind, j, x);
        b[row] = (k > k0) ? 1.0 : 0.0;
    }
    for (int k = 1; k <= n0; ++k) {
        if (k == k0) continue;
        const double x = env.nodes[k - 1];
        for (int j = 0; j < dim; ++j)
            A[row * dim + j] = cheb_eval_deriv(kind, j, x).second;
        b[row] = 0.0;
        ++row;
    }
    const std::vector<double> Acopy = A;
    std::vector<double> coeffs = qr_solve(std::move(A), b, dim);

    double resid = 0.0;
    for (int i = 0; i < dim; ++i) {
        double acc = -b[i];
        for (int j = 0; j < dim; ++j) acc += Acopy[i * dim + j] * coeffs[j];
        resid = std::max(resid, std::abs(acc));
    }
    if (resid > 1e-7)
        throw IllConditionedError("build_envelope: interpolation residual " +
                                  std::to_string(resid));

    env.Q = ChebSeries(kind, std::move(coeffs));
    env.P = series_add(env.Q, series_multiply(env.R, env.R));

    const int d = 2 * n0 - 2;
    const ChebSeries pp = project([&](double x) { return series_eval(env.P, x); }, d, kind);
    const ChebSeries qq = project([&](double x) { return series_eval(env.Q, x); }, d, kind);
    env.p.assign(d + 1, 0.0);
    env.q.assign(d + 1, 0.0);
    for (int n = 0; n <= d; ++n) {
        env.p[n] = pp.coeff(n);
        env.q[n] = qq.coeff(n);
    }
    return env;
}

double p0_minus_q0(const CmsEnvelope& env) {
    // deg R^2 = 2n0-2, so a 2n0-node rule integrates it exactly (and its nodes
    // differ from the envelope nodes, making this an independent route).
    const QuadratureRule rule = gauss_rule(env.kind, 2 * env.n0);
    return rule.integrate([&](double x) {
        const double r = series_eval(env.R, x);
        return r * r;
    });
}

double tail_integral(int n, double x0) {
    if (n < 1) throw std::invalid_argument("tail_integral: n must be >= 1");
    if (x0 < -1.0 || x0 > 1.0)
        throw std::invalid_argument("tail_integral: x0 must be in [-1,1]");
    const double theta0 = std::acos(x0);
    return std::sin(n * theta0) / (n * std::numbers::pi);
}

double discrepancy_bound(const CmsEnvelope& env, const MomentSequence& eps) {
    const MomentKind want = (env.kind == ChebKind::First) ? MomentKind::T : MomentKind::U;
    if (eps.kind != want)
        throw std::invalid_argument("discrepancy_bound: moment kind mismatch");
    const int need = 2 * env.n0 - 2;
    if (eps.n_max() < need)
        throw std::invalid_argument("discrepancy_bound: need moments up to order " +
                                    std::to_string(need));
    double bound = env.p[0] - env.q[0];
    for (int n = 1; n <= need; ++n)
        bound += std::abs(eps.at(n)) * std::max(std::abs(env.p[n]), std::abs(env.q[n]));
    return bound;
}

std::vector<CoefficientDecay> coefficient_decay(const CmsEnvelope& env) {
    std::vector<CoefficientDecay> out;
    for (int n = 1; n < static_cast<int>(env.p.size()); ++n)
        out.push_back({n, std::abs(env.p[n]), std::abs(env.q[n])});
    return out;
}

}  // namespace cmsdisc
