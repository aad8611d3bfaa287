#include "cmsdisc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cmsdisc {

double rho(double x, int n0) {
    if (n0 < 1) throw std::invalid_argument("rho: n0 must be >= 1");
    return std::max(1.0 - std::abs(x), 1.0 / (static_cast<double>(n0) * n0));
}

namespace {

BoundReport harmonic_bound(const MomentSequence& m, int n0, double K,
                           double leading, double term_scale,
                           std::optional<double> x0) {
    if (m.n_max() < n0)
        throw std::invalid_argument("bound: need moments up to order " + std::to_string(n0));
    BoundReport rep;
    rep.n0 = n0;
    rep.x0 = x0;
    rep.k_used = K;
    rep.leading = leading;
    rep.terms.reserve(n0);
    double sum = leading;
    for (int n = 1; n <= n0; ++n) {
        const double t = term_scale * std::abs(m.at(n)) / n;
        rep.terms.push_back(t);
        sum += t;
    }
    rep.bound_value = K * sum;
    return rep;
}

}  // namespace

BoundReport et_circle(const MomentSequence& fourier_moments, int n0, double K) {
    if (fourier_moments.kind != MomentKind::Fourier)
        throw std::invalid_argument("et_circle: Fourier moments required");
    if (n0 < 1) throw std::invalid_argument("et_circle: n0 must be >= 1");
    return harmonic_bound(fourier_moments, n0, K, 1.0 / n0, 1.0, std::nullopt);
}

BoundReport et_interval_t(const MomentSequence& t_moments, int n0, double K) {
    if (t_moments.kind != MomentKind::T)
        throw std::invalid_argument("et_interval_t: T moments required");
    if (n0 < 1) throw std::invalid_argument("et_interval_t: n0 must be >= 1");
    return harmonic_bound(t_moments, n0, K, 1.0 / n0, 1.0, std::nullopt);
}

BoundReport et_interval_u(const MomentSequence& u_moments, int n0, double x0, double K) {
    if (u_moments.kind != MomentKind::U)
        throw std::invalid_argument("et_interval_u: U moments required");
    if (n0 < 1) throw std::invalid_argument("et_interval_u: n0 must be >= 1");
    const double r = rho(x0, n0);
    return harmonic_bound(u_moments, n0, K, r / n0, std::sqrt(r), x0);
}

BoundReport cms_bound_at(const MomentSequence& eps, ChebKind kind, double x0, int n0) {
    if (n0 < 1) throw std::invalid_argument("cms_bound_at: n0 must be >= 1");
    const MomentKind want = (kind == ChebKind::First) ? MomentKind::T : MomentKind::U;
    if (eps.kind != want) throw std::invalid_argument("cms_bound_at: moment kind mismatch");
    const int m0 = (n0 + 1) / 2 + 1;
    if (eps.n_max() < 2 * m0 - 2)
        throw std::invalid_argument("cms_bound_at: need moments up to order " +
                                    std::to_string(2 * m0 - 2));

    const std::vector<double> zeros = cheb_zeros(kind, m0);
    const double st0 = sigma_tail(kind, x0);

    // largest zero <= x0 controls the upper deviation, smallest zero >= x0 the
    // lower one; a missing side is charged the full remaining sigma-mass.
    double term_lo = 1.0 - st0;
    double term_hi = st0;
    const auto at_zero = [&](int k) {
        const CmsEnvelope env = build_envelope(kind, m0, k);
        return discrepancy_bound(env, eps) + std::abs(sigma_tail(kind, zeros[k - 1]) - st0);
    };
    const auto it = std::lower_bound(zeros.begin(), zeros.end(), x0);
    const int k_hi = static_cast<int>(it - zeros.begin()) + 1;   // first zero >= x0
    const int k_lo = (k_hi <= m0 && zeros[k_hi - 1] == x0) ? k_hi : k_hi - 1;
    if (k_lo >= 1) term_lo = at_zero(k_lo);
    if (k_hi <= m0) term_hi = at_zero(k_hi);

    BoundReport rep;
    rep.n0 = n0;
    rep.x0 = x0;
    rep.k_used = 1.0;
    rep.leading = std::max(term_lo, term_hi);
    rep.bound_value = rep.leading;
    return rep;
}

Calibration calibrate_K(const std::vector<DiscreteMeasure>& line_corpus,
                        const std::vector<DiscreteMeasure>& circle_corpus,
                        const std::vector<int>& n0_list) {
    if (line_corpus.empty() || circle_corpus.empty() || n0_list.empty())
        throw std::invalid_argument("calibrate_K: empty corpus");
    const int n_top = *std::max_element(n0_list.begin(), n0_list.end());

    Calibration cal{0.0, 0.0, 0.0};
    for (const auto& nu : circle_corpus) {
        const double disc = arc_discrepancy(nu);
        const MomentSequence f = fourier(nu, n_top);
        for (int n0 : n0_list)
            cal.k1 = std::max(cal.k1, disc / et_circle(f, n0, 1.0).bound_value);
    }
    for (const auto& mu : line_corpus) {
        const MomentSequence tm = moments(mu, MomentKind::T, n_top);
        const MomentSequence um = moments(mu, MomentKind::U, n_top);
        const double disc_t = true_discrepancy(mu, ChebKind::First).value;
        // the U-form bound depends on x0, so compare deviation and bound
        // pointwise at every breakpoint of the tails
        std::vector<double> breakpoints{-1.0, 1.0};
        for (const auto& a : mu.atoms()) breakpoints.push_back(a.position);
        for (int n0 : n0_list) {
            cal.k2 = std::max(cal.k2, disc_t / et_interval_t(tm, n0, 1.0).bound_value);
            for (double x0 : breakpoints) {
                const double st = sigma_tail(ChebKind::Second, x0);
                const double dev = std::max(std::abs(tail(mu, x0) - st),
                                            std::abs(open_tail(mu, x0) - st));
                cal.k3 = std::max(cal.k3, dev / et_interval_u(um, n0, x0, 1.0).bound_value);
            }
        }
    }
    return cal;
}

std::vector<double> default_x0_grid() {
    std::vector<double> grid(201);
    for (int i = 0; i < 201; ++i) grid[i] = -1.2 + 2.4 * i / 200.0;
    return grid;
}

}  // namespace cmsdisc
