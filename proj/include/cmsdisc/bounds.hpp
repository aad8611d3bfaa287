#pragma once

#include <optional>
#include <vector>

#include "cmsdisc/envelope.hpp"
#include "cmsdisc/measures.hpp"

namespace cmsdisc {

struct BoundReport {
    double bound_value;          // k_used * (leading + sum of terms)
    double leading;              // constant term before K
    std::vector<double> terms;   // per-n moment terms before K
    int n0;
    std::optional<double> x0;
    double k_used;
};

// Edge-sensitivity factor max(1 - |x|, n0^{-2}).
double rho(double x, int n0);

// |nu(A) - |A|/2pi| <= K (1/n0 + sum_{n<=n0} |nu_hat(n)|/n)
BoundReport et_circle(const MomentSequence& fourier_moments, int n0, double K);

// |mu[x0,inf) - sigma1[x0,inf)| <= K (1/n0 + sum_{n<=n0} |eps_n|/n)
BoundReport et_interval_t(const MomentSequence& t_moments, int n0, double K);

// |mu[x0,inf) - sigma2[x0,inf)| <=
//   K (rho(x0;n0)/n0 + rho(x0;n0)^{1/2} sum_{n<=n0} |eps_n|/n)
BoundReport et_interval_u(const MomentSequence& u_moments, int n0, double x0, double K);

// Rigorous per-x0 bound via envelopes at the two zeros of S_{m0} adjacent to
// x0, m0 = ceil(n0/2)+1, each charged with the sigma-mass of the straddled
// gap; requires moments up to order 2*m0-2.
BoundReport cms_bound_at(const MomentSequence& eps, ChebKind kind, double x0, int n0);

struct Calibration {
    double k1;  // circle inequality
    double k2;  // T-moment inequality
    double k3;  // weighted U-moment inequality
};

// Smallest empirical constants making each inequality valid on the corpora:
// per-inequality max of (true discrepancy)/(bound with K = 1).
Calibration calibrate_K(const std::vector<DiscreteMeasure>& line_corpus,
                        const std::vector<DiscreteMeasure>& circle_corpus,
                        const std::vector<int>& n0_list);

// Default evaluation grid: 201 points on [-1.2, 1.2].
std::vector<double> default_x0_grid();

}  // namespace cmsdisc
