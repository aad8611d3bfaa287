#pragma once

#include <vector>

#include "cmsdisc/chebyshev.hpp"
#include "cmsdisc/measures.hpp"

namespace cmsdisc {

// Polynomial envelope of the half-line indicator 1_[x_{k0}, +inf) built on the
// zeros x_1 < ... < x_{n0} of S_{n0}: a majorant P and minorant Q of degree
// <= 2n0-2 with prescribed values and flat derivatives at the nodes, and the
// cardinal polynomial R with R(x_k) = delta_{k,k0}, satisfying P - Q = R^2.
struct CmsEnvelope {
    ChebKind kind;
    int n0;
    int k0;  // 1-based node index
    std::vector<double> nodes;
    ChebSeries P, Q, R;
    std::vector<double> p, q;            // length 2n0-1
    std::vector<double> gauss_weights;   // lambda_1..lambda_n0

    double node() const { return nodes[k0 - 1]; }
    double lambda() const { return gauss_weights[k0 - 1]; }
};

// Cardinal polynomial of degree n0-1 at the zeros of S_{n0}, by synthetic
// deflation of S_{n0} at the root x_{k0}.
ChebSeries build_r(ChebKind kind, int n0, int k0);

// Throws IllConditionedError if the Hermite interpolation residual exceeds 1e-7.
CmsEnvelope build_envelope(ChebKind kind, int n0, int k0);

// Quadrature value of the integral of R^2 d(sigma); agrees with p[0]-q[0] and
// with lambda_{k0}.
double p0_minus_q0(const CmsEnvelope& env);

// Closed form of the integral of T_n over [x0, +inf) against sigma1:
// sin(n arccos x0)/(n pi).
double tail_integral(int n, double x0);

// Rigorous bound |mu[x_{k0},inf) - sigma[x_{k0},inf)| <=
//   (p0 - q0) + sum_{n=1}^{2n0-2} |eps_n| max(|p_n|, |q_n|).
double discrepancy_bound(const CmsEnvelope& env, const MomentSequence& eps);

struct CoefficientDecay {
    int n;
    double p_abs;
    double q_abs;
};
std::vector<CoefficientDecay> coefficient_decay(const CmsEnvelope& env);

}  // namespace cmsdisc
