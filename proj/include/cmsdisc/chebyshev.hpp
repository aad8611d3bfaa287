#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace cmsdisc {

// First  <-> T_n, orthogonal w.r.t. the arcsine law    dsigma1 = (1/pi)(1-x^2)^{-1/2} dx
// Second <-> U_n, orthogonal w.r.t. the semicircle law dsigma2 = (2/pi)(1-x^2)^{+1/2} dx
enum class ChebKind { First, Second };

// S_n(x), valid for any real x (three-term recurrence outside [-1,1]).
double cheb_eval(ChebKind kind, int n, double x);

// (S_n(x), S_n'(x))
std::pair<double, double> cheb_eval_deriv(ChebKind kind, int n, double x);

// Zeros of S_n in strictly increasing order.
std::vector<double> cheb_zeros(ChebKind kind, int n);

struct QuadratureRule {
    ChebKind kind;
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // positive, sum to 1

    double integrate(const std::function<double(double)>& f) const;
};

// m-node Gauss rule for the probability measure of `kind`; exact up to degree 2m-1.
QuadratureRule gauss_rule(ChebKind kind, int m);

// Polynomial in the T- or U-basis; coeffs[n] multiplies S_n.
struct ChebSeries {
    ChebKind kind = ChebKind::First;
    std::vector<double> coeffs{0.0};

    ChebSeries() = default;
    ChebSeries(ChebKind k, std::vector<double> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs.size())) ? coeffs[n] : 0.0;
    }
};

double series_eval(const ChebSeries& s, double x);
ChebSeries series_add(const ChebSeries& a, const ChebSeries& b);
ChebSeries series_scale(const ChebSeries& s, double c);
ChebSeries series_multiply(const ChebSeries& a, const ChebSeries& b);

// Synthetic division by (x - root) in the Chebyshev basis; the remainder
// (which must be ~0 when root is an actual root) is discarded.
ChebSeries deflate_root(const ChebSeries& s, double root);

// Orthogonal projection onto span{S_0..S_degree}; exact when f is a polynomial
// of degree <= degree.
ChebSeries project(const std::function<double(double)>& f, int degree, ChebKind kind);

// sigma[x0, +infinity) for the measure attached to `kind`.
double sigma_tail(ChebKind kind, double x0);

}  // namespace cmsdisc
