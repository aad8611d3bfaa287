#include "cmsdisc/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cmsdisc {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp1(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

double cheb_eval(ChebKind kind, int n, double x) {
    if (n < 0) throw std::invalid_argument("cheb_eval: n must be >= 0");
    if (std::abs(x) <= 1.0) {
        // Trig forms are exact on [-1,1] and free of recurrence error growth.
        const double theta = std::acos(x);
        if (kind == ChebKind::First) return std::cos(n * theta);
        const double s = std::sin(theta);
        if (s < 1e-12) {
            // x = +-1: U_n(1) = n+1, U_n(-1) = (-1)^n (n+1)
            double v = n + 1.0;
            if (x < 0.0 && (n % 2 != 0)) v = -v;
            return v;
        }
        return std::sin((n + 1) * theta) / s;
    }
    // Three-term recurrence, valid off [-1,1].
    double prev = 1.0;
    double cur = (kind == ChebKind::First) ? x : 2.0 * x;
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::pair<double, double> cheb_eval_deriv(ChebKind kind, int n, double x) {
    if (n < 0) throw std::invalid_argument("cheb_eval_deriv: n must be >= 0");
    double s_prev = 1.0, d_prev = 0.0;
    double s_cur = (kind == ChebKind::First) ? x : 2.0 * x;
    double d_cur = (kind == ChebKind::First) ? 1.0 : 2.0;
    if (n == 0) return {1.0, 0.0};
    for (int k = 1; k < n; ++k) {
        const double s_next = 2.0 * x * s_cur - s_prev;
        const double d_next = 2.0 * s_cur + 2.0 * x * d_cur - d_prev;
        s_prev = s_cur;
        d_prev = d_cur;
        s_cur = s_next;
        d_cur = d_next;
    }
    return {s_cur, d_cur};
}

std::vector<double> cheb_zeros(ChebKind kind, int n) {
    if (n < 1) throw std::invalid_argument("cheb_zeros: n must be >= 1");
    std::vector<double> z(n);
    for (int k = 1; k <= n; ++k) {
        if (kind == ChebKind::First)
            z[k - 1] = std::cos((2.0 * (n - k) + 1.0) * kPi / (2.0 * n));
        else
            z[k - 1] = std::cos((n + 1.0 - k) * kPi / (n + 1.0));
    }
    return z;
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
    double acc = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
}

QuadratureRule gauss_rule(ChebKind kind, int m) {
    if (m < 1) throw std::invalid_argument("gauss_rule: m must be >= 1");
    QuadratureRule rule;
    rule.kind = kind;
    rule.nodes = cheb_zeros(kind, m);
    rule.weights.resize(m);
    if (kind == ChebKind::First) {
        std::fill(rule.weights.begin(), rule.weights.end(), 1.0 / m);
    } else {
        // node k (increasing) is cos((m+1-k)pi/(m+1)); sin^2 is symmetric in k <-> m+1-k
        for (int k = 1; k <= m; ++k) {
            const double s = std::sin(k * kPi / (m + 1.0));
            rule.weights[k - 1] = 2.0 / (m + 1.0) * s * s;
        }
    }
    return rule;
}

ChebSeries::ChebSeries(ChebKind k, std::vector<double> c) : kind(k), coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
}

double series_eval(const ChebSeries& s, double x) {
    const auto& c = s.coeffs;
    const int d = static_cast<int>(c.size()) - 1;
    double b1 = 0.0, b2 = 0.0;
    for (int k = d; k >= 1; --k) {
        const double b0 = c[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    if (s.kind == ChebKind::First) return c[0] + x * b1 - b2;
    return c[0] + 2.0 * x * b1 - b2;
}

ChebSeries series_add(const ChebSeries& a, const ChebSeries& b) {
    if (a.kind != b.kind) throw std::invalid_argument("series_add: kind mismatch");
    std::vector<double> c(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
    for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
    return ChebSeries(a.kind, std::move(c));
}

ChebSeries series_scale(const ChebSeries& s, double c) {
    std::vector<double> v = s.coeffs;
    for (double& x : v) x *= c;
    return ChebSeries(s.kind, std::move(v));
}

namespace {

// U-basis coefficients -> T-basis coefficients.
// U_0 = T_0; U_n = 2(T_n + T_{n-2} + ...) terminating in 2 T_1 (n odd) or +T_0 (n even).
std::vector<double> u_to_t(const std::vector<double>& u) {
    std::vector<double> t(u.size(), 0.0);
    for (int n = 0; n < static_cast<int>(u.size()); ++n) {
        if (u[n] == 0.0) continue;
        if (n == 0) {
            t[0] += u[0];
            continue;
        }
        for (int j = n; j >= 1; j -= 2) t[j] += 2.0 * u[n];
        if (n % 2 == 0) t[0] += u[n];
    }
    return t;
}

// T-basis -> U-basis: T_0 = U_0, T_1 = U_1/2, T_n = (U_n - U_{n-2})/2.
std::vector<double> t_to_u(const std::vector<double>& t) {
    std::vector<double> u(t.size(), 0.0);
    for (int n = 0; n < static_cast<int>(t.size()); ++n) {
        if (t[n] == 0.0) continue;
        if (n == 0) {
            u[0] += t[0];
        } else if (n == 1) {
            u[1] += 0.5 * t[1];
        } else {
            u[n] += 0.5 * t[n];
            u[n - 2] -= 0.5 * t[n];
        }
    }
    return u;
}

}  // namespace

ChebSeries series_multiply(const ChebSeries& a, const ChebSeries& b) {
    if (a.kind != b.kind) throw std::invalid_argument("series_multiply: kind mismatch");
    const bool second = (a.kind == ChebKind::Second);
    const std::vector<double> ta = second ? u_to_t(a.coeffs) : a.coeffs;
    const std::vector<double> tb = second ? u_to_t(b.coeffs) : b.coeffs;
    std::vector<double> tc(ta.size() + tb.size() - 1, 0.0);
    for (int i = 0; i < static_cast<int>(ta.size()); ++i) {
        if (ta[i] == 0.0) continue;
        for (int j = 0; j < static_cast<int>(tb.size()); ++j) {
            const double w = 0.5 * ta[i] * tb[j];
            tc[i + j] += w;
            tc[std::abs(i - j)] += w;
        }
    }
    return ChebSeries(a.kind, second ? t_to_u(tc) : std::move(tc));
}

ChebSeries deflate_root(const ChebSeries& s, double root) {
    const auto& a = s.coeffs;
    const int d = static_cast<int>(a.size()) - 1;
    if (d < 1) throw std::invalid_argument("deflate_root: constant series");
    // x*S_0 contributes to index 1 with weight c0 (T: x T_0 = T_1; U: x U_0 = U_1 / 2)
    const double c0 = (s.kind == ChebKind::First) ? 1.0 : 0.5;
    std::vector<double> b(d, 0.0);
    if (d == 1) {
        b[0] = a[1] / c0;
        return ChebSeries(s.kind, std::move(b));
    }
    b[d - 1] = 2.0 * a[d];
    for (int i = d - 1; i >= 2; --i) {
        const double bip1 = (i + 1 <= d - 1) ? b[i + 1] : 0.0;
        b[i - 1] = 2.0 * (a[i] + root * b[i]) - bip1;
    }
    const double b2 = (d >= 3) ? b[2] : 0.0;
    b[0] = (a[1] + root * b[1] - 0.5 * b2) / c0;
    return ChebSeries(s.kind, std::move(b));
}

ChebSeries project(const std::function<double(double)>& f, int degree, ChebKind kind) {
    if (degree < 0) throw std::invalid_argument("project: degree must be >= 0");
    const QuadratureRule rule = gauss_rule(kind, degree + 1);
    std::vector<double> fx(rule.nodes.size());
    for (size_t i = 0; i < rule.nodes.size(); ++i) fx[i] = f(rule.nodes[i]);
    std::vector<double> c(degree + 1, 0.0);
    for (int n = 0; n <= degree; ++n) {
        double acc = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * fx[i] * cheb_eval(kind, n, rule.nodes[i]);
        const double gram = (kind == ChebKind::First) ? (n == 0 ? 1.0 : 0.5) : 1.0;
        c[n] = acc / gram;
    }
    return ChebSeries(kind, std::move(c));
}

double sigma_tail(ChebKind kind, double x0) {
    if (x0 <= -1.0) return 1.0;
    if (x0 >= 1.0) return 0.0;
    const double x = clamp1(x0);
    if (kind == ChebKind::First) return std::acos(x) / kPi;
    return (std::acos(x) - x * std::sqrt(1.0 - x * x)) / kPi;
}

}  // namespace cmsdisc
