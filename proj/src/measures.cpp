#include "cmsdisc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace cmsdisc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mod_two_pi(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(MeasureDomain domain, std::vector<Atom> atoms)
    : domain_(domain) {
    if (atoms.empty()) throw std::invalid_argument("DiscreteMeasure: no atoms");
    for (auto& a : atoms) {
        if (!(a.weight > 0.0)) throw std::invalid_argument("DiscreteMeasure: nonpositive weight");
        if (!std::isfinite(a.position))
            throw std::invalid_argument("DiscreteMeasure: nonfinite position");
        if (domain == MeasureDomain::Circle) a.position = mod_two_pi(a.position);
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.position < b.position; });
    // merge duplicates (tolerance absorbs roundoff from pushforwards of
    // symmetric angles)
    atoms_.reserve(atoms.size());
    for (const auto& a : atoms) {
        if (!atoms_.empty() &&
            a.position - atoms_.back().position <= 1e-12 * std::max(1.0, std::abs(a.position)))
            atoms_.back().weight += a.weight;
        else
            atoms_.push_back(a);
    }
    raw_sum_ = 0.0;
    for (const auto& a : atoms_) raw_sum_ += a.weight;
    for (auto& a : atoms_) a.weight /= raw_sum_;
}

std::complex<double> MomentSequence::at(int n) const {
    if (n < 1 || n > n_max())
        throw std::out_of_range("MomentSequence: moment order out of range");
    return values[n - 1];
}

MomentSequence moments(const DiscreteMeasure& mu, MomentKind kind, int n_max) {
    if (mu.domain() != MeasureDomain::Line)
        throw std::invalid_argument("moments: line measure required");
    if (kind == MomentKind::Fourier)
        throw std::invalid_argument("moments: use fourier() for circle moments");
    const ChebKind ck = (kind == MomentKind::T) ? ChebKind::First : ChebKind::Second;
    MomentSequence m{kind, {}};
    m.values.resize(n_max);
    for (int n = 1; n <= n_max; ++n) {
        double acc = 0.0;
        for (const auto& a : mu.atoms()) acc += a.weight * cheb_eval(ck, n, a.position);
        m.values[n - 1] = acc;
    }
    return m;
}

MomentSequence fourier(const DiscreteMeasure& nu, int n_max) {
    if (nu.domain() != MeasureDomain::Circle)
        throw std::invalid_argument("fourier: circle measure required");
    MomentSequence m{MomentKind::Fourier, {}};
    m.values.resize(n_max);
    for (int n = 1; n <= n_max; ++n) {
        std::complex<double> acc = 0.0;
        for (const auto& a : nu.atoms())
            acc += a.weight * std::polar(1.0, -n * a.position);
        m.values[n - 1] = acc;
    }
    return m;
}

DiscreteMeasure circle_to_interval(const DiscreteMeasure& nu, double arc_center) {
    if (nu.domain() != MeasureDomain::Circle)
        throw std::invalid_argument("circle_to_interval: circle measure required");
    std::vector<Atom> atoms;
    atoms.reserve(nu.atoms().size());
    for (const auto& a : nu.atoms())
        atoms.push_back({std::cos(a.position - arc_center), a.weight});
    return DiscreteMeasure(MeasureDomain::Line, std::move(atoms));
}

double tail(const DiscreteMeasure& mu, double x0) {
    if (mu.domain() != MeasureDomain::Line)
        throw std::invalid_argument("tail: line measure required");
    double acc = 0.0;
    for (const auto& a : mu.atoms())
        if (a.position >= x0) acc += a.weight;
    return acc;
}

double open_tail(const DiscreteMeasure& mu, double x0) {
    if (mu.domain() != MeasureDomain::Line)
        throw std::invalid_argument("open_tail: line measure required");
    double acc = 0.0;
    for (const auto& a : mu.atoms())
        if (a.position > x0) acc += a.weight;
    return acc;
}

Discrepancy true_discrepancy(const DiscreteMeasure& mu, ChebKind kind) {
    // mu's tail is constant between atoms and sigma's tail is continuous and
    // monotone, so the sup is attained at atom positions (one-sided limits
    // reduce to the open tail there).
    Discrepancy best{0.0, mu.atoms().front().position};
    for (const auto& a : mu.atoms()) {
        const double st = sigma_tail(kind, a.position);
        const double closed = std::abs(tail(mu, a.position) - st);
        const double open = std::abs(open_tail(mu, a.position) - st);
        const double v = std::max(closed, open);
        if (v > best.value) best = {v, a.position};
    }
    // the support edges of sigma matter when mu has no atoms near them
    for (double x0 : {-1.0, 1.0}) {
        const double st = sigma_tail(kind, x0);
        const double v = std::max(std::abs(tail(mu, x0) - st), std::abs(open_tail(mu, x0) - st));
        if (v > best.value) best = {v, x0};
    }
    return best;
}

double arc_discrepancy(const DiscreteMeasure& nu) {
    if (nu.domain() != MeasureDomain::Circle)
        throw std::invalid_argument("arc_discrepancy: circle measure required");
    const auto& atoms = nu.atoms();
    const int m = static_cast<int>(atoms.size());
    // Extremal arcs have atom endpoints. A closed arc [theta_i -> theta_j]
    // (counterclockwise) realizes the excess mass - len/2pi; its open
    // complement realizes the same value as a deficit, so one scan covers both.
    double best = 0.0;
    for (int i = 0; i < m; ++i) {
        double mass = 0.0;
        for (int step = 0; step < m; ++step) {
            const int j = (i + step) % m;
            mass += atoms[j].weight;
            double len = atoms[j].position - atoms[i].position;
            if (len < 0.0) len += kTwoPi;
            best = std::max(best, mass - len / kTwoPi);
        }
    }
    return best;
}

DiscreteMeasure sharpness_witness(int n0) {
    if (n0 < 1) throw std::invalid_argument("sharpness_witness: n0 must be >= 1");
    const QuadratureRule rule = gauss_rule(ChebKind::Second, n0 + 1);
    std::vector<Atom> atoms;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        atoms.push_back({rule.nodes[i], rule.weights[i]});
    return DiscreteMeasure(MeasureDomain::Line, std::move(atoms));
}

std::vector<DiscreteMeasure> test_corpus(std::uint64_t seed) {
    std::vector<DiscreteMeasure> corpus;

    // named families: roots-of-unity pushforwards
    for (int k : {2, 3, 5, 8}) {
        std::vector<Atom> circ;
        for (int j = 0; j < k; ++j) circ.push_back({kTwoPi * j / k, 1.0 / k});
        corpus.push_back(
            circle_to_interval(DiscreteMeasure(MeasureDomain::Circle, std::move(circ)), 0.0));
    }
    // Gauss discretizations of sigma1 and sigma2
    for (int m : {1, 4, 16, 64}) {
        for (ChebKind kind : {ChebKind::First, ChebKind::Second}) {
            const QuadratureRule rule = gauss_rule(kind, m);
            std::vector<Atom> atoms;
            for (size_t i = 0; i < rule.nodes.size(); ++i)
                atoms.push_back({rule.nodes[i], rule.weights[i]});
            corpus.push_back(DiscreteMeasure(MeasureDomain::Line, std::move(atoms)));
        }
    }
    corpus.push_back(DiscreteMeasure(MeasureDomain::Line, {{0.0, 1.0}}));  // delta_0

    // randomized measures: atoms in [-1.5, 1.5], simplex weights
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> pos(-1.5, 1.5);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_int_distribution<int> natoms(1, 24);
    while (corpus.size() < 100) {
        const int m = natoms(rng);
        std::vector<Atom> atoms(m);
        for (auto& a : atoms) a.position = pos(rng);
        for (auto& a : atoms) a.weight = expo(rng) + 1e-12;
        corpus.push_back(DiscreteMeasure(MeasureDomain::Line, std::move(atoms)));
    }
    return corpus;
}

std::vector<DiscreteMeasure> circle_test_corpus(std::uint64_t seed) {
    std::vector<DiscreteMeasure> corpus;
    for (int k : {1, 2, 3, 5, 8, 32}) {
        std::vector<Atom> circ;
        for (int j = 0; j < k; ++j) circ.push_back({kTwoPi * j / k, 1.0 / k});
        corpus.push_back(DiscreteMeasure(MeasureDomain::Circle, std::move(circ)));
    }
    std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ULL);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_int_distribution<int> natoms(1, 24);
    while (corpus.size() < 50) {
        const int m = natoms(rng);
        std::vector<Atom> atoms(m);
        for (auto& a : atoms) a.position = angle(rng);
        for (auto& a : atoms) a.weight = expo(rng) + 1e-12;
        corpus.push_back(DiscreteMeasure(MeasureDomain::Circle, std::move(atoms)));
    }
    return corpus;
}

}  // namespace cmsdisc
