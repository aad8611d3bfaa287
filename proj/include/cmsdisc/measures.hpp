#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cmsdisc/chebyshev.hpp"

namespace cmsdisc {

enum class MeasureDomain { Line, Circle };

struct Atom {
    double position;
    double weight;
};

// Finite atomic probability measure; atoms sorted, duplicates merged,
// weights normalized to sum 1. Circle positions are reduced mod 2pi.
class DiscreteMeasure {
  public:
    DiscreteMeasure(MeasureDomain domain, std::vector<Atom> atoms);

    MeasureDomain domain() const { return domain_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    // Sum of input weights before normalization (for load-time warnings).
    double raw_weight_sum() const { return raw_sum_; }

  private:
    MeasureDomain domain_;
    std::vector<Atom> atoms_;
    double raw_sum_;
};

enum class MomentKind { T, U, Fourier };

// values[i] is the moment of order n = i+1; T/U moments are real.
struct MomentSequence {
    MomentKind kind;
    std::vector<std::complex<double>> values;

    int n_max() const { return static_cast<int>(values.size()); }
    std::complex<double> at(int n) const;  // 1-based
};

// eps_n = integral of S_n d(mu), n = 1..n_max.
MomentSequence moments(const DiscreteMeasure& mu, MomentKind kind, int n_max);

// nu_hat(n) = integral of exp(-i n theta) d(nu), n = 1..n_max.
MomentSequence fourier(const DiscreteMeasure& nu, int n_max);

// Rotate the circle so arc_center goes to angle 0, then push forward under cos.
DiscreteMeasure circle_to_interval(const DiscreteMeasure& nu, double arc_center);

double tail(const DiscreteMeasure& mu, double x0);       // mu[x0, +inf)
double open_tail(const DiscreteMeasure& mu, double x0);  // mu(x0, +inf)

struct Discrepancy {
    double value;
    double x0;  // witness position
};

// sup over x0 of max(|mu[x0,inf) - sigma[x0,inf)|, |mu(x0,inf) - sigma[x0,inf)|).
Discrepancy true_discrepancy(const DiscreteMeasure& mu, ChebKind kind);

// sup over arcs A of |nu(A) - |A|/(2pi)| for a circle measure.
double arc_discrepancy(const DiscreteMeasure& nu);

// Gauss-sigma2 measure on n0+1 nodes: U-moments vanish for n = 1..2n0+1 while
// each node carries a jump of the full Gauss weight.
DiscreteMeasure sharpness_witness(int n0);

// Deterministic measure corpora used by the property and calibration suites.
std::vector<DiscreteMeasure> test_corpus(std::uint64_t seed);
std::vector<DiscreteMeasure> circle_test_corpus(std::uint64_t seed);

}  // namespace cmsdisc
