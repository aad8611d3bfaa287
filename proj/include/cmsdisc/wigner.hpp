#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmsdisc/linalg.hpp"

namespace cmsdisc {

enum class EntryModel { ComplexGaussian, ComplexRademacher, RealGaussian, RealRademacher };

const char* entry_model_name(EntryModel m);
EntryModel parse_entry_model(const std::string& name);  // throws invalid_argument

struct EnsembleConfig {
    int N = 1;
    EntryModel entry_model = EntryModel::ComplexGaussian;
    double diag_variance = 2.0;
    std::uint64_t seed = 0;
};

// Hermitian matrix with independent symmetric entries, E|A_uv|^2 = 1 off the
// diagonal; deterministic given (config.seed, trial).
HermitianMatrix sample_matrix(const EnsembleConfig& config, std::uint64_t trial = 0);

// All eigenvalues, ascending (Householder tridiagonalization + implicit QL).
std::vector<double> eigenvalues(const HermitianMatrix& h);

struct UMomentEstimate {
    int n;
    double mean;     // Monte-Carlo mean of integral of U_n d(mu_A)
    double std_err;
};

struct CountRecord {
    double x0;
    double mean_count;      // mean #{k : lambda_k > 2 sqrt(N) x0}
    double expected_count;  // N * sigma2[x0, inf)
    double error;           // |mean_count - expected_count|
    double bound_term;      // max(N^{2/3}(1-|x0|), 1)
    double variance;        // sample variance of the count
};

struct ExperimentResult {
    EnsembleConfig config;
    int trials = 0;
    std::vector<CountRecord> counts;
    std::vector<UMomentEstimate> u_moments;
};

std::vector<UMomentEstimate> u_moment_experiment(const EnsembleConfig& config, int n_max,
                                                 int trials);

ExperimentResult counting_experiment(const EnsembleConfig& config,
                                     const std::vector<double>& x0_grid, int trials);

// Counting variance per x0 plus the (5/2)-power reference term; trials >= 30.
std::vector<CountRecord> variance_experiment(const EnsembleConfig& config,
                                             const std::vector<double>& x0_grid, int trials);

}  // namespace cmsdisc
