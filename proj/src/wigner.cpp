#include "cmsdisc/wigner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "cmsdisc/chebyshev.hpp"

namespace cmsdisc {

namespace {

using cd = std::complex<double>;

// splitmix64 step; used to derive independent per-trial streams from
// (master seed, trial index) so results do not depend on scheduling.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937_64(mix64(mix64(seed) ^ (trial + 1)));
}

int thread_budget() {
    if (const char* env = std::getenv("CMSDISC_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Run fn(trial) for trial = 0..trials-1; results are written by index, so the
// outcome is independent of the thread schedule.
template <typename Fn>
void for_each_trial(int trials, Fn fn) {
    const int workers = std::min(thread_budget(), trials);
    if (workers <= 1) {
        for (int t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) fn(t);
        });
    for (auto& th : pool) th.join();
}

std::vector<double> spectrum(const EnsembleConfig& config, std::uint64_t trial) {
    return eigenvalues(sample_matrix(config, trial));
}

}  // namespace

const char* entry_model_name(EntryModel m) {
    switch (m) {
        case EntryModel::ComplexGaussian: return "complex_gaussian";
        case EntryModel::ComplexRademacher: return "complex_rademacher";
        case EntryModel::RealGaussian: return "real_gaussian";
        case EntryModel::RealRademacher: return "real_rademacher";
    }
    return "?";
}

EntryModel parse_entry_model(const std::string& name) {
    if (name == "complex_gaussian") return EntryModel::ComplexGaussian;
    if (name == "complex_rademacher") return EntryModel::ComplexRademacher;
    if (name == "real_gaussian") return EntryModel::RealGaussian;
    if (name == "real_rademacher") return EntryModel::RealRademacher;
    throw std::invalid_argument("unknown ensemble: " + name);
}

HermitianMatrix sample_matrix(const EnsembleConfig& config, std::uint64_t trial) {
    const int N = config.N;
    if (N < 1) throw std::invalid_argument("sample_matrix: N must be >= 1");
    if (config.diag_variance < 0.0)
        throw std::invalid_argument("sample_matrix: diag_variance must be >= 0");
    std::mt19937_64 rng = trial_engine(config.seed, trial);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::bernoulli_distribution coin(0.5);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double diag_sd = std::sqrt(config.diag_variance);

    HermitianMatrix h(N);
    for (int u = 0; u < N; ++u) {
        for (int v = u; v < N; ++v) {
            cd entry;
            if (u == v) {
                switch (config.entry_model) {
                    case EntryModel::ComplexGaussian:
                    case EntryModel::RealGaussian:
                        entry = diag_sd * gauss(rng);
                        break;
                    case EntryModel::ComplexRademacher:
                    case EntryModel::RealRademacher:
                        entry = (coin(rng) ? diag_sd : -diag_sd);
                        break;
                }
            } else {
                switch (config.entry_model) {
                    case EntryModel::ComplexGaussian:
                        entry = cd(inv_sqrt2 * gauss(rng), inv_sqrt2 * gauss(rng));
                        break;
                    case EntryModel::ComplexRademacher:
                        entry = cd(coin(rng) ? inv_sqrt2 : -inv_sqrt2,
                                   coin(rng) ? inv_sqrt2 : -inv_sqrt2);
                        break;
                    case EntryModel::RealGaussian:
                        entry = gauss(rng);
                        break;
                    case EntryModel::RealRademacher:
                        entry = (coin(rng) ? 1.0 : -1.0);
                        break;
                }
            }
            h.at(u, v) = entry;
            h.at(v, u) = std::conj(entry);
        }
    }
    return h;
}

std::vector<double> eigenvalues(const HermitianMatrix& h) {
    if (h.n == 0) return {};
    if (h.n == 1) return {h.at(0, 0).real()};
    return tridiag_eigenvalues(tridiagonalize(h));
}

std::vector<UMomentEstimate> u_moment_experiment(const EnsembleConfig& config, int n_max,
                                                 int trials) {
    if (trials < 1) throw std::invalid_argument("u_moment_experiment: trials must be >= 1");
    const double scale = 2.0 * std::sqrt(static_cast<double>(config.N));
    std::vector<std::vector<double>> per_trial(trials);
    for_each_trial(trials, [&](int t) {
        const std::vector<double> lam = spectrum(config, t);
        std::vector<double> m(n_max, 0.0);
        for (double l : lam)
            for (int n = 1; n <= n_max; ++n)
                m[n - 1] += cheb_eval(ChebKind::Second, n, l / scale);
        for (double& v : m) v /= config.N;
        per_trial[t] = std::move(m);
    });

    std::vector<UMomentEstimate> out;
    for (int n = 1; n <= n_max; ++n) {
        double mean = 0.0;
        for (int t = 0; t < trials; ++t) mean += per_trial[t][n - 1];
        mean /= trials;
        double var = 0.0;
        for (int t = 0; t < trials; ++t) {
            const double d = per_trial[t][n - 1] - mean;
            var += d * d;
        }
        var = (trials > 1) ? var / (trials - 1) : 0.0;
        out.push_back({n, mean, std::sqrt(var / trials)});
    }
    return out;
}

ExperimentResult counting_experiment(const EnsembleConfig& config,
                                     const std::vector<double>& x0_grid, int trials) {
    if (trials < 1) throw std::invalid_argument("counting_experiment: trials must be >= 1");
    const int N = config.N;
    const double scale = 2.0 * std::sqrt(static_cast<double>(N));
    const int g = static_cast<int>(x0_grid.size());
    std::vector<std::vector<int>> counts(trials);
    for_each_trial(trials, [&](int t) {
        const std::vector<double> lam = spectrum(config, t);  // ascending
        std::vector<int> c(g);
        for (int i = 0; i < g; ++i) {
            const double cut = scale * x0_grid[i];
            c[i] = static_cast<int>(lam.end() -
                                    std::upper_bound(lam.begin(), lam.end(), cut));
        }
        counts[t] = std::move(c);
    });

    ExperimentResult res;
    res.config = config;
    res.trials = trials;
    res.counts.reserve(g);
    const double n23 = std::pow(static_cast<double>(N), 2.0 / 3.0);
    for (int i = 0; i < g; ++i) {
        double mean = 0.0;
        for (int t = 0; t < trials; ++t) mean += counts[t][i];
        mean /= trials;
        double var = 0.0;
        for (int t = 0; t < trials; ++t) {
            const double d = counts[t][i] - mean;
            var += d * d;
        }
        var = (trials > 1) ? var / (trials - 1) : 0.0;
        CountRecord r;
        r.x0 = x0_grid[i];
        r.mean_count = mean;
        r.expected_count = N * sigma_tail(ChebKind::Second, x0_grid[i]);
        r.error = std::abs(r.mean_count - r.expected_count);
        r.bound_term = std::max(n23 * (1.0 - std::abs(x0_grid[i])), 1.0);
        r.variance = var;
        res.counts.push_back(r);
    }
    return res;
}

std::vector<CountRecord> variance_experiment(const EnsembleConfig& config,
                                             const std::vector<double>& x0_grid, int trials) {
    if (trials < 30) throw std::invalid_argument("variance_experiment: trials must be >= 30");
    ExperimentResult res = counting_experiment(config, x0_grid, trials);
    for (auto& r : res.counts) r.bound_term = std::pow(r.bound_term, 2.5);
    return res.counts;
}

}  // namespace cmsdisc
