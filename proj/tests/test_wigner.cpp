#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>

#include "doctest.h"

#include "cmsdisc/wigner.hpp"
#include "jacobi_oracle.hpp"

using namespace cmsdisc;

TEST_CASE("entry model names") {
    for (EntryModel m : {EntryModel::ComplexGaussian, EntryModel::ComplexRademacher,
                         EntryModel::RealGaussian, EntryModel::RealRademacher})
        CHECK(parse_entry_model(entry_model_name(m)) == m);
    CHECK_THROWS_AS(parse_entry_model("goe"), std::invalid_argument);
}

TEST_CASE("sample_matrix shape and symmetry") {
    for (EntryModel m : {EntryModel::ComplexGaussian, EntryModel::ComplexRademacher,
                         EntryModel::RealGaussian, EntryModel::RealRademacher}) {
        EnsembleConfig cfg;
        cfg.N = 6;
        cfg.entry_model = m;
        cfg.seed = 11;
        const HermitianMatrix h = sample_matrix(cfg, 3);
        REQUIRE(h.n == 6);
        for (int u = 0; u < 6; ++u) {
            CHECK(h.at(u, u).imag() == 0.0);
            for (int v = 0; v < 6; ++v)
                CHECK(h.at(u, v) == std::conj(h.at(v, u)));
        }
        if (m == EntryModel::RealGaussian || m == EntryModel::RealRademacher)
            for (int u = 0; u < 6; ++u)
                for (int v = 0; v < 6; ++v) CHECK(h.at(u, v).imag() == 0.0);
    }
}

TEST_CASE("rademacher entries have unit modulus") {
    EnsembleConfig cfg;
    cfg.N = 8;
    cfg.entry_model = EntryModel::ComplexRademacher;
    cfg.seed = 5;
    const HermitianMatrix h = sample_matrix(cfg);
    const double r = 1.0 / std::sqrt(2.0);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) {
            CHECK(std::abs(std::abs(h.at(u, v).real()) - r) < 1e-15);
            CHECK(std::abs(std::abs(h.at(u, v).imag()) - r) < 1e-15);
        }
}

TEST_CASE("off-diagonal second moment is 1") {
    const int draws = 100000;
    for (EntryModel m : {EntryModel::ComplexGaussian, EntryModel::ComplexRademacher,
                         EntryModel::RealGaussian, EntryModel::RealRademacher}) {
        EnsembleConfig cfg;
        cfg.N = 2;
        cfg.entry_model = m;
        cfg.seed = 202;
        double s = 0.0;
        for (int t = 0; t < draws; ++t) {
            const HermitianMatrix h = sample_matrix(cfg, t);
            s += std::norm(h.at(0, 1));
        }
        CHECK(s / draws == doctest::Approx(1.0).epsilon(0.02));
    }
}

TEST_CASE("sampling is deterministic in (seed, trial)") {
    EnsembleConfig cfg;
    cfg.N = 10;
    cfg.seed = 42;
    const HermitianMatrix a = sample_matrix(cfg, 7);
    const HermitianMatrix b = sample_matrix(cfg, 7);
    CHECK(a.a == b.a);
    const HermitianMatrix c = sample_matrix(cfg, 8);
    CHECK(a.a != c.a);
    cfg.seed = 43;
    const HermitianMatrix d = sample_matrix(cfg, 7);
    CHECK(a.a != d.a);
}

TEST_CASE("eigenvalues: small analytic cases") {
    HermitianMatrix h1(1);
    h1.at(0, 0) = 3.5;
    CHECK(eigenvalues(h1) == std::vector<double>{3.5});

    // [[1, 2-i], [2+i, -1]] has eigenvalues +-sqrt(6)
    HermitianMatrix h2(2);
    h2.at(0, 0) = 1.0;
    h2.at(1, 1) = -1.0;
    h2.at(0, 1) = std::complex<double>(2.0, -1.0);
    h2.at(1, 0) = std::complex<double>(2.0, 1.0);
    const auto lam = eigenvalues(h2);
    REQUIRE(lam.size() == 2);
    CHECK(lam[0] == doctest::Approx(-std::sqrt(6.0)).epsilon(1e-12));
    CHECK(lam[1] == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
}

TEST_CASE("eigenvalues agree with the Jacobi oracle") {
    for (int n = 2; n <= 12; ++n) {
        EnsembleConfig cfg;
        cfg.N = n;
        cfg.entry_model = (n % 2 == 0) ? EntryModel::ComplexGaussian
                                       : EntryModel::RealGaussian;
        cfg.seed = 900 + n;
        const HermitianMatrix h = sample_matrix(cfg);
        const auto fast = eigenvalues(h);
        const auto slow = oracle::jacobi_eigenvalues(h);
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i)
            CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-10));
    }
}

TEST_CASE("eigenvalues: trace and Frobenius invariants at N = 200") {
    EnsembleConfig cfg;
    cfg.N = 200;
    cfg.seed = 17;
    const HermitianMatrix h = sample_matrix(cfg);
    const auto lam = eigenvalues(h);
    REQUIRE(lam.size() == 200);
    CHECK(std::is_sorted(lam.begin(), lam.end()));

    double s1 = 0.0, s2 = 0.0;
    for (double l : lam) {
        s1 += l;
        s2 += l * l;
    }
    double frob = 0.0;
    for (int u = 0; u < 200; ++u)
        for (int v = 0; v < 200; ++v) frob += std::norm(h.at(u, v));
    CHECK(s1 == doctest::Approx(h.trace_real()).epsilon(1e-10));
    CHECK(s2 == doctest::Approx(frob).epsilon(1e-10));
}

TEST_CASE("u-moment experiment matches the exact second moment") {
    EnsembleConfig cfg;
    cfg.N = 32;
    cfg.entry_model = EntryModel::ComplexGaussian;
    cfg.diag_variance = 2.0;
    cfg.seed = 3;
    const int trials = 400;
    const auto est = u_moment_experiment(cfg, 4, trials);
    REQUIRE(static_cast<int>(est.size()) == 4);

    // E integral of U_2 d(mu_A) = (E tr A^2 / (4N) - N) / N = 1/N exactly for
    // this ensemble, and the odd moments vanish by sign symmetry
    CHECK(std::abs(est[1].mean - 1.0 / cfg.N) <= 3.5 * est[1].std_err + 1e-12);
    CHECK(std::abs(est[0].mean) <= 4.0 * est[0].std_err);
    CHECK(std::abs(est[2].mean) <= 4.0 * est[2].std_err);
    for (const auto& e : est) CHECK(e.std_err >= 0.0);
}

TEST_CASE("experiments are schedule independent") {
    EnsembleConfig cfg;
    cfg.N = 24;
    cfg.seed = 77;
    setenv("CMSDISC_THREADS", "1", 1);
    const auto serial = u_moment_experiment(cfg, 3, 16);
    setenv("CMSDISC_THREADS", "4", 1);
    const auto parallel = u_moment_experiment(cfg, 3, 16);
    unsetenv("CMSDISC_THREADS");
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].mean == parallel[i].mean);
        CHECK(serial[i].std_err == parallel[i].std_err);
    }
}

TEST_CASE("counting experiment endpoints") {
    EnsembleConfig cfg;
    cfg.N = 40;
    cfg.seed = 9;
    const auto res = counting_experiment(cfg, {-5.0, 0.0, 5.0}, 20);
    CHECK(res.trials == 20);
    REQUIRE(res.counts.size() == 3);
    // all eigenvalues exceed -10 sqrt(N) and none exceed +10 sqrt(N)
    CHECK(res.counts[0].mean_count == doctest::Approx(40.0));
    CHECK(res.counts[2].mean_count == doctest::Approx(0.0));
    CHECK(res.counts[2].variance == doctest::Approx(0.0));
    CHECK(res.counts[0].expected_count == doctest::Approx(40.0));
    CHECK(res.counts[1].expected_count == doctest::Approx(20.0));
    const double n23 = std::pow(40.0, 2.0 / 3.0);
    CHECK(res.counts[1].bound_term == doctest::Approx(n23));
    CHECK(res.counts[0].bound_term == doctest::Approx(1.0));  // 1-|x0| < 0 clamps
}

TEST_CASE("variance experiment") {
    EnsembleConfig cfg;
    cfg.N = 16;
    cfg.seed = 1;
    CHECK_THROWS_AS(variance_experiment(cfg, {0.0}, 10), std::invalid_argument);
    const auto recs = variance_experiment(cfg, {0.0, 0.9}, 30);
    REQUIRE(recs.size() == 2);
    const double n23 = std::pow(16.0, 2.0 / 3.0);
    CHECK(recs[0].bound_term == doctest::Approx(std::pow(n23, 2.5)));
    CHECK(recs[1].bound_term ==
          doctest::Approx(std::pow(std::max(n23 * 0.1, 1.0), 2.5)));
    CHECK(recs[0].variance >= 0.0);
}

TEST_CASE("invalid configurations throw") {
    EnsembleConfig bad;
    bad.N = 0;
    CHECK_THROWS_AS(sample_matrix(bad), std::invalid_argument);
    bad.N = 2;
    bad.diag_variance = -1.0;
    CHECK_THROWS_AS(sample_matrix(bad), std::invalid_argument);
    EnsembleConfig ok;
    ok.N = 2;
    CHECK_THROWS_AS(u_moment_experiment(ok, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(counting_experiment(ok, {0.0}, 0), std::invalid_argument);
}
