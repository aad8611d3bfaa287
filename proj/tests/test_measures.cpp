#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "cmsdisc/measures.hpp"

using namespace cmsdisc;
using std::numbers::pi;

TEST_CASE("T-moments of a point mass at 0") {
    const DiscreteMeasure mu(MeasureDomain::Line, {{0.0, 1.0}});
    const MomentSequence m = moments(mu, MomentKind::T, 4);
    CHECK(m.at(1).real() == doctest::Approx(0.0));
    CHECK(m.at(2).real() == doctest::Approx(-1.0));
    CHECK(m.at(3).real() == doctest::Approx(0.0));
    CHECK(m.at(4).real() == doctest::Approx(1.0));
}

TEST_CASE("uniform measure on T-zeros has vanishing low T-moments") {
    for (int nodes : {3, 8, 17}) {
        std::vector<Atom> atoms;
        for (double z : cheb_zeros(ChebKind::First, nodes))
            atoms.push_back({z, 1.0 / nodes});
        const DiscreteMeasure mu(MeasureDomain::Line, std::move(atoms));
        const MomentSequence m = moments(mu, MomentKind::T, 2 * nodes);
        // the cosine sum identity kills every moment below 2*nodes (including
        // n = nodes itself, where T_n sits on its own zeros)
        for (int n = 1; n < 2 * nodes; ++n) {
            double direct = 0.0;
            for (int k = 1; k <= nodes; ++k)
                direct += std::cos(n * (2.0 * k - 1.0) * pi / (2.0 * nodes)) / nodes;
            CHECK(std::abs(direct) <= 1e-13);
            CHECK(std::abs(m.at(n)) <= 1e-13);
        }
        CHECK(std::abs(m.at(2 * nodes)) == doctest::Approx(1.0));
    }
}

TEST_CASE("Gauss-sigma2 measure has vanishing U-moments below 2m") {
    for (int nodes : {1, 4, 9}) {
        const QuadratureRule rule = gauss_rule(ChebKind::Second, nodes);
        std::vector<Atom> atoms;
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            atoms.push_back({rule.nodes[i], rule.weights[i]});
        const DiscreteMeasure mu(MeasureDomain::Line, std::move(atoms));
        const MomentSequence m = moments(mu, MomentKind::U, 2 * nodes - 1);
        for (int n = 1; n <= 2 * nodes - 1; ++n) CHECK(std::abs(m.at(n)) <= 1e-13);
    }
}

TEST_CASE("fourier coefficients") {
    for (int k : {2, 5, 8}) {
        std::vector<Atom> atoms;
        for (int j = 0; j < k; ++j) atoms.push_back({2.0 * pi * j / k, 1.0 / k});
        const DiscreteMeasure nu(MeasureDomain::Circle, std::move(atoms));
        const MomentSequence f = fourier(nu, k);
        for (int n = 1; n < k; ++n) CHECK(std::abs(f.at(n)) <= 1e-13);
        CHECK(std::abs(f.at(k) - 1.0) <= 1e-13);
    }
    const DiscreteMeasure delta0(MeasureDomain::Circle, {{0.0, 1.0}});
    const MomentSequence fd = fourier(delta0, 6);
    for (int n = 1; n <= 6; ++n) CHECK(std::abs(fd.at(n) - 1.0) <= 1e-15);

    const DiscreteMeasure two(MeasureDomain::Circle, {{0.0, 0.5}, {pi, 0.5}});
    const MomentSequence f2 = fourier(two, 2);
    CHECK(std::abs(f2.at(1)) <= 1e-15);
    CHECK(std::abs(f2.at(2) - 1.0) <= 1e-15);
}

TEST_CASE("circle_to_interval point examples") {
    const DiscreteMeasure d(MeasureDomain::Circle, {{pi / 3.0, 1.0}});
    const DiscreteMeasure pushed = circle_to_interval(d, 0.0);
    REQUIRE(pushed.atoms().size() == 1);
    CHECK(pushed.atoms()[0].position == doctest::Approx(0.5));

    std::vector<Atom> roots4;
    for (int j = 0; j < 4; ++j) roots4.push_back({2.0 * pi * j / 4.0, 0.25});
    const DiscreteMeasure nu(MeasureDomain::Circle, std::move(roots4));
    const DiscreteMeasure mu = circle_to_interval(nu, 0.0);
    REQUIRE(mu.atoms().size() == 3);
    CHECK(mu.atoms()[0].position == doctest::Approx(-1.0));
    CHECK(mu.atoms()[0].weight == doctest::Approx(0.25));
    CHECK(mu.atoms()[1].position == doctest::Approx(0.0));
    CHECK(mu.atoms()[1].weight == doctest::Approx(0.5));
    CHECK(mu.atoms()[2].position == doctest::Approx(1.0));
    CHECK(mu.atoms()[2].weight == doctest::Approx(0.25));
}

TEST_CASE("pushforward moment identity on random circle measures") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> uw(0.1, 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        const int m = 1 + static_cast<int>(rng() % 12);
        std::vector<Atom> atoms(m);
        for (auto& a : atoms) a = {angle(rng), uw(rng)};
        const DiscreteMeasure nu(MeasureDomain::Circle, std::move(atoms));
        const double c = angle(rng);
        const MomentSequence f = fourier(nu, 20);
        const MomentSequence t = moments(circle_to_interval(nu, c), MomentKind::T, 20);
        for (int n = 1; n <= 20; ++n) {
            const double want = (std::polar(1.0, n * c) * f.at(n)).real();
            CHECK(std::abs(t.at(n).real() - want) <= 1e-12);
        }
    }
}

TEST_CASE("tails") {
    const DiscreteMeasure d0(MeasureDomain::Line, {{0.0, 1.0}});
    CHECK(tail(d0, 0.0) == doctest::Approx(1.0));
    CHECK(open_tail(d0, 0.0) == doctest::Approx(0.0));
    CHECK(tail(d0, -1e10) == doctest::Approx(1.0));

    const DiscreteMeasure two(MeasureDomain::Line,
                              {{-1.0 / std::sqrt(2.0), 0.5}, {1.0 / std::sqrt(2.0), 0.5}});
    CHECK(tail(two, 0.0) == doctest::Approx(0.5));
    CHECK(open_tail(two, 0.0) == doctest::Approx(0.5));
}

TEST_CASE("true_discrepancy examples") {
    const DiscreteMeasure d0(MeasureDomain::Line, {{0.0, 1.0}});
    const Discrepancy d = true_discrepancy(d0, ChebKind::Second);
    CHECK(d.value == doctest::Approx(0.5));
    CHECK(d.x0 == doctest::Approx(0.0));

    for (int m : {4, 16, 64}) {
        std::vector<Atom> atoms;
        for (double z : cheb_zeros(ChebKind::First, m)) atoms.push_back({z, 1.0 / m});
        const DiscreteMeasure mu(MeasureDomain::Line, std::move(atoms));
        CHECK(true_discrepancy(mu, ChebKind::First).value <= 1.0 / m + 1e-12);
    }

    const DiscreteMeasure outside(MeasureDomain::Line, {{-2.0, 1.0}});
    const Discrepancy od = true_discrepancy(outside, ChebKind::First);
    CHECK(od.value == doctest::Approx(1.0));
}

TEST_CASE("true_discrepancy ignores atom ordering and duplicates") {
    const DiscreteMeasure a(MeasureDomain::Line, {{0.3, 0.5}, {-0.2, 0.25}, {0.3, 0.25}});
    const DiscreteMeasure b(MeasureDomain::Line, {{-0.2, 0.25}, {0.3, 0.75}});
    const Discrepancy da = true_discrepancy(a, ChebKind::First);
    const Discrepancy db = true_discrepancy(b, ChebKind::First);
    CHECK(da.value == doctest::Approx(db.value));
    CHECK(da.x0 == doctest::Approx(db.x0));
}

TEST_CASE("roots-of-unity pushforward discrepancy <= 2/k") {
    for (int k = 2; k <= 256; k *= 2) {
        std::vector<Atom> atoms;
        for (int j = 0; j < k; ++j) atoms.push_back({2.0 * pi * j / k, 1.0 / k});
        const DiscreteMeasure mu =
            circle_to_interval(DiscreteMeasure(MeasureDomain::Circle, std::move(atoms)), 0.0);
        CHECK(true_discrepancy(mu, ChebKind::First).value <= 2.0 / k + 1e-12);
    }
}

TEST_CASE("arc_discrepancy sanity") {
    // point mass: best arc is the point itself (value 1) minus zero length
    const DiscreteMeasure d0(MeasureDomain::Circle, {{1.0, 1.0}});
    CHECK(arc_discrepancy(d0) == doctest::Approx(1.0));
    // uniform k points: discrepancy is 1/k (arc of length ~0 catching one atom)
    for (int k : {4, 16}) {
        std::vector<Atom> atoms;
        for (int j = 0; j < k; ++j) atoms.push_back({2.0 * pi * j / k, 1.0 / k});
        const DiscreteMeasure nu(MeasureDomain::Circle, std::move(atoms));
        CHECK(arc_discrepancy(nu) == doctest::Approx(1.0 / k));
    }
}

TEST_CASE("sharpness witness") {
    const DiscreteMeasure w1 = sharpness_witness(1);
    REQUIRE(w1.atoms().size() == 2);
    CHECK(w1.atoms()[0].position == doctest::Approx(-0.5));
    CHECK(w1.atoms()[1].position == doctest::Approx(0.5));
    CHECK(w1.atoms()[0].weight == doctest::Approx(0.5));
    CHECK(w1.atoms()[1].weight == doctest::Approx(0.5));
    const MomentSequence um = moments(w1, MomentKind::U, 3);
    for (int n = 1; n <= 3; ++n) CHECK(std::abs(um.at(n)) <= 1e-14);

    const double st = sigma_tail(ChebKind::Second, 0.5);
    const double dev = std::max(std::abs(tail(w1, 0.5) - st), std::abs(open_tail(w1, 0.5) - st));
    CHECK(dev >= 0.25);

    for (int n0 : {2, 7, 33}) {
        const DiscreteMeasure w = sharpness_witness(n0);
        double sum = 0.0;
        for (const auto& a : w.atoms()) sum += a.weight;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        const MomentSequence m = moments(w, MomentKind::U, n0);
        for (int n = 1; n <= n0; ++n) CHECK(std::abs(m.at(n)) <= 1e-12);
    }
}

TEST_CASE("test_corpus determinism and contents") {
    const auto c1 = test_corpus(0);
    const auto c2 = test_corpus(0);
    REQUIRE(c1.size() == c2.size());
    REQUIRE(c1.size() >= 100);
    for (size_t i = 0; i < c1.size(); ++i) {
        REQUIRE(c1[i].atoms().size() == c2[i].atoms().size());
        for (size_t j = 0; j < c1[i].atoms().size(); ++j) {
            CHECK(c1[i].atoms()[j].position == c2[i].atoms()[j].position);
            CHECK(c1[i].atoms()[j].weight == c2[i].atoms()[j].weight);
        }
        double sum = 0.0;
        for (const auto& a : c1[i].atoms()) sum += a.weight;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    // roots-of-unity pushforwards for k in {2,3,5,8} lead the corpus
    CHECK(c1[0].atoms().size() == 2);  // k=2 -> {-1, 1}
    CHECK(c1[1].atoms().size() == 2);  // k=3 -> {cos(2pi/3), 1}
    CHECK(c1[2].atoms().size() == 3);  // k=5
    CHECK(c1[3].atoms().size() == 5);  // k=8
}

TEST_CASE("measure validation") {
    CHECK_THROWS_AS(DiscreteMeasure(MeasureDomain::Line, {}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteMeasure(MeasureDomain::Line, {{0.0, -1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(moments(DiscreteMeasure(MeasureDomain::Circle, {{0.0, 1.0}}),
                            MomentKind::T, 3),
                    std::invalid_argument);
}
