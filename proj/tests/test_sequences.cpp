#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "dtlab/sequences.hpp"
#include "oracles.hpp"

using namespace dtlab;

TEST_SUITE("sequences") {

TEST_CASE("geometric construction") {
    const LacunarySequence a = make_lacunary_geometric(2.0, 2.0, -4, 4);
    for (int j = -4; j <= 4; ++j) CHECK(a.a(j) == doctest::Approx(std::pow(2.0, j)).epsilon(1e-15));
    CHECK_THROWS_AS(make_lacunary_geometric(1.5, 2.0, 0, 3), std::invalid_argument);
    // a_j = a^j is rho-lacunary with rho = a
    const LacunarySequence b = make_lacunary_geometric(7.5, 7.5, -3, 3);
    b.validate();
}

TEST_CASE("custom construction names the offending index") {
    try {
        make_lacunary_custom({1.0, 1.5, 3.0}, 2.0, 0);
        FAIL("expected a validation error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("index 0") != std::string::npos);
    }
    const LacunarySequence ok = make_lacunary_custom({1.0, 2.5, 6.0}, 2.0, -1);
    CHECK(ok.a(-1) == 1.0);
    CHECK(ok.a(1) == 6.0);
}

TEST_CASE("multiplier norms") {
    const MultiplierSequence v = make_multiplier({1.0, -2.0, 2.0}, 0, 2.0);
    CHECK(v.sup_norm() == 2.0);
    CHECK(v.lp_norm(2.0) == doctest::Approx(3.0));
    CHECK(v.lp_norm(1.0) == doctest::Approx(5.0));
    CHECK(v.lp_norm(std::numeric_limits<double>::infinity()) == 2.0);
    CHECK_THROWS_AS(v.lp_norm(0.5), std::invalid_argument);
}

TEST_CASE("normalize_lacunary is the identity for controlled ratios") {
    const LacunarySequence a = make_lacunary_geometric(2.0, 2.0, -3, 3);
    const MultiplierSequence v = make_multiplier_from(-3, 2, [](int j) { return j * 0.5; });
    const NormalizedSystem sys = normalize_lacunary(a, v);
    CHECK(sys.eta.size() == a.size());
    for (int j = a.j_min; j <= a.j_max; ++j) {
        CHECK(sys.mapped(j) == j - a.j_min);
        CHECK(sys.eta.a(sys.mapped(j)) == doctest::Approx(a.a(j)).epsilon(1e-15));
    }
}

TEST_CASE("normalize_lacunary splits wide gaps into [rho, rho^2]") {
    const LacunarySequence a = make_lacunary_geometric(8.0, 2.0, -2, 3);
    const MultiplierSequence v = make_multiplier_from(-2, 2, [](int j) { return (j % 2) ? -1.0 : 1.0; });
    const NormalizedSystem sys = normalize_lacunary(a, v);
    for (int i = 1; i < sys.eta.size(); ++i) {
        const double ratio = sys.eta.values[i] / sys.eta.values[i - 1];
        CHECK(ratio >= 2.0 - 1e-12);
        CHECK(ratio <= 4.0 + 1e-12);
    }
    CHECK(sys.theta.sup_norm() == doctest::Approx(v.sup_norm()));
    // window mapping preserves the endpoints of the scale range
    const auto [N1p, N2p] = sys.map_window(0, 1);
    CHECK(sys.eta.a(N1p) == doctest::Approx(a.a(0)));
    CHECK(sys.eta.a(N2p + 1) == doctest::Approx(a.a(2)));
}

TEST_CASE("normalization preserves the transform kernel sum pointwise") {
    // Telescoping level: the s-profile of T_N equals the mapped window's.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(0.2, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> scales;
        double cur = 0.3 + unif(rng);
        for (int i = 0; i < 7; ++i) {
            scales.push_back(cur);
            cur *= 2.0 + 14.0 * unif(rng);  // ratios in [2, 16], rho = 2
        }
        scales.push_back(cur);
        const LacunarySequence a = make_lacunary_custom(scales, 2.0, 0);
        const MultiplierSequence v =
            make_multiplier_from(0, 6, [&](int) { return 2.0 * unif(rng) - 1.0; });
        const NormalizedSystem sys = normalize_lacunary(a, v);
        const auto [M1, M2] = sys.map_window(1, 5);
        for (double s : {0.05, 0.4, 1.3, 9.0, 80.0}) {
            const double orig = telescope_sum(a, v, 1, 5, 0.6, s);
            const double mapped = telescope_sum(sys.eta, sys.theta, M1, M2, 0.6, s);
            CHECK(std::abs(orig - mapped) <= 1e-12 * (1.0 + std::abs(orig)));
        }
    }
}

TEST_CASE("norm equality across 100 random normalizations") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> scales;
        double cur = 0.1 + unif(rng);
        const int len = 4 + static_cast<int>(unif(rng) * 5);
        for (int i = 0; i < len; ++i) {
            scales.push_back(cur);
            cur *= 1.5 + 30.0 * unif(rng);
        }
        const LacunarySequence a = make_lacunary_custom(scales, 1.5, -2);
        const MultiplierSequence v =
            make_multiplier_from(-2, -2 + len - 2, [&](int) { return 4.0 * unif(rng) - 2.0; });
        const NormalizedSystem sys = normalize_lacunary(a, v);
        CHECK(sys.theta.sup_norm() == doctest::Approx(v.sup_norm()).epsilon(1e-14));
    }
}

TEST_CASE("telescope_sum closed form and zero cases") {
    const LacunarySequence a = make_lacunary_geometric(2.0, 2.0, -1, 7);
    const MultiplierSequence ones = make_multiplier_from(-1, 6, [](int) { return 1.0; });
    const MultiplierSequence zeros = make_multiplier_from(-1, 6, [](int) { return 0.0; });
    const double alpha = 0.5, s = 0.7;
    const auto term = [&](double u) {
        return std::pow(u, 2.0 * alpha) * std::exp(-u * u / (4.0 * s));
    };
    const double closed = (term(a.a(6)) - term(a.a(0))) * std::pow(s, -1.0 - alpha);
    CHECK(telescope_sum(a, ones, 0, 5, alpha, s) == doctest::Approx(closed).epsilon(1e-13));
    CHECK(telescope_sum(a, zeros, 0, 5, alpha, s) == 0.0);
    CHECK_THROWS_AS(telescope_sum(a, ones, 0, 5, alpha, -1.0), std::invalid_argument);
}

TEST_CASE("telescope_sum frozen 50-digit probe") {
    const LacunarySequence a = make_lacunary_geometric(2.0, 2.0, 0, 6);
    const MultiplierSequence v =
        make_multiplier_from(0, 5, [](int j) { return (j % 2 == 0) ? 1.0 : -1.0; });
    const double value = telescope_sum(a, v, 0, 5, 0.5, 1.0);
    // 50-digit oracle: 0.54619367106728648393301285875226299707060077080246
    CHECK(std::abs(value - 0.5461936710672865) < 1e-14);
    const double mp = static_cast<double>(
        oracle::telescope_sum_alternating_half(oracle::mpreal(2), 0, 5, oracle::mpreal(1)));
    CHECK(std::abs(value - mp) < 1e-15);
}

TEST_CASE("sequence csv round trip") {
    const LacunarySequence a = make_lacunary_geometric(3.0, 2.0, -2, 4);
    const MultiplierSequence v = make_multiplier_from(-2, 3, [](int j) { return std::sin(j + 0.3); });
    const std::string pa = "/tmp/dtlab_test_a.csv", pv = "/tmp/dtlab_test_v.csv";
    write_sequence_csv(pa, a);
    write_sequence_csv(pv, v);
    const LacunarySequence a2 = read_lacunary_csv(pa, 2.0);
    const MultiplierSequence v2 = read_multiplier_csv(pv);
    CHECK(a2.j_min == a.j_min);
    CHECK(a2.j_max == a.j_max);
    for (int j = a.j_min; j <= a.j_max; ++j) CHECK(a2.a(j) == a.a(j));
    for (int j = v.j_min; j <= v.j_max; ++j) CHECK(v2.v(j) == v.v(j));
    std::remove(pa.c_str());
    std::remove(pv.c_str());
}

TEST_CASE("transform spec validation") {
    TransformSpec spec;
    spec.alpha = 0.5;
    spec.N1 = 0;
    spec.N2 = 2;
    spec.a = make_lacunary_geometric(2.0, 2.0, 0, 3);
    spec.v = make_multiplier_from(0, 2, [](int) { return 1.0; });
    CHECK_NOTHROW(spec.validate());
    spec.N2 = 3;  // a no longer covers N2 + 1
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.N2 = 0;  // N1 < N2 violated
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.N2 = 2;
    spec.alpha = 1.2;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

}  // TEST_SUITE
