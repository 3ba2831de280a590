#include "wavesearch/rwa.hpp"

#include <doctest.h>

#include <cmath>

using namespace wavesearch;

TEST_CASE("model constants follow the two-level reduction") {
    SUBCASE("N = 100") {
        const SearchProblem p = make_problem(linear_spectrum(100, 1.0), 101, 50);
        const RwaModel m = build_rwa(p);
        CHECK(m.rabi == 0.05);
        CHECK(m.tau == doctest::Approx(10.0 * kPi).epsilon(1e-15));
    }
    SUBCASE("N = 50") {
        const SearchProblem p = make_problem(linear_spectrum(50, 1.0), 51, 25);
        const RwaModel m = build_rwa(p);
        CHECK(m.tau == doctest::Approx(kPi * std::sqrt(50.0)).epsilon(1e-14));
        CHECK(m.tau == doctest::Approx(22.2144).epsilon(1e-4));
    }
    SUBCASE("quadrupling N doubles the optimal time") {
        for (const Eigen::Index n : {25, 50, 121}) {
            const SearchProblem p1 = make_problem(linear_spectrum(n, 1.0), n + 1, n / 2);
            const SearchProblem p4 =
                make_problem(linear_spectrum(4 * n, 1.0), 4 * n + 1, 2 * n);
            CHECK(optimal_time(p4) == 2.0 * optimal_time(p1));
            CHECK(rabi_frequency(p4) == 0.5 * rabi_frequency(p1));
        }
    }
    SUBCASE("Ω and τ invariants") {
        const SearchProblem p = make_problem(quadratic_spectrum(37, 0.7), 38 * 38, 18);
        const RwaModel m = build_rwa(p);
        CHECK(m.rabi == 0.7 / (2.0 * std::sqrt(37.0)));
        CHECK(m.tau == doctest::Approx(kPi * std::sqrt(37.0) / 0.7).epsilon(1e-14));
        CHECK(m.tau * 2.0 * m.rabi == doctest::Approx(kPi).epsilon(1e-15));
    }
}

TEST_CASE("analytic amplitudes trace the Rabi exchange") {
    const SearchProblem p = make_problem(quadratic_spectrum(100, 1.0), 101 * 101, 50);
    const RwaModel m = build_rwa(p);

    SUBCASE("start") {
        const auto [aj, as] = analytic_amplitudes(m, 0.0);
        CHECK(aj == Complex(1.0, 0.0));
        CHECK(as == Complex(0.0, 0.0));
    }
    SUBCASE("optimal time: full transfer with the i phase") {
        const auto [aj, as] = analytic_amplitudes(m, m.tau);
        CHECK(std::norm(as) == 1.0);
        CHECK(as.real() == 0.0);
        CHECK(as.imag() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::norm(aj) < 1e-30);
    }
    SUBCASE("half time: equal split") {
        const auto [aj, as] = analytic_amplitudes(m, m.tau / 2.0);
        CHECK(std::norm(aj) == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(std::norm(as) == doctest::Approx(0.5).epsilon(1e-14));
    }
}

TEST_CASE("two-level normalization is exact") {
    const SearchProblem p = make_problem(linear_spectrum(64, 1.0), 65, 32);
    const RwaModel m = build_rwa(p);
    for (int k = 0; k < 10000; ++k) {
        const double t = 3.0 * m.tau * static_cast<double>(k) / 9999.0;
        const auto [aj, as] = analytic_amplitudes(m, t);
        CHECK(std::abs(std::norm(aj) + std::norm(as) - 1.0) <= 1e-15);
    }
}

TEST_CASE("analytic amplitudes satisfy the reduced equations") {
    const SearchProblem p = make_problem(linear_spectrum(40, 1.0), 41, 20);
    const RwaModel m = build_rwa(p);
    const double h = 1e-3;
    const Complex minus_i_omega(0.0, -m.rabi);
    for (double t = 0.0; t < 2.0 * m.tau; t += m.tau / 7.3) {
        const auto [aj_p, as_p] = analytic_amplitudes(m, t + h);
        const auto [aj_m, as_m] = analytic_amplitudes(m, t - h);
        const auto [aj, as] = analytic_amplitudes(m, t);
        const Complex daj = (aj_p - aj_m) / (2.0 * h);
        const Complex das = (as_p - as_m) / (2.0 * h);
        CHECK(std::abs(daj - minus_i_omega * as) <= h * h);
        CHECK(std::abs(das - minus_i_omega * aj) <= h * h);
    }
}

TEST_CASE("amplitudes are periodic with period 2π/Ω") {
    const SearchProblem p = make_problem(linear_spectrum(30, 1.0), 31, 15);
    const RwaModel m = build_rwa(p);
    const double period = kTwoPi / m.rabi;
    for (const double t : {0.0, 0.37 * m.tau, 1.9 * m.tau}) {
        const auto [aj1, as1] = analytic_amplitudes(m, t);
        const auto [aj2, as2] = analytic_amplitudes(m, t + period);
        CHECK(std::abs(aj1 - aj2) <= 1e-13);
        CHECK(std::abs(as1 - as2) <= 1e-13);
    }
}

TEST_CASE("validity ratio flags tight spectra") {
    CHECK(validity_ratio(make_problem(linear_spectrum(100, 1.0), 101, 50)) ==
          doctest::Approx(20.0).epsilon(1e-13));
    CHECK(validity_ratio(make_problem(quadratic_spectrum(100, 1.0), 101 * 101, 50)) ==
          doctest::Approx(20.0).epsilon(1e-13));
    // N = 4: Ω = 0.25 → ratio 4, far below the comfort threshold
    CHECK(validity_ratio(make_problem(linear_spectrum(4, 1.0), 5, 2)) ==
          doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("sampled model trajectory is analysis-compatible") {
    const SearchProblem p = make_problem(linear_spectrum(49, 1.0), 50, 24);
    const RwaModel m = build_rwa(p);
    const Trajectory t = sample_trajectory(m, 2.2 * m.tau, 4001);
    CHECK(t.model == "rwa");
    CHECK(t.tau == m.tau);
    CHECK(t.sample_count() == 4001);
    CHECK(t.p_spectator_max.maxCoeff() == 0.0);
    CHECK((t.norm.array() - 1.0).abs().maxCoeff() <= 1e-15);
    CHECK(t.p_initial(0) == 1.0);
    CHECK(t.p_searched(0) == 0.0);
    CHECK_THROWS_AS(sample_trajectory(m, 0.0, 100), ConfigError);
    CHECK_THROWS_AS(sample_trajectory(m, 1.0, 1), ConfigError);
}
