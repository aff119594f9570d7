#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mlbeam/dynamics.hpp"

using namespace mlbeam;

namespace {

BeamSpec test_beam() { return BeamSpec(0.2, 0.3, 2.0, 3.0e9, 1800.0); }

SolverSettings tight_settings() {
    SolverSettings st;
    st.epsilon = 1e-6;
    st.max_iter = 500;
    return st;
}

}  // namespace

TEST_CASE("elastic frequency law") {
    const BeamSpec beam = test_beam();

    CHECK(frequency_elastic(0.0, beam).ratio == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(frequency_elastic(-0.3 * beam.N_E, beam).ratio ==
          doctest::Approx(std::sqrt(0.7)).epsilon(1e-13));
    CHECK(frequency_elastic(-(1.0 - 1e-9) * beam.N_E, beam).ratio < 1e-4);
    CHECK_THROWS_AS(frequency_elastic(-beam.N_E, beam), BeyondCriticalLoad);
    CHECK_THROWS_AS(frequency_elastic(1.0, beam), std::invalid_argument);

    const FrequencyResult r = frequency_elastic(-0.25 * beam.N_E, beam);
    CHECK(r.omega2 <= r.omega_el2);
    CHECK(r.stiffness_ratio == 1.0);
    const double pi = M_PI;
    const double expect_el2 = beam.c2 * std::pow(pi, 4) / std::pow(2.0 * beam.L, 4);
    CHECK(r.omega_el2 == doctest::Approx(expect_el2).epsilon(1e-14));
}

TEST_CASE("case (a) without geometric coupling: kernel loads keep the elastic frequency") {
    const BeamSpec beam = test_beam();
    const double N = -0.2 * beam.N_E;
    const FrequencyResult r = frequency_case_a(LoadCaseA(N, beam.h / 8.0), beam, {}, false);
    CHECK(r.stiffness_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.ratio == doctest::Approx(frequency_elastic(N, beam).ratio).epsilon(1e-12));
}

TEST_CASE("case (a) without geometric coupling: analytic cracked value, N-independent") {
    const BeamSpec beam = test_beam();
    const double e = beam.h / 3.0;

    const FrequencyResult r1 = frequency_case_a(LoadCaseA(-0.1 * beam.N_E, e), beam, {}, false);
    const FrequencyResult r3 = frequency_case_a(LoadCaseA(-0.3 * beam.N_E, e), beam, {}, false);

    // constant cracked curvature 4 alpha reduces the stiffness ratio to (1/2)^(3/2)
    CHECK(r1.stiffness_ratio == doctest::Approx(std::pow(0.5, 1.5)).epsilon(1e-6));
    CHECK(std::fabs(r1.stiffness_ratio - r3.stiffness_ratio) < 1e-10);

    // the full ratio keeps the axial term, so it does depend on N
    CHECK(r3.ratio < r1.ratio);
}

TEST_CASE("cracked stiffness never exceeds the elastic frequency at the same load") {
    const BeamSpec beam = test_beam();
    const double N = -0.2 * beam.N_E;
    const double el = frequency_elastic(N, beam).ratio;
    for (double eh : {0.1, 0.18, 0.25, 0.3}) {
        const FrequencyResult off = frequency_case_a(LoadCaseA(N, eh * beam.h), beam, {}, false);
        CHECK(off.ratio <= el + 1e-12);
        CHECK(off.stiffness_ratio <= 1.0 + 1e-12);
        CHECK(off.stiffness_ratio > 0.0);
    }
}

TEST_CASE("frequency decreases with eccentricity, and geometric coupling lowers it further") {
    const BeamSpec beam = test_beam();
    const double N = -0.2 * beam.N_E;
    double prev_off = 2.0, prev_on = 2.0;
    for (double eh : {0.02, 0.08, 0.14, 0.2}) {
        const FrequencyResult off = frequency_case_a(LoadCaseA(N, eh * beam.h), beam, tight_settings(), false);
        const FrequencyResult on = frequency_case_a(LoadCaseA(N, eh * beam.h), beam, tight_settings(), true);
        CHECK(off.ratio <= prev_off + 1e-12);
        CHECK(on.ratio <= prev_on + 1e-12);
        CHECK(on.ratio <= off.ratio + 1e-12);
        prev_off = off.ratio;
        prev_on = on.ratio;
    }
}

TEST_CASE("case (a) geometric solve beyond collapse propagates as an error") {
    const BeamSpec beam = test_beam();
    CHECK_THROWS_AS(frequency_case_a(LoadCaseA(-0.3 * beam.N_E, 0.3 * beam.h), beam, {}, true),
                    BeyondCollapse);
}

TEST_CASE("case (b) at zero horizontal load reduces to the elastic result") {
    const BeamSpec beam = test_beam();
    const double N = -0.25 * beam.N_E;
    for (bool geo : {false, true}) {
        const FrequencyResult r = frequency_case_b(LoadCaseB(N, 0.0), beam, tight_settings(), geo);
        CHECK(r.stiffness_ratio == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.ratio == doctest::Approx(frequency_elastic(N, beam).ratio).epsilon(1e-12));
    }
}

TEST_CASE("case (b) without geometric coupling cracks only above H_min") {
    const BeamSpec beam = test_beam();
    const double N = -0.2 * beam.N_E;
    const double H_max = -N * beam.h / (2.0 * beam.L);

    const FrequencyResult below = frequency_case_b(LoadCaseB(N, 0.32 * H_max), beam, {}, false);
    CHECK(below.stiffness_ratio == doctest::Approx(1.0).epsilon(1e-12));
    const FrequencyResult above = frequency_case_b(LoadCaseB(N, 0.5 * H_max), beam, {}, false);
    CHECK(above.stiffness_ratio < 1.0 - 1e-6);
}

TEST_CASE("case (b) geometric coupling starts the frequency drop below H_min") {
    const BeamSpec beam = test_beam();
    const double N = -0.2 * beam.N_E;
    const double H_max = -N * beam.h / (2.0 * beam.L);
    const double t = 0.31;  // below H_min/H_max = 1/3

    const FrequencyResult off = frequency_case_b(LoadCaseB(N, t * H_max), beam, tight_settings(), false);
    const FrequencyResult on = frequency_case_b(LoadCaseB(N, t * H_max), beam, tight_settings(), true);
    CHECK(off.stiffness_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(on.stiffness_ratio < 1.0 - 1e-5);
}

TEST_CASE("case (b) frequency is non-increasing in the horizontal load") {
    const BeamSpec beam = test_beam();
    const double N = -0.2 * beam.N_E;
    const double H_max = -N * beam.h / (2.0 * beam.L);
    double prev_off = 2.0, prev_on = 2.0;
    for (double t : {0.0, 0.1, 0.2, 0.3, 0.4}) {
        const LoadCaseB lc(N, t * H_max);
        const FrequencyResult off = frequency_case_b(lc, beam, tight_settings(), false);
        const FrequencyResult on = frequency_case_b(lc, beam, tight_settings(), true);
        CHECK(off.ratio <= prev_off + 1e-12);
        CHECK(on.ratio <= prev_on + 1e-12);
        CHECK(on.ratio <= off.ratio + 1e-12);
        prev_off = off.ratio;
        prev_on = on.ratio;
    }
}

TEST_CASE("quadrature stability: doubling the Simpson grid leaves the result unchanged") {
    const BeamSpec beam = test_beam();
    const double N = -0.2 * beam.N_E;
    const double H_max = -N * beam.h / (2.0 * beam.L);
    const LoadCaseB lc(N, 0.7 * H_max);

    const FrequencyResult coarse = frequency_case_b(lc, beam, {}, false, 4000);
    const FrequencyResult fine = frequency_case_b(lc, beam, {}, false, 8000);
    CHECK(std::fabs(coarse.omega2 - fine.omega2) <= 1e-8 * fine.omega_el2);
}

TEST_CASE("geometric and first-order frequencies agree as the axial force vanishes") {
    const BeamSpec beam = test_beam();
    const double N = -1e-6 * beam.N_E;
    const LoadCaseA lc(N, beam.h / 4.0);
    const FrequencyResult on = frequency_case_a(lc, beam, tight_settings(), true);
    const FrequencyResult off = frequency_case_a(lc, beam, tight_settings(), false);
    CHECK(on.stiffness_ratio == doctest::Approx(off.stiffness_ratio).epsilon(1e-6));
    CHECK(on.ratio == doctest::Approx(off.ratio).epsilon(1e-6));
}
