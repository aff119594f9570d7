#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mlbeam/constitutive.hpp"

using namespace mlbeam;

namespace {

BeamSpec test_beam() { return BeamSpec(0.2, 0.3, 2.0, 3.0e9, 1800.0); }

}  // namespace

TEST_CASE("beam spec derives section constants and validates inputs") {
    const BeamSpec beam = test_beam();
    CHECK(beam.J == doctest::Approx(0.2 * 0.3 * 0.3 * 0.3 / 12.0).epsilon(1e-15));
    CHECK(beam.gamma == doctest::Approx(3.0 * beam.E * beam.J / (beam.L * beam.h)).epsilon(1e-15));
    CHECK(beam.N_E == doctest::Approx(M_PI * M_PI * beam.E * beam.J / (4.0 * beam.L * beam.L)).epsilon(1e-15));
    CHECK(beam.c2 == doctest::Approx(beam.E * beam.J / (beam.rho * beam.b * beam.h)).epsilon(1e-15));
    CHECK(beam.J > 0.0);
    CHECK(beam.gamma > 0.0);
    CHECK(beam.N_E > 0.0);
    CHECK(beam.c2 > 0.0);

    CHECK_THROWS_AS(BeamSpec(0.0, 0.3, 2.0, 3e9, 1800.0), std::invalid_argument);
    CHECK_THROWS_AS(BeamSpec(0.2, -0.3, 2.0, 3e9, 1800.0), std::invalid_argument);
    CHECK_THROWS_AS(BeamSpec(0.2, 0.3, 2.0, 0.0, 1800.0), std::invalid_argument);
}

TEST_CASE("axial state identities") {
    const BeamSpec beam = test_beam();
    const double N = -2.0e5;
    const AxialState s(N, beam);
    CHECK(s.alpha > 0.0);
    CHECK(s.alpha == doctest::Approx(-2.0 * N / (beam.E * beam.b * beam.h * beam.h)).epsilon(1e-15));
    CHECK(s.M_el == s.alpha * beam.E * beam.J);  // exact by construction
    CHECK(s.M_max == 3.0 * s.M_el);              // exact by construction
    CHECK(s.M_el == doctest::Approx(-N * beam.h / 6.0).epsilon(1e-14));
    CHECK(s.M_max == doctest::Approx(-N * beam.h / 2.0).epsilon(1e-14));

    CHECK_THROWS_AS(AxialState(0.0, beam), std::invalid_argument);
    CHECK_THROWS_AS(AxialState(1.0e4, beam), std::invalid_argument);
}

TEST_CASE("moment of curvature branch values") {
    const BeamSpec beam = test_beam();
    const AxialState s(-1.5e5, beam);
    const double EJ = beam.EJ();
    const double a = s.alpha;

    CHECK(moment_of_curvature(0.0, s, beam) == 0.0);
    CHECK(moment_of_curvature(a, s, beam) == doctest::Approx(EJ * a).epsilon(1e-14));
    CHECK(moment_of_curvature(4.0 * a, s, beam) == doctest::Approx(2.0 * EJ * a).epsilon(1e-14));
    // odd function
    for (double chi : {0.3 * a, a, 2.7 * a, 40.0 * a})
        CHECK(moment_of_curvature(-chi, s, beam) == doctest::Approx(-moment_of_curvature(chi, s, beam)));
    // saturation below capacity
    CHECK(std::fabs(moment_of_curvature(1e8 * a, s, beam)) < s.M_max);
}

TEST_CASE("curvature of moment branch values and capacity error") {
    const BeamSpec beam = test_beam();
    const AxialState s(-1.5e5, beam);
    const double EJ = beam.EJ();
    const double a = s.alpha;

    CHECK(curvature_of_moment(EJ * a, s, beam) == doctest::Approx(a).epsilon(1e-14));
    CHECK(curvature_of_moment(2.0 * EJ * a, s, beam) == doctest::Approx(4.0 * a).epsilon(1e-14));
    CHECK(curvature_of_moment(-2.0 * EJ * a, s, beam) == doctest::Approx(-4.0 * a).epsilon(1e-14));

    // monotone divergence toward the capacity asymptote
    double prev = 0.0;
    for (double f : {0.9, 0.99, 0.999, 0.999999}) {
        const double chi = curvature_of_moment(f * s.M_max, s, beam);
        CHECK(chi > prev);
        prev = chi;
    }
    CHECK(prev > 1e5 * a);

    CHECK_THROWS_AS(curvature_of_moment(s.M_max, s, beam), SectionCapacityExceeded);
    CHECK_THROWS_AS(curvature_of_moment(-1.01 * s.M_max, s, beam), SectionCapacityExceeded);
}

TEST_CASE("tangent stiffness values and central-difference check") {
    const BeamSpec beam = test_beam();
    const AxialState s(-1.5e5, beam);
    const double EJ = beam.EJ();
    const double a = s.alpha;

    CHECK(tangent_stiffness(0.5 * a, s, beam) == EJ);
    CHECK(tangent_stiffness(4.0 * a, s, beam) == doctest::Approx(EJ / 8.0).epsilon(1e-14));

    const double chi = 2.0 * a;
    const double d = 1e-6 * chi;
    const double fd = (moment_of_curvature(chi + d, s, beam) - moment_of_curvature(chi - d, s, beam)) / (2.0 * d);
    CHECK(fd == doctest::Approx(tangent_stiffness(chi, s, beam)).epsilon(1e-9));
}

TEST_CASE("round trip identity over a wide curvature range") {
    const BeamSpec beam = test_beam();
    const AxialState s(-3.0e5, beam);
    const double a = s.alpha;

    const int count = 2000;
    for (int i = 0; i < count; ++i) {
        const double mag = a * std::pow(10.0, -2.0 + 4.0 * i / (count - 1.0));  // [1e-2 a, 1e2 a]
        for (double chi : {mag, -mag}) {
            const double back = curvature_of_moment(moment_of_curvature(chi, s, beam), s, beam);
            CHECK(std::fabs(back - chi) <= 1e-10 * std::fabs(chi));
        }
    }
}

TEST_CASE("C1 continuity at the elastic limit") {
    const BeamSpec beam = test_beam();
    const AxialState s(-2.5e5, beam);
    const double a = s.alpha;
    const double EJ = beam.EJ();

    const double below = a * (1.0 - 1e-13);
    const double above = a * (1.0 + 1e-13);
    CHECK(moment_of_curvature(below, s, beam) ==
          doctest::Approx(moment_of_curvature(above, s, beam)).epsilon(1e-12));
    CHECK(tangent_stiffness(below, s, beam) == doctest::Approx(tangent_stiffness(above, s, beam)).epsilon(1e-12));
    CHECK(moment_of_curvature(a, s, beam) == doctest::Approx(EJ * a).epsilon(1e-14));
}

TEST_CASE("strict monotonicity of the law") {
    const BeamSpec beam = test_beam();
    const AxialState s(-1.0e5, beam);
    const double a = s.alpha;

    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int trial = 0; trial < 500; ++trial) {
        double c1 = u(rng) * a;
        double c2 = u(rng) * a;
        if (c1 == c2) continue;
        if (c1 > c2) std::swap(c1, c2);
        CHECK(moment_of_curvature(c1, s, beam) < moment_of_curvature(c2, s, beam));
    }
}

TEST_CASE("tangent equals the derivative on a log-spaced grid") {
    const BeamSpec beam = test_beam();
    const AxialState s(-2.0e5, beam);
    const double a = s.alpha;

    for (int i = 0; i <= 60; ++i) {
        const double chi = a * std::pow(10.0, -2.0 + 4.0 * i / 60.0);
        if (std::fabs(chi - a) < 5e-2 * a) continue;  // measure-zero junction excluded
        const double d = 1e-6 * chi;
        const double fd =
            (moment_of_curvature(chi + d, s, beam) - moment_of_curvature(chi - d, s, beam)) / (2.0 * d);
        CHECK(fd == doctest::Approx(tangent_stiffness(chi, s, beam)).epsilon(1e-8));
        CHECK(tangent_stiffness(chi, s, beam) > 0.0);
    }
    // non-increasing in |chi|
    double prev = tangent_stiffness(0.1 * a, s, beam);
    for (double f : {0.5, 1.0, 2.0, 8.0, 100.0}) {
        const double t = tangent_stiffness(f * a, s, beam);
        CHECK(t <= prev);
        prev = t;
    }
}
