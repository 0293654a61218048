#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "dreadlocks/expfamily.hpp"
#include "fixtures.hpp"

using namespace dreadlocks;
using namespace dreadlocks::testing;

namespace {
const std::complex<double> kTwoPiI{0.0, 2.0 * M_PI};
}

TEST_CASE("inverse branches invert the map and select the right strip") {
    const ExpMap f{kTwoPiI};
    const std::complex<double> probes[] = {
        {3.0, 1.0}, {-2.0, 5.0}, {40.0, 0.0}, {0.1, -0.3}, {-7.5, 2.25}};
    for (const auto& w : probes) {
        for (int64_t branch : {-2, -1, 0, 1, 2}) {
            const auto z = inverse_branch(f, w, branch);
            CHECK(std::abs(exp_apply(f, z) - w) / std::abs(w) < 1e-12);
            const double im = z.imag();
            CHECK(im > 2.0 * M_PI * branch - M_PI);
            CHECK(im <= 2.0 * M_PI * branch + M_PI);
        }
    }
    CHECK_THROWS_AS(inverse_branch(f, {0.0, 0.0}, 0), std::domain_error);
}

TEST_CASE("psf check detects the orbit of lambda = 2 pi i") {
    const PsfOrbit orbit = psf_check(ExpMap{kTwoPiI});
    REQUIRE(orbit.detected);
    CHECK(orbit.preperiod == 1);
    CHECK(orbit.period == 1);
    REQUIRE(orbit.orbit.size() == 2);
    CHECK(std::abs(orbit.orbit[0]) < 1e-12);
    CHECK(std::abs(orbit.orbit[1] - kTwoPiI) < 1e-9);
    // detection contract
    CHECK(std::abs(exp_apply(ExpMap{kTwoPiI}, orbit.orbit.back()) - orbit.orbit[1]) < 1e-9);
}

TEST_CASE("psf check reports escape for lambda = 1") {
    const PsfOrbit orbit = psf_check(ExpMap{{1.0, 0.0}});
    CHECK_FALSE(orbit.detected);
}

TEST_CASE("fixed rays land on repelling fixed points") {
    const ExpMap f{kTwoPiI};
    for (int64_t k : {-2, -1, 0, 1, 2}) {
        const LandingEstimate est = estimate_landing(f, A("|" + std::to_string(k)));
        REQUIRE(est.kind == VerdictKind::Point);
        CHECK(std::abs(exp_apply(f, est.point) - est.point) < 1e-8);
        const StabilityReport rep = classify_fixed_point(f, est.point);
        CHECK(rep.kind == Stability::Repelling);
    }
}

TEST_CASE("the fixed ray |1 lands at 2 pi i") {
    const ExpMap f{kTwoPiI};
    const LandingEstimate est = estimate_landing(f, A("|1"));
    REQUIRE(est.kind == VerdictKind::Point);
    CHECK(std::abs(est.point - kTwoPiI) < 1e-6);
}

TEST_CASE("classification of explicit fixed points") {
    const StabilityReport rep = classify_fixed_point(ExpMap{kTwoPiI}, kTwoPiI);
    CHECK(rep.kind == Stability::Repelling);
    CHECK(rep.multiplier_modulus == doctest::Approx(2.0 * M_PI).epsilon(1e-9));

    // lambda = 1/e fixes z = 1 with multiplier 1: the indifferent control case
    const StabilityReport ind = classify_fixed_point(ExpMap{{std::exp(-1.0), 0.0}}, {1.0, 0.0});
    CHECK(ind.kind == Stability::Indifferent);
    CHECK_THROWS_AS(classify_fixed_point(ExpMap{kTwoPiI}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("the derived portrait scans the ray landing at zero") {
    const DerivedPortrait derived = derive_exp_portrait(ExpMap{kTwoPiI});
    CHECK(derived.ray_at_zero == A("0|1"));
    CHECK(validate(derived.portrait).ok());
    CHECK(check_simple(derived.portrait).simple());
    CHECK(derived.portrait.singulars[0].orbit_preperiod == 1);
    CHECK(derived.portrait.singulars[0].orbit_period == 1);
    // it coincides with the combinatorial fixture
    CHECK(portrait_to_json(derived.portrait) == portrait_to_json(exp_2pii()));
}

TEST_CASE("family members over the scanned address hit the tract") {
    const ExpMap f{kTwoPiI};
    for (int64_t k : {-2, -1, 1, 2}) {
        const ExtAddress member = A(std::to_string(k) + " 0|1");
        const LandingEstimate est = estimate_landing(f, member);
        CHECK(est.kind == VerdictKind::Tract);
    }
    // 0 0|1 as well: the family member with leading symbol 0
    CHECK(estimate_landing(f, A("0 0|1")).kind == VerdictKind::Tract);
}

TEST_CASE("landing estimates are shift equivariant") {
    const ExpMap f{kTwoPiI};
    for (const char* text : {"|1", "|1 2", "0|1", "1 0|1 2"}) {
        const ExtAddress a = A(text);
        const LandingEstimate down = estimate_landing(f, a);
        const LandingEstimate up = estimate_landing(f, shift(a));
        if (down.kind == VerdictKind::Point && up.kind == VerdictKind::Point)
            CHECK(std::abs(exp_apply(f, down.point) - up.point) < 1e-6);
    }
}

TEST_CASE("pullback periodicity residual for periodic addresses") {
    const ExpMap f{kTwoPiI};
    const RayApprox ray = trace_ray(f, A("|1 2"));
    REQUIRE(ray.verdict.kind == VerdictKind::Point);
    const auto& pts = ray.points;
    REQUIRE(pts.size() >= 10);
    CHECK(std::abs(pts[pts.size() - 1] - pts[pts.size() - 3]) < 1e-9);  // period 2 gap
}

TEST_CASE("verification report agrees on a small sample") {
    const ExpMap f{kTwoPiI};
    const Portrait p = exp_2pii();
    std::vector<ExtAddress> sample;
    for (const char* text : {"|1", "|2", "0|1", "-1 0|1", "1 0|1", "2 0|1", "|1 2", "|2 1"})
        sample.push_back(A(text));
    const VerifyReport rep = verify_landing_predictions(f, p, sample);
    CHECK(rep.mismatches == 0);
    CHECK(rep.undecided == 0);
    CHECK(rep.pairs_compared == sample.size() * (sample.size() - 1) / 2);
}

TEST_CASE("trace exports") {
    const ExpMap f{kTwoPiI};
    const RayApprox ray = trace_ray(f, A("|1"), {.depth = 10});
    std::ostringstream csv;
    write_trace_csv(csv, "|1", ray);
    CHECK(csv.str().find("|1,1,") == 0);
    const std::string svg = render_trace_svg({{"|1", ray}});
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("polyline") != std::string::npos);
}
