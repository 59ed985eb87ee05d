#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "pnsbounds/bounds.hpp"
#include "pnsbounds/errors.hpp"
#include "pnsbounds/oracle.hpp"

using namespace pnsbounds;

TEST_CASE("perfect effect forces PNS = 1") {
    const auto b = pns_bounds({1.0, 0.0}, {0.5, 0.0, 0.0, 0.5});
    CHECK(b.lower == 1.0);
    CHECK(b.upper == 1.0);
    CHECK(b.consistent);
}

TEST_CASE("zero-ATE symmetric case") {
    const auto b = pns_bounds({0.5, 0.5}, {0.25, 0.25, 0.25, 0.25});
    CHECK(b.lower == 0.0);
    CHECK(b.upper == 0.5);
    CHECK(b.consistent);
    for (double arm : b.lower_arms) CHECK(arm == 0.0);
    for (double arm : b.upper_arms) CHECK(arm == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("arms match a hand evaluation on informer output of model1") {
    const TrueDistributions t = informer(preset(Preset::model1));
    const auto b = pns_bounds(t.exp, t.obs);

    const double p_y_x = t.exp.p_y_do_x;
    const double p_y_xp = t.exp.p_y_do_xprime;
    const double p_y = t.obs.p_xy + t.obs.p_xprime_y;

    CHECK(b.lower_arms[0] == 0.0);
    CHECK(b.lower_arms[1] == p_y_x - p_y_xp);
    CHECK(b.lower_arms[2] == p_y - p_y_xp);
    CHECK(b.lower_arms[3] == p_y_x - p_y);
    CHECK(b.upper_arms[0] == p_y_x);
    CHECK(b.upper_arms[1] == 1.0 - p_y_xp);
    CHECK(b.upper_arms[2] == t.obs.p_xy + t.obs.p_xprime_yprime);
    CHECK(b.upper_arms[3] == p_y_x - p_y_xp + t.obs.p_xy_prime + t.obs.p_xprime_y);

    const double lower = std::max({0.0, p_y_x - p_y_xp, p_y - p_y_xp, p_y_x - p_y});
    const double upper = std::min({p_y_x, 1.0 - p_y_xp, t.obs.p_xy + t.obs.p_xprime_yprime,
                                   p_y_x - p_y_xp + t.obs.p_xy_prime + t.obs.p_xprime_y});
    CHECK(b.lower == lower);
    CHECK(b.upper == upper);
    CHECK(b.consistent);
    CHECK(t.true_pns >= b.lower - 1e-12);
    CHECK(t.true_pns <= b.upper + 1e-12);
}

TEST_CASE("envelope is invariant under double relabeling x<->x', y<->y'") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const ExperimentalDist exp = testutil::random_exp(rng);
        const ObservationalDist obs = testutil::random_obs(rng);
        const auto b = pns_bounds(exp, obs);

        for (double arm : b.lower_arms) CHECK(std::isfinite(arm));
        for (double arm : b.upper_arms) CHECK(std::isfinite(arm));
        CHECK(b.lower >= 0.0);
        CHECK(b.lower <= 1.0);
        CHECK(b.upper >= 0.0);
        CHECK(b.upper <= 1.0);

        const ExperimentalDist exp_rel{1.0 - exp.p_y_do_xprime, 1.0 - exp.p_y_do_x};
        const ObservationalDist obs_rel{obs.p_xprime_yprime, obs.p_xprime_y, obs.p_xy_prime,
                                        obs.p_xy};
        const auto br = pns_bounds(exp_rel, obs_rel);
        CHECK(std::abs(br.lower - b.lower) <= 1e-12);
        CHECK(std::abs(br.upper - b.upper) <= 1e-12);
        CHECK(br.consistent == b.consistent);
    }
}

namespace {

// exp/obs induced by a distribution q over the four response types
// (always-taker, complier, defier, never-taker) and per-type treatment
// probabilities px[t] = P(X=1 | type t).
struct ResponseTypeWorld {
    ExperimentalDist exp;
    ObservationalDist obs;
    double pns;
};

ResponseTypeWorld response_type_world(const double q[4], const double px[4]) {
    const double qa = q[0], qc = q[1], qd = q[2], qn = q[3];
    ResponseTypeWorld w;
    w.exp = {qa + qc, qa + qd};
    // y under x=1 is 1 for types a,c; y under x=0 is 1 for types a,d.
    w.obs.p_xy = qa * px[0] + qc * px[1];
    w.obs.p_xy_prime = qd * px[2] + qn * px[3];
    w.obs.p_xprime_y = qa * (1.0 - px[0]) + qd * (1.0 - px[2]);
    w.obs.p_xprime_yprime = qc * (1.0 - px[1]) + qn * (1.0 - px[3]);
    w.pns = qc;
    return w;
}

}  // namespace

TEST_CASE("bounds contain PNS for every response-type distribution on a 0.01 grid") {
    const double mechanisms[][4] = {
        {0.5, 0.5, 0.5, 0.5},  // unconfounded
        {0.0, 0.0, 0.0, 0.0},  // never treated
        {1.0, 1.0, 1.0, 1.0},  // always treated
        {0.8, 0.6, 0.4, 0.2},  // confounded assignment
    };
    const int steps = 100;
    for (const double* px : mechanisms) {
        for (int i = 0; i <= steps; ++i) {
            for (int j = 0; j <= steps - i; ++j) {
                for (int k = 0; k <= steps - i - j; ++k) {
                    const double q[4] = {i / 100.0, j / 100.0, k / 100.0,
                                         (steps - i - j - k) / 100.0};
                    const auto w = response_type_world(q, px);
                    const auto b = pns_bounds(w.exp, w.obs);
                    REQUIRE(w.pns >= b.lower - 1e-12);
                    REQUIRE(w.pns <= b.upper + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("informer data is always consistent") {
    for (Preset which : {Preset::model1, Preset::model2}) {
        const TrueDistributions t = informer(preset(which));
        CHECK(pns_bounds(t.exp, t.obs).consistent);
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const TrueDistributions t = informer(generate_model(seed));
        CHECK(pns_bounds(t.exp, t.obs).consistent);
    }
}

TEST_CASE("inconsistent estimates are reported, not rejected") {
    // P(y_x) far below P(y): max lower arm P(y)-P(y_{x'}) exceeds the min
    // upper arm P(y_x).
    const auto b = pns_bounds({0.05, 0.0}, {0.45, 0.05, 0.45, 0.05});
    CHECK_FALSE(b.consistent);
    CHECK(b.lower >= 0.0);
    CHECK(b.upper <= 1.0);
}

TEST_CASE("invalid distributions are rejected") {
    CHECK_THROWS_AS(pns_bounds({1.2, 0.0}, {0.25, 0.25, 0.25, 0.25}), validation_error);
    CHECK_THROWS_AS(pns_bounds({0.5, -0.1}, {0.25, 0.25, 0.25, 0.25}), validation_error);
    CHECK_THROWS_AS(pns_bounds({0.5, 0.5}, {0.3, 0.3, 0.3, 0.3}), validation_error);
    CHECK_THROWS_AS(pns_bounds({0.5, 0.5}, {0.5, 0.5, 0.25, -0.25}), validation_error);
}
