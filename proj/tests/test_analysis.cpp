#include <doctest.h>

#include <cmath>
#include <numbers>

#include "landauer/analysis.hpp"
#include "test_util.hpp"

using namespace landauer;
using analysis::RegionLabel;
using linalg::Mat2;
using model::InteractionKind;
using model::InteractionModel;

namespace {

double bloch_entropy(double v) {
    double s = 0.0;
    for (double l : {0.5 * (1.0 + v), 0.5 * (1.0 - v)})
        if (l > 0.0) s -= l * std::log(l);
    return s;
}

} // namespace

TEST_CASE("b_max closed form") {
    CHECK(analysis::b_max(0.0, 1.7) == 0.0);

    const double oracle = -std::log(1.0 - std::tanh(1.0));
    CHECK(analysis::b_max(1.0, 1.0) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(oracle == doctest::Approx(1.43378).epsilon(1e-4));

    // Negative z-polarization makes the bound negative for every beta.
    for (double beta : {0.1, 0.5, 1.0, 2.0, 10.0})
        for (double vz : {-0.1, -0.5, -1.0}) CHECK(analysis::b_max(vz, beta) < 0.0);

    // Sign matches sign(v_z) everywhere.
    for (double beta : {0.1, 1.0, 10.0})
        for (int i = -20; i <= 20; ++i) {
            const double vz = i / 20.0;
            const double b = analysis::b_max(vz, beta);
            if (vz > 0.0) CHECK(b > 0.0);
            if (vz < 0.0) CHECK(b < 0.0);
            if (vz == 0.0) CHECK(b == 0.0);
        }

    CHECK_THROWS_AS(analysis::b_max(1.2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(analysis::b_max(0.5, -1.0), std::invalid_argument);
}

TEST_CASE("ds_max closed form and decomposition") {
    SUBCASE("fixed values") {
        const auto r = analysis::ds_max_terms(0.0, 1.0);
        CHECK(r.ds_v == 0.0);
        const double oracle = std::tanh(1.0) - std::log(std::cosh(1.0));
        CHECK(r.ds_beta == doctest::Approx(oracle).epsilon(1e-12));
        CHECK(oracle == doctest::Approx(0.32781).epsilon(1e-4));

        // Pure states: the v -> 1 limit of ds_v is ln 2, so ds_max <= 0.
        for (double beta : {0.1, 1.0, 5.0, 10.0}) {
            const auto p = analysis::ds_max_terms(1.0, beta);
            CHECK(p.ds_v == doctest::Approx(std::log(2.0)).epsilon(1e-14));
            CHECK(p.value <= 0.0);
        }

        // Hot limit: both terms vanish.
        CHECK(analysis::ds_max_terms(0.0, 1e-8).value == doctest::Approx(0.0).epsilon(1e-10));
    }

    SUBCASE("identity with the entropy difference at the swap") {
        // ds_beta - ds_v == S(bloch v) - S(thermal), an independent route
        // through the eigenvalue entropies.
        for (double beta : {0.1, 0.5, 1.0, 2.0, 10.0})
            for (int iv = 0; iv <= 40; ++iv) {
                const double v = iv / 40.0;
                const auto r = analysis::ds_max_terms(v, beta);
                const double oracle = bloch_entropy(v) - bloch_entropy(std::tanh(beta));
                CHECK(std::abs(r.value - oracle) < 1e-12);
            }
    }

    SUBCASE("structure: exact decomposition, plateaus, monotonicity") {
        double prev_beta_term = -1.0;
        for (double beta : {0.05, 0.2, 0.7, 1.5, 3.0, 6.0, 12.0}) {
            const auto r = analysis::ds_max_terms(0.3, beta);
            CHECK(r.value == r.ds_beta - r.ds_v); // exact by construction
            CHECK(r.ds_beta >= 0.0);
            CHECK(r.ds_beta <= std::log(2.0) + 1e-15);
            CHECK(r.ds_beta > prev_beta_term);
            prev_beta_term = r.ds_beta;
        }
        double prev_v_term = -1.0;
        for (int iv = 0; iv <= 20; ++iv) {
            const auto r = analysis::ds_max_terms(iv / 20.0, 1.0);
            CHECK(r.ds_v >= 0.0);
            CHECK(r.ds_v <= std::log(2.0) + 1e-15);
            CHECK(r.ds_v > prev_v_term);
            prev_v_term = r.ds_v;
        }
    }
}

TEST_CASE("max_point bundles the swap-time quantities") {
    const auto r = analysis::max_point(0.0, 0.0, 1.0);
    CHECK(r.beta_q_max == doctest::Approx(1.0 + std::tanh(1.0)).epsilon(1e-14));
    CHECK(r.b_max == doctest::Approx(-std::log(1.0 - std::tanh(1.0))).epsilon(1e-12));
    CHECK(r.ds_max == r.ds_beta - r.ds_v);
}

TEST_CASE("Clausius thresholds") {
    SUBCASE("XX") {
        CHECK(analysis::clausius_threshold(InteractionKind::XX, 1e-9) ==
              doctest::Approx(0.5).epsilon(1e-9));
        CHECK(analysis::clausius_threshold(InteractionKind::XX, 10.0) ==
              doctest::Approx(0.99999).epsilon(1e-4));
        CHECK(analysis::clausius_threshold(InteractionKind::XX, 1.0) ==
              doctest::Approx(0.5 * (1.0 + std::tanh(1.0))).epsilon(1e-14));
    }

    SUBCASE("Ising closed form against the independent long-time average") {
        // Second route: the dephasing average transfers populations at rate
        // J^2/(J^2+4) in the even sector and 1/2 in the odd sector; solving
        // mean heat = 0 for alpha^2 gives (p0 - g p1)/(1 - g) with
        // g = 1 - 2 atan(J_max/2)/J_max.
        for (double beta : {0.5, 1.0, 2.0})
            for (double jm : {0.5, 1.0, 2.0}) {
                const double g = 1.0 - 2.0 * std::atan(jm / 2.0) / jm;
                const auto w = model::thermal_weights(beta);
                const double oracle = (w.p_ground - g * w.p_excited) / (1.0 - g);
                const double thr = analysis::clausius_threshold(InteractionKind::Ising, beta, jm);
                if (oracle <= 1.0)
                    CHECK(thr == doctest::Approx(oracle).epsilon(1e-12));
                else
                    CHECK(thr == 1.0);
            }

        CHECK(analysis::clausius_threshold(InteractionKind::Ising, 1.0, 1.0) ==
              doctest::Approx(0.94051).epsilon(1e-4));
        // Strong coupling caps at one.
        CHECK(analysis::clausius_threshold(InteractionKind::Ising, 1.0, 10.0) == 1.0);

        CHECK_THROWS_AS(analysis::clausius_threshold(InteractionKind::Ising, 1.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(analysis::clausius_threshold(InteractionKind::Generic, 1.0, 1.0),
                        std::invalid_argument);
    }

    SUBCASE("Ising threshold grows with beta and with j_max") {
        double prev = 0.0;
        for (double beta : {0.25, 0.5, 1.0, 2.0}) {
            const double t = analysis::clausius_threshold(InteractionKind::Ising, beta, 1.0);
            CHECK(t > prev);
            prev = t;
        }
        prev = 0.0;
        for (double jm : {0.5, 1.0, 1.5, 2.0}) {
            const double t = analysis::clausius_threshold(InteractionKind::Ising, 0.5, jm);
            CHECK(t > prev);
            prev = t;
        }
    }
}

TEST_CASE("boundary curve") {
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);

    for (double beta : {0.1, 1.0, 10.0}) {
        const auto curve = analysis::boundary_curve(beta, grid);
        CHECK(!curve.points.empty());
        for (const auto& p : curve.points) {
            const double dmax = std::sqrt(p.alpha_sq * (1.0 - p.alpha_sq));
            CHECK(p.delta >= 0.0);
            CHECK(p.delta <= dmax + 1e-12);
            const double vz = 1.0 - 2.0 * p.alpha_sq;
            const double v = std::min(1.0, std::hypot(2.0 * p.delta, vz));
            CHECK(std::abs(analysis::b_max(vz, beta) - analysis::ds_max_terms(v, beta).value) <
                  1e-9);
        }
    }

    // Cold environment: the crossover starts at small alpha^2 (the leftmost
    // region is thermodynamic-tighter).
    const auto cold = analysis::boundary_curve(10.0, grid);
    CHECK(cold.points.front().alpha_sq < 0.3);

    // Past alpha^2 = 0.5 the thermodynamic maximum is negative, so no
    // emitted point there can carry b_max > 0.
    for (double beta : {0.1, 1.0, 10.0})
        for (const auto& p : analysis::boundary_curve(beta, grid).points)
            if (p.alpha_sq > 0.5) CHECK(analysis::b_max(1.0 - 2.0 * p.alpha_sq, beta) < 0.0);

    // No admissible coherence range at the edges, and b_max < 0 past 0.5
    // with ds_max > 0 at delta = 0 keeps f one-signed there for beta = 10.
    for (double skipped : cold.skipped) {
        CHECK((skipped < cold.points.front().alpha_sq ||
               skipped > cold.points.back().alpha_sq));
    }
}

TEST_CASE("region classification") {
    // Heat changes sign at (1 + tanh beta)/2 = 0.88080 for beta = 1.
    CHECK(analysis::classify_max_point(0.9, 0.0, 1.0) == RegionLabel::NegativeHeat);
    CHECK(analysis::classify_max_point(0.9, 0.7, 1.0) == RegionLabel::NegativeHeat);

    // Cold environment, predominantly excited: thermodynamic wins.
    CHECK(analysis::classify_max_point(0.1, 0.0, 10.0) == RegionLabel::ThermoTighter);

    // Maximally mixed: b_max = 0 while ds_max = ds_beta > 0.
    for (double beta : {0.1, 1.0, 10.0})
        CHECK(analysis::classify_max_point(0.5, 0.0, beta) == RegionLabel::EntropicTighter);

    // The thermodynamic bound dominates uniformly in temperature only up to
    // alpha^2 around 0.277; check a safe sub-box...
    for (double beta : {0.1, 0.5, 1.0, 2.0, 10.0})
        for (int ia = 0; ia <= 27; ++ia)
            for (int iw = 0; iw <= 10; ++iw) {
                const auto r = analysis::max_point(ia / 100.0, iw / 10.0, beta);
                CHECK(r.b_max > r.ds_max);
            }
    // ...and pin the counterexample past it: at beta = 10, w = 0 the
    // entropic bound is already tighter at alpha^2 = 0.45.
    const auto c = analysis::max_point(0.45, 0.0, 10.0);
    CHECK(c.ds_max > c.b_max);
    CHECK(analysis::classify_max_point(0.45, 0.0, 10.0) == RegionLabel::EntropicTighter);
}

TEST_CASE("averaged bounds") {
    SUBCASE("deterministic for a fixed seed") {
        const auto a = analysis::averaged_bounds(InteractionKind::Ising, 0.3, 0.5, 1.0, 1.0, 64,
                                                 100.0, 7);
        const auto b = analysis::averaged_bounds(InteractionKind::Ising, 0.3, 0.5, 1.0, 1.0, 64,
                                                 100.0, 7);
        CHECK(a.mean_beta_q == b.mean_beta_q);
        CHECK(a.mean_ds == b.mean_ds);
        CHECK(a.mean_b == b.mean_b);
        const auto cseed = analysis::averaged_bounds(InteractionKind::Ising, 0.3, 0.5, 1.0, 1.0,
                                                     64, 100.0, 8);
        CHECK(cseed.mean_beta_q != a.mean_beta_q);
    }

    SUBCASE("n = 1 equals the pointwise evaluation at the drawn coupling") {
        auto g = testutil::stream(5, 0);
        const double j = 2.0 * g.u01();
        const auto rec =
            analysis::averaged_bounds(InteractionKind::XX, 0.25, 0.5, 1.5, 2.0, 1, 3.0, 5);
        const auto point = engine::evaluate_bounds(InteractionModel::xx(j),
                                                   model::system_state({0.25, 0.5}), 1.5, 3.0);
        CHECK(rec.mean_beta_q == point.beta_q);
        CHECK(rec.mean_ds == point.delta_s);
        CHECK(rec.mean_b == point.thermo_b);
    }

    SUBCASE("Ising: averaged thermodynamic bound goes negative past alpha^2 = 0.5") {
        // delta = 0.1 at alpha^2 = 0.9 corresponds to w = 1/3.
        const double w = 0.1 / std::sqrt(0.9 * 0.1);
        const auto rec =
            analysis::averaged_bounds(InteractionKind::Ising, 0.9, w, 1.0, 1.0, 500, 100.0, 0);
        CHECK(rec.mean_b < 0.0);
        // The averaged record still obeys the bound ordering.
        CHECK(rec.mean_ds <= rec.mean_beta_q + 1e-9);
        CHECK(rec.mean_b <= rec.mean_beta_q + 1e-9);
    }

    SUBCASE("Monte-Carlo heat sign change brackets the Ising threshold") {
        const double thr = analysis::clausius_threshold(InteractionKind::Ising, 1.0, 1.0);
        auto mean_q = [](double a) {
            return analysis::averaged_bounds(InteractionKind::Ising, a, 0.0, 1.0, 1.0, 10000,
                                             1000.0, 42)
                .mean_beta_q;
        };
        double lo = 0.0, hi = 1.0;
        REQUIRE(mean_q(lo) > 0.0);
        REQUIRE(mean_q(hi) < 0.0);
        for (int it = 0; it < 12; ++it) {
            const double mid = 0.5 * (lo + hi);
            (mean_q(mid) > 0.0 ? lo : hi) = mid;
        }
        CHECK(std::abs(0.5 * (lo + hi) - thr) <= 0.02);
    }

    SUBCASE("coherence sensitivity of the averaged quantities (generic)") {
        // Measured, not asserted: whether the heat and thermodynamic bound
        // stay coherence-independent for generic couplings is reported here.
        double dev_q = 0.0, dev_b = 0.0, dev_ds = 0.0;
        const auto base = analysis::averaged_bounds(InteractionKind::Generic, 0.35, 0.0, 1.0, 1.0,
                                                    64, 50.0, 3);
        for (double w : {0.25, 0.5, 0.75, 1.0}) {
            const auto r = analysis::averaged_bounds(InteractionKind::Generic, 0.35, w, 1.0, 1.0,
                                                     64, 50.0, 3);
            dev_q = std::max(dev_q, std::abs(r.mean_beta_q - base.mean_beta_q));
            dev_b = std::max(dev_b, std::abs(r.mean_b - base.mean_b));
            dev_ds = std::max(dev_ds, std::abs(r.mean_ds - base.mean_ds));
        }
        MESSAGE("generic-coupling deviation across w: beta_q " << dev_q << ", B " << dev_b
                                                               << ", dS " << dev_ds);
        CHECK(dev_ds > 0.0); // the entropic bound must react to coherences
    }
}
