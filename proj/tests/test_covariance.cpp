#include <doctest.h>

#include <cmath>
#include <random>

#include "gqd/channels.hpp"
#include "gqd/covariance.hpp"
#include "gqd/states.hpp"

using namespace gqd;

namespace {

// Random physical standard-form covariances: squeezed thermal states pushed
// through a random local channel.
TwoModeCovariance random_state(std::mt19937& rng) {
    std::uniform_real_distribution<double> ur(0.0, 1.5);
    std::uniform_real_distribution<double> un(0.0, 20.0);
    std::uniform_int_distribution<int> family(0, 2);
    const TwoModeCovariance base =
        sts_covariance({ur(rng), un(rng), un(rng)});
    switch (family(rng)) {
        case 0: {
            std::uniform_real_distribution<double> ue(0.0, 1.0);
            return apply_channel(base, ThermalNoise{ue(rng), un(rng)});
        }
        case 1: {
            std::uniform_real_distribution<double> uk(1.0, 4.0);
            return apply_channel(base, Amplifier{uk(rng), un(rng)});
        }
        default: {
            std::uniform_real_distribution<double> uc(0.0, 5.0);
            return apply_channel(base, ClassicalNoise{uc(rng)});
        }
    }
}

}  // namespace

TEST_SUITE("covariance") {

TEST_CASE("entropy_h at exact points") {
    CHECK(entropy_h(0.5) == 0.0);
    CHECK(entropy_h(1.5) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
    // 40-digit reference: h(sinh^2(1) + 1/2)
    CHECK(entropy_h(std::sinh(1.0) * std::sinh(1.0) + 0.5) ==
          doctest::Approx(1.6198220928977027).epsilon(1e-13));
}

TEST_CASE("entropy_h boundary handling") {
    // Just above the boundary the dropped term is below 3e-11.
    CHECK(std::abs(entropy_h(0.5 + 1e-15)) < 1e-12);
    CHECK(std::abs(entropy_h(0.5 + 1e-13)) < 1e-10);
    // Within the tolerance window: clamped, no throw.
    CHECK(entropy_h(0.5 - 0.5e-9) == 0.0);
    // Below the window: domain error.
    CHECK_THROWS_AS(entropy_h(0.4999), std::domain_error);
    CHECK_THROWS_AS(entropy_h(0.0), std::domain_error);
    CHECK_THROWS_AS(entropy_h(-2.0), std::domain_error);
}

TEST_CASE("entropy_h is strictly increasing") {
    std::mt19937 rng(20260814);
    std::uniform_real_distribution<double> ux(0.5, 100.0);
    for (int i = 0; i < 200; ++i) {
        double x = ux(rng), y = ux(rng);
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        CHECK(entropy_h(x) < entropy_h(y));
    }
}

TEST_CASE("symplectic spectrum of vacuum and pure states") {
    const SymplecticData vac = symplectic_data({0.5, 0.5, 0.0, 0.0});
    CHECK(vac.d_minus == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(vac.d_plus == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(vac.i4 == doctest::Approx(0.0625).epsilon(1e-14));

    // Two-mode squeezed vacuum is pure: d_minus = d_plus = 1/2 regardless of
    // how large a and c grow; the product form must not lose this.
    for (const double r : {0.3, 0.9, 1.5, 2.5}) {
        const SymplecticData sd = symplectic_data(sts_covariance({r, 0.0, 0.0}));
        CHECK(std::abs(sd.d_minus - 0.5) < 1e-12);
        CHECK(std::abs(sd.d_plus - 0.5) < 1e-12);
    }
}

TEST_CASE("symplectic invariant identities on random states") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const TwoModeCovariance cov = random_state(rng);
        const SymplecticData sd = symplectic_data(cov);
        const double prod = sd.d_minus * sd.d_minus * sd.d_plus * sd.d_plus;
        const double sum = sd.d_minus * sd.d_minus + sd.d_plus * sd.d_plus;
        CHECK(prod == doctest::Approx(sd.i4).epsilon(1e-10));
        CHECK(sum == doctest::Approx(sd.delta).epsilon(1e-12));
        CHECK(sd.d_minus <= sd.d_plus);
    }
}

TEST_CASE("inconsistent covariance is rejected") {
    // (a + b)^2 < 4 c^2 makes delta^2 - 4 i4 = -7 here.
    CHECK_THROWS_AS(symplectic_data({1.0, 2.0, -2.0, 2.0}), unphysical_error);
}

TEST_CASE("physicality check") {
    CHECK(physicality_check({0.5, 0.5, 0.0, 0.0}).physical);
    CHECK(physicality_check(sts_covariance({1.0, 2.0, 3.0})).physical);

    const PhysicalityReport bad = physicality_check({0.4, 1.0, 0.0, 0.0});
    CHECK_FALSE(bad.physical);
    CHECK_FALSE(bad.diagnostic.empty());

    // Uncertainty violation with legal diagonals: too much correlation.
    const PhysicalityReport corr = physicality_check({1.0, 1.0, -0.9, 0.9});
    CHECK_FALSE(corr.physical);

    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        CHECK(physicality_check(random_state(rng)).physical);
    }
}

TEST_CASE("discord of product states is exactly zero") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> un(0.0, 50.0);
    for (int i = 0; i < 50; ++i) {
        const TwoModeCovariance cov = sts_covariance({0.0, un(rng), un(rng)});
        CHECK(gaussian_discord(cov, MeasuredMode::mode2) == 0.0);
        CHECK(gaussian_discord(cov, MeasuredMode::mode1) == 0.0);
        CHECK(mutual_information(cov) == 0.0);
    }
}

TEST_CASE("discord of pure states equals the marginal entropy") {
    for (const double r : {0.2, 0.5, 1.0, 1.5}) {
        const TwoModeCovariance cov = sts_covariance({r, 0.0, 0.0});
        const double expected = entropy_h(std::sinh(r) * std::sinh(r) + 0.5);
        CHECK(gaussian_discord(cov, MeasuredMode::mode2) ==
              doctest::Approx(expected).epsilon(1e-10));
        CHECK(gaussian_discord(cov, MeasuredMode::mode1) ==
              doctest::Approx(expected).epsilon(1e-10));
        CHECK(mutual_information(cov) ==
              doctest::Approx(2.0 * expected).epsilon(1e-10));
    }
}

TEST_CASE("discord reference values at r = 1") {
    // 40-digit evaluations of the closed form, n1 = n2 = N.
    struct Ref {
        double n;
        double d;
    };
    const Ref refs[] = {
        {1.0, 0.6955006774},
        {10.0, 0.1489739191839008},
        {50.0, 0.0337595772203},
        {100.0, 0.01717439158},
        {1000.0, 0.00174505980339},
    };
    for (const Ref& ref : refs) {
        const double d =
            gaussian_discord(sts_covariance({1.0, ref.n, ref.n}));
        CHECK(d == doctest::Approx(ref.d).epsilon(1e-9));
    }
}

TEST_CASE("discord is nonnegative and symmetric states have equal directions") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ur(0.0, 1.5);
    std::uniform_real_distribution<double> un(0.0, 30.0);
    for (int i = 0; i < 100; ++i) {
        const double n = un(rng);
        const TwoModeCovariance cov = sts_covariance({ur(rng), n, n});
        const double dl = gaussian_discord(cov, MeasuredMode::mode2);
        const double dr = gaussian_discord(cov, MeasuredMode::mode1);
        CHECK(dl >= 0.0);
        CHECK(dl == doctest::Approx(dr).epsilon(1e-10));
    }
}

TEST_CASE("direction matters for channel-evolved asymmetric states") {
    const TwoModeCovariance cov = apply_channel(
        sts_covariance({1.0, 10.0, 10.0}), ThermalNoise{0.05, 0.0});
    const double dl = gaussian_discord(cov, MeasuredMode::mode2);
    const double dr = gaussian_discord(cov, MeasuredMode::mode1);
    CHECK(std::abs(dl - dr) > 1e-3);
}

TEST_CASE("discord rejects unphysical input") {
    CHECK_THROWS_AS(gaussian_discord({0.4, 1.0, 0.0, 0.0}), unphysical_error);
    CHECK_THROWS_AS(mutual_information({1.0, 1.0, -0.9, 0.9}), unphysical_error);
    CHECK_THROWS_AS(entropy_report({0.3, 0.3, 0.0, 0.0}), unphysical_error);
}

TEST_CASE("mutual information bounds discord on random states") {
    std::mt19937 rng(19);
    for (int i = 0; i < 100; ++i) {
        const TwoModeCovariance cov = random_state(rng);
        const double mi = mutual_information(cov);
        const double d = gaussian_discord(cov);
        CHECK(mi >= 0.0);
        CHECK(d >= 0.0);
        CHECK(d <= mi + 1e-9);
    }
}

TEST_CASE("entropy report ties the pieces together") {
    const TwoModeCovariance cov =
        apply_channel(sts_covariance({1.0, 2.0, 5.0}), ThermalNoise{0.3, 1.0});
    const EntropyReport er = entropy_report(cov);
    const SymplecticData sd = symplectic_data(cov);
    CHECK(er.s1 == doctest::Approx(entropy_h(cov.a)).epsilon(1e-14));
    CHECK(er.s2 == doctest::Approx(entropy_h(cov.b)).epsilon(1e-14));
    CHECK(er.s12 ==
          doctest::Approx(entropy_h(sd.d_minus) + entropy_h(sd.d_plus)).epsilon(1e-14));
    CHECK(er.mutual_information ==
          doctest::Approx(er.s1 + er.s2 - er.s12).epsilon(1e-12));
    CHECK(er.discord_left == doctest::Approx(gaussian_discord(cov)).epsilon(1e-14));
    CHECK(er.discord_right ==
          doctest::Approx(gaussian_discord(cov, MeasuredMode::mode1)).epsilon(1e-14));
}

}  // TEST_SUITE
