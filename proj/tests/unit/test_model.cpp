#include <cmath>
#include <limits>

#include <doctest.h>

#include "oracles.hpp"
#include "qosc/errors.hpp"
#include "qosc/model.hpp"

using namespace qosc;

namespace {

ModelParams params(double lambda, Variant v) {
    ModelParams p;
    p.lambda = lambda;
    p.variant = v;
    return p;
}

} // namespace

TEST_CASE("validate accepts the stable region and rejects the rest") {
    CHECK_NOTHROW(validate(params(0.48, Variant::Complete)));
    CHECK_THROWS_AS(validate(params(0.5, Variant::Complete)), StabilityError);
    CHECK_NOTHROW(validate(params(0.6, Variant::Rwa)));
    CHECK_THROWS_AS(validate(params(1.0, Variant::Rwa)), StabilityError);

    ModelParams p;
    p.omega = 0.0;
    CHECK_THROWS_AS(validate(p), DomainError);
    p = ModelParams{};
    p.g = -0.1;
    CHECK_THROWS_AS(validate(p), DomainError);
    p = ModelParams{};
    p.gamma = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(validate(p), DomainError);
}

TEST_CASE("stability error names lambda") {
    try {
        validate(params(0.5, Variant::Complete));
        FAIL("expected StabilityError");
    } catch (const StabilityError& e) {
        CHECK(std::string(e.what()).find("0.5") != std::string::npos);
    }
}

TEST_CASE("lambda = 0 removes every coupling-dependent shift") {
    for (Variant v : {Variant::Complete, Variant::Rwa}) {
        const DerivedParams d = derive(validate(params(0.0, v)));
        CHECK(d.delta == doctest::Approx(0.025).epsilon(1e-15));
        CHECK(d.r_plus == 0.0);
        CHECK(d.r_minus == 0.0);
        CHECK(d.Omega_plus == 1.0);
        CHECK(d.Omega_minus == 1.0);
        CHECK(d.chi == 0.0);
        CHECK(d.omega0_eff == doctest::Approx(1.0 - 4 * 0.025 * 0.025).epsilon(1e-15));
        CHECK(d.lam_plus == doctest::Approx(0.025 / std::sqrt(2.0)).epsilon(1e-15));
    }
    CHECK(derive(validate(params(0.0, Variant::Complete))) == derive(validate(params(0.0, Variant::Rwa))));
}

TEST_CASE("rwa example values") {
    const DerivedParams d = derive(validate(params(0.25, Variant::Rwa)));
    CHECK(d.delta == doctest::Approx(0.02).epsilon(1e-14));
    CHECK(d.Omega_plus == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(d.Omega_minus == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(d.chi == doctest::Approx(2 * 0.025 * 0.025 * (1 / 0.75 - 1 / 1.25)).epsilon(1e-12));
    CHECK(d.chi == doctest::Approx(6.6667e-4).epsilon(1e-4));
    CHECK(d.omega0_eff == doctest::Approx(0.998).epsilon(1e-14));
    CHECK(d.r_plus == 0.0);
    CHECK(d.r_minus == 0.0);
}

TEST_CASE("complete-variant normal modes match the classical dynamical matrix") {
    for (double lam : {0.05, 0.25, 0.4, 0.48}) {
        const DerivedParams d = derive(validate(params(lam, Variant::Complete)));
        const auto [hi, lo] = oracle::quadrature_normal_modes(1.0, lam);
        CHECK(d.Omega_plus == doctest::Approx(hi).epsilon(1e-12));
        CHECK(d.Omega_minus == doctest::Approx(lo).epsilon(1e-12));
    }
    const DerivedParams d = derive(validate(params(0.25, Variant::Complete)));
    CHECK(d.Omega_plus == doctest::Approx(1.224745).epsilon(1e-6));
    CHECK(d.Omega_minus == doctest::Approx(0.707107).epsilon(1e-6));
}

TEST_CASE("the full-log squeeze convention gives different frequencies") {
    const ValidatedParams vp = validate(params(0.25, Variant::Complete));
    const DerivedParams q = derive(vp, SqueezeConvention::QuarterLog);
    const DerivedParams f = derive(vp, SqueezeConvention::FullLog);
    CHECK(f.r_plus == doctest::Approx(4 * q.r_plus));
    CHECK(std::abs(f.Omega_minus - q.Omega_minus) > 0.1);
}

TEST_CASE("property: normal-mode combinations are monotone and the soft mode closes") {
    double prev_prod = 2.0, prev_sum = 0.0;
    for (int k = 0; k < 200; ++k) {
        const double lam = 0.4999 * k / 199.0;
        const DerivedParams d = derive(validate(params(lam, Variant::Complete)));
        const double prod = d.Omega_plus * d.Omega_minus;
        const double sum = d.Omega_plus * d.Omega_plus + d.Omega_minus * d.Omega_minus;
        CHECK(prod <= prev_prod);
        CHECK(sum >= prev_sum - 1e-12);
        prev_prod = prod;
        prev_sum = sum;
    }
    const DerivedParams edge = derive(validate(params(0.5 - 1e-9, Variant::Complete)));
    CHECK(edge.Omega_minus < 1e-3);
}

TEST_CASE("property: chi is positive for lambda > 0 and vanishes with lambda") {
    for (Variant v : {Variant::Complete, Variant::Rwa}) {
        double prev = 0.0;
        for (double lam : {1e-8, 1e-4, 0.01, 0.1, 0.3, 0.45}) {
            const double chi = derive(validate(params(lam, v))).chi;
            CHECK(chi > 0.0);
            CHECK(chi > prev);
            prev = chi;
        }
        CHECK(derive(validate(params(1e-10, v))).chi < 1e-12);
    }
}

TEST_CASE("property: derive is deterministic and rwa has no squeezing") {
    for (double lam : {0.0, 0.1, 0.33, 0.9}) {
        const ValidatedParams vp = validate(params(lam, Variant::Rwa));
        CHECK(derive(vp) == derive(vp));
        CHECK(derive(vp).r_plus == 0.0);
        CHECK(derive(vp).Omega_minus > 0.0);
    }
}
