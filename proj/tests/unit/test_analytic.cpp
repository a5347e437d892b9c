#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "qosc/analytic.hpp"
#include "qosc/errors.hpp"
#include "qosc/measures.hpp"
#include "qosc/model.hpp"

using namespace qosc;
using std::numbers::pi;

namespace {

DerivedParams derived(double lambda, Variant v, double g = 0.025) {
    ModelParams p;
    p.lambda = lambda;
    p.g = g;
    p.variant = v;
    return derive(validate(p));
}

constexpr CoherenceLabel kSingleFlips[] = {
    {QubitState::ee, QubitState::eg},
    {QubitState::ee, QubitState::ge},
    {QubitState::eg, QubitState::gg},
    {QubitState::ge, QubitState::gg},
};

} // namespace

TEST_CASE("coherence labels") {
    CHECK(CoherenceLabel::parse("eegg").str() == "eegg");
    CHECK(CoherenceLabel::parse("geeg").m == QubitState::ge);
    CHECK_THROWS_AS(CoherenceLabel::parse("eexg"), UnknownLabel);
    CHECK_THROWS_AS(CoherenceLabel::parse("eeg"), UnknownLabel);
    CHECK(kIndependentCoherences.size() == 6);
    for (const auto& mn : kIndependentCoherences) CHECK(mn.upper());
}

TEST_CASE("mode decoherence exponent") {
    const DerivedParams d = derived(0.25, Variant::Complete);
    CHECK(mode_decoherence_exponent(0.0, Branch::Plus, d) == 0.0);
    CHECK(mode_decoherence_exponent(2 * pi / d.Omega_plus, Branch::Plus, d) ==
          doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
    CHECK(mode_decoherence_exponent(2 * pi / d.Omega_minus, Branch::Minus, d) ==
          doctest::Approx(0.0).epsilon(1e-14).scale(1.0));

    const DerivedParams r = derived(0.25, Variant::Rwa);
    for (double t : {0.3, 1.7, 12.0}) {
        const double s = std::sin(r.Omega_minus * t / 2);
        CHECK(mode_decoherence_exponent(t, Branch::Minus, r) ==
              doctest::Approx(16 * r.lam_minus * r.lam_minus * s * s).epsilon(1e-14));
    }
}

TEST_CASE("dephasing factor examples") {
    const DerivedParams d = derived(0.25, Variant::Complete);
    const TransformedAmplitudes ta = transform_amplitudes({cplx(0.5, 0.2), cplx(-0.3, 0.0)}, d);
    for (const auto& mn : kIndependentCoherences) {
        CHECK(std::abs(dephasing_factor(mn, 0.0, d, ta, 1e-3) - 1.0) < 1e-15);
    }
    const double gamma = 5e-3;
    for (double t : {0.0, 1.0, 33.3, 250.0}) {
        const cplx f = dephasing_factor(CoherenceLabel::parse("egge"), t, d, ta, gamma);
        CHECK(std::abs(f) == doctest::Approx(std::exp(-2 * gamma * t)).epsilon(1e-12));
    }

    const DerivedParams free = derived(0.25, Variant::Complete, 0.0);
    const TransformedAmplitudes ta0 = transform_amplitudes({cplx(1.0), cplx(0.5)}, free);
    for (double t : {0.5, 4.0, 40.0}) {
        const cplx expected = std::exp(-2.0 * cplx(gamma, 1.0) * t);
        CHECK(std::abs(dephasing_factor(CoherenceLabel::parse("eegg"), t, free, ta0, gamma) - expected) <
              1e-12);
    }
    const auto lower = CoherenceLabel::parse("ggee");
    CHECK(std::abs(dephasing_factor(lower, 2.0, d, ta, gamma) -
                   std::conj(dephasing_factor(lower.swapped(), 2.0, d, ta, gamma))) < 1e-15);
}

TEST_CASE("displaced amplitudes") {
    const DerivedParams d = derived(0.25, Variant::Complete);
    const TransformedAmplitudes ta = transform_amplitudes({cplx(0.7, -0.1), cplx(0.2, 0.4)}, d);
    CHECK(std::abs(displaced_amplitudes(CoherenceLabel::parse("eegg"), 0.0, d, ta).plus.Y_m - ta.Z) < 1e-15);
    for (double t : {0.4, 3.0, 91.0}) {
        const ModeOverlapSpecs s = displaced_amplitudes(CoherenceLabel::parse("egee"), t, d, ta);
        CHECK(std::abs(s.plus.Y_m - ta.Z * std::exp(cplx(0.0, -d.Omega_plus * t))) < 1e-13);
        CHECK(std::abs(s.plus.xi - cplx(-d.r_plus) * std::exp(cplx(0.0, -2 * d.Omega_plus * t))) < 1e-15);
    }

    DerivedParams manual = d;
    manual.lam_plus = 0.5;
    manual.Omega_plus = 1.0;
    TransformedAmplitudes zero{};
    const ModeOverlapSpecs s = displaced_amplitudes(CoherenceLabel::parse("eegg"), pi, manual, zero);
    CHECK(std::abs(s.plus.Y_m - cplx(-2.0)) < 1e-14);
}

TEST_CASE("squeezed overlap against the number-state oracle") {
    CHECK(std::abs(squeezed_overlap({cplx(0.3, 0.1), cplx(0.3, 0.1), cplx(0.2, -0.1)}) - 1.0) < 1e-15);
    CHECK(std::abs(squeezed_overlap({0.0, 2.0, 0.0})) == doctest::Approx(0.135335).epsilon(1e-6));
    CHECK(std::abs(squeezed_overlap({0.0, 2.0, 0.0})) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const cplx ym(u(rng), u(rng)), yn(u(rng), u(rng));
        const cplx coherent = std::exp(-0.5 * (std::norm(ym) + std::norm(yn)) + std::conj(ym) * yn);
        CHECK(std::abs(squeezed_overlap({ym, yn, 0.0}) - coherent) < 1e-13);
        CHECK(std::abs(squeezed_overlap({ym, yn, 0.0}) - oracle::coherent_overlap_series(ym, yn)) < 1e-13);

        const cplx xi = 0.4 * cplx(u(rng), u(rng));
        const Eigen::VectorXcd vm = oracle::squeezed_coherent(ym, xi, 80);
        const Eigen::VectorXcd vn = oracle::squeezed_coherent(yn, xi, 80);
        CHECK(std::abs(squeezed_overlap({ym, yn, xi}) - vm.dot(vn)) < 1e-10);
    }
}

TEST_CASE("single-flip overlaps carry the decoherence exponent") {
    for (Variant v : {Variant::Complete, Variant::Rwa}) {
        const DerivedParams d = derived(0.3, v);
        const TransformedAmplitudes ta = transform_amplitudes({cplx(0.8, 0.3), cplx(-0.5, 0.1)}, d);
        for (double t : {0.7, 5.0, 17.3, 120.0}) {
            for (const auto& mn : kSingleFlips) {
                const ModeOverlapSpecs s = displaced_amplitudes(mn, t, d, ta);
                CHECK(std::norm(squeezed_overlap(s.plus)) ==
                      doctest::Approx(std::exp(-mode_decoherence_exponent(t, Branch::Plus, d))).epsilon(1e-10));
                CHECK(std::norm(squeezed_overlap(s.minus)) ==
                      doctest::Approx(std::exp(-mode_decoherence_exponent(t, Branch::Minus, d))).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("reduced state at t = 0 and diagonal entries") {
    const DerivedParams d = derived(0.48, Variant::Complete);
    const TransformedAmplitudes ta = transform_amplitudes({cplx(2.0), cplx(2.0)}, d);
    const QubitDensityMatrix rho0 = qubit_density_matrix(0.0, d, ta, 5e-5);
    CHECK((rho0 - QubitDensityMatrix::Constant(0.25)).cwiseAbs().maxCoeff() < 1e-15);
    for (double t : {0.1, 3.0, 77.0, 1234.5}) {
        const QubitDensityMatrix rho = qubit_density_matrix(t, d, ta, 5e-5);
        for (int i = 0; i < 4; ++i) CHECK(rho(i, i) == cplx(0.25));
    }
}

TEST_CASE("purity closed form") {
    const DerivedParams d = derived(0.25, Variant::Complete);
    CHECK(purity_closed_form(0.0, d, 5e-5) == 1.0);
    const DerivedParams free = derived(0.25, Variant::Complete, 0.0);
    for (double t : {1.0, 100.0, 1e4}) {
        const double gamma = 5e-5;
        CHECK(purity_closed_form(t, free, gamma) ==
              doctest::Approx(0.25 + 0.5 * std::exp(-2 * gamma * t) + 0.25 * std::exp(-4 * gamma * t))
                  .epsilon(1e-14));
    }
}

TEST_CASE("property: reduced state invariants on random parameters") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const Variant v = trial % 2 ? Variant::Complete : Variant::Rwa;
        const double lam = (v == Variant::Complete ? 0.49 : 0.95) * u(rng);
        ModelParams p;
        p.lambda = lam;
        p.g = 0.1 * u(rng);
        p.mu = 2 * u(rng) - 1;
        p.variant = v;
        const double gamma = 1e-3 * u(rng);
        const DerivedParams d = derive(validate(p));
        const ModeAmplitudes amps{cplx(3 * u(rng) - 1.5, u(rng) - 0.5), cplx(3 * u(rng) - 1.5, u(rng) - 0.5)};
        const ModeAmplitudes other{cplx(0.0), cplx(1.0, -1.0)};
        const TransformedAmplitudes ta = transform_amplitudes(amps, d);
        const TransformedAmplitudes tb = transform_amplitudes(other, d);
        const double t = 500 * u(rng);

        const QubitDensityMatrix rho = qubit_density_matrix(t, d, ta, gamma);
        CHECK_NOTHROW(check_density_matrix(rho));
        Eigen::SelfAdjointEigenSolver<QubitDensityMatrix> es(rho);
        CHECK(es.eigenvalues().minCoeff() > -1e-10);

        const double closed = purity_closed_form(t, d, gamma);
        CHECK(closed >= 0.25);
        CHECK(closed <= 1.0);
        CHECK(std::abs(closed - oracle::trace_square(rho)) < 1e-12);

        double off = 0.0;
        for (const auto& mn : kIndependentCoherences)
            off += std::norm(rho(static_cast<int>(mn.m), static_cast<int>(mn.n)));
        CHECK(std::abs(2 * off - (closed - 0.25)) < 1e-12);

        const QubitDensityMatrix rho_b = qubit_density_matrix(t, d, tb, gamma);
        CHECK(std::abs(oracle::trace_square(rho) - oracle::trace_square(rho_b)) < 1e-12);
        CHECK(std::abs(eof(rho) - eof(rho_b)) < 1e-8);
    }
}

TEST_CASE("property: without mode coupling and dephasing the purity repeats with 2 pi / omega") {
    const DerivedParams d = derived(0.0, Variant::Complete);
    const double period = 2 * pi / 1.0;
    for (double t : {0.1, 0.9, 2.5, 4.4}) {
        for (int k : {1, 3, 50}) {
            CHECK(std::abs(purity_closed_form(t, d, 0.0) - purity_closed_form(t + k * period, d, 0.0)) < 1e-9);
        }
    }
}
