#include <cmath>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "qosc/errors.hpp"
#include "qosc/measures.hpp"

using namespace qosc;

TEST_CASE("reference states") {
    const QubitDensityMatrix bell = oracle::bell_phi_plus();
    CHECK(purity(bell) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(concurrence(bell) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eof(bell) == doctest::Approx(1.0).epsilon(1e-12));

    const QubitDensityMatrix mixed = QubitDensityMatrix::Identity() / 4.0;
    CHECK(purity(mixed) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(concurrence(mixed) == 0.0);
    CHECK(eof(mixed) == 0.0);

    const QubitDensityMatrix w = oracle::werner(0.6);
    CHECK(purity(w) == doctest::Approx(0.36 + 2 * 0.6 * 0.4 / 4 + 0.16 / 4).epsilon(1e-14));
    CHECK(purity(w) == doctest::Approx(0.52).epsilon(1e-14));
    CHECK(concurrence(w) == doctest::Approx((3 * 0.6 - 1) / 2).epsilon(1e-12));
    CHECK(eof(w) == doctest::Approx(oracle::h2((1 + std::sqrt(1 - 0.16)) / 2)).epsilon(1e-12));
    CHECK(eof(w) == doctest::Approx(0.25023).epsilon(1e-4));
}

TEST_CASE("binary entropy endpoints") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eof_from_concurrence(0.0) == 0.0);
}

TEST_CASE("invalid inputs are rejected") {
    QubitDensityMatrix rho = QubitDensityMatrix::Identity() / 2.0;
    CHECK_THROWS_AS(check_density_matrix(rho), InvalidState);
    rho = QubitDensityMatrix::Identity() / 4.0;
    rho(0, 1) = cplx(0.1, 0.0);
    CHECK_THROWS_AS(check_density_matrix(rho), InvalidState);
    rho = QubitDensityMatrix::Identity() / 4.0;
    rho(0, 0) = std::nan("");
    CHECK_THROWS_AS(concurrence(rho), InvalidState);
    // Hermitian, unit trace but strongly non-positive.
    rho = QubitDensityMatrix::Zero();
    rho(0, 0) = rho(3, 3) = 0.5;
    rho(0, 3) = rho(3, 0) = 2.0;
    CHECK_THROWS_AS(concurrence(rho), InvalidState);
}

TEST_CASE("property: local unitaries leave concurrence and eof unchanged") {
    std::mt19937_64 rng(3);
    const QubitDensityMatrix states[] = {oracle::werner(0.6), oracle::werner(0.9), oracle::bell_phi_plus()};
    for (const auto& rho : states) {
        const double c0 = concurrence(rho);
        const double e0 = eof(rho);
        for (int k = 0; k < 100; ++k) {
            const Eigen::Matrix4cd U = oracle::kron2(oracle::random_unitary(rng), oracle::random_unitary(rng));
            const QubitDensityMatrix r = U * rho * U.adjoint();
            CHECK(std::abs(concurrence(r) - c0) < 1e-10);
            CHECK(std::abs(eof(r) - e0) < 1e-10);
        }
    }
}

TEST_CASE("property: product states have zero concurrence") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        auto qubit = [&] {
            const Eigen::Matrix2cd U = oracle::random_unitary(rng);
            Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
            const double p = u(rng);
            d(0, 0) = p;
            d(1, 1) = 1 - p;
            return Eigen::Matrix2cd(U * d * U.adjoint());
        };
        const QubitDensityMatrix rho = oracle::kron2(qubit(), qubit());
        CHECK(concurrence(rho) < 1e-7);
    }
}

TEST_CASE("property: eof is nondecreasing in concurrence") {
    double prev = 0.0;
    for (int k = 0; k <= 1000; ++k) {
        const double e = eof_from_concurrence(k / 1000.0);
        CHECK(e >= prev);
        prev = e;
    }
}
