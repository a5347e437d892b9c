// Independent reference computations used only by the tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using cplx = std::complex<double>;

// D(y) S(xi)|0> on n states, built from exponentials of the truncated
// ladder operators; n must be large enough for the amplitudes involved.
inline Eigen::VectorXcd squeezed_coherent(cplx y, cplx xi, int n) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(double(k));
    const Eigen::MatrixXcd ad = a.adjoint();
    const Eigen::MatrixXcd S = (0.5 * (std::conj(xi) * a * a - xi * ad * ad)).exp();
    const Eigen::MatrixXcd D = (y * ad - std::conj(y) * a).exp();
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(n);
    vac(0) = 1.0;
    return D * (S * vac);
}

// Coherent-state overlap by direct summation of the number-state series.
inline cplx coherent_overlap_series(cplx x, cplx y, int terms = 200) {
    cplx sum = 0.0;
    cplx term = 1.0;  // (x* y)^k / k!
    for (int k = 0; k < terms; ++k) {
        sum += term;
        term *= std::conj(x) * y / double(k + 1);
    }
    return std::exp(-0.5 * (std::norm(x) + std::norm(y))) * sum;
}

// Normal-mode frequencies of two oscillators (omega) coupled by
// lambda (a + a+)(b + b+): square roots of the eigenvalues of the classical
// dynamical matrix.
inline std::pair<double, double> quadrature_normal_modes(double omega, double lambda) {
    Eigen::Matrix2d K;
    K << omega * omega, 2.0 * lambda * omega, 2.0 * lambda * omega, omega * omega;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(K);
    return {std::sqrt(es.eigenvalues()(1)), std::sqrt(es.eigenvalues()(0))};
}

inline double h2(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log(x) / std::log(2.0) - (1 - x) * std::log(1 - x) / std::log(2.0);
}

inline Eigen::Matrix4cd bell_phi_plus() {
    Eigen::Vector4cd v(1.0, 0.0, 0.0, 1.0);
    v /= std::sqrt(2.0);
    return v * v.adjoint();
}

inline Eigen::Matrix4cd werner(double p) {
    return p * bell_phi_plus() + (1.0 - p) * Eigen::Matrix4cd::Identity() / 4.0;
}

// Haar-random single-qubit unitary via QR of a complex Gaussian matrix.
inline Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Matrix2cd z;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) z(i, j) = cplx(n(rng), n(rng));
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
    Eigen::Matrix2cd q = qr.householderQ();
    const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 2; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
    return q;
}

inline Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) {
    Eigen::Matrix4cd out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
    return out;
}

// Tr[rho^2] straight from the matrix product.
inline double trace_square(const Eigen::Matrix4cd& rho) { return (rho * rho).trace().real(); }

} // namespace oracle
