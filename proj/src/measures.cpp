#include "qosc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qosc/errors.hpp"

namespace qosc {
namespace {

constexpr double kTraceTol = 1e-8;
constexpr double kHermitianTol = 1e-8;
constexpr double kNegativeClip = -1e-12;
constexpr double kImagTol = 1e-10;
constexpr double kStateFloor = -1e-10;

const Eigen::Matrix4cd& sigma_yy() {
    static const Eigen::Matrix4cd m = [] {
        Eigen::Matrix2cd sy;
        sy << 0.0, cplx(0, -1), cplx(0, 1), 0.0;
        Eigen::Matrix4cd out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out.block<2, 2>(2 * i, 2 * j) = sy(i, j) * sy;
        return out;
    }();
    return m;
}

double concurrence_unchecked(const QubitDensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> states(rho);
    if (states.eigenvalues().minCoeff() < kStateFloor)
        throw InvalidState("density matrix has negative eigenvalue " +
                           std::to_string(states.eigenvalues().minCoeff()));

    // The spin-flip spectrum is only used as a consistency guard.
    const Eigen::Matrix4cd& yy = sigma_yy();
    const Eigen::Matrix4cd R = rho * yy * rho.conjugate() * yy;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(R, false);
    if (solver.info() != Eigen::Success) throw InvalidState("concurrence eigensolver failed");
    const double scale = std::max(1.0, R.norm());
    for (int k = 0; k < 4; ++k) {
        const cplx e = solver.eigenvalues()(k);
        if (std::abs(e.imag()) > kImagTol * scale)
            throw InvalidState("spin-flip spectrum has imaginary part " + std::to_string(e.imag()));
        if (e.real() < kNegativeClip * scale)
            throw InvalidState("spin-flip spectrum has negative eigenvalue " + std::to_string(e.real()));
    }

    // sqrt(eig R) are the singular values of sqrt(rho) (sy x sy) sqrt(rho)*;
    // taking them from an SVD avoids square roots of rounding noise.
    const Eigen::Vector4d lam = states.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::Matrix4cd root = states.eigenvectors() * lam.asDiagonal() * states.eigenvectors().adjoint();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(root * yy * root.conjugate());
    const Eigen::Vector4d s = svd.singularValues();  // descending
    const double c = s(0) - s(1) - s(2) - s(3);
    return std::clamp(c, 0.0, 1.0);
}

} // namespace

void check_density_matrix(const QubitDensityMatrix& rho) {
    if (!rho.allFinite()) throw InvalidState("density matrix has non-finite entries");
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol || std::abs(rho.trace().imag()) > kTraceTol)
        throw InvalidState("density matrix trace deviates from 1: " + std::to_string(tr));
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermitianTol)
        throw InvalidState("density matrix is not Hermitian (error " + std::to_string(herm) + ")");
}

double purity(const QubitDensityMatrix& rho) {
    check_density_matrix(rho);
    return rho.cwiseAbs2().sum();
}

double concurrence(const QubitDensityMatrix& rho) {
    check_density_matrix(rho);
    return concurrence_unchecked(rho);
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
    c = std::clamp(c, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double eof(const QubitDensityMatrix& rho) { return eof_from_concurrence(concurrence(rho)); }

MeasureReport measure(const QubitDensityMatrix& rho) {
    check_density_matrix(rho);
    const double c = concurrence_unchecked(rho);
    return {rho.cwiseAbs2().sum(), c, eof_from_concurrence(c)};
}

} // namespace qosc
