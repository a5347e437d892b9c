#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "qosc/errors.hpp"
#include "qosc/fock.hpp"

namespace qosc::fock {
namespace {

constexpr std::array<int, 4> kSigmaA{+1, +1, -1, -1};
constexpr std::array<int, 4> kSigmaB{+1, -1, +1, -1};
constexpr double kTopLayerLimit = 1e-6;

int cutoff_of(Eigen::Index mode_dim) {
    return static_cast<int>(std::lround(std::sqrt(double(mode_dim))));
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    Eigen::MatrixXd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
}

// Matrix exponential by scaling and squaring with a degree-13 Pade
// approximant (Eigen's MatrixFunctions implementation for double).
Eigen::MatrixXd expm(const Eigen::MatrixXd& generator) { return generator.exp(); }

Eigen::MatrixXd single_mode_displacement(int n_max, double amount) {
    const Eigen::MatrixXd a = annihilation(n_max);
    return expm(amount * (a.transpose() - a));
}

Eigen::MatrixXd single_mode_squeeze(int n_max, double r) {
    const Eigen::MatrixXd a = annihilation(n_max);
    const Eigen::MatrixXd a2 = a * a;
    return expm(-0.5 * r * (a2 - a2.transpose()));
}

} // namespace

std::vector<double> spectrum_gaps(const SectorOperator& H, int k) {
    const Eigen::Index m = H.mode_dim();
    const int n_max = cutoff_of(m);
    if (k < 1 || k > 4 * m) throw Error("spectrum_gaps: k out of range");

    struct Level {
        double energy;
        double top_population;
    };
    std::vector<Level> levels;
    levels.reserve(4 * m);
    for (const auto& block : H.blocks) {
        Eigen::VectorXd energies;
        Eigen::MatrixXd pop;  // |v|^2 per component
        if (block.imag().cwiseAbs().maxCoeff() == 0.0) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block.real());
            energies = es.eigenvalues();
            pop = es.eigenvectors().cwiseAbs2();
        } else {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
            energies = es.eigenvalues();
            pop = es.eigenvectors().cwiseAbs2();
        }
        for (Eigen::Index e = 0; e < m; ++e) {
            double top = 0.0;
            for (int na = 0; na < n_max; ++na)
                for (int nb = 0; nb < n_max; ++nb)
                    if (na >= n_max - 2 || nb >= n_max - 2) top += pop(na * n_max + nb, e);
            levels.push_back({energies(e), top});
        }
    }
    std::partial_sort(levels.begin(), levels.begin() + k, levels.end(),
                      [](const Level& x, const Level& y) { return x.energy < y.energy; });

    std::vector<double> gaps;
    gaps.reserve(k);
    for (int i = 0; i < k; ++i) {
        if (levels[i].top_population > kTopLayerLimit)
            throw CutoffTooSmall("eigenstate " + std::to_string(i) + " has population " +
                                 std::to_string(levels[i].top_population) +
                                 " in the top Fock layers (n_max = " + std::to_string(n_max) + ")");
        gaps.push_back(levels[i].energy - levels[0].energy);
    }
    return gaps;
}

std::vector<double> diagonal_form_gaps(const DerivedParams& d, int k) {
    std::vector<double> energies;
    for (int q = 0; q < 4; ++q) {
        const double qubit = 0.5 * d.omega0_eff * (kSigmaA[q] + kSigmaB[q]) +
                             0.5 * d.chi * kSigmaA[q] * kSigmaB[q];
        for (int np = 0; np <= k; ++np)
            for (int nm = 0; nm <= k; ++nm)
                energies.push_back(qubit + d.Omega_plus * np + d.Omega_minus * nm);
    }
    std::sort(energies.begin(), energies.end());
    std::vector<double> gaps(energies.begin(), energies.begin() + k);
    for (double& e : gaps) e -= energies.front();
    return gaps;
}

Eigen::MatrixXd displacement_transform(const TruncatedSpace& space, double delta) {
    const Eigen::MatrixXd d1 = single_mode_displacement(space.n_max(), delta);
    return kron(d1, d1);
}

Eigen::MatrixXd beam_splitter_transform(const TruncatedSpace& space) {
    const Eigen::MatrixXd a = mode_a(space);
    const Eigen::MatrixXd b = mode_b(space);
    const Eigen::MatrixXd gen = a.transpose() * b - a * b.transpose();
    return expm(0.25 * std::numbers::pi * gen);
}

Eigen::MatrixXd squeeze_transform(const TruncatedSpace& space, double r_plus, double r_minus) {
    return kron(single_mode_squeeze(space.n_max(), r_plus), single_mode_squeeze(space.n_max(), r_minus));
}

Eigen::MatrixXd polaron_transform(const TruncatedSpace& space, double lam_plus, double lam_minus,
                                  QubitState sector) {
    const int q = static_cast<int>(sector);
    const double charge_plus = kSigmaA[q] + kSigmaB[q];
    const double charge_minus = kSigmaB[q] - kSigmaA[q];
    return kron(single_mode_displacement(space.n_max(), lam_plus * charge_plus),
                single_mode_displacement(space.n_max(), lam_minus * charge_minus));
}

ChainCheckReport transformation_chain_check(const ValidatedParams& params,
                                            const TruncatedSpace& space) {
    const int n_max = space.n_max();
    // Rotations and squeezing move weight between Fock layers of fixed total
    // number, so the comparison is restricted to na + nb < n_max / 3.
    const int interior = n_max / 3;
    if (interior < 2) throw CutoffTooSmall("transformation check needs n_max >= 6");

    const DerivedParams d = derive(params);
    const SectorOperator H = build_hamiltonian(params, space);
    const Eigen::MatrixXd common = squeeze_transform(space, d.r_plus, d.r_minus) *
                                   beam_splitter_transform(space) *
                                   displacement_transform(space, d.delta);

    std::vector<Eigen::Index> keep;
    std::vector<double> ladder;
    for (int na = 0; na < interior; ++na)
        for (int nb = 0; na + nb < interior; ++nb) {
            keep.push_back(space.mode_index(na, nb));
            ladder.push_back(d.Omega_plus * na + d.Omega_minus * nb);
        }
    const Eigen::Index n_keep = static_cast<Eigen::Index>(keep.size());

    std::array<Eigen::MatrixXd, 4> residuals;
    double diag_sum = 0.0;
    for (int q = 0; q < 4; ++q) {
        const Eigen::MatrixXd U =
            polaron_transform(space, d.lam_plus, d.lam_minus, static_cast<QubitState>(q)) * common;
        const Eigen::MatrixXd transformed = U * H.blocks[q].real() * U.transpose();
        const double qubit = 0.5 * d.omega0_eff * (kSigmaA[q] + kSigmaB[q]) +
                             0.5 * d.chi * kSigmaA[q] * kSigmaB[q];
        Eigen::MatrixXd R(n_keep, n_keep);
        for (Eigen::Index i = 0; i < n_keep; ++i)
            for (Eigen::Index j = 0; j < n_keep; ++j) R(i, j) = transformed(keep[i], keep[j]);
        for (Eigen::Index i = 0; i < n_keep; ++i) R(i, i) -= qubit + ladder[i];
        diag_sum += R.diagonal().sum();
        residuals[q] = std::move(R);
    }

    ChainCheckReport report;
    report.interior_layers = interior;
    report.offset = diag_sum / double(4 * n_keep);
    for (auto& R : residuals) {
        R.diagonal().array() -= report.offset;
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(R);
        report.residual = std::max(report.residual, svd.singularValues()(0));
    }
    return report;
}

} // namespace qosc::fock
