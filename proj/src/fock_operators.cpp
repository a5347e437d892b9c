#include <cmath>
#include <cstdio>
#include <string>

#include "qosc/errors.hpp"
#include "qosc/fock.hpp"

namespace qosc::fock {
namespace {

constexpr std::array<int, 4> kSigmaA{+1, +1, -1, -1};
constexpr std::array<int, 4> kSigmaB{+1, -1, +1, -1};
constexpr double kTailLimit = 1e-8;

Eigen::MatrixXd kron(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    Eigen::MatrixXd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
}

TruncatedOperator qubit_diagonal(const TruncatedSpace& space, const std::array<int, 4>& signs) {
    Eigen::VectorXcd diag(space.dim());
    for (int q = 0; q < 4; ++q) diag.segment(q * space.mode_dim(), space.mode_dim()).setConstant(signs[q]);
    return diag.asDiagonal();
}

} // namespace

TruncatedSpace::TruncatedSpace(int n_max) : n_max_(n_max) {
    if (n_max < 2) throw CutoffTooSmall("Fock cutoff must be at least 2, got " + std::to_string(n_max));
}

TruncatedOperator SectorOperator::dense() const {
    const Eigen::Index m = mode_dim();
    TruncatedOperator out = TruncatedOperator::Zero(4 * m, 4 * m);
    for (int q = 0; q < 4; ++q) out.block(q * m, q * m, m, m) = blocks[q];
    return out;
}

double SectorOperator::hermiticity_error() const {
    double err = 0.0;
    for (const auto& b : blocks) err = std::max(err, (b - b.adjoint()).cwiseAbs().maxCoeff());
    return err;
}

Eigen::MatrixXd annihilation(int n_max) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_max, n_max);
    for (int n = 1; n < n_max; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

Eigen::MatrixXd mode_a(const TruncatedSpace& space) {
    return kron(annihilation(space.n_max()), Eigen::MatrixXd::Identity(space.n_max(), space.n_max()));
}

Eigen::MatrixXd mode_b(const TruncatedSpace& space) {
    return kron(Eigen::MatrixXd::Identity(space.n_max(), space.n_max()), annihilation(space.n_max()));
}

TruncatedOperator sigma_z_a(const TruncatedSpace& space) { return qubit_diagonal(space, kSigmaA); }
TruncatedOperator sigma_z_b(const TruncatedSpace& space) { return qubit_diagonal(space, kSigmaB); }

SectorOperator build_hamiltonian(const ValidatedParams& vp, const TruncatedSpace& space) {
    const ModelParams& p = vp.get();
    const Eigen::MatrixXd a = mode_a(space);
    const Eigen::MatrixXd b = mode_b(space);
    const Eigen::MatrixXd xa = a + a.transpose();
    const Eigen::MatrixXd xb = b + b.transpose();
    const Eigen::MatrixXd number = a.transpose() * a + b.transpose() * b;
    const Eigen::MatrixXd coupling = p.variant == Variant::Complete
                                         ? Eigen::MatrixXd(xa * xb)
                                         : Eigen::MatrixXd(a.transpose() * b + a * b.transpose());
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(space.mode_dim(), space.mode_dim());

    SectorOperator H;
    for (int q = 0; q < 4; ++q) {
        const double sa = kSigmaA[q];
        const double sb = kSigmaB[q];
        const Eigen::MatrixXd block = 0.5 * p.omega0 * (sa + sb) * id + p.omega * number +
                                      p.g * (sa + p.mu) * xa + p.g * (sb + p.mu) * xb +
                                      p.lambda * coupling;
        H.blocks[q] = block.cast<std::complex<double>>();
    }
    return H;
}

int recommended_cutoff(double amplitude) {
    const double a = std::abs(amplitude);
    return static_cast<int>(std::ceil(a * a + 6.0 * a + 10.0));
}

double coherent_tail_mass(std::complex<double> amplitude, int n_max) {
    const double mean = std::norm(amplitude);
    if (mean == 0.0) return 0.0;
    // Poisson(mean) mass at n >= n_max, summed in log space
    double tail = 0.0;
    for (int n = n_max; n < n_max + 400; ++n) {
        const double term = std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
        tail += term;
        if (n > mean && term < 1e-18 * std::max(tail, 1e-300)) break;
    }
    return tail;
}

Eigen::VectorXcd coherent_state(std::complex<double> amplitude, const TruncatedSpace& space) {
    const double tail = coherent_tail_mass(amplitude, space.n_max());
    if (tail >= kTailLimit)
    {
        char buf[160];
        std::snprintf(buf, sizeof buf, "coherent amplitude %g needs a larger cutoff than %d (tail mass %.3g)",
                      std::abs(amplitude), space.n_max(), tail);
        throw CutoffTooSmall(buf);
    }
    Eigen::VectorXcd v(space.n_max());
    v(0) = 1.0;
    for (int n = 1; n < space.n_max(); ++n) v(n) = v(n - 1) * amplitude / std::sqrt(double(n));
    return v / v.norm();
}

FullState FullState::pure(Eigen::VectorXcd psi) {
    FullState s;
    s.pure_ = true;
    s.psi_ = std::move(psi);
    return s;
}

FullState FullState::mixed(Eigen::MatrixXcd rho) {
    FullState s;
    s.pure_ = false;
    s.rho_ = std::move(rho);
    return s;
}

Eigen::MatrixXcd FullState::to_density() const {
    return pure_ ? Eigen::MatrixXcd(psi_ * psi_.adjoint()) : rho_;
}

double FullState::trace() const { return pure_ ? psi_.squaredNorm() : rho_.trace().real(); }

double FullState::purity() const {
    if (pure_) return std::pow(psi_.squaredNorm(), 2);
    return (rho_ * rho_).trace().real();
}

FullState initial_state(const ModeAmplitudes& amps, const TruncatedSpace& space) {
    const Eigen::VectorXcd ca = coherent_state(amps.alpha, space);
    const Eigen::VectorXcd cb = coherent_state(amps.beta, space);
    Eigen::VectorXcd modes(space.mode_dim());
    for (int na = 0; na < space.n_max(); ++na)
        for (int nb = 0; nb < space.n_max(); ++nb) modes(space.mode_index(na, nb)) = ca(na) * cb(nb);
    Eigen::VectorXcd psi(space.dim());
    for (int q = 0; q < 4; ++q) psi.segment(q * space.mode_dim(), space.mode_dim()) = 0.5 * modes;
    return FullState::pure(std::move(psi));
}

QubitDensityMatrix partial_trace_modes(const FullState& state) {
    const Eigen::Index m = state.dim() / 4;
    QubitDensityMatrix out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (state.is_pure())
                out(i, j) = state.vector().segment(j * m, m).dot(state.vector().segment(i * m, m));
            else
                out(i, j) = state.density().block(i * m, j * m, m, m).trace();
        }
    return out;
}

} // namespace qosc::fock
