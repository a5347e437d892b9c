#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>

#include "qosc/errors.hpp"
#include "qosc/fock.hpp"

namespace qosc::fock {
namespace {

using SparseBlock = Eigen::SparseMatrix<std::complex<double>>;
constexpr std::complex<double> I{0.0, 1.0};
constexpr std::array<int, 4> kSigmaA{+1, +1, -1, -1};
constexpr std::array<int, 4> kSigmaB{+1, -1, +1, -1};

// Dephasing rate of the |m><n| qubit block: (gamma/2)(sA sA' + sB sB' - 2).
double block_rate(int m, int n, double gamma) {
    return 0.5 * gamma * (kSigmaA[m] * kSigmaA[n] + kSigmaB[m] * kSigmaB[n] - 2);
}

std::array<SparseBlock, 4> sparse_blocks(const SectorOperator& H) {
    std::array<SparseBlock, 4> out;
    for (int q = 0; q < 4; ++q) out[q] = H.blocks[q].sparseView();
    return out;
}

template <class State, class Rhs>
State rk4_step(const State& y, double h, const Rhs& f) {
    const State k1 = f(y);
    const State k2 = f(State(y + (0.5 * h) * k1));
    const State k3 = f(State(y + (0.5 * h) * k2));
    const State k4 = f(State(y + h * k3));
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_grid(std::span<const double> grid) {
    if (grid.empty()) throw Error("time grid is empty");
    if (grid.front() != 0.0) throw Error("time grid must start at 0");
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] >= grid[k - 1])) throw Error("time grid must be ascending");
}

template <class State, class Rhs, class Emit>
void integrate(State y, std::span<const double> grid, const EvolveOptions& opt, const Rhs& f,
               const Emit& emit) {
    if (!(opt.step > 0.0)) throw Error("RK4 step must be positive");
    const int interval = std::max(1, opt.probe_interval);
    std::size_t steps = 0;
    emit(0, y);
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double span = grid[k] - grid[k - 1];
        const long n = span > 0.0 ? std::max(1L, long(std::ceil(span / opt.step - 1e-9))) : 0L;
        const double h = n > 0 ? span / double(n) : 0.0;
        for (long s = 0; s < n; ++s, ++steps) {
            if (steps % interval == 0) {
                const State full = rk4_step(y, h, f);
                const State half = rk4_step(State(rk4_step(y, 0.5 * h, f)), 0.5 * h, f);
                const double err = (full - half).cwiseAbs().maxCoeff();
                if (err > opt.probe_tolerance) {
                    char buf[160];
                    std::snprintf(buf, sizeof buf, "RK4 step-halving error %.3g exceeds %.3g at t = %g (step %g)",
                                  err, opt.probe_tolerance, grid[k - 1] + double(s) * h, h);
                    throw StepTooLarge(buf);
                }
                y = full;
                continue;
            }
            y = rk4_step(y, h, f);
        }
        emit(k, y);
    }
}

void evolve_pure(const SectorOperator& H, const Eigen::VectorXcd& psi0,
                 std::span<const double> grid, const EvolveOptions& opt,
                 const std::function<void(std::size_t, const Eigen::VectorXcd&)>& emit) {
    const auto sparse = sparse_blocks(H);
    const Eigen::Index m = H.mode_dim();
    auto rhs = [&](const Eigen::VectorXcd& psi) {
        Eigen::VectorXcd out(psi.size());
        for (int q = 0; q < 4; ++q) out.segment(q * m, m) = -I * (sparse[q] * psi.segment(q * m, m));
        return out;
    };
    integrate<Eigen::VectorXcd>(psi0, grid, opt, rhs, emit);
}

void evolve_density(const SectorOperator& H, const Eigen::MatrixXcd& rho0, double gamma,
                    std::span<const double> grid, const EvolveOptions& opt,
                    const std::function<void(std::size_t, const Eigen::MatrixXcd&)>& emit) {
    const auto sparse = sparse_blocks(H);
    const Eigen::Index m = H.mode_dim();
    auto rhs = [&](const Eigen::MatrixXcd& rho) {
        Eigen::MatrixXcd out(rho.rows(), rho.cols());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const auto blk = rho.block(i * m, j * m, m, m);
                out.block(i * m, j * m, m, m) =
                    -I * (sparse[i] * blk - blk * sparse[j]) + block_rate(i, j, gamma) * blk;
            }
        return out;
    };
    integrate<Eigen::MatrixXcd>(rho0, grid, opt, rhs, emit);
}

struct SectorEigen {
    Eigen::VectorXd energies;
    Eigen::MatrixXcd vectors;
};

SectorEigen sector_eigen(const Eigen::MatrixXcd& block) {
    if (block.imag().cwiseAbs().maxCoeff() == 0.0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block.real());
        return {es.eigenvalues(), es.eigenvectors().cast<std::complex<double>>()};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
    return {es.eigenvalues(), es.eigenvectors()};
}

// Exact propagation: every |m><n| block evolves as
//   e^{rate t} U_m(t) rho_mn U_n(t)^dagger,
// and only its trace is needed for the reduced state. In the sector
// eigenbases this trace is the bilinear form u_m(t)^T M_mn v_n(t).
std::vector<QubitDensityMatrix> evolve_sector_exact(const SectorOperator& H,
                                                    const FullState& state0, double gamma,
                                                    std::span<const double> grid) {
    const Eigen::Index m = H.mode_dim();
    std::array<SectorEigen, 4> eig;
    for (int q = 0; q < 4; ++q) eig[q] = sector_eigen(H.blocks[q]);

    auto block0 = [&](int i, int j) -> Eigen::MatrixXcd {
        if (state0.is_pure())
            return state0.vector().segment(i * m, m) * state0.vector().segment(j * m, m).adjoint();
        return state0.density().block(i * m, j * m, m, m);
    };

    struct Pair {
        int i, j;
        Eigen::MatrixXcd weights;
    };
    std::vector<Pair> pairs;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const Eigen::MatrixXcd rot = eig[i].vectors.adjoint() * block0(i, j) * eig[j].vectors;
            const Eigen::MatrixXcd overlap = eig[j].vectors.adjoint() * eig[i].vectors;
            pairs.push_back({i, j, rot.cwiseProduct(overlap.transpose())});
        }

    std::vector<QubitDensityMatrix> out;
    out.reserve(grid.size());
    for (double t : grid) {
        std::array<Eigen::VectorXcd, 4> fwd, bwd;
        for (int q = 0; q < 4; ++q) {
            fwd[q] = (-I * t * eig[q].energies.cast<std::complex<double>>()).array().exp();
            bwd[q] = fwd[q].conjugate();
        }
        QubitDensityMatrix rho;
        for (const Pair& p : pairs) {
            const std::complex<double> val =
                std::exp(block_rate(p.i, p.j, gamma) * t) *
                fwd[p.i].transpose() * (p.weights * bwd[p.j]);
            rho(p.i, p.j) = val;
            if (p.i != p.j) rho(p.j, p.i) = std::conj(val);
        }
        out.push_back(rho);
    }
    return out;
}

} // namespace

double recommended_step(const ModelParams& params, const DerivedParams& derived) {
    return std::min(0.01 / params.omega0, 2.0 * std::numbers::pi / (50.0 * derived.Omega_plus));
}

void lindblad_evolve(const SectorOperator& H, const FullState& state0, double gamma,
                     std::span<const double> t_grid, const Observer& observer,
                     const EvolveOptions& options) {
    check_grid(t_grid);
    if (state0.dim() != 4 * H.mode_dim()) throw Error("state and Hamiltonian dimensions differ");
    if (options.method == EvolveMethod::SectorExact)
        throw Error("sector propagation yields reduced states only; use evolve_reduced");

    if (state0.is_pure() && gamma == 0.0) {
        evolve_pure(H, state0.vector(), t_grid, options,
                    [&](std::size_t k, const Eigen::VectorXcd& psi) {
                        observer(k, t_grid[k], FullState::pure(psi));
                    });
        return;
    }
    evolve_density(H, state0.to_density(), gamma, t_grid, options,
                   [&](std::size_t k, const Eigen::MatrixXcd& rho) {
                       observer(k, t_grid[k], FullState::mixed(rho));
                   });
}

std::vector<FullState> lindblad_evolve(const SectorOperator& H, const FullState& state0,
                                       double gamma, std::span<const double> t_grid,
                                       const EvolveOptions& options) {
    std::vector<FullState> out;
    out.reserve(t_grid.size());
    lindblad_evolve(H, state0, gamma, t_grid,
                    [&](std::size_t, double, const FullState& s) { out.push_back(s); }, options);
    return out;
}

std::vector<QubitDensityMatrix> evolve_reduced(const SectorOperator& H, const FullState& state0,
                                               double gamma, std::span<const double> t_grid,
                                               const EvolveOptions& options) {
    check_grid(t_grid);
    if (state0.dim() != 4 * H.mode_dim()) throw Error("state and Hamiltonian dimensions differ");

    const bool pure_path = state0.is_pure() && gamma == 0.0;
    const bool exact = options.method == EvolveMethod::SectorExact ||
                       (options.method == EvolveMethod::Auto && !pure_path);
    if (exact) return evolve_sector_exact(H, state0, gamma, t_grid);

    std::vector<QubitDensityMatrix> out(t_grid.size());
    lindblad_evolve(H, state0, gamma, t_grid,
                    [&](std::size_t k, double, const FullState& s) {
                        // RK4 drifts the norm slowly; report the normalized state.
                        out[k] = partial_trace_modes(s);
                        out[k] /= out[k].trace().real();
                    },
                    options);
    return out;
}

} // namespace qosc::fock
