// fock.hpp — brute-force reference for the two qubit-oscillator model on a
// truncated Fock space.
//
// Ordering of the product space is qubitA (x) qubitB (x) modeA (x) modeB, with
// qubit index 0 = e, 1 = g and mode index na * n_max + nb. The lab-frame
// Hamiltonians contain no transverse qubit terms, so they are stored as four
// dense blocks, one per sigma_z configuration {ee, eg, ge, gg}.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qosc/analytic.hpp"
#include "qosc/model.hpp"

namespace qosc::fock {

class TruncatedSpace {
public:
    // Throws CutoffTooSmall for n_max < 2.
    explicit TruncatedSpace(int n_max);

    int n_max() const noexcept { return n_max_; }
    Eigen::Index mode_dim() const noexcept { return Eigen::Index(n_max_) * n_max_; }
    Eigen::Index dim() const noexcept { return 4 * mode_dim(); }
    Eigen::Index mode_index(int na, int nb) const noexcept { return Eigen::Index(na) * n_max_ + nb; }
    Eigen::Index index(int qubits, int na, int nb) const noexcept {
        return qubits * mode_dim() + mode_index(na, nb);
    }

private:
    int n_max_;
};

using TruncatedOperator = Eigen::MatrixXcd;

// Operator of the form sum_q |q><q| (x) H_q, q in {ee, eg, ge, gg}.
struct SectorOperator {
    std::array<Eigen::MatrixXcd, 4> blocks;

    Eigen::Index mode_dim() const { return blocks[0].rows(); }
    TruncatedOperator dense() const;
    double hermiticity_error() const;
};

// Single-mode annihilation operator, <n-1|a|n> = sqrt(n).
Eigen::MatrixXd annihilation(int n_max);
// a (x) 1 and 1 (x) a on the two-mode space.
Eigen::MatrixXd mode_a(const TruncatedSpace& space);
Eigen::MatrixXd mode_b(const TruncatedSpace& space);

// Full-space operators.
TruncatedOperator sigma_z_a(const TruncatedSpace& space);
TruncatedOperator sigma_z_b(const TruncatedSpace& space);

SectorOperator build_hamiltonian(const ValidatedParams& params, const TruncatedSpace& space);

// Smallest cutoff recommended for a displaced amplitude of modulus `amplitude`.
int recommended_cutoff(double amplitude);

// Probability mass of a coherent state beyond the cutoff.
double coherent_tail_mass(std::complex<double> amplitude, int n_max);

// Normalized truncated coherent vector. Throws CutoffTooSmall when the tail
// mass beyond n_max is >= 1e-8.
Eigen::VectorXcd coherent_state(std::complex<double> amplitude, const TruncatedSpace& space);

class FullState {
public:
    static FullState pure(Eigen::VectorXcd psi);
    static FullState mixed(Eigen::MatrixXcd rho);

    bool is_pure() const noexcept { return pure_; }
    const Eigen::VectorXcd& vector() const { return psi_; }
    const Eigen::MatrixXcd& density() const { return rho_; }
    Eigen::Index dim() const noexcept { return pure_ ? psi_.size() : rho_.rows(); }
    Eigen::MatrixXcd to_density() const;
    // Norm squared (pure) or trace (mixed).
    double trace() const;
    // Tr[rho^2] of the full state.
    double purity() const;

private:
    bool pure_{true};
    Eigen::VectorXcd psi_;
    Eigen::MatrixXcd rho_;
};

// |++> (x) |alpha> (x) |beta>
FullState initial_state(const ModeAmplitudes& amps, const TruncatedSpace& space);

QubitDensityMatrix partial_trace_modes(const FullState& state);

enum class EvolveMethod {
    Auto,        // pure RK4 for gamma=0 with a pure input, sector propagation otherwise
    Rk4,         // fixed-step RK4 on the state vector or the full density matrix
    SectorExact  // exact propagation inside each qubit sector (density path)
};

struct EvolveOptions {
    EvolveMethod method{EvolveMethod::Auto};
    double step{0.01};
    int probe_interval{100};
    double probe_tolerance{1e-6};  // max-abs difference of one step vs two half steps
};

// min(0.01/omega0, 2 pi / (50 Omega+)) for the given model.
double recommended_step(const ModelParams& params, const DerivedParams& derived);

using Observer = std::function<void(std::size_t index, double t, const FullState& state)>;

// Integrates d rho/dt = -i[H, rho] + (gamma/2)(ZA rho ZA + ZB rho ZB - 2 rho)
// with fixed-step RK4, reporting the state at every grid time. With gamma = 0
// and a pure input the Schroedinger equation is integrated instead. The grid
// must be ascending and start at 0. Throws StepTooLarge when a step-halving
// probe exceeds the tolerance.
void lindblad_evolve(const SectorOperator& H, const FullState& state0, double gamma,
                     std::span<const double> t_grid, const Observer& observer,
                     const EvolveOptions& options = {});

std::vector<FullState> lindblad_evolve(const SectorOperator& H, const FullState& state0,
                                       double gamma, std::span<const double> t_grid,
                                       const EvolveOptions& options = {});

// Reduced two-qubit states on the grid. EvolveMethod::Auto and SectorExact
// use exact propagation in the eigenbasis of every qubit sector for the
// density path, which avoids holding full density matrices per grid point.
// States from the RK4 path are divided by their trace.
std::vector<QubitDensityMatrix> evolve_reduced(const SectorOperator& H, const FullState& state0,
                                               double gamma, std::span<const double> t_grid,
                                               const EvolveOptions& options = {});

// k lowest eigenvalues of H as gaps above the ground state, ascending.
// Throws CutoffTooSmall when any of those eigenvectors has more than 1e-6
// population in the two highest Fock layers of either mode.
std::vector<double> spectrum_gaps(const SectorOperator& H, int k);

// k lowest gaps of the diagonal form
//   (w0_eff/2)(sA + sB) + (chi/2) sA sB + Omega+ n+ + Omega- n-.
std::vector<double> diagonal_form_gaps(const DerivedParams& d, int k);

// Transformations on the two-mode space, built by matrix exponentials.
Eigen::MatrixXd displacement_transform(const TruncatedSpace& space, double delta);
Eigen::MatrixXd beam_splitter_transform(const TruncatedSpace& space);
Eigen::MatrixXd squeeze_transform(const TruncatedSpace& space, double r_plus, double r_minus);
Eigen::MatrixXd polaron_transform(const TruncatedSpace& space, double lam_plus, double lam_minus,
                                  QubitState sector);

struct ChainCheckReport {
    double residual{0.0}; // operator norm on the interior block, worst sector
    double offset{0.0};   // fitted constant energy offset
    int interior_layers{0};  // kept states satisfy na + nb < interior_layers
};

// Applies U = P S T D to every sector block of the lab Hamiltonian and
// compares U H U^T with the diagonal form (plus one fitted constant) on the
// states with na + nb < n_max/3.
ChainCheckReport transformation_chain_check(const ValidatedParams& params,
                                            const TruncatedSpace& space);

} // namespace qosc::fock
