// model.hpp — physical parameters of the two qubit-oscillator model and the
// constants of its diagonal (normal-mode / Ising) form.

#pragma once

#include <string_view>

namespace qosc {

// Mode-mode coupling: quadrature-quadrature (Complete) or excitation-conserving (Rwa).
enum class Variant { Complete = 1, Rwa = 2 };

std::string_view to_string(Variant v);

struct ModelParams {
    double omega0{1.0};  // qubit angular frequency
    double omega{1.0};   // mode angular frequency
    double g{0.025};     // qubit-mode coupling
    double lambda{0.0};  // mode-mode coupling
    double mu{1.0};      // dimensionless offset of the qubit-mode coupling
    double gamma{0.0};   // pure dephasing rate of each qubit
    Variant variant{Variant::Complete};
};

// ModelParams that passed validate(). Only validate() can construct one.
class ValidatedParams {
public:
    const ModelParams& get() const noexcept { return p_; }
    const ModelParams* operator->() const noexcept { return &p_; }

private:
    explicit ValidatedParams(const ModelParams& p) : p_(p) {}
    friend ValidatedParams validate(const ModelParams& p);
    ModelParams p_;
};

// Throws DomainError for non-positive frequencies or negative couplings/rates,
// StabilityError when lambda leaves the stable region of the chosen variant
// (lambda < omega/2 for Complete, lambda < omega for Rwa).
ValidatedParams validate(const ModelParams& p);

// Convention for the squeeze parameters of the Complete variant.
//  QuarterLog: r± = ln(1 ± 2λ/ω)/4, the one that diagonalizes the mode Hamiltonian.
//  FullLog:    r± = ln(1 ± 2λ/ω), kept only so that tests can show it fails.
enum class SqueezeConvention { QuarterLog, FullLog };

struct DerivedParams {
    double delta{0.0};       // displacement removing the mu-term
    double r_plus{0.0};      // squeeze parameter, symmetric mode
    double r_minus{0.0};     // squeeze parameter, antisymmetric mode
    double Omega_plus{0.0};  // normal-mode frequency, symmetric mode
    double Omega_minus{0.0}; // normal-mode frequency, antisymmetric mode
    double lam_plus{0.0};    // polaron shift, symmetric mode
    double lam_minus{0.0};   // polaron shift, antisymmetric mode
    double omega0_eff{0.0};  // shifted qubit frequency
    double chi{0.0};         // mode-mediated sigma_z sigma_z coupling

    bool operator==(const DerivedParams&) const = default;
};

DerivedParams derive(const ValidatedParams& p,
                     SqueezeConvention convention = SqueezeConvention::QuarterLog);

} // namespace qosc
