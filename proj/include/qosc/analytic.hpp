// analytic.hpp — closed-form reduced dynamics of the two qubits.
//
// The qubits start in |++> and the modes in the coherent state |alpha>|beta>.
// In the diagonal frame every qubit configuration only displaces the two
// normal modes, so each coherence of the reduced state factorizes into a
// dephasing/phase factor times one squeezed-coherent overlap per normal mode.
// Basis order is {ee, eg, ge, gg} with sigma_z|e> = +|e>.

#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "qosc/model.hpp"

namespace qosc {

using cplx = std::complex<double>;
using QubitDensityMatrix = Eigen::Matrix4cd;

enum class QubitState { ee = 0, eg = 1, ge = 2, gg = 3 };
enum class Branch { Plus, Minus };

std::string_view to_string(QubitState s);

// Off-diagonal (or diagonal) entry |m><n| of the two-qubit matrix.
struct CoherenceLabel {
    QubitState m{QubitState::ee};
    QubitState n{QubitState::ee};

    // Parses "eeeg", "ggee", ... Throws UnknownLabel.
    static CoherenceLabel parse(std::string_view text);
    std::string str() const;
    bool diagonal() const { return m == n; }
    bool upper() const { return static_cast<int>(m) < static_cast<int>(n); }
    CoherenceLabel swapped() const { return {n, m}; }
};

// The six coherences that determine the matrix (upper triangle).
inline constexpr std::array<CoherenceLabel, 6> kIndependentCoherences{{
    {QubitState::ee, QubitState::eg},
    {QubitState::ee, QubitState::ge},
    {QubitState::ee, QubitState::gg},
    {QubitState::eg, QubitState::ge},
    {QubitState::eg, QubitState::gg},
    {QubitState::ge, QubitState::gg},
}};

struct ModeAmplitudes {
    cplx alpha{0.0};
    cplx beta{0.0};
};

// Initial mode amplitudes seen in the displaced, rotated and squeezed frame.
struct TransformedAmplitudes {
    cplx z;  // (alpha + beta + 2 delta)/sqrt2
    cplx w;  // (beta - alpha)/sqrt2
    cplx Z;  // z cosh r+ + z* sinh r+
    cplx W;  // w cosh r- + w* sinh r-
};

TransformedAmplitudes transform_amplitudes(const ModeAmplitudes& a, const DerivedParams& d);

struct CoherencePhaseTerms {
    cplx A_plus, A_minus, B_plus, B_minus;
};

CoherencePhaseTerms coherence_phase_terms(double t, const DerivedParams& d,
                                          const TransformedAmplitudes& ta);

// Displaced amplitudes of the two qubit configurations of a coherence in one
// normal mode, together with the (shared) complex squeeze parameter.
struct OverlapSpec {
    cplx Y_m;
    cplx Y_n;
    cplx xi;
};

struct ModeOverlapSpecs {
    OverlapSpec plus;
    OverlapSpec minus;
};

// f(t) for one normal mode; |<Y_n,xi|Y_m,xi>|^2 = exp(-f) for single qubit flips.
double mode_decoherence_exponent(double t, Branch branch, const DerivedParams& d);

// Dephasing and phase factor of coherence `mn`. Diagonal labels give 1,
// lower-triangle labels the conjugate of their upper-triangle partner.
cplx dephasing_factor(CoherenceLabel mn, double t, const DerivedParams& d,
                      const TransformedAmplitudes& ta, double gamma);

ModeOverlapSpecs displaced_amplitudes(CoherenceLabel mn, double t, const DerivedParams& d,
                                      const TransformedAmplitudes& ta);

// <Y_m, xi | Y_n, xi> for |Y, xi> = D(Y) S(xi)|0>.
cplx squeezed_overlap(const OverlapSpec& spec);

// Partial trace of the modes for coherence `mn`: product over both normal
// modes of <Y_n, xi | Y_m, xi>.
cplx mode_trace_factor(CoherenceLabel mn, double t, const DerivedParams& d,
                       const TransformedAmplitudes& ta);

QubitDensityMatrix qubit_density_matrix(double t, const DerivedParams& d,
                                        const TransformedAmplitudes& ta, double gamma);

// Tr[rho^2] of the reduced state without building it; independent of the
// mode amplitudes.
double purity_closed_form(double t, const DerivedParams& d, double gamma);

} // namespace qosc
