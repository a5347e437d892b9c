#include "qosc/analytic.hpp"

#include <cmath>

#include "qosc/errors.hpp"

namespace qosc {
namespace {

constexpr cplx I{0.0, 1.0};

// sigma_z eigenvalues of qubits A and B for each basis state.
constexpr std::array<int, 4> kSigmaA{+1, +1, -1, -1};
constexpr std::array<int, 4> kSigmaB{+1, -1, +1, -1};

int index(QubitState s) { return static_cast<int>(s); }

// Displacement of each qubit configuration in the + and - normal modes, in
// units of 2*lam: (sA+sB)/2 and (sB-sA)/2.
int plus_charge(QubitState s) { return (kSigmaA[index(s)] + kSigmaB[index(s)]) / 2; }
int minus_charge(QubitState s) { return (kSigmaB[index(s)] - kSigmaA[index(s)]) / 2; }

cplx displaced(cplx amplitude, double lam, int charge, double Omega, double t) {
    const double shift = 2.0 * lam * charge;
    return (amplitude + shift) * std::exp(-I * (Omega * t)) - shift;
}

// Logarithm of the upper-triangle dephasing factor.
cplx log_dephasing_upper(QubitState m, QubitState n, double t, const DerivedParams& d,
                         const TransformedAmplitudes& ta, double gamma) {
    const CoherencePhaseTerms ph = coherence_phase_terms(t, d, ta);
    const double w0 = d.omega0_eff;
    const double chi = d.chi;
    const cplx single_high = -(I * (w0 + chi) + gamma) * t;
    const cplx single_low = -(I * (w0 - chi) + gamma) * t;

    using Q = QubitState;
    if (m == Q::ee && n == Q::eg) return single_high + 2.0 * I * std::imag(ph.A_plus + ph.B_minus);
    if (m == Q::ee && n == Q::ge) return single_high + 2.0 * I * std::imag(ph.A_plus - ph.B_plus);
    if (m == Q::ee && n == Q::gg) {
        const cplx c = d.lam_plus * std::conj(ta.Z) * (1.0 - std::exp(I * (d.Omega_plus * t)));
        return -2.0 * (I * w0 + gamma) * t + 4.0 * I * std::imag(c);
    }
    if (m == Q::eg && n == Q::ge) {
        const cplx c = d.lam_minus * std::conj(ta.W) * (1.0 - std::exp(I * (d.Omega_minus * t)));
        return -2.0 * gamma * t - 4.0 * I * std::imag(c);
    }
    if (m == Q::eg && n == Q::gg) return single_low + 2.0 * I * std::imag(ph.A_minus - ph.B_minus);
    if (m == Q::ge && n == Q::gg) return single_low + 2.0 * I * std::imag(ph.A_minus + ph.B_plus);
    throw UnknownLabel("not an upper-triangle coherence: " + CoherenceLabel{m, n}.str());
}

cplx log_dephasing(CoherenceLabel mn, double t, const DerivedParams& d,
                   const TransformedAmplitudes& ta, double gamma) {
    if (mn.diagonal()) return 0.0;
    if (mn.upper()) return log_dephasing_upper(mn.m, mn.n, t, d, ta, gamma);
    return std::conj(log_dephasing_upper(mn.n, mn.m, t, d, ta, gamma));
}

// log <Y_m, xi | Y_n, xi>
cplx log_squeezed_overlap(const OverlapSpec& s) {
    const cplx diff = s.Y_n - s.Y_m;
    const double r = std::abs(s.xi);
    // e^{i arg xi} sinh|xi| written as xi * sinh(r)/r so that xi -> 0 is regular.
    const double sinhc = r > 1e-8 ? std::sinh(r) / r : 1.0 + r * r / 6.0;
    const cplx bogoliubov = diff * std::cosh(r) + std::conj(diff) * s.xi * sinhc;
    return I * std::imag(std::conj(s.Y_m) * s.Y_n) - 0.5 * std::norm(bogoliubov);
}

cplx log_mode_trace(CoherenceLabel mn, double t, const DerivedParams& d,
                    const TransformedAmplitudes& ta) {
    const ModeOverlapSpecs specs = displaced_amplitudes(mn, t, d, ta);
    // Tr_modes |phi_m><phi_n| = <phi_n|phi_m>
    const OverlapSpec plus{specs.plus.Y_n, specs.plus.Y_m, specs.plus.xi};
    const OverlapSpec minus{specs.minus.Y_n, specs.minus.Y_m, specs.minus.xi};
    return log_squeezed_overlap(plus) + log_squeezed_overlap(minus);
}

} // namespace

std::string_view to_string(QubitState s) {
    static constexpr std::array<std::string_view, 4> names{"ee", "eg", "ge", "gg"};
    return names[index(s)];
}

CoherenceLabel CoherenceLabel::parse(std::string_view text) {
    auto state = [&](std::string_view two) -> QubitState {
        for (int k = 0; k < 4; ++k)
            if (to_string(static_cast<QubitState>(k)) == two) return static_cast<QubitState>(k);
        throw UnknownLabel("unknown coherence label: " + std::string(text));
    };
    if (text.size() != 4) throw UnknownLabel("unknown coherence label: " + std::string(text));
    return {state(text.substr(0, 2)), state(text.substr(2, 2))};
}

std::string CoherenceLabel::str() const {
    return std::string(to_string(m)) + std::string(to_string(n));
}

TransformedAmplitudes transform_amplitudes(const ModeAmplitudes& a, const DerivedParams& d) {
    const double s2 = std::sqrt(2.0);
    TransformedAmplitudes ta;
    ta.z = (a.alpha + a.beta + 2.0 * d.delta) / s2;
    ta.w = (a.beta - a.alpha) / s2;
    ta.Z = ta.z * std::cosh(d.r_plus) + std::conj(ta.z) * std::sinh(d.r_plus);
    ta.W = ta.w * std::cosh(d.r_minus) + std::conj(ta.w) * std::sinh(d.r_minus);
    return ta;
}

CoherencePhaseTerms coherence_phase_terms(double t, const DerivedParams& d,
                                          const TransformedAmplitudes& ta) {
    const cplx ep = std::exp(I * (d.Omega_plus * t));
    const cplx em = std::exp(I * (d.Omega_minus * t));
    const double lp = d.lam_plus;
    const double lm = d.lam_minus;
    const cplx Zc = std::conj(ta.Z);
    const cplx Wc = std::conj(ta.W);
    return {
        lp * Zc - lp * (Zc + 2.0 * lp) * ep,
        lp * Zc - lp * (Zc - 2.0 * lp) * ep,
        lm * Wc - lm * (Wc + 2.0 * lm) * em,
        lm * Wc - lm * (Wc - 2.0 * lm) * em,
    };
}

double mode_decoherence_exponent(double t, Branch branch, const DerivedParams& d) {
    const bool plus = branch == Branch::Plus;
    const double lam = plus ? d.lam_plus : d.lam_minus;
    const double r = plus ? d.r_plus : d.r_minus;
    const double Omega = plus ? d.Omega_plus : d.Omega_minus;
    const double s = std::sin(0.5 * Omega * t);
    return 16.0 * lam * lam * (std::cosh(2.0 * r) + std::sinh(2.0 * r) * std::cos(Omega * t)) * s * s;
}

cplx dephasing_factor(CoherenceLabel mn, double t, const DerivedParams& d,
                      const TransformedAmplitudes& ta, double gamma) {
    return std::exp(log_dephasing(mn, t, d, ta, gamma));
}

ModeOverlapSpecs displaced_amplitudes(CoherenceLabel mn, double t, const DerivedParams& d,
                                      const TransformedAmplitudes& ta) {
    const cplx xi_plus = -d.r_plus * std::exp(-2.0 * I * (d.Omega_plus * t));
    const cplx xi_minus = -d.r_minus * std::exp(-2.0 * I * (d.Omega_minus * t));
    auto plus = [&](QubitState s) {
        return displaced(ta.Z, d.lam_plus, plus_charge(s), d.Omega_plus, t);
    };
    auto minus = [&](QubitState s) {
        return displaced(ta.W, d.lam_minus, minus_charge(s), d.Omega_minus, t);
    };
    return {
        {plus(mn.m), plus(mn.n), xi_plus},
        {minus(mn.m), minus(mn.n), xi_minus},
    };
}

cplx squeezed_overlap(const OverlapSpec& spec) { return std::exp(log_squeezed_overlap(spec)); }

cplx mode_trace_factor(CoherenceLabel mn, double t, const DerivedParams& d,
                       const TransformedAmplitudes& ta) {
    return std::exp(log_mode_trace(mn, t, d, ta));
}

QubitDensityMatrix qubit_density_matrix(double t, const DerivedParams& d,
                                        const TransformedAmplitudes& ta, double gamma) {
    QubitDensityMatrix rho = QubitDensityMatrix::Identity() * 0.25;
    for (const CoherenceLabel& mn : kIndependentCoherences) {
        const cplx entry =
            0.25 * std::exp(log_dephasing(mn, t, d, ta, gamma) + log_mode_trace(mn, t, d, ta));
        rho(index(mn.m), index(mn.n)) = entry;
        rho(index(mn.n), index(mn.m)) = std::conj(entry);
    }
    return rho;
}

double purity_closed_form(double t, const DerivedParams& d, double gamma) {
    const double fp = mode_decoherence_exponent(t, Branch::Plus, d);
    const double fm = mode_decoherence_exponent(t, Branch::Minus, d);
    const double gt = gamma * t;
    const double single_flips = 4.0 * std::exp(-(fp + fm + 2.0 * gt));
    const double double_flips = std::exp(-4.0 * (fp + gt)) + std::exp(-4.0 * (fm + gt));
    return 0.25 + 2.0 * (single_flips + double_flips) / 16.0;
}

} // namespace qosc
