#pragma once

#include <stdexcept>
#include <string>

namespace qosc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter outside the region where the normal-mode frequencies are real.
struct StabilityError : Error {
    using Error::Error;
};

// Non-positive frequency or negative coupling/rate.
struct DomainError : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    using Error::Error;
};

// Input matrix is not a valid two-qubit density matrix.
struct InvalidState : Error {
    using Error::Error;
};

// Fock truncation too small for the requested amplitudes or eigenstates.
struct CutoffTooSmall : Error {
    using Error::Error;
};

// RK4 step-halving probe exceeded its local error budget.
struct StepTooLarge : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace qosc
