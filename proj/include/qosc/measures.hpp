// measures.hpp — purity, concurrence and entanglement of formation of a
// two-qubit density matrix.

#pragma once

#include "qosc/analytic.hpp"

namespace qosc {

struct MeasureReport {
    double purity{1.0};
    double concurrence{0.0};
    double eof{0.0};
};

// Throws InvalidState unless rho is finite, Hermitian and has unit trace (1e-8).
void check_density_matrix(const QubitDensityMatrix& rho);

double purity(const QubitDensityMatrix& rho);

// Wootters concurrence from the spectrum of rho (sy x sy) rho* (sy x sy).
double concurrence(const QubitDensityMatrix& rho);

// Binary entropy in bits, 0 log 0 = 0.
double binary_entropy(double x);

double eof_from_concurrence(double c);
double eof(const QubitDensityMatrix& rho);

MeasureReport measure(const QubitDensityMatrix& rho);

} // namespace qosc
