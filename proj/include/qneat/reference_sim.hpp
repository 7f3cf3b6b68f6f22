#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qneat/statevector.hpp"

namespace qneat::ref {

// Serial dense-matrix route: each gate is expanded to its full 2^n x 2^n
// unitary and applied by matrix-vector product. O(4^n) per gate, n <= 8.
// Kept as the independent baseline for tests and for the simulator benchmark.

std::vector<std::complex<double>> gate_matrix(const Gate& gate, int n_qubits);

Statevector apply_gate(const Statevector& state, const Gate& gate);
Statevector apply_circuit(Statevector state, std::span<const Gate> gates);

// Expectation via explicit eigenvalue lookup on formatted bitstrings.
double expectation(const Statevector& state, const Observable& obs);

}  // namespace qneat::ref
