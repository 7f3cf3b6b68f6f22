#include "qneat/reference_sim.hpp"

#include <cmath>
#include <stdexcept>

namespace qneat::ref {

namespace {

using C = std::complex<double>;

void single_qubit_matrix(const Gate& g, C m[2][2]) {
  const C i{0.0, 1.0};
  switch (g.kind) {
    case Gate::Kind::Rx:
      m[0][0] = std::cos(g.theta_x / 2.0);
      m[0][1] = -i * std::sin(g.theta_x / 2.0);
      m[1][0] = -i * std::sin(g.theta_x / 2.0);
      m[1][1] = std::cos(g.theta_x / 2.0);
      return;
    case Gate::Kind::H:
      m[0][0] = m[0][1] = m[1][0] = 1.0 / std::sqrt(2.0);
      m[1][1] = -1.0 / std::sqrt(2.0);
      return;
    case Gate::Kind::Rot: {
      const C rx[2][2] = {{std::cos(g.theta_x / 2.0), -i * std::sin(g.theta_x / 2.0)},
                          {-i * std::sin(g.theta_x / 2.0), std::cos(g.theta_x / 2.0)}};
      const C ry[2][2] = {{std::cos(g.theta_y / 2.0), -std::sin(g.theta_y / 2.0)},
                          {std::sin(g.theta_y / 2.0), std::cos(g.theta_y / 2.0)}};
      const C rz[2][2] = {{std::exp(-i * (g.theta_z / 2.0)), 0.0},
                          {0.0, std::exp(i * (g.theta_z / 2.0))}};
      C yx[2][2];
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          yx[r][c] = ry[r][0] * rx[0][c] + ry[r][1] * rx[1][c];
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          m[r][c] = rz[r][0] * yx[0][c] + rz[r][1] * yx[1][c];
      return;
    }
    default:
      throw std::logic_error("not a single-qubit gate");
  }
}

int wire_bit(int wire, std::uint64_t index, int n_qubits) {
  return (index >> (n_qubits - 1 - wire)) & 1;
}

}  // namespace

std::vector<C> gate_matrix(const Gate& gate, int n_qubits) {
  if (n_qubits > 8) {
    throw std::out_of_range("reference matrices limited to 8 qubits");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<C> mat(dim * dim, C{0.0, 0.0});

  if (gate.kind == Gate::Kind::Cnot) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      std::uint64_t row = col;
      if (wire_bit(gate.wire, col, n_qubits) == 1) {
        row = col ^ (std::uint64_t{1} << (n_qubits - 1 - gate.target));
      }
      mat[row * dim + col] = C{1.0, 0.0};
    }
    return mat;
  }

  C m[2][2];
  single_qubit_matrix(gate, m);
  for (std::uint64_t row = 0; row < dim; ++row) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      const std::uint64_t rest_mask =
          ~(std::uint64_t{1} << (n_qubits - 1 - gate.wire)) & (dim - 1);
      if ((row & rest_mask) != (col & rest_mask)) continue;
      mat[row * dim + col] =
          m[wire_bit(gate.wire, row, n_qubits)][wire_bit(gate.wire, col, n_qubits)];
    }
  }
  return mat;
}

Statevector apply_gate(const Statevector& state, const Gate& gate) {
  const std::size_t dim = state.dim();
  const std::vector<C> mat = gate_matrix(gate, state.n_qubits());
  std::vector<C> out(dim, C{0.0, 0.0});
  for (std::size_t r = 0; r < dim; ++r) {
    C acc{0.0, 0.0};
    for (std::size_t c = 0; c < dim; ++c) {
      acc += mat[r * dim + c] * state.amplitude(c);
    }
    out[r] = acc;
  }
  Statevector result(state.n_qubits());
  result.set_amplitudes(std::move(out));
  return result;
}

Statevector apply_circuit(Statevector state, std::span<const Gate> gates) {
  for (const Gate& g : gates) state = apply_gate(state, g);
  return state;
}

double expectation(const Statevector& state, const Observable& obs) {
  double e = 0.0;
  for (std::size_t z = 0; z < state.dim(); ++z) {
    const std::string bits = format_bitstring(z, state.n_qubits());
    const double p = std::norm(state.amplitude(z));
    for (const Observable::Term& t : obs.terms) {
      double eig = 1.0;
      for (int w = 0; w < state.n_qubits(); ++w) {
        if (t.wire_mask & (std::uint32_t{1} << w)) {
          eig *= bits[w] == '1' ? -1.0 : 1.0;
        }
      }
      e += t.coeff * eig * p;
    }
  }
  return e;
}

}  // namespace qneat::ref
