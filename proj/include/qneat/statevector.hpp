#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qneat/rng.hpp"

namespace qneat {

inline constexpr int kMaxQubits = 12;

struct Gate {
  enum class Kind { Rot, Cnot, Rx, H };

  Kind kind = Kind::H;
  int wire = 0;    // Rot/Rx/H target; Cnot control
  int target = 0;  // Cnot target
  double theta_x = 0.0;
  double theta_y = 0.0;
  double theta_z = 0.0;

  // Three-angle rotation Rz(tz)*Ry(ty)*Rx(tx), Rx applied first.
  static Gate rot(int wire, double tx, double ty, double tz) {
    return {Kind::Rot, wire, 0, tx, ty, tz};
  }
  static Gate cnot(int control, int target) {
    return {Kind::Cnot, control, target, 0.0, 0.0, 0.0};
  }
  static Gate rx(int wire, double theta) {
    return {Kind::Rx, wire, 0, theta, 0.0, 0.0};
  }
  static Gate h(int wire) { return {Kind::H, wire, 0, 0.0, 0.0, 0.0}; }
};

// Weighted sum of Pauli-Z strings. Bit w of wire_mask means Z acts on wire w;
// an empty mask is the identity term.
struct Observable {
  struct Term {
    double coeff = 0.0;
    std::uint32_t wire_mask = 0;
  };
  std::vector<Term> terms;
};

// Dense statevector over n <= 12 qubits. Wire 0 is the most significant bit
// of the amplitude index; bitstrings list wire 0 first.
class Statevector {
 public:
  explicit Statevector(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::complex<double> amplitude(std::size_t index) const { return amps_[index]; }
  void set_amplitudes(std::vector<std::complex<double>> amps);

  double norm() const;

  void apply(const Gate& gate);
  void apply(std::span<const Gate> gates);

  double expectation_z(int wire) const;
  double expectation(const Observable& obs) const;
  std::string sample_bitstring(Rng& rng) const;

  // Amplitude-index bit mask of a wire under the MSB-first convention.
  std::uint64_t wire_mask(int wire) const {
    return std::uint64_t{1} << (n_qubits_ - 1 - wire);
  }

 private:
  void apply_single_qubit(int wire, const std::complex<double> m[2][2]);
  void apply_cnot(int control, int target);

  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

inline Statevector apply_gate(Statevector state, const Gate& gate) {
  state.apply(gate);
  return state;
}

std::string format_bitstring(std::uint64_t index, int n_qubits);

}  // namespace qneat
