#include "qneat/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace qneat {

namespace {

// Below this dimension the OpenMP fork costs more than the loop.
constexpr std::size_t kParallelDim = 2048;

void check_wire(int wire, int n_qubits) {
  if (wire < 0 || wire >= n_qubits) {
    throw std::out_of_range("gate wire " + std::to_string(wire) +
                            " out of range for " + std::to_string(n_qubits) +
                            " qubits");
  }
}

using C = std::complex<double>;

void rotation_matrix(const Gate& g, C m[2][2]) {
  switch (g.kind) {
    case Gate::Kind::Rx: {
      const double c = std::cos(g.theta_x / 2.0), s = std::sin(g.theta_x / 2.0);
      m[0][0] = {c, 0.0};
      m[0][1] = {0.0, -s};
      m[1][0] = {0.0, -s};
      m[1][1] = {c, 0.0};
      return;
    }
    case Gate::Kind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      m[0][0] = {r, 0.0};
      m[0][1] = {r, 0.0};
      m[1][0] = {r, 0.0};
      m[1][1] = {-r, 0.0};
      return;
    }
    case Gate::Kind::Rot: {
      const double cx = std::cos(g.theta_x / 2.0), sx = std::sin(g.theta_x / 2.0);
      const double cy = std::cos(g.theta_y / 2.0), sy = std::sin(g.theta_y / 2.0);
      // Ry(ty) * Rx(tx)
      const C a00{cy * cx, 0.0}, a01{0.0, -cy * sx};
      const C a10{sy * cx, 0.0}, a11{0.0, -sy * sx};
      C b00 = a00 - a11;  // row 0 of Ry*Rx
      C b01 = a01 - a10;
      C b10 = a10 + a01;  // row 1
      C b11 = a11 + a00;
      const C ez0 = std::polar(1.0, -g.theta_z / 2.0);
      const C ez1 = std::polar(1.0, g.theta_z / 2.0);
      m[0][0] = ez0 * b00;
      m[0][1] = ez0 * b01;
      m[1][0] = ez1 * b10;
      m[1][1] = ez1 * b11;
      return;
    }
    default:
      throw std::logic_error("rotation_matrix: not a single-qubit gate");
  }
}

}  // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::out_of_range("qubit count must be in [1, " +
                            std::to_string(kMaxQubits) + "], got " +
                            std::to_string(n_qubits));
  }
  amps_.assign(std::size_t{1} << n_qubits, C{0.0, 0.0});
  amps_[0] = C{1.0, 0.0};
}

void Statevector::set_amplitudes(std::vector<std::complex<double>> amps) {
  if (amps.size() != dim()) {
    throw std::invalid_argument("amplitude vector has wrong length");
  }
  amps_ = std::move(amps);
}

double Statevector::norm() const {
  double s = 0.0;
  for (const C& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::apply_single_qubit(int wire, const C m[2][2]) {
  const std::uint64_t mask = wire_mask(wire);
  const std::uint64_t lo = mask - 1;
  const std::uint64_t hi = ~lo;
  const std::int64_t pairs = static_cast<std::int64_t>(dim() >> 1);
  C* amps = amps_.data();

#pragma omp parallel for schedule(static) if (dim() >= kParallelDim)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::uint64_t u = static_cast<std::uint64_t>(k);
    const std::uint64_t i0 = ((u & hi) << 1) | (u & lo);
    const std::uint64_t i1 = i0 | mask;
    const C a0 = amps[i0];
    const C a1 = amps[i1];
    amps[i0] = m[0][0] * a0 + m[0][1] * a1;
    amps[i1] = m[1][0] * a0 + m[1][1] * a1;
  }
}

void Statevector::apply_cnot(int control, int target) {
  const std::uint64_t cmask = wire_mask(control);
  const std::uint64_t tmask = wire_mask(target);
  const std::int64_t n = static_cast<std::int64_t>(dim());
  C* amps = amps_.data();

#pragma omp parallel for schedule(static) if (dim() >= kParallelDim)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t u = static_cast<std::uint64_t>(i);
    if ((u & cmask) && !(u & tmask)) {
      std::swap(amps[u], amps[u | tmask]);
    }
  }
}

void Statevector::apply(const Gate& gate) {
  if (gate.kind == Gate::Kind::Cnot) {
    check_wire(gate.wire, n_qubits_);
    check_wire(gate.target, n_qubits_);
    if (gate.wire == gate.target) {
      throw std::invalid_argument("cnot control equals target");
    }
    apply_cnot(gate.wire, gate.target);
    return;
  }
  check_wire(gate.wire, n_qubits_);
  C m[2][2];
  rotation_matrix(gate, m);
  apply_single_qubit(gate.wire, m);
}

void Statevector::apply(std::span<const Gate> gates) {
  for (const Gate& g : gates) apply(g);
}

double Statevector::expectation_z(int wire) const {
  check_wire(wire, n_qubits_);
  const std::uint64_t mask = wire_mask(wire);
  double e = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    const double p = std::norm(amps_[i]);
    e += (i & mask) ? -p : p;
  }
  return e;
}

double Statevector::expectation(const Observable& obs) const {
  // Translate wire supports to amplitude-index masks once, then one pass.
  std::vector<std::uint64_t> masks;
  masks.reserve(obs.terms.size());
  for (const Observable::Term& t : obs.terms) {
    if (!std::isfinite(t.coeff)) {
      throw std::invalid_argument("observable coefficient not finite");
    }
    std::uint64_t mask = 0;
    for (int w = 0; w < 32; ++w) {
      if (t.wire_mask & (std::uint32_t{1} << w)) {
        check_wire(w, n_qubits_);
        mask |= wire_mask(w);
      }
    }
    masks.push_back(mask);
  }
  double e = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    const double p = std::norm(amps_[i]);
    if (p == 0.0) continue;
    for (std::size_t t = 0; t < masks.size(); ++t) {
      const int parity = std::popcount(i & masks[t]) & 1;
      e += obs.terms[t].coeff * (parity ? -p : p);
    }
  }
  return e;
}

std::string Statevector::sample_bitstring(Rng& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  double cum = 0.0;
  std::size_t drawn = dim() - 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    cum += std::norm(amps_[i]);
    if (u < cum) {
      drawn = i;
      break;
    }
  }
  return format_bitstring(drawn, n_qubits_);
}

std::string format_bitstring(std::uint64_t index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int w = 0; w < n_qubits; ++w) {
    if (index & (std::uint64_t{1} << (n_qubits - 1 - w))) s[w] = '1';
  }
  return s;
}

}  // namespace qneat
