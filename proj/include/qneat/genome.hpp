#pragma once

#include <array>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qneat/rng.hpp"
#include "qneat/statevector.hpp"

namespace qneat {

// Constrained layout: layer l >= 1 holds at most one rotation per wire
// followed by CNOTs running from wire w to (w + 1) mod n_wires. A gene is
// identified by (type, layer, wire); angles ride along on rotation genes.

struct RotGene {
  int layer = 1;
  int wire = 0;
  std::array<double, 3> angles{0.0, 0.0, 0.0};
  int innovation = 0;
};

struct CnotGene {
  int layer = 1;
  int wire_from = 0;
  int innovation = 0;
};

// Global chronology of structural mutations. Rotations and CNOTs occupy
// different sublayers, so each type keeps its own number line; looking up an
// already-seen slot returns its original number. Lookup-or-insert is atomic.
class InnovationRegistry {
 public:
  int rot(int layer, int wire);
  int cnot(int layer, int wire_from);

  using Table = std::map<std::pair<int, int>, int>;
  Table rot_table() const;
  Table cnot_table() const;
  void restore(const Table& rots, const Table& cnots);

 private:
  mutable std::mutex mu_;
  Table rot_;
  Table cnot_;
  int next_rot_ = 1;
  int next_cnot_ = 1;
};

struct Genome {
  int n_wires = 0;
  std::vector<RotGene> rots;    // strictly increasing innovation
  std::vector<CnotGene> cnots;  // strictly increasing innovation

  int gene_count() const { return static_cast<int>(rots.size() + cnots.size()); }
  int max_layer() const;
  bool has_rot(int layer, int wire) const;
  bool has_cnot(int layer, int wire_from) const;
  void insert(const RotGene& gene);
  void insert(const CnotGene& gene);
};

// Gate order: layers ascending; within a layer rotations by wire, then CNOTs
// by control wire.
std::vector<Gate> reconstruct_circuit(const Genome& genome);
std::vector<std::vector<Gate>> reconstruct_layers(const Genome& genome);

Genome crossover(const Genome& a, const Genome& b, double fitness_a,
                 double fitness_b, Rng& rng);

Genome mutate_weights(Genome genome, double sigma, double p_weight, Rng& rng);
Genome mutate_add_rot(Genome genome, InnovationRegistry& registry, Rng& rng);
Genome mutate_add_cnot(Genome genome, InnovationRegistry& registry, Rng& rng);

double compatibility_distance(const Genome& a, const Genome& b, double c1,
                              double c2, double c3);

Genome init_genome(int initial_layers, int n_wires, InnovationRegistry& registry,
                   Rng& rng);

}  // namespace qneat
