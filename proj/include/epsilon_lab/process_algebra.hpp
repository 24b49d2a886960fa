#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "epsilon_lab/model.hpp"

namespace epsilon_lab {

using Word = std::vector<std::size_t>;

struct WordDistribution {
  std::size_t length = 0;
  Alphabet alphabet;
  std::map<Word, double> entries;

  double total() const;
  double probability(const Word& w) const;
  std::string render(const Word& w) const;
};

// J^(x,y) = T^(y|x) (x) M^(x). Product state (i, a) has index i * |input states| + a
// and joint symbol (x, y) has index x * |Y| + y.
MachinePresentation joint_machine(const TransducerPresentation& t, const MachinePresentation& input);
// N^(y) = sum_x T^(y|x) (x) M^(x) on the same product state space.
MachinePresentation output_machine(const TransducerPresentation& t, const MachinePresentation& input);

// Joint symbol index helpers for machines built by joint_machine.
inline std::size_t joint_symbol(std::size_t x, std::size_t y, std::size_t ny) { return x * ny + y; }

// Indices (in declared order) of the unique recurrent class.
std::vector<std::size_t> recurrent_states(const MachinePresentation& m);
MachinePresentation remove_transients(const MachinePresentation& m);
MachinePresentation restrict_states(const MachinePresentation& m, const std::vector<std::size_t>& keep);

struct Partition {
  std::vector<std::size_t> block_of;
  std::size_t blocks = 0;

  std::vector<std::size_t> members(std::size_t block) const;
};

// Coarsest partition compatible with emission probabilities (within
// kEquivalenceTolerance) and successor blocks, refined from a single block.
Partition equivalence_partition(const MachinePresentation& m);
Partition equivalence_partition(const TransducerPresentation& t);

MachinePresentation merge_equivalent_states(const MachinePresentation& m);
TransducerPresentation merge_equivalent_states(const TransducerPresentation& t);
MachinePresentation quotient(const MachinePresentation& m, const Partition& p);
TransducerPresentation quotient(const TransducerPresentation& t, const Partition& p);

// Words of length L under the stationary start. Branches whose running
// probability drops below `prune` are dropped.
WordDistribution word_distribution(const MachinePresentation& m, std::size_t L, double prune = 1e-15);

// Relabel symbols through `symbol_map` (old index -> new index) and add up
// words that collide, e.g. to marginalize joint words onto outputs.
WordDistribution project(const WordDistribution& d, const Alphabet& target,
                         const std::vector<std::size_t>& symbol_map);
WordDistribution output_marginal(const WordDistribution& joint, const Alphabet& input, const Alphabet& output);
WordDistribution input_marginal(const WordDistribution& joint, const Alphabet& input, const Alphabet& output);

}  // namespace epsilon_lab
