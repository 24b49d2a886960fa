#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "epsilon_lab/model.hpp"

namespace epsilon_lab {

// Inverse channel before completion: inputs are the forward channel's outputs
// and outputs are its inputs. transitions[y][x](i, j) = Pr(x, j | i, y).
struct InverseDraft {
  std::vector<std::string> states;
  Alphabet input;   // forward output alphabet
  Alphabet output;  // forward input alphabet
  std::vector<std::vector<Matrix>> transitions;
  // (state, input symbol) pairs never reached under the forward output process.
  std::vector<std::pair<std::size_t, std::size_t>> free_slots;
};

enum class CompletionPolicy { SelfLoop, Uniform };

InverseDraft invert(const TransducerPresentation& t, const MachinePresentation& input);

// SelfLoop fills a free (state, y) slot with a certain self-transition emitting
// the output symbol whose label equals y's label (the first output symbol when
// there is none). Uniform spreads the slot evenly over output symbols, also
// as a self-transition.
TransducerPresentation complete(const InverseDraft& d, CompletionPolicy policy = CompletionPolicy::SelfLoop);
TransducerPresentation complete_and_minimize(const InverseDraft& d,
                                             CompletionPolicy policy = CompletionPolicy::SelfLoop);

// Output process in its merged presentation; this is what drives the inverse.
MachinePresentation minimal_output_process(const TransducerPresentation& t, const MachinePresentation& input);

}  // namespace epsilon_lab
