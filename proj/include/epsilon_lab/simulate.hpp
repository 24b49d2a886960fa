#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "epsilon_lab/model.hpp"
#include "epsilon_lab/process_algebra.hpp"

namespace epsilon_lab {

// mt19937_64 with doubles taken from the top 53 bits, so a seed gives the
// same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t categorical(const std::vector<double>& weights);

 private:
  std::mt19937_64 engine_;
};

inline constexpr const char* kGeneratorName = "mt19937_64";

struct Trajectory {
  std::uint64_t seed = 0;
  std::string generator = kGeneratorName;
  Alphabet alphabet;
  std::vector<std::size_t> symbols;
  // One more entry than symbols: the start state and each state entered.
  std::vector<std::size_t> states;
  std::vector<std::string> state_labels;

  std::size_t length() const { return symbols.size(); }
};

Trajectory sample_path(const MachinePresentation& m, std::size_t length, std::uint64_t seed);
// Samples the joint machine, so symbols are joint (x,y) indices.
Trajectory sample_path(const TransducerPresentation& t, const MachinePresentation& input, std::size_t length,
                       std::uint64_t seed);

WordDistribution empirical_word_distribution(const Trajectory& traj, std::size_t L);
double total_variation(const WordDistribution& p, const WordDistribution& q);

}  // namespace epsilon_lab
