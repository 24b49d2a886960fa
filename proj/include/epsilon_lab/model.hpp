#pragma once

// Presentations of stochastic processes (edge-emitting hidden Markov models)
// and of input-output processes (conditional presentations), plus the
// stationary-distribution and Shannon-entropy primitives built on them.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "epsilon_lab/error.hpp"

namespace epsilon_lab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Row sums must match 1 within this to count as stochastic.
inline constexpr double kStochasticTolerance = 1e-12;
// Used when deciding that two emission probabilities are "the same".
inline constexpr double kEquivalenceTolerance = 1e-9;
// Residual bound for pi T = pi.
inline constexpr double kStationaryResidual = 1e-10;

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  // Symbols "0", "1", ..., "n-1".
  static Alphabet numeric(std::size_t n);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& operator[](std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  std::optional<std::size_t> find(const std::string& symbol) const;
  std::size_t index_of(const std::string& symbol) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

// Edge-emitting HMM: transition(y)(i, j) = Pr(Y = y, S' = j | S = i).
// Construction checks shapes only; probability invariants are reported by
// validate_machine so that malformed inputs can still be inspected.
class MachinePresentation {
 public:
  MachinePresentation(std::vector<std::string> states, Alphabet alphabet,
                      std::vector<Matrix> transitions);

  std::size_t num_states() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Matrix& transition(std::size_t symbol) const { return transitions_.at(symbol); }
  const std::vector<Matrix>& transitions() const noexcept { return transitions_; }

  // Sum over symbols.
  Matrix total() const;
  // Probability of emitting `symbol` from `state`.
  double emission(std::size_t state, std::size_t symbol) const;
  bool is_unifilar() const;

 private:
  std::vector<std::string> states_;
  Alphabet alphabet_;
  std::vector<Matrix> transitions_;
};

// Conditional presentation: transition(x, y)(i, j) = Pr(Y = y, S' = j | X = x, S = i).
class TransducerPresentation {
 public:
  TransducerPresentation(std::vector<std::string> states, Alphabet input, Alphabet output,
                         std::vector<std::vector<Matrix>> transitions);

  std::size_t num_states() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const Alphabet& input_alphabet() const noexcept { return input_; }
  const Alphabet& output_alphabet() const noexcept { return output_; }
  const Matrix& transition(std::size_t x, std::size_t y) const { return transitions_.at(x).at(y); }
  const std::vector<std::vector<Matrix>>& transitions() const noexcept { return transitions_; }

  // Sum over outputs for a fixed input.
  Matrix total(std::size_t x) const;
  double emission(std::size_t state, std::size_t x, std::size_t y) const;
  bool is_unifilar() const;

 private:
  std::vector<std::string> states_;
  Alphabet input_;
  Alphabet output_;
  std::vector<std::vector<Matrix>> transitions_;
};

// A machine viewed as a transducer driven by a one-symbol input.
TransducerPresentation as_transducer(const MachinePresentation& m);
// Single-state source of the one symbol that as_transducer uses as input.
MachinePresentation trivial_input();

struct ValidationReport {
  bool stochastic = true;
  bool nonnegative = true;
  bool unifilar = true;
  bool ergodic = true;
  std::size_t recurrent_classes = 0;
  std::vector<std::string> problems;

  bool valid() const { return stochastic && nonnegative && ergodic; }
};

ValidationReport validate_machine(const MachinePresentation& m);
// Ergodicity of a transducer depends on its input; here it is judged on the
// chain driven by the uniform IID input.
ValidationReport validate_transducer(const TransducerPresentation& t);

// Strongly connected components of the support graph that have no edge
// leaving them, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> recurrent_classes(const Matrix& total);

class StationaryDistribution {
 public:
  explicit StationaryDistribution(Vector probabilities);

  std::size_t size() const noexcept { return static_cast<std::size_t>(p_.size()); }
  double operator[](std::size_t i) const { return p_(static_cast<Eigen::Index>(i)); }
  const Vector& probabilities() const noexcept { return p_; }

 private:
  Vector p_;
};

StationaryDistribution stationary_distribution(const MachinePresentation& m);
// Occupation of the transducer's states when driven by `input`, obtained by
// marginalizing the joint machine's stationary distribution.
StationaryDistribution stationary_distribution(const TransducerPresentation& t,
                                               const MachinePresentation& input);

// Shannon entropy in bits with 0 log 0 = 0.
double entropy(std::span<const double> p);
double entropy(const Vector& p);
double binary_entropy(double q);

double statistical_complexity(const StationaryDistribution& pi);

// lambda(state, x, y) -> next state, defined where T^(y|x) has support.
class SuccessorMap {
 public:
  SuccessorMap(std::size_t states, std::size_t inputs, std::size_t outputs);

  std::optional<std::size_t> operator()(std::size_t state, std::size_t x, std::size_t y) const;
  void set(std::size_t state, std::size_t x, std::size_t y, std::size_t next);

  std::size_t num_states() const noexcept { return states_; }
  std::size_t num_inputs() const noexcept { return inputs_; }
  std::size_t num_outputs() const noexcept { return outputs_; }

 private:
  std::size_t index(std::size_t state, std::size_t x, std::size_t y) const;

  std::size_t states_, inputs_, outputs_;
  std::vector<long> next_;
};

SuccessorMap successor_map(const TransducerPresentation& t);

// emissions[s][x][y] = Pr(y | s, x).
using EmissionTable = std::vector<std::vector<std::vector<double>>>;
EmissionTable emission_table(const TransducerPresentation& t);

// Inverse of (successor_map, emission_table) for unifilar transducers.
TransducerPresentation assemble_transducer(std::vector<std::string> states, Alphabet input,
                                           Alphabet output, const SuccessorMap& successors,
                                           const EmissionTable& emissions);

}  // namespace epsilon_lab
