#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "epsilon_lab/model.hpp"

namespace epsilon_lab {

// Edge-list builder; probabilities on repeated (from, to, x, y) add up.
class TransducerBuilder {
 public:
  TransducerBuilder(std::vector<std::string> states, Alphabet input, Alphabet output);
  TransducerBuilder& edge(const std::string& from, const std::string& to, const std::string& x,
                          const std::string& y, double p);
  TransducerPresentation build() const;

 private:
  std::vector<std::string> states_;
  Alphabet input_, output_;
  std::vector<std::vector<Matrix>> t_;
};

class MachineBuilder {
 public:
  MachineBuilder(std::vector<std::string> states, Alphabet alphabet);
  MachineBuilder& edge(const std::string& from, const std::string& to, const std::string& y, double p);
  MachinePresentation build() const;

 private:
  std::vector<std::string> states_;
  Alphabet alphabet_;
  std::vector<Matrix> t_;
};

MachinePresentation period2();
// Emits 0 with probability r and 1 otherwise.
MachinePresentation biased_coin(double r);
MachinePresentation iid(const std::vector<double>& probs);

TransducerPresentation delay_channel();
TransducerPresentation bob(double alpha);

struct InvestorParams {
  double p1 = 0.0, p2 = 0.0, p3 = 4.0 / 7.0;
  double q1 = 0.0, q2 = 3.0 / 5.0, q3 = 1.0 / 100.0;
};
TransducerPresentation investor(const InvestorParams& p);
// Market-sentiment inputs: {2/10, 1/10, 7/10} and {1/10, 7/10, 2/10}.
MachinePresentation investor_input(int which);

MachinePresentation inversion_input();
TransducerPresentation inversion_transducer(double p, double q, double r);

TransducerPresentation ising_mapper(double alpha1, double alpha2);
TransducerPresentation family_tn(const std::vector<double>& q);
TransducerPresentation no_ambiguity(double p, double q);

using PaperModel = std::variant<MachinePresentation, TransducerPresentation>;

// Names: period2, coin(r), iid(p0, p1, ...), delay, bob(alpha),
// investor(p1, p2, p3, q1, q2, q3), investor_input(which), inversion_input,
// inversion_transducer(p, q, r), ising(a1, a2), tn(q0, q1, ...), no_ambiguity(p, q).
PaperModel paper_model(const std::string& name, const std::map<std::string, double>& params = {});
std::vector<std::string> paper_model_names();

}  // namespace epsilon_lab
