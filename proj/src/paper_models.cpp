#include "epsilon_lab/paper_models.hpp"

#include <cmath>

namespace epsilon_lab {

namespace {

double unit(const std::string& name, double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw Error(ErrorKind::ParamOutOfRange, name + " = " + std::to_string(v) + " is outside [0, 1]");
  return v;
}

double get(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double require(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw Error(ErrorKind::ParamOutOfRange, "missing parameter " + key);
  return it->second;
}

std::vector<double> indexed(const std::map<std::string, double>& params, const std::string& prefix) {
  std::vector<double> v;
  for (std::size_t k = 0;; ++k) {
    auto it = params.find(prefix + std::to_string(k));
    if (it == params.end()) break;
    v.push_back(it->second);
  }
  return v;
}

}  // namespace

TransducerBuilder::TransducerBuilder(std::vector<std::string> states, Alphabet input, Alphabet output)
    : states_(std::move(states)), input_(std::move(input)), output_(std::move(output)) {
  const Eigen::Index n = static_cast<Eigen::Index>(states_.size());
  t_.assign(input_.size(), std::vector<Matrix>(output_.size(), Matrix::Zero(n, n)));
}

TransducerBuilder& TransducerBuilder::edge(const std::string& from, const std::string& to, const std::string& x,
                                           const std::string& y, double p) {
  const Alphabet st(states_);
  t_[input_.index_of(x)][output_.index_of(y)](st.index_of(from), st.index_of(to)) += p;
  return *this;
}

TransducerPresentation TransducerBuilder::build() const { return TransducerPresentation(states_, input_, output_, t_); }

MachineBuilder::MachineBuilder(std::vector<std::string> states, Alphabet alphabet)
    : states_(std::move(states)), alphabet_(std::move(alphabet)) {
  const Eigen::Index n = static_cast<Eigen::Index>(states_.size());
  t_.assign(alphabet_.size(), Matrix::Zero(n, n));
}

MachineBuilder& MachineBuilder::edge(const std::string& from, const std::string& to, const std::string& y, double p) {
  const Alphabet st(states_);
  t_[alphabet_.index_of(y)](st.index_of(from), st.index_of(to)) += p;
  return *this;
}

MachinePresentation MachineBuilder::build() const { return MachinePresentation(states_, alphabet_, t_); }

MachinePresentation period2() {
  return MachineBuilder({"A", "B"}, Alphabet::numeric(2)).edge("A", "B", "0", 1.0).edge("B", "A", "1", 1.0).build();
}

MachinePresentation biased_coin(double r) {
  unit("r", r);
  return MachineBuilder({"A"}, Alphabet::numeric(2)).edge("A", "A", "0", r).edge("A", "A", "1", 1.0 - r).build();
}

MachinePresentation iid(const std::vector<double>& probs) {
  if (probs.empty()) throw Error(ErrorKind::ParamOutOfRange, "iid needs at least one probability");
  MachineBuilder b({"A"}, Alphabet::numeric(probs.size()));
  for (std::size_t k = 0; k < probs.size(); ++k) b.edge("A", "A", std::to_string(k), unit("p" + std::to_string(k), probs[k]));
  return b.build();
}

TransducerPresentation delay_channel() {
  return TransducerBuilder({"1", "2"}, Alphabet::numeric(2), Alphabet::numeric(2))
      .edge("1", "1", "0", "0", 1.0)
      .edge("1", "2", "1", "0", 1.0)
      .edge("2", "1", "0", "1", 1.0)
      .edge("2", "2", "1", "1", 1.0)
      .build();
}

TransducerPresentation bob(double alpha) {
  unit("alpha", alpha);
  return TransducerBuilder({"1", "2"}, Alphabet::numeric(2), Alphabet::numeric(2))
      .edge("1", "1", "0", "0", 1.0)
      .edge("1", "1", "1", "0", alpha)
      .edge("1", "2", "1", "1", 1.0 - alpha)
      .edge("2", "1", "0", "0", 1.0)
      .edge("2", "1", "1", "0", 1.0)
      .build();
}

TransducerPresentation investor(const InvestorParams& p) {
  unit("p1", p.p1), unit("p2", p.p2), unit("p3", p.p3);
  unit("q1", p.q1), unit("q2", p.q2), unit("q3", p.q3);
  return TransducerBuilder({"f", "e", "u"}, Alphabet::numeric(3), Alphabet::numeric(3))
      .edge("f", "u", "0", "0", p.p1)
      .edge("f", "u", "1", "0", p.q1)
      .edge("f", "e", "0", "1", 1.0 - p.p1)
      .edge("f", "e", "1", "1", 1.0 - p.q1)
      .edge("f", "e", "2", "2", 1.0)
      .edge("e", "f", "0", "0", p.p3)
      .edge("e", "f", "1", "0", p.q3)
      .edge("e", "e", "0", "1", 1.0 - p.p3)
      .edge("e", "e", "1", "1", 1.0 - p.q3)
      .edge("e", "e", "2", "2", 1.0)
      .edge("u", "e", "0", "1", p.p2)
      .edge("u", "e", "1", "1", p.q2)
      .edge("u", "e", "2", "2", 1.0)
      .edge("u", "u", "0", "0", 1.0 - p.p2)
      .edge("u", "u", "1", "0", 1.0 - p.q2)
      .build();
}

MachinePresentation investor_input(int which) {
  if (which == 1) return iid({0.2, 0.1, 0.7});
  if (which == 2) return iid({0.1, 0.7, 0.2});
  throw Error(ErrorKind::ParamOutOfRange, "investor input is 1 or 2");
}

MachinePresentation inversion_input() {
  return MachineBuilder({"r0", "r1"}, Alphabet::numeric(3))
      .edge("r0", "r1", "1", 0.5)
      .edge("r0", "r1", "2", 0.5)
      .edge("r1", "r0", "0", 0.5)
      .edge("r1", "r1", "1", 0.5)
      .build();
}

TransducerPresentation inversion_transducer(double p, double q, double r) {
  unit("p", p), unit("q", q), unit("r", r);
  return TransducerBuilder({"s0", "s1", "s2"}, Alphabet::numeric(3), Alphabet::numeric(3))
      .edge("s0", "s0", "0", "0", 1.0)
      .edge("s0", "s1", "1", "1", p)
      .edge("s0", "s2", "1", "2", 1.0 - p)
      .edge("s0", "s2", "2", "2", 1.0)
      .edge("s1", "s0", "0", "0", 1.0)
      .edge("s1", "s1", "1", "1", q)
      .edge("s1", "s2", "1", "2", 1.0 - q)
      .edge("s1", "s2", "2", "2", 1.0)
      .edge("s2", "s0", "0", "0", 1.0)
      .edge("s2", "s1", "1", "1", r)
      .edge("s2", "s2", "1", "2", 1.0 - r)
      .edge("s2", "s2", "2", "2", 1.0)
      .build();
}

TransducerPresentation ising_mapper(double alpha1, double alpha2) {
  unit("alpha1", alpha1), unit("alpha2", alpha2);
  return TransducerBuilder({"1", "2"}, Alphabet::numeric(2), Alphabet::numeric(2))
      .edge("1", "1", "0", "0", 1.0)
      .edge("1", "1", "1", "0", alpha1)
      .edge("1", "2", "1", "1", 1.0 - alpha1)
      .edge("2", "1", "0", "0", 1.0)
      .edge("2", "1", "1", "0", 1.0 - alpha2)
      .edge("2", "2", "1", "1", alpha2)
      .build();
}

TransducerPresentation family_tn(const std::vector<double>& q) {
  const std::size_t n = q.size();
  if (n < 2) throw Error(ErrorKind::ParamOutOfRange, "the T_n family needs n >= 2");
  std::vector<std::string> states;
  for (std::size_t j = 0; j < n; ++j) states.push_back(std::to_string(j));
  TransducerBuilder b(states, Alphabet::numeric(2), Alphabet::numeric(n));
  for (std::size_t j = 0; j < n; ++j) {
    const double qj = unit("q" + std::to_string(j), q[j]);
    const std::string s = states[j], t = states[(j + 1) % n];
    b.edge(s, s, "0", s, 1.0);
    b.edge(s, s, "1", s, 1.0 - qj);
    b.edge(s, t, "1", t, qj);
  }
  return b.build();
}

TransducerPresentation no_ambiguity(double p, double q) {
  unit("p", p), unit("q", q);
  return TransducerBuilder({"0", "1"}, Alphabet::numeric(2), Alphabet::numeric(2))
      .edge("0", "0", "0", "0", 1.0 - p)
      .edge("0", "1", "0", "1", p)
      .edge("0", "0", "1", "0", 1.0)
      .edge("1", "0", "0", "0", q)
      .edge("1", "1", "0", "1", 1.0 - q)
      .edge("1", "0", "1", "0", 1.0)
      .build();
}

std::vector<std::string> paper_model_names() {
  return {"period2", "coin", "iid", "delay", "bob", "investor", "investor_input", "inversion_input",
          "inversion_transducer", "ising", "tn", "no_ambiguity"};
}

PaperModel paper_model(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "period2") return period2();
  if (name == "coin") return biased_coin(require(params, "r"));
  if (name == "iid") return iid(indexed(params, "p"));
  if (name == "delay") return delay_channel();
  if (name == "bob") return bob(require(params, "alpha"));
  if (name == "investor") {
    InvestorParams p;
    p.p1 = get(params, "p1", p.p1), p.p2 = get(params, "p2", p.p2), p.p3 = get(params, "p3", p.p3);
    p.q1 = get(params, "q1", p.q1), p.q2 = get(params, "q2", p.q2), p.q3 = get(params, "q3", p.q3);
    return investor(p);
  }
  if (name == "investor_input") return investor_input(static_cast<int>(get(params, "which", 1)));
  if (name == "inversion_input") return inversion_input();
  if (name == "inversion_transducer")
    return inversion_transducer(get(params, "p", 0.0), get(params, "q", 1.0 / 3.0), get(params, "r", 0.25));
  if (name == "ising") return ising_mapper(require(params, "a1"), require(params, "a2"));
  if (name == "tn") {
    auto q = indexed(params, "q");
    if (params.count("n") && static_cast<std::size_t>(params.at("n")) != q.size())
      throw Error(ErrorKind::ParamOutOfRange, "n does not match the number of q values");
    return family_tn(q);
  }
  if (name == "no_ambiguity") return no_ambiguity(require(params, "p"), require(params, "q"));
  throw Error(ErrorKind::UnknownName, "no paper model called '" + name + "'");
}

}  // namespace epsilon_lab
