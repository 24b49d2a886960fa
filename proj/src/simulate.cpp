#include "epsilon_lab/simulate.hpp"

#include <cmath>

namespace epsilon_lab {

std::size_t Rng::categorical(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  const double u = uniform() * total;
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] <= 0.0) continue;
    acc += weights[k];
    last = k;
    if (u < acc) return k;
  }
  return last;
}

Trajectory sample_path(const MachinePresentation& m, std::size_t length, std::uint64_t seed) {
  const auto pi = stationary_distribution(m);
  const std::size_t n = m.num_states(), k = m.alphabet().size();

  // Row s lists Pr(y, s' | s) flattened as y * n + s'.
  std::vector<std::vector<double>> rows(n, std::vector<double>(n * k, 0.0));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t t = 0; t < n; ++t)
        rows[s][y * n + t] = m.transition(y)(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t));

  Trajectory traj{seed, kGeneratorName, m.alphabet(), {}, {}, m.states()};
  traj.symbols.reserve(length);
  traj.states.reserve(length + 1);

  Rng rng(seed);
  std::vector<double> start(pi.probabilities().data(), pi.probabilities().data() + n);
  std::size_t s = rng.categorical(start);
  traj.states.push_back(s);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t c = rng.categorical(rows[s]);
    traj.symbols.push_back(c / n);
    s = c % n;
    traj.states.push_back(s);
  }
  return traj;
}

Trajectory sample_path(const TransducerPresentation& t, const MachinePresentation& input, std::size_t length,
                       std::uint64_t seed) {
  return sample_path(joint_machine(t, input), length, seed);
}

WordDistribution empirical_word_distribution(const Trajectory& traj, std::size_t L) {
  if (L == 0 || traj.symbols.size() < L)
    throw Error(ErrorKind::TooShort, "trajectory of length " + std::to_string(traj.symbols.size()) +
                                         " has no words of length " + std::to_string(L));
  WordDistribution d{L, traj.alphabet, {}};
  const std::size_t windows = traj.symbols.size() - L + 1;
  Word w(L);
  for (std::size_t i = 0; i < windows; ++i) {
    std::copy(traj.symbols.begin() + static_cast<std::ptrdiff_t>(i),
              traj.symbols.begin() + static_cast<std::ptrdiff_t>(i + L), w.begin());
    d.entries[w] += 1.0;
  }
  for (auto& [word, p] : d.entries) p /= static_cast<double>(windows);
  return d;
}

double total_variation(const WordDistribution& p, const WordDistribution& q) {
  if (p.length != q.length || !(p.alphabet == q.alphabet))
    throw Error(ErrorKind::ShapeMismatch, "word distributions differ in length or alphabet");
  double sum = 0.0;
  auto a = p.entries.begin(), b = q.entries.begin();
  while (a != p.entries.end() || b != q.entries.end()) {
    if (b == q.entries.end() || (a != p.entries.end() && a->first < b->first)) {
      sum += std::abs(a->second);
      ++a;
    } else if (a == p.entries.end() || b->first < a->first) {
      sum += std::abs(b->second);
      ++b;
    } else {
      sum += std::abs(a->second - b->second);
      ++a, ++b;
    }
  }
  return std::min(1.0, 0.5 * sum);
}

}  // namespace epsilon_lab
