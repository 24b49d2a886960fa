#include "epsilon_lab/info_measures.hpp"

#include <cmath>
#include <map>
#include <optional>

#include "epsilon_lab/process_algebra.hpp"

namespace epsilon_lab {

namespace {

constexpr double kPrune = 1e-15;
constexpr double kBeliefGrid = 1e-12;
constexpr std::size_t kBeliefBudget = 1 << 17;

double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return std::max(h, 0.0);
}

// Walks the belief (mixed-state) distribution forward one symbol at a time and
// reports H[Y_l | Y_0 .. Y_{l-1}] for l = 0, 1, ...
class MixedStates {
 public:
  explicit MixedStates(const MachinePresentation& m) : m_(m) {
    const Vector pi = stationary_distribution(m).probabilities();
    beliefs_.push_back({pi.transpose(), 1.0});
  }

  // nullopt once the number of distinct beliefs outgrows the budget.
  std::optional<double> step() {
    std::map<std::vector<long long>, std::size_t> index;
    std::vector<Belief> next;
    double h = 0.0;
    const std::size_t ny = m_.alphabet().size();
    std::vector<double> p(ny);
    std::vector<Eigen::RowVectorXd> v(ny);
    for (const auto& b : beliefs_) {
      for (std::size_t y = 0; y < ny; ++y) {
        v[y] = b.eta * m_.transition(y);
        p[y] = v[y].sum();
      }
      h += b.mass * shannon(p);
      for (std::size_t y = 0; y < ny; ++y) {
        const double mass = b.mass * p[y];
        if (!(mass >= kPrune)) continue;
        Eigen::RowVectorXd eta = v[y] / p[y];
        std::vector<long long> key(static_cast<std::size_t>(eta.size()));
        for (Eigen::Index k = 0; k < eta.size(); ++k) key[k] = std::llround(eta(k) / kBeliefGrid);
        auto [it, fresh] = index.emplace(std::move(key), next.size());
        if (fresh) next.push_back({std::move(eta), mass});
        else next[it->second].mass += mass;
      }
      if (next.size() > kBeliefBudget) return std::nullopt;
    }
    beliefs_ = std::move(next);
    return h;
  }

 private:
  struct Belief {
    Eigen::RowVectorXd eta;
    double mass;
  };
  const MachinePresentation& m_;
  std::vector<Belief> beliefs_;
};

double unifilar_rate(const MachinePresentation& m) {
  const auto pi = stationary_distribution(m);
  double h = 0.0;
  std::vector<double> p(m.alphabet().size());
  for (std::size_t i = 0; i < m.num_states(); ++i) {
    for (std::size_t y = 0; y < p.size(); ++y) p[y] = m.emission(i, y);
    h += pi[i] * shannon(p);
  }
  return h;
}

}  // namespace

double entropy_rate(const MachinePresentation& m) {
  if (m.is_unifilar()) return unifilar_rate(m);
  MixedStates walk(m);
  auto first = walk.step();
  if (!first) throw Error(ErrorKind::NonConvergence, "mixed-state budget exceeded");
  double prev = *first;
  int quiet = 0;
  for (int l = 1; l < 256; ++l) {
    const auto next = walk.step();
    if (!next) throw Error(ErrorKind::NonConvergence, "mixed-state budget exceeded");
    const double h = *next;
    quiet = std::abs(h - prev) < 1e-10 ? quiet + 1 : 0;
    prev = h;
    if (quiet >= 2) return h;
  }
  throw Error(ErrorKind::NonConvergence, "block-difference entropy rate did not settle by L=256");
}

std::vector<double> block_entropies(const MachinePresentation& m, std::size_t L) {
  std::vector<double> H{0.0};
  MixedStates walk(m);
  for (std::size_t l = 0; l < L; ++l) {
    const auto h = walk.step();
    if (!h) throw Error(ErrorKind::NonConvergence, "mixed-state budget exceeded at L=" + std::to_string(l + 1));
    H.push_back(H.back() + *h);
  }
  return H;
}

double block_entropy(const MachinePresentation& m, std::size_t L) { return block_entropies(m, L).back(); }

ExcessEntropyEstimate excess_entropy(const MachinePresentation& m, double tol, std::size_t Lmax) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const double h = entropy_rate(m);
  MixedStates walk(m);
  ExcessEntropyEstimate est;
  int quiet = 0;
  for (std::size_t L = 1; L <= Lmax; ++L) {
    const auto cond = walk.step();
    if (!cond)
      throw ExcessEntropyNonConvergence("mixed-state budget exceeded at L=" + std::to_string(L), est);
    const double inc = *cond - h;
    est.value += inc;
    est.terminal_L = L;
    est.residual = std::abs(inc);
    quiet = est.residual < tol ? quiet + 1 : 0;
    if (quiet >= 2) return est;
  }
  throw ExcessEntropyNonConvergence("excess entropy did not converge by L=" + std::to_string(Lmax), est);
}

ExcessEntropyEstimate channel_excess_entropy(const TransducerPresentation& t, const MachinePresentation& input,
                                             double tol, std::size_t Lmax) {
  bool converged = true;
  auto run = [&](const MachinePresentation& m) {
    try {
      return excess_entropy(m, tol, Lmax);
    } catch (const ExcessEntropyNonConvergence& e) {
      converged = false;
      return e.estimate();
    }
  };
  const auto joint = run(joint_machine(t, input));
  const auto in = run(input);
  ExcessEntropyEstimate est;
  est.value = joint.value - in.value;
  est.terminal_L = std::max(joint.terminal_L, in.terminal_L);
  est.residual = std::max(joint.residual, in.residual);
  if (!converged)
    throw ExcessEntropyNonConvergence("channel excess entropy did not converge by L=" + std::to_string(Lmax), est);
  return est;
}

}  // namespace epsilon_lab
