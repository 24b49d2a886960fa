#include "epsilon_lab/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace epsilon_lab {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* what) {
  if (labels.empty()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " list is empty");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second)
      throw Error(ErrorKind::InvalidArgument, std::string("duplicate ") + what + " label '" + l + "'");
  }
}

void check_square(const Matrix& m, std::size_t n) {
  if (static_cast<std::size_t>(m.rows()) != n || static_cast<std::size_t>(m.cols()) != n) {
    std::ostringstream os;
    os << "transition matrix is " << m.rows() << "x" << m.cols() << ", expected " << n << "x" << n;
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

int positive_count(const Matrix& m, Eigen::Index row) {
  int c = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (m(row, j) > 0.0) ++c;
  return c;
}

void check_rows(const std::vector<Matrix>& mats, const std::string& where, ValidationReport& r) {
  const Eigen::Index n = mats.front().rows();
  for (const auto& m : mats) {
    if ((m.array() < 0.0).any() || !m.allFinite()) {
      if (r.nonnegative) r.problems.push_back(where + ": negative or non-finite entry");
      r.nonnegative = false;
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    double s = 0.0;
    for (const auto& m : mats) s += m.row(i).sum();
    if (std::abs(s - 1.0) > kStochasticTolerance) {
      std::ostringstream os;
      os.precision(17);
      os << where << ": row " << i << " sums to " << s;
      r.problems.push_back(os.str());
      r.stochastic = false;
    }
  }
}

Vector solve_dense(const Matrix& p) {
  const Eigen::Index n = p.rows();
  Matrix a = p.transpose() - Matrix::Identity(n, n);
  a.row(n - 1).setOnes();
  Vector b = Vector::Zero(n);
  b(n - 1) = 1.0;
  return a.fullPivLu().solve(b);
}

Vector solve_power(const Matrix& p) {
  const Eigen::Index n = p.rows();
  const Matrix lazy = 0.5 * (p + Matrix::Identity(n, n));
  Vector v = Vector::Constant(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < 2000000; ++it) {
    Vector next = lazy.transpose() * v;
    next /= next.sum();
    const double change = (next - v).cwiseAbs().maxCoeff();
    v = std::move(next);
    if (change < 1e-13) return v;
  }
  throw Error(ErrorKind::NonConvergence, "power iteration for the stationary distribution");
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  check_labels(symbols_, "symbol");
}

Alphabet Alphabet::numeric(std::size_t n) {
  std::vector<std::string> s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(std::to_string(i));
  return Alphabet(std::move(s));
}

std::optional<std::size_t> Alphabet::find(const std::string& symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

std::size_t Alphabet::index_of(const std::string& symbol) const {
  auto i = find(symbol);
  if (!i) throw Error(ErrorKind::InvalidArgument, "unknown symbol '" + symbol + "'");
  return *i;
}

MachinePresentation::MachinePresentation(std::vector<std::string> states, Alphabet alphabet,
                                         std::vector<Matrix> transitions)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), transitions_(std::move(transitions)) {
  check_labels(states_, "state");
  if (transitions_.size() != alphabet_.size())
    throw Error(ErrorKind::InvalidArgument, "one transition matrix per symbol is required");
  for (const auto& m : transitions_) check_square(m, states_.size());
}

Matrix MachinePresentation::total() const {
  Matrix t = Matrix::Zero(num_states(), num_states());
  for (const auto& m : transitions_) t += m;
  return t;
}

double MachinePresentation::emission(std::size_t state, std::size_t symbol) const {
  return transitions_.at(symbol).row(static_cast<Eigen::Index>(state)).sum();
}

bool MachinePresentation::is_unifilar() const {
  for (const auto& m : transitions_)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (positive_count(m, i) > 1) return false;
  return true;
}

TransducerPresentation::TransducerPresentation(std::vector<std::string> states, Alphabet input,
                                               Alphabet output,
                                               std::vector<std::vector<Matrix>> transitions)
    : states_(std::move(states)),
      input_(std::move(input)),
      output_(std::move(output)),
      transitions_(std::move(transitions)) {
  check_labels(states_, "state");
  if (transitions_.size() != input_.size())
    throw Error(ErrorKind::InvalidArgument, "one block of matrices per input symbol is required");
  for (const auto& block : transitions_) {
    if (block.size() != output_.size())
      throw Error(ErrorKind::InvalidArgument, "one matrix per output symbol is required");
    for (const auto& m : block) check_square(m, states_.size());
  }
}

Matrix TransducerPresentation::total(std::size_t x) const {
  Matrix t = Matrix::Zero(num_states(), num_states());
  for (const auto& m : transitions_.at(x)) t += m;
  return t;
}

double TransducerPresentation::emission(std::size_t state, std::size_t x, std::size_t y) const {
  return transitions_.at(x).at(y).row(static_cast<Eigen::Index>(state)).sum();
}

bool TransducerPresentation::is_unifilar() const {
  for (const auto& block : transitions_)
    for (const auto& m : block)
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (positive_count(m, i) > 1) return false;
  return true;
}

TransducerPresentation as_transducer(const MachinePresentation& m) {
  return TransducerPresentation(m.states(), Alphabet({"*"}), m.alphabet(), {m.transitions()});
}

MachinePresentation trivial_input() {
  return MachinePresentation({"*"}, Alphabet({"*"}), {Matrix::Ones(1, 1)});
}

std::vector<std::vector<std::size_t>> recurrent_classes(const Matrix& total) {
  const std::size_t n = static_cast<std::size_t>(total.rows());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  int counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (!(total(v, w) > 0.0)) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> c;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = static_cast<int>(comps.size());
        c.push_back(w);
      } while (w != v);
      comps.push_back(std::move(c));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);

  std::vector<std::vector<std::size_t>> closed;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    bool leaves = false;
    for (std::size_t v : comps[c])
      for (std::size_t w = 0; w < n && !leaves; ++w)
        if (total(v, w) > 0.0 && comp[w] != static_cast<int>(c)) leaves = true;
    if (!leaves) {
      auto members = comps[c];
      std::sort(members.begin(), members.end());
      closed.push_back(std::move(members));
    }
  }
  std::sort(closed.begin(), closed.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return closed;
}

ValidationReport validate_machine(const MachinePresentation& m) {
  ValidationReport r;
  check_rows(m.transitions(), "machine", r);
  r.unifilar = m.is_unifilar();
  r.recurrent_classes = recurrent_classes(m.total()).size();
  r.ergodic = r.recurrent_classes == 1;
  if (!r.ergodic) r.problems.push_back("expected one recurrent class, found " + std::to_string(r.recurrent_classes));
  return r;
}

ValidationReport validate_transducer(const TransducerPresentation& t) {
  ValidationReport r;
  Matrix drive = Matrix::Zero(t.num_states(), t.num_states());
  for (std::size_t x = 0; x < t.input_alphabet().size(); ++x) {
    check_rows(t.transitions()[x], "input " + t.input_alphabet()[x], r);
    drive += t.total(x);
  }
  r.unifilar = t.is_unifilar();
  r.recurrent_classes = recurrent_classes(drive).size();
  r.ergodic = r.recurrent_classes == 1;
  if (!r.ergodic) r.problems.push_back("expected one recurrent class, found " + std::to_string(r.recurrent_classes));
  return r;
}

StationaryDistribution::StationaryDistribution(Vector probabilities) : p_(std::move(probabilities)) {
  if (p_.size() == 0) throw Error(ErrorKind::NotADistribution, "empty distribution");
  if ((p_.array() < -1e-12).any() || !p_.allFinite())
    throw Error(ErrorKind::NotADistribution, "negative or non-finite probability");
  if (std::abs(p_.sum() - 1.0) > 1e-10) throw Error(ErrorKind::NotADistribution, "probabilities do not sum to 1");
  p_ = p_.cwiseMax(0.0);
}

StationaryDistribution stationary_distribution(const MachinePresentation& m) {
  ValidationReport r;
  check_rows(m.transitions(), "machine", r);
  if (!r.stochastic || !r.nonnegative) throw Error(ErrorKind::NotStochastic, r.problems.front());

  const Matrix total = m.total();
  const auto classes = recurrent_classes(total);
  if (classes.size() != 1)
    throw Error(ErrorKind::MultipleRecurrentClasses, std::to_string(classes.size()) + " recurrent classes");
  const auto& cls = classes.front();
  const Eigen::Index k = static_cast<Eigen::Index>(cls.size());
  Matrix sub(k, k);
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = total(cls[a], cls[b]);

  Vector v = k <= 64 ? solve_dense(sub) : solve_power(sub);
  v = v.cwiseMax(0.0);
  v /= v.sum();

  Vector pi = Vector::Zero(static_cast<Eigen::Index>(m.num_states()));
  for (Eigen::Index a = 0; a < k; ++a) pi(cls[a]) = v(a);
  const double residual = (total.transpose() * pi - pi).cwiseAbs().maxCoeff();
  if (residual > kStationaryResidual)
    throw Error(ErrorKind::NonConvergence, "stationary residual " + std::to_string(residual));
  return StationaryDistribution(std::move(pi));
}

double entropy(std::span<const double> p) {
  if (p.empty()) throw Error(ErrorKind::NotADistribution, "empty distribution");
  double sum = 0.0, h = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < -1e-12) throw Error(ErrorKind::NotADistribution, "negative or non-finite probability");
    sum += v;
    if (v > 0.0) h -= v * std::log2(v);
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error(ErrorKind::NotADistribution, "probabilities do not sum to 1");
  return std::max(h, 0.0);
}

double entropy(const Vector& p) { return entropy(std::span<const double>(p.data(), static_cast<std::size_t>(p.size()))); }

double binary_entropy(double q) {
  const double p[2] = {q, 1.0 - q};
  return entropy(std::span<const double>(p, 2));
}

double statistical_complexity(const StationaryDistribution& pi) { return entropy(pi.probabilities()); }

SuccessorMap::SuccessorMap(std::size_t states, std::size_t inputs, std::size_t outputs)
    : states_(states), inputs_(inputs), outputs_(outputs), next_(states * inputs * outputs, -1) {}

std::size_t SuccessorMap::index(std::size_t state, std::size_t x, std::size_t y) const {
  if (state >= states_ || x >= inputs_ || y >= outputs_) throw Error(ErrorKind::InvalidArgument, "successor index out of range");
  return (state * inputs_ + x) * outputs_ + y;
}

std::optional<std::size_t> SuccessorMap::operator()(std::size_t state, std::size_t x, std::size_t y) const {
  const long v = next_[index(state, x, y)];
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

void SuccessorMap::set(std::size_t state, std::size_t x, std::size_t y, std::size_t next) {
  if (next >= states_) throw Error(ErrorKind::InvalidArgument, "successor state out of range");
  next_[index(state, x, y)] = static_cast<long>(next);
}

SuccessorMap successor_map(const TransducerPresentation& t) {
  const std::size_t n = t.num_states(), nx = t.input_alphabet().size(), ny = t.output_alphabet().size();
  SuccessorMap map(n, nx, ny);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      const Matrix& m = t.transition(x, y);
      for (std::size_t i = 0; i < n; ++i) {
        int found = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (m(i, j) > 0.0) {
            map.set(i, x, y, j);
            ++found;
          }
        }
        if (found > 1)
          throw Error(ErrorKind::NotUnifilar, "state '" + t.states()[i] + "' has several successors on " +
                                                  t.output_alphabet()[y] + "|" + t.input_alphabet()[x]);
      }
    }
  return map;
}

EmissionTable emission_table(const TransducerPresentation& t) {
  const std::size_t n = t.num_states(), nx = t.input_alphabet().size(), ny = t.output_alphabet().size();
  EmissionTable e(n, std::vector<std::vector<double>>(nx, std::vector<double>(ny, 0.0)));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) e[s][x][y] = t.emission(s, x, y);
  return e;
}

TransducerPresentation assemble_transducer(std::vector<std::string> states, Alphabet input, Alphabet output,
                                           const SuccessorMap& successors, const EmissionTable& emissions) {
  const std::size_t n = states.size(), nx = input.size(), ny = output.size();
  if (successors.num_states() != n || successors.num_inputs() != nx || successors.num_outputs() != ny ||
      emissions.size() != n)
    throw Error(ErrorKind::InvalidArgument, "successor map and emission table do not match the alphabets");
  std::vector<std::vector<Matrix>> tr(nx, std::vector<Matrix>(ny, Matrix::Zero(n, n)));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) {
        const double p = emissions.at(s).at(x).at(y);
        if (p == 0.0) continue;
        auto next = successors(s, x, y);
        if (!next) throw Error(ErrorKind::InvalidArgument, "emission without a successor");
        tr[x][y](s, *next) = p;
      }
  return TransducerPresentation(std::move(states), std::move(input), std::move(output), std::move(tr));
}

}  // namespace epsilon_lab
