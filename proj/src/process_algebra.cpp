#include "epsilon_lab/process_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace epsilon_lab {

double WordDistribution::total() const {
  double s = 0.0;
  for (const auto& [w, p] : entries) s += p;
  return s;
}

double WordDistribution::probability(const Word& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0.0 : it->second;
}

std::string WordDistribution::render(const Word& w) const {
  bool single_char = true;
  for (const auto& s : alphabet.symbols()) single_char = single_char && s.size() == 1;
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!single_char && k > 0) out += ' ';
    out += alphabet[w[k]];
  }
  return out;
}

namespace {

void require_same_input(const TransducerPresentation& t, const MachinePresentation& input) {
  if (!(t.input_alphabet() == input.alphabet()))
    throw Error(ErrorKind::AlphabetMismatch, "input process alphabet differs from the transducer's input alphabet");
}

std::vector<std::string> product_labels(const TransducerPresentation& t, const MachinePresentation& input) {
  std::vector<std::string> labels;
  for (const auto& a : t.states())
    for (const auto& b : input.states()) labels.push_back("(" + a + "," + b + ")");
  return labels;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

struct Cell {
  double p;
  long next;  // successor block, -1 when p == 0, -2 when it spreads over several blocks
};

using Signature = std::vector<Cell>;

bool same_signature(const Signature& a, const Signature& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k].p - b[k].p) > kEquivalenceTolerance) return false;
    if (a[k].p > 0.0 && b[k].p > 0.0 && a[k].next != b[k].next) return false;
  }
  return true;
}

// Emission matrices listed per "letter" (y for machines, (x,y) for transducers).
Partition refine(std::size_t n, const std::vector<const Matrix*>& letters) {
  Partition part;
  part.block_of.assign(n, 0);
  part.blocks = n == 0 ? 0 : 1;

  auto signature = [&](std::size_t s) {
    Signature sig;
    sig.reserve(letters.size());
    for (const Matrix* m : letters) {
      Cell c{0.0, -1};
      for (std::size_t j = 0; j < n; ++j) {
        const double v = (*m)(s, j);
        if (!(v > 0.0)) continue;
        c.p += v;
        const long b = static_cast<long>(part.block_of[j]);
        if (c.next == -1) c.next = b;
        else if (c.next != b) c.next = -2;
      }
      sig.push_back(c);
    }
    return sig;
  };

  while (true) {
    std::vector<Signature> sigs(n);
    for (std::size_t s = 0; s < n; ++s) sigs[s] = signature(s);
    // groups[old block] = list of (representative, new id)
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> groups(part.blocks);
    std::vector<std::size_t> next_block(n);
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
      auto& g = groups[part.block_of[s]];
      bool placed = false;
      for (const auto& [rep, id] : g) {
        if (same_signature(sigs[rep], sigs[s])) {
          next_block[s] = id;
          placed = true;
          break;
        }
      }
      if (!placed) {
        g.emplace_back(s, count);
        next_block[s] = count++;
      }
    }
    const bool stable = count == part.blocks;
    part.block_of = std::move(next_block);
    part.blocks = count;
    if (stable) break;
  }
  return part;
}

bool spreads(std::size_t n, const std::vector<const Matrix*>& letters, const Partition& p) {
  for (const Matrix* m : letters)
    for (std::size_t s = 0; s < n; ++s) {
      long b = -1;
      for (std::size_t j = 0; j < n; ++j) {
        if (!((*m)(s, j) > 0.0)) continue;
        const long c = static_cast<long>(p.block_of[j]);
        if (b == -1) b = c;
        else if (b != c) return true;
      }
    }
  return false;
}

std::string merged_label(const std::vector<std::string>& labels, const std::vector<std::size_t>& members) {
  std::string out = labels[members.front()];
  for (std::size_t k = 1; k < members.size(); ++k) out += "+" + labels[members[k]];
  return out;
}

std::vector<const Matrix*> letters_of(const MachinePresentation& m) {
  std::vector<const Matrix*> l;
  for (const auto& t : m.transitions()) l.push_back(&t);
  return l;
}

std::vector<const Matrix*> letters_of(const TransducerPresentation& t) {
  std::vector<const Matrix*> l;
  for (const auto& block : t.transitions())
    for (const auto& m : block) l.push_back(&m);
  return l;
}

Matrix quotient_matrix(const Matrix& m, const Partition& p) {
  const Eigen::Index k = static_cast<Eigen::Index>(p.blocks);
  Matrix out = Matrix::Zero(k, k);
  std::vector<bool> done(p.blocks, false);
  for (std::size_t s = 0; s < p.block_of.size(); ++s) {
    const std::size_t b = p.block_of[s];
    if (done[b]) continue;
    done[b] = true;
    for (std::size_t j = 0; j < p.block_of.size(); ++j) out(b, p.block_of[j]) += m(s, j);
  }
  return out;
}

std::vector<std::string> quotient_labels(const std::vector<std::string>& labels, const Partition& p) {
  std::vector<std::string> out;
  for (std::size_t b = 0; b < p.blocks; ++b) out.push_back(merged_label(labels, p.members(b)));
  return out;
}

}  // namespace

std::vector<std::size_t> Partition::members(std::size_t block) const {
  std::vector<std::size_t> m;
  for (std::size_t s = 0; s < block_of.size(); ++s)
    if (block_of[s] == block) m.push_back(s);
  return m;
}

MachinePresentation joint_machine(const TransducerPresentation& t, const MachinePresentation& input) {
  require_same_input(t, input);
  const std::size_t nx = t.input_alphabet().size(), ny = t.output_alphabet().size();
  std::vector<std::string> symbols;
  std::vector<Matrix> mats;
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      symbols.push_back("(" + t.input_alphabet()[x] + "," + t.output_alphabet()[y] + ")");
      mats.push_back(kron(t.transition(x, y), input.transition(x)));
    }
  return MachinePresentation(product_labels(t, input), Alphabet(std::move(symbols)), std::move(mats));
}

MachinePresentation output_machine(const TransducerPresentation& t, const MachinePresentation& input) {
  require_same_input(t, input);
  const std::size_t nx = t.input_alphabet().size(), ny = t.output_alphabet().size();
  const Eigen::Index n = static_cast<Eigen::Index>(t.num_states() * input.num_states());
  std::vector<Matrix> mats(ny, Matrix::Zero(n, n));
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t x = 0; x < nx; ++x) mats[y] += kron(t.transition(x, y), input.transition(x));
  return MachinePresentation(product_labels(t, input), t.output_alphabet(), std::move(mats));
}

StationaryDistribution stationary_distribution(const TransducerPresentation& t,
                                               const MachinePresentation& input) {
  const Vector joint = stationary_distribution(joint_machine(t, input)).probabilities();
  const std::size_t k = input.num_states();
  Vector pi = Vector::Zero(static_cast<Eigen::Index>(t.num_states()));
  for (std::size_t i = 0; i < t.num_states(); ++i)
    for (std::size_t a = 0; a < k; ++a) pi(i) += joint(i * k + a);
  return StationaryDistribution(std::move(pi));
}

std::vector<std::size_t> recurrent_states(const MachinePresentation& m) {
  auto classes = recurrent_classes(m.total());
  if (classes.size() != 1)
    throw Error(ErrorKind::MultipleRecurrentClasses, std::to_string(classes.size()) + " recurrent classes");
  return classes.front();
}

MachinePresentation restrict_states(const MachinePresentation& m, const std::vector<std::size_t>& keep) {
  const Eigen::Index k = static_cast<Eigen::Index>(keep.size());
  std::vector<std::string> labels;
  for (auto s : keep) labels.push_back(m.states().at(s));
  std::vector<Matrix> mats;
  for (const auto& t : m.transitions()) {
    Matrix sub(k, k);
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index b = 0; b < k; ++b) sub(a, b) = t(keep[a], keep[b]);
    mats.push_back(std::move(sub));
  }
  return MachinePresentation(std::move(labels), m.alphabet(), std::move(mats));
}

MachinePresentation remove_transients(const MachinePresentation& m) {
  return restrict_states(m, recurrent_states(m));
}

Partition equivalence_partition(const MachinePresentation& m) { return refine(m.num_states(), letters_of(m)); }

Partition equivalence_partition(const TransducerPresentation& t) { return refine(t.num_states(), letters_of(t)); }

MachinePresentation quotient(const MachinePresentation& m, const Partition& p) {
  if (spreads(m.num_states(), letters_of(m), p))
    throw Error(ErrorKind::NotUnifilar, "partition is not compatible with a unifilar quotient");
  std::vector<Matrix> mats;
  for (const auto& t : m.transitions()) mats.push_back(quotient_matrix(t, p));
  return MachinePresentation(quotient_labels(m.states(), p), m.alphabet(), std::move(mats));
}

TransducerPresentation quotient(const TransducerPresentation& t, const Partition& p) {
  if (spreads(t.num_states(), letters_of(t), p))
    throw Error(ErrorKind::NotUnifilar, "partition is not compatible with a unifilar quotient");
  std::vector<std::vector<Matrix>> mats;
  for (const auto& block : t.transitions()) {
    std::vector<Matrix> row;
    for (const auto& m : block) row.push_back(quotient_matrix(m, p));
    mats.push_back(std::move(row));
  }
  return TransducerPresentation(quotient_labels(t.states(), p), t.input_alphabet(), t.output_alphabet(),
                                std::move(mats));
}

MachinePresentation merge_equivalent_states(const MachinePresentation& m) {
  if (!m.is_unifilar()) throw Error(ErrorKind::NotUnifilar, "merging requires a unifilar machine");
  return quotient(m, equivalence_partition(m));
}

TransducerPresentation merge_equivalent_states(const TransducerPresentation& t) {
  if (!t.is_unifilar()) throw Error(ErrorKind::NotUnifilar, "merging requires a unifilar transducer");
  return quotient(t, equivalence_partition(t));
}

WordDistribution word_distribution(const MachinePresentation& m, std::size_t L, double prune) {
  const Vector pi = stationary_distribution(m).probabilities();
  std::vector<std::pair<Word, Eigen::RowVectorXd>> level;
  level.emplace_back(Word{}, pi.transpose());
  for (std::size_t step = 0; step < L; ++step) {
    std::vector<std::pair<Word, Eigen::RowVectorXd>> next;
    next.reserve(level.size() * m.alphabet().size());
    for (const auto& [w, v] : level)
      for (std::size_t y = 0; y < m.alphabet().size(); ++y) {
        Eigen::RowVectorXd u = v * m.transition(y);
        if (u.sum() < prune) continue;
        Word w2 = w;
        w2.push_back(y);
        next.emplace_back(std::move(w2), std::move(u));
      }
    level = std::move(next);
  }
  WordDistribution d{L, m.alphabet(), {}};
  for (const auto& [w, v] : level) d.entries.emplace_hint(d.entries.end(), w, v.sum());
  return d;
}

WordDistribution project(const WordDistribution& d, const Alphabet& target,
                         const std::vector<std::size_t>& symbol_map) {
  if (symbol_map.size() != d.alphabet.size())
    throw Error(ErrorKind::ShapeMismatch, "symbol map does not cover the alphabet");
  WordDistribution out{d.length, target, {}};
  for (const auto& [w, p] : d.entries) {
    Word v(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) v[k] = symbol_map[w[k]];
    out.entries[v] += p;
  }
  return out;
}

WordDistribution output_marginal(const WordDistribution& joint, const Alphabet& input, const Alphabet& output) {
  std::vector<std::size_t> map;
  for (std::size_t x = 0; x < input.size(); ++x)
    for (std::size_t y = 0; y < output.size(); ++y) map.push_back(y);
  return project(joint, output, map);
}

WordDistribution input_marginal(const WordDistribution& joint, const Alphabet& input, const Alphabet& output) {
  std::vector<std::size_t> map;
  for (std::size_t x = 0; x < input.size(); ++x)
    for (std::size_t y = 0; y < output.size(); ++y) map.push_back(x);
  return project(joint, input, map);
}

}  // namespace epsilon_lab
