#include "epsilon_lab/inversion.hpp"

#include <cmath>

#include "epsilon_lab/process_algebra.hpp"

namespace epsilon_lab {

InverseDraft invert(const TransducerPresentation& t, const MachinePresentation& input) {
  const MachinePresentation joint_full = joint_machine(t, input);
  const std::vector<std::size_t> keep = recurrent_states(joint_full);
  const MachinePresentation joint = restrict_states(joint_full, keep);
  const MachinePresentation out = restrict_states(output_machine(t, input), keep);

  // Output states chi are blocks of the output presentation's equivalence partition.
  const Partition chi = equivalence_partition(out);
  const std::size_t n = keep.size(), nx = t.input_alphabet().size(), ny = t.output_alphabet().size();
  for (std::size_t y = 0; y < ny; ++y)
    for (std::size_t i = 0; i < n; ++i) {
      long b = -1;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(out.transition(y)(i, j) > 0.0)) continue;
        const long c = static_cast<long>(chi.block_of[j]);
        if (b == -1) b = c;
        else if (b != c)
          throw Error(ErrorKind::OutputStateCorrespondenceAmbiguous,
                      "joint state " + joint.states()[i] + " feeds several output states on " + t.output_alphabet()[y]);
      }
    }

  std::vector<std::string> chi_labels;
  for (std::size_t b = 0; b < chi.blocks; ++b) chi_labels.push_back("chi" + std::to_string(b));

  InverseDraft d{{}, t.output_alphabet(), t.input_alphabet(), {}, {}};
  for (std::size_t i = 0; i < n; ++i) d.states.push_back("(" + joint.states()[i] + "," + chi_labels[chi.block_of[i]] + ")");
  d.transitions.assign(ny, std::vector<Matrix>(nx, Matrix::Zero(n, n)));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t y = 0; y < ny; ++y) {
      const double q = out.emission(i, y);
      bool any = false;
      for (std::size_t x = 0; x < nx; ++x) {
        const Matrix& J = joint.transition(joint_symbol(x, y, ny));
        for (std::size_t j = 0; j < n; ++j) {
          const double p = J(i, j);
          if (!(p > 0.0)) continue;
          if (!(q > 0.0)) throw Error(ErrorKind::ZeroDivisor, "joint transition with zero output probability");
          d.transitions[y][x](i, j) = p / q;
          any = true;
        }
      }
      if (!any) d.free_slots.emplace_back(i, y);
    }
  return d;
}

TransducerPresentation complete(const InverseDraft& d, CompletionPolicy policy) {
  auto tr = d.transitions;
  const std::size_t nx = d.output.size();
  for (const auto& [s, y] : d.free_slots) {
    if (policy == CompletionPolicy::SelfLoop) {
      const std::size_t x = d.output.find(d.input[y]).value_or(0);
      tr[y][x](s, s) = 1.0;
    } else {
      for (std::size_t x = 0; x < nx; ++x) tr[y][x](s, s) = 1.0 / static_cast<double>(nx);
    }
  }
  return TransducerPresentation(d.states, d.input, d.output, std::move(tr));
}

TransducerPresentation complete_and_minimize(const InverseDraft& d, CompletionPolicy policy) {
  return merge_equivalent_states(complete(d, policy));
}

MachinePresentation minimal_output_process(const TransducerPresentation& t, const MachinePresentation& input) {
  const MachinePresentation out = remove_transients(output_machine(t, input));
  const Partition p = equivalence_partition(out);
  return quotient(out, p);
}

}  // namespace epsilon_lab
