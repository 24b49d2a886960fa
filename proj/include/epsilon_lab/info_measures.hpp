#pragma once

#include <cstddef>
#include <vector>

#include "epsilon_lab/model.hpp"

namespace epsilon_lab {

struct ExcessEntropyEstimate {
  double value = 0.0;
  std::size_t terminal_L = 0;
  double residual = 0.0;
};

// Thrown when E_L has not settled by Lmax; the partial estimate is kept.
class ExcessEntropyNonConvergence : public Error {
 public:
  ExcessEntropyNonConvergence(const std::string& message, ExcessEntropyEstimate estimate)
      : Error(ErrorKind::NonConvergence, message), estimate_(estimate) {}
  const ExcessEntropyEstimate& estimate() const noexcept { return estimate_; }

 private:
  ExcessEntropyEstimate estimate_;
};

inline constexpr double kDefaultExcessTolerance = 1e-9;
inline constexpr std::size_t kDefaultExcessLmax = 24;

double entropy_rate(const MachinePresentation& m);
double block_entropy(const MachinePresentation& m, std::size_t L);
// H(0), H(1), ..., H(L).
std::vector<double> block_entropies(const MachinePresentation& m, std::size_t L);

ExcessEntropyEstimate excess_entropy(const MachinePresentation& m, double tol = kDefaultExcessTolerance,
                                     std::size_t Lmax = kDefaultExcessLmax);
ExcessEntropyEstimate channel_excess_entropy(const TransducerPresentation& t, const MachinePresentation& input,
                                             double tol = kDefaultExcessTolerance,
                                             std::size_t Lmax = kDefaultExcessLmax);

}  // namespace epsilon_lab
