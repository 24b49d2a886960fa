#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "epsilon_lab/model.hpp"

namespace epsilon_lab {

enum class EncodingProvenance { Standard, FidelitySaturating, ScaledHeuristic, UserSupplied };
const char* to_string(EncodingProvenance p);

inline constexpr double kEigenvalueCutoff = 1e-12;
inline constexpr double kPsdSlack = 1e-10;

// Real, pure states stored as tensor factors: |s_i> = factor_0.col(i) (x) factor_1.col(i) (x) ...
// A single factor is an explicit D x N matrix of column vectors.
class QuantumEncoding {
 public:
  explicit QuantumEncoding(Matrix vectors, EncodingProvenance provenance = EncodingProvenance::UserSupplied);
  QuantumEncoding(std::vector<Matrix> factors, EncodingProvenance provenance);

  std::size_t num_states() const noexcept { return static_cast<std::size_t>(factors_.front().cols()); }
  std::size_t dimension() const;
  const std::vector<Matrix>& factors() const noexcept { return factors_; }
  EncodingProvenance provenance() const noexcept { return provenance_; }

  // c_ij = <s_i|s_j>, computed factor by factor.
  Matrix overlaps() const;
  // Explicit D x N matrix; D grows as the product of factor sizes.
  Matrix vectors() const;

 private:
  std::vector<Matrix> factors_;
  EncodingProvenance provenance_;
};

class FidelityMatrix {
 public:
  FidelityMatrix(Matrix f, std::size_t iterations, double residual);

  const Matrix& matrix() const noexcept { return f_; }
  double operator()(std::size_t i, std::size_t j) const { return f_(i, j); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(f_.rows()); }
  std::size_t iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  Matrix f_;
  std::size_t iterations_;
  double residual_;
};

class FidelityNonConvergence : public Error {
 public:
  explicit FidelityNonConvergence(FidelityMatrix last)
      : Error(ErrorKind::NonConvergence, "fidelity recursion did not settle"), last_(std::move(last)) {}
  const FidelityMatrix& last() const noexcept { return last_; }

 private:
  FidelityMatrix last_;
};

class GramEnsemble {
 public:
  GramEnsemble(StationaryDistribution pi, Matrix overlaps);

  const StationaryDistribution& pi() const noexcept { return pi_; }
  const Matrix& overlaps() const noexcept { return overlaps_; }
  const Matrix& gram() const noexcept { return gram_; }
  Vector eigenvalues() const;

 private:
  StationaryDistribution pi_;
  Matrix overlaps_;
  Matrix gram_;
};

struct ComplexityReport {
  std::optional<double> E;
  std::optional<double> Q;
  double C = 0.0;
  EncodingProvenance provenance = EncodingProvenance::Standard;
  bool e_converged = true;
};

enum class QuantumMode { Standard, Saturating };

// Greatest fixed point (below all-ones) of
// F_ss' = min_x sum_y sqrt(T_{s,l(s)} T_{s',l(s')}) F_{l(s) l(s')}.
FidelityMatrix fidelity_constraints(const TransducerPresentation& t, double tol = 1e-12,
                                    std::size_t max_iterations = 100000);

QuantumEncoding standard_encoding(const TransducerPresentation& t);

// Unpivoted semidefinite Cholesky: state i is row i of the factor.
QuantumEncoding states_from_overlaps(const Matrix& targets,
                                     EncodingProvenance provenance = EncodingProvenance::UserSupplied);

double von_neumann_entropy(const GramEnsemble& g);
double von_neumann_entropy(const Vector& eigenvalues);
// Entropy of rho = sum_i pi_i |s_i><s_i| built explicitly.
double density_matrix_entropy(const QuantumEncoding& enc, const StationaryDistribution& pi);

// Overlap targets for the saturating mode: the fidelity matrix itself when it
// is PSD, else I + s (F - I) with the largest feasible s.
struct SaturationTargets {
  Matrix targets;
  double scale = 1.0;
  EncodingProvenance provenance = EncodingProvenance::FidelitySaturating;
};
SaturationTargets saturation_targets(const FidelityMatrix& f);

QuantumEncoding encoding_for(const TransducerPresentation& t, QuantumMode mode);

ComplexityReport quantum_complexity(const TransducerPresentation& t, const MachinePresentation& input,
                                    QuantumMode mode = QuantumMode::Standard);
// A process viewed as a transducer with a trivial input.
ComplexityReport quantum_complexity(const MachinePresentation& m, QuantumMode mode = QuantumMode::Standard);

}  // namespace epsilon_lab
