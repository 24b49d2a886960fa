#include "epsilon_lab/quantum.hpp"

#include <algorithm>
#include <cmath>

#include "epsilon_lab/info_measures.hpp"
#include "epsilon_lab/process_algebra.hpp"

namespace epsilon_lab {

const char* to_string(EncodingProvenance p) {
  switch (p) {
    case EncodingProvenance::Standard: return "standard";
    case EncodingProvenance::FidelitySaturating: return "fidelity-saturating";
    case EncodingProvenance::ScaledHeuristic: return "scaled-heuristic";
    case EncodingProvenance::UserSupplied: return "user-supplied";
  }
  return "unknown";
}

namespace {

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void check_unit_columns(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "encoding needs at least one factor");
  const Eigen::Index n = factors.front().cols();
  for (const auto& f : factors) {
    if (f.cols() != n) throw Error(ErrorKind::InvalidArgument, "encoding factors disagree on the number of states");
    for (Eigen::Index i = 0; i < n; ++i)
      if (std::abs(f.col(i).squaredNorm() - 1.0) > 1e-10)
        throw Error(ErrorKind::InvalidArgument, "encoding vector is not unit-norm");
  }
}

}  // namespace

QuantumEncoding::QuantumEncoding(Matrix vectors, EncodingProvenance provenance)
    : factors_{std::move(vectors)}, provenance_(provenance) {
  check_unit_columns(factors_);
}

QuantumEncoding::QuantumEncoding(std::vector<Matrix> factors, EncodingProvenance provenance)
    : factors_(std::move(factors)), provenance_(provenance) {
  check_unit_columns(factors_);
}

std::size_t QuantumEncoding::dimension() const {
  std::size_t d = 1;
  for (const auto& f : factors_) d *= static_cast<std::size_t>(f.rows());
  return d;
}

Matrix QuantumEncoding::overlaps() const {
  Matrix c = Matrix::Ones(factors_.front().cols(), factors_.front().cols());
  for (const auto& f : factors_) c = c.cwiseProduct(f.transpose() * f);
  return c;
}

Matrix QuantumEncoding::vectors() const {
  Matrix v = factors_.front();
  for (std::size_t k = 1; k < factors_.size(); ++k) {
    const Matrix& f = factors_[k];
    Matrix next(v.rows() * f.rows(), v.cols());
    for (Eigen::Index i = 0; i < v.cols(); ++i)
      for (Eigen::Index a = 0; a < v.rows(); ++a) next.col(i).segment(a * f.rows(), f.rows()) = v(a, i) * f.col(i);
    v = std::move(next);
  }
  return v;
}

FidelityMatrix::FidelityMatrix(Matrix f, std::size_t iterations, double residual)
    : f_(std::move(f)), iterations_(iterations), residual_(residual) {}

GramEnsemble::GramEnsemble(StationaryDistribution pi, Matrix overlaps)
    : pi_(std::move(pi)), overlaps_(std::move(overlaps)) {
  const Eigen::Index n = static_cast<Eigen::Index>(pi_.size());
  if (overlaps_.rows() != n || overlaps_.cols() != n)
    throw Error(ErrorKind::ShapeMismatch, "overlap matrix does not match the distribution");
  if ((overlaps_ - overlaps_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw Error(ErrorKind::NotPSD, "overlap matrix is not symmetric");
  const Vector s = pi_.probabilities().cwiseSqrt();
  gram_ = s.asDiagonal() * overlaps_ * s.asDiagonal();
  if (std::abs(gram_.trace() - 1.0) > 1e-10) throw Error(ErrorKind::NotPSD, "Gram matrix does not have unit trace");
  if (min_eigenvalue(gram_) < -kPsdSlack) throw Error(ErrorKind::NotPSD, "Gram matrix has a negative eigenvalue");
}

Vector GramEnsemble::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

FidelityMatrix fidelity_constraints(const TransducerPresentation& t, double tol, std::size_t max_iterations) {
  const SuccessorMap next = successor_map(t);
  const EmissionTable e = emission_table(t);
  const std::size_t n = t.num_states(), nx = t.input_alphabet().size(), ny = t.output_alphabet().size();

  Matrix f = Matrix::Ones(n, n);
  double change = 0.0;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    Matrix g = Matrix::Identity(n, n);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t u = s + 1; u < n; ++u) {
        double best = 1.0;
        for (std::size_t x = 0; x < nx; ++x) {
          double sum = 0.0;
          for (std::size_t y = 0; y < ny; ++y) {
            const double a = e[s][x][y], b = e[u][x][y];
            if (a > 0.0 && b > 0.0) sum += std::sqrt(a * b) * f(*next(s, x, y), *next(u, x, y));
          }
          best = std::min(best, sum);
        }
        g(s, u) = g(u, s) = best;
      }
    change = (g - f).cwiseAbs().maxCoeff();
    f = std::move(g);
    if (change < tol) return FidelityMatrix(std::move(f), it, change);
  }
  throw FidelityNonConvergence(FidelityMatrix(std::move(f), max_iterations, change));
}

QuantumEncoding standard_encoding(const TransducerPresentation& t) {
  const Eigen::Index n = static_cast<Eigen::Index>(t.num_states());
  const std::size_t ny = t.output_alphabet().size();
  std::vector<Matrix> factors;
  for (std::size_t x = 0; x < t.input_alphabet().size(); ++x) {
    Matrix f = Matrix::Zero(static_cast<Eigen::Index>(ny) * n, n);
    for (std::size_t y = 0; y < ny; ++y)
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < n; ++k) f(static_cast<Eigen::Index>(y) * n + k, i) = std::sqrt(t.transition(x, y)(i, k));
    factors.push_back(std::move(f));
  }
  return QuantumEncoding(std::move(factors), EncodingProvenance::Standard);
}

QuantumEncoding states_from_overlaps(const Matrix& targets, EncodingProvenance provenance) {
  const Eigen::Index n = targets.rows();
  if (targets.cols() != n || n == 0) throw Error(ErrorKind::ShapeMismatch, "overlap targets must be square");
  if ((targets - targets.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw Error(ErrorKind::InvalidArgument, "overlap targets are not symmetric");
  if ((targets.diagonal().array() - 1.0).abs().maxCoeff() > 1e-12)
    throw Error(ErrorKind::InvalidArgument, "overlap targets need a unit diagonal");
  if (min_eigenvalue(targets) < -kPsdSlack) throw Error(ErrorKind::NotPSD, "no set of states has these overlaps");

  Matrix l = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double d = targets(j, j) - l.row(j).head(j).squaredNorm();
    l(j, j) = std::sqrt(std::max(d, 0.0));
    for (Eigen::Index i = j + 1; i < n; ++i) {
      if (l(j, j) > 1e-12) l(i, j) = (targets(i, j) - l.row(i).head(j).dot(l.row(j).head(j))) / l(j, j);
    }
  }
  Matrix v = l.transpose();
  for (Eigen::Index i = 0; i < n; ++i) v.col(i).normalize();
  return QuantumEncoding(std::move(v), provenance);
}

double von_neumann_entropy(const Vector& eigenvalues) {
  double h = 0.0;
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    const double e = eigenvalues(k);
    if (e > kEigenvalueCutoff) h -= e * std::log2(e);
  }
  return std::max(h, 0.0);
}

double von_neumann_entropy(const GramEnsemble& g) { return von_neumann_entropy(g.eigenvalues()); }

double density_matrix_entropy(const QuantumEncoding& enc, const StationaryDistribution& pi) {
  const Matrix v = enc.vectors();
  if (static_cast<std::size_t>(v.cols()) != pi.size()) throw Error(ErrorKind::ShapeMismatch, "one weight per state");
  const Matrix rho = v * pi.probabilities().asDiagonal() * v.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  return von_neumann_entropy(es.eigenvalues());
}

SaturationTargets saturation_targets(const FidelityMatrix& f) {
  const Matrix& F = f.matrix();
  if (min_eigenvalue(F) >= -kPsdSlack) return {F, 1.0, EncodingProvenance::FidelitySaturating};
  const Eigen::Index n = F.rows();
  const Matrix I = Matrix::Identity(n, n);
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < 60; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (min_eigenvalue(I + mid * (F - I)) >= -kPsdSlack) lo = mid;
    else hi = mid;
  }
  return {I + lo * (F - I), lo, EncodingProvenance::ScaledHeuristic};
}

QuantumEncoding encoding_for(const TransducerPresentation& t, QuantumMode mode) {
  if (mode == QuantumMode::Standard) return standard_encoding(t);
  const auto sat = saturation_targets(fidelity_constraints(t));
  return states_from_overlaps(sat.targets, sat.provenance);
}

ComplexityReport quantum_complexity(const TransducerPresentation& t, const MachinePresentation& input,
                                    QuantumMode mode) {
  ComplexityReport r;
  const auto pi = stationary_distribution(t, input);
  r.C = statistical_complexity(pi);
  const auto enc = encoding_for(t, mode);
  r.provenance = enc.provenance();
  r.Q = von_neumann_entropy(GramEnsemble(pi, enc.overlaps()));
  try {
    r.E = channel_excess_entropy(t, input).value;
  } catch (const ExcessEntropyNonConvergence& e) {
    r.E = e.estimate().value;
    r.e_converged = false;
  }
  return r;
}

ComplexityReport quantum_complexity(const MachinePresentation& m, QuantumMode mode) {
  return quantum_complexity(as_transducer(m), trivial_input(), mode);
}

}  // namespace epsilon_lab
