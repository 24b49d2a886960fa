#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "epsilon_lab/paper_models.hpp"
#include "epsilon_lab/quantum.hpp"
#include "support.hpp"

using namespace epsilon_lab;

namespace {

Matrix overlap3(double c) {
  Matrix m = Matrix::Identity(3, 3);
  m(0, 1) = m(1, 0) = c;
  return m;
}

}  // namespace

TEST_CASE("fidelity fixed points of the paper agents") {
  CHECK(fidelity_constraints(delay_channel())(0, 1) == 0.0);
  for (double alpha : {0.1, 0.5, 0.9}) CHECK(std::abs(fidelity_constraints(bob(alpha))(0, 1) - std::sqrt(alpha)) < 1e-12);
  for (double a1 : {0.0, 0.3})
    for (double a2 : {0.7, 0.2}) {
      const double expect = std::sqrt(a1 * (1 - a2)) + std::sqrt(a2 * (1 - a1));
      CHECK(std::abs(fidelity_constraints(ising_mapper(a1, a2))(0, 1) - expect) < 1e-12);
    }
}

TEST_CASE("fidelity iteration needs a unifilar transducer") {
  const auto bad = TransducerBuilder({"a", "b"}, Alphabet::numeric(1), Alphabet::numeric(1))
                       .edge("a", "a", "0", "0", 0.5)
                       .edge("a", "b", "0", "0", 0.5)
                       .edge("b", "a", "0", "0", 1.0)
                       .build();
  CHECK_THROWS_AS(fidelity_constraints(bad), Error);
}

TEST_CASE("standard encoding overlaps") {
  for (double alpha : {0.25, 0.6}) {
    const Matrix c = standard_encoding(bob(alpha)).overlaps();
    CHECK(std::abs(c(0, 1) - std::sqrt(alpha)) < 1e-12);
  }
  const Matrix d = standard_encoding(delay_channel()).overlaps();
  CHECK(d(0, 1) == 0.0);
  const double a1 = 0.3, a2 = 0.8;
  CHECK(std::abs(standard_encoding(ising_mapper(a1, a2)).overlaps()(0, 1) -
                 (std::sqrt(a1 * (1 - a2)) + std::sqrt(a2 * (1 - a1)))) < 1e-12);
}

TEST_CASE("states from overlaps") {
  const double f = 0.6;
  const auto enc = states_from_overlaps(overlap3(f), EncodingProvenance::FidelitySaturating);
  const Matrix v = enc.vectors();
  CHECK(std::abs(v(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(v(0, 1) - f) < 1e-12);
  CHECK(std::abs(v(1, 1) - std::sqrt(1 - f * f)) < 1e-12);
  CHECK(std::abs(v(2, 2) - 1.0) < 1e-12);
  CHECK((enc.overlaps() - overlap3(f)).cwiseAbs().maxCoeff() < 1e-10);

  CHECK((states_from_overlaps(Matrix::Identity(4, 4), EncodingProvenance::UserSupplied).vectors() - Matrix::Identity(4, 4))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  const Matrix ones = states_from_overlaps(Matrix::Ones(3, 3), EncodingProvenance::UserSupplied).vectors();
  CHECK((ones.col(0) - ones.col(2)).norm() < 1e-12);

  Matrix bad = Matrix::Ones(3, 3);
  bad(0, 2) = bad(2, 0) = 0.0;
  try {
    states_from_overlaps(bad, EncodingProvenance::UserSupplied);
    FAIL("expected NotPSD");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPSD);
  }
}

TEST_CASE("random PSD targets are reproduced") {
  std::mt19937_64 g(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(support::pick(g, 4));
    Matrix v(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) v(i, j) = support::uniform(g);
    for (Eigen::Index j = 0; j < n; ++j) v.col(j).normalize();
    Matrix targets = v.transpose() * v;
    targets.diagonal().setOnes();
    targets = (0.5 * (targets + targets.transpose())).eval();
    CHECK((states_from_overlaps(targets, EncodingProvenance::UserSupplied).overlaps() - targets).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("von Neumann entropy") {
  const StationaryDistribution pi(Vector::Constant(3, 1.0 / 3.0));
  CHECK(std::abs(von_neumann_entropy(GramEnsemble(pi, Matrix::Identity(3, 3))) - std::log2(3.0)) < 1e-12);
  CHECK(std::abs(von_neumann_entropy(GramEnsemble(StationaryDistribution(Vector::Constant(2, 0.5)), Matrix::Ones(2, 2)))) < 1e-12);

  // Three states with one pair overlapping by c and the third orthogonal.
  const double pf = 0.3, pe = 0.5, pu = 0.2, c = 0.7;
  Vector w(3);
  w << pf, pe, pu;
  const double disc = std::sqrt((pf - pe) * (pf - pe) + 4 * c * c * pf * pe);
  const std::vector<double> ev{pu, (pf + pe + disc) / 2, (pf + pe - disc) / 2};
  double h = 0.0;
  for (double e : ev) h -= e * std::log2(e);
  CHECK(std::abs(von_neumann_entropy(GramEnsemble(StationaryDistribution(w), overlap3(c))) - h) < 1e-12);
}

TEST_CASE("gram and density matrix spectra agree") {
  std::mt19937_64 g(42);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [t, in] = support::random_instance(g);
    const auto enc = standard_encoding(t);
    if (enc.dimension() > 400) continue;
    const auto pi = stationary_distribution(t, in);
    CHECK(std::abs(von_neumann_entropy(GramEnsemble(pi, enc.overlaps())) - density_matrix_entropy(enc, pi)) < 1e-9);
  }
}

TEST_CASE("two-state entropy decreases with overlap") {
  const StationaryDistribution pi(Vector::Map(std::vector<double>{0.3, 0.7}.data(), 2));
  double prev = 2.0;
  for (double c = 0.01; c < 1.0; c += 0.01) {
    Matrix o = Matrix::Identity(2, 2);
    o(0, 1) = o(1, 0) = c;
    const double q = von_neumann_entropy(GramEnsemble(pi, o));
    CHECK(q < prev);
    prev = q;
  }
}

TEST_CASE("quantum complexity of the paper agents") {
  for (double r : {0.2, 0.5, 0.8}) {
    const auto a = quantum_complexity(delay_channel(), biased_coin(r), QuantumMode::Standard);
    CHECK(std::abs(*a.Q - binary_entropy(r)) < 1e-9);
    CHECK(std::abs(a.C - binary_entropy(r)) < 1e-9);
  }
  // Bob's qubit states sqrt(a)|0> + sqrt(1-a)|1> and |0> with weights (b, 1-b).
  for (double alpha : {0.3, 0.5})
    for (double r : {0.2, 0.6}) {
      const double b = 1.0 / (1.0 + (1 - r) * (1 - alpha));
      const double disc = std::sqrt(1 - 4 * b * (1 - b) * (1 - alpha));
      const double q = binary_entropy((1 + disc) / 2);
      CHECK(std::abs(*quantum_complexity(bob(alpha), biased_coin(r), QuantumMode::Standard).Q - q) < 1e-12);
      CHECK(std::abs(*quantum_complexity(bob(alpha), biased_coin(r), QuantumMode::Saturating).Q - q) < 1e-10);
    }
}

TEST_CASE("non-PSD fidelity targets fall back to scaling") {
  Matrix f = Matrix::Ones(3, 3);
  f(0, 2) = f(2, 0) = 0.0;
  const auto sat = saturation_targets(FidelityMatrix(f, 1, 0.0));
  CHECK(sat.provenance == EncodingProvenance::ScaledHeuristic);
  CHECK(sat.scale < 1.0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(sat.targets);
  CHECK(es.eigenvalues().minCoeff() > -1e-10);
}

TEST_CASE("random transducers respect the ordering bounds") {
  std::mt19937_64 g(43);
  for (int trial = 0; trial < 60; ++trial) {
    const auto [t, in] = support::random_instance(g);
    const auto r = quantum_complexity(t, in, QuantumMode::Standard);
    CHECK(*r.Q <= r.C + 1e-9);
    const Matrix c = standard_encoding(t).overlaps();
    const Matrix f = fidelity_constraints(t).matrix();
    CHECK((c - f).maxCoeff() <= 1e-9);
  }
}

TEST_CASE("deterministic transducers have orthogonal states") {
  const auto t = TransducerBuilder({"a", "b", "c"}, Alphabet::numeric(2), Alphabet::numeric(3))
                     .edge("a", "b", "0", "0", 1.0)
                     .edge("a", "c", "1", "1", 1.0)
                     .edge("b", "c", "0", "1", 1.0)
                     .edge("b", "a", "1", "2", 1.0)
                     .edge("c", "a", "0", "2", 1.0)
                     .edge("c", "b", "1", "0", 1.0)
                     .build();
  const Matrix f = fidelity_constraints(t).matrix();
  CHECK((f - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  for (double r : {0.1, 0.5}) {
    const auto rep = quantum_complexity(t, biased_coin(r), QuantumMode::Saturating);
    CHECK(std::abs(*rep.Q - rep.C) < 1e-12);
  }
}
