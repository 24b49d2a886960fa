#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "epsilon_lab/inversion.hpp"
#include "epsilon_lab/paper_models.hpp"
#include "epsilon_lab/process_algebra.hpp"
#include "epsilon_lab/simulate.hpp"
#include "support.hpp"

using namespace epsilon_lab;

namespace {

std::size_t state(const MachinePresentation& m, const std::string& label) { return Alphabet(m.states()).index_of(label); }

double edge(const MachinePresentation& m, const std::string& from, const std::string& to, const std::string& y) {
  return m.transition(m.alphabet().index_of(y))(state(m, from), state(m, to));
}

}  // namespace

TEST_CASE("joint machine of the inversion example") {
  const auto j = joint_machine(inversion_transducer(0.0, 1.0 / 3.0, 0.25), inversion_input());
  CHECK(j.num_states() == 6);
  CHECK(j.alphabet().size() == 9);
  CHECK(edge(j, "(s0,r0)", "(s2,r1)", "(2,2)") == doctest::Approx(0.5));
  CHECK(j.is_unifilar());
  CHECK(validate_machine(j).stochastic);

  const auto r = remove_transients(j);
  CHECK(r.states() == std::vector<std::string>{"(s0,r0)", "(s1,r1)", "(s2,r1)"});
  CHECK(merge_equivalent_states(r).num_states() == 3);
}

TEST_CASE("alphabet mismatch is reported") {
  try {
    joint_machine(bob(0.5), inversion_input());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AlphabetMismatch);
  }
}

TEST_CASE("trivial input reproduces the transducer") {
  const auto m = period2();
  const auto j = joint_machine(as_transducer(m), trivial_input());
  CHECK(j.num_states() == 2);
  for (std::size_t y = 0; y < 2; ++y) CHECK(j.transition(y) == m.transition(y));
}

TEST_CASE("bob joint chain marginalizes to (b, 1-b)") {
  const auto pi = stationary_distribution(bob(0.5), biased_coin(0.2));
  const double b = 1.0 / (1.0 + 0.8 * 0.5);
  CHECK(std::abs(pi[0] - b) < 1e-12);
  // Brute-force power iteration on the product chain.
  const Matrix total = joint_machine(bob(0.5), biased_coin(0.2)).total();
  Vector p = Vector::Constant(total.rows(), 1.0 / static_cast<double>(total.rows()));
  for (int k = 0; k < 2000; ++k) p = (total.transpose() * p).eval();
  CHECK(std::abs(p(0) - b) < 1e-12);
}

TEST_CASE("ising output machine edges") {
  const double a1 = 0.0, a2 = 0.7, r = 0.5;
  const auto o = output_machine(ising_mapper(a1, a2), biased_coin(r));
  CHECK(std::abs(o.transition(0)(1, 0) - (1.0 - (1.0 - r) * a2)) < 1e-15);
  CHECK(std::abs(o.transition(1)(0, 1) - (1.0 - r) * (1.0 - a1)) < 1e-15);
}

TEST_CASE("identity channel passes the input through") {
  const auto id = TransducerBuilder({"A"}, Alphabet::numeric(2), Alphabet::numeric(2))
                      .edge("A", "A", "0", "0", 1.0)
                      .edge("A", "A", "1", "1", 1.0)
                      .build();
  const auto in = biased_coin(0.3);
  CHECK(total_variation(word_distribution(output_machine(id, in), 4), word_distribution(in, 4)) < 1e-12);
}

TEST_CASE("output machine of the inversion example") {
  const double p = 0.3;
  const auto o = minimal_output_process(inversion_transducer(p, 1.0 / 3.0, 0.25), inversion_input());
  CHECK(o.num_states() == 3);
  CHECK(std::abs(edge(o, "(s0,r0)", "(s2,r1)", "2") - (1.0 - p / 2.0)) < 1e-12);
}

TEST_CASE("transient removal") {
  const auto unreachable = MachineBuilder({"a", "b", "z"}, Alphabet::numeric(2))
                               .edge("a", "b", "0", 1.0)
                               .edge("b", "a", "1", 1.0)
                               .edge("z", "a", "0", 1.0)
                               .build();
  CHECK(remove_transients(unreachable).states() == std::vector<std::string>{"a", "b"});

  const auto chain = MachineBuilder({"1", "2", "3"}, Alphabet::numeric(1))
                         .edge("1", "2", "0", 1.0)
                         .edge("2", "3", "0", 1.0)
                         .edge("3", "3", "0", 1.0)
                         .build();
  const auto r = remove_transients(chain);
  CHECK(r.states() == std::vector<std::string>{"3"});
  CHECK(remove_transients(r).states() == r.states());
}

TEST_CASE("merging equivalent states") {
  const auto twin = MachineBuilder({"a", "b"}, Alphabet::numeric(2))
                        .edge("a", "a", "0", 0.5)
                        .edge("a", "b", "1", 0.5)
                        .edge("b", "a", "0", 0.5)
                        .edge("b", "b", "1", 0.5)
                        .build();
  CHECK(merge_equivalent_states(twin).num_states() == 1);

  const auto b = bob(0.4);
  const auto merged = merge_equivalent_states(b);
  REQUIRE(merged.num_states() == 2);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) CHECK(merged.transition(x, y) == b.transition(x, y));

  const auto nonunifilar = MachineBuilder({"a", "b"}, Alphabet::numeric(1))
                               .edge("a", "a", "0", 0.5)
                               .edge("a", "b", "0", 0.5)
                               .edge("b", "a", "0", 1.0)
                               .build();
  CHECK_THROWS_AS(merge_equivalent_states(nonunifilar), Error);
}

TEST_CASE("word distributions") {
  const auto p2 = word_distribution(period2(), 2);
  CHECK(p2.entries.size() == 2);
  CHECK(p2.probability({0, 1}) == doctest::Approx(0.5));
  CHECK(p2.probability({1, 0}) == doctest::Approx(0.5));

  const double r = 0.3;
  const auto c = word_distribution(biased_coin(r), 2);
  CHECK(std::abs(c.probability({0, 0}) - r * r) < 1e-15);
  CHECK(std::abs(c.probability({0, 1}) - r * (1 - r)) < 1e-15);
  CHECK(std::abs(c.probability({1, 0}) - (1 - r) * r) < 1e-15);
  CHECK(std::abs(c.probability({1, 1}) - (1 - r) * (1 - r)) < 1e-15);
  CHECK(word_distribution(period2(), 0).entries.size() == 1);
}

TEST_CASE("ising word distribution agrees with a long sample within 3 sigma") {
  const auto o = output_machine(ising_mapper(0.0, 0.7), biased_coin(0.5));
  const auto analytic = word_distribution(o, 3);
  const auto traj = sample_path(o, 1000000, 2024);
  const auto emp = empirical_word_distribution(traj, 3);
  // Overlapping windows are correlated; 3 sigma of an independent count is inflated by 2.
  for (const auto& [w, p] : analytic.entries) {
    const double sigma = std::sqrt(p * (1 - p) / 1e6);
    CHECK(std::abs(emp.probability(w) - p) < 6 * sigma + 1e-12);
  }
}

TEST_CASE("output machine words are the marginal of joint words") {
  std::mt19937_64 g(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [t, in] = support::random_instance(g);
    for (std::size_t L = 1; L <= 4; ++L) {
      const auto joint = word_distribution(joint_machine(t, in), L);
      const auto out = word_distribution(output_machine(t, in), L);
      CHECK(total_variation(output_marginal(joint, t.input_alphabet(), t.output_alphabet()), out) < 1e-9);
      CHECK(total_variation(input_marginal(joint, t.input_alphabet(), t.output_alphabet()), word_distribution(in, L)) < 1e-9);
    }
  }
}

TEST_CASE("minimization preserves words and never grows") {
  std::mt19937_64 g(22);
  for (int trial = 0; trial < 30; ++trial) {
    const auto [t, in] = support::random_instance(g);
    const auto j = joint_machine(t, in);
    const auto merged = merge_equivalent_states(j);
    CHECK(merged.num_states() <= j.num_states());
    for (std::size_t L = 1; L <= 5; ++L) CHECK(total_variation(word_distribution(j, L), word_distribution(merged, L)) < 1e-9);
    const auto rt = remove_transients(j);
    CHECK(remove_transients(rt).states() == rt.states());
    CHECK(total_variation(word_distribution(j, 4), word_distribution(rt, 4)) < 1e-9);
  }
}
