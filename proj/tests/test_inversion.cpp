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

double draft_prob(const InverseDraft& d, std::size_t from, std::size_t to, std::size_t x, std::size_t y) {
  return d.transitions[y][x](static_cast<Eigen::Index>(from), static_cast<Eigen::Index>(to));
}

TransducerPresentation identity_channel() {
  return TransducerBuilder({"A"}, Alphabet::numeric(2), Alphabet::numeric(2))
      .edge("A", "A", "0", "0", 1.0)
      .edge("A", "A", "1", "1", 1.0)
      .build();
}

}  // namespace

TEST_CASE("draft of the inversion example") {
  for (double p : {0.0, 0.3}) {
    const auto d = invert(inversion_transducer(p, 1.0 / 3.0, 0.25), inversion_input());
    REQUIRE(d.states.size() == 3);
    // s0 -> s2 on y = 2
    CHECK(std::abs(draft_prob(d, 0, 2, 1, 2) - (1 - p) / (2 - p)) < 1e-12);
    CHECK(std::abs(draft_prob(d, 0, 2, 2, 2) - 1 / (2 - p)) < 1e-12);
    // s1 transitions
    CHECK(std::abs(draft_prob(d, 1, 1, 1, 1) - 1.0) < 1e-12);
    CHECK(std::abs(draft_prob(d, 1, 2, 1, 2) - 1.0) < 1e-12);
    CHECK(std::abs(draft_prob(d, 1, 0, 0, 0) - 1.0) < 1e-12);
    // With p = 0 the output 1 is never seen from s0 either.
    std::vector<std::pair<std::size_t, std::size_t>> free{{0, 0}};
    if (p == 0.0) free.emplace_back(0, 1);
    CHECK(d.free_slots == free);
  }
}

TEST_CASE("completion and merging give the two-state inverse") {
  const auto d = invert(inversion_transducer(0.0, 1.0 / 3.0, 0.25), inversion_input());
  CHECK(complete(d).num_states() == 3);
  const auto inv = complete_and_minimize(d);
  REQUIRE(inv.num_states() == 2);
  CHECK(inv.transition(0, 0)(0, 0) == 1.0);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t y = 0; y < inv.input_alphabet().size(); ++y) {
      double sum = 0.0;
      for (std::size_t x = 0; x < inv.output_alphabet().size(); ++x) sum += inv.transition(y, x).row(s).sum();
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
}

TEST_CASE("identity channel inverts to itself") {
  const auto d = invert(identity_channel(), biased_coin(0.3));
  CHECK(d.free_slots.empty());
  const auto inv = complete_and_minimize(d);
  REQUIRE(inv.num_states() == 1);
  CHECK(inv.transition(0, 0)(0, 0) == 1.0);
  CHECK(inv.transition(1, 1)(0, 0) == 1.0);
  CHECK(inv.transition(0, 1)(0, 0) == 0.0);
}

TEST_CASE("round trip under both policies") {
  const auto t = inversion_transducer(0.3, 1.0 / 3.0, 0.25);
  const auto in = inversion_input();
  const auto o = minimal_output_process(t, in);
  for (auto policy : {CompletionPolicy::SelfLoop, CompletionPolicy::Uniform}) {
    const auto inv = complete_and_minimize(invert(t, in), policy);
    for (std::size_t L = 1; L <= 6; ++L)
      CHECK(total_variation(word_distribution(output_machine(inv, o), L), word_distribution(in, L)) < 1e-9);
  }
}

TEST_CASE("ambiguous output correspondence is reported") {
  // From a, output 0 leads to b or c depending on the hidden input, and b, c are distinguishable.
  const auto t = TransducerBuilder({"a", "b", "c"}, Alphabet::numeric(2), Alphabet::numeric(2))
                     .edge("a", "b", "0", "0", 1.0)
                     .edge("a", "c", "1", "0", 1.0)
                     .edge("b", "a", "0", "1", 1.0)
                     .edge("b", "a", "1", "1", 1.0)
                     .edge("c", "a", "0", "0", 1.0)
                     .edge("c", "a", "1", "0", 1.0)
                     .build();
  try {
    invert(t, biased_coin(0.5));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutputStateCorrespondenceAmbiguous);
  }
}
