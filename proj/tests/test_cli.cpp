#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "epsilon_lab/figures.hpp"
#include "epsilon_lab/model_io.hpp"
#include "epsilon_lab/paper_models.hpp"
#include "support.hpp"

using namespace epsilon_lab;

TEST_CASE("rational and decimal probabilities") {
  CHECK(parse_probability("1/3") == 1.0 / 3.0);
  CHECK(parse_probability("0.25") == 0.25);
  CHECK(parse_probability("7/10") == 0.7);
  CHECK_THROWS_AS(parse_probability("1/0"), Error);
  CHECK_THROWS_AS(parse_probability("abc"), Error);
}

TEST_CASE("parse a machine file") {
  const auto m = parse_model(R"({"kind": "machine", "states": ["A"], "alphabet": ["0", "1"],
    "transitions": [{"from": "A", "to": "A", "output": "0", "prob": "1/5"},
                    {"from": "A", "to": "A", "output": "1", "prob": 0.8}]})");
  const auto& mp = std::get<MachinePresentation>(m);
  CHECK(mp.transition(0)(0, 0) == 0.2);
  CHECK(mp.transition(1)(0, 0) == 0.8);
}

TEST_CASE("parse errors") {
  for (const char* bad : {"{", R"({"kind": "blob"})", R"({"kind": "machine", "states": ["A"], "alphabet": ["0"],
      "transitions": [{"from": "B", "to": "A", "output": "0", "prob": 1}]})",
                          R"({"kind": "machine", "states": ["A"], "alphabet": ["0"], "transitions": [{"from": "A", "to": "A", "output": "0"}]})"}) {
    try {
      parse_model(bad);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(exit_code(e.kind()) == 1);
    }
  }
}

TEST_CASE("model files round-trip bit for bit") {
  std::mt19937_64 g(61);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = support::random_transducer(g, 1 + support::pick(g, 4), 1 + support::pick(g, 3), 1 + support::pick(g, 3));
    const auto back = std::get<TransducerPresentation>(parse_model(write_model(t)));
    CHECK(back.states() == t.states());
    for (std::size_t x = 0; x < t.input_alphabet().size(); ++x)
      for (std::size_t y = 0; y < t.output_alphabet().size(); ++y) CHECK(back.transition(x, y) == t.transition(x, y));
  }
  const auto m = inversion_input();
  const auto back = std::get<MachinePresentation>(parse_model(write_model(m)));
  for (std::size_t y = 0; y < 3; ++y) CHECK(back.transition(y) == m.transition(y));
}

TEST_CASE("every error kind has an exit code") {
  std::set<int> seen;
  for (int k = 0; k <= static_cast<int>(ErrorKind::UnknownFigure); ++k) {
    const int code = exit_code(static_cast<ErrorKind>(k));
    CHECK(code >= 1);
    CHECK(code <= 3);
    seen.insert(code);
  }
  CHECK(seen.size() == 3);
  CHECK(exit_code(ErrorKind::ParseError) == 1);
  CHECK(exit_code(ErrorKind::NotStochastic) == 2);
  CHECK(exit_code(ErrorKind::NonConvergence) == 3);
}

TEST_CASE("csv formatting") {
  CHECK(format_real(0.5) == "0.500000000");
  CHECK(format_real(-1e-12) == "0.000000000");
  Table t;
  t.columns = {"x", "n", "s"};
  t.rows.push_back({0.125, std::int64_t{3}, std::string("ii")});
  CHECK(t.to_csv() == "x,n,s\n0.125000000,3,ii\n");
}

TEST_CASE("figure tables are deterministic") {
  CHECK(fig8(60).to_csv() == fig8(60).to_csv());
  CHECK(fig18(40).to_csv() == fig18(40).to_csv());
  CHECK_THROWS_AS(figure("fig99"), Error);
  const auto inv = inversion_table();
  CHECK(inv.rows.size() == 1);
}
