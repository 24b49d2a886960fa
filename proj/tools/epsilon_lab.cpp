#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epsilon_lab/ambiguity.hpp"
#include "epsilon_lab/figures.hpp"
#include "epsilon_lab/info_measures.hpp"
#include "epsilon_lab/inversion.hpp"
#include "epsilon_lab/model_io.hpp"
#include "epsilon_lab/paper_models.hpp"
#include "epsilon_lab/process_algebra.hpp"
#include "epsilon_lab/quantum.hpp"
#include "epsilon_lab/simulate.hpp"

using namespace epsilon_lab;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + path);
  f << text;
}

QuantumMode parse_mode(const std::string& s) {
  if (s == "standard") return QuantumMode::Standard;
  if (s == "saturating") return QuantumMode::Saturating;
  throw Error(ErrorKind::ParseError, "mode must be standard or saturating");
}

void require_valid(const ModelFile& m) {
  if (auto mp = std::get_if<MachinePresentation>(&m)) {
    const auto r = validate_machine(*mp);
    if (!r.nonnegative) throw Error(ErrorKind::NotADistribution, "negative transition probability");
    if (!r.stochastic) throw Error(ErrorKind::NotStochastic, r.problems.empty() ? "rows do not sum to 1" : r.problems.front());
    if (!r.ergodic) throw Error(ErrorKind::MultipleRecurrentClasses, "machine has several recurrent classes");
  } else {
    const auto r = validate_transducer(std::get<TransducerPresentation>(m));
    if (!r.nonnegative) throw Error(ErrorKind::NotADistribution, "negative transition probability");
    if (!r.stochastic) throw Error(ErrorKind::NotStochastic, r.problems.empty() ? "rows do not sum to 1" : r.problems.front());
  }
}

MachinePresentation as_machine(const ModelFile& m, const std::string& what) {
  if (auto mp = std::get_if<MachinePresentation>(&m)) return *mp;
  throw Error(ErrorKind::ParseError, what + " must be a machine");
}

// Pair of (transducer, input); a lone machine becomes a transducer with a trivial input.
std::pair<TransducerPresentation, MachinePresentation> driven(const std::string& model, const std::string& input) {
  const ModelFile m = load_model(model);
  require_valid(m);
  if (auto mp = std::get_if<MachinePresentation>(&m)) return {as_transducer(*mp), trivial_input()};
  if (input.empty()) throw Error(ErrorKind::ParseError, "a transducer needs an input process file");
  const ModelFile in = load_model(input);
  require_valid(in);
  return {std::get<TransducerPresentation>(m), as_machine(in, "input")};
}

// "name" or "name:k=v,k=v"
std::pair<std::string, std::map<std::string, double>> model_spec(const std::string& s) {
  std::map<std::string, double> params;
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream rest(s.substr(colon + 1));
    std::string kv;
    while (std::getline(rest, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected k=v in '" + kv + "'");
      params[kv.substr(0, eq)] = parse_probability(kv.substr(eq + 1));
    }
  }
  return {name, params};
}

struct Axis {
  std::string name;
  std::vector<double> values;
};

// "name=lo:hi:n" -> n cell centres of [lo, hi]
Axis parse_axis(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "axis must look like name=lo:hi:n");
  std::vector<std::string> parts;
  std::stringstream rest(s.substr(eq + 1));
  for (std::string p; std::getline(rest, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw Error(ErrorKind::ParseError, "axis must look like name=lo:hi:n");
  const double n = parse_probability(parts[2]);
  if (!(n >= 1.0)) throw Error(ErrorKind::ParseError, "axis needs at least one point");
  return {s.substr(0, eq), cell_centres(static_cast<std::size_t>(n), parse_probability(parts[0]), parse_probability(parts[1]))};
}

TransducerPresentation transducer_of(const PaperModel& m) {
  if (auto t = std::get_if<TransducerPresentation>(&m)) return *t;
  return as_transducer(std::get<MachinePresentation>(m));
}

MachinePresentation machine_of(const PaperModel& m, const std::string& name) {
  if (auto mp = std::get_if<MachinePresentation>(&m)) return *mp;
  throw Error(ErrorKind::ParseError, name + " is not a process");
}

int run_analyze(const std::string& model, const std::string& input, const std::string& mode, bool csv) {
  const auto [t, in] = driven(model, input);
  const auto r = quantum_complexity(t, in, parse_mode(mode));
  if (csv) {
    std::cout << "C_bits,Q_bits,E_bits,encoding,E_converged\n"
              << format_real(r.C) << ',' << format_real(*r.Q) << ',' << format_real(*r.E) << ','
              << to_string(r.provenance) << ',' << (r.e_converged ? 1 : 0) << '\n';
  } else {
    std::cout << "C_bits: " << format_real(r.C) << '\n'
              << "Q_bits: " << format_real(*r.Q) << '\n'
              << "E_bits: " << format_real(*r.E) << '\n'
              << "encoding: " << to_string(r.provenance) << '\n';
    if (!r.e_converged) std::cout << "warning: excess entropy did not converge, partial estimate shown\n";
  }
  return 0;
}

int run_invert(const std::string& model, const std::string& input, const std::string& policy, const std::string& out,
               std::size_t check) {
  const ModelFile m = load_model(model), in = load_model(input);
  require_valid(m);
  require_valid(in);
  if (!std::holds_alternative<TransducerPresentation>(m)) throw Error(ErrorKind::ParseError, "invert needs a transducer");
  const auto& t = std::get<TransducerPresentation>(m);
  const auto source = as_machine(in, "input");
  CompletionPolicy p;
  if (policy == "self-loop") p = CompletionPolicy::SelfLoop;
  else if (policy == "uniform") p = CompletionPolicy::Uniform;
  else throw Error(ErrorKind::ParseError, "policy must be self-loop or uniform");

  const auto inverse = complete_and_minimize(invert(t, source), p);
  emit(write_model(inverse), out);
  if (check > 0) {
    const auto reproduced = output_machine(inverse, minimal_output_process(t, source));
    const double tv = total_variation(word_distribution(source, check), word_distribution(reproduced, check));
    std::cerr << "round_trip_tv_L" << check << ": " << format_real(tv) << '\n';
  }
  return 0;
}

int run_simulate(const std::string& model, const std::string& input, std::size_t length, std::uint64_t seed,
                 std::size_t block, const std::string& out) {
  const auto [t, in] = driven(model, input);
  const MachinePresentation source = in.alphabet()[0] == "*" ? as_machine(load_model(model), "model") : joint_machine(t, in);
  const auto traj = sample_path(source, length, seed);

  std::ostringstream f;
  f << "# generator: " << traj.generator << "\n# seed: " << traj.seed << "\nstep,state,symbol\n";
  for (std::size_t i = 0; i < traj.length(); ++i)
    f << i << ',' << traj.state_labels[traj.states[i]] << ',' << traj.alphabet[traj.symbols[i]] << '\n';
  emit(f.str(), out);

  const auto empirical = empirical_word_distribution(traj, block);
  const auto analytic = word_distribution(source, block);
  std::ostream& stats = (out.empty() || out == "-") ? std::cerr : std::cout;
  stats << "length: " << traj.length() << '\n'
        << "block_length: " << block << '\n'
        << "words_observed: " << empirical.entries.size() << '\n'
        << "total_variation: " << format_real(total_variation(empirical, analytic)) << '\n';
  return 0;
}

int run_sweep(const std::string& a, const std::string& b, const std::string& input_a, std::string input_b,
              const std::vector<std::string>& axes, const std::string& mode, const std::string& out) {
  if (input_b.empty()) input_b = input_a;
  const auto sa = model_spec(a), sb = model_spec(b), ia = model_spec(input_a), ib = model_spec(input_b);
  std::vector<Axis> parsed;
  for (const auto& s : axes) parsed.push_back(parse_axis(s));
  if (parsed.empty()) throw Error(ErrorKind::ParseError, "sweep needs at least one --axis");

  std::vector<std::vector<double>> grid{{}};
  for (const auto& ax : parsed) {
    std::vector<std::vector<double>> next;
    for (const auto& g : grid)
      for (double v : ax.values) {
        auto h = g;
        h.push_back(v);
        next.push_back(std::move(h));
      }
    grid = std::move(next);
  }
  std::vector<std::string> names;
  for (const auto& ax : parsed) names.push_back(ax.name);
  const QuantumMode qm = parse_mode(mode);

  auto with = [&](std::map<std::string, double> fixed, const std::vector<double>& c) {
    for (std::size_t k = 0; k < names.size(); ++k) fixed.emplace(names[k], c[k]);
    return fixed;
  };
  const auto known = paper_model_names();
  for (const auto& n : {sa.first, sb.first, ia.first, ib.first})
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw Error(ErrorKind::UnknownName, "no paper model called '" + n + "'");
  const auto family = [&](const std::vector<double>& c) -> ReportPair {
    const auto ta = transducer_of(paper_model(sa.first, with(sa.second, c)));
    const auto tb = transducer_of(paper_model(sb.first, with(sb.second, c)));
    const auto ma = machine_of(paper_model(ia.first, with(ia.second, c)), ia.first);
    const auto mb = machine_of(paper_model(ib.first, with(ib.second, c)), ib.first);
    return {quantum_complexity(ta, ma, qm), quantum_complexity(tb, mb, qm)};
  };
  emit(sweep_table(names, grid, family).to_csv(), out);
  return 0;
}

int run_verify(const std::string& model, const std::string& input) {
  const ModelFile m = load_model(model);
  ValidationReport r = std::holds_alternative<MachinePresentation>(m)
                           ? validate_machine(std::get<MachinePresentation>(m))
                           : validate_transducer(std::get<TransducerPresentation>(m));
  std::cout << "stochastic: " << (r.stochastic ? "yes" : "no") << '\n'
            << "nonnegative: " << (r.nonnegative ? "yes" : "no") << '\n'
            << "unifilar: " << (r.unifilar ? "yes" : "no") << '\n'
            << "ergodic: " << (r.ergodic ? "yes" : "no") << '\n'
            << "recurrent_classes: " << r.recurrent_classes << '\n';
  for (const auto& p : r.problems) std::cout << "problem: " << p << '\n';
  const bool round_trip = write_model(parse_model(write_model(m))) == write_model(m);
  std::cout << "round_trip: " << (round_trip ? "exact" : "mismatch") << '\n';
  if (!r.valid()) throw Error(r.stochastic ? ErrorKind::MultipleRecurrentClasses : ErrorKind::NotStochastic, "model is not valid");
  if (!input.empty()) {
    const auto [t, in] = driven(model, input);
    const auto pi = stationary_distribution(t, in);
    for (std::size_t i = 0; i < pi.size(); ++i) std::cout << "pi[" << t.states()[i] << "]: " << format_real(pi[i]) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epsilon-lab: complexity of stochastic processes and adaptive agents"};
  app.require_subcommand(1);

  std::string model, input, mode = "standard", out, policy = "self-loop", figure_id;
  bool csv = false;
  std::size_t length = 1000, block = 3, check = 0;
  std::uint64_t seed = 1;
  std::string a, b, input_a, input_b;
  std::vector<std::string> axes;

  auto* analyze = app.add_subcommand("analyze", "C, Q and E of a model (bits)");
  analyze->add_option("model", model, "model file")->required();
  analyze->add_option("input", input, "input process file (transducers)");
  analyze->add_option("--mode", mode, "standard | saturating");
  analyze->add_flag("--csv", csv, "print a CSV row");

  auto* paper = app.add_subcommand("paper", "write a reproduction table as CSV");
  paper->add_option("figure", figure_id, "fig7 fig8 fig9 fig10 fig13 fig18 inversion tn")->required();
  paper->add_option("-o,--output", out, "output file (default stdout)");

  auto* inv = app.add_subcommand("invert", "invert a channel for a given input");
  inv->add_option("model", model, "transducer file")->required();
  inv->add_option("input", input, "input process file")->required();
  inv->add_option("--policy", policy, "self-loop | uniform");
  inv->add_option("-o,--output", out, "output file (default stdout)");
  inv->add_option("--check", check, "report round-trip total variation at this word length");

  auto* sim = app.add_subcommand("simulate", "sample a trajectory and compare word statistics");
  sim->add_option("model", model, "model file")->required();
  sim->add_option("input", input, "input process file (transducers)");
  sim->add_option("--length", length, "number of steps");
  sim->add_option("--seed", seed, "64-bit seed");
  sim->add_option("--block", block, "word length for statistics");
  sim->add_option("-o,--output", out, "trajectory file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "region scan over named paper models");
  sweep->add_option("--a", a, "model A, name[:k=v,...]")->required();
  sweep->add_option("--b", b, "model B, name[:k=v,...]")->required();
  sweep->add_option("--input", input_a, "input process for A (and B)")->required();
  sweep->add_option("--input-b", input_b, "input process for B");
  sweep->add_option("--axis", axes, "name=lo:hi:n, repeatable");
  sweep->add_option("--mode", mode, "standard | saturating");
  sweep->add_option("-o,--output", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "validate a model file");
  verify->add_option("model", model, "model file")->required();
  verify->add_option("input", input, "input process file (transducers)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return run_analyze(model, input, mode, csv);
    if (*paper) {
      emit(figure(figure_id).to_csv(), out);
      return 0;
    }
    if (*inv) return run_invert(model, input, policy, out, check);
    if (*sim) return run_simulate(model, input, length, seed, block, out);
    if (*sweep) return run_sweep(a, b, input_a, input_b, axes, mode, out);
    if (*verify) return run_verify(model, input);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
