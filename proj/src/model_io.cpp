#include "epsilon_lab/model_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace epsilon_lab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

double number(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) fail("'" + s + "' is not a number");
  return v;
}

std::vector<std::string> strings(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) fail(std::string("missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& e : j[key]) {
    if (e.is_string()) out.push_back(e.get<std::string>());
    else if (e.is_number_integer()) out.push_back(std::to_string(e.get<long long>()));
    else fail(std::string("entries of '") + key + "' must be strings");
  }
  if (out.empty()) fail(std::string("'") + key + "' is empty");
  return out;
}

std::string field(const json& e, const char* key) {
  if (!e.contains(key)) fail(std::string("transition without '") + key + "'");
  const auto& v = e[key];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(std::string("'") + key + "' must be a string");
}

double probability(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_probability(v.get<std::string>());
  fail("prob must be a number or a string");
}

std::size_t lookup(const Alphabet& a, const std::string& s, const char* what) {
  auto k = a.find(s);
  if (!k) fail(std::string("unknown ") + what + " '" + s + "'");
  return *k;
}

json prob_json(double p) { return p; }

}  // namespace

double parse_probability(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return number(text);
  const double n = number(text.substr(0, slash)), d = number(text.substr(slash + 1));
  if (d == 0.0) fail("zero denominator in '" + text + "'");
  return n / d;
}

ModelFile parse_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) fail("missing 'kind'");
  const std::string kind = j["kind"];
  const Alphabet states(strings(j, "states"));
  if (!j.contains("transitions") || !j["transitions"].is_array()) fail("missing array 'transitions'");
  const auto n = static_cast<Eigen::Index>(states.size());

  if (kind == "machine") {
    const Alphabet out(strings(j, "alphabet"));
    std::vector<Matrix> t(out.size(), Matrix::Zero(n, n));
    for (const auto& e : j["transitions"]) {
      const auto from = lookup(states, field(e, "from"), "state"), to = lookup(states, field(e, "to"), "state");
      const auto y = lookup(out, field(e, "output"), "symbol");
      if (!e.contains("prob")) fail("transition without 'prob'");
      t[y](static_cast<Eigen::Index>(from), static_cast<Eigen::Index>(to)) += probability(e["prob"]);
    }
    return MachinePresentation(states.symbols(), out, std::move(t));
  }
  if (kind == "transducer") {
    const Alphabet in(strings(j, "input_alphabet")), out(strings(j, "output_alphabet"));
    std::vector<std::vector<Matrix>> t(in.size(), std::vector<Matrix>(out.size(), Matrix::Zero(n, n)));
    for (const auto& e : j["transitions"]) {
      const auto from = lookup(states, field(e, "from"), "state"), to = lookup(states, field(e, "to"), "state");
      const auto x = lookup(in, field(e, "input"), "input symbol");
      const auto y = lookup(out, field(e, "output"), "output symbol");
      if (!e.contains("prob")) fail("transition without 'prob'");
      t[x][y](static_cast<Eigen::Index>(from), static_cast<Eigen::Index>(to)) += probability(e["prob"]);
    }
    return TransducerPresentation(states.symbols(), in, out, std::move(t));
  }
  fail("kind must be 'machine' or 'transducer'");
}

ModelFile load_model(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return parse_model(s.str());
}

std::string write_model(const MachinePresentation& m) {
  json j;
  j["kind"] = "machine";
  j["states"] = m.states();
  j["alphabet"] = m.alphabet().symbols();
  json edges = json::array();
  for (std::size_t s = 0; s < m.num_states(); ++s)
    for (std::size_t y = 0; y < m.alphabet().size(); ++y)
      for (std::size_t u = 0; u < m.num_states(); ++u) {
        const double p = m.transition(y)(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(u));
        if (p != 0.0)
          edges.push_back({{"from", m.states()[s]}, {"to", m.states()[u]}, {"output", m.alphabet()[y]}, {"prob", prob_json(p)}});
      }
  j["transitions"] = edges;
  return j.dump(2) + "\n";
}

std::string write_model(const TransducerPresentation& t) {
  json j;
  j["kind"] = "transducer";
  j["states"] = t.states();
  j["input_alphabet"] = t.input_alphabet().symbols();
  j["output_alphabet"] = t.output_alphabet().symbols();
  json edges = json::array();
  for (std::size_t s = 0; s < t.num_states(); ++s)
    for (std::size_t x = 0; x < t.input_alphabet().size(); ++x)
      for (std::size_t y = 0; y < t.output_alphabet().size(); ++y)
        for (std::size_t u = 0; u < t.num_states(); ++u) {
          const double p = t.transition(x, y)(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(u));
          if (p != 0.0)
            edges.push_back({{"from", t.states()[s]},
                             {"to", t.states()[u]},
                             {"input", t.input_alphabet()[x]},
                             {"output", t.output_alphabet()[y]},
                             {"prob", prob_json(p)}});
        }
  j["transitions"] = edges;
  return j.dump(2) + "\n";
}

std::string write_model(const ModelFile& m) {
  return std::visit([](const auto& v) { return write_model(v); }, m);
}

}  // namespace epsilon_lab
