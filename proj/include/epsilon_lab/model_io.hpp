#pragma once

#include <string>
#include <variant>

#include "epsilon_lab/model.hpp"

namespace epsilon_lab {

using ModelFile = std::variant<MachinePresentation, TransducerPresentation>;

// {"kind": "machine", "states": [...], "alphabet": [...],
//  "transitions": [{"from": s, "to": s, "output": y, "prob": p}, ...]}
// Transducers use "input_alphabet", "output_alphabet" and an "input" field per
// transition. A prob is a JSON number, a decimal string or a rational "n/d".
ModelFile parse_model(const std::string& text);
ModelFile load_model(const std::string& path);

std::string write_model(const MachinePresentation& m);
std::string write_model(const TransducerPresentation& t);
std::string write_model(const ModelFile& m);

double parse_probability(const std::string& text);

}  // namespace epsilon_lab
