#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "epsilon_lab/model.hpp"
#include "epsilon_lab/paper_models.hpp"

namespace support {

using namespace epsilon_lab;

inline double uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

inline std::size_t pick(std::mt19937_64& g, std::size_t n) { return static_cast<std::size_t>(g() % n); }

// Random distribution over n outcomes; about a third of entries zeroed, never all.
inline std::vector<double> random_distribution(std::mt19937_64& g, std::size_t n, bool sparse = true) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (auto& v : p) {
    v = (sparse && pick(g, 3) == 0) ? 0.0 : 0.05 + uniform(g);
    sum += v;
  }
  if (sum == 0.0) {
    p[pick(g, n)] = 1.0;
    return p;
  }
  for (auto& v : p) v /= sum;
  return p;
}

inline TransducerPresentation random_transducer(std::mt19937_64& g, std::size_t n, std::size_t nx, std::size_t ny) {
  std::vector<std::string> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back("s" + std::to_string(i));
  TransducerBuilder b(states, Alphabet::numeric(nx), Alphabet::numeric(ny));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t x = 0; x < nx; ++x) {
      const auto p = random_distribution(g, ny);
      for (std::size_t y = 0; y < ny; ++y)
        if (p[y] > 0.0) b.edge(states[s], states[pick(g, n)], std::to_string(x), std::to_string(y), p[y]);
    }
  return b.build();
}

inline MachinePresentation random_iid(std::mt19937_64& g, std::size_t nx) { return iid(random_distribution(g, nx, false)); }

// Random (transducer, IID input) whose driven chain has one recurrent class.
inline std::pair<TransducerPresentation, MachinePresentation> random_instance(std::mt19937_64& g, std::size_t max_states = 4,
                                                                              std::size_t max_symbols = 3) {
  for (;;) {
    const std::size_t n = 1 + pick(g, max_states), nx = 1 + pick(g, max_symbols), ny = 1 + pick(g, max_symbols);
    auto t = random_transducer(g, n, nx, ny);
    auto in = random_iid(g, nx);
    try {
      stationary_distribution(t, in);
      return {std::move(t), std::move(in)};
    } catch (const Error&) {
    }
  }
}

}  // namespace support
