#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epsilon_lab/model.hpp"
#include "epsilon_lab/quantum.hpp"

namespace epsilon_lab {

inline constexpr double kDeadBand = 1e-9;

enum class Verdict { Ambiguous, Consistent, Agnostic };
const char* to_string(Verdict v);

// +1 if a > b, -1 if a < b, 0 inside the dead band.
int order(double a, double b, double dead_band = kDeadBand);

struct OrderingVerdict {
  int classical_order = 0;
  std::optional<int> quantum_order;
  Verdict sufficient_condition = Verdict::Agnostic;
  std::optional<Verdict> direct;

  Verdict verdict() const { return direct.value_or(sufficient_condition); }
};

OrderingVerdict classify(const ComplexityReport& a, const ComplexityReport& b);

struct RegionFlags {
  bool r1 = false, r2 = false, r3 = false, r4 = false;
};
// R1: C_B > C_A and E_A >= Q_B   R2: C_A > C_B and E_A >= Q_B
// R3: C_A > C_B and E_B >= Q_A   R4: C_B > C_A and E_B >= Q_A
// A region whose Q is unknown is reported false.
RegionFlags regions(const ComplexityReport& a, const ComplexityReport& b);

struct RegionPoint {
  std::vector<double> coords;
  ComplexityReport a, b;
  RegionFlags flags;
  OrderingVerdict verdict;
  std::optional<std::string> error;
};

using ReportPair = std::pair<ComplexityReport, ComplexityReport>;
using ModelPairFamily = std::function<ReportPair(const std::vector<double>&)>;

// Worker count from EPSILON_LAB_THREADS, else hardware concurrency.
std::size_t worker_count();

std::vector<RegionPoint> region_scan(const ModelPairFamily& family, const std::vector<std::vector<double>>& grid,
                                     std::size_t threads = 0);

// n cell centres (k + 1/2) / n of [lo, hi].
std::vector<double> cell_centres(std::size_t n, double lo = 0.0, double hi = 1.0);
std::vector<std::vector<double>> product_grid(const std::vector<double>& first, const std::vector<double>& second);

StationaryDistribution family_tn_stationary(std::size_t n, const std::vector<double>& q);
// q = (s, 1, ..., 1) with s found by bisection so that C = target.
std::vector<double> solve_target_complexity(std::size_t n, double target, const MachinePresentation& input);

}  // namespace epsilon_lab
