#include "epsilon_lab/ambiguity.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "epsilon_lab/paper_models.hpp"
#include "epsilon_lab/process_algebra.hpp"

namespace epsilon_lab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Ambiguous: return "ambiguous";
    case Verdict::Consistent: return "consistent";
    case Verdict::Agnostic: return "agnostic";
  }
  return "unknown";
}

int order(double a, double b, double dead_band) {
  if (a - b > dead_band) return 1;
  if (b - a > dead_band) return -1;
  return 0;
}

OrderingVerdict classify(const ComplexityReport& a, const ComplexityReport& b) {
  if (!a.E || !b.E) throw Error(ErrorKind::MissingE, "both reports need an excess entropy");
  OrderingVerdict v;
  v.classical_order = order(a.C, b.C);

  bool ambiguous = false, consistent = false;
  if (a.Q) {
    ambiguous = ambiguous || (v.classical_order > 0 && *b.E - *a.Q > kDeadBand);
    consistent = consistent || (v.classical_order < 0 && *b.E - *a.Q > kDeadBand);
  }
  if (b.Q) {
    ambiguous = ambiguous || (v.classical_order < 0 && *a.E - *b.Q > kDeadBand);
    consistent = consistent || (v.classical_order > 0 && *a.E - *b.Q > kDeadBand);
  }
  if (ambiguous != consistent) v.sufficient_condition = ambiguous ? Verdict::Ambiguous : Verdict::Consistent;

  if (a.Q && b.Q) {
    v.quantum_order = order(*a.Q, *b.Q);
    v.direct = v.classical_order * *v.quantum_order < 0 ? Verdict::Ambiguous : Verdict::Consistent;
  }
  return v;
}

RegionFlags regions(const ComplexityReport& a, const ComplexityReport& b) {
  if (!a.E || !b.E) throw Error(ErrorKind::MissingE, "both reports need an excess entropy");
  RegionFlags f;
  const int c = order(a.C, b.C);
  if (b.Q) {
    f.r1 = c < 0 && *a.E >= *b.Q;
    f.r2 = c > 0 && *a.E >= *b.Q;
  }
  if (a.Q) {
    f.r3 = c > 0 && *b.E >= *a.Q;
    f.r4 = c < 0 && *b.E >= *a.Q;
  }
  return f;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("EPSILON_LAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::vector<RegionPoint> region_scan(const ModelPairFamily& family, const std::vector<std::vector<double>>& grid,
                                     std::size_t threads) {
  std::vector<RegionPoint> out(grid.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t k = cursor++; k < grid.size(); k = cursor++) {
      RegionPoint& pt = out[k];
      pt.coords = grid[k];
      try {
        auto [a, b] = family(grid[k]);
        pt.a = a;
        pt.b = b;
        pt.flags = regions(a, b);
        pt.verdict = classify(a, b);
      } catch (const std::exception& e) {
        pt.error = e.what();
      }
    }
  };
  const std::size_t n = std::min(threads ? threads : worker_count(), std::max<std::size_t>(grid.size(), 1));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::vector<double> cell_centres(std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = lo + (hi - lo) * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
  return v;
}

std::vector<std::vector<double>> product_grid(const std::vector<double>& first, const std::vector<double>& second) {
  std::vector<std::vector<double>> g;
  g.reserve(first.size() * second.size());
  for (double a : first)
    for (double b : second) g.push_back({a, b});
  return g;
}

StationaryDistribution family_tn_stationary(std::size_t n, const std::vector<double>& q) {
  if (q.size() != n || n < 2) throw Error(ErrorKind::ParamOutOfRange, "need n >= 2 and one q per state");
  for (double v : q) {
    if (v > 1.0 || std::isnan(v)) throw Error(ErrorKind::ParamOutOfRange, "q values must lie in (0, 1]");
    if (!(v > 0.0)) throw Error(ErrorKind::DegenerateParameters, "a zero q makes a state absorbing");
  }
  Vector w(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) prod *= q[j];
    w(static_cast<Eigen::Index>(i)) = prod;
  }
  return StationaryDistribution(w / w.sum());
}

std::vector<double> solve_target_complexity(std::size_t n, double target, const MachinePresentation& input) {
  if (n < 2) throw Error(ErrorKind::ParamOutOfRange, "need n >= 2");
  const double top = std::log2(static_cast<double>(n));
  if (!(target > 0.0) || target > top + 1e-12)
    throw Error(ErrorKind::TargetOutOfRange, "target must lie in (0, log2 n]");
  std::vector<double> q(n, 1.0);
  if (target >= top) return q;
  auto complexity = [&](double s) {
    q[0] = s;
    return statistical_complexity(stationary_distribution(family_tn(q), input));
  };
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < 200 && hi - lo > 1e-16; ++k) {
    const double mid = 0.5 * (lo + hi);
    const double c = complexity(mid);
    if (std::abs(c - target) < 1e-12) {
      lo = hi = mid;
      break;
    }
    if (c < target) lo = mid;
    else hi = mid;
  }
  q[0] = 0.5 * (lo + hi);
  return q;
}

}  // namespace epsilon_lab
