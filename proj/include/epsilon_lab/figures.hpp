#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "epsilon_lab/ambiguity.hpp"

namespace epsilon_lab {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::size_t column(const std::string& name) const;
  double real(std::size_t row, const std::string& name) const;
  std::vector<double> values(const std::string& name) const;
  // Reals at 9 decimals, integers as is, strings verbatim.
  std::string to_csv() const;
};

std::string format_real(double v);

// Builds one row per grid node: coordinates, C/Q/E of both sides, R1..R4,
// the sufficient-condition verdict and the direct verdict.
Table sweep_table(const std::vector<std::string>& axes, const std::vector<std::vector<double>>& grid,
                  const ModelPairFamily& family, std::size_t threads = 0);

ReportPair alice_bob(double alpha, double r);
ReportPair investor_pair(double q1);

Table fig7(std::size_t n = 200);
Table fig8(std::size_t points = 500);
Table fig9(std::size_t points = 500);
Table fig10(std::size_t n = 200);
Table fig13(std::size_t points = 500);
Table fig18(std::size_t points = 500);
Table inversion_table();
Table tn_table();

std::vector<std::string> figure_ids();
Table figure(const std::string& id);

// Maximal runs of rows where `flag` is nonzero, as [first x, last x].
std::vector<std::pair<double, double>> flagged_ranges(const Table& t, const std::string& x, const std::string& flag);
// Linearly interpolated zero crossings of column y against column x.
std::vector<double> sign_changes(const Table& t, const std::string& x, const std::string& y);

struct CaseRange {
  std::string label;
  double first, last;
};
std::vector<CaseRange> case_ranges(const Table& t, const std::string& x, const std::string& label);

}  // namespace epsilon_lab
