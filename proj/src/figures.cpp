#include "epsilon_lab/figures.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "epsilon_lab/info_measures.hpp"
#include "epsilon_lab/inversion.hpp"
#include "epsilon_lab/paper_models.hpp"
#include "epsilon_lab/process_algebra.hpp"

namespace epsilon_lab {

std::size_t Table::column(const std::string& name) const {
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k] == name) return k;
  throw Error(ErrorKind::UnknownName, "no column " + name);
}

double Table::real(std::size_t row, const std::string& name) const {
  const Cell& c = rows.at(row).at(column(name));
  if (auto d = std::get_if<double>(&c)) return *d;
  if (auto i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  throw Error(ErrorKind::InvalidArgument, "column " + name + " is not numeric");
}

std::vector<double> Table::values(const std::string& name) const {
  std::vector<double> v;
  for (std::size_t r = 0; r < rows.size(); ++r) v.push_back(real(r, name));
  return v;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  std::string s = buf;
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}

std::string Table::to_csv() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ',';
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) out << format_real(v);
            else out << v;
          },
          row[k]);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::int64_t verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Ambiguous: return 1;
    case Verdict::Consistent: return -1;
    case Verdict::Agnostic: return 0;
  }
  return 0;
}

double value_or_nan(const std::optional<double>& v) { return v ? *v : std::nan(""); }

}  // namespace

Table sweep_table(const std::vector<std::string>& axes, const std::vector<std::vector<double>>& grid,
                  const ModelPairFamily& family, std::size_t threads) {
  Table t;
  t.columns = axes;
  for (const char* c : {"C_A_bits", "Q_A_bits", "E_A_bits", "C_B_bits", "Q_B_bits", "E_B_bits", "R1", "R2", "R3",
                        "R4", "sufficient", "ambiguous", "error"})
    t.columns.push_back(c);
  for (const auto& pt : region_scan(family, grid, threads)) {
    std::vector<Cell> row;
    for (double c : pt.coords) row.emplace_back(c);
    if (pt.error) {
      for (int k = 0; k < 6; ++k) row.emplace_back(std::nan(""));
      for (int k = 0; k < 6; ++k) row.emplace_back(std::int64_t{0});
      row.emplace_back(*pt.error);
    } else {
      row.emplace_back(pt.a.C), row.emplace_back(value_or_nan(pt.a.Q)), row.emplace_back(value_or_nan(pt.a.E));
      row.emplace_back(pt.b.C), row.emplace_back(value_or_nan(pt.b.Q)), row.emplace_back(value_or_nan(pt.b.E));
      for (bool f : {pt.flags.r1, pt.flags.r2, pt.flags.r3, pt.flags.r4}) row.emplace_back(std::int64_t{f});
      row.emplace_back(verdict_code(pt.verdict.sufficient_condition));
      row.emplace_back(std::int64_t{pt.verdict.verdict() == Verdict::Ambiguous});
      row.emplace_back(std::string{});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

ReportPair alice_bob(double alpha, double r) {
  const auto coin = biased_coin(r);
  return {quantum_complexity(delay_channel(), coin, QuantumMode::Standard),
          quantum_complexity(bob(alpha), coin, QuantumMode::Standard)};
}

ReportPair investor_pair(double q1) {
  InvestorParams p;
  p.q1 = q1;
  const auto t = investor(p);
  return {quantum_complexity(t, investor_input(1), QuantumMode::Saturating),
          quantum_complexity(t, investor_input(2), QuantumMode::Saturating)};
}

namespace {

Table alice_bob_grid(std::size_t n) {
  const auto axis = cell_centres(n);
  return sweep_table({"alpha", "r"}, product_grid(axis, axis),
                     [](const std::vector<double>& c) { return alice_bob(c[0], c[1]); });
}

std::vector<std::vector<double>> line(const std::vector<double>& xs) {
  std::vector<std::vector<double>> g;
  for (double x : xs) g.push_back({x});
  return g;
}

}  // namespace

Table fig7(std::size_t n) { return alice_bob_grid(n); }
Table fig10(std::size_t n) { return alice_bob_grid(n); }

Table fig8(std::size_t points) {
  return sweep_table({"alpha"}, line(cell_centres(points)),
                     [](const std::vector<double>& c) { return alice_bob(c[0], 0.2); });
}

Table fig9(std::size_t points) {
  return sweep_table({"r"}, line(cell_centres(points)),
                     [](const std::vector<double>& c) { return alice_bob(0.5, c[0]); });
}

Table fig13(std::size_t points) {
  Table t = sweep_table({"q1"}, line(cell_centres(points)),
                        [](const std::vector<double>& c) { return investor_pair(c[0]); });
  t.columns.push_back("dC_bits");
  t.columns.push_back("dQ_bits");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double dc = t.real(r, "C_A_bits") - t.real(r, "C_B_bits");
    const double dq = t.real(r, "Q_A_bits") - t.real(r, "Q_B_bits");
    t.rows[r].emplace_back(dc);
    t.rows[r].emplace_back(dq);
  }
  return t;
}

Table fig18(std::size_t points) {
  Table t;
  t.columns = {"r", "dC_bits", "dQ_bits", "dC_out_bits", "dQ_out_bits", "case"};
  const auto a = ising_mapper(0.0, 0.7), b = ising_mapper(2.0 / 3.0, 0.7);
  for (double r : cell_centres(points)) {
    const auto coin = biased_coin(r);
    const auto ra = quantum_complexity(a, coin, QuantumMode::Saturating);
    const auto rb = quantum_complexity(b, coin, QuantumMode::Saturating);
    const auto oa = quantum_complexity(minimal_output_process(a, coin), QuantumMode::Saturating);
    const auto ob = quantum_complexity(minimal_output_process(b, coin), QuantumMode::Saturating);
    const double dc = ra.C - rb.C, dq = *ra.Q - *rb.Q, dco = oa.C - ob.C, dqo = *oa.Q - *ob.Q;
    const bool io_flip = order(ra.C, rb.C) * order(*ra.Q, *rb.Q) < 0;
    const bool out_flip = order(oa.C, ob.C) * order(*oa.Q, *ob.Q) < 0;
    std::string label = io_flip ? (out_flip ? "ii" : "iv") : (out_flip ? "iii" : "i");
    t.rows.push_back({r, dc, dq, dco, dqo, label});
  }
  return t;
}

Table inversion_table() {
  const auto forward = inversion_transducer(0.0, 1.0 / 3.0, 0.25);
  const auto input = inversion_input();
  const auto inverse = complete_and_minimize(invert(forward, input));
  const auto output = minimal_output_process(forward, input);
  const auto a = quantum_complexity(forward, input, QuantumMode::Standard);
  const auto b = quantum_complexity(inverse, output, QuantumMode::Saturating);
  const auto v = classify(a, b);
  Table t;
  t.columns = {"C_A_bits", "Q_A_bits", "E_A_bits", "C_inv_bits", "Q_inv_bits", "E_inv_bits", "inverse_states",
               "ambiguous"};
  t.rows.push_back({a.C, *a.Q, *a.E, b.C, *b.Q, *b.E, static_cast<std::int64_t>(inverse.num_states()),
                    std::int64_t{v.verdict() == Verdict::Ambiguous}});
  return t;
}

Table tn_table() {
  Table t;
  t.columns = {"n", "target_bits", "s", "C_bits", "Q_bits", "max_offdiag_fidelity"};
  const auto input = biased_coin(0.5);
  for (std::size_t n = 2; n <= 5; ++n) {
    const double top = std::log2(static_cast<double>(n));
    for (int k = 1; k <= 4; ++k) {
      const double target = top * k / 5.0;
      const auto q = solve_target_complexity(n, target, input);
      const auto tr = family_tn(q);
      const auto rep = quantum_complexity(tr, input, QuantumMode::Saturating);
      const Matrix f = fidelity_constraints(tr).matrix();
      const double off = (f - Matrix::Identity(f.rows(), f.cols())).cwiseAbs().maxCoeff();
      t.rows.push_back({static_cast<std::int64_t>(n), target, q[0], rep.C, *rep.Q, off});
    }
  }
  return t;
}

std::vector<std::string> figure_ids() { return {"fig7", "fig8", "fig9", "fig10", "fig13", "fig18", "inversion", "tn"}; }

Table figure(const std::string& id) {
  if (id == "fig7") return fig7();
  if (id == "fig8") return fig8();
  if (id == "fig9") return fig9();
  if (id == "fig10") return fig10();
  if (id == "fig13") return fig13();
  if (id == "fig18") return fig18();
  if (id == "inversion") return inversion_table();
  if (id == "tn") return tn_table();
  throw Error(ErrorKind::UnknownFigure, "no figure called '" + id + "'");
}

std::vector<std::pair<double, double>> flagged_ranges(const Table& t, const std::string& x, const std::string& flag) {
  std::vector<std::pair<double, double>> out;
  bool open = false;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double xv = t.real(r, x);
    if (t.real(r, flag) != 0.0) {
      if (!open) out.emplace_back(xv, xv);
      out.back().second = xv;
      open = true;
    } else {
      open = false;
    }
  }
  return out;
}

std::vector<double> sign_changes(const Table& t, const std::string& x, const std::string& y) {
  std::vector<double> out;
  for (std::size_t r = 1; r < t.rows.size(); ++r) {
    const double y0 = t.real(r - 1, y), y1 = t.real(r, y);
    if ((y0 < 0.0 && y1 > 0.0) || (y0 > 0.0 && y1 < 0.0)) {
      const double x0 = t.real(r - 1, x), x1 = t.real(r, x);
      out.push_back(x0 + (x1 - x0) * y0 / (y0 - y1));
    }
  }
  return out;
}

std::vector<CaseRange> case_ranges(const Table& t, const std::string& x, const std::string& label) {
  std::vector<CaseRange> out;
  const std::size_t col = t.column(label);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::string& l = std::get<std::string>(t.rows[r][col]);
    const double xv = t.real(r, x);
    if (out.empty() || out.back().label != l) out.push_back({l, xv, xv});
    out.back().last = xv;
  }
  return out;
}

}  // namespace epsilon_lab
