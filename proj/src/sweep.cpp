// Copyright 2026 The bxgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bxgate/harness/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "bxgate/harness/simulate.hpp"

namespace bxgate::harness {

namespace {

std::string num(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string csv_field(std::string text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c == '\n' ? ' ' : c;
  }
  return quoted + "\"";
}

}  // namespace

SweepRow sweep_point(const RunConfig& config, double delta_a, double r) {
  SweepRow row;
  row.delta_a_meV = delta_a;
  row.r = r;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    const DesignPoint<double> design = solve_tau_for_r(r, delta_a, config.params, config.window_mode);
    row.tau_ps = design.tau;
    row.omega0_meV = design.omega0;
    row.gate_time_ps = design.gate_time;
    row.within_budget = design.gate_time < kDephasingBudgetPs;
    const GateRun run = run_gate(apply_design(config.params, design), config.model, config.propagation_options());
    row.conditional_phase_rad = run.report.conditional_phase;
    row.phase_error_rad = run.report.phase_error;
    row.leakage_11 = run.report.leakage_per_input[3];
    row.peak_intermediate = run.report.peak_intermediate;
    row.compensated_fidelity = run.report.compensated_fidelity;
  } catch (const std::exception& e) {
    row.error = e.what();
    row.conditional_phase_rad = row.phase_error_rad = row.leakage_11 = nan;
    row.peak_intermediate = row.compensated_fidelity = nan;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const RunConfig& config, unsigned threads) {
  struct Task {
    double delta_a;
    double r;
  };
  std::vector<Task> tasks;
  for (double delta_a : config.sweep.delta_a)
    for (double r : config.sweep.r_grid()) tasks.push_back({delta_a, r});

  std::vector<SweepRow> rows(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) rows[i] = sweep_point(config, tasks[i].delta_a, tasks[i].r);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "# bxgate sweep; energies in meV, times in ps, phases in rad\n";
  for (std::size_t i = 0; i < kSweepColumns.size(); ++i) out << (i ? "," : "") << kSweepColumns[i];
  out << "\n";
  for (const SweepRow& row : rows) {
    out << num(row.delta_a_meV) << ',' << num(row.r) << ',' << num(row.tau_ps) << ',' << num(row.omega0_meV) << ','
        << num(row.gate_time_ps) << ',' << num(row.conditional_phase_rad) << ',' << num(row.phase_error_rad) << ','
        << num(row.leakage_11) << ',' << num(row.peak_intermediate) << ',' << num(row.compensated_fidelity) << ','
        << (row.within_budget ? 1 : 0) << ',' << csv_field(row.error) << "\n";
  }
  return out.str();
}

std::string sweep_svg(const std::vector<SweepRow>& rows) {
  constexpr double width = 640, height = 420;
  constexpr double left = 70, right = 150, top = 30, bottom = 60;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  std::map<double, std::vector<const SweepRow*>> curves;
  double r_lo = INFINITY, r_hi = -INFINITY, tau_lo = INFINITY, tau_hi = -INFINITY;
  for (const SweepRow& row : rows) {
    if (!(row.tau_ps > 0)) continue;
    curves[row.delta_a_meV].push_back(&row);
    r_lo = std::min(r_lo, row.r);
    r_hi = std::max(r_hi, row.r);
    tau_lo = std::min(tau_lo, row.tau_ps);
    tau_hi = std::max(tau_hi, row.tau_ps);
  }
  if (curves.empty()) {
    r_lo = 0;
    r_hi = 1;
    tau_lo = 1;
    tau_hi = 10;
  }
  if (r_hi <= r_lo) r_hi = r_lo + 1;
  const double log_lo = std::floor(std::log10(tau_lo));
  double log_hi = std::ceil(std::log10(tau_hi));
  if (log_hi <= log_lo) log_hi = log_lo + 1;

  auto x_of = [&](double r) { return left + (r - r_lo) / (r_hi - r_lo) * plot_w; };
  auto y_of = [&](double tau) { return top + (log_hi - std::log10(tau)) / (log_hi - log_lo) * plot_h; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  out << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
      << top + plot_h << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h << "\"/>\n"
      << "</g>\n";

  out << "<g id=\"ticks\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / 5;
    out << "<line x1=\"" << num(x_of(r)) << "\" y1=\"" << top + plot_h << "\" x2=\"" << num(x_of(r)) << "\" y2=\""
        << top + plot_h + 5 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(x_of(r)) << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">" << num(r)
        << "</text>\n";
  }
  for (double e = log_lo; e <= log_hi; e += 1) {
    const double tau = std::pow(10.0, e);
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << num(y_of(tau)) << "\" x2=\"" << left << "\" y2=\""
        << num(y_of(tau)) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << num(y_of(tau) + 4) << "\" text-anchor=\"end\">" << num(tau)
        << "</text>\n";
  }
  out << "</g>\n"
      << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15
      << "\" text-anchor=\"middle\">R = Omega0 / (2 delta_min)</text>\n"
      << "<text x=\"18\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << top + plot_h / 2 << ")\">tau (ps)</text>\n";

  static constexpr std::array<const char*, 6> colors = {"#1f77b4", "#d62728", "#2ca02c",
                                                         "#9467bd", "#ff7f0e", "#8c564b"};
  static constexpr std::array<const char*, 3> dashes = {"none", "8 4", "2 3"};
  std::size_t index = 0;
  for (const auto& [delta_a, points] : curves) {
    out << "<polyline class=\"curve\" data-delta-a=\"" << num(delta_a) << "\" fill=\"none\" stroke=\""
        << colors[index % colors.size()] << "\" stroke-width=\"1.5\" stroke-dasharray=\""
        << dashes[index % dashes.size()] << "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      out << (i ? " " : "") << num(x_of(points[i]->r)) << ',' << num(y_of(points[i]->tau_ps));
    }
    out << "\"/>\n";
    const double ly = top + 20 + 18.0 * index;
    out << "<line x1=\"" << left + plot_w + 15 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 45 << "\" y2=\""
        << ly << "\" stroke=\"" << colors[index % colors.size()] << "\" stroke-dasharray=\""
        << dashes[index % dashes.size()] << "\"/>\n"
        << "<text x=\"" << left + plot_w + 50 << "\" y=\"" << ly + 4 << "\">delta_a = " << num(delta_a)
        << " meV</text>\n";
    ++index;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bxgate::harness
