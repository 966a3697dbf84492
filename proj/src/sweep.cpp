#include "casimir/sweep.hpp"

#include <cmath>
#include <sstream>

#include <omp.h>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

SweepRow evaluate_row(const Mirror& a, const Mirror& b, double distance,
                      const QuadratureConfig& cfg) {
  SweepRow row;
  row.distance = distance;
  try {
    const ForceResult r = casimir_force(a, b, distance, cfg);
    row.force = r.total;
    row.eta = r.eta;
    row.force_te = r.te;
    row.force_tm = r.tm;
    row.err_est = r.err_est;
  } catch (const Error& e) {
    const double nan = std::nan("");
    row.force = row.eta = row.force_te = row.force_tm = row.err_est = nan;
    row.error = e.what();
    row.error_kind = e.kind();
  }
  return row;
}

void check_inputs(const Mirror& a, const Mirror& b,
                  const std::vector<double>& distances,
                  const QuadratureConfig& cfg) {
  cfg.validate();
  a.validate();
  b.validate();
  for (double d : distances) {
    require(std::isfinite(d) && d > 0.0, "distances must be finite and > 0");
  }
}

[[noreturn]] void rethrow_at(const SweepRow& row) {
  std::ostringstream os;
  os << "evaluation failed at L = " << row.distance << " m: " << *row.error;
  fail(row.error_kind, os.str());
}

double force_at(const Mirror& a, const Mirror& b, double distance,
                const QuadratureConfig& cfg) {
  const SweepRow row = evaluate_row(a, b, distance, cfg);
  if (!row.ok()) rethrow_at(row);
  return row.force;
}

// Shrinks [lo, hi] (force(lo) and force(hi) of opposite sign) geometrically.
Crossing bisect(const Mirror& a, const Mirror& b, double lo, double hi,
                bool lo_repulsive, const QuadratureConfig& cfg, double rel_tol) {
  while ((hi - lo) > rel_tol * lo) {
    const double mid = std::sqrt(lo * hi);
    if (!(mid > lo && mid < hi)) break;
    const bool mid_repulsive = force_at(a, b, mid, cfg) > 0.0;
    if (mid_repulsive == lo_repulsive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi, (hi - lo) / lo};
}

}  // namespace

SweepTable sweep_serial(const Mirror& mirror_a, const Mirror& mirror_b,
                        const std::vector<double>& distances,
                        const QuadratureConfig& cfg) {
  check_inputs(mirror_a, mirror_b, distances, cfg);
  SweepTable table;
  table.reserve(distances.size());
  for (double d : distances) {
    table.push_back(evaluate_row(mirror_a, mirror_b, d, cfg));
  }
  return table;
}

SweepTable sweep_parallel(const Mirror& mirror_a, const Mirror& mirror_b,
                          const std::vector<double>& distances,
                          const QuadratureConfig& cfg, int jobs) {
  check_inputs(mirror_a, mirror_b, distances, cfg);
  SweepTable table(distances.size());
  const auto n = static_cast<long>(distances.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    table[k] = evaluate_row(mirror_a, mirror_b, distances[k], cfg);
  }
  return table;
}

std::vector<double> log_space(double lo, double hi, int count) {
  require(lo > 0.0 && hi >= lo, "log_space needs 0 < lo <= hi");
  require(count >= 1, "log_space needs count >= 1");
  if (count == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(count));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<RepulsionWindow> find_sign_changes(const Mirror& mirror_a,
                                               const Mirror& mirror_b,
                                               double l_min, double l_max,
                                               const QuadratureConfig& cfg,
                                               const WindowSearch& search) {
  require(l_min > 0.0 && l_max > l_min, "need 0 < l_min < l_max");
  require(search.samples >= 8, "need at least 8 samples");
  require(search.rel_tol > 0.0, "bisection tolerance must be > 0");

  const auto grid = log_space(l_min, l_max, search.samples);
  const SweepTable table =
      sweep_parallel(mirror_a, mirror_b, grid, cfg, search.jobs);
  for (const auto& row : table) {
    if (!row.ok()) rethrow_at(row);
  }

  std::vector<RepulsionWindow> windows;
  std::optional<RepulsionWindow> open;
  if (table.front().force > 0.0) open = RepulsionWindow{l_min, l_max, {}, {}};
  for (std::size_t i = 1; i < table.size(); ++i) {
    const bool prev = table[i - 1].force > 0.0;
    const bool cur = table[i].force > 0.0;
    if (prev == cur) continue;
    const Crossing c = bisect(mirror_a, mirror_b, table[i - 1].distance,
                              table[i].distance, prev, cfg, search.rel_tol);
    if (cur) {
      open = RepulsionWindow{c.location(), l_max, c, {}};
    } else {
      open->l_hi = c.location();
      open->crossing_hi = c;
      windows.push_back(*open);
      open.reset();
    }
  }
  if (open) windows.push_back(*open);
  return windows;
}

std::vector<Crossing> crossings(const std::vector<RepulsionWindow>& windows) {
  std::vector<Crossing> out;
  for (const auto& w : windows) {
    if (w.crossing_lo) out.push_back(*w.crossing_lo);
    if (w.crossing_hi) out.push_back(*w.crossing_hi);
  }
  return out;
}

}  // namespace casimir
