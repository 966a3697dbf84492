#pragma once

// JSON run configuration and result tables.
//
// Document layout:
//
//   {
//     "mirror_a": MIRROR, "mirror_b": MIRROR,
//     "distances": [L, ...] | {"min": L, "max": L, "count": N},
//     "quadrature": {"rel_tol": .., "abs_tol": .., "max_subdivisions": ..,
//                    "tail_cut": ..},                       (optional)
//     "unit_scale": {"type": "c_over_L", "L_ref": m}        (optional)
//   }
//   MIRROR = {"coatings": [{"material": MEDIUM, "thickness": m}, ...],
//             "substrate": MEDIUM}
//   MEDIUM = {"eps": MODEL, "mu": MODEL}            (mu defaults to vacuum)
//   MODEL  = {"kind": "vacuum"} | {"kind": "perfect"}
//          | {"kind": "oscillators", "unit": "rad_s" | "GHz_over_2pi",
//             "terms": [{"strength", "resonance", "damping", "sign"}]}
//          | {"kind": "tabulated", "unit": ..., "samples": [[xi, value], ...]}
//
// Frequencies are rad/s unless a unit is given. With a unit_scale block every
// frequency without an explicit unit is read in units of c / L_ref. All scaling
// happens at parse time; a parsed RunConfig holds rad/s only.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/sweep.hpp"

namespace casimir {

struct LogRange {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

struct RunConfig {
  Mirror mirror_a;
  Mirror mirror_b;
  std::vector<double> distances;  // m, strictly increasing
  std::optional<LogRange> range;  // set when distances came from a range
  QuadratureConfig quadrature;
};

/// Throws ConfigError carrying the JSON pointer of the offending value.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// Canonical form: every field present, rad/s frequencies, no unit fields.
/// parse_config(emit_config(c)) reproduces c exactly.
std::string emit_config(const RunConfig& config);

/// Evaluates every configured distance; rows keep the input order and
/// failures stay in their row. jobs == 1 selects the serial kernel.
SweepTable run_sweep(const RunConfig& config, int jobs = 0);

enum class Format { Csv, Json };

inline constexpr std::string_view kResultsHeader =
    "L_m,F_Pa,eta,F_TE_Pa,F_TM_Pa,err_Pa";

std::string emit_results(const SweepTable& table, Format format);
void write_results(std::ostream& out, const SweepTable& table, Format format);

/// Reads back the JSON produced by emit_results.
SweepTable parse_results_json(std::string_view text);

}  // namespace casimir
