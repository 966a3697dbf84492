#pragma once

// Dielectric and magnetic response functions evaluated on the imaginary
// frequency axis, plus the material taxonomy used to predict the sign of the
// force between two mirrors.
//
// Every model is stored in its imaginary-axis form: a real-frequency pole
// 1/(w^2 - w0^2 + i g w) becomes -1/(xi^2 + w0^2 + g xi) under w -> i xi, so
// all evaluations are real.

#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace casimir {

/// Angular frequency on the imaginary axis (rad/s), strictly positive.
class ImaginaryFrequency {
 public:
  explicit ImaginaryFrequency(double xi);
  double value() const noexcept { return xi_; }

 private:
  double xi_;
};

/// One term sign * strength_sq / (xi^2 + resonance^2 + damping * xi).
/// With resonance == 0 the denominator is xi (xi + damping): a Drude term.
struct OscillatorTerm {
  double strength_sq = 0.0;  // (rad/s)^2
  double resonance = 0.0;    // rad/s
  double damping = 0.0;      // rad/s
  int sign = +1;

  static OscillatorTerm drude(double plasma, double damping);
  static OscillatorTerm lorentz(double strength, double resonance,
                                double damping, int sign = +1);

  double evaluate(double xi) const noexcept {
    return sign * strength_sq / (xi * xi + resonance * resonance + damping * xi);
  }
  bool is_drude() const noexcept { return resonance == 0.0 && sign > 0; }
};

struct Vacuum {};
struct PerfectConductor {};

struct OscillatorSum {
  std::vector<OscillatorTerm> terms;
};

/// Samples (xi, value), strictly increasing in xi, values > 0.
struct Tabulated {
  std::vector<std::pair<double, double>> samples;
};

class ResponseModel {
 public:
  using Kind = std::variant<Vacuum, PerfectConductor, OscillatorSum, Tabulated>;

  ResponseModel() : kind_(Vacuum{}) {}
  explicit ResponseModel(Kind kind);

  static ResponseModel vacuum() { return ResponseModel(Vacuum{}); }
  static ResponseModel perfect_conductor() {
    return ResponseModel(PerfectConductor{});
  }
  static ResponseModel oscillators(std::vector<OscillatorTerm> terms);
  static ResponseModel drude(double plasma, double damping);
  static ResponseModel plasma(double plasma) { return drude(plasma, 0.0); }
  static ResponseModel lorentz(double strength, double resonance,
                               double damping);
  static ResponseModel tabulated(std::vector<std::pair<double, double>> samples);

  const Kind& kind() const noexcept { return kind_; }
  bool is_vacuum() const noexcept {
    return std::holds_alternative<Vacuum>(kind_);
  }
  bool is_perfect() const noexcept {
    return std::holds_alternative<PerfectConductor>(kind_);
  }
  bool has_only_positive_terms() const noexcept;

  /// Largest characteristic frequency of the model (rad/s); 0 when the model
  /// carries no frequency scale.
  double max_frequency() const noexcept;
  /// Every nonzero frequency scale (resonances, strengths, dampings,
  /// tabulation range ends).
  std::vector<double> frequency_scales() const;

  /// Unchecked evaluation for hot loops; xi > 0, not PerfectConductor.
  double evaluate(double xi) const noexcept { return 1.0 + susceptibility(xi); }
  /// evaluate(xi) - 1 without cancellation for weak responses.
  double susceptibility(double xi) const noexcept;

 private:
  Kind kind_;
  // log-space copy of tabulated samples
  std::vector<double> log_xi_;
  std::vector<double> log_value_;
};

/// Permittivity and permeability of one homogeneous medium.
struct Material {
  ResponseModel eps;
  ResponseModel mu;

  static Material vacuum() { return {}; }
  static Material perfect_conductor() {
    return {ResponseModel::perfect_conductor(), ResponseModel::vacuum()};
  }
  bool is_perfect() const noexcept { return eps.is_perfect(); }
  bool is_vacuum() const noexcept { return eps.is_vacuum() && mu.is_vacuum(); }
};

enum class MaterialClass {
  PurelyDielectric,
  PurelyMagnetic,
  MainlyDielectric,
  MainlyMagnetic,
  Mixed,
};

const char* to_string(MaterialClass c);

/// Checked evaluation. Throws SymbolicModel for PerfectConductor and
/// NonPassiveModel when the response is not positive.
double eval_response(const ResponseModel& model, ImaginaryFrequency xi);

double refractive_index(double eps, double mu);

/// 200 log-spaced points spanning [1e-4, 1e4] times the largest frequency of
/// either model (1 rad/s reference when neither model has a scale).
std::vector<double> default_audit_grid(const ResponseModel& eps_model,
                                       const ResponseModel& mu_model,
                                       int points = 200);

MaterialClass classify_pair(const ResponseModel& eps_model,
                            const ResponseModel& mu_model,
                            std::span<const double> audit_grid);
MaterialClass classify_pair(const ResponseModel& eps_model,
                            const ResponseModel& mu_model);

/// Throws NonPassiveModel if the response is <= 0 anywhere on the grid.
void audit_passivity(const ResponseModel& model,
                     std::span<const double> audit_grid,
                     const std::string& label = "response");

/// 2 pi c / omega, metres.
double plasma_wavelength(double omega);

/// Effective-medium optical metamaterial: Drude permittivity with a weak
/// anti-resonance and a Lorentz permeability sharing the resonance omega0.
/// All values rad/s.
struct NimsParameters {
  double omega_e;
  double gamma_e;     // Drude relaxation
  double omega_0;     // shared resonance
  double omega_e1;    // anti-resonance strength
  double gamma_e1;
  double omega_m1;    // magnetic resonance strength
  double gamma_m1;

  /// The published effective-medium fit (quoted as omega / 2 pi in GHz).
  static NimsParameters published();
};

Material build_nims_material(const NimsParameters& p);

/// Conventional gold Drude parameters (plasma 1.37e16 rad/s, relaxation
/// 5.32e13 rad/s). Not part of the metamaterial fit; overridable in config.
Material gold_drude();

/// GHz-over-2pi value to rad/s.
constexpr double ghz_over_2pi(double f_ghz) {
  return 2.0 * std::numbers::pi * f_ghz * 1e9;
}

}  // namespace casimir
