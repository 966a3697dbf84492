#include "casimir/materials.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::SymbolicModel: return "symbolic model";
    case ErrorKind::NonPassiveModel: return "non-passive model";
    case ErrorKind::NonConvergent: return "non-convergent";
    case ErrorKind::DivergentIntegrand: return "divergent integrand";
    case ErrorKind::SplitUndefined: return "split undefined";
    case ErrorKind::SingularPhase: return "singular phase";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Config: return "config error";
  }
  return "unknown";
}

const char* to_string(MaterialClass c) {
  switch (c) {
    case MaterialClass::PurelyDielectric: return "purely_dielectric";
    case MaterialClass::PurelyMagnetic: return "purely_magnetic";
    case MaterialClass::MainlyDielectric: return "mainly_dielectric";
    case MaterialClass::MainlyMagnetic: return "mainly_magnetic";
    case MaterialClass::Mixed: return "mixed";
  }
  return "unknown";
}

ImaginaryFrequency::ImaginaryFrequency(double xi) : xi_(xi) {
  require(std::isfinite(xi) && xi > 0.0,
          "imaginary frequency must be finite and > 0");
}

OscillatorTerm OscillatorTerm::drude(double plasma, double damping) {
  return {plasma * plasma, 0.0, damping, +1};
}

OscillatorTerm OscillatorTerm::lorentz(double strength, double resonance,
                                       double damping, int sign) {
  return {strength * strength, resonance, damping, sign};
}

namespace {

void validate_term(const OscillatorTerm& t) {
  require(std::isfinite(t.strength_sq) && t.strength_sq >= 0.0,
          "oscillator strength must be finite and >= 0");
  require(std::isfinite(t.resonance) && t.resonance >= 0.0,
          "oscillator resonance must be finite and >= 0");
  require(std::isfinite(t.damping) && t.damping >= 0.0,
          "oscillator damping must be finite and >= 0");
  require(t.sign == 1 || t.sign == -1, "oscillator sign must be +1 or -1");
}

}  // namespace

ResponseModel::ResponseModel(Kind kind) : kind_(std::move(kind)) {
  if (const auto* sum = std::get_if<OscillatorSum>(&kind_)) {
    for (const auto& t : sum->terms) validate_term(t);
  } else if (const auto* tab = std::get_if<Tabulated>(&kind_)) {
    require(!tab->samples.empty(), "tabulated model needs at least one sample");
    double prev = 0.0;
    for (const auto& [xi, v] : tab->samples) {
      require(std::isfinite(xi) && xi > prev,
              "tabulated samples must be strictly increasing in xi > 0");
      require(std::isfinite(v) && v > 0.0, "tabulated values must be > 0");
      prev = xi;
      log_xi_.push_back(std::log(xi));
      log_value_.push_back(std::log(v));
    }
  }
}

ResponseModel ResponseModel::oscillators(std::vector<OscillatorTerm> terms) {
  return ResponseModel(OscillatorSum{std::move(terms)});
}

ResponseModel ResponseModel::drude(double plasma, double damping) {
  return oscillators({OscillatorTerm::drude(plasma, damping)});
}

ResponseModel ResponseModel::lorentz(double strength, double resonance,
                                     double damping) {
  return oscillators({OscillatorTerm::lorentz(strength, resonance, damping)});
}

ResponseModel ResponseModel::tabulated(
    std::vector<std::pair<double, double>> samples) {
  return ResponseModel(Tabulated{std::move(samples)});
}

bool ResponseModel::has_only_positive_terms() const noexcept {
  if (const auto* sum = std::get_if<OscillatorSum>(&kind_)) {
    return std::all_of(sum->terms.begin(), sum->terms.end(),
                       [](const OscillatorTerm& t) { return t.sign > 0; });
  }
  return true;
}

std::vector<double> ResponseModel::frequency_scales() const {
  std::vector<double> out;
  if (const auto* sum = std::get_if<OscillatorSum>(&kind_)) {
    for (const auto& t : sum->terms) {
      for (double w : {std::sqrt(t.strength_sq), t.resonance, t.damping}) {
        if (w > 0.0) out.push_back(w);
      }
    }
  } else if (const auto* tab = std::get_if<Tabulated>(&kind_)) {
    out.push_back(tab->samples.front().first);
    out.push_back(tab->samples.back().first);
  }
  return out;
}

double ResponseModel::max_frequency() const noexcept {
  double m = 0.0;
  for (double w : frequency_scales()) m = std::max(m, w);
  return m;
}

double ResponseModel::susceptibility(double xi) const noexcept {
  switch (kind_.index()) {
    case 0:
      return 0.0;
    case 2: {
      double v = 0.0;
      for (const auto& t : std::get<OscillatorSum>(kind_).terms) {
        v += t.evaluate(xi);
      }
      return v;
    }
    case 3: {
      const double lx = std::log(xi);
      if (lx <= log_xi_.front()) return std::exp(log_value_.front()) - 1.0;
      if (lx >= log_xi_.back()) return std::exp(log_value_.back()) - 1.0;
      const auto it = std::upper_bound(log_xi_.begin(), log_xi_.end(), lx);
      const auto hi = static_cast<std::size_t>(it - log_xi_.begin());
      const auto lo = hi - 1;
      const double w = (lx - log_xi_[lo]) / (log_xi_[hi] - log_xi_[lo]);
      return std::exp(log_value_[lo] + w * (log_value_[hi] - log_value_[lo])) -
             1.0;
    }
    default:
      return std::numeric_limits<double>::infinity();
  }
}

double eval_response(const ResponseModel& model, ImaginaryFrequency xi) {
  if (model.is_perfect()) {
    fail(ErrorKind::SymbolicModel,
         "perfect conductor has no finite response; handled by reflection");
  }
  const double v = model.evaluate(xi.value());
  if (!(v > 0.0)) {
    std::ostringstream os;
    os << "response " << v << " <= 0 at xi = " << xi.value() << " rad/s";
    fail(ErrorKind::NonPassiveModel, os.str());
  }
  return v;
}

double refractive_index(double eps, double mu) {
  require(eps > 0.0 && mu > 0.0, "refractive_index needs eps, mu > 0");
  return std::sqrt(eps * mu);
}

std::vector<double> default_audit_grid(const ResponseModel& eps_model,
                                       const ResponseModel& mu_model,
                                       int points) {
  require(points >= 2, "audit grid needs at least two points");
  double scale = std::max(eps_model.max_frequency(), mu_model.max_frequency());
  if (scale <= 0.0) scale = 1.0;
  const double lo = std::log(1e-4 * scale);
  const double hi = std::log(1e4 * scale);
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        std::exp(lo + (hi - lo) * i / (points - 1));
  }
  return grid;
}

void audit_passivity(const ResponseModel& model,
                     std::span<const double> audit_grid,
                     const std::string& label) {
  if (model.is_perfect()) return;
  for (double xi : audit_grid) {
    const double v = model.evaluate(xi);
    if (!(v > 0.0)) {
      std::ostringstream os;
      os << label << " is " << v << " <= 0 at xi = " << xi << " rad/s";
      fail(ErrorKind::NonPassiveModel, os.str());
    }
  }
}

MaterialClass classify_pair(const ResponseModel& eps_model,
                            const ResponseModel& mu_model,
                            std::span<const double> audit_grid) {
  require(!audit_grid.empty(), "audit grid must be non-empty");
  for (std::size_t i = 1; i < audit_grid.size(); ++i) {
    require(audit_grid[i] > audit_grid[i - 1],
            "audit grid must be strictly increasing");
  }
  if (mu_model.is_vacuum()) return MaterialClass::PurelyDielectric;
  if (eps_model.is_vacuum()) return MaterialClass::PurelyMagnetic;
  if (eps_model.is_perfect()) return MaterialClass::MainlyDielectric;
  if (mu_model.is_perfect()) return MaterialClass::MainlyMagnetic;

  bool eps_dominates = true;
  bool mu_dominates = true;
  for (double xi : audit_grid) {
    const ImaginaryFrequency f(xi);
    const double e = eval_response(eps_model, f);
    const double m = eval_response(mu_model, f);
    if (m > e) eps_dominates = false;
    if (e > m) mu_dominates = false;
  }
  if (eps_dominates) return MaterialClass::MainlyDielectric;
  if (mu_dominates) return MaterialClass::MainlyMagnetic;
  return MaterialClass::Mixed;
}

MaterialClass classify_pair(const ResponseModel& eps_model,
                            const ResponseModel& mu_model) {
  const auto grid = default_audit_grid(eps_model, mu_model);
  return classify_pair(eps_model, mu_model, grid);
}

double plasma_wavelength(double omega) {
  require(std::isfinite(omega) && omega > 0.0,
          "plasma_wavelength needs omega > 0");
  return 2.0 * kPi * kSpeedOfLight / omega;
}

NimsParameters NimsParameters::published() {
  return {
      .omega_e = ghz_over_2pi(3.6e5),
      .gamma_e = ghz_over_2pi(8.9e3),
      .omega_0 = ghz_over_2pi(2.05e5),
      .omega_e1 = ghz_over_2pi(2.04e4),
      .gamma_e1 = ghz_over_2pi(5.03e3),
      .omega_m1 = ghz_over_2pi(9.72e4),
      .gamma_m1 = ghz_over_2pi(1.1e4),
  };
}

Material build_nims_material(const NimsParameters& p) {
  for (double v : {p.omega_e, p.gamma_e, p.omega_0, p.gamma_e1, p.omega_m1,
                   p.gamma_m1}) {
    require(std::isfinite(v) && v > 0.0,
            "metamaterial parameters must be positive");
  }
  require(std::isfinite(p.omega_e1) && p.omega_e1 >= 0.0,
          "anti-resonance strength must be >= 0");
  Material m{
      ResponseModel::oscillators(
          {OscillatorTerm::drude(p.omega_e, p.gamma_e),
           OscillatorTerm::lorentz(p.omega_e1, p.omega_0, p.gamma_e1, -1)}),
      ResponseModel::lorentz(p.omega_m1, p.omega_0, p.gamma_m1),
  };
  const auto grid = default_audit_grid(m.eps, m.mu);
  audit_passivity(m.eps, grid, "metamaterial permittivity");
  return m;
}

Material gold_drude() {
  return {ResponseModel::drude(1.37e16, 5.32e13), ResponseModel::vacuum()};
}

}  // namespace casimir
