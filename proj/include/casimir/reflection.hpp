#pragma once

// TE/TM reflection amplitudes at imaginary frequency for bare and coated
// mirrors facing vacuum.
//
// alpha = kappa c / xi is the ratio of the imaginary-frequency normal wave
// vector in vacuum to xi / c; alpha >= 1. Conventions: a perfect conductor
// has r_te = r_tm = -1, an ideal magnetic wall +1.

#include <optional>
#include <vector>

#include "casimir/materials.hpp"

namespace casimir {

enum class Polarization { TE, TM };

inline constexpr Polarization kPolarizations[] = {Polarization::TE,
                                                  Polarization::TM};

const char* to_string(Polarization p);

/// alpha >= 1.
class AlphaVariable {
 public:
  explicit AlphaVariable(double alpha);
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

struct Reflection {
  double te = 0.0;
  double tm = 0.0;

  double operator[](Polarization p) const noexcept {
    return p == Polarization::TE ? te : tm;
  }
};

struct Layer {
  Material material;
  double thickness = 0.0;  // m
};

/// Coatings are ordered from the vacuum side inwards over a semi-infinite
/// substrate. A perfect conductor may only appear as the substrate.
struct Mirror {
  std::vector<Layer> coatings;
  Material substrate;

  static Mirror bare(Material m) { return {{}, std::move(m)}; }
  static Mirror perfect() { return bare(Material::perfect_conductor()); }
  static Mirror vacuum() { return bare(Material::vacuum()); }

  bool is_bare() const noexcept { return coatings.empty(); }
  bool is_vacuum() const noexcept;

  /// Throws InvalidArgument if the stack is malformed.
  void validate() const;
  std::vector<double> frequency_scales() const;
};

struct SignChangePoints {
  std::optional<double> alpha0_tm;
  std::optional<double> alpha0_te;
};

Reflection fresnel_bulk(double eps, double mu, AlphaVariable alpha);

SignChangePoints sign_change_points(double eps, double mu);

double layered_reflection(const Mirror& mirror, ImaginaryFrequency xi,
                          AlphaVariable alpha, Polarization pol);

/// A mirror with all response functions frozen at one imaginary frequency.
/// Used by the force integrator, where many alpha values share the same xi.
class MirrorSnapshot {
 public:
  MirrorSnapshot(const Mirror& mirror, double xi);

  /// Both amplitudes at alpha >= 1 (unchecked).
  Reflection reflect(double alpha) const noexcept;
  double reflect(double alpha, Polarization pol) const noexcept {
    return reflect(alpha)[pol];
  }

  bool is_vacuum() const noexcept { return vacuum_; }
  bool is_bare() const noexcept { return media_.size() == 1; }
  bool is_perfect_bare() const noexcept { return is_bare() && perfect_; }
  /// Substrate response of a bare, non-perfect mirror.
  double substrate_eps() const noexcept { return 1.0 + media_.back().chi_e; }
  double substrate_mu() const noexcept { return 1.0 + media_.back().chi_m; }
  /// Features of the alpha dependence (for quadrature breakpoints).
  std::vector<double> alpha_scales() const;

 private:
  struct Medium {
    double chi_e;        // eps - 1
    double chi_m;        // mu - 1
    double phase_scale;  // 2 xi d / c for coatings, 0 for the substrate
  };
  std::vector<Medium> media_;  // coatings then substrate
  bool perfect_ = false;       // substrate is a perfect conductor
  bool vacuum_ = false;
};

/// Interface coefficient from medium 1 into medium 2, given the
/// susceptibilities chi = eps - 1 and chi_m = mu - 1 of both media:
///   TM (eps1 q2 - eps2 q1)/(eps1 q2 + eps2 q1),
///   TE (mu2 q1 - mu1 q2)/(mu2 q1 + mu1 q2),  q = sqrt(eps mu - 1 + alpha^2).
/// The numerators are formed from the susceptibilities directly, so weakly
/// reflecting media keep full relative accuracy. Medium 1 = vacuum gives the
/// bare amplitudes.
Reflection interface_reflection(double chi_e1, double chi_m1, double chi_e2,
                                double chi_m2, double alpha) noexcept;

}  // namespace casimir
