#include "casimir/reflection.hpp"

#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

// Beyond this kappa d the coating is opaque: exp(-2 kappa d) underflows.
constexpr double kOpaqueKappaD = 700.0;

// n^2 - 1 from the susceptibilities.
double index_excess(double chi_e, double chi_m) noexcept {
  return chi_e + chi_m + chi_e * chi_m;
}

}  // namespace

const char* to_string(Polarization p) {
  return p == Polarization::TE ? "TE" : "TM";
}

AlphaVariable::AlphaVariable(double alpha) : alpha_(alpha) {
  require(alpha >= 1.0 && !std::isnan(alpha), "alpha must be >= 1");
}

bool Mirror::is_vacuum() const noexcept {
  if (!substrate.is_vacuum()) return false;
  for (const auto& layer : coatings) {
    if (!layer.material.is_vacuum()) return false;
  }
  return true;
}

void Mirror::validate() const {
  require(!substrate.mu.is_perfect(),
          "perfect conductor is only supported as a permittivity model");
  for (const auto& layer : coatings) {
    require(std::isfinite(layer.thickness) && layer.thickness > 0.0,
            "coating thickness must be finite and > 0");
    require(!layer.material.eps.is_perfect() && !layer.material.mu.is_perfect(),
            "a perfect conductor terminates the stack and cannot be a coating");
  }
}

std::vector<double> Mirror::frequency_scales() const {
  std::vector<double> out;
  auto add = [&](const Material& m) {
    for (double w : m.eps.frequency_scales()) out.push_back(w);
    for (double w : m.mu.frequency_scales()) out.push_back(w);
  };
  for (const auto& layer : coatings) {
    add(layer.material);
    out.push_back(kSpeedOfLight / layer.thickness);
  }
  add(substrate);
  return out;
}

Reflection interface_reflection(double chi_e1, double chi_m1, double chi_e2,
                                double chi_m2, double alpha) noexcept {
  if (alpha == 1.0 && chi_e1 == 0.0 && chi_m1 == 0.0) {
    // Normal incidence from vacuum: both polarizations reduce to
    // (sqrt(mu) - sqrt(eps)) / (sqrt(mu) + sqrt(eps)).
    const double d = std::sqrt(1.0 + chi_m2) + std::sqrt(1.0 + chi_e2);
    const double r = (chi_m2 - chi_e2) / (d * d);
    return {r, r};
  }
  const double a2 = alpha * alpha;
  const double s1 = index_excess(chi_e1, chi_m1);
  const double s2 = index_excess(chi_e2, chi_m2);
  const double q1 = std::sqrt(a2 + s1);
  const double q2 = std::sqrt(a2 + s2);
  const double eps1 = 1.0 + chi_e1, eps2 = 1.0 + chi_e2;
  const double mu1 = 1.0 + chi_m1, mu2 = 1.0 + chi_m2;

  // eps1^2 q2^2 - eps2^2 q1^2 and mu2^2 q1^2 - mu1^2 q2^2, expanded so that
  // every term is proportional to a susceptibility.
  const double tm_num = a2 * (chi_e1 - chi_e2) * (2.0 + chi_e1 + chi_e2) +
                        (s2 - s1) + chi_e1 * (2.0 + chi_e1) * s2 -
                        chi_e2 * (2.0 + chi_e2) * s1;
  const double te_num = a2 * (chi_m2 - chi_m1) * (2.0 + chi_m2 + chi_m1) +
                        (s1 - s2) + chi_m2 * (2.0 + chi_m2) * s1 -
                        chi_m1 * (2.0 + chi_m1) * s2;
  const double tm_den = eps1 * q2 + eps2 * q1;
  const double te_den = mu2 * q1 + mu1 * q2;
  return {te_num / (te_den * te_den), tm_num / (tm_den * tm_den)};
}

Reflection fresnel_bulk(double eps, double mu, AlphaVariable alpha) {
  require(eps > 0.0 && mu > 0.0, "fresnel_bulk needs eps, mu > 0");
  return interface_reflection(0.0, 0.0, eps - 1.0, mu - 1.0, alpha.value());
}

SignChangePoints sign_change_points(double eps, double mu) {
  require(eps > 0.0 && mu > 0.0, "sign_change_points needs eps, mu > 0");
  SignChangePoints out;
  const double n2m1 = eps * mu - 1.0;
  auto crossing = [&](double x) -> std::optional<double> {
    const double den = x * x - 1.0;
    if (den == 0.0) return std::nullopt;
    const double a0 = std::sqrt(n2m1 / den);
    if (!std::isfinite(a0) || a0 < 1.0) return std::nullopt;
    return a0;
  };
  out.alpha0_tm = crossing(eps);
  out.alpha0_te = crossing(mu);
  return out;
}

MirrorSnapshot::MirrorSnapshot(const Mirror& mirror, double xi) {
  vacuum_ = mirror.is_vacuum();
  perfect_ = mirror.substrate.is_perfect();
  media_.reserve(mirror.coatings.size() + 1);
  for (const auto& layer : mirror.coatings) {
    media_.push_back({layer.material.eps.susceptibility(xi),
                      layer.material.mu.susceptibility(xi),
                      2.0 * xi * layer.thickness / kSpeedOfLight});
  }
  if (perfect_) {
    media_.push_back({std::numeric_limits<double>::infinity(), 0.0, 0.0});
  } else {
    media_.push_back({mirror.substrate.eps.susceptibility(xi),
                      mirror.substrate.mu.susceptibility(xi), 0.0});
  }
}

Reflection MirrorSnapshot::reflect(double alpha) const noexcept {
  if (vacuum_) return {0.0, 0.0};
  const std::size_t n = media_.size();
  if (n == 1) {
    if (perfect_) return {-1.0, -1.0};
    return interface_reflection(0.0, 0.0, media_[0].chi_e, media_[0].chi_m,
                                alpha);
  }

  // Back-to-front recursion from the deepest interface outwards.
  const std::size_t coatings = n - 1;
  Reflection below{-1.0, -1.0};
  if (!perfect_) {
    const auto& deepest = media_[coatings - 1];
    const auto& sub = media_[coatings];
    below = interface_reflection(deepest.chi_e, deepest.chi_m, sub.chi_e,
                                 sub.chi_m, alpha);
  }
  for (std::size_t j = coatings; j-- > 0;) {
    const auto& layer = media_[j];
    double chi_e_above = 0.0, chi_m_above = 0.0;
    if (j > 0) {
      chi_e_above = media_[j - 1].chi_e;
      chi_m_above = media_[j - 1].chi_m;
    }
    const Reflection top = interface_reflection(chi_e_above, chi_m_above,
                                                layer.chi_e, layer.chi_m, alpha);
    const double q_layer =
        std::sqrt(alpha * alpha + index_excess(layer.chi_e, layer.chi_m));
    const double two_kd = layer.phase_scale * q_layer;
    if (two_kd > 2.0 * kOpaqueKappaD) {
      below = top;
    } else {
      const double damp = std::exp(-two_kd);
      below.te = (top.te + below.te * damp) / (1.0 + top.te * below.te * damp);
      below.tm = (top.tm + below.tm * damp) / (1.0 + top.tm * below.tm * damp);
    }
  }
  return below;
}

std::vector<double> MirrorSnapshot::alpha_scales() const {
  std::vector<double> out;
  if (vacuum_ || perfect_) return out;
  for (const auto& m : media_) {
    for (double v : {std::sqrt(std::abs(index_excess(m.chi_e, m.chi_m))),
                     1.0 + m.chi_e, 1.0 + m.chi_m}) {
      if (std::isfinite(v) && v > 1.0) out.push_back(v);
    }
    if (m.phase_scale > 0.0) out.push_back(1.0 / m.phase_scale);
  }
  return out;
}

double layered_reflection(const Mirror& mirror, ImaginaryFrequency xi,
                          AlphaVariable alpha, Polarization pol) {
  mirror.validate();
  if (mirror.is_bare()) {
    if (mirror.substrate.is_perfect()) return -1.0;
    const double e = eval_response(mirror.substrate.eps, xi);
    const double m = eval_response(mirror.substrate.mu, xi);
    return fresnel_bulk(e, m, alpha)[pol];
  }
  for (const auto& layer : mirror.coatings) {
    eval_response(layer.material.eps, xi);
    eval_response(layer.material.mu, xi);
  }
  if (!mirror.substrate.is_perfect()) {
    eval_response(mirror.substrate.eps, xi);
    eval_response(mirror.substrate.mu, xi);
  }
  return MirrorSnapshot(mirror, xi.value()).reflect(alpha.value(), pol);
}

}  // namespace casimir
