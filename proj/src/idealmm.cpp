#include "casimir/idealmm.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir::idealmm {

void EffectiveGeometry::validate() const {
  require(std::isfinite(l1) && std::isfinite(l2) && std::isfinite(l3),
          "interface coordinates must be finite");
  require(l1 <= l2 && l2 <= l3, "interface coordinates need L1 <= L2 <= L3");
  require(std::isfinite(area) && area > 0.0, "area must be > 0");
}

double effective_distance(const EffectiveGeometry& geom) {
  geom.validate();
  return 2.0 * geom.l2 - geom.l1 - geom.l3;
}

double interface_amplitude(double k1, double k2, double eps1, Polarization pol) {
  require(k1 > 0.0 && k2 > 0.0, "wave numbers must be > 0");
  require(eps1 > 0.0, "eps1 must be > 0");
  if (pol == Polarization::TM) return (k2 * eps1 - k1) / (k2 * eps1 + k1);
  return (k2 - k1) / (k2 + k1);
}

double phase_shift_from_amplitude(double r, double k2, double a_prime) {
  require(std::abs(r) <= 1.0, "|r| must be <= 1");
  require(std::isfinite(k2) && k2 > 0.0, "k2 must be > 0");
  const double r2 = r * r;
  const double phi = 2.0 * k2 * std::abs(a_prime);
  // ln(conj(z) / z) = -2 i arg(z) with z = 1 - r^2 e^{i phi}.
  const double re = 1.0 - r2 * std::cos(phi);
  const double im = -r2 * std::sin(phi);
  if (re == 0.0 && im == 0.0) {
    fail(ErrorKind::SingularPhase, "r^2 exp(2 i k2 |a'|) = 1: resonance pole");
  }
  const double delta = -std::atan2(im, re);
  return a_prime < 0.0 ? -delta : delta;
}

double phase_shift(double k1, double k2, double eps1, double a_prime,
                   Polarization pol) {
  return phase_shift_from_amplitude(interface_amplitude(k1, k2, eps1, pol), k2,
                                    a_prime);
}

std::vector<double> phase_shift_curve(double r, std::span<const double> k2,
                                      double a_prime) {
  std::vector<double> out;
  out.reserve(k2.size());
  double offset = 0.0;
  for (std::size_t i = 0; i < k2.size(); ++i) {
    if (i > 0) require(k2[i] > k2[i - 1], "k2 samples must increase");
    const double raw = phase_shift_from_amplitude(r, k2[i], a_prime);
    if (!out.empty()) {
      const double jump = raw + offset - out.back();
      offset -= kPi * std::round(jump / kPi);
    }
    out.push_back(raw + offset);
  }
  return out;
}

double ideal_mm_force(double a_prime, double area) {
  require(std::isfinite(a_prime), "a' must be finite");
  require(std::isfinite(area) && area > 0.0, "area must be > 0");
  if (a_prime == 0.0) {
    fail(ErrorKind::Divergence, "divergence at a'=0");
  }
  const double a2 = a_prime * a_prime;
  const double magnitude = area * kHbar * kSpeedOfLight * kPi * kPi / (240.0 * a2 * a2);
  return a_prime > 0.0 ? -magnitude : magnitude;
}

double ideal_mm_energy(double a_prime, double area) {
  require(std::isfinite(a_prime), "a' must be finite");
  require(std::isfinite(area) && area > 0.0, "area must be > 0");
  if (a_prime == 0.0) {
    fail(ErrorKind::Divergence, "divergence at a'=0");
  }
  const double a = std::abs(a_prime);
  const double magnitude = area * kHbar * kSpeedOfLight * kPi * kPi / (720.0 * a * a * a);
  return a_prime > 0.0 ? -magnitude : magnitude;
}

double phase_integral_energy(double r, double a_prime, int panels_per_unit,
                             double cutoff) {
  require(std::abs(r) <= 1.0, "|r| must be <= 1");
  require(std::isfinite(a_prime) && a_prime != 0.0, "a' must be nonzero");
  require(panels_per_unit >= 1 && cutoff > 0.0, "grid must be non-empty");

  using Rule = boost::math::quadrature::gauss<double, 10>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  std::vector<double> nodes, weights;
  const int panels = static_cast<int>(std::ceil(cutoff * panels_per_unit));
  const double h = cutoff / panels;
  for (int p = 0; p < panels; ++p) {
    const double c = (p + 0.5) * h;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (double s : {-1.0, 1.0}) {
        if (x[i] == 0.0 && s > 0.0) continue;
        nodes.push_back(c + s * 0.5 * h * x[i]);
        weights.push_back(0.5 * h * w[i]);
      }
    }
  }

  // u = k |a'|, v = xi |a'| / c; the k-measure contributes u du / (2 pi).
  const double r2 = r * r;
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double u = nodes[i];
    double row = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const double kappa = std::hypot(u, nodes[j]);
      row += weights[j] * std::log1p(-r2 * std::exp(-2.0 * kappa));
    }
    sum += weights[i] * u * row;
  }
  const double a = std::abs(a_prime);
  const double per_pol = kHbar * kSpeedOfLight * sum / (4.0 * kPi * kPi * a * a * a);
  const double energy = 2.0 * per_pol;
  return a_prime > 0.0 ? energy : -energy;
}

}  // namespace casimir::idealmm
