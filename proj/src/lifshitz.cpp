#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

// Integration variables: t = xi L / c and y = 2 alpha t. With these the
// measure xi^3 alpha^2 dxi dalpha becomes (c/L)^4 y^2 / 8 dt dy over the
// triangle 0 < 2t < y < tail_cut, and
//   F = -(hbar c / 2 pi^2 L^4) sum_p I_p,
//   I_p = int dt int dy (y^2 / 8) q / (1 - q),  q = rA rB exp(-y).

namespace {

// Generic landmarks in y: the integrand y^2 exp(-y) peaks at y = 2.
constexpr double kYLandmarks[] = {0.5, 2.0, 6.0, 15.0, 35.0};
constexpr double kTLandmarks[] = {0.25, 1.0, 3.0, 8.0};

enum class Region { Full, BelowAlpha0, AboveAlpha0 };

struct Setup {
  const Mirror& a;
  const Mirror& b;
  double distance;
  double tail_cut;
  quad::Tolerance inner_tol;
  quad::Tolerance outer_tol;
  std::vector<double> t_breaks;
};

double force_scale(double distance) {
  const double l2 = distance * distance;
  return kHbar * kSpeedOfLight / (2.0 * kPi * kPi * l2 * l2);
}

// alpha0 of the designated bare mirror at this frequency, or +inf if absent.
double split_alpha(const MirrorSnapshot& snap, Polarization pol) {
  if (!snap.is_bare() || snap.is_vacuum() || snap.is_perfect_bare()) {
    return std::numeric_limits<double>::infinity();
  }
  const auto pts = sign_change_points(snap.substrate_eps(), snap.substrate_mu());
  const auto& a0 = pol == Polarization::TE ? pts.alpha0_te : pts.alpha0_tm;
  return a0 ? *a0 : std::numeric_limits<double>::infinity();
}

quad::NodeValue inner(const Setup& s, Polarization pol, Region region,
                      const MirrorSide* split_side, double t) {
  const double xi = t * kSpeedOfLight / s.distance;
  const MirrorSnapshot ra(s.a, xi);
  const MirrorSnapshot rb(s.b, xi);
  if (ra.is_vacuum() || rb.is_vacuum()) return {};

  double y_lo = 2.0 * t;
  double y_hi = s.tail_cut;
  if (region != Region::Full) {
    const auto& snap = *split_side == MirrorSide::A ? ra : rb;
    const double y0 = std::min(2.0 * t * split_alpha(snap, pol), s.tail_cut);
    if (region == Region::BelowAlpha0) {
      y_hi = y0;
    } else {
      y_lo = y0;
    }
  }
  if (!(y_hi > y_lo)) return {};

  std::vector<double> breaks(std::begin(kYLandmarks), std::end(kYLandmarks));
  for (const auto* snap : {&ra, &rb}) {
    for (double alpha : snap->alpha_scales()) breaks.push_back(2.0 * t * alpha);
  }

  auto integrand = [&](double y) {
    const double alpha = y / (2.0 * t);
    const double r = ra.reflect(alpha, pol) * rb.reflect(alpha, pol);
    const double q = r * std::exp(-y);
    const double den = 1.0 - q;
    if (!(den > 0.0)) {
      std::ostringstream os;
      os << "1 - rA rB exp(-y) = " << den << " at xi = " << xi
         << " rad/s, alpha = " << alpha;
      fail(ErrorKind::DivergentIntegrand, os.str());
    }
    return 0.125 * y * y * q / den;
  };
  const auto res = quad::integrate(integrand, y_lo, y_hi, breaks, s.inner_tol);
  return {res.value, res.error, res.l1};
}

quad::Result outer(const Setup& s, Polarization pol, Region region,
                   const MirrorSide* split_side) {
  auto g = [&](double t) { return inner(s, pol, region, split_side, t); };
  return quad::integrate(g, 0.0, 0.5 * s.tail_cut, s.t_breaks, s.outer_tol);
}

Setup make_setup(const Mirror& a, const Mirror& b, double distance,
                 const QuadratureConfig& cfg) {
  cfg.validate();
  require(std::isfinite(distance) && distance > 0.0,
          "plate separation must be finite and > 0");
  a.validate();
  b.validate();
  Setup s{a, b, distance, cfg.tail_cut, {}, {}, {}};
  const double scale = force_scale(distance);
  s.outer_tol = {cfg.rel_tol, cfg.abs_tol / scale, cfg.max_subdivisions};
  s.inner_tol = {0.1 * cfg.rel_tol, 0.0, cfg.max_subdivisions};

  s.t_breaks.assign(std::begin(kTLandmarks), std::end(kTLandmarks));
  for (const auto* m : {&a, &b}) {
    for (double w : m->frequency_scales()) {
      s.t_breaks.push_back(w * distance / kSpeedOfLight);
    }
  }
  return s;
}

ForceResult assemble(double distance, double scale, const quad::Result& te,
                     const quad::Result& tm) {
  ForceResult r;
  r.te = -scale * te.value;
  r.tm = -scale * tm.value;
  r.total = r.te + r.tm;
  r.err_est = scale * (te.error + tm.error);
  r.eta = reduction_factor(r.total, distance);
  return r;
}

}  // namespace

void QuadratureConfig::validate() const {
  require(std::isfinite(rel_tol) && rel_tol > 0.0, "rel_tol must be > 0");
  require(std::isfinite(abs_tol) && abs_tol >= 0.0, "abs_tol must be >= 0");
  require(max_subdivisions >= 1, "max_subdivisions must be >= 1");
  require(std::isfinite(tail_cut) && tail_cut > 10.0, "tail_cut must be > 10");
}

double perfect_conductor_force(double distance) {
  require(std::isfinite(distance) && distance > 0.0,
          "plate separation must be finite and > 0");
  const double l2 = distance * distance;
  return -kHbar * kSpeedOfLight * kPi * kPi / (240.0 * l2 * l2);
}

double reduction_factor(double total, double distance) {
  return total / perfect_conductor_force(distance);
}

ForceResult casimir_force(const Mirror& mirror_a, const Mirror& mirror_b,
                          double distance, const QuadratureConfig& cfg) {
  const Setup s = make_setup(mirror_a, mirror_b, distance, cfg);
  const double scale = force_scale(distance);
  if (mirror_a.is_vacuum() || mirror_b.is_vacuum()) {
    return assemble(distance, scale, {}, {});
  }
  const auto te = outer(s, Polarization::TE, Region::Full, nullptr);
  const auto tm = outer(s, Polarization::TM, Region::Full, nullptr);
  return assemble(distance, scale, te, tm);
}

ForceResult force_split(const Mirror& mirror_a, const Mirror& mirror_b,
                        double distance, MirrorSide split_mirror,
                        const QuadratureConfig& cfg) {
  const Mirror& designated = split_mirror == MirrorSide::A ? mirror_a : mirror_b;
  if (!designated.is_bare()) {
    fail(ErrorKind::SplitUndefined,
         "alpha split needs a bare (single-material) mirror");
  }
  const Setup s = make_setup(mirror_a, mirror_b, distance, cfg);
  const double scale = force_scale(distance);

  quad::Result parts[2][2];  // [pol][region]
  if (!mirror_a.is_vacuum() && !mirror_b.is_vacuum()) {
    for (int p = 0; p < 2; ++p) {
      parts[p][0] = outer(s, kPolarizations[p], Region::BelowAlpha0, &split_mirror);
      parts[p][1] = outer(s, kPolarizations[p], Region::AboveAlpha0, &split_mirror);
    }
  }
  auto join = [](const quad::Result& x, const quad::Result& y) {
    return quad::Result{x.value + y.value, x.error + y.error, x.l1 + y.l1,
                        x.intervals + y.intervals};
  };
  ForceResult r = assemble(distance, scale, join(parts[0][0], parts[0][1]),
                           join(parts[1][0], parts[1][1]));
  r.split = SplitParts{-scale * parts[0][0].value, -scale * parts[0][1].value,
                       -scale * parts[1][0].value, -scale * parts[1][1].value};
  return r;
}

}  // namespace casimir
