#pragma once

// Globally adaptive 21-point Gauss-Kronrod integration on a finite interval.
//
// The integrand may return a plain double or a NodeValue carrying its own
// error and absolute-value estimates; the latter is how nested integrals
// propagate inner error into the outer result.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "casimir/errors.hpp"

namespace casimir::quad {

/// Integrand sample with attached uncertainty; `abs_value` is |f| (or the
/// integral of |g| for a nested integral).
struct NodeValue {
  double value = 0.0;
  double error = 0.0;
  double abs_value = 0.0;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;  // integral of |f|
  int intervals = 0;
};

/// Converged when error <= max(abs_tol, rel_tol * l1).
struct Tolerance {
  double rel = 1e-8;
  double abs = 0.0;
  int max_subdivisions = 2000;
};

namespace detail {

struct Rule {
  std::array<double, 11> x;   // Kronrod abscissae, x[0] = 0
  std::array<double, 11> wk;  // Kronrod weights
  std::array<double, 5> wg;   // Gauss weights for x[1], x[3], ..., x[9]
};

inline const Rule& rule() {
  static const Rule r = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    Rule out{};
    const auto& kx = gauss_kronrod<double, 21>::abscissa();
    const auto& kw = gauss_kronrod<double, 21>::weights();
    const auto& gw = gauss<double, 10>::weights();
    std::copy(kx.begin(), kx.end(), out.x.begin());
    std::copy(kw.begin(), kw.end(), out.wk.begin());
    std::copy(gw.begin(), gw.end(), out.wg.begin());
    return out;
  }();
  return r;
}

struct Panel {
  double a, b;
  double value, error, l1;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
NodeValue sample(F& f, double x) {
  if constexpr (std::is_same_v<std::invoke_result_t<F&, double>, NodeValue>) {
    return f(x);
  } else {
    const double v = f(x);
    return {v, 0.0, std::abs(v)};
  }
}

template <class F>
Panel gk21(F& f, double a, double b) {
  const Rule& r = rule();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const NodeValue fc = sample(f, c);
  double kron = r.wk[0] * fc.value;
  double gauss = 0.0;
  double node_err = r.wk[0] * fc.error;
  double l1 = r.wk[0] * fc.abs_value;
  for (std::size_t i = 1; i < 11; ++i) {
    const NodeValue lo = sample(f, c - h * r.x[i]);
    const NodeValue hi = sample(f, c + h * r.x[i]);
    const double sum = lo.value + hi.value;
    kron += r.wk[i] * sum;
    if (i % 2 == 1) gauss += r.wg[i / 2] * sum;
    node_err += r.wk[i] * (lo.error + hi.error);
    l1 += r.wk[i] * (lo.abs_value + hi.abs_value);
  }
  Panel p{a, b, kron * h, 0.0, l1 * h};
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * p.l1;
  p.error = std::max(std::abs((kron - gauss) * h), roundoff) + node_err * h;
  if (!std::isfinite(p.value)) p.error = std::numeric_limits<double>::infinity();
  return p;
}

}  // namespace detail

/// Integrates f over [a, b], seeding the panel list with `breaks` (points
/// outside (a, b) are ignored). Throws NonConvergent when the subdivision
/// budget is exhausted before the tolerance is met.
template <class F>
Result integrate(F&& f, double a, double b, std::span<const double> breaks,
                 const Tolerance& tol) {
  Result out;
  if (!(b > a)) return out;

  std::vector<double> cuts{a};
  for (double x : breaks) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<detail::Panel> heap;
  double value = 0.0, error = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    auto p = detail::gk21(f, cuts[i], cuts[i + 1]);
    value += p.value;
    error += p.error;
    l1 += p.l1;
    heap.push(p);
  }

  if (!std::isfinite(value)) {
    fail(ErrorKind::NonConvergent, "quadrature produced a non-finite value");
  }
  int panels = static_cast<int>(heap.size());
  // Panels too narrow to split further are parked here.
  std::vector<detail::Panel> frozen;
  auto target = [&] { return std::max(tol.abs, tol.rel * l1); };
  while (error > target() && !heap.empty()) {
    if (panels >= tol.max_subdivisions) {
      fail(ErrorKind::NonConvergent,
           "quadrature subdivision budget exhausted (error " +
               std::to_string(error) + ", target " + std::to_string(target()) +
               ")");
    }
    const detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        worst.b - worst.a <= 1e-14 * std::max(std::abs(worst.a), std::abs(worst.b))) {
      frozen.push_back(worst);
      if (heap.empty()) break;
      continue;
    }
    const auto left = detail::gk21(f, worst.a, mid);
    const auto right = detail::gk21(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    l1 += left.l1 + right.l1 - worst.l1;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
    if (!std::isfinite(value)) {
      fail(ErrorKind::NonConvergent, "quadrature produced a non-finite value");
    }
  }
  // Resum to shed accumulated cancellation in the running totals.
  value = 0.0;
  error = 0.0;
  l1 = 0.0;
  for (const auto& p : frozen) {
    value += p.value;
    error += p.error;
    l1 += p.l1;
  }
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    l1 += heap.top().l1;
    heap.pop();
  }
  out.value = value;
  out.error = error;
  out.l1 = l1;
  out.intervals = panels;
  return out;
}

template <class F>
Result integrate(F&& f, double a, double b, const Tolerance& tol = {}) {
  return integrate(std::forward<F>(f), a, b, std::span<const double>{}, tol);
}

}  // namespace casimir::quad
