#include "hypdrum/explore.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "hypdrum/geometry.hpp"

namespace hypdrum {
namespace {

constexpr double kPi = std::numbers::pi;

void require_n(int n, const char* who) {
  if (n < 3) throw std::invalid_argument(std::string(who) + ": n must be at least 3");
}

std::vector<double> inclusive_grid(Range r, int steps) {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) v[k] = r.lo + (r.hi - r.lo) * k / (steps - 1);
  v.back() = r.hi;
  return v;
}

struct Vertex {
  std::array<double, 2> x;  // (log d, theta)
  double f;                 // negated volume
};

}  // namespace

ScanResult scan(int n, Range d_range, Range theta_range, int d_steps, int theta_steps,
                int jobs) {
  require_n(n, "scan");
  const double period = 2.0 * kPi / n;
  if (!(d_range.lo > 0.0) || !(d_range.hi > d_range.lo) || !std::isfinite(d_range.hi)) {
    throw std::invalid_argument("scan: d range must satisfy 0 < lo < hi");
  }
  if (!(theta_range.lo >= 0.0) || !(theta_range.hi > theta_range.lo) ||
      !(theta_range.hi <= period + 1e-12)) {
    throw std::invalid_argument("scan: theta range must satisfy 0 <= lo < hi <= 2 pi / n");
  }
  if (d_steps < 2 || theta_steps < 2) throw std::invalid_argument("scan: steps must be >= 2");

  ScanResult out;
  out.n = n;
  out.d_values = inclusive_grid(d_range, d_steps);
  out.theta_values = inclusive_grid(theta_range, theta_steps);
  out.volumes.assign(out.d_values.size() * out.theta_values.size(), 0.0);

  auto fill_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < out.d_values.size(); i += stride) {
      for (std::size_t j = 0; j < out.theta_values.size(); ++j) {
        out.volumes[i * out.theta_values.size() + j] =
            drum_volume(n, out.d_values[i], out.theta_values[j]);
      }
    }
  };

  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < out.volumes.size(); ++k) {
    if (out.volumes[k] > out.volumes[best]) best = k;
  }
  out.argmax = {best / out.theta_values.size(), best % out.theta_values.size()};
  return out;
}

double MaxResult::halfclick_gap() const { return std::abs(theta_star - kPi / n); }

MaxResult maximize(int n, const MaximizeOptions& options) {
  require_n(n, "maximize");
  if (!(options.param_tol > 0.0)) throw std::invalid_argument("maximize: tolerance must be positive");
  if (!(options.grid_offset >= 0.0 && options.grid_offset < 1.0)) {
    throw std::invalid_argument("maximize: grid offset must lie in [0, 1)");
  }

  MaxResult result;
  result.n = n;
  result.tolerance = options.param_tol;

  auto volume_at = [&](double log_d, double theta) {
    ++result.evaluations;
    const double d = std::exp(log_d);
    if (!(d > 0.0) || !std::isfinite(d)) return std::numeric_limits<double>::infinity();
    return -drum_volume(n, d, theta);
  };

  // Coarse grid. Maximizers shrink roughly like 1/n, so the d window does too.
  constexpr int kGridD = 64;
  constexpr int kGridTheta = 32;
  const double log_lo = std::log(0.01 * std::min(1.0, 3.0 / n));
  const double log_hi = std::log(std::max(15.0 / n, 0.05));
  const double off = options.grid_offset;
  const double half_click = kPi / n;

  Vertex best{{0.0, 0.0}, std::numeric_limits<double>::infinity()};
  for (int i = 0; i < kGridD; ++i) {
    const double log_d = log_lo + (log_hi - log_lo) * (i + off) / (kGridD - 1 + off);
    for (int j = 0; j < kGridTheta; ++j) {
      const double theta = half_click * (j + off) / (kGridTheta - 1 + off);
      const double f = volume_at(log_d, theta);
      if (f < best.f) best = {{log_d, theta}, f};
    }
  }

  // Nelder-Mead. theta is unconstrained: the volume is even about pi/n and
  // 2 pi/n periodic, so a maximum on the edge of the canonical domain is an
  // interior maximum here.
  const std::array<double, 2> cell = {(log_hi - log_lo) / (kGridD - 1),
                                      half_click / (kGridTheta - 1)};
  std::array<Vertex, 3> simplex;
  simplex[0] = best;
  for (int k = 0; k < 2; ++k) {
    Vertex v = best;
    v.x[k] += cell[k];
    v.f = volume_at(v.x[0], v.x[1]);
    simplex[k + 1] = v;
  }

  auto diameter = [&] {
    double diam = 0.0;
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double dd = std::exp(simplex[p].x[0]) - std::exp(simplex[q].x[0]);
        const double dt = simplex[p].x[1] - simplex[q].x[1];
        diam = std::max(diam, std::hypot(dd, dt));
      }
    }
    return diam;
  };
  auto make = [&](const std::array<double, 2>& x) { return Vertex{x, volume_at(x[0], x[1])}; };
  auto along = [](const std::array<double, 2>& from, const std::array<double, 2>& to, double t) {
    return std::array<double, 2>{from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
  };

  while (true) {
    std::sort(simplex.begin(), simplex.end(), [](const Vertex& l, const Vertex& r) { return l.f < r.f; });
    if (diameter() < options.param_tol) {
      result.converged = true;
      break;
    }
    if (result.evaluations >= options.max_evaluations) break;
    ++result.iterations;

    const std::array<double, 2> centroid = {0.5 * (simplex[0].x[0] + simplex[1].x[0]),
                                            0.5 * (simplex[0].x[1] + simplex[1].x[1])};
    Vertex& worst = simplex[2];
    const Vertex reflected = make(along(centroid, worst.x, -1.0));
    if (reflected.f < simplex[0].f) {
      const Vertex expanded = make(along(centroid, worst.x, -2.0));
      worst = expanded.f < reflected.f ? expanded : reflected;
    } else if (reflected.f < simplex[1].f) {
      worst = reflected;
    } else {
      const bool outside = reflected.f < worst.f;
      const Vertex contracted =
          make(along(centroid, outside ? reflected.x : worst.x, 0.5));
      if (contracted.f <= (outside ? reflected.f : worst.f)) {
        worst = contracted;
      } else {
        for (int k = 1; k < 3; ++k) simplex[k] = make(along(simplex[0].x, simplex[k].x, 0.5));
      }
    }
  }

  const DrumParams star =
      DrumParams::make(n, std::exp(simplex[0].x[0]), simplex[0].x[1]).canonical();
  result.d_star = star.d;
  result.theta_star = star.theta;
  result.vol_star = drum_volume(star).vol_drum;
  return result;
}

std::string_view to_string(CriticalKind kind) {
  switch (kind) {
    case CriticalKind::LocalMin: return "LOCAL_MIN";
    case CriticalKind::LocalMax: return "LOCAL_MAX";
    case CriticalKind::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

double default_halfclick_step(int n) {
  require_n(n, "default_halfclick_step");
  return std::min(1e-3, kPi / (8.0 * n));
}

CriticalClassification classify_halfclick(int n, double d, std::optional<double> step,
                                          double tol_curv) {
  require_n(n, "classify_halfclick");
  if (!std::isfinite(d) || d <= 0.0) throw std::invalid_argument("classify_halfclick: d must be positive");
  const double h = step.value_or(default_halfclick_step(n));
  if (!(h > 0.0) || !(h < kPi / (4.0 * n))) {
    throw std::invalid_argument("classify_halfclick: step must lie in (0, pi/(4n))");
  }

  const double half_click = kPi / n;
  CriticalClassification c;
  c.n = n;
  c.d = d;
  c.step = h;
  c.second_difference = 2.0 * (drum_volume(n, d, half_click - h) - drum_volume(n, d, half_click));
  if (c.second_difference < -tol_curv) {
    c.kind = CriticalKind::LocalMax;
  } else if (c.second_difference > tol_curv) {
    c.kind = CriticalKind::LocalMin;
  } else {
    c.kind = CriticalKind::Inconclusive;
  }
  return c;
}

double critical_d(int n, double tol) {
  require_n(n, "critical_d");
  if (!(tol > 0.0)) throw std::invalid_argument("critical_d: tolerance must be positive");

  auto curvature = [n](double d) { return classify_halfclick(n, d).second_difference; };

  constexpr double kLo = 1e-3;
  constexpr double kHi = 5.0;
  constexpr int kSamples = 400;
  double lo = kLo;
  double f_lo = curvature(lo);
  for (int k = 1; k <= kSamples; ++k) {
    const double hi = kLo * std::pow(kHi / kLo, static_cast<double>(k) / kSamples);
    const double f_hi = curvature(hi);
    if (f_lo > 0.0 && f_hi < 0.0) {
      double a = lo;
      double b = hi;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        if (curvature(mid) > 0.0) {
          a = mid;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    lo = hi;
    f_lo = f_hi;
  }
  throw NotFound("critical_d: no local-min to local-max transition in d in [1e-3, 5]");
}

double per_n_ratio(int n) {
  const MaxResult r = maximize(n);
  if (!r.converged) throw NotConverged("per_n_ratio: maximization did not converge");
  return r.vol_star / n;
}

}  // namespace hypdrum
