#pragma once

// Exploration of the drum volume functional over (d, theta): grid sweeps,
// maximization, and the curvature test at the half-click angle theta = pi/n.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypdrum {

class NotFound : public std::runtime_error {
 public:
  explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

class NotConverged : public std::runtime_error {
 public:
  explicit NotConverged(const std::string& what) : std::runtime_error(what) {}
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct GridIndex {
  std::size_t i = 0;  // d index
  std::size_t j = 0;  // theta index
};

struct ScanResult {
  int n = 0;
  std::vector<double> d_values;
  std::vector<double> theta_values;
  std::vector<double> volumes;  // row-major, d outer
  GridIndex argmax;

  double at(std::size_t i, std::size_t j) const { return volumes[i * theta_values.size() + j]; }
  double max_volume() const { return at(argmax.i, argmax.j); }
};

/// Evaluates the drum volume on the inclusive grid d_range x theta_range.
/// With jobs > 1 rows are split across threads; the grid is bit-identical to
/// the sequential one.
///
/// Throws std::invalid_argument unless n >= 3, 0 < d.lo < d.hi,
/// 0 <= theta.lo < theta.hi <= 2 pi / n and both step counts are >= 2.
ScanResult scan(int n, Range d_range, Range theta_range, int d_steps, int theta_steps,
                int jobs = 1);

struct MaximizeOptions {
  double param_tol = 1e-8;
  /// Shifts the coarse grid by a fraction of a cell, in [0, 1).
  double grid_offset = 0.0;
  long max_evaluations = 100000;
};

struct MaxResult {
  int n = 0;
  double d_star = 0.0;
  double theta_star = 0.0;  // canonical, in [0, pi/n]
  double vol_star = 0.0;
  long iterations = 0;
  long evaluations = 0;
  bool converged = false;
  double tolerance = 0.0;

  /// |theta_star - pi/n|, distance from the half-click antiprism.
  double halfclick_gap() const;
};

/// Coarse 64 x 32 scan over d (log-spaced, window scaled with 1/n) and
/// theta in [0, pi/n], then Nelder-Mead refinement in (log d, theta) until the
/// simplex diameter in (d, theta) drops below param_tol. Running out of
/// evaluations gives converged = false.
///
/// Throws std::invalid_argument for n < 3 or a non-positive tolerance.
MaxResult maximize(int n, const MaximizeOptions& options = {});

enum class CriticalKind { LocalMin, LocalMax, Inconclusive };

std::string_view to_string(CriticalKind kind);

struct CriticalClassification {
  int n = 0;
  double d = 0.0;
  CriticalKind kind = CriticalKind::Inconclusive;
  double second_difference = 0.0;
  double step = 0.0;
};

inline constexpr double kCurvatureTol = 1e-9;

/// Default theta step for classify_halfclick: min(1e-3, pi / (8n)).
double default_halfclick_step(int n);

/// Classifies theta = pi/n for fixed (n, d) from the raw second difference
/// V(pi/n + h) - 2 V(pi/n) + V(pi/n - h) = 2 (V(pi/n - h) - V(pi/n)),
/// using the mirror symmetry V(theta) = V(2 pi/n - theta).
///
/// Throws std::invalid_argument unless n >= 3, d > 0 and 0 < step < pi/(4n).
CriticalClassification classify_halfclick(int n, double d, std::optional<double> step = {},
                                          double tol_curv = kCurvatureTol);

/// Translation length where theta = pi/n turns from a local minimum into a
/// local maximum, located by bisection on the sign of the second difference.
///
/// Throws NotFound if no sign change is bracketed in d in [1e-3, 5].
double critical_d(int n, double tol = 1e-6);

/// maximize(n).vol_star / n. Throws NotConverged if maximize does not converge.
double per_n_ratio(int n);

}  // namespace hypdrum
