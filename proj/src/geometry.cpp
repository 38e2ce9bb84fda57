#include "hypdrum/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypdrum {
namespace {

constexpr double kPi = std::numbers::pi;

void require_n(int n, const char* who) {
  if (n < 3) throw std::invalid_argument(std::string(who) + ": n must be at least 3");
}

}  // namespace

DrumParams DrumParams::make(int n, double d, double theta) {
  require_n(n, "DrumParams");
  if (!std::isfinite(d) || !std::isfinite(theta)) {
    throw std::invalid_argument("DrumParams: non-finite parameter");
  }
  if (d <= 0.0) throw std::invalid_argument("DrumParams: translation length d must be positive");

  const double period = 2.0 * kPi / n;
  double t = std::fmod(theta, period);
  if (t < 0.0) t += period;
  if (t >= period) t = 0.0;
  return DrumParams{n, d, t};
}

DrumParams DrumParams::canonical() const {
  const double period = 2.0 * kPi / n;
  return DrumParams{n, d, std::min(theta, period - theta)};
}

double breakdown_identity_error(const VolumeBreakdown& v) {
  const double n = v.n;
  return std::max({std::abs(v.vol_drum - n * (v.vol_tau2 + v.vol_tau3)),
                   std::abs(v.vol_suspension_head - n * v.vol_tau1),
                   std::abs(v.vol_pyramid - 0.5 * v.vol_suspension_head),
                   std::abs(v.vol_suspension_drum - (v.vol_drum + 2.0 * v.vol_pyramid))});
}

PrismParams PrismParams::make(int n, double alpha) {
  require_n(n, "PrismParams");
  if (!std::isfinite(alpha) || !(alpha > kPi / n) || !(alpha < kPi / 2.0)) {
    throw std::invalid_argument("PrismParams: rim angle alpha must lie in (pi/n, pi/2)");
  }
  return PrismParams{n, alpha, kPi - 2.0 * alpha};
}

VertexConfig vertex_config(const DrumParams& p) {
  const DrumParams q = DrumParams::make(p.n, p.d, p.theta);
  VertexConfig cfg;
  cfg.n = q.n;
  cfg.d = q.d;
  cfg.theta = q.theta;
  cfg.alpha = 2.0 * kPi / q.n;
  cfg.a = std::polar(1.0, cfg.alpha);
  if (q.d > kLargeTranslation) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    cfg.b = cfg.c = Complex(inf, inf);
  } else {
    const double r = std::exp(q.d);
    cfg.b = std::polar(r, q.theta);
    cfg.c = std::polar(r, cfg.alpha + q.theta);
  }
  return cfg;
}

EdgeParameters edge_parameters(const VertexConfig& cfg) {
  const Complex a = cfg.a;
  EdgeParameters e;
  e.z1 = a;
  if (cfg.d > kLargeTranslation) {
    // Numerators and denominators divided through by r = e^d.
    const double s = std::exp(-cfg.d);
    const Complex w = std::polar(1.0, cfg.theta);
    const Complex den = w - a * s;
    e.z2 = Complex(std::numeric_limits<double>::infinity(), 0.0);
    e.z2_reciprocal = s * (1.0 - a) / den;
    e.z3 = a * (w - s) / den;
    return e;
  }
  const Complex ba = cfg.b - a;
  if (std::abs(ba) <= kDegeneracyTol) {
    throw DegenerateConfiguration("edge_parameters: vertices a and b coincide");
  }
  e.z2 = ba / (1.0 - a);
  e.z2_reciprocal = (1.0 - a) / ba;
  e.z3 = (cfg.c - a) / ba;
  return e;
}

VolumeBreakdown drum_volume(const DrumParams& p) {
  const VertexConfig cfg = vertex_config(p);
  const EdgeParameters e = edge_parameters(cfg);
  const double n = cfg.n;

  VolumeBreakdown v;
  v.n = cfg.n;
  v.vol_tau1 = bloch_wigner(e.z1);
  v.vol_tau2 = std::isfinite(e.z2.real()) ? bloch_wigner(e.z2) : -bloch_wigner(e.z2_reciprocal);
  v.vol_tau3 = bloch_wigner(e.z3);
  v.vol_drum = n * (v.vol_tau2 + v.vol_tau3);
  v.vol_suspension_head = n * v.vol_tau1;
  v.vol_pyramid = 0.5 * v.vol_suspension_head;
  v.vol_suspension_drum = n * (v.vol_tau1 + v.vol_tau2 + v.vol_tau3);
  return v;
}

double drum_volume(int n, double d, double theta) {
  return drum_volume(DrumParams::make(n, d, theta)).vol_drum;
}

double suspension_head_volume(int n) {
  require_n(n, "suspension_head_volume");
  return n * bloch_wigner(std::polar(1.0, 2.0 * kPi / n));
}

double prism_alpha(double d, int n) {
  require_n(n, "prism_alpha");
  if (!std::isfinite(d) || d <= 0.0) {
    throw std::invalid_argument("prism_alpha: d must be positive and finite");
  }
  const double height = std::sinh(-std::log(std::tan(kPi / (2.0 * n))));
  return kPi / 2.0 - std::atan(height * std::tanh(d / 2.0));
}

double prism_volume_milnor(const PrismParams& p) {
  const double shift = kPi / p.n;
  return p.n * (2.0 * lobachevsky(p.beta / 2.0) + lobachevsky(p.alpha + shift) +
                lobachevsky(p.alpha - shift));
}

double prism_volume_milnor(int n, double alpha) {
  return prism_volume_milnor(PrismParams::make(n, alpha));
}

double drum_limit_volume(int n) { return suspension_head_volume(n); }

}  // namespace hypdrum
