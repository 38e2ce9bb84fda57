#pragma once

// Ideal n-drums (antiprisms) and n-prisms in the upper half-space model.
//
// The bottom head has ideal vertices at the n-th roots of unity, the drum
// axis runs from 0 to infinity, and the loxodromic taking the bottom head to
// the top head multiplies by r e^{i theta} with r = e^d. One fundamental
// domain of the suspended drum is the union of the ideal tetrahedra
//
//   tau1 = [0, 1, a, inf],  tau2 = [1, a, b, inf],  tau3 = [a, b, c, inf]
//
// where a = e^{i alpha}, alpha = 2 pi / n, b = r e^{i theta}, c = a b.

#include <stdexcept>
#include <string>

#include "hypdrum/specfun.hpp"

namespace hypdrum {

/// Coincident ideal vertices; the drum is flat.
class DegenerateConfiguration : public std::domain_error {
 public:
  explicit DegenerateConfiguration(const std::string& what) : std::domain_error(what) {}
};

/// Above this translation length e^d overflows; the overflow-free forms of
/// the edge parameters are used instead.
inline constexpr double kLargeTranslation = 700.0;

/// Parameters (n, d, theta) of an n-drum. Construct through make(), which
/// validates n >= 3 and d > 0 and reduces theta into [0, 2 pi / n).
struct DrumParams {
  int n = 3;
  double d = 1.0;
  double theta = 0.0;

  /// Throws std::invalid_argument on n < 3, d <= 0 or non-finite values.
  static DrumParams make(int n, double d, double theta);

  /// Representative of the congruence class, theta folded into [0, pi / n].
  DrumParams canonical() const;
};

struct VertexConfig {
  int n = 3;
  double d = 0.0;
  double theta = 0.0;
  double alpha = 0.0;
  Complex a;
  Complex b;  // infinite when d > kLargeTranslation
  Complex c;
};

/// Edge parameters of tau1, tau2, tau3 along their edges ending at infinity
/// (the edge [0, inf] for tau1, the common edge [a, inf] for tau2 and tau3).
///
/// z1 and z2 always lie in the upper half plane. z3 drops into the lower half
/// plane for small d away from theta = 0; tau3 then enters the volume with
/// negative sign.
struct EdgeParameters {
  Complex z1;
  Complex z2;  // infinite when d > kLargeTranslation
  Complex z2_reciprocal;
  Complex z3;
};

/// Per-tetrahedron and aggregate volumes of one drum. vol_tau3 is a signed
/// volume; every other field is positive.
struct VolumeBreakdown {
  int n = 0;
  double vol_tau1 = 0.0;
  double vol_tau2 = 0.0;
  double vol_tau3 = 0.0;
  double vol_drum = 0.0;
  double vol_suspension_drum = 0.0;
  double vol_suspension_head = 0.0;
  double vol_pyramid = 0.0;
};

/// Largest violation among the identities vol_drum = n (tau2 + tau3),
/// vol_suspension_head = n tau1, vol_pyramid = vol_suspension_head / 2 and
/// vol_suspension_drum = vol_drum + 2 vol_pyramid.
double breakdown_identity_error(const VolumeBreakdown& v);

/// Ideal n-prism N_n(alpha): rim dihedral angle alpha, vertical dihedral
/// angle beta = pi - 2 alpha.
struct PrismParams {
  int n = 3;
  double alpha = 0.0;
  double beta = 0.0;

  /// Throws std::invalid_argument unless n >= 3 and alpha in (pi/n, pi/2).
  static PrismParams make(int n, double alpha);
};

VertexConfig vertex_config(const DrumParams& p);

/// Throws DegenerateConfiguration when b coincides with a.
EdgeParameters edge_parameters(const VertexConfig& cfg);

/// Full volume breakdown; vol_drum = n (Vol(tau2) + Vol(tau3)).
VolumeBreakdown drum_volume(const DrumParams& p);

/// Shorthand for drum_volume(DrumParams::make(n, d, theta)).vol_drum.
double drum_volume(int n, double d, double theta);

/// Volume of the ideal bipyramid over the regular ideal n-gon, n Vol(tau1),
/// which equals 2 n L(pi / n).
double suspension_head_volume(int n);

/// Rim dihedral angle of the n-prism of height d:
/// pi/2 - arctan(sinh(-log tan(pi / 2n)) tanh(d / 2)). Decreasing in d.
double prism_alpha(double d, int n);

/// Milnor's prism volume n (2 L(beta / 2) + L(alpha + pi/n) + L(alpha - pi/n)).
double prism_volume_milnor(int n, double alpha);
double prism_volume_milnor(const PrismParams& p);

/// Limit of the drum volume as d -> infinity for any theta, 2 n L(pi / n).
double drum_limit_volume(int n);

}  // namespace hypdrum
