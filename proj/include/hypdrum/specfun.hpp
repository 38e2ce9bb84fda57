#pragma once

// Special functions behind ideal-tetrahedron volumes: the complex
// dilogarithm, the Lobachevsky function and the Bloch-Wigner combination.
//
// All logarithms and arguments use the principal branch, arg in (-pi, pi].

#include <array>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hypdrum {

using Complex = std::complex<double>;

/// Thrown when a tetrahedron shape is flat (Im z <= 0 or z near 0 or 1).
class DegenerateTetrahedron : public std::domain_error {
 public:
  explicit DegenerateTetrahedron(const std::string& what) : std::domain_error(what) {}
};

/// Shapes closer than this to the real axis, to 0 or to 1 are rejected.
inline constexpr double kDegeneracyTol = 1e-14;

/// Principal-branch dilogarithm Li2(z) = sum_{m>=1} z^m / m^2.
///
/// Evaluated by the power series on |z| <= 1/2, by the Bernoulli series in
/// -log(1-z) on the rest of the unit disk with Re z <= 1/2, and elsewhere by
/// the inversion (z -> 1/z) and reflection (z -> 1-z) functional equations.
/// On the cut z > 1 the value is the limit from below, Im = -pi log z.
/// Satisfies li2(conj z) == conj(li2(z)) bit-for-bit off the cut.
///
/// Throws std::invalid_argument for non-finite input.
Complex li2(Complex z);

/// Lobachevsky function L(x) = -int_0^x log|2 sin t| dt. Odd and pi-periodic.
/// Throws std::invalid_argument for non-finite input.
double lobachevsky(double x);

/// Bloch-Wigner function D(z) = Im Li2(z) + arg(1-z) log|z|.
///
/// This is the signed volume of the ideal tetrahedron with edge parameter z:
/// positive for Im z > 0, negative for Im z < 0, zero on the real axis.
/// Throws std::invalid_argument for non-finite input.
double bloch_wigner(Complex z);

/// Volume of the regular ideal tetrahedron, 2 L(pi/6) = 1.01494160640965...
double regular_ideal_tet_volume();

/// A positively oriented, non-degenerate ideal tetrahedron given by the edge
/// parameter along one chosen edge. Opposite edges share parameters; the
/// three parameters are z, 1/(1-z) and (z-1)/z.
class TetShape {
 public:
  /// Throws DegenerateTetrahedron unless Im z > kDegeneracyTol and z keeps
  /// that distance from 0 and 1; std::invalid_argument if z is not finite.
  explicit TetShape(Complex z);

  Complex z() const { return z_; }

  /// Dihedral angles (arg z, arg 1/(1-z), arg (z-1)/z), each in (0, pi).
  const std::array<double, 3>& angles() const { return angles_; }

 private:
  Complex z_;
  std::array<double, 3> angles_;
};

/// Volume from the Bloch-Wigner formula.
double tet_volume_bw(const TetShape& shape);

/// Volume as L(a) + L(b) + L(c) over the three dihedral angles.
double tet_volume_angles(const TetShape& shape);

}  // namespace hypdrum
