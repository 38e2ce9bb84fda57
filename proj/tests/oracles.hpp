#pragma once

// Reference computations for the test suites. Nothing here calls into the
// library's special functions; each routine evaluates its quantity from the
// defining series or integral.

#include <complex>
#include <cstdint>
#include <optional>
#include <random>

namespace oracle {

using Complex = std::complex<double>;

/// sum_{m=1}^{M} z^m / m^2 until terms drop below 1e-20; requires |z| < 1.
Complex li2_series(Complex z);

/// sum_{m=1}^{M} 1/m^2 plus the Euler-Maclaurin tail 1/M - 1/(2M^2) + 1/(6M^3).
double basel_series(std::int64_t terms);

/// Catalan's constant from sum_k (-1)^k / (2k+1)^2, averaging two partial
/// sums to cancel the leading alternating error.
double catalan_alternating(std::int64_t terms);

/// -int_0^x log|2 sin t| dt for x in [0, pi], by adaptive Gauss-Kronrod after
/// subtracting the logarithmic singularities at 0 and pi in closed form.
double lobachevsky_quadrature(double x);

/// A point of the Riemann sphere; nullopt is infinity.
using SpherePoint = std::optional<Complex>;

/// Edge parameter of the ideal tetrahedron [x1, x2, x3, x4] along the edge
/// x1 x2: (x3 - x1)(x4 - x2) / ((x4 - x1)(x3 - x2)), evaluated after a
/// Moebius map that sends every vertex to a finite point.
Complex edge_parameter(SpherePoint x1, SpherePoint x2, SpherePoint x3, SpherePoint x4);

/// Deterministic generator for property tests.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace oracle
