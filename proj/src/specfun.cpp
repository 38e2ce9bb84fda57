#include "hypdrum/specfun.hpp"

#include <cmath>

namespace hypdrum {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta2 = kPi * kPi / 6.0;

// B_{2k} / (2k+1)! for k = 1..15, coefficients of the Bernoulli-number
// expansion Li2(z) = u - u^2/4 + sum_k B_{2k} u^{2k+1} / (2k+1)!, u = -log(1-z).
constexpr std::array<double, 15> kBernoulliOverFactorial = [] {
  constexpr std::array<double, 15> bernoulli = {
      1.0 / 6.0,
      -1.0 / 30.0,
      1.0 / 42.0,
      -1.0 / 30.0,
      5.0 / 66.0,
      -691.0 / 2730.0,
      7.0 / 6.0,
      -3617.0 / 510.0,
      43867.0 / 798.0,
      -174611.0 / 330.0,
      854513.0 / 138.0,
      -236364091.0 / 2730.0,
      8553103.0 / 6.0,
      -23749461029.0 / 870.0,
      8615841276005.0 / 14322.0,
  };
  std::array<double, 15> out{};
  double factorial = 1.0;  // (2k+1)!
  for (int k = 1; k <= 15; ++k) {
    factorial *= static_cast<double>(2 * k) * static_cast<double>(2 * k + 1);
    out[k - 1] = bernoulli[k - 1] / factorial;
  }
  return out;
}();

// 2 zeta(2k) / (2k (2k+1)) for the Clausen series.
const std::array<double, 40>& clausen_coefficients() {
  static const std::array<double, 40> coeffs = [] {
    std::array<double, 40> out{};
    for (int k = 1; k <= 40; ++k) {
      double zeta = 0.0;
      if (k == 1) {
        zeta = kZeta2;
      } else if (k == 2) {
        zeta = std::pow(kPi, 4) / 90.0;
      } else if (k == 3) {
        zeta = std::pow(kPi, 6) / 945.0;
      } else {
        constexpr int terms = 64;
        for (int m = terms; m >= 1; --m) zeta += std::pow(static_cast<double>(m), -2.0 * k);
        zeta += std::pow(static_cast<double>(terms) + 0.5, 1.0 - 2.0 * k) / (2.0 * k - 1.0);
      }
      out[k - 1] = 2.0 * zeta / (2.0 * k * (2.0 * k + 1.0));
    }
    return out;
  }();
  return coeffs;
}

Complex power_series(Complex z) {
  Complex sum = 0.0;
  Complex power = z;
  for (int m = 1; m < 200; ++m) {
    const Complex term = power / static_cast<double>(m * m);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    power *= z;
  }
  return sum;
}

Complex bernoulli_series(Complex z) {
  const Complex u = -std::log(1.0 - z);
  const Complex u2 = u * u;
  Complex sum = u - 0.25 * u2;
  Complex power = u;
  for (double c : kBernoulliOverFactorial) {
    power *= u2;
    const Complex term = c * power;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

Complex li2_any(Complex z);

// Li2 on the closed upper half plane; real z > 1 is taken from above.
Complex li2_upper(Complex z) {
  const double modulus = std::abs(z);
  if (modulus == 0.0) return 0.0;
  if (z == Complex(1.0, 0.0)) return kZeta2;
  if (modulus <= 0.5) return power_series(z);
  if (modulus > 1.0) {
    const Complex log_neg = std::log(-z);
    return -kZeta2 - 0.5 * log_neg * log_neg - li2_any(1.0 / z);
  }
  if (z.real() > 0.5) {
    return kZeta2 - std::log(z) * std::log(1.0 - z) - li2_any(1.0 - z);
  }
  return bernoulli_series(z);
}

Complex li2_any(Complex z) {
  if (z.imag() < 0.0) return std::conj(li2_upper(std::conj(z)));
  return li2_upper(Complex(z.real(), z.imag() == 0.0 ? 0.0 : z.imag()));
}

void require_finite(Complex z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument(std::string(who) + ": non-finite argument");
  }
}

}  // namespace

Complex li2(Complex z) {
  require_finite(z, "li2");
  if (z.imag() == 0.0 && z.real() > 1.0) {
    return std::conj(li2_upper(Complex(z.real(), 0.0)));
  }
  return li2_any(z);
}

double lobachevsky(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("lobachevsky: non-finite argument");
  const double reduced = std::remainder(x, kPi);  // [-pi/2, pi/2]
  if (reduced == 0.0) return 0.0;

  // L(x) = Cl2(2x) / 2 with Cl2(t) = t - t log|t| + sum_k c_k t (t / 2pi)^{2k}.
  const double t = 2.0 * reduced;
  const double ratio2 = (t / (2.0 * kPi)) * (t / (2.0 * kPi));
  double sum = t - t * std::log(std::abs(t));
  double power = t;
  for (double c : clausen_coefficients()) {
    power *= ratio2;
    const double term = c * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return 0.5 * sum;
}

double bloch_wigner(Complex z) {
  require_finite(z, "bloch_wigner");
  if (z.imag() == 0.0) return 0.0;
  return li2(z).imag() + std::arg(1.0 - z) * std::log(std::abs(z));
}

double regular_ideal_tet_volume() {
  static const double v3 = 2.0 * lobachevsky(kPi / 6.0);
  return v3;
}

TetShape::TetShape(Complex z) : z_(z) {
  require_finite(z, "TetShape");
  if (z.imag() <= kDegeneracyTol || std::abs(z) <= kDegeneracyTol ||
      std::abs(z - 1.0) <= kDegeneracyTol) {
    throw DegenerateTetrahedron("degenerate tetrahedron shape (Im z <= 0 or z at 0 or 1)");
  }
  angles_ = {std::arg(z), std::arg(1.0 / (1.0 - z)), std::arg((z - 1.0) / z)};
}

double tet_volume_bw(const TetShape& shape) { return bloch_wigner(shape.z()); }

double tet_volume_angles(const TetShape& shape) {
  const auto& a = shape.angles();
  return lobachevsky(a[0]) + lobachevsky(a[1]) + lobachevsky(a[2]);
}

}  // namespace hypdrum
