#include "minci/orbitals.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace minci {

namespace {

constexpr double pi = std::numbers::pi;

// 4 Z1^2 - 2 Z1 Z2 + Z2^2, the 2s normalization denominator.
double two_s_norm_denominator(const DilationParams &p) {
  return 4.0 * p.z1 * p.z1 - 2.0 * p.z1 * p.z2 + p.z2 * p.z2;
}

double norm2(const Vec3 &v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

} // namespace

void validate(const DilationParams &params) {
  for (double z : {params.z1, params.z2, params.z3}) {
    if (!std::isfinite(z) || z <= 0.0) {
      throw std::domain_error("dilation parameters must be finite and positive, got " +
                              std::to_string(z));
    }
  }
}

Orbital orbital_from_index(int index) {
  if (index < 1 || index > 5) {
    throw std::out_of_range("orbital index must be in 1..5, got " + std::to_string(index));
  }
  return static_cast<Orbital>(index);
}

std::string_view name(Orbital o) {
  switch (o) {
  case Orbital::s1:
    return "1s";
  case Orbital::s2:
    return "2s";
  case Orbital::px:
    return "2p1";
  case Orbital::py:
    return "2p2";
  case Orbital::pz:
    return "2p3";
  }
  return "?";
}

double evaluate_orbital(Orbital id, const DilationParams &params, const Vec3 &x) {
  validate(params);
  return evaluate_orbital_generic(id, params, x);
}

std::complex<double> fourier_product(Orbital a, Orbital b, const DilationParams &params,
                                     const Vec3 &k) {
  validate(params);
  // Table order puts s before p and 1s before 2s.
  if (table_index(a) > table_index(b)) {
    std::swap(a, b);
  }
  const auto [z1, z2, z3] = params;
  const double k2 = norm2(k);
  const double d = two_s_norm_denominator(params);
  constexpr std::complex<double> i{0.0, 1.0};

  if (a == Orbital::s1 && b == Orbital::s1) {
    const double q = 4.0 * z1 * z1 + k2;
    return 16.0 * std::pow(z1, 4) / (q * q);
  }
  if (a == Orbital::s2 && b == Orbital::s2) {
    const double q = z2 * z2 + k2;
    const double t = 2.0 * z1 + z2;
    return std::pow(z2, 5) / d *
           (2.0 * (z1 + 2.0 * z2) / (q * q) - z2 * t * (2.0 * z1 + 5.0 * z2) / (q * q * q) +
            2.0 * std::pow(z2, 3) * t * t / (q * q * q * q));
  }
  if (a == Orbital::s1 && b == Orbital::s2) {
    const double mu = z1 + 0.5 * z2;
    const double q = mu * mu + k2;
    const double t = 2.0 * z1 + z2;
    return std::sqrt(6.0) * std::pow(z1, 1.5) * std::pow(z2, 2.5) / std::sqrt(d) *
           (4.0 * t / (3.0 * q * q) - t * t * t / (3.0 * q * q * q));
  }

  // At least one p orbital from here on.
  const int j = p_axis(b);
  if (a == Orbital::s1) {
    const double mu = z1 + 0.5 * z3;
    const double q = mu * mu + k2;
    return -2.0 * std::sqrt(2.0) * i * std::pow(z1, 1.5) * std::pow(z3, 2.5) *
           (2.0 * z1 + z3) * k[j] / (q * q * q);
  }
  if (a == Orbital::s2) {
    const double mu = 0.5 * (z2 + z3);
    const double q = mu * mu + k2;
    const double pre = std::sqrt(3.0) * std::pow(z2, 2.5) * std::pow(z3, 2.5) /
                       (16.0 * std::sqrt(d));
    return pre * i *
           (8.0 * (z2 + z3) * (z2 + z3) * (2.0 * z1 + z2) * k[j] / (q * q * q * q) -
            (32.0 * z1 + 64.0 * z2 + 48.0 * z3) * k[j] / (3.0 * q * q * q));
  }

  const int l = p_axis(a);
  const double q = z3 * z3 + k2;
  const double z3_6 = std::pow(z3, 6);
  if (l == j) {
    return z3_6 / (q * q * q) - 6.0 * z3_6 * k[j] * k[j] / (q * q * q * q);
  }
  return -6.0 * k[j] * k[l] * z3_6 / (q * q * q * q);
}

} // namespace minci
