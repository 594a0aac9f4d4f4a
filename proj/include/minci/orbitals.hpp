#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <complex>
#include <string_view>

namespace minci {

using Vec3 = std::array<double, 3>;

/// Screening (dilation) parameters of the 1s, 2s and 2p shells, in inverse bohr.
struct DilationParams {
  double z1 = 1.0;
  double z2 = 1.0;
  double z3 = 1.0;

  static constexpr DilationParams uniform(double z) { return {z, z, z}; }

  constexpr DilationParams scaled(double lambda) const {
    return {lambda * z1, lambda * z2, lambda * z3};
  }

  friend constexpr bool operator==(const DilationParams &,
                                   const DilationParams &) = default;
};

/// Throws std::domain_error unless every parameter is finite and positive.
void validate(const DilationParams &params);

/// The five spatial orbitals. Enumerator values are the conventional 1..5
/// labels used by the symbolic energy tables (3 is p_z, 4 is p_x, 5 is p_y).
enum class Orbital : int { s1 = 1, s2 = 2, pz = 3, px = 4, py = 5 };

inline constexpr std::array<Orbital, 5> all_orbitals{
    Orbital::s1, Orbital::s2, Orbital::pz, Orbital::px, Orbital::py};

constexpr int table_index(Orbital o) { return static_cast<int>(o); }

/// Orbital from its 1..5 table label; throws std::out_of_range otherwise.
Orbital orbital_from_index(int index);

constexpr int angular_momentum(Orbital o) {
  return (o == Orbital::s1 || o == Orbital::s2) ? 0 : 1;
}

constexpr int parity(Orbital o) { return angular_momentum(o) == 0 ? 1 : -1; }

/// Cartesian axis (0 = x, 1 = y, 2 = z) carried by a p orbital, -1 for s.
constexpr int p_axis(Orbital o) {
  switch (o) {
  case Orbital::px:
    return 0;
  case Orbital::py:
    return 1;
  case Orbital::pz:
    return 2;
  default:
    return -1;
  }
}

/// "1s", "2s", "2p1", "2p2", "2p3" (p index is the Cartesian axis, 1-based).
std::string_view name(Orbital o);

/// Real value of the normalized orbital at the point x.
///
///   phi_1s  = Z1^{3/2}/sqrt(pi) e^{-Z1 r}
///   phi_2s  = (3 Z2^5 / (8 pi D))^{1/2} (1 - (2 Z1 + Z2) r / 6) e^{-Z2 r/2},
///             D = 4 Z1^2 - 2 Z1 Z2 + Z2^2
///   phi_2pi = Z3^{5/2}/sqrt(32 pi) x_i e^{-Z3 r/2}
///
/// The 2s prefactor and node position keep the set orthonormal for any
/// positive (Z1, Z2, Z3); equal parameters give the hydrogen eigenfunctions.
double evaluate_orbital(Orbital id, const DilationParams &params, const Vec3 &x);

/// Same formulas for a generic scalar type (complex arguments allow
/// complex-step differentiation). No parameter validation.
template <class T>
T evaluate_orbital_generic(Orbital id, const DilationParams &params, const std::array<T, 3> &x) {
  using std::exp;
  using std::sqrt;
  constexpr double pi = 3.14159265358979323846;
  const T r = sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  const double z1 = params.z1, z2 = params.z2, z3 = params.z3;
  switch (id) {
  case Orbital::s1:
    return std::pow(z1, 1.5) / std::sqrt(pi) * exp(-z1 * r);
  case Orbital::s2: {
    const double d = 4.0 * z1 * z1 - 2.0 * z1 * z2 + z2 * z2;
    const double norm = std::sqrt(3.0 * std::pow(z2, 5) / (8.0 * pi * d));
    return norm * (1.0 - (2.0 * z1 + z2) * r / 6.0) * exp(-0.5 * z2 * r);
  }
  case Orbital::px:
  case Orbital::py:
  case Orbital::pz:
    return std::pow(z3, 2.5) / std::sqrt(32.0 * pi) * x[p_axis(id)] * exp(-0.5 * z3 * r);
  }
  throw std::logic_error("unknown orbital");
}

/// Fourier transform  f^(k) = \int f(x) e^{-i k.x} dx  of the pointwise
/// product phi_a phi_b, in closed form. Symmetric in (a, b).
std::complex<double> fourier_product(Orbital a, Orbital b,
                                     const DilationParams &params,
                                     const Vec3 &k);

} // namespace minci
