#pragma once

// Fourier transform of an orbital product by radial quadrature against
// spherical Bessel functions. The angular dependence of phi_a phi_b is 1,
// x_i or x_i x_j, and each piece has a one-term plane wave expansion:
//   1            -> 4 pi       j0
//   x_i          -> -4 pi i  k_i/|k| j1   (times r)
//   x_i x_j      -> 4 pi [delta_ij/3 j0 - (k_i k_j/|k|^2 - delta_ij/3) j2]   (times r^2)

#include <cmath>
#include <complex>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "minci/orbitals.hpp"

namespace oracle {

// Radial factor R(r) of each orbital with the angular monomial removed.
inline double radial(minci::Orbital o, const minci::DilationParams &p, double r) {
  constexpr double pi = 3.14159265358979323846;
  switch (o) {
  case minci::Orbital::s1:
    return std::pow(p.z1, 1.5) / std::sqrt(pi) * std::exp(-p.z1 * r);
  case minci::Orbital::s2: {
    const double d = 4 * p.z1 * p.z1 - 2 * p.z1 * p.z2 + p.z2 * p.z2;
    return std::sqrt(3 * std::pow(p.z2, 5) / (8 * pi * d)) * (1 - (2 * p.z1 + p.z2) * r / 6) *
           std::exp(-p.z2 * r / 2);
  }
  default:
    return std::pow(p.z3, 2.5) / std::sqrt(32 * pi) * std::exp(-p.z3 * r / 2);
  }
}

inline std::complex<double> fourier_bessel(minci::Orbital a, minci::Orbital b,
                                           const minci::DilationParams &p, const minci::Vec3 &k) {
  using boost::math::sph_bessel;
  using boost::math::quadrature::gauss_kronrod;
  constexpr double pi = 3.14159265358979323846;
  const double kk = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
  const int ia = minci::p_axis(a), ib = minci::p_axis(b);
  const int degree = (ia >= 0) + (ib >= 0);

  auto moment = [&](unsigned l, int power) {
    auto f = [&](double r) {
      return std::pow(r, power) * radial(a, p, r) * radial(b, p, r) * sph_bessel(l, kk * r);
    };
    return gauss_kronrod<double, 61>::integrate(f, 0.0, std::numeric_limits<double>::infinity(),
                                                15, 1e-13);
  };
  auto unit = [&](int i) { return kk > 0 ? k[static_cast<std::size_t>(i)] / kk : 0.0; };

  if (degree == 0) {
    return 4 * pi * moment(0, 2);
  }
  if (degree == 1) {
    const int axis = ia >= 0 ? ia : ib;
    return std::complex<double>(0.0, -4 * pi * unit(axis) * moment(1, 3));
  }
  const double delta = ia == ib ? 1.0 : 0.0;
  const double aniso = unit(ia) * unit(ib) - delta / 3;
  return 4 * pi * (delta / 3 * moment(0, 4) - aniso * moment(2, 4));
}

} // namespace oracle
