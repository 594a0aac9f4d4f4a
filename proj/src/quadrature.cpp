#include "minci/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace minci {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double target_abs_error = 1e-10;

// Vertices of the regular icosahedron: a spherical 5-design, so the mean
// over these 12 directions equals the sphere average of any polynomial of
// degree <= 5.
const std::array<Vec3, 12> &icosahedron() {
  static const std::array<Vec3, 12> dirs = [] {
    const double g = std::numbers::phi;
    const double n = std::sqrt(1.0 + g * g);
    std::array<Vec3, 12> v{};
    std::size_t i = 0;
    for (double s1 : {-1.0, 1.0}) {
      for (double s2 : {-1.0, 1.0}) {
        v[i++] = {0.0, s1 / n, s2 * g / n};
        v[i++] = {s1 / n, s2 * g / n, 0.0};
        v[i++] = {s2 * g / n, 0.0, s1 / n};
      }
    }
    return v;
  }();
  return dirs;
}

template <class F> double sphere_mean(F &&f) {
  double sum = 0.0;
  for (const Vec3 &u : icosahedron()) {
    sum += f(u);
  }
  return sum / 12.0;
}

template <class F> double radial_integral(F &&f, const char *what) {
  // Boost stops on error relative to the running estimate, which never happens
  // when the integral vanishes. Adding exp(-r) (integral 1) gives it a floor.
  double error = 0.0;
  auto shifted = [&](double r) { return f(r) + std::exp(-r); };
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                           shifted, 0.0, std::numeric_limits<double>::infinity(), 15,
                           1e-12, &error) -
                       1.0;
  if (!(error <= target_abs_error) || !std::isfinite(value)) {
    throw QuadratureError(std::string(what) + ": radial quadrature did not converge",
                          error);
  }
  return value;
}

Vec3 scale(const Vec3 &u, double r) { return {u[0] * r, u[1] * r, u[2] * r}; }

// Complex-step gradient: exact to rounding, no subtractive cancellation.
Vec3 gradient(Orbital o, const DilationParams &params, const Vec3 &x) {
  constexpr double h = 1e-30;
  Vec3 g{};
  for (std::size_t i = 0; i < 3; ++i) {
    std::array<std::complex<double>, 3> y{x[0], x[1], x[2]};
    y[i] += std::complex<double>(0.0, h);
    g[i] = std::imag(evaluate_orbital_generic(o, params, y)) / h;
  }
  return g;
}

} // namespace

double quadrature_integral(Orbital a, Orbital b, Orbital c, Orbital d,
                           const DilationParams &params) {
  validate(params);
  // (2 pi^2)^{-1} * 4 pi k^2 / k^2 = 2 / pi per unit radial measure.
  auto integrand = [&](double k) {
    return 2.0 / pi * sphere_mean([&](const Vec3 &u) {
             const Vec3 kv = scale(u, k);
             return std::real(std::conj(fourier_product(a, b, params, kv)) *
                              fourier_product(c, d, params, kv));
           });
  };
  return radial_integral(integrand, "two-body integral");
}

double quadrature_overlap(Orbital a, Orbital b, const DilationParams &params) {
  validate(params);
  auto integrand = [&](double r) {
    return 4.0 * pi * r * r * sphere_mean([&](const Vec3 &u) {
             const Vec3 x = scale(u, r);
             return evaluate_orbital(a, params, x) * evaluate_orbital(b, params, x);
           });
  };
  return radial_integral(integrand, "overlap");
}

double quadrature_one_body(Orbital a, double nuclear_charge, const DilationParams &params) {
  validate(params);
  if (!(nuclear_charge > 0.0)) {
    throw std::domain_error("nuclear charge must be positive");
  }
  // Kinetic energy as (1/2) \int |grad phi|^2; the angular dependence of
  // |grad phi|^2 and phi^2 at fixed r is polynomial of degree <= 2.
  auto integrand = [&](double r) {
    if (r == 0.0) {
      return 0.0;
    }
    return 4.0 * pi * r * r * sphere_mean([&](const Vec3 &u) {
             const Vec3 x = scale(u, r);
             const Vec3 g = gradient(a, params, x);
             const double phi = evaluate_orbital(a, params, x);
             return 0.5 * (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]) -
                    nuclear_charge / r * phi * phi;
           });
  };
  return radial_integral(integrand, "one-body integral");
}

double quadrature_symbol(IntegralSymbol s, double nuclear_charge,
                         const DilationParams &params) {
  const auto idx = symbol_orbitals(s);
  if (is_one_body(s)) {
    return quadrature_one_body(orbital_from_index(idx[0]), nuclear_charge, params);
  }
  return quadrature_integral(orbital_from_index(idx[0]), orbital_from_index(idx[1]),
                             orbital_from_index(idx[2]), orbital_from_index(idx[3]),
                             params);
}

} // namespace minci
