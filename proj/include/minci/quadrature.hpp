#pragma once

#include <stdexcept>
#include <string>

#include "minci/integrals.hpp"
#include "minci/orbitals.hpp"

namespace minci {

/// Adaptive quadrature did not reach its target; carries the achieved error.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string &what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

private:
  double achieved_;
};

/// (ab|cd) by the Fourier route
///
///   (ab|cd) = (2 pi^2)^{-1} \int |k|^{-2} conj(F_ab(k)) F_cd(k) dk
///
/// with F from fourier_product. The angular integral is done exactly (the
/// integrand is a polynomial of degree <= 4 in the direction of k, so a
/// 12-point icosahedral rule is exact); the radial integral is adaptive
/// Gauss-Kronrod on [0, inf) to 1e-10 absolute.
double quadrature_integral(Orbital a, Orbital b, Orbital c, Orbital d,
                           const DilationParams &params);

/// <a|-Delta/2 - Z/r|a> by radial quadrature of the real-space orbital.
double quadrature_one_body(Orbital a, double nuclear_charge, const DilationParams &params);

/// <a|b> by radial quadrature after exact angular integration.
double quadrature_overlap(Orbital a, Orbital b, const DilationParams &params);

/// Oracle value of a canonical symbol (one-body or two-body).
double quadrature_symbol(IntegralSymbol s, double nuclear_charge,
                         const DilationParams &params);

} // namespace minci
