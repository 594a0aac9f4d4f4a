#include <doctest.h>

#include <cmath>

#include "minci/orbitals.hpp"
#include "minci/quadrature.hpp"
#include "oracles/fourier_bessel.hpp"
#include "random_params.hpp"

using namespace minci;

TEST_CASE("orbital names and labels") {
  CHECK(name(Orbital::s1) == "1s");
  CHECK(name(Orbital::s2) == "2s");
  CHECK(name(Orbital::px) == "2p1");
  CHECK(name(Orbital::py) == "2p2");
  CHECK(name(Orbital::pz) == "2p3");
  CHECK(orbital_from_index(3) == Orbital::pz);
  CHECK_THROWS_AS(orbital_from_index(0), std::out_of_range);
  CHECK_THROWS_AS(orbital_from_index(6), std::out_of_range);
  CHECK(parity(Orbital::s2) == 1);
  CHECK(parity(Orbital::py) == -1);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(validate({1.0, 0.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(validate({1.0, 1.0, -2.0}), std::domain_error);
  CHECK_THROWS_AS(validate({NAN, 1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(evaluate_orbital(Orbital::s1, {-1.0, 1.0, 1.0}, {0.1, 0.2, 0.3}),
                  std::domain_error);
}

TEST_CASE("orbitals are orthonormal for arbitrary parameters") {
  ParamSampler sample(11);
  for (int trial = 0; trial < 5; ++trial) {
    const DilationParams p = sample.around(sample.uniform(1.0, 10.0), 0.2, 1.5);
    for (Orbital a : all_orbitals) {
      for (Orbital b : all_orbitals) {
        CHECK(quadrature_overlap(a, b, p) ==
              doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("equal parameters give hydrogen eigenfunctions") {
  const double z = 3.0;
  const DilationParams p = DilationParams::uniform(z);
  // 2s node at r = 2/Z
  CHECK(std::abs(evaluate_orbital(Orbital::s2, p, {2.0 / z, 0.0, 0.0})) < 1e-15);
  // H phi = -Z^2/(2 n^2) phi, checked as expectation values
  CHECK(quadrature_one_body(Orbital::s1, z, p) == doctest::Approx(-z * z / 2).epsilon(1e-12));
  CHECK(quadrature_one_body(Orbital::s2, z, p) == doctest::Approx(-z * z / 8).epsilon(1e-12));
  CHECK(quadrature_one_body(Orbital::px, z, p) == doctest::Approx(-z * z / 8).epsilon(1e-12));
}

TEST_CASE("p orbitals are rotated copies") {
  const DilationParams p{2.0, 1.5, 1.3};
  CHECK(evaluate_orbital(Orbital::px, p, {0.3, 0.1, -0.7}) ==
        doctest::Approx(evaluate_orbital(Orbital::pz, p, {-0.7, 0.1, 0.3})));
  CHECK(evaluate_orbital(Orbital::py, p, {0.3, 0.1, -0.7}) ==
        doctest::Approx(evaluate_orbital(Orbital::pz, p, {0.3, -0.7, 0.1})));
}

TEST_CASE("closed-form Fourier transforms agree with the spherical Bessel oracle") {
  ParamSampler sample(29);
  for (int trial = 0; trial < 3; ++trial) {
    const DilationParams p = sample.around(sample.uniform(2.0, 8.0), 0.3, 1.3);
    for (int kt = 0; kt < 3; ++kt) {
      const Vec3 k{sample.uniform(-4, 4), sample.uniform(-4, 4), sample.uniform(-4, 4)};
      for (Orbital a : all_orbitals) {
        for (Orbital b : all_orbitals) {
          const std::complex<double> closed = fourier_product(a, b, p, k);
          const std::complex<double> numeric = oracle::fourier_bessel(a, b, p, k);
          INFO(name(a), " ", name(b));
          CHECK(std::abs(closed - numeric) < 1e-11);
          CHECK(std::abs(closed - fourier_product(b, a, p, k)) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("Fourier transform at k = 0 is the overlap") {
  const DilationParams p{3.1, 2.2, 1.7};
  for (Orbital a : all_orbitals) {
    for (Orbital b : all_orbitals) {
      CHECK(std::abs(fourier_product(a, b, p, {0, 0, 0}) - (a == b ? 1.0 : 0.0)) < 1e-13);
    }
  }
}
