#include <doctest.h>

#include <cmath>

#include "minci/integrals.hpp"
#include "minci/quadrature.hpp"
#include "random_params.hpp"

using namespace minci;

TEST_CASE("exact PT coefficients") {
  const std::array<Rational, symbol_count> expected{
      Rational(-1, 2),     Rational(-1, 8),   Rational(-1, 8),    Rational(5, 8),
      Rational(17, 81),    Rational(16, 729), Rational(77, 512),  Rational(59, 243),
      Rational(112, 6561), Rational(83, 512), Rational(15, 512),  Rational(501, 2560),
      Rational(447, 2560), Rational(27, 2560)};
  for (IntegralSymbol s : all_symbols) {
    INFO(notation(s));
    CHECK(pt_coefficients()[index_of(s)] == expected[index_of(s)]);
  }
}

TEST_CASE("pt_integrals equals the closed forms at equal parameters") {
  for (double z : {1.0, 3.0, 7.5, 10.0}) {
    const IntegralSet a = pt_integrals(z);
    const IntegralSet b = compute_integrals(z, DilationParams::uniform(z));
    for (IntegralSymbol s : all_symbols) {
      CHECK(a[s] == doctest::Approx(b[s]).epsilon(1e-14));
    }
  }
  CHECK(pt_integrals(3)[IntegralSymbol::x1221] == doctest::Approx(16.0 / 729.0 * 3));
  CHECK_THROWS_AS(pt_integrals(0), std::domain_error);
}

TEST_CASE("closed forms agree with quadrature for random parameters") {
  ParamSampler sample(3);
  for (int trial = 0; trial < 20; ++trial) {
    const double z = sample.uniform(1.0, 10.0);
    const DilationParams p{z * sample.uniform(0.5, 1.2), z * sample.uniform(0.25, 1.0),
                           z * sample.uniform(0.25, 1.0)};
    const IntegralSet ints = compute_integrals(z, p);
    for (IntegralSymbol s : all_symbols) {
      const double q = quadrature_symbol(s, z, p);
      INFO(notation(s), " at Z = ", z, " (", p.z1, ", ", p.z2, ", ", p.z3, ")");
      CHECK(std::abs(ints[s] - q) <= 1e-8 * std::abs(q));
    }
  }
}

TEST_CASE("(22|22) is the degree-four form") {
  // The variant with Z1 Z2^2 in place of Z1 Z2^3 is not homogeneous and
  // misses quadrature away from Z1 = Z2.
  const DilationParams p{3.0, 1.4, 1.0};
  const double q = quadrature_symbol(IntegralSymbol::c2222, 3.0, p);
  CHECK(compute_integrals(3.0, p)[IntegralSymbol::c2222] == doctest::Approx(q).epsilon(1e-10));
  const double z1 = p.z1, z2 = p.z2, d = 4 * z1 * z1 - 2 * z1 * z2 + z2 * z2;
  const double misprint = z2 / 512 *
                          (1488 * std::pow(z1, 4) - 1952 * std::pow(z1, 3) * z2 +
                           1752 * z1 * z1 * z2 * z2 - 840 * z1 * z2 * z2 + 245 * std::pow(z2, 4)) /
                          (d * d);
  CHECK(std::abs(misprint - q) > 1e-3);
}

TEST_CASE("scaling: two-body degree one, one-body degree two with Z") {
  const DilationParams p{2.7, 1.9, 1.6};
  const double lambda = 1.7;
  const IntegralSet a = compute_integrals(4.0, p);
  const IntegralSet b = compute_integrals(4.0 * lambda, p.scaled(lambda));
  for (IntegralSymbol s : all_symbols) {
    const double factor = is_one_body(s) ? lambda * lambda : lambda;
    CHECK(b[s] == doctest::Approx(factor * a[s]).epsilon(1e-13));
  }
}

TEST_CASE("symbol notation round trip") {
  for (IntegralSymbol s : all_symbols) {
    CHECK(parse_symbol(notation(s)) == s);
  }
  CHECK(notation(IntegralSymbol::x1221) == "(12|21)");
  CHECK_FALSE(parse_symbol("(21|12)").has_value());
  CHECK_FALSE(parse_symbol("12|21").has_value());
  CHECK(symbol_orbitals(IntegralSymbol::x2332) == std::array<int, 4>{2, 3, 3, 2});
}

TEST_CASE("general two-body elements reduce to canonical symbols") {
  // every quadruple with a canonical class is checked against quadrature
  const DilationParams p{3.3, 2.1, 1.8};
  const IntegralSet ints = compute_integrals(4.0, p);
  int canonical = 0, zero = 0, other = 0;
  for (Orbital a : all_orbitals) {
    for (Orbital b : all_orbitals) {
      for (Orbital c : all_orbitals) {
        for (Orbital d : all_orbitals) {
          TwoBodyClass cls;
          try {
            cls = classify_two_body(a, b, c, d);
          } catch (const std::logic_error &) {
            ++other;
            continue;
          }
          if (cls.zero) {
            ++zero;
            continue;
          }
          ++canonical;
          if (a <= b && c <= d) {
            INFO(name(a), name(b), name(c), name(d));
            CHECK(ints.two_body(a, b, c, d) ==
                  doctest::Approx(quadrature_integral(a, b, c, d, p)).epsilon(1e-9));
          }
        }
      }
    }
  }
  CHECK(canonical + zero + other == 625);
  CHECK(canonical > 0);
  CHECK(other > 0);
}

TEST_CASE("symmetry-forbidden elements vanish") {
  const DilationParams p{3.3, 2.1, 1.8};
  CHECK(classify_two_body(Orbital::s1, Orbital::pz, Orbital::s1, Orbital::s1).zero);
  CHECK(std::abs(quadrature_integral(Orbital::s1, Orbital::pz, Orbital::s2, Orbital::s2, p)) <
        1e-12);
  CHECK(std::abs(quadrature_integral(Orbital::pz, Orbital::px, Orbital::s1, Orbital::s1, p)) <
        1e-12);
  const IntegralSet ints = compute_integrals(4.0, p);
  CHECK(ints.one_body(Orbital::s1, Orbital::s2) == 0.0);
  CHECK(ints.one_body(Orbital::py, Orbital::py) == ints[IntegralSymbol::h33]);
}
