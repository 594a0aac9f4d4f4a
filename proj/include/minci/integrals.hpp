#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "minci/orbitals.hpp"

namespace minci {

using Rational = boost::multiprecision::cpp_rational;

/// The fourteen independent one-body, Coulomb and exchange integrals, in
/// chemist's notation with 1 = 1s, 2 = 2s, 3 = 2p_z, 4 = 2p_x.
enum class IntegralSymbol : int {
  h11,   // (1|1)
  h22,   // (2|2)
  h33,   // (3|3)
  c1111, // (11|11)
  c1122, // (11|22)
  x1221, // (12|21)
  c2222, // (22|22)
  c1133, // (11|33)
  x1331, // (13|31)
  c2233, // (22|33)
  x2332, // (23|32)
  c3333, // (33|33)
  c3344, // (33|44)
  x3443, // (34|43)
};

inline constexpr std::size_t symbol_count = 14;

inline constexpr std::array<IntegralSymbol, symbol_count> all_symbols{
    IntegralSymbol::h11,   IntegralSymbol::h22,   IntegralSymbol::h33,
    IntegralSymbol::c1111, IntegralSymbol::c1122, IntegralSymbol::x1221,
    IntegralSymbol::c2222, IntegralSymbol::c1133, IntegralSymbol::x1331,
    IntegralSymbol::c2233, IntegralSymbol::x2332, IntegralSymbol::c3333,
    IntegralSymbol::c3344, IntegralSymbol::x3443};

constexpr std::size_t index_of(IntegralSymbol s) { return static_cast<std::size_t>(s); }

constexpr bool is_one_body(IntegralSymbol s) { return index_of(s) < 3; }

/// "(1|1)", "(11|22)", "(12|21)", ...
std::string_view notation(IntegralSymbol s);

/// Inverse of notation(); nullopt for anything that is not a canonical symbol.
std::optional<IntegralSymbol> parse_symbol(std::string_view text);

/// Orbital indices (table labels) of a canonical symbol; one-body symbols
/// fill only the first two entries.
std::array<int, 4> symbol_orbitals(IntegralSymbol s);

/// Result of reducing (ab|cd) over the real 5-orbital basis by parity and
/// rotational symmetry: either identically zero or equal to one symbol.
struct TwoBodyClass {
  bool zero = true;
  IntegralSymbol symbol = IntegralSymbol::c1111;
};

/// Throws std::logic_error for the symmetry-allowed classes outside the
/// canonical set ((11|12), (12|33), (13|23) and relatives), which never
/// occur in matrix elements with a doubly occupied 1s shell.
TwoBodyClass classify_two_body(Orbital a, Orbital b, Orbital c, Orbital d);

/// Immutable table of integral values for one nuclear charge and parameter set.
class IntegralSet {
public:
  IntegralSet(double nuclear_charge, const DilationParams &params,
              const std::array<double, symbol_count> &values)
      : charge_(nuclear_charge), params_(params), values_(values) {}

  double operator[](IntegralSymbol s) const { return values_[index_of(s)]; }
  const std::array<double, symbol_count> &values() const { return values_; }
  double nuclear_charge() const { return charge_; }
  const DilationParams &params() const { return params_; }

  /// <a|h|b>; off-diagonal one-body elements vanish in this basis.
  double one_body(Orbital a, Orbital b) const;

  /// (ab|cd) for arbitrary basis orbitals, via classify_two_body.
  double two_body(Orbital a, Orbital b, Orbital c, Orbital d) const;

private:
  double charge_;
  DilationParams params_;
  std::array<double, symbol_count> values_;
};

/// Closed-form values for the parametrized Slater orbitals.
IntegralSet compute_integrals(double nuclear_charge, const DilationParams &params);

/// Exact coefficients of the unperturbed limit Z1 = Z2 = Z3 = Z: one-body
/// entries are coefficient * Z^2, two-body entries coefficient * Z.
const std::array<Rational, symbol_count> &pt_coefficients();

/// compute_integrals(Z, (Z, Z, Z)) evaluated from the exact coefficients.
IntegralSet pt_integrals(double nuclear_charge);

namespace detail {

/// Closed forms, generic over the scalar so that they can be evaluated in
/// exact rational arithmetic as well as in double precision.
template <class T>
std::array<T, symbol_count> closed_form_integrals(const T &Z, const T &z1, const T &z2,
                                                  const T &z3) {
  auto pw = [](const T &x, int n) {
    T r = 1;
    for (int i = 0; i < n; ++i) {
      r *= x;
    }
    return r;
  };
  const T d = 4 * z1 * z1 - 2 * z1 * z2 + z2 * z2;
  const T s12 = 2 * z1 + z2;
  const T s13 = 2 * z1 + z3;
  const T s23 = z2 + z3;
  // 4 Z1^2 - 4 Z1 Z2 + 3 Z2^2 appears in (2|2) and twice in (22|33).
  const T e = 4 * z1 * z1 - 4 * z1 * z2 + 3 * z2 * z2;

  std::array<T, symbol_count> v;
  v[index_of(IntegralSymbol::h11)] = z1 * z1 / 2 - Z * z1;
  v[index_of(IntegralSymbol::h22)] =
      z2 * z2 / 24 * (4 * z1 * z1 - 2 * z1 * z2 + 7 * z2 * z2) / d - Z * z2 / 4 * e / d;
  v[index_of(IntegralSymbol::h33)] = z3 * z3 / 8 - Z * z3 / 4;
  v[index_of(IntegralSymbol::c1111)] = T(5) / 8 * z1;
  v[index_of(IntegralSymbol::c1122)] =
      z1 * z2 *
      (8 * pw(z1, 4) + 4 * pw(z1, 3) * z2 + 4 * z1 * pw(z2, 3) + pw(z2, 4)) /
      (pw(s12, 3) * d);
  v[index_of(IntegralSymbol::x1221)] = 16 * pw(z1, 3) * pw(z2, 5) / (d * pw(s12, 5));
  // The Z1 Z2^3 term is printed as Z1 Z2^2 in the source table; only the
  // homogeneous (degree four) form agrees with direct quadrature.
  v[index_of(IntegralSymbol::c2222)] =
      z2 / 512 *
      (1488 * pw(z1, 4) - 1952 * pw(z1, 3) * z2 + 1752 * z1 * z1 * z2 * z2 -
       840 * z1 * pw(z2, 3) + 245 * pw(z2, 4)) /
      (d * d);
  v[index_of(IntegralSymbol::c1133)] =
      z1 * z3 *
      (8 * pw(z1, 4) + 20 * pw(z1, 3) * z3 + 20 * z1 * z1 * z3 * z3 +
       10 * z1 * pw(z3, 3) + pw(z3, 4)) /
      pw(s13, 5);
  v[index_of(IntegralSymbol::x1331)] = 112 * pw(z1, 3) * pw(z3, 5) / (3 * pw(s13, 7));
  v[index_of(IntegralSymbol::c2233)] =
      z2 * z3 / (4 * d * pw(s23, 7)) *
      (d * (pw(z2, 6) + 7 * pw(z2, 5) * z3 + 21 * pw(z2, 4) * z3 * z3 +
            35 * pw(z2, 3) * pw(z3, 3)) +
       3 * z2 * z2 * pw(z3, 4) * (28 * z1 * z1 - 28 * z1 * z2 + 11 * z2 * z2) +
       7 * z2 * pw(z3, 5) * e + pw(z3, 6) * e);
  v[index_of(IntegralSymbol::x2332)] =
      pw(z2, 5) * pw(z3, 5) *
      (740 * z1 * z1 + 152 * z1 * z2 + 17 * z2 * z2 - 42 * z2 * z3 - 588 * z1 * z3 +
       126 * z3 * z3) /
      (9 * pw(s23, 9) * d);
  v[index_of(IntegralSymbol::c3333)] = T(501) / 2560 * z3;
  v[index_of(IntegralSymbol::c3344)] = T(447) / 2560 * z3;
  v[index_of(IntegralSymbol::x3443)] = T(27) / 2560 * z3;
  return v;
}

} // namespace detail

} // namespace minci
