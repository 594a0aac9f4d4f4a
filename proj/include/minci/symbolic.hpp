#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "minci/integrals.hpp"

namespace minci {

/// Joint eigenvalues of L^2, S^2 and parity, written as a term symbol.
struct SymmetryLabel {
  int L = 0;
  int two_S = 0; // 2S, so that half-integral spins stay integral
  int parity = 1;

  int multiplicity() const { return two_S + 1; }
  int degeneracy() const { return (two_S + 1) * (2 * L + 1); }

  /// "²P°" style rendering.
  std::string term() const;
  /// "2Po" style rendering: multiplicity, L letter, trailing 'o' for odd parity.
  std::string ascii() const;
  /// Inverse of ascii(); throws std::invalid_argument.
  static SymmetryLabel parse(std::string_view ascii);

  friend auto operator<=>(const SymmetryLabel &, const SymmetryLabel &) = default;
};

/// Rational number, optionally times sqrt(2) or sqrt(3).
struct Coefficient {
  Rational value{0};
  int radicand = 1;

  double to_double() const;
  std::string to_string() const;
  friend bool operator==(const Coefficient &, const Coefficient &) = default;
};

struct SymbolicTerm {
  Coefficient coefficient;
  IntegralSymbol symbol;
  friend bool operator==(const SymbolicTerm &, const SymbolicTerm &) = default;
};

/// Linear combination of integral symbols.
class SymbolicEnergy {
public:
  SymbolicEnergy() = default;
  explicit SymbolicEnergy(std::vector<SymbolicTerm> terms);

  /// Parses the table notation, e.g. "2(1|1) + (2|2) - (12|21)" or
  /// "√3(23|32)". Repeated symbols are merged. Throws std::invalid_argument.
  static SymbolicEnergy parse(std::string_view text);

  const std::vector<SymbolicTerm> &terms() const { return terms_; }

  /// Coefficient of one symbol (zero if absent).
  Coefficient coefficient(IntegralSymbol s) const;
  bool uses(IntegralSymbol s) const;
  bool has_radicals() const;

  double evaluate(const IntegralSet &ints) const;

  /// Exact value when every coefficient is rational and the integrals are
  /// given as exact rationals; throws std::logic_error on radicals.
  Rational evaluate_exact(const std::array<Rational, symbol_count> &values) const;

  std::string to_string() const;

  friend bool operator==(const SymbolicEnergy &, const SymbolicEnergy &) = default;

private:
  std::vector<SymbolicTerm> terms_; // sorted by symbol, no zero coefficients
};

} // namespace minci
