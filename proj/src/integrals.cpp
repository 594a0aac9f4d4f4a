#include "minci/integrals.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minci {

namespace {

constexpr std::array<std::string_view, symbol_count> symbol_text{
    "(1|1)",   "(2|2)",   "(3|3)",   "(11|11)", "(11|22)", "(12|21)", "(22|22)",
    "(11|33)", "(13|31)", "(22|33)", "(23|32)", "(33|33)", "(33|44)", "(34|43)"};

constexpr std::array<std::array<int, 4>, symbol_count> symbol_indices{{{1, 1, 0, 0},
                                                                       {2, 2, 0, 0},
                                                                       {3, 3, 0, 0},
                                                                       {1, 1, 1, 1},
                                                                       {1, 1, 2, 2},
                                                                       {1, 2, 2, 1},
                                                                       {2, 2, 2, 2},
                                                                       {1, 1, 3, 3},
                                                                       {1, 3, 3, 1},
                                                                       {2, 2, 3, 3},
                                                                       {2, 3, 3, 2},
                                                                       {3, 3, 3, 3},
                                                                       {3, 3, 4, 4},
                                                                       {3, 4, 4, 3}}};

bool is_s(Orbital o) { return angular_momentum(o) == 0; }

[[noreturn]] void non_canonical(Orbital a, Orbital b, Orbital c, Orbital d) {
  throw std::logic_error("two-body integral (" + std::to_string(table_index(a)) +
                         std::to_string(table_index(b)) + "|" +
                         std::to_string(table_index(c)) + std::to_string(table_index(d)) +
                         ") is outside the canonical set");
}

TwoBodyClass nonzero(IntegralSymbol s) { return {false, s}; }

} // namespace

std::string_view notation(IntegralSymbol s) { return symbol_text[index_of(s)]; }

std::optional<IntegralSymbol> parse_symbol(std::string_view text) {
  const auto it = std::find(symbol_text.begin(), symbol_text.end(), text);
  if (it == symbol_text.end()) {
    return std::nullopt;
  }
  return all_symbols[static_cast<std::size_t>(it - symbol_text.begin())];
}

std::array<int, 4> symbol_orbitals(IntegralSymbol s) { return symbol_indices[index_of(s)]; }

TwoBodyClass classify_two_body(Orbital a, Orbital b, Orbital c, Orbital d) {
  const std::array<Orbital, 4> idx{a, b, c, d};
  const int p_count =
      static_cast<int>(std::count_if(idx.begin(), idx.end(), [](Orbital o) { return !is_s(o); }));
  if (p_count % 2 == 1) {
    return {}; // odd under inversion
  }

  if (p_count == 0) {
    const int twos = static_cast<int>(
        std::count(idx.begin(), idx.end(), Orbital::s2));
    if (twos == 0) {
      return nonzero(IntegralSymbol::c1111);
    }
    if (twos == 4) {
      return nonzero(IntegralSymbol::c2222);
    }
    if (twos == 2) {
      if (a == b) {
        return nonzero(IntegralSymbol::c1122); // (11|22) or (22|11)
      }
      return nonzero(IntegralSymbol::x1221); // (12|12), (12|21), ...
    }
    non_canonical(a, b, c, d);
  }

  if (p_count == 2) {
    // Either both p orbitals sit in one charge distribution, or one in each.
    if (!is_s(a) && !is_s(b)) {
      if (p_axis(a) != p_axis(b)) {
        return {};
      }
      if (c != d) {
        non_canonical(a, b, c, d);
      }
      return nonzero(c == Orbital::s1 ? IntegralSymbol::c1133 : IntegralSymbol::c2233);
    }
    if (!is_s(c) && !is_s(d)) {
      return classify_two_body(c, d, a, b);
    }
    const Orbital s_left = is_s(a) ? a : b;
    const Orbital p_left = is_s(a) ? b : a;
    const Orbital s_right = is_s(c) ? c : d;
    const Orbital p_right = is_s(c) ? d : c;
    if (p_axis(p_left) != p_axis(p_right)) {
      return {};
    }
    if (s_left != s_right) {
      non_canonical(a, b, c, d);
    }
    return nonzero(s_left == Orbital::s1 ? IntegralSymbol::x1331 : IntegralSymbol::x2332);
  }

  // Four p orbitals.
  const int ja = p_axis(a), jb = p_axis(b), jc = p_axis(c), jd = p_axis(d);
  if (ja == jb && jc == jd) {
    return nonzero(ja == jc ? IntegralSymbol::c3333 : IntegralSymbol::c3344);
  }
  if (ja != jb && ((ja == jc && jb == jd) || (ja == jd && jb == jc))) {
    return nonzero(IntegralSymbol::x3443);
  }
  return {};
}

double IntegralSet::one_body(Orbital a, Orbital b) const {
  if (a != b) {
    return 0.0;
  }
  switch (a) {
  case Orbital::s1:
    return (*this)[IntegralSymbol::h11];
  case Orbital::s2:
    return (*this)[IntegralSymbol::h22];
  default:
    return (*this)[IntegralSymbol::h33];
  }
}

double IntegralSet::two_body(Orbital a, Orbital b, Orbital c, Orbital d) const {
  const TwoBodyClass cls = classify_two_body(a, b, c, d);
  return cls.zero ? 0.0 : (*this)[cls.symbol];
}

IntegralSet compute_integrals(double nuclear_charge, const DilationParams &params) {
  if (!(nuclear_charge > 0.0)) {
    throw std::domain_error("nuclear charge must be positive");
  }
  validate(params);
  return {nuclear_charge, params,
          detail::closed_form_integrals<double>(nuclear_charge, params.z1, params.z2,
                                                params.z3)};
}

const std::array<Rational, symbol_count> &pt_coefficients() {
  // Z = Z1 = Z2 = Z3 = 1 in exact arithmetic; the one-body entries are
  // homogeneous of degree two and the two-body entries of degree one.
  static const std::array<Rational, symbol_count> coefficients = [] {
    const Rational one{1};
    return detail::closed_form_integrals<Rational>(one, one, one, one);
  }();
  return coefficients;
}

IntegralSet pt_integrals(double nuclear_charge) {
  if (!(nuclear_charge > 0.0)) {
    throw std::domain_error("nuclear charge must be positive");
  }
  std::array<double, symbol_count> values{};
  for (IntegralSymbol s : all_symbols) {
    const double c = static_cast<double>(pt_coefficients()[index_of(s)]);
    values[index_of(s)] =
        is_one_body(s) ? c * nuclear_charge * nuclear_charge : c * nuclear_charge;
  }
  return {nuclear_charge, DilationParams::uniform(nuclear_charge), values};
}

} // namespace minci
