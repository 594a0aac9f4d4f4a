#include <doctest.h>

#include "minci/blocks.hpp"
#include "minci/symbolic.hpp"

using namespace minci;

TEST_CASE("term symbols") {
  const SymmetryLabel l = SymmetryLabel::parse("2Po");
  CHECK(l.L == 1);
  CHECK(l.two_S == 1);
  CHECK(l.parity == -1);
  CHECK(l.degeneracy() == 6);
  CHECK(l.ascii() == "2Po");
  CHECK(l.term() == "²P°");
  CHECK(SymmetryLabel::parse("4So").term() == "⁴S°");
  CHECK(SymmetryLabel::parse("1D").degeneracy() == 5);
  for (const char *bad : {"", "P", "2X", "2Pox", "0S", "2"}) {
    CHECK_THROWS_AS(SymmetryLabel::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("parse table notation") {
  const SymbolicEnergy e = SymbolicEnergy::parse("2(1|1) + (2|2) - (12|21) + (2|2)");
  CHECK(e.coefficient(IntegralSymbol::h11).value == 2);
  CHECK(e.coefficient(IntegralSymbol::h22).value == 2);
  CHECK(e.coefficient(IntegralSymbol::x1221).value == -1);
  CHECK_FALSE(e.uses(IntegralSymbol::c3333));
  CHECK(e.to_string() == "2(1|1) + 2(2|2) - (12|21)");

  const SymbolicEnergy r = SymbolicEnergy::parse("-√3(23|32)");
  CHECK(r.has_radicals());
  CHECK(r.coefficient(IntegralSymbol::x2332).radicand == 3);
  CHECK(r.coefficient(IntegralSymbol::x2332).to_double() == doctest::Approx(-std::sqrt(3.0)));
  CHECK(r.to_string() == "-√3(23|32)");

  CHECK(SymbolicEnergy::parse("(1|1) - (1|1)").terms().empty());
  for (const char *bad : {"(1|2)", "2(1|1) +", "x(1|1)", "(11|22"}) {
    CHECK_THROWS_AS(SymbolicEnergy::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("every catalog expression survives a print/parse round trip") {
  for (int n = 3; n <= 10; ++n) {
    for (const SymmetryBlock &b : blocks_for(n)) {
      for (const SymbolicEnergy &e : b.diagonal) {
        CHECK(SymbolicEnergy::parse(e.to_string()) == e);
      }
      if (b.cross) {
        CHECK(SymbolicEnergy::parse(b.cross->to_string()) == *b.cross);
      }
    }
  }
}

TEST_CASE("exact and floating evaluation agree") {
  const double z = 3.0;
  std::array<Rational, symbol_count> exact;
  for (IntegralSymbol s : all_symbols) {
    exact[index_of(s)] = pt_coefficients()[index_of(s)] * (is_one_body(s) ? 9 : 3);
  }
  const SymbolicEnergy li = blocks_for(3).front().diagonal.front();
  CHECK(li.evaluate_exact(exact) == Rational(-6859, 972));
  CHECK(li.evaluate(pt_integrals(z)) == doctest::Approx(-6859.0 / 972.0).epsilon(1e-15));
  CHECK_THROWS_AS(SymbolicEnergy::parse("√2(1|1)").evaluate_exact(exact), std::logic_error);
}
