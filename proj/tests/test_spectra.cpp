#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

#include "minci/parallel.hpp"
#include "minci/spectra.hpp"

using namespace minci;

TEST_CASE("atom names") {
  CHECK(element_symbol(1) == "H");
  CHECK(element_symbol(10) == "Ne");
  CHECK(parse_atom("ne") == 10);
  CHECK(parse_atom("BE") == 4);
  CHECK(parse_atom("6") == 6);
  CHECK_THROWS_AS(parse_atom("Xx"), std::invalid_argument);
  CHECK_THROWS_AS(parse_atom("11"), std::invalid_argument);
  CHECK_THROWS_AS(parse_atom("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_atom(""), std::invalid_argument);
  CHECK_THROWS_AS(element_symbol(0), std::out_of_range);
}

TEST_CASE("embedded reference data") {
  const ReferenceData &ref = reference_data();
  std::size_t rows = 0;
  for (const auto &[n, levels] : ref.levels) {
    rows += levels.size();
  }
  CHECK(rows == 45);
  CHECK(ref.ground_terms.size() == 10);
  CHECK(ref.ground_terms.at(7).ascii() == "4So");
  CHECK(ref.ionization_model.at(10) == doctest::Approx(0.4141));
  const ReferenceLevel *be = ref.find(4, SymmetryLabel::parse("1S"), Root::upper);
  REQUIRE(be != nullptr);
  CHECK(be->exp_tentative);
  CHECK(*be->energy_exp == doctest::Approx(-14.3212));
  const ReferenceLevel *c1s = ref.find(6, SymmetryLabel::parse("1S"), Root::lower);
  REQUIRE(c1s != nullptr);
  CHECK(c1s->energy_pt == doctest::Approx(-34.1838));
  CHECK(ref.find(3, SymmetryLabel::parse("3P"), Root::lower) == nullptr);

  const auto j = nlohmann::json::parse(reference_data_text());
  CHECK(j.at("schema") == "minci-reference-data");
  CHECK(j.at("version") == 1);
}

TEST_CASE("atom spectrum") {
  const AtomSpectrum be = atom_spectrum(4, 4.0);
  REQUIRE(be.levels.size() == 6);
  CHECK(be.ground().term.ascii() == "1S");
  CHECK(be.ground().gap == 0.0);
  for (std::size_t i = 1; i < be.levels.size(); ++i) {
    CHECK(be.levels[i].energy_ci >= be.levels[i - 1].energy_ci);
    CHECK(be.levels[i].gap == doctest::Approx(be.levels[i].energy_ci - be.ground().energy_ci));
  }
  CHECK(be.ground().energy_exp.has_value());
  CHECK(be.ground().energy_pt == doctest::Approx(-13.7629).epsilon(1e-5));

  const AtomSpectrum ion = atom_spectrum(4, 5.0);
  CHECK_FALSE(ion.ground().energy_exp.has_value());

  const AtomSpectrum he = atom_spectrum(2, 2.0);
  REQUIRE(he.levels.size() == 1);
  CHECK(he.ground().energy_pt == doctest::Approx(-2.75));

  CHECK_THROWS_AS(atom_spectrum(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(atom_spectrum(3, -3.0), std::domain_error);
}

TEST_CASE("ground and ionization energies") {
  CHECK(ground_energy(0, 3.0) == 0.0);
  CHECK(ionization_energy(1, 1.0) == 0.5);
  CHECK(ionization_energy(2, 2.0) == doctest::Approx(0.84765625));
  CHECK(ionization_energy(3, 3.0) == doctest::Approx(0.1912).epsilon(1e-3));
  CHECK(ground_energy(6, 6.0) == doctest::Approx(-37.5689).epsilon(2e-6));
}

TEST_CASE("gap ratios") {
  CHECK(gap_ratio(3) == doctest::Approx(0.0635 / 7.4139).epsilon(2e-3));
  CHECK(gap_ratio(6) == doctest::Approx(0.0650 / 37.5689).epsilon(2e-3));
  CHECK_THROWS_AS(gap_ratio(10), std::domain_error);
}

TEST_CASE("isoelectronic scan") {
  const auto points = isoelectronic_scan(6, {8.0, 6.0, 7.0}, SymmetryLabel::parse("3So"),
                                         SymmetryLabel::parse("1Do"));
  REQUIRE(points.size() == 3);
  CHECK(points[0].nuclear_charge == 8.0);
  CHECK(points[1].nuclear_charge == 6.0);
  CHECK(points[1].difference() == doctest::Approx(points[1].first - points[1].second));
  CHECK_THROWS_AS(isoelectronic_scan(3, {3.0}, SymmetryLabel::parse("3So"),
                                     SymmetryLabel::parse("2S")),
                  std::invalid_argument);
}

TEST_CASE("error report") {
  const ErrorReport r = error_report();
  REQUIRE(r.ground.size() == 8);
  CHECK(r.ground[0].electrons == 3);
  CHECK(r.ground[0].pt_percent == doctest::Approx(5.6).epsilon(0.02));
  CHECK(r.ground[1].ci_percent == doctest::Approx(0.6).epsilon(0.02));
  CHECK(r.ground[6].ci_percent == doctest::Approx(1.06).epsilon(0.01));
  CHECK(r.gaps.size() == 37);
}

TEST_CASE("parallel map keeps order and reports the first failure") {
  std::vector<int> in(50);
  for (int i = 0; i < 50; ++i) {
    in[static_cast<std::size_t>(i)] = i;
  }
  const auto out = parallel_map(in, [](int x) { return x * x; });
  for (int i = 0; i < 50; ++i) {
    CHECK(out[static_cast<std::size_t>(i)] == i * i);
  }
  try {
    parallel_map(in, [](int x) {
      if (x % 7 == 3) {
        throw std::runtime_error(std::to_string(x));
      }
      return x;
    });
    FAIL("expected an exception");
  } catch (const std::runtime_error &e) {
    CHECK(std::string(e.what()) == "3");
  }
  CHECK(parallel_map(std::vector<int>{}, [](int x) { return x; }).empty());
}

TEST_CASE("thread count from the environment") {
  ::setenv("MINCI_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  ::setenv("MINCI_THREADS", "junk", 1);
  CHECK(worker_count() >= 1);
  ::unsetenv("MINCI_THREADS");
}
