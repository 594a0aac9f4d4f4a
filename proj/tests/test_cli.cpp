#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "minci/spectra.hpp"
#include "output.hpp"

using namespace minci;
using namespace minci::cli;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(std::vector<std::string> args, const BlockCatalog &catalog = default_catalog()) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err, catalog);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> words(const std::string &line) {
  std::istringstream in(line);
  std::vector<std::string> w;
  for (std::string s; in >> s;) {
    w.push_back(s);
  }
  return w;
}

std::vector<std::string> lines(const std::string &text) {
  std::istringstream in(text);
  std::vector<std::string> l;
  for (std::string s; std::getline(in, s);) {
    l.push_back(s);
  }
  return l;
}

double cell(const Table &t, std::size_t row, const std::string &column) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    if (t.columns[j].name == column) {
      return std::get<double>(t.rows.at(row).at(j));
    }
  }
  throw std::out_of_range(column);
}

} // namespace

TEST_CASE("solve prints the table rows") {
  const Run r = run({"solve", "Be"});
  CHECK(r.code == exit_ok);
  bool found = false;
  for (const std::string &l : lines(r.out)) {
    const auto w = words(l);
    if (w.size() >= 6 && w[0] == "¹S" && w[1] == "-14.5795") {
      CHECK(std::vector<std::string>(w.begin(), w.begin() + 6) ==
            std::vector<std::string>{"¹S", "-14.5795", "3.7052", "2.3669", "1.9944", "-0.3597"});
      found = true;
    }
  }
  CHECK(found);
  CHECK(r.out.find("(-14.3212)") != std::string::npos);
}

TEST_CASE("solve of an ion has no reference columns") {
  const Run r = run({"solve", "6", "--charge", "23", "--format", "csv"});
  CHECK(r.code == exit_ok);
  const Table t = parse_csv(r.out);
  CHECK(t.rows.size() == 12);
  for (const Column &c : t.columns) {
    CHECK(c.name != "E_exp");
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"solve", "Xx"}).code == exit_usage);
  CHECK(run({"solve"}).code == exit_usage);
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"solve", "Be", "--format", "xml"}).code == exit_usage);
  CHECK(run({"solve", "Be", "--charge", "-1"}).code == exit_usage);
  CHECK(run({"scan", "--n", "3", "--z", "3:5", "--terms", "3So"}).code == exit_usage);
  CHECK(run({"scan", "--n", "6", "--z", "9:6", "--terms", "3So"}).code == exit_usage);
  CHECK(run({"scan", "--n", "6", "--z", "6:9", "--terms", "3Q"}).code == exit_usage);
  CHECK(run({"scan", "--ground", "0:3"}).code == exit_usage);
  CHECK(run({"integrals", "--pt", "--z", "3", "--z1", "2"}).code == exit_usage);
  CHECK(run({"integrals", "--z", "3", "--z2", "0"}).code == exit_usage);
  CHECK(run({"blocks", "He"}).code == exit_usage);
  CHECK(run({"verify", "slow"}).code == exit_usage);
  const Run help = run({"--help"});
  CHECK(help.code == exit_ok);
  CHECK(help.out.find("solve") != std::string::npos);
}

TEST_CASE("carbon sequence scan") {
  const Run r = run({"scan", "--n", "6", "--z", "6:28", "--terms", "3So,1Do", "--format", "csv"});
  CHECK(r.code == exit_ok);
  const Table t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 23);
  CHECK(t.columns.size() == 4);
  CHECK(t.columns[1].name == "E_3So");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(cell(t, i, "Z") == 6.0 + static_cast<double>(i));
    // columns carry 12 significant digits
    CHECK(std::abs(cell(t, i, "dE") - (cell(t, i, "E_3So") - cell(t, i, "E_1Do"))) < 1e-8);
  }
  // the 1Do level lies below 3So for the neutral atom and above it at Z = 28
  CHECK(cell(t, 0, "dE") > 0.0);
  CHECK(cell(t, 22, "dE") < 0.0);
}

TEST_CASE("single-term, ground and ionization scans") {
  const Run single = run({"scan", "--n", "4", "--z", "4:5:0.5", "--terms", "1S", "--format", "csv"});
  CHECK(single.code == exit_ok);
  const Table s = parse_csv(single.out);
  REQUIRE(s.rows.size() == 3);
  CHECK(cell(s, 0, "E_1S") == doctest::Approx(-14.5795).epsilon(4e-6));

  const Table g = parse_csv(run({"scan", "--ground", "3:10", "--format", "csv"}).out);
  REQUIRE(g.rows.size() == 8);
  const ReferenceData &ref = reference_data();
  for (std::size_t i = 0; i < 8; ++i) {
    const int n = static_cast<int>(i) + 3;
    const std::string term = std::get<std::string>(g.rows[i][2]);
    CHECK(term == ref.ground_terms.at(n).ascii());
    const ReferenceLevel *row = ref.find(n, ref.ground_terms.at(n), Root::lower);
    CHECK(std::abs(cell(g, i, "E_CI") - row->energy_ci) <= 5e-4);
  }

  const Table ion = parse_csv(run({"scan", "--ionization", "--z-eq-n", "1:10", "--format", "csv"}).out);
  REQUIRE(ion.rows.size() == 10);
  CHECK(cell(ion, 0, "I") == 0.5);
  CHECK(cell(ion, 1, "I") == doctest::Approx(0.84765625));

  const Table along = parse_csv(run({"scan", "--ionization", "--n", "3", "--z", "3:4", "--format", "csv"}).out);
  CHECK(along.rows.size() == 2);
}

TEST_CASE("energies in eV") {
  const Table h = parse_csv(run({"scan", "--n", "3", "--z", "3", "--terms", "2S", "--format", "csv"}).out);
  const Table e = parse_csv(run({"scan", "--n", "3", "--z", "3", "--terms", "2S", "--format", "csv", "--ev"}).out);
  CHECK(cell(e, 0, "E_2S") == doctest::Approx(cell(h, 0, "E_2S") * hartree_ev).epsilon(1e-11));
  CHECK(cell(e, 0, "Z") == 3.0);
}

TEST_CASE("verify exit codes") {
  const Run ok = run({"verify", "quick"});
  CHECK(ok.code == exit_ok);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  std::map<int, std::vector<SymmetryBlock>> blocks;
  for (int n = 3; n <= 10; ++n) {
    blocks[n] = blocks_for(n);
  }
  BlockCatalog bad(blocks);
  SymmetryBlock &b = bad.mutable_blocks(5).front();
  b.diagonal[0] = SymbolicEnergy::parse(b.diagonal[0].to_string() + " + (11|11)");
  const Run broken = run({"verify", "quick"}, bad);
  CHECK(broken.code == exit_failure);
  bool named = false;
  for (const std::string &l : lines(broken.out)) {
    const auto w = words(l);
    named = named || (w.size() >= 4 && w[0] == "FAIL" && w[1] == "B" && w[2] == b.label.ascii() &&
                      w[3] == "(PT)");
  }
  CHECK(named);
}

TEST_CASE("integral dumps") {
  const Run pt = run({"integrals", "--pt", "--z", "3"});
  CHECK(pt.code == exit_ok);
  CHECK(pt.out.find("(12|21) = 16/729 · Z = 0.0658436") != std::string::npos);
  CHECK(pt.out.find("(1|1) = -1/2 · Z² = -4.5") != std::string::npos);

  const Table a = parse_csv(run({"integrals", "--pt", "--z", "3", "--format", "csv"}).out);
  const Table b =
      parse_csv(run({"integrals", "--z", "3", "--z1", "3", "--z2", "3", "--z3", "3", "--format", "csv"}).out);
  REQUIRE(a.rows.size() == 14);
  REQUIRE(b.rows.size() == 14);
  for (std::size_t i = 0; i < 14; ++i) {
    CHECK(cell(a, i, "value") == doctest::Approx(cell(b, i, "value")).epsilon(1e-11));
  }

  const Table f = parse_csv(
      run({"integrals", "--z", "9", "--z1", "8.7112", "--z2", "6.3576", "--z3", "5.0587", "--format", "csv"}).out);
  REQUIRE(f.rows.size() == 14);
  const IntegralSet ints = compute_integrals(9, {8.7112, 6.3576, 5.0587});
  for (std::size_t i = 0; i < 14; ++i) {
    CHECK(cell(f, i, "value") == doctest::Approx(ints.values()[i]).epsilon(1e-11));
  }
}

TEST_CASE("blocks listing") {
  const Run r = run({"blocks", "Be", "--format", "csv"});
  CHECK(r.code == exit_ok);
  const Table t = parse_csv(r.out);
  // five blocks, one of them 2x2
  CHECK(t.rows.size() == 7);
  CHECK(r.out.find("√3(23|32)") != std::string::npos);
}

TEST_CASE("csv and json round trips") {
  const std::vector<std::vector<std::string>> commands{
      {"solve", "Be"},
      {"solve", "C", "--ev"},
      {"solve", "He"},
      {"scan", "--ionization", "--z-eq-n", "1:10"},
      {"integrals", "--pt", "--z", "3"},
      {"blocks", "O"},
      {"verify", "quick"}};
  for (std::vector<std::string> args : commands) {
    std::vector<std::string> csv = args, json = args;
    csv.insert(csv.end(), {"--format", "csv"});
    json.insert(json.end(), {"--format", "json"});
    const std::string c = run(csv).out;
    const std::string j = run(json).out;
    INFO(args.front());
    CHECK(render(parse_csv(c), OutputFormat::csv) == c);
    CHECK(render(parse_json(j), OutputFormat::json) == j);
    CHECK(render(parse_json(j), OutputFormat::csv) == c);
  }
}

TEST_CASE("csv quoting") {
  Table t;
  t.columns = {{"a"}, {"b"}, {"c"}, {"d"}};
  t.rows = {{std::string("x,y"), std::string("say \"hi\""), std::string("12"), std::monostate{}},
            {std::string(""), 1.0 / 3.0, std::string("-"), -0.0}};
  const std::string csv = render(t, OutputFormat::csv);
  CHECK(csv == "a,b,c,d\n\"x,y\",\"say \"\"hi\"\"\",\"12\",\n\"\",0.333333333333,-,-0\n");
  CHECK(render(parse_csv(csv), OutputFormat::csv) == csv);
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("a\n\"open\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_json("{}"), std::invalid_argument);
}

TEST_CASE("export-data writes the embedded dataset") {
  const Run r = run({"export-data"});
  CHECK(r.code == exit_ok);
  CHECK(r.out == std::string(reference_data_text()));

  const std::string path = "minci_export_test.json";
  CHECK(run({"export-data", "--output", path}).code == exit_ok);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == std::string(reference_data_text()));
  std::remove(path.c_str());

  CHECK(run({"export-data", "--output", "/nonexistent/dir/x.json"}).code == exit_failure);
}
