#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "minci/integrals.hpp"
#include "minci/optimize.hpp"
#include "minci/parallel.hpp"
#include "minci/spectra.hpp"
#include "minci/verify.hpp"
#include "output.hpp"

namespace minci::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int atom_arg(const std::string &text) {
  try {
    return parse_atom(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

SymmetryLabel term_arg(const std::string &text) {
  try {
    return SymmetryLabel::parse(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

double positive(double z, const char *what) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw UsageError(std::string(what) + " must be positive");
  }
  return z;
}

// "a:b" (unit step), "a:b:step" or a single value.
std::vector<double> range_arg(const std::string &text) {
  std::vector<double> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    const std::string piece = text.substr(start, colon == std::string::npos ? colon : colon - start);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (piece.empty() || used != piece.size() || !std::isfinite(v)) {
      throw UsageError("bad range '" + text + "'; expected a:b or a:b:step");
    }
    parts.push_back(v);
    if (colon == std::string::npos) {
      break;
    }
    start = colon + 1;
  }
  if (parts.size() == 1) {
    return parts;
  }
  const double from = parts[0], to = parts[1], step = parts.size() == 3 ? parts[2] : 1.0;
  if (parts.size() > 3 || !(step > 0.0) || to < from) {
    throw UsageError("bad range '" + text + "'; expected a:b or a:b:step with a <= b, step > 0");
  }
  const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
  if (count > 100000) {
    throw UsageError("range '" + text + "' has too many points");
  }
  std::vector<double> out;
  for (long i = 0; i < count; ++i) {
    out.push_back(from + static_cast<double>(i) * step);
  }
  return out;
}

std::vector<int> atom_range_arg(const std::string &text) {
  std::vector<int> out;
  for (double v : range_arg(text)) {
    if (v != std::round(v) || v < 1 || v > 10) {
      throw UsageError("electron counts must be integers in 1..10, got '" + text + "'");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string term_text(const SymmetryLabel &l, OutputFormat f) {
  return f == OutputFormat::table ? l.term() : l.ascii();
}

struct Common {
  std::string format = "table";
  bool ev = false;

  OutputFormat fmt() const { return parse_format(format); }
  double unit() const { return ev ? hartree_ev : 1.0; }
  Cell energy(double e) const { return e * unit(); }
  Cell energy(const std::optional<double> &e) const {
    return e ? Cell(*e * unit()) : Cell(std::monostate{});
  }
};

void add_format(CLI::App *app, Common &c, bool with_ev) {
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  if (with_ev) {
    app->add_flag("--ev", c.ev, "Report energies in eV instead of hartree");
  }
}

int cmd_solve(const std::string &atom, const std::optional<double> &charge, const Common &c,
              std::ostream &out) {
  const int n = atom_arg(atom);
  const double z = charge ? positive(*charge, "--charge") : n;
  const OutputFormat f = c.fmt();
  const bool neutral = std::abs(z - n) < 1e-12;
  const AtomSpectrum s = atom_spectrum(n, z);

  Table t;
  t.columns = {{"term"}, {"E_CI"}, {"Z1"}, {"Z2"}, {"Z3"}, {"c"}, {"dE_CI"}, {"E_PT"}};
  if (neutral) {
    t.columns.insert(t.columns.end(), {{"E_exp"}, {"E_MDHF"}});
  }
  if (f != OutputFormat::table) {
    t.columns.push_back({"root"});
    if (neutral) {
      t.columns.push_back({"exp_tentative", -1});
    }
  }
  for (const EnergyLevel &l : s.levels) {
    auto param = [&](bool active, double v) { return active ? Cell(v) : Cell(std::monostate{}); };
    std::vector<Cell> row{term_text(l.term, f),
                          c.energy(l.energy_ci),
                          param(l.active[0], l.params.z1),
                          param(l.active[1], l.params.z2),
                          param(l.active[2], l.params.z3),
                          number(l.mixing),
                          c.energy(l.gap),
                          c.energy(l.energy_pt)};
    if (neutral) {
      if (f == OutputFormat::table && l.energy_exp && l.exp_tentative) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "(%.4f)", *l.energy_exp * c.unit());
        row.emplace_back(std::string(buf));
      } else {
        row.push_back(c.energy(l.energy_exp));
      }
      row.push_back(c.energy(l.energy_mdhf));
    }
    if (f != OutputFormat::table) {
      row.emplace_back(std::string(l.root == Root::lower ? "lower" : "upper"));
      if (neutral) {
        row.emplace_back(l.exp_tentative ? 1.0 : 0.0);
      }
    }
    t.rows.push_back(std::move(row));
  }
  out << render(t, f);
  return exit_ok;
}

struct ScanArgs {
  std::optional<int> electrons;
  std::optional<std::string> charges;
  std::optional<std::string> terms;
  std::optional<std::string> ground;
  std::optional<std::string> z_eq_n;
  bool ionization = false;
};

int cmd_scan(const ScanArgs &a, const Common &c, std::ostream &out) {
  const OutputFormat f = c.fmt();
  Table t;

  if (a.ground) {
    if (a.electrons || a.charges || a.terms || a.ionization || a.z_eq_n) {
      throw UsageError("--ground takes no other scan options");
    }
    const std::vector<int> atoms = atom_range_arg(*a.ground);
    const auto spectra = parallel_map(atoms, [](int n) { return atom_spectrum(n, n); });
    t.columns = {{"N", -1}, {"atom"}, {"term"}, {"E_CI"}};
    for (const AtomSpectrum &s : spectra) {
      t.rows.push_back({static_cast<double>(s.electrons), std::string(element_symbol(s.electrons)),
                        term_text(s.ground().term, f), c.energy(s.ground().energy_ci)});
    }
    out << render(t, f);
    return exit_ok;
  }

  if (a.ionization) {
    if (a.terms) {
      throw UsageError("--ionization does not take --terms");
    }
    if (a.z_eq_n) {
      if (a.electrons || a.charges) {
        throw UsageError("--z-eq-n excludes --n and --z");
      }
      const std::vector<int> atoms = atom_range_arg(*a.z_eq_n);
      const auto values = parallel_map(atoms, [](int n) { return ionization_energy(n, n); });
      const ReferenceData &ref = reference_data();
      t.columns = {{"N", -1}, {"atom"}, {"I"}, {"I_exp"}};
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        const auto it = ref.ionization_experiment.find(atoms[i]);
        t.rows.push_back({static_cast<double>(atoms[i]), std::string(element_symbol(atoms[i])),
                          c.energy(values[i]),
                          it == ref.ionization_experiment.end() ? Cell(std::monostate{})
                                                                : c.energy(it->second)});
      }
      out << render(t, f);
      return exit_ok;
    }
    if (!a.electrons || !a.charges) {
      throw UsageError("--ionization needs --z-eq-n a:b, or --n and --z");
    }
    const int n = *a.electrons;
    if (n < 1 || n > 10) {
      throw UsageError("--n must be in 1..10");
    }
    std::vector<double> zs = range_arg(*a.charges);
    for (double z : zs) {
      positive(z, "--z");
    }
    const auto values = parallel_map(zs, [n](double z) { return ionization_energy(n, z); });
    t.columns = {{"Z", -1}, {"I"}};
    for (std::size_t i = 0; i < zs.size(); ++i) {
      t.rows.push_back({zs[i], c.energy(values[i])});
    }
    out << render(t, f);
    return exit_ok;
  }

  if (a.z_eq_n) {
    throw UsageError("--z-eq-n is only used with --ionization");
  }
  if (!a.electrons || !a.charges || !a.terms) {
    throw UsageError("a term scan needs --n, --z and --terms");
  }
  const int n = *a.electrons;
  if (n < 3 || n > 10) {
    throw UsageError("term scans need --n in 3..10");
  }
  std::vector<SymmetryLabel> labels;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = a.terms->find(',', start);
    labels.push_back(term_arg(
        a.terms->substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  if (labels.size() > 2) {
    throw UsageError("--terms takes one or two terms");
  }
  std::vector<const SymmetryBlock *> blocks;
  for (const SymmetryLabel &l : labels) {
    try {
      blocks.push_back(&default_catalog().find(n, l));
    } catch (const std::invalid_argument &) {
      throw UsageError("term " + l.ascii() + " does not occur for " +
                       std::string(element_symbol(n)));
    }
  }
  const std::vector<double> zs = range_arg(*a.charges);
  for (double z : zs) {
    positive(z, "--z");
  }

  if (labels.size() == 1) {
    const auto values = parallel_map(
        zs, [&](double z) { return optimize_subspace(n, z, *blocks[0]).energy(); });
    t.columns = {{"Z", -1}, {"E_" + labels[0].ascii()}};
    for (std::size_t i = 0; i < zs.size(); ++i) {
      t.rows.push_back({zs[i], c.energy(values[i])});
    }
  } else {
    const auto points = isoelectronic_scan(n, zs, labels[0], labels[1]);
    t.columns = {{"Z", -1}, {"E_" + labels[0].ascii()}, {"E_" + labels[1].ascii()}, {"dE"}};
    for (const ScanPoint &p : points) {
      t.rows.push_back({p.nuclear_charge, c.energy(p.first), c.energy(p.second),
                        c.energy(p.difference())});
    }
  }
  out << render(t, f);
  return exit_ok;
}

int cmd_verify(const std::string &level, const Common &c, const BlockCatalog &catalog,
               std::ostream &out) {
  const OutputFormat f = c.fmt();
  const VerifyReport report =
      run_verification(level == "full" ? VerifyLevel::full : VerifyLevel::quick, catalog);
  Table t;
  t.columns = {{"status"}, {"check"}, {"detail"}};
  for (const CheckResult &r : report.checks) {
    t.rows.push_back({std::string(r.ok ? "OK" : "FAIL"), r.name,
                      r.detail.empty() ? Cell(std::monostate{}) : Cell(r.detail)});
  }
  out << render(t, f);
  if (f == OutputFormat::table) {
    out << report.checks.size() << " checks, " << report.failures() << " failed\n";
  }
  return report.ok() ? exit_ok : exit_failure;
}

struct IntegralArgs {
  double charge = 0.0;
  std::optional<double> z1, z2, z3;
  bool pt = false;
};

int cmd_integrals(const IntegralArgs &a, const Common &c, std::ostream &out) {
  const OutputFormat f = c.fmt();
  const double z = positive(a.charge, "--z");
  Table t;
  if (a.pt) {
    const IntegralSet ints = pt_integrals(z);
    if (f == OutputFormat::table) {
      for (IntegralSymbol s : all_symbols) {
        char value[32];
        std::snprintf(value, sizeof value, "%.12g", ints[s]);
        out << notation(s) << " = " << pt_coefficients()[index_of(s)].str() << " · "
            << (is_one_body(s) ? "Z²" : "Z") << " = " << value << "\n";
      }
      return exit_ok;
    }
    t.columns = {{"symbol"}, {"coefficient"}, {"power", -1}, {"value", -1}};
    for (IntegralSymbol s : all_symbols) {
      t.rows.push_back({std::string(notation(s)), pt_coefficients()[index_of(s)].str(),
                        is_one_body(s) ? 2.0 : 1.0, ints[s]});
    }
  } else {
    const DilationParams p{positive(a.z1.value_or(z), "--z1"), positive(a.z2.value_or(z), "--z2"),
                           positive(a.z3.value_or(z), "--z3")};
    const IntegralSet ints = compute_integrals(z, p);
    t.columns = {{"symbol"}, {"value", -1}};
    for (IntegralSymbol s : all_symbols) {
      t.rows.push_back({std::string(notation(s)), ints[s]});
    }
  }
  out << render(t, f);
  return exit_ok;
}

int cmd_blocks(const std::string &atom, const Common &c, std::ostream &out) {
  const OutputFormat f = c.fmt();
  const int n = atom_arg(atom);
  if (n < 3) {
    throw UsageError(std::string(element_symbol(n)) +
                     " has no symmetry blocks; its energy is a closed form");
  }
  Table t;
  t.columns = {{"term"}, {"dim", -1}, {"entry"}, {"basis"}, {"expression"}};
  for (const SymmetryBlock &b : blocks_for(n)) {
    const double dim = b.dimension();
    for (int i = 0; i < b.dimension(); ++i) {
      const std::string entry = i == 0 ? "H11" : "H22";
      t.rows.push_back({term_text(b.label, f), dim, entry,
                        b.basis[static_cast<std::size_t>(i)].to_string(),
                        b.diagonal[static_cast<std::size_t>(i)].to_string()});
    }
    if (b.dimension() == 2) {
      t.rows.push_back({term_text(b.label, f), dim, std::string("H12"), std::monostate{},
                        b.cross ? b.cross->to_string() : std::string("0")});
    }
  }
  out << render(t, f);
  return exit_ok;
}

int cmd_export(const std::optional<std::string> &path, std::ostream &out, std::ostream &err) {
  if (!path) {
    out << reference_data_text();
    return exit_ok;
  }
  std::ofstream file(*path, std::ios::binary);
  file << reference_data_text();
  if (!file) {
    err << "error: cannot write " << *path << "\n";
    return exit_failure;
  }
  return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
            const BlockCatalog &catalog) {
  CLI::App app{"Minimal configuration-interaction solver for the atoms H to Ne", "minci"};
  app.require_subcommand(1);

  Common solve_c, scan_c, verify_c, ints_c, blocks_c;

  std::string solve_atom;
  std::optional<double> charge;
  CLI::App *solve = app.add_subcommand("solve", "Optimized energy levels of one atom or ion");
  solve->add_option("atom", solve_atom, "Element symbol or electron count 1..10")->required();
  solve->add_option("--charge", charge, "Nuclear charge Z (default: neutral atom)");
  add_format(solve, solve_c, true);

  ScanArgs scan_args;
  CLI::App *scan = app.add_subcommand("scan", "Energies along isoelectronic sequences");
  scan->add_option("--n", scan_args.electrons, "Electron count");
  scan->add_option("--z", scan_args.charges, "Nuclear charges a:b[:step]");
  scan->add_option("--terms", scan_args.terms, "One or two terms, e.g. 3So,1Do");
  scan->add_option("--ground", scan_args.ground, "Ground energies of neutral atoms a:b");
  scan->add_flag("--ionization", scan_args.ionization, "Ionization energies");
  scan->add_option("--z-eq-n", scan_args.z_eq_n, "Neutral atoms a:b for --ionization");
  add_format(scan, scan_c, true);

  std::string level;
  CLI::App *verify = app.add_subcommand("verify", "Check blocks and integrals against the oracles");
  verify->add_option("level", level, "quick or full")
      ->required()
      ->check(CLI::IsMember({"quick", "full"}));
  add_format(verify, verify_c, false);

  IntegralArgs int_args;
  CLI::App *integrals = app.add_subcommand("integrals", "The fourteen canonical integrals");
  integrals->add_option("--z", int_args.charge, "Nuclear charge")->required();
  CLI::Option *z1 = integrals->add_option("--z1", int_args.z1, "1s parameter (default Z)");
  CLI::Option *z2 = integrals->add_option("--z2", int_args.z2, "2s parameter (default Z)");
  CLI::Option *z3 = integrals->add_option("--z3", int_args.z3, "2p parameter (default Z)");
  integrals->add_flag("--pt", int_args.pt, "Exact values at Z1 = Z2 = Z3 = Z")
      ->excludes(z1)
      ->excludes(z2)
      ->excludes(z3);
  add_format(integrals, ints_c, false);

  std::string blocks_atom;
  CLI::App *blocks = app.add_subcommand("blocks", "Symbolic block matrices of one atom");
  blocks->add_option("atom", blocks_atom, "Element symbol or electron count 3..10")->required();
  add_format(blocks, blocks_c, false);

  std::optional<std::string> export_path;
  CLI::App *export_data =
      app.add_subcommand("export-data", "Write the embedded reference dataset");
  export_data->add_option("--output", export_path, "File to write (default: standard output)");

  std::vector<std::string> argv_store{"minci"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const std::string &s : argv_store) {
    argv.push_back(s.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(solve_atom, charge, solve_c, out);
    }
    if (scan->parsed()) {
      return cmd_scan(scan_args, scan_c, out);
    }
    if (verify->parsed()) {
      return cmd_verify(level, verify_c, catalog, out);
    }
    if (integrals->parsed()) {
      return cmd_integrals(int_args, ints_c, out);
    }
    if (blocks->parsed()) {
      return cmd_blocks(blocks_atom, blocks_c, out);
    }
    if (export_data->parsed()) {
      return cmd_export(export_path, out, err);
    }
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

} // namespace minci::cli
