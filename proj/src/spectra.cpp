#include "minci/spectra.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "minci/parallel.hpp"

namespace minci {

namespace {

constexpr std::array<std::string_view, 10> symbols{"H", "He", "Li", "Be", "B",
                                                   "C", "N",  "O",  "F",  "Ne"};

constexpr std::string_view embedded_json =
#include "reference_data.inc"
    ;

std::optional<double> opt_number(const nlohmann::json &j, const char *key) {
  if (!j.contains(key) || j.at(key).is_null()) {
    return std::nullopt;
  }
  return j.at(key).get<double>();
}

std::map<int, double> by_atom(const nlohmann::json &j) {
  std::map<int, double> out;
  for (const auto &[symbol, value] : j.items()) {
    out[parse_atom(symbol)] = value.get<double>();
  }
  return out;
}

ReferenceData load_reference() {
  const nlohmann::json j = nlohmann::json::parse(embedded_json);
  ReferenceData d;
  for (const auto &atom : j.at("atoms")) {
    const int n = atom.at("electrons").get<int>();
    for (const auto &l : atom.at("levels")) {
      ReferenceLevel r;
      r.term = SymmetryLabel::parse(l.at("term").get<std::string>());
      r.root = l.at("root").get<std::string>() == "upper" ? Root::upper : Root::lower;
      r.energy_ci = l.at("energy_ci").get<double>();
      r.z1 = opt_number(l, "z1");
      r.z2 = opt_number(l, "z2");
      r.z3 = opt_number(l, "z3");
      r.mixing = opt_number(l, "c");
      r.energy_exp = opt_number(l, "energy_exp");
      r.exp_tentative = l.at("exp_tentative").get<bool>();
      r.energy_mdhf = opt_number(l, "energy_mdhf");
      r.energy_pt = l.at("energy_pt").get<double>();
      r.gap_ci = opt_number(l, "gap_ci");
      r.gap_exp = opt_number(l, "gap_exp");
      r.gap_mdhf = opt_number(l, "gap_mdhf");
      d.levels[n].push_back(r);
    }
  }
  d.ionization_model = by_atom(j.at("ionization").at("model"));
  d.ionization_experiment = by_atom(j.at("ionization").at("experiment"));
  d.gap_ratio_experiment = by_atom(j.at("gap_ratio_experiment"));
  d.virial_ratio_pt = by_atom(j.at("virial_ratio_pt"));
  d.error_percent_pt = by_atom(j.at("ground_error_percent").at("pt"));
  d.error_percent_ci = by_atom(j.at("ground_error_percent").at("ci"));
  d.fluorine_ci_error_percent =
      j.at("fluorine_ground_error_percent").at("minimal_ci").get<double>();
  for (const auto &[symbol, term] : j.at("ground_terms").items()) {
    d.ground_terms[parse_atom(symbol)] = SymmetryLabel::parse(term.get<std::string>());
  }
  return d;
}

void check_charge(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw std::domain_error("nuclear charge must be positive");
  }
}

void check_electrons(int n) {
  if (n < 1 || n > 10) {
    throw std::domain_error("electron count must be in 1..10, got " + std::to_string(n));
  }
}

EnergyLevel make_level(const OptimizationResult &r, const BlockEigenpair &pair,
                       double energy_pt) {
  EnergyLevel l;
  l.term = pair.label;
  l.root = pair.root;
  l.energy_ci = pair.energy;
  l.params = r.params;
  l.active = r.active;
  l.mixing = pair.mixing;
  l.energy_pt = energy_pt;
  return l;
}

} // namespace

std::string_view element_symbol(int electrons) {
  if (electrons < 1 || electrons > 10) {
    throw std::out_of_range("no element symbol for " + std::to_string(electrons));
  }
  return symbols[static_cast<std::size_t>(electrons - 1)];
}

int parse_atom(std::string_view text) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    const int n = std::stoi(std::string(text));
    if (n >= 1 && n <= 10) {
      return n;
    }
    throw std::invalid_argument("electron count must be in 1..10, got " + std::string(text));
  }
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::string_view s = symbols[i];
    if (s.size() == text.size() &&
        std::equal(s.begin(), s.end(), text.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return static_cast<int>(i) + 1;
    }
  }
  throw std::invalid_argument("unknown atom '" + std::string(text) + "'");
}

const ReferenceLevel *ReferenceData::find(int electrons, const SymmetryLabel &term,
                                          Root root) const {
  const auto it = levels.find(electrons);
  if (it == levels.end()) {
    return nullptr;
  }
  for (const ReferenceLevel &l : it->second) {
    if (l.term == term && l.root == root) {
      return &l;
    }
  }
  return nullptr;
}

std::string_view reference_data_text() { return embedded_json; }

const ReferenceData &reference_data() {
  static const ReferenceData data = load_reference();
  return data;
}

AtomSpectrum atom_spectrum(int electrons, double nuclear_charge) {
  check_electrons(electrons);
  check_charge(nuclear_charge);
  AtomSpectrum s;
  s.electrons = electrons;
  s.nuclear_charge = nuclear_charge;

  if (electrons <= 2) {
    const OptimizationResult r = optimize_small_atom(electrons, nuclear_charge);
    const double z = nuclear_charge;
    const double pt = electrons == 1 ? -0.5 * z * z : -z * z + 0.625 * z;
    s.levels.push_back(make_level(r, r.levels.front(), pt));
  } else {
    const std::vector<SymmetryBlock> &blocks = blocks_for(electrons);
    const std::vector<OptimizationResult> results = parallel_map(
        blocks, [&](const SymmetryBlock &b) { return optimize_subspace(electrons, nuclear_charge, b); });
    const IntegralSet pt = pt_integrals(nuclear_charge);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto pt_pairs = solve_block(evaluate_block(blocks[i], pt));
      for (std::size_t k = 0; k < results[i].levels.size(); ++k) {
        s.levels.push_back(make_level(results[i], results[i].levels[k], pt_pairs[k].energy));
      }
    }
  }

  std::stable_sort(s.levels.begin(), s.levels.end(),
                   [](const EnergyLevel &a, const EnergyLevel &b) {
                     return a.energy_ci < b.energy_ci;
                   });
  const double ground = s.levels.front().energy_ci;
  const bool neutral = std::abs(nuclear_charge - electrons) < 1e-12;
  for (EnergyLevel &l : s.levels) {
    l.gap = l.energy_ci - ground;
    if (neutral) {
      if (const ReferenceLevel *ref = reference_data().find(electrons, l.term, l.root)) {
        l.energy_exp = ref->energy_exp;
        l.exp_tentative = ref->exp_tentative;
        l.energy_mdhf = ref->energy_mdhf;
      }
    }
  }
  return s;
}

double ground_energy(int electrons, double nuclear_charge) {
  if (electrons == 0) {
    return 0.0;
  }
  check_electrons(electrons);
  check_charge(nuclear_charge);
  if (electrons <= 2) {
    return optimize_small_atom(electrons, nuclear_charge).energy();
  }
  double best = std::numeric_limits<double>::infinity();
  for (const SymmetryBlock &b : blocks_for(electrons)) {
    best = std::min(best, optimize_subspace(electrons, nuclear_charge, b).energy());
  }
  return best;
}

double ionization_energy(int electrons, double nuclear_charge) {
  check_electrons(electrons);
  return ground_energy(electrons - 1, nuclear_charge) - ground_energy(electrons, nuclear_charge);
}

std::vector<ScanPoint> isoelectronic_scan(int electrons, const std::vector<double> &charges,
                                          const SymmetryLabel &first,
                                          const SymmetryLabel &second) {
  const SymmetryBlock &a = default_catalog().find(electrons, first);
  const SymmetryBlock &b = default_catalog().find(electrons, second);
  return parallel_map(charges, [&](double z) {
    check_charge(z);
    return ScanPoint{z, optimize_subspace(electrons, z, a).energy(),
                     optimize_subspace(electrons, z, b).energy()};
  });
}

ErrorReport error_report() {
  const ReferenceData &ref = reference_data();
  std::vector<int> atoms;
  for (int n = 3; n <= 10; ++n) {
    atoms.push_back(n);
  }
  const std::vector<AtomSpectrum> spectra =
      parallel_map(atoms, [](int n) { return atom_spectrum(n, n); });

  ErrorReport report;
  for (const AtomSpectrum &s : spectra) {
    const EnergyLevel &g = s.ground();
    const ReferenceLevel *r = ref.find(s.electrons, g.term, g.root);
    if (r != nullptr && r->energy_exp) {
      const double exp = *r->energy_exp;
      report.ground.push_back({s.electrons, g.energy_ci, g.energy_pt, exp,
                               100.0 * std::abs(g.energy_ci - exp) / std::abs(exp),
                               100.0 * std::abs(g.energy_pt - exp) / std::abs(exp)});
    }
    for (std::size_t i = 1; i < s.levels.size(); ++i) {
      const EnergyLevel &l = s.levels[i];
      GapRow row{s.electrons, l.term, l.root, l.gap, std::nullopt, false, std::nullopt};
      if (const ReferenceLevel *lr = ref.find(s.electrons, l.term, l.root)) {
        row.gap_exp = lr->gap_exp;
        row.exp_tentative = lr->exp_tentative;
        row.gap_mdhf = lr->gap_mdhf;
      }
      report.gaps.push_back(row);
    }
  }
  return report;
}

double gap_ratio(int electrons) {
  const AtomSpectrum s = atom_spectrum(electrons, electrons);
  if (s.levels.size() < 2) {
    throw std::domain_error(std::string(element_symbol(electrons)) +
                            " has a single level in the model; no gap");
  }
  return s.levels[1].gap / std::abs(s.ground().energy_ci);
}

} // namespace minci
