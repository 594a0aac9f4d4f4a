#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minci/blocks.hpp"
#include "minci/optimize.hpp"
#include "minci/symbolic.hpp"

namespace minci {

/// "H".."Ne" for 1..10; throws std::out_of_range otherwise.
std::string_view element_symbol(int electrons);

/// Accepts an element symbol (case-insensitive) or an electron count 1..10.
/// Throws std::invalid_argument.
int parse_atom(std::string_view text);

// ---------------------------------------------------------------------------
// Embedded reference data (data/reference_data.json)

struct ReferenceLevel {
  SymmetryLabel term;
  Root root = Root::lower;
  double energy_ci = 0.0;
  std::optional<double> z1, z2, z3, mixing;
  std::optional<double> energy_exp;
  bool exp_tentative = false; // assignment of the experimental level is tentative
  std::optional<double> energy_mdhf;
  double energy_pt = 0.0;
  std::optional<double> gap_ci, gap_exp, gap_mdhf;
};

struct ReferenceData {
  std::map<int, std::vector<ReferenceLevel>> levels; // keyed by electron count
  std::map<int, double> ionization_model;
  std::map<int, double> ionization_experiment;
  std::map<int, double> gap_ratio_experiment;
  std::map<int, double> virial_ratio_pt;
  std::map<int, double> error_percent_pt;
  std::map<int, double> error_percent_ci;
  double fluorine_ci_error_percent = 0.0;
  std::map<int, SymmetryLabel> ground_terms;

  const ReferenceLevel *find(int electrons, const SymmetryLabel &term, Root root) const;
};

/// The dataset text exactly as embedded at build time.
std::string_view reference_data_text();
const ReferenceData &reference_data();

// ---------------------------------------------------------------------------

struct EnergyLevel {
  SymmetryLabel term;
  Root root = Root::lower;
  double energy_ci = 0.0;
  DilationParams params;
  std::array<bool, 3> active{true, false, false};
  std::optional<double> mixing;
  double gap = 0.0;       // energy_ci minus the ground energy
  double energy_pt = 0.0; // same root of the block at Z1 = Z2 = Z3 = Z
  /// Reference values, attached only when Z equals N.
  std::optional<double> energy_exp;
  bool exp_tentative = false;
  std::optional<double> energy_mdhf;
};

struct AtomSpectrum {
  int electrons = 0;
  double nuclear_charge = 0.0;
  std::vector<EnergyLevel> levels; // ascending in energy_ci

  const EnergyLevel &ground() const { return levels.front(); }
};

/// Optimizes every symmetry block of the atom (or the one-shell model for
/// N = 1, 2) at nuclear charge Z. Blocks are optimized concurrently.
AtomSpectrum atom_spectrum(int electrons, double nuclear_charge);

/// Lowest optimized level; 0 for N = 0.
double ground_energy(int electrons, double nuclear_charge);

/// I(N, Z) = E1(N - 1, Z) - E1(N, Z).
double ionization_energy(int electrons, double nuclear_charge);

struct ScanPoint {
  double nuclear_charge = 0.0;
  double first = 0.0;  // optimized energy of the first term
  double second = 0.0; // optimized energy of the second term
  double difference() const { return first - second; }
};

/// Lowest optimized energies of two terms of atom N along a list of charges.
/// Throws std::invalid_argument if a term has no block for N.
std::vector<ScanPoint> isoelectronic_scan(int electrons, const std::vector<double> &charges,
                                          const SymmetryLabel &first,
                                          const SymmetryLabel &second);

struct GroundErrorRow {
  int electrons = 0;
  double energy_ci = 0.0;
  double energy_pt = 0.0;
  double energy_exp = 0.0;
  double ci_percent = 0.0; // 100 |E_CI - E_exp| / |E_exp|
  double pt_percent = 0.0;
};

struct GapRow {
  int electrons = 0;
  SymmetryLabel term;
  Root root = Root::lower;
  double gap_ci = 0.0;
  std::optional<double> gap_exp;
  bool exp_tentative = false;
  std::optional<double> gap_mdhf;
};

struct ErrorReport {
  std::vector<GroundErrorRow> ground; // Li..Ne
  std::vector<GapRow> gaps;           // every excited level with Z = N
};

ErrorReport error_report();

/// First gap of the neutral atom divided by |ground energy|.
/// Throws std::domain_error for atoms with a single level.
double gap_ratio(int electrons);

} // namespace minci
