#include "minci/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "minci/determinant.hpp"
#include "minci/parallel.hpp"
#include "minci/quadrature.hpp"

namespace minci {

namespace {

constexpr double matrix_tolerance = 1e-10;

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

std::string format(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

const char *symbol_of(int electrons) {
  static constexpr std::array<const char *, 11> names{"",  "H", "He", "Li", "Be", "B",
                                                      "C", "N", "O",  "F",  "Ne"};
  return names[static_cast<std::size_t>(electrons)];
}

struct AtomOperators {
  std::vector<Determinant> space;
  Eigen::MatrixXd l2, s2, parity, s3;
  Eigen::MatrixXcd l3;
};

AtomOperators operators_for(int electrons) {
  AtomOperators o;
  o.space = enumerate_space(electrons);
  o.l2 = build_operator(OperatorTag::L_squared, electrons).matrix.real();
  o.s2 = build_operator(OperatorTag::S_squared, electrons).matrix.real();
  o.parity = build_operator(OperatorTag::parity, electrons).matrix.real();
  o.s3 = build_operator(OperatorTag::S3, electrons).matrix.real();
  o.l3 = build_operator(OperatorTag::L3, electrons).matrix;
  return o;
}

// Empty string when the block agrees with the determinant basis.
std::string block_problem(const SymmetryBlock &block, const AtomOperators &ops,
                          const Eigen::MatrixXd &h, const IntegralSet &ints) {
  std::vector<Eigen::VectorXd> v;
  for (const BasisState &state : block.basis) {
    Eigen::VectorXd x;
    try {
      x = basis_vector(ops.space, state);
    } catch (const std::exception &e) {
      return e.what();
    }
    if (x.norm() == 0.0) {
      return "basis state " + state.to_string() + " vanishes";
    }
    v.push_back(x / x.norm());
  }
  if (static_cast<int>(v.size()) != block.dimension()) {
    return "basis size does not match the block dimension";
  }

  const SymmetryLabel &lab = block.label;
  const double l_value = lab.L * (lab.L + 1.0);
  const double s = lab.two_S / 2.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Eigen::VectorXd &x = v[i];
    const std::string which = "basis state " + std::to_string(i + 1);
    if ((ops.l2 * x - l_value * x).norm() > matrix_tolerance) {
      return which + " is not an L^2 eigenvector with L = " + std::to_string(lab.L);
    }
    if ((ops.s2 * x - s * (s + 1.0) * x).norm() > matrix_tolerance ||
        (ops.s3 * x - s * x).norm() > matrix_tolerance) {
      return which + " does not have S = S_3 = " + format(s);
    }
    if ((ops.parity * x - lab.parity * x).norm() > matrix_tolerance) {
      return which + " has the wrong parity";
    }
    if ((ops.l3 * x.cast<std::complex<double>>()).norm() > matrix_tolerance) {
      return which + " has L_3 != 0";
    }
  }
  if (v.size() == 2 && std::abs(v[0].dot(v[1])) > matrix_tolerance) {
    return "basis states are not orthogonal";
  }

  const BlockMatrix m = evaluate_block(block, ints);
  auto entry = [&](std::size_t i, std::size_t j) { return v[i].dot(h * v[j]); };
  const std::array<std::pair<const char *, std::pair<double, double>>, 3> entries{{
      {"H11", {m.h11, entry(0, 0)}},
      {"H22", {m.h22, v.size() == 2 ? entry(1, 1) : 0.0}},
      {"H12", {m.h12, v.size() == 2 ? entry(0, 1) : 0.0}},
  }};
  for (const auto &[name, values] : entries) {
    if (!close(values.first, values.second, matrix_tolerance)) {
      return std::string("entry ") + name + ": block " + format(values.first) +
             ", determinant basis " + format(values.second);
    }
  }
  return {};
}

} // namespace

bool VerifyReport::ok() const { return failures() == 0; }

int VerifyReport::failures() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return !c.ok; }));
}

std::vector<CheckResult> check_pt_column() {
  const std::array<Rational, symbol_count> published{
      Rational(-1, 2),    Rational(-1, 8),     Rational(-1, 8),     Rational(5, 8),
      Rational(17, 81),   Rational(16, 729),   Rational(77, 512),   Rational(59, 243),
      Rational(112, 6561), Rational(83, 512),  Rational(15, 512),   Rational(501, 2560),
      Rational(447, 2560), Rational(27, 2560)};
  std::vector<CheckResult> out;
  for (IntegralSymbol s : all_symbols) {
    const Rational &got = pt_coefficients()[index_of(s)];
    const Rational &want = published[index_of(s)];
    CheckResult r{"pt " + std::string(notation(s)), got == want, {}};
    if (!r.ok) {
      r.detail = "exact coefficient " + got.str() + ", expected " + want.str();
    }
    for (int z = 1; z <= 10 && r.ok; ++z) {
      const double a = pt_integrals(z)[s];
      const double b = compute_integrals(z, DilationParams::uniform(z))[s];
      if (!close(a, b, 1e-13)) {
        r.ok = false;
        r.detail = "closed form at Z = " + std::to_string(z) + " gives " + format(b) +
                   ", exact value " + format(a);
      }
    }
    out.push_back(r);
  }
  return out;
}

std::vector<CheckResult> check_atom_blocks(int electrons, const IntegralSet &ints,
                                           const BlockCatalog &catalog, const std::string &tag) {
  const AtomOperators ops = operators_for(electrons);
  const Eigen::MatrixXd h = hamiltonian_matrix(ops.space, ints);
  const std::string atom = std::string(symbol_of(electrons)) + " ";

  std::vector<SpectrumLevel> spectrum;
  std::string spectrum_error;
  try {
    spectrum = labeled_spectrum(electrons, ints);
  } catch (const ConsistencyError &e) {
    spectrum_error = e.what();
  }
  std::vector<bool> used(spectrum.size(), false);

  std::vector<CheckResult> out;
  int covered = 0;
  for (const SymmetryBlock &block : catalog.blocks(electrons)) {
    CheckResult r{atom + block.label.ascii() + " " + tag, true, {}};
    r.detail = block_problem(block, ops, h, ints);
    if (r.detail.empty() && spectrum_error.empty()) {
      for (const BlockEigenpair &pair : solve_block(evaluate_block(block, ints))) {
        std::size_t best = spectrum.size();
        for (std::size_t k = 0; k < spectrum.size(); ++k) {
          if (!used[k] && spectrum[k].label == block.label &&
              close(spectrum[k].energy, pair.energy, matrix_tolerance) &&
              (best == spectrum.size() || std::abs(spectrum[k].energy - pair.energy) <
                                              std::abs(spectrum[best].energy - pair.energy))) {
            best = k;
          }
        }
        if (best == spectrum.size()) {
          r.detail = "eigenvalue " + format(pair.energy) + " not found among the " +
                     block.label.ascii() + " levels of the determinant basis";
          break;
        }
        used[best] = true;
        covered += spectrum[best].degeneracy;
      }
    }
    r.ok = r.detail.empty();
    out.push_back(r);
  }

  CheckResult coverage{atom + "spectrum " + tag, true, {}};
  if (!spectrum_error.empty()) {
    coverage.detail = spectrum_error;
  } else {
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
      if (!used[k]) {
        coverage.detail = "level " + spectrum[k].label.ascii() + " at " +
                          format(spectrum[k].energy) + " is not produced by any block";
        break;
      }
    }
    if (coverage.detail.empty() && covered != static_cast<int>(ops.space.size())) {
      coverage.detail = "blocks account for " + std::to_string(covered) + " of " +
                        std::to_string(ops.space.size()) + " states";
    }
  }
  coverage.ok = coverage.detail.empty();
  out.push_back(coverage);
  return out;
}

std::vector<CheckResult> check_quadrature(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  struct Sample {
    double charge;
    DilationParams params;
  };
  std::vector<Sample> draws;
  for (int i = 0; i < samples; ++i) {
    const double z = 1.0 + 9.0 * unit(rng);
    const double z1 = z * (0.5 + 0.7 * unit(rng));
    const double z2 = z * (0.25 + 0.75 * unit(rng));
    const double z3 = z * (0.25 + 0.75 * unit(rng));
    draws.push_back({z, {z1, z2, z3}});
  }
  // worst relative error per symbol, and where it occurred
  const auto errors = parallel_map(draws, [](const Sample &s) {
    std::array<double, symbol_count> rel{};
    const IntegralSet closed = compute_integrals(s.charge, s.params);
    for (IntegralSymbol sym : all_symbols) {
      const double q = quadrature_symbol(sym, s.charge, s.params);
      rel[index_of(sym)] = std::abs(closed[sym] - q) / std::max(std::abs(q), 1e-300);
    }
    return rel;
  });

  std::vector<CheckResult> out;
  for (IntegralSymbol sym : all_symbols) {
    double worst = 0.0;
    std::size_t at = 0;
    for (std::size_t i = 0; i < errors.size(); ++i) {
      if (errors[i][index_of(sym)] > worst) {
        worst = errors[i][index_of(sym)];
        at = i;
      }
    }
    CheckResult r{"quadrature " + std::string(notation(sym)) + " x" + std::to_string(samples),
                  worst <= 1e-8, {}};
    if (!r.ok) {
      const Sample &s = draws[at];
      r.detail = "relative error " + format(worst) + " at Z = " + format(s.charge) +
                 ", (Z1, Z2, Z3) = (" + format(s.params.z1) + ", " + format(s.params.z2) +
                 ", " + format(s.params.z3) + ")";
    }
    out.push_back(r);
  }
  return out;
}

VerifyReport run_verification(VerifyLevel level, const BlockCatalog &catalog, std::uint64_t seed) {
  VerifyReport report;
  auto append = [&](std::vector<CheckResult> more) {
    report.checks.insert(report.checks.end(), more.begin(), more.end());
  };
  append(check_pt_column());

  constexpr std::array<std::size_t, 8> dimensions{8, 28, 56, 70, 56, 28, 8, 1};
  for (int n = 3; n <= 10; ++n) {
    const std::size_t got = enumerate_space(n).size();
    const std::size_t want = dimensions[static_cast<std::size_t>(n - 3)];
    CheckResult r{std::string(symbol_of(n)) + " dimension", got == want, {}};
    if (!r.ok) {
      r.detail = std::to_string(got) + " determinants, expected " + std::to_string(want);
    }
    report.checks.push_back(r);
  }

  struct Job {
    int electrons;
    DilationParams params;
    std::string tag;
  };
  std::vector<Job> jobs;
  for (int n = 3; n <= 10; ++n) {
    jobs.push_back({n, DilationParams::uniform(n), "(PT)"});
  }
  if (level == VerifyLevel::full) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> factor(0.3, 1.3);
    for (int n = 3; n <= 10; ++n) {
      for (int k = 1; k <= 5; ++k) {
        jobs.push_back({n, {n * factor(rng), n * factor(rng), n * factor(rng)},
                        "(random " + std::to_string(k) + ")"});
      }
    }
  }
  for (auto &results : parallel_map(jobs, [&](const Job &j) {
         const IntegralSet ints = j.tag == "(PT)" ? pt_integrals(j.electrons)
                                                  : compute_integrals(j.electrons, j.params);
         return check_atom_blocks(j.electrons, ints, catalog, j.tag);
       })) {
    append(std::move(results));
  }

  if (level == VerifyLevel::full) {
    append(check_quadrature(20, seed + 1));
  }
  return report;
}

} // namespace minci
