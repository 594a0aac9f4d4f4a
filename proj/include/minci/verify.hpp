#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minci/blocks.hpp"
#include "minci/integrals.hpp"

namespace minci {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail; // empty when ok
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  int failures() const;
};

enum class VerifyLevel { quick, full };

/// Exact PT coefficients against the published rationals, and pt_integrals
/// against compute_integrals at equal parameters.
std::vector<CheckResult> check_pt_column();

/// Every block of atom N against the determinant basis at one parameter set:
/// basis states are orthonormal eigenvectors of L^2, S^2, parity with L_3 = 0
/// and maximal S_3; block matrix entries equal the projected Hamiltonian;
/// block eigenvalues and labels appear in the labelled full spectrum; and the
/// blocks account for the whole spectrum with its degeneracies. One result
/// per block plus one for coverage. `tag` is appended to check names.
std::vector<CheckResult> check_atom_blocks(int electrons, const IntegralSet &ints,
                                           const BlockCatalog &catalog, const std::string &tag);

/// Closed-form integrals against quadrature for `samples` random parameter
/// sets, relative tolerance 1e-8. One result per symbol.
std::vector<CheckResult> check_quadrature(int samples, std::uint64_t seed);

/// quick: PT column, space dimensions, every atom's blocks at PT parameters.
/// full: additionally 5 random parameter settings per atom and 20 random
/// quadrature samples.
VerifyReport run_verification(VerifyLevel level, const BlockCatalog &catalog = default_catalog(),
                              std::uint64_t seed = 7919);

} // namespace minci
