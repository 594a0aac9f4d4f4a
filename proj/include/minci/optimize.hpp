#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minci/blocks.hpp"
#include "minci/orbitals.hpp"
#include "minci/symbolic.hpp"

namespace minci {

struct OptimizationResult {
  int electrons = 0;
  double nuclear_charge = 0.0;
  SymmetryLabel label;
  /// Optimal parameters. Entries whose active flag is false do not enter the
  /// block's energy; they hold Z1 as a placeholder.
  DilationParams params;
  std::array<bool, 3> active{true, false, false};
  /// All roots of the block at params, ascending.
  std::vector<BlockEigenpair> levels;
  bool converged = false;
  int iterations = 0;
  double gradient_norm = 0.0; // central differences, step 1e-5
  double step_norm = 0.0;     // last polish step

  double energy() const { return levels.front().energy; }
};

/// Raised when the iteration cap is hit; carries the best point found.
class OptimizationError : public std::runtime_error {
public:
  OptimizationError(const std::string &what, OptimizationResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const OptimizationResult &best() const { return best_; }

private:
  OptimizationResult best_;
};

/// Raised when the minimizer runs into the box (0.01, 20 Z) on any active parameter.
class BoundaryError : public OptimizationError {
public:
  using OptimizationError::OptimizationError;
};

struct OptimizerOptions {
  int max_iterations = 4000;
  /// Optional explicit start (active entries only are used); otherwise the
  /// screening guess (Z - 0.3, Z - 2, Z - 2.5) and a second start at (Z, Z, Z).
  std::optional<DilationParams> start;
};

/// Minimizes the lowest eigenvalue of the block over its active parameters
/// (Z1 always, Z2 if the 2s orbital occurs, Z3 if 2p occurs) and evaluates
/// every root of the block at the minimizer.
OptimizationResult optimize_subspace(int electrons, double nuclear_charge,
                                     const SymmetryBlock &block,
                                     const OptimizerOptions &options = {});

/// One or two electrons in the 1s shell: E = -Z^2/2 (N = 1) and
/// E = -(Z - 5/16)^2 at Z1 = Z - 5/16 (N = 2).
OptimizationResult optimize_small_atom(int electrons, double nuclear_charge);

struct VirialSplit {
  double kinetic = 0.0;
  double potential = 0.0;
  double ratio() const { return potential / kinetic; }
};

/// Kinetic and potential energy of one root of the block. Every integral is
/// homogeneous under params -> lambda params (kinetic parts of degree 2, the
/// rest of degree 1), so the block matrix splits exactly as
/// H(lambda) = lambda^2 T + lambda V with T = (H(2) - 2 H(1)) / 2.
/// T and V are then taken in the root's eigenvector of H(1).
VirialSplit virial_split(const SymmetryBlock &block, double nuclear_charge,
                         const DilationParams &params, Root root = Root::lower);

} // namespace minci
