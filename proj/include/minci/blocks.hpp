#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minci/integrals.hpp"
#include "minci/symbolic.hpp"

namespace minci {

/// One Slater determinant inside a symmetry-adapted basis state, written in
/// table notation: orbital labels 1..5, a trailing 'b' marks spin down,
/// e.g. {2, "1 1b 3 3b"}. The order of the entries is the order of the
/// spin-orbitals in the determinant.
struct BasisTerm {
  int weight = 1;
  std::string determinant;
};

/// Unnormalized integer combination of determinants.
struct BasisState {
  std::vector<BasisTerm> terms;
  std::string to_string() const;
};

/// 1x1 or 2x2 block of the CI Hamiltonian in one (L, S, parity) subspace,
/// restricted to maximal S_3 and L_3 = 0.
struct SymmetryBlock {
  int electrons = 0;
  SymmetryLabel label;
  std::vector<BasisState> basis;         // one per dimension
  std::vector<SymbolicEnergy> diagonal;  // <Psi_i|H|Psi_i>
  std::optional<SymbolicEnergy> cross;   // <Psi_1|H|Psi_2> for 2x2 blocks

  int dimension() const { return static_cast<int>(diagonal.size()); }
  /// Whether the 2s (resp. 2p) orbital and hence Z2 (resp. Z3) enters.
  bool uses_2s() const;
  bool uses_2p() const;
};

/// Read-only collection of blocks per electron count (3..10).
class BlockCatalog {
public:
  BlockCatalog() = default;
  explicit BlockCatalog(std::map<int, std::vector<SymmetryBlock>> blocks)
      : blocks_(std::move(blocks)) {}

  /// Throws std::domain_error unless 3 <= electrons <= 10.
  const std::vector<SymmetryBlock> &blocks(int electrons) const;

  /// Block with a given label; throws std::invalid_argument if absent.
  const SymmetryBlock &find(int electrons, const SymmetryLabel &label) const;

  /// Mutable access, for building modified catalogs in tests.
  std::vector<SymmetryBlock> &mutable_blocks(int electrons);

private:
  std::map<int, std::vector<SymmetryBlock>> blocks_;
};

/// The symmetry blocks of the minimal model for Li..Ne.
const BlockCatalog &default_catalog();

/// default_catalog().blocks(electrons).
const std::vector<SymmetryBlock> &blocks_for(int electrons);

/// Numeric block matrix (symmetric; h12 unused for 1x1).
struct BlockMatrix {
  SymmetryLabel label;
  int dimension = 1;
  double h11 = 0.0;
  double h22 = 0.0;
  double h12 = 0.0;
};

BlockMatrix evaluate_block(const SymmetryBlock &block, const IntegralSet &ints);

enum class Root { lower, upper };

struct BlockEigenpair {
  double energy = 0.0;
  /// Normalized coefficients of the block's basis states; second entry is 0
  /// for 1x1 blocks.
  std::array<double, 2> coefficients{1.0, 0.0};
  /// c = coefficients[1] / coefficients[0] for 2x2 blocks; absent for 1x1
  /// blocks and for the pure second basis state of a decoupled 2x2 block.
  std::optional<double> mixing;
  SymmetryLabel label;
  Root root = Root::lower;
};

/// Analytic eigenpairs of a 1x1 or 2x2 block, ascending in energy:
///   lambda_pm = (H11 + H22)/2 pm sqrt(((H11 - H22)/2)^2 + H12^2)
///   c_pm      = ((H22 - H11)/2 pm sqrt(((H22 - H11)/2)^2 + H12^2)) / H12
/// For H12 = 0 the basis states are returned as pure states ordered by their
/// diagonal value; the lower one is reported with c = 0.
std::vector<BlockEigenpair> solve_block(const BlockMatrix &matrix);

} // namespace minci
