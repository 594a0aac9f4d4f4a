#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "minci/blocks.hpp"
#include "minci/integrals.hpp"
#include "minci/orbitals.hpp"
#include "minci/symbolic.hpp"

namespace minci {

enum class Spin { up = 0, down = 1 };

struct SpinOrbital {
  Orbital orbital = Orbital::s1;
  Spin spin = Spin::up;

  /// Canonical position 0..9: orbital table index first, then spin (up first).
  int index() const { return 2 * (table_index(orbital) - 1) + static_cast<int>(spin); }
  static SpinOrbital from_index(int index);
  friend bool operator==(const SpinOrbital &, const SpinOrbital &) = default;
};

constexpr int spin_orbital_count = 10;

/// Slater determinant stored in canonical order as an occupation bit mask
/// (bit i set <=> spin-orbital with index() == i occupied).
struct Determinant {
  std::uint16_t bits = 0;

  int electrons() const;
  bool occupied(int index) const { return (bits >> index) & 1U; }
  std::vector<SpinOrbital> spin_orbitals() const;
  /// Table notation, e.g. "1 1b 2 3b".
  std::string to_string() const;

  friend bool operator==(const Determinant &, const Determinant &) = default;
  friend auto operator<=>(const Determinant &, const Determinant &) = default;
};

/// A determinant with a sign relative to its canonical ordering.
struct SignedDeterminant {
  int sign = 1;
  Determinant det;
};

/// Parses table notation ("1 1b 3 3b": labels 1..5, 'b' for spin down) in the
/// given order and returns the canonical determinant with the permutation
/// sign. Throws std::invalid_argument on bad tokens or repeated entries.
SignedDeterminant parse_determinant(std::string_view text);

/// All determinants with 1s doubly occupied and N - 2 electrons among the
/// remaining eight spin-orbitals, in increasing bit order. Dimension C(8, N-2).
/// Throws std::domain_error unless 3 <= N <= 10.
std::vector<Determinant> enumerate_space(int electrons);

/// <d1|H|d2> by the Slater-Condon rules.
double slater_condon_H(const Determinant &d1, const Determinant &d2, const IntegralSet &ints);

Eigen::MatrixXd hamiltonian_matrix(const std::vector<Determinant> &space,
                                   const IntegralSet &ints);

enum class OperatorTag { H, L_squared, S_squared, L1, L2, L3, S1, S2, S3, parity };

struct OperatorMatrix {
  OperatorTag tag = OperatorTag::H;
  Eigen::MatrixXcd matrix;
};

/// Lifted one-electron operators (components of L and S, parity) and the
/// squares L^2 = sum L_k^2, S^2 = sum S_k^2 on the space of enumerate_space(N).
/// Convention on the real p orbitals: L_k p_j = i eps_{kjl} p_l, so that
/// L_3 p_1 = i p_2 and L_3 p_2 = -i p_1. OperatorTag::H is rejected here; use
/// hamiltonian_matrix.
OperatorMatrix build_operator(OperatorTag tag, int electrons);

/// Image of one determinant under a lifted one-electron operator, as a list
/// of (coefficient, canonical determinant) with duplicates merged.
std::vector<std::pair<std::complex<double>, Determinant>> apply_one_body(OperatorTag tag,
                                                                         const Determinant &d);

/// Coefficient vector of a table basis state over the given space
/// (unnormalized; integer weights times permutation signs).
Eigen::VectorXd basis_vector(const std::vector<Determinant> &space, const BasisState &state);

struct SpectrumLevel {
  SymmetryLabel label;
  double energy = 0.0;
  int degeneracy = 1;
};

/// Raised when joint eigenvalues of L^2, S^2 and parity are not within 1e-6
/// of exact quantum numbers, or an eigenspace has the wrong degeneracy.
class ConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Full diagonalization of H on the determinant space, each eigenspace
/// labelled by its (L, S, parity). Sorted by energy (then label).
std::vector<SpectrumLevel> labeled_spectrum(int electrons, const IntegralSet &ints);

} // namespace minci
