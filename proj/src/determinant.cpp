#include "minci/determinant.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

namespace minci {

namespace {

using cplx = std::complex<double>;

int popcount_below(std::uint16_t bits, int index) {
  return std::popcount(static_cast<unsigned>(bits & ((1U << index) - 1U)));
}

// a_p |bits>; returns false if p is empty.
bool annihilate(std::uint16_t &bits, int p, int &sign) {
  if (!((bits >> p) & 1U)) {
    return false;
  }
  if (popcount_below(bits, p) % 2 != 0) {
    sign = -sign;
  }
  bits = static_cast<std::uint16_t>(bits & ~(1U << p));
  return true;
}

// a_p^dagger |bits>; returns false if p is occupied.
bool create(std::uint16_t &bits, int p, int &sign) {
  if ((bits >> p) & 1U) {
    return false;
  }
  if (popcount_below(bits, p) % 2 != 0) {
    sign = -sign;
  }
  bits = static_cast<std::uint16_t>(bits | (1U << p));
  return true;
}

Orbital orbital_of(int p) { return orbital_from_index(p / 2 + 1); }
int spin_of(int p) { return p % 2; }

std::vector<int> occupied_list(std::uint16_t bits) {
  std::vector<int> out;
  for (int p = 0; p < spin_orbital_count; ++p) {
    if ((bits >> p) & 1U) {
      out.push_back(p);
    }
  }
  return out;
}

// Spin-orbital integral [pq|rs] = (pq|rs) delta(spin p, spin q) delta(spin r, spin s).
double spin_two_body(const IntegralSet &ints, int p, int q, int r, int s) {
  if (spin_of(p) != spin_of(q) || spin_of(r) != spin_of(s)) {
    return 0.0;
  }
  return ints.two_body(orbital_of(p), orbital_of(q), orbital_of(r), orbital_of(s));
}

double spin_one_body(const IntegralSet &ints, int p, int q) {
  if (spin_of(p) != spin_of(q)) {
    return 0.0;
  }
  return ints.one_body(orbital_of(p), orbital_of(q));
}

// One-electron matrix <q|O|p> on the ten spin-orbitals.
using OneBody = std::array<std::array<cplx, spin_orbital_count>, spin_orbital_count>;

OneBody one_body_matrix(OperatorTag tag) {
  OneBody m{};
  const cplx i{0.0, 1.0};
  for (int p = 0; p < spin_orbital_count; ++p) {
    for (int q = 0; q < spin_orbital_count; ++q) {
      const Orbital op = orbital_of(p), oq = orbital_of(q);
      const int sp = spin_of(p), sq = spin_of(q);
      cplx v{};
      switch (tag) {
      case OperatorTag::L1:
      case OperatorTag::L2:
      case OperatorTag::L3: {
        if (sp != sq || angular_momentum(op) != 1 || angular_momentum(oq) != 1) {
          break;
        }
        const int k = tag == OperatorTag::L1 ? 0 : tag == OperatorTag::L2 ? 1 : 2;
        const int j = p_axis(op), l = p_axis(oq);
        // eps_{k j l}
        if (k != j && j != l && k != l) {
          const int eps = ((j - k + 3) % 3 == 1) ? 1 : -1;
          v = i * static_cast<double>(eps);
        }
        break;
      }
      case OperatorTag::S1:
      case OperatorTag::S2:
      case OperatorTag::S3: {
        if (op != oq) {
          break;
        }
        // Pauli matrices / 2 with rows q and columns p in (up, down).
        if (tag == OperatorTag::S1) {
          v = sp != sq ? 0.5 : 0.0;
        } else if (tag == OperatorTag::S2) {
          if (sq == 0 && sp == 1) {
            v = -0.5 * i;
          } else if (sq == 1 && sp == 0) {
            v = 0.5 * i;
          }
        } else if (sp == sq) {
          v = sp == 0 ? 0.5 : -0.5;
        }
        break;
      }
      default:
        throw std::invalid_argument("not a one-electron operator");
      }
      m[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = v;
    }
  }
  return m;
}

int choose(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  int r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

} // namespace

SpinOrbital SpinOrbital::from_index(int index) {
  if (index < 0 || index >= spin_orbital_count) {
    throw std::out_of_range("spin-orbital index out of range");
  }
  return {orbital_of(index), static_cast<Spin>(spin_of(index))};
}

int Determinant::electrons() const { return std::popcount(static_cast<unsigned>(bits)); }

std::vector<SpinOrbital> Determinant::spin_orbitals() const {
  std::vector<SpinOrbital> out;
  for (int p : occupied_list(bits)) {
    out.push_back(SpinOrbital::from_index(p));
  }
  return out;
}

std::string Determinant::to_string() const {
  std::string out;
  for (int p : occupied_list(bits)) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(p / 2 + 1);
    if (spin_of(p) == 1) {
      out += 'b';
    }
  }
  return out;
}

SignedDeterminant parse_determinant(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<int> order;
  while (in >> token) {
    const bool down = token.size() == 2 && token[1] == 'b';
    if (token.empty() || token[0] < '1' || token[0] > '5' || (token.size() != 1 && !down)) {
      throw std::invalid_argument("bad spin-orbital '" + token + "' in '" + std::string(text) +
                                  "'");
    }
    order.push_back(2 * (token[0] - '1') + (down ? 1 : 0));
  }
  // Build a^dagger_{o1} ... a^dagger_{on} |0>, creating from the right.
  SignedDeterminant out;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (!create(out.det.bits, *it, out.sign)) {
      throw std::invalid_argument("repeated spin-orbital in '" + std::string(text) + "'");
    }
  }
  return out;
}

std::vector<Determinant> enumerate_space(int electrons) {
  if (electrons < 3 || electrons > 10) {
    throw std::domain_error("determinant space defined for 3..10 electrons, got " +
                            std::to_string(electrons));
  }
  std::vector<Determinant> out;
  out.reserve(static_cast<std::size_t>(choose(8, electrons - 2)));
  for (unsigned rest = 0; rest < (1U << 8); ++rest) {
    if (std::popcount(rest) == electrons - 2) {
      out.push_back({static_cast<std::uint16_t>(0b11U | (rest << 2))});
    }
  }
  return out;
}

double slater_condon_H(const Determinant &d1, const Determinant &d2, const IntegralSet &ints) {
  const std::uint16_t only1 = d1.bits & ~d2.bits;
  const std::uint16_t only2 = d2.bits & ~d1.bits;
  const int diff = std::popcount(static_cast<unsigned>(only1));
  if (diff != std::popcount(static_cast<unsigned>(only2)) || diff > 2) {
    return 0.0;
  }
  const std::vector<int> occ1 = occupied_list(d1.bits);

  if (diff == 0) {
    double e = 0.0;
    for (int p : occ1) {
      e += spin_one_body(ints, p, p);
    }
    for (std::size_t a = 0; a < occ1.size(); ++a) {
      for (std::size_t b = a + 1; b < occ1.size(); ++b) {
        const int p = occ1[a], q = occ1[b];
        e += spin_two_body(ints, p, p, q, q) - spin_two_body(ints, p, q, q, p);
      }
    }
    return e;
  }

  const std::vector<int> holes = occupied_list(only1);
  const std::vector<int> parts = occupied_list(only2);
  // Align d2 with d1 slot by slot: d2 = sign * (d1 with holes replaced by
  // particles in the same positions).
  std::uint16_t bits = d1.bits;
  int sign = 1;
  for (std::size_t k = 0; k < holes.size(); ++k) {
    annihilate(bits, holes[k], sign);
    create(bits, parts[k], sign);
  }

  if (diff == 1) {
    const int m = holes[0], p = parts[0];
    double e = spin_one_body(ints, m, p);
    for (int n : occ1) {
      if (n != m) {
        e += spin_two_body(ints, m, p, n, n) - spin_two_body(ints, m, n, n, p);
      }
    }
    return sign * e;
  }

  const int m = holes[0], n = holes[1], p = parts[0], q = parts[1];
  return sign * (spin_two_body(ints, m, p, n, q) - spin_two_body(ints, m, q, n, p));
}

Eigen::MatrixXd hamiltonian_matrix(const std::vector<Determinant> &space,
                                   const IntegralSet &ints) {
  const auto n = static_cast<Eigen::Index>(space.size());
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      h(i, j) = slater_condon_H(space[static_cast<std::size_t>(i)],
                                space[static_cast<std::size_t>(j)], ints);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

std::vector<std::pair<cplx, Determinant>> apply_one_body(OperatorTag tag, const Determinant &d) {
  std::map<std::uint16_t, cplx> acc;
  if (tag == OperatorTag::parity) {
    int sign = 1;
    for (int p : occupied_list(d.bits)) {
      sign *= parity(orbital_of(p));
    }
    acc[d.bits] = static_cast<double>(sign);
  } else {
    const OneBody m = one_body_matrix(tag);
    for (int p : occupied_list(d.bits)) {
      for (int q = 0; q < spin_orbital_count; ++q) {
        const cplx v = m[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)];
        if (v == cplx{}) {
          continue;
        }
        std::uint16_t bits = d.bits;
        int sign = 1;
        annihilate(bits, p, sign);
        if (create(bits, q, sign)) {
          acc[bits] += static_cast<double>(sign) * v;
        }
      }
    }
  }
  std::vector<std::pair<cplx, Determinant>> out;
  for (const auto &[bits, v] : acc) {
    if (v != cplx{}) {
      out.push_back({v, Determinant{bits}});
    }
  }
  return out;
}

OperatorMatrix build_operator(OperatorTag tag, int electrons) {
  const std::vector<Determinant> space = enumerate_space(electrons);
  const auto n = static_cast<Eigen::Index>(space.size());
  std::map<std::uint16_t, Eigen::Index> position;
  for (Eigen::Index i = 0; i < n; ++i) {
    position[space[static_cast<std::size_t>(i)].bits] = i;
  }
  auto lifted = [&](OperatorTag t) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      for (const auto &[v, det] : apply_one_body(t, space[static_cast<std::size_t>(j)])) {
        // L, S and parity preserve the 1s^2 core and the electron count.
        m(position.at(det.bits), j) += v;
      }
    }
    return m;
  };

  switch (tag) {
  case OperatorTag::H:
    throw std::invalid_argument("use hamiltonian_matrix for H");
  case OperatorTag::L_squared: {
    const Eigen::MatrixXcd a = lifted(OperatorTag::L1), b = lifted(OperatorTag::L2),
                           c = lifted(OperatorTag::L3);
    return {tag, a * a + b * b + c * c};
  }
  case OperatorTag::S_squared: {
    const Eigen::MatrixXcd a = lifted(OperatorTag::S1), b = lifted(OperatorTag::S2),
                           c = lifted(OperatorTag::S3);
    return {tag, a * a + b * b + c * c};
  }
  default:
    return {tag, lifted(tag)};
  }
}

Eigen::VectorXd basis_vector(const std::vector<Determinant> &space, const BasisState &state) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.size()));
  for (const BasisTerm &t : state.terms) {
    const SignedDeterminant sd = parse_determinant(t.determinant);
    const auto it = std::find(space.begin(), space.end(), sd.det);
    if (it == space.end()) {
      throw std::invalid_argument("determinant '" + t.determinant + "' is not in the space");
    }
    v(it - space.begin()) += t.weight * sd.sign;
  }
  return v;
}

std::vector<SpectrumLevel> labeled_spectrum(int electrons, const IntegralSet &ints) {
  const std::vector<Determinant> space = enumerate_space(electrons);
  const Eigen::MatrixXd h = hamiltonian_matrix(space, ints);
  const Eigen::MatrixXd l2 = build_operator(OperatorTag::L_squared, electrons).matrix.real();
  const Eigen::MatrixXd s2 = build_operator(OperatorTag::S_squared, electrons).matrix.real();
  const Eigen::MatrixXd par = build_operator(OperatorTag::parity, electrons).matrix.real();

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  const Eigen::VectorXd &evals = solver.eigenvalues();
  const Eigen::MatrixXd &evecs = solver.eigenvectors();
  const Eigen::Index n = evals.size();

  // Generic weights so that distinct (L, S, parity) give distinct values.
  constexpr double alpha = 0.3183098861837907;
  constexpr double beta = 0.0727;
  const Eigen::MatrixXd mix = l2 + alpha * s2 + beta * par;

  std::vector<SpectrumLevel> out;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n &&
           evals(end) - evals(end - 1) <= 1e-8 * std::max(1.0, std::abs(evals(end)))) {
      ++end;
    }
    const Eigen::Index k = end - start;
    const Eigen::MatrixXd v = evecs.middleCols(start, k);
    const double energy = evals.segment(start, k).mean();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> inner(v.transpose() * mix * v);

    std::map<SymmetryLabel, int> counts;
    for (Eigen::Index c = 0; c < k; ++c) {
      const Eigen::VectorXd u = v * inner.eigenvectors().col(c);
      const double l2v = u.dot(l2 * u), s2v = u.dot(s2 * u), pv = u.dot(par * u);
      const int L = static_cast<int>(std::lround((std::sqrt(1.0 + 4.0 * l2v) - 1.0) / 2.0));
      const int two_S = static_cast<int>(std::lround(std::sqrt(1.0 + 4.0 * s2v) - 1.0));
      const int p = pv < 0.0 ? -1 : 1;
      const double S = two_S / 2.0;
      if (std::abs(L * (L + 1) - l2v) > 1e-6 || std::abs(S * (S + 1) - s2v) > 1e-6 ||
          std::abs(p - pv) > 1e-6) {
        std::ostringstream msg;
        msg << "eigenvector at E = " << energy << " has <L^2> = " << l2v << ", <S^2> = " << s2v
            << ", <P> = " << pv;
        throw ConsistencyError(msg.str());
      }
      ++counts[SymmetryLabel{L, two_S, p}];
    }
    for (const auto &[label, count] : counts) {
      if (count % label.degeneracy() != 0) {
        throw ConsistencyError("eigenspace " + label.ascii() + " at E = " +
                               std::to_string(energy) + " has dimension " +
                               std::to_string(count) + ", expected a multiple of " +
                               std::to_string(label.degeneracy()));
      }
      for (int rep = 0; rep < count / label.degeneracy(); ++rep) {
        out.push_back({label, energy, label.degeneracy()});
      }
    }
    start = end;
  }
  return out;
}

} // namespace minci
