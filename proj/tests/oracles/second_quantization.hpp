#pragma once

// Hamiltonian built from creation and annihilation operators acting on
// occupation bit strings, without Slater-Condon rules:
//   H = sum_pq h_pq a+_p a_q + 1/2 sum_pqrs [pq|rs] a+_p a+_r a_s a_q

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "minci/determinant.hpp"

namespace oracle {

struct Ket {
  int sign = 1;
  std::uint16_t bits = 0;
};

inline std::optional<Ket> lower(Ket k, int p) {
  if (!((k.bits >> p) & 1U)) {
    return std::nullopt;
  }
  if (std::popcount(static_cast<unsigned>(k.bits & ((1U << p) - 1U))) & 1) {
    k.sign = -k.sign;
  }
  k.bits = static_cast<std::uint16_t>(k.bits ^ (1U << p));
  return k;
}

inline std::optional<Ket> raise(Ket k, int p) {
  if ((k.bits >> p) & 1U) {
    return std::nullopt;
  }
  if (std::popcount(static_cast<unsigned>(k.bits & ((1U << p) - 1U))) & 1) {
    k.sign = -k.sign;
  }
  k.bits = static_cast<std::uint16_t>(k.bits | (1U << p));
  return k;
}

inline minci::Orbital orbital(int p) { return minci::orbital_from_index(p / 2 + 1); }

inline Eigen::MatrixXd second_quantized_hamiltonian(const std::vector<minci::Determinant> &space,
                                                    const minci::IntegralSet &ints) {
  const int m = minci::spin_orbital_count;
  std::map<std::uint16_t, Eigen::Index> where;
  for (std::size_t i = 0; i < space.size(); ++i) {
    where[space[i].bits] = static_cast<Eigen::Index>(i);
  }
  const auto n = static_cast<Eigen::Index>(space.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    const Ket start{1, space[static_cast<std::size_t>(col)].bits};
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        if (p % 2 != q % 2) {
          continue;
        }
        auto k = lower(start, q);
        if (k) {
          k = raise(*k, p);
        }
        if (k && where.count(k->bits)) {
          h(where.at(k->bits), col) += k->sign * ints.one_body(orbital(p), orbital(q));
        }
      }
    }
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        for (int r = 0; r < m; ++r) {
          for (int s = 0; s < m; ++s) {
            if (p % 2 != q % 2 || r % 2 != s % 2) {
              continue;
            }
            auto k = lower(start, q);
            if (k) {
              k = lower(*k, s);
            }
            if (k) {
              k = raise(*k, r);
            }
            if (k) {
              k = raise(*k, p);
            }
            // terms leaving the 1s^2 core fall outside the space
            if (k && where.count(k->bits)) {
              h(where.at(k->bits), col) +=
                  0.5 * k->sign * ints.two_body(orbital(p), orbital(q), orbital(r), orbital(s));
            }
          }
        }
      }
    }
  }
  return h;
}

} // namespace oracle
