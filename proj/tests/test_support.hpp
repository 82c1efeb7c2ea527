#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pauli/pauli_sum.hpp"

namespace testing_support {

inline std::string random_label(std::mt19937_64& rng, std::size_t n) {
  static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  std::string s(n, 'I');
  for (auto& c : s) c = kLetters[rng() & 3u];
  return s;
}

template <std::size_t W>
pauli::PauliString<W> random_pauli(std::mt19937_64& rng, std::size_t n, bool with_phase = false) {
  return pauli::PauliString<W>::from_label(random_label(rng, n),
                                           pauli::Phase(with_phase ? static_cast<unsigned>(rng() & 3u) : 0u));
}

/// Random complex coefficients in [-1, 1]^2.
template <std::size_t W>
pauli::PauliSum<W> random_complex_sum(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                      bool with_phase = false) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  pauli::PauliSum<W> s(n);
  for (std::size_t t = 0; t < m; ++t) {
    s.push_back({pauli::Complex{u(rng), u(rng)}, random_pauli<W>(rng, n, with_phase)});
  }
  return s;
}

}  // namespace testing_support
