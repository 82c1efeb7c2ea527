#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "pauli/pauli_sum.hpp"

namespace pauli {

/// Seeded instance generator on top of std::mt19937_64, whose output
/// sequence is fixed by the standard. Draw order for a term: one 64-bit draw
/// per qubit, qubit 0 first, then one draw for the coefficient.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Top two bits select I, X, Y, Z with equal probability.
  Letter letter() {
    static constexpr Letter kLetters[4] = {Letter::I, Letter::X, Letter::Y, Letter::Z};
    return kLetters[next() >> 62];
  }

  /// Uniform in [-1, 1) from the top 53 bits.
  double symmetric_unit() {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform letters on every qubit, phase 0.
template <std::size_t W>
PauliString<W> random_string(std::size_t n, InstanceRng& rng) {
  PauliString<W> p(n);
  for (std::size_t q = 0; q < n; ++q) p.set_letter(q, rng.letter());
  return p;
}

/// M random strings with real coefficients uniform in [-1, 1). Duplicates
/// are kept.
template <std::size_t W>
PauliSum<W> random_sum(std::size_t n, std::size_t m, InstanceRng& rng) {
  PauliSum<W> s(n);
  s.reserve(m);
  for (std::size_t t = 0; t < m; ++t) {
    PauliString<W> p = random_string<W>(n, rng);
    s.push_back({Complex{rng.symmetric_unit(), 0.0}, p});
  }
  return s;
}

template <std::size_t W>
PauliSum<W> random_sum(std::size_t n, std::size_t m, std::uint64_t seed) {
  InstanceRng rng(seed);
  return random_sum<W>(n, m, rng);
}

}  // namespace pauli
