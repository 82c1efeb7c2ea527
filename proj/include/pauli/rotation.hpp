#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>

#include "pauli/pauli_sum.hpp"
#include "pauli/pauli_sum_soa.hpp"

namespace pauli {

/// U_P(angle) = exp(-i angle/2 P) with a phase-free generator P.
template <std::size_t W>
struct RotationSpec {
  PauliString<W> generator;
  double angle = 0.0;

  bool operator==(const RotationSpec&) const = default;
};

/// (cos a, sin a), exact at integer multiples of pi/2 so that Pauli-gate and
/// Clifford rotations produce no spurious tiny terms.
inline std::pair<double, double> rotation_cos_sin(double angle) {
  constexpr double quarter = std::numbers::pi / 2;
  const double m = std::nearbyint(angle / quarter);
  if (std::abs(m) < 1e15 && m * quarter == angle) {
    switch (static_cast<long long>(std::fmod(m, 4.0) + 4.0) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return {std::cos(angle), std::sin(angle)};
}

namespace detail {

template <std::size_t W>
void check_generator(const RotationSpec<W>& r, std::size_t n) {
  require_same_size(r.generator.num_qubits(), n);
  if (r.generator.phase() != Phase::one()) throw ValueError("rotation generator must be phase-free");
}

// Appends the image of c * Q under U_P. Output strings are phase-free.
template <std::size_t W, class Sink>
void rotate_term(const PauliString<W>& generator, double cos_a, double sin_a, Complex c,
                 PauliString<W> q, Sink&& emit) {
  c = times_phase(c, q.phase());
  q.set_phase(Phase::one());
  if (commutes(generator, q)) {
    emit(c, q);
    return;
  }
  // U Q U^dagger = cos(a) Q - i sin(a) P Q
  if (cos_a != 0.0) emit(c * cos_a, q);
  if (sin_a != 0.0) {
    PauliString<W> pq = multiply(generator, q);
    const Phase k = pq.phase() + Phase::minus_i();
    pq.set_phase(Phase::one());
    emit(times_phase(c * sin_a, k), pq);
  }
}

}  // namespace detail

/// Conjugation by U_P(angle) before canonicalization: commuting terms pass
/// through, anti-commuting terms split into at most two. At most 2|s| terms.
template <std::size_t W>
PauliSum<W> expand_rotation(const PauliSum<W>& s, const RotationSpec<W>& r) {
  detail::check_generator(r, s.num_qubits());
  const auto [cos_a, sin_a] = rotation_cos_sin(r.angle);
  std::vector<PauliTerm<W>> out;
  out.reserve(2 * s.size());
  for (const auto& t : s) {
    detail::rotate_term(r.generator, cos_a, sin_a, t.coeff, t.string,
                        [&](Complex c, const PauliString<W>& p) { out.push_back({c, p}); });
  }
  return PauliSum<W>(s.num_qubits(), std::move(out));
}

template <std::size_t W>
PauliSumSoA<W> expand_rotation(const PauliSumSoA<W>& s, const RotationSpec<W>& r) {
  detail::check_generator(r, s.num_qubits());
  const auto [cos_a, sin_a] = rotation_cos_sin(r.angle);
  PauliSumSoA<W> out(s.num_qubits());
  out.reserve(2 * s.size());
  for (std::size_t t = 0; t < s.size(); ++t) {
    detail::rotate_term(r.generator, cos_a, sin_a, s.coeffs()[t], s.string_at(t),
                        [&](Complex c, const PauliString<W>& p) { out.push_back({c, p}); });
  }
  return out;
}

/// U_P(angle) s U_P(angle)^dagger in canonical form.
template <std::size_t W>
PauliSum<W> apply_rotation(const PauliSum<W>& s, const RotationSpec<W>& r, double eps = 0.0) {
  return sort_and_combine(expand_rotation(s, r), eps);
}

template <std::size_t W>
PauliSumSoA<W> apply_rotation(const PauliSumSoA<W>& s, const RotationSpec<W>& r, double eps = 0.0) {
  return sort_and_combine(expand_rotation(s, r), eps);
}

/// Moves a Clifford rotation U_P(pi/2) in front of `rotation`:
///   U_{P'}(a) U_P(pi/2) = U_P(pi/2) U_{G}(a')
/// where G = iPP' up to sign. A -1 from iPP' is absorbed by negating the
/// angle, so the returned generator is always phase-free.
template <std::size_t W>
RotationSpec<W> reorder_rotation(const RotationSpec<W>& rotation, const PauliString<W>& clifford) {
  detail::require_same_size(rotation.generator.num_qubits(), clifford.num_qubits());
  if (clifford.phase() != Phase::one()) throw ValueError("Clifford generator must be phase-free");
  detail::check_generator(rotation, clifford.num_qubits());
  if (commutes(clifford, rotation.generator)) return rotation;

  PauliString<W> g = multiply(clifford, rotation.generator);
  const Phase k = g.phase() + Phase::i();
  // Anti-commuting Hermitian factors make iPP' Hermitian, so k is 0 or 2.
  g.set_phase(Phase::one());
  return {g, k == Phase::minus_one() ? -rotation.angle : rotation.angle};
}

}  // namespace pauli
