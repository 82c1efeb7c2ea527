#pragma once

// Serial letter-by-letter kernels. They share no arithmetic with the
// bit-parallel paths and exist to check them and to benchmark against.

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "pauli/grouping.hpp"
#include "pauli/pauli_sum.hpp"

namespace pauli::reference {

/// Single-qubit product a * b = i^k * c.
inline std::pair<Letter, Phase> letter_product(Letter a, Letter b) {
  using L = Letter;
  if (a == L::I) return {b, Phase::one()};
  if (b == L::I) return {a, Phase::one()};
  if (a == b) return {L::I, Phase::one()};
  // ZX = iY, YZ = iX, XY = iZ and the reversed orders with -i.
  if (a == L::Z && b == L::X) return {L::Y, Phase::i()};
  if (a == L::Y && b == L::Z) return {L::X, Phase::i()};
  if (a == L::X && b == L::Y) return {L::Z, Phase::i()};
  if (a == L::X && b == L::Z) return {L::Y, Phase::minus_i()};
  if (a == L::Z && b == L::Y) return {L::X, Phase::minus_i()};
  return {L::Z, Phase::minus_i()};  // YX
}

template <std::size_t W>
PauliString<W> multiply(const PauliString<W>& a, const PauliString<W>& b) {
  detail::require_same_size(a.num_qubits(), b.num_qubits());
  PauliString<W> r(a.num_qubits());
  Phase k = a.phase() + b.phase();
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    const auto [letter, phase] = letter_product(a.letter(q), b.letter(q));
    r.set_letter(q, letter);
    k += phase;
  }
  r.set_phase(k);
  return r;
}

/// Even number of positions holding distinct non-identity letters.
template <std::size_t W>
bool commutes(const PauliString<W>& a, const PauliString<W>& b) {
  detail::require_same_size(a.num_qubits(), b.num_qubits());
  std::size_t clashes = 0;
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    const Letter la = a.letter(q), lb = b.letter(q);
    if (la != Letter::I && lb != Letter::I && la != lb) ++clashes;
  }
  return clashes % 2 == 0;
}

template <std::size_t W>
PauliSum<W> outer_product(const PauliSum<W>& a, const PauliSum<W>& b) {
  detail::require_same_size(a.num_qubits(), b.num_qubits());
  std::vector<PauliTerm<W>> out;
  out.reserve(a.size() * b.size());
  for (const auto& right : b) {
    for (const auto& left : a) {
      out.push_back({cmul(left.coeff, right.coeff), reference::multiply(left.string, right.string)});
    }
  }
  return PauliSum<W>(a.num_qubits(), std::move(out));
}

template <std::size_t W>
CommutationPartition group_greedy(const PauliSum<W>& s) {
  CommutationPartition out;
  out.source_size = s.size();
  for (std::size_t t = 0; t < s.size(); ++t) {
    bool placed = false;
    for (auto& g : out.groups) {
      bool ok = true;
      for (std::uint32_t member : g) {
        if (!reference::commutes(s[t].string, s[member].string)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g.push_back(static_cast<std::uint32_t>(t));
        placed = true;
        break;
      }
    }
    if (!placed) out.groups.push_back({static_cast<std::uint32_t>(t)});
  }
  return out;
}

}  // namespace pauli::reference
