#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pauli/pauli_sum.hpp"

namespace pauli {

/// Parsed Hamiltonian text before it is bound to a capacity tier.
struct RawHamiltonian {
  std::size_t num_qubits = 0;  // 0 when the file holds no terms
  std::vector<LabeledTerm> terms;
};

/// Reads `<re> <im> <label>` lines. '#' starts a comment; blank lines are
/// skipped. All labels must have the same length. Errors name the line.
RawHamiltonian parse_hamiltonian(std::istream& is);
RawHamiltonian read_hamiltonian_file(const std::filesystem::path& path);

/// Shortest-exact text form (17 significant digits).
std::string format_coefficient(double v);

void write_terms(std::ostream& os, std::span<const LabeledTerm> terms);
void write_terms_file(const std::filesystem::path& path, std::span<const LabeledTerm> terms);

/// Term phases are folded into the coefficients.
template <std::size_t W>
std::vector<LabeledTerm> to_labeled_terms(const PauliSum<W>& s) {
  std::vector<LabeledTerm> out;
  out.reserve(s.size());
  for (const auto& t : s) out.push_back({times_phase(t.coeff, t.string.phase()), t.string.label()});
  return out;
}

template <std::size_t W>
PauliSum<W> to_sum(const RawHamiltonian& h) {
  if (h.num_qubits == 0) throw DimensionError("Hamiltonian has no terms");
  return PauliSum<W>::from_labels(h.terms, h.num_qubits);
}

template <std::size_t W>
PauliSum<W> read_hamiltonian(const std::filesystem::path& path) {
  return to_sum<W>(read_hamiltonian_file(path));
}

template <std::size_t W>
void write_hamiltonian(const std::filesystem::path& path, const PauliSum<W>& s) {
  write_terms_file(path, to_labeled_terms(s));
}

}  // namespace pauli
