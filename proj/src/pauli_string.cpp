#include "pauli/pauli_string.hpp"

namespace pauli {

char to_char(Letter l) {
  switch (l) {
    case Letter::I: return 'I';
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
  }
  return '?';
}

Letter letter_from_char(char c, std::size_t position) {
  switch (c) {
    case 'I': return Letter::I;
    case 'X': return Letter::X;
    case 'Y': return Letter::Y;
    case 'Z': return Letter::Z;
    default:
      throw ParseError("invalid Pauli letter '" + std::string(1, c) + "' at position " +
                       std::to_string(position));
  }
}

std::string_view gate_name(Gate g) {
  switch (g) {
    case Gate::H: return "H";
    case Gate::S: return "S";
    case Gate::CNOT: return "CNOT";
    case Gate::CZ: return "CZ";
  }
  return "?";
}

void validate(const CliffordOp& op, std::size_t n) {
  if (op.a >= n) {
    throw IndexError(std::string(gate_name(op.gate)) + ": qubit " + std::to_string(op.a) +
                     " out of range for " + std::to_string(n) + " qubits");
  }
  if (is_two_qubit(op.gate)) {
    if (op.b >= n) {
      throw IndexError(std::string(gate_name(op.gate)) + ": qubit " + std::to_string(op.b) +
                       " out of range for " + std::to_string(n) + " qubits");
    }
    if (op.a == op.b) {
      throw IndexError(std::string(gate_name(op.gate)) + ": control and target both " +
                       std::to_string(op.a));
    }
  }
}

}  // namespace pauli
