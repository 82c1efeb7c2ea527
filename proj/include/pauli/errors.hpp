#pragma once

#include <stdexcept>
#include <string>

namespace pauli {

// Malformed label, Hamiltonian line, or CSV record.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands with different qubit counts, or ragged label lists.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Qubit count above the largest tier (or above the tier in use).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Gate target outside [0, n) or a two-qubit gate with a repeated target.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ValueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pauli
