#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "pauli/errors.hpp"

namespace pauli {

/// Qubit capacities with a compiled instantiation. Each tier uses
/// capacity / 64 words per bit vector.
inline constexpr std::array<std::size_t, 5> kTierCapacities{64, 128, 256, 512, 1024};
inline constexpr std::size_t kMaxQubits = kTierCapacities.back();

/// Smallest tier capacity that holds n qubits.
inline std::size_t tier_for(std::size_t n) {
  if (n == 0) throw CapacityError("qubit count must be positive");
  for (std::size_t cap : kTierCapacities) {
    if (n <= cap) return cap;
  }
  throw CapacityError(std::to_string(n) + " qubits exceed the largest tier (" +
                      std::to_string(kMaxQubits) + ")");
}

/// Calls f.template operator()<Words>() for the tier selected by n.
template <class F>
decltype(auto) dispatch_tier(std::size_t n, F&& f) {
  switch (tier_for(n)) {
    case 64: return std::forward<F>(f).template operator()<1>();
    case 128: return std::forward<F>(f).template operator()<2>();
    case 256: return std::forward<F>(f).template operator()<4>();
    case 512: return std::forward<F>(f).template operator()<8>();
    default: return std::forward<F>(f).template operator()<16>();
  }
}

}  // namespace pauli
